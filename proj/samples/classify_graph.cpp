// read a graph ("n m" + edge lines) from stdin, or use a built-in example
#include <iostream>

#include <ul2/ul2.hpp>

int main(int argc, char** argv) {
    ul2::Graph g = argc > 1 && std::string(argv[1]) == "-"
                       ? ul2::read_graph(std::cin)
                       : ul2::make_family(ul2::parse_family_spec("H94:l0=9,l1=0,l2=2")).graph;
    try {
        ul2::Verdict v = ul2::classify(g);
        std::cout << ul2::to_json(v) << '\n';
    } catch (const ul2::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
}
