// lambda2 along the S5(2,k,2,1,1) line, k = 15..20
#include <cstdio>

#include <ul2/ul2.hpp>

int main() {
    double t = ul2::threshold();
    for (int k = 15; k <= 20; ++k) {
        ul2::Graph g = ul2::star_composition(5, {2, k, 2, 1, 1});
        double l2 = ul2::lambda2(g);
        std::printf("S5(2,%d,2,1,1)  n=%d  lambda2=%.6f  %s\n", k, g.order(), l2, l2 >= t ? "above" : "below");
    }
}
