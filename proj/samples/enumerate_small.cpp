// class counts of unicyclic graphs per girth, n = 3..9
#include <cstdio>

#include <ul2/ul2.hpp>

int main() {
    for (int n = 3; n <= 9; ++n) {
        std::printf("n=%d:", n);
        long total = 0;
        for (int g = 3; g <= n; ++g) {
            ul2::UnicyclicEnumerator e(n, g);
            long c = 0;
            while (e.next_desc()) ++c;
            total += c;
            std::printf(" g%d=%ld", g, c);
        }
        std::printf("  total=%ld\n", total);
    }
}
