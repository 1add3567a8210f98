// Searches the even-weight subcode of the [23,12,7] Golay code for a seed
// codeword whose circulant check matrices reproduce the published DS-code
// distances d(r) = 3,4,4,4,5,5,5,6,6,7 for r = 0..9.
//
// The candidate set is every nonzero codeword of the [23,11,8] dual code,
// generated by (1+x) g(x) with g(x) = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "qds/code.hpp"
#include "qds/enumerators.hpp"

int main() {
    const int n = 23;
    const int target[10] = {3, 4, 4, 4, 5, 5, 5, 6, 6, 7};

    // generator polynomial of the dual code: (1 + x) * g(x)
    std::uint64_t g = (1ull << 11) | (1ull << 10) | (1ull << 6) | (1ull << 5) | (1ull << 4) |
                      (1ull << 2) | 1ull;
    std::uint64_t gen = g ^ (g << 1);  // times (1 + x)

    for (std::uint64_t msg = 1; msg < (1ull << 11); ++msg) {
        // codeword = msg(x) * gen(x) mod (x^23 - 1); deg(msg) <= 10, deg(gen) = 12
        std::uint64_t cw = 0;
        for (int b = 0; b < 11; ++b)
            if ((msg >> b) & 1) cw ^= gen << b;
        cw &= (1ull << n) - 1;  // degree < 23, no reduction needed

        bool ok = true;
        for (int r = 0; r < 10 && ok; ++r) {
            auto rows = qds::css_cyclic_hprime(qds::BitVec(n, cw), 11 + r);
            if (qds::css_distance_scan(rows, n) != target[r]) ok = false;
        }
        if (ok) {
            std::string s;
            for (int b = 0; b < n; ++b) s += ((cw >> b) & 1) ? '1' : '0';
            std::printf("seed %s\n", s.c_str());
            return 0;
        }
        if (msg % 64 == 0) {
            std::fprintf(stderr, "checked %llu\n", static_cast<unsigned long long>(msg));
        }
    }
    std::fprintf(stderr, "no seed found\n");
    return 1;
}
