// Prints the multiplicities n(m,k,s) = [W_loc((m+2k) w, 0) : V(m w, s)] for
// sl2 and checks the resulting Weyl-flag character against ch_gr P(m w, 0).
//
//   sample_reciprocity [m] [D]

#include <cstdlib>
#include <iostream>

#include <weylchar/weylchar.hpp>

using namespace weylchar;

int main(int argc, char** argv) {
    const int m = argc > 1 ? std::atoi(argv[1]) : 1;
    const int degree = argc > 2 ? std::atoi(argv[2]) : 6;

    std::cout << "n(" << m << ",k,s) as series in u^s:\n";
    for (int k = 0; k <= degree; ++k) {
        const Series n = decompose(local_weyl_character(Weight{m + 2 * k}, 0)).at(Weight{m});
        std::cout << "  k=" << k << ": " << n << "\n";
        if (n.is_zero() || n.min_deg() > degree) break;
    }
    const VerificationReport r = verify_reciprocity(m, degree);
    std::cout << "\n" << r;
    return r.pass ? 0 : 1;
}
