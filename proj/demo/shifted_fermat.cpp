// g = (x+y)^3 + y^3 + z^3 is the Fermat cubic after x -> x + y. Its Hessian
// and Macaulay polynomial differ, but tA A carries one to the other.
#include <iostream>

#include "apolar/apolar.hpp"

using namespace apolar;

int main() {
    const auto a = LinearChange::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    const Hypersurface g(substitute_linear(fermat(2, 3).polynomial(), a));

    const MultiPoly hess = hessian(g);
    const MultiPoly mac = macaulay(g);
    std::cout << "g       = " << g.polynomial().to_string() << '\n'
              << "Hess(g) = " << hess.to_string() << '\n'
              << "Mac(g)  = " << mac.to_string() << '\n'
              << "R/J(g)  : " << jacobian_hilbert(g).to_string() << '\n';

    const auto cmp = hess_mac_compare(g, a.transposed() * a);
    std::cout << "Hess(g) vs Mac(g)(tA A X): " << to_string(cmp.verdict) << '\n';
    return cmp.verdict == Verdict::ProjectivelyEquivalent ? 0 : 1;
}
