#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace apolar;
using namespace testing_support;

namespace {
const MultiPoly x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);

Hypersurface random_smooth(std::size_t n, unsigned d) {
    for (;;) {
        const Hypersurface h(random_form(n, d, 0.7, 4));
        if (is_smooth(h)) return h;
    }
}
}  // namespace

TEST_CASE("shifted Fermat cubic") {
    const Hypersurface g((x + y).pow(3) + y.pow(3) + z.pow(3));
    const auto jac = jacobian_ideal(g);
    REQUIRE(jac.size() == 3);
    CHECK(jac[0] == (x + y).pow(2).scaled(Scalar(3L)));
    CHECK(jac[1] == (x + y).pow(2).scaled(Scalar(3L)) + y.pow(2).scaled(Scalar(3L)));
    CHECK(jac[2] == z.pow(2).scaled(Scalar(3L)));
    CHECK(hessian(g).to_string() == "216*x*y*z + 216*y^2*z");
    CHECK(macaulay(g).to_string() == "x^2*z - x*y*z");
    CHECK(jacobian_hilbert(g).to_string() == "1 3 3 1 0");
    CHECK(is_smooth(g));
    CHECK(g.socle_degree() == 3);

    const auto a = LinearChange::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    const LinearChange w = a.transposed() * a;
    CHECK(verify_equivalence_witness(macaulay(g), hessian(g), w));
    CHECK(hess_mac_compare(g).verdict == Verdict::NotEqual);
    const auto cmp = hess_mac_compare(g, w);
    CHECK(cmp.verdict == Verdict::ProjectivelyEquivalent);
    CHECK(cmp.witness.has_value());
    CHECK(hess_mac_compare(g, LinearChange::identity(3)).verdict == Verdict::NotEqual);
}

TEST_CASE("Fermat hypersurfaces") {
    const std::vector<std::pair<std::size_t, unsigned>> cases{{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 3}, {1, 5}, {2, 5}};
    for (const auto& [n, d] : cases) {
        const Hypersurface f = fermat(n, d);
        Exponent e(n + 1, d - 2);
        const MultiPoly prod = MultiPoly::monomial(e, Scalar(1L));
        const MultiPoly hess = hessian(f);
        CHECK(equal_up_to_scalar(hess, prod));
        CHECK(equal_up_to_scalar(macaulay(f), prod));
        CHECK(hess.leading_coefficient() == Scalar(Rational(apolar::pow(Rational(d * (d - 1)), n + 1))));
        CHECK(hess_mac_compare(f).verdict == Verdict::Equal);
        // Jacobian ring of a Fermat form: coefficients of prod (1 + t + ... + t^(d-2))
        const HilbertFunction jh = jacobian_hilbert(f).trimmed();
        CHECK(jh.is_symmetric());
        CHECK(jh.size() == f.socle_degree() + 1);
    }
}

TEST_CASE("Hessian is covariant, Macaulay contravariant") {
    for (int trial = 0; trial < 25; ++trial) {
        const bool binary = trial % 3 == 0;
        const Hypersurface g = binary ? random_smooth(2, 4) : random_smooth(3, 3);
        const LinearChange a = random_invertible(g.num_vars());
        const Hypersurface ga(substitute_linear(g.polynomial(), a));
        // Hess(g(Ax)) = det(A)^2 Hess(g)(Ax)
        const MultiPoly lhs = hessian(ga);
        const MultiPoly rhs = substitute_linear(hessian(g), a);
        CHECK(lhs == rhs.scaled(a.det() * a.det()));
        CHECK(equal_up_to_scalar(macaulay(ga), substitute_linear(macaulay(g), a.contragredient())));
    }
}

TEST_CASE("Jacobian ring of a smooth form is Gorenstein") {
    for (int trial = 0; trial < 8; ++trial) {
        const Hypersurface g = random_smooth(3, 3);
        const auto h = jacobian_hilbert(g);
        CHECK(h(g.socle_degree()) == 1);
        CHECK(h(g.socle_degree() + 1) == 0);
        CHECK(h.trimmed().is_symmetric());
        // Mac(g)-perp agrees with J(g) in every degree
        CHECK(apolar_hilbert(macaulay(g)) == h.truncated(g.socle_degree() + 1));
        const MultiPoly mac = macaulay(g);
        for (const auto& p : jacobian_ideal(g)) CHECK(contract(p, mac).is_zero());
    }
}

TEST_CASE("Hasse pencil parameters of Hessian and Macaulay") {
    int done = 0;
    while (done < 10) {
        const Rational q = random_nonzero_rational(7, 5);
        if (q == 1) continue;
        const Scalar a(q);
        const Hypersurface f = hasse_cubic(a);
        CHECK(equal_up_to_scalar(hessian(f), hasse_polynomial(hasse_hessian_param(a))));
        CHECK(equal_up_to_scalar(macaulay(f), hasse_polynomial(hasse_macaulay_param(a))));
        ++done;
    }
    CHECK(equal_up_to_scalar(hessian(hasse_cubic(Scalar(0L))), x * y * z));
    CHECK_THROWS_AS(hasse_cubic(Scalar(1L)), ExcludedParameter);
}

TEST_CASE("Klein forms") {
    const MultiPoly klein_mac = x * y.pow(5) + x.pow(5) * z - (x * x * y * y * z * z).scaled(Scalar(5L)) + y * z.pow(5);
    const Hypersurface k = klein_quartic();
    CHECK(equal_up_to_scalar(hessian(k), klein_mac));
    CHECK(equal_up_to_scalar(macaulay(k), klein_mac));
    CHECK(hess_mac_compare(k).verdict == Verdict::Equal);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(Hypersurface(x + y), DegreeTooLow);
    CHECK_THROWS_AS(Hypersurface(x * x + y), NotHomogeneous);
    CHECK_THROWS_AS(Hypersurface(MultiPoly(3)), ZeroPolynomial);
    const Hypersurface cusp(y * y * z - x.pow(3));
    CHECK_FALSE(is_smooth(cusp));
    CHECK_THROWS_AS(macaulay(cusp), NotSmooth);
    CHECK_THROWS_AS(jacobian_slice(cusp, 1), DegreeTooLow);
    CHECK_THROWS_AS(jacobian_hilbert(fermat(3, 6)), SizeLimitExceeded);
    CHECK_NOTHROW(jacobian_hilbert(fermat(1, 4), Limits{20}));
    // quadrics: socle degree 0, Mac is a constant
    const Hypersurface q(x * x + y * y + z * z);
    CHECK(macaulay(q).degree() == 0);
    CHECK(hessian(q).to_string() == "8");
}
