#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace apolar;
using namespace testing_support;

namespace {

const UniPoly t = UniPoly::variable();

MultiPoly from_points(const std::vector<ProjPointP1>& pts) {
    const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    MultiPoly q = MultiPoly::constant(2, Scalar(1L));
    for (const auto& p : pts) q *= y.scaled(p.u()) - x.scaled(p.v());  // vanishes at (u : v)
    return q;
}

std::vector<ProjPointP1> random_distinct_points() {
    for (;;) {
        std::vector<ProjPointP1> pts;
        for (int i = 0; i < 4; ++i) {
            if (uniform(0, 5) == 0) pts.push_back(ProjPointP1::infinity());
            else pts.push_back(ProjPointP1::affine(Scalar(random_rational(9, 3))));
        }
        bool distinct = true;
        for (int i = 0; i < 4; ++i)
            for (int k = i + 1; k < 4; ++k) distinct = distinct && !(pts[i] == pts[k]);
        if (distinct) return pts;
    }
}

// Excludes the family's own poles and the members with singular H and M.
Rational random_admissible_binary() {
    for (;;) {
        const Rational a = random_nonzero_rational(9, 4);
        if (a != -1 && a != 1 && a != -2 && a != Rational(-1, 2)) return a;
    }
}

}  // namespace

TEST_CASE("j of a quartic agrees with the cross-ratio formula") {
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = random_distinct_points();
        const Scalar jc = j_from_cross_ratio(cross_ratio(pts[0], pts[1], pts[2], pts[3]));
        CHECK(j_binary_quartic(from_points(pts).scaled(Scalar(random_nonzero_rational()))) == jc);
    }
}

TEST_CASE("j is symmetric in the four points") {
    for (int trial = 0; trial < 10; ++trial) {
        auto pts = random_distinct_points();
        const Scalar j0 = j_from_cross_ratio(cross_ratio(pts[0], pts[1], pts[2], pts[3]));
        std::vector<int> idx{0, 1, 2, 3};
        do {
            CHECK(j_from_cross_ratio(cross_ratio(pts[idx[0]], pts[idx[1]], pts[idx[2]], pts[idx[3]])) == j0);
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
}

TEST_CASE("j is a projective invariant") {
    for (int trial = 0; trial < 15; ++trial) {
        const MultiPoly q = from_points(random_distinct_points());
        const LinearChange a = random_invertible(2);
        CHECK(j_binary_quartic(substitute_linear(q, a)) == j_binary_quartic(q));
    }
}

TEST_CASE("cross-ratio special values and errors") {
    const auto p = binary_quartic_roots(Scalar(1L));  // 0, inf, 1, -1: harmonic
    CHECK(j_from_cross_ratio(cross_ratio(p[0], p[1], p[2], p[3])) == Scalar(1728L));
    CHECK(j_from_cross_ratio(Scalar(2L)) == Scalar(1728L));
    CHECK_THROWS_AS(j_from_cross_ratio(Scalar(1L)), DegenerateCrossRatio);
    CHECK_THROWS_AS(j_from_cross_ratio(Scalar(0L)), DegenerateCrossRatio);
    CHECK_THROWS_AS(cross_ratio(p[0], p[0], p[2], p[3]), CoincidentPoints);
    CHECK_THROWS_AS(ProjPointP1(Scalar(0L), Scalar(0L)), DomainError);
    CHECK(ProjPointP1(Scalar(2L), Scalar(4L)) == ProjPointP1::affine(Scalar(Rational(1, 2))));
    const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    CHECK_THROWS_AS(j_binary_quartic(x * x * y * (x - y)), SingularForm);
    CHECK_THROWS_AS(j_binary_quartic(x.pow(3)), DegreeMismatch);
    CHECK_THROWS_AS(binary_quartic(Scalar(-1L)), ExcludedParameter);
    CHECK_THROWS_AS(binary_H(Scalar(0L)), ExcludedParameter);
}

TEST_CASE("binary quartic closed forms") {
    for (int trial = 0; trial < 10; ++trial) {
        const Scalar a(random_admissible_binary());
        const Hypersurface f = binary_quartic(a);
        CHECK(equal_up_to_scalar(binary_H(a), hessian(f)));
        CHECK(equal_up_to_scalar(binary_M(a), macaulay(f)));
        CHECK(j_binary_quartic(hessian(f)) == Scalar(evaluate(j_binary_H_fn(), a.rational_value())));
        CHECK(j_binary_quartic(macaulay(f)) == Scalar(evaluate(j_binary_M_fn(), a.rational_value())));
        CHECK(j_binary_quartic(f.polynomial()) == Scalar(evaluate(j_binary_family_fn(), a.rational_value())));
    }
}

TEST_CASE("binary quartic j-functions in closed form") {
    const RationalFn a = RationalFn::variable();
    const RationalFn s = a * a + a + RationalFn(1L);
    const RationalFn one(1L), two(2L);
    const RationalFn jf = RationalFn(256L) * s * s * s / (a * a * (a + one) * (a + one));
    const RationalFn d = (a - one) * (a + two) * (two * a + one);
    CHECK(j_binary_family_fn() == jf);
    CHECK(j_binary_H_fn() == RationalFn(256L) * s * s * s * s * s * s / (a * a * (a + one) * (a + one) * d * d));
    CHECK(j_binary_M_fn() == RationalFn(6912L) * s * s * s / (d * d));
}

TEST_CASE("binary quartic classification") {
    const auto rep = classify_binary_quartics();
    CHECK(rep.total_multiplicity() == 12);
    CHECK(rep.multiplicity_with_family_j(0) == 6);
    CHECK(rep.multiplicity_with_family_j(6912) == 6);
    for (const auto& g : rep.groups) {
        CHECK(g.j_hessian == g.j_macaulay);
        if (g.j_family == t) CHECK(g.j_hessian == t);
        if (g.j_family == t - UniPoly(6912)) CHECK(g.j_hessian == t - UniPoly(2304));
    }
    CHECK(rep.class_count() == 3);
    CHECK(rep.class_j_values == t * (t - UniPoly(1728)) * (t - UniPoly(6912)));
    REQUIRE(rep.special_members.size() == 1);
    CHECK(rep.special_members[0].hessian_equals_macaulay);
    CHECK(rep.special_members[0].hessian_singular);
    // every root really satisfies j(H) = j(M) when checked through the polynomials
    const auto& sextic = rep.groups.front().factor;
    const auto field = NumberField::create(sextic, "a");
    const Scalar alpha = Scalar::generator(field);
    CHECK(j_binary_quartic(hessian(binary_quartic(alpha))) == j_binary_quartic(macaulay(binary_quartic(alpha))));
}

TEST_CASE("Hasse pencil classification") {
    const auto rep = classify_hasse_cubics();
    REQUIRE(rep.equality_roots.has_value());
    CHECK(rep.equality_roots->reconstruct() == pow(t, 3) - t * 6 - UniPoly(4));
    CHECK(rep.class_count() == 4);
    CHECK((rep.class_j_values % (t - UniPoly(64))).is_zero());
    CHECK((rep.class_j_values % t).is_zero());
    // the remaining two j-values are the computed conjugate pair
    CHECK(rep.class_j_values / (t * (t - UniPoly(64))) == t * t - t * 704 + UniPoly(262144));
    CHECK(rep.total_multiplicity() == rep.equation.degree());
}

TEST_CASE("Hessian equals Macaulay at a = -2, 1 +- sqrt 3") {
    const auto f = NumberField::quadratic(3);
    const Scalar r3 = Scalar::generator(f), one = Scalar::one(f);
    for (const Scalar& a : {Scalar::in(f, -2), one + r3, one - r3}) {
        CHECK(hasse_hessian_param(a) == hasse_macaulay_param(a));
        const Scalar a3 = a.pow(3);
        if (!a3.is_one()) {
            const Hypersurface h = hasse_cubic(a);
            CHECK(equal_up_to_scalar(hessian(h), macaulay(h)));
        }
    }
}

TEST_CASE("equianharmonic members and the exchange") {
    const auto sols = equianharmonic_hasse();
    REQUIRE(sols.size() == 4);
    CHECK(std::count(sols.begin(), sols.end(), Scalar(-2L)) == 1);
    CHECK(std::count(sols.begin(), sols.end(), Scalar(0L)) == 1);
    for (const auto& a : sols) CHECK(j_hasse(a).is_zero());
    const Scalar beta = sols[2], conj = sols[3];
    CHECK(beta.field()->minimal_polynomial() == t * t - t * 2 + UniPoly(4));
    CHECK(conj == Scalar::in(beta.field(), 2) - beta);
    const Hypersurface fb = hasse_cubic(beta), fc = hasse_cubic(conj);
    CHECK(equal_up_to_scalar(hessian(fb), macaulay(fc)));
    CHECK(equal_up_to_scalar(hessian(fc), macaulay(fb)));
    CHECK_FALSE(equal_up_to_scalar(hessian(fb), macaulay(fb)));
}

TEST_CASE("Caporali and Clebsh Hilbert functions") {
    const MultiPoly x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);
    const auto c1 = compare_hilbert_functions(caporali(x + y + z));
    CHECK(c1.jacobian.to_string() == "1 3 6 7 6 3 1");
    CHECK(c1.differing_degrees == std::vector<std::size_t>{3});
    CHECK(c1.hessian_perp(3) == 10);
    CHECK(compare_hilbert_functions(caporali(x + y.scaled(Scalar(2L)))).equal());
    CHECK(compare_hilbert_functions(fermat(2, 4)).equal());
    // any sample is well defined; record that both shapes are symmetric
    const auto cl = compare_hilbert_functions(clebsh(x + y + z, x - y.scaled(Scalar(2L)) + z.scaled(Scalar(3L))));
    CHECK(cl.jacobian.is_symmetric());
    CHECK(cl.hessian_perp.is_symmetric());
    CHECK_THROWS_AS(caporali(x * y), DegreeMismatch);
}
