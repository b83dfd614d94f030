#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace apolar;
using namespace testing_support;

namespace {
const MultiPoly x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);
}

TEST_CASE("contraction is differentiation") {
    const MultiPoly hess = (x * y * z).scaled(Scalar(216L)) + (y * y * z).scaled(Scalar(216L));
    CHECK(contract((x + y).pow(2).scaled(Scalar(3L)) * z, hess).to_string() == "2592");
    CHECK(contract(x, x.pow(3)) == x.pow(2).scaled(Scalar(3L)));
    CHECK(contract(x.pow(2), y.pow(2)).is_zero());
    CHECK(is_apolar(x * y, x.pow(2) + y.pow(2)));
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly h = random_form(3, static_cast<unsigned>(uniform(0, 3)));
        const MultiPoly f = random_form(3, static_cast<unsigned>(uniform(0, 4)));
        CHECK(contract(h, f) == differentiate_by(h, f));
    }
    CHECK_THROWS_AS(contract(x, MultiPoly::variable(2, 0)), ArityMismatch);
}

TEST_CASE("catalecticant shape") {
    const MultiPoly f = x.pow(2) * y;
    const auto c = catalecticant(f, 1);
    CHECK(c.rows() == 6);
    CHECK(c.cols() == 3);
    CHECK(rank(c) == 2);
    CHECK(catalecticant(f, 4).rows() == 0);
    CHECK_THROWS_AS(catalecticant(x + y * y, 1), NotHomogeneous);
}

TEST_CASE("apolar ideal of a monomial") {
    // (x y z)-perp in degree 2 is spanned by x^2, y^2, z^2.
    const auto s = apolar_component(x * y * z, 2);
    CHECK(s.dimension() == 3);
    CHECK(apolar_component(x * y * z, 1).dimension() == 0);
    CHECK(apolar_component(x * y * z, 4).dimension() == 15);
    CHECK(apolar_hilbert(x * y * z).to_string() == "1 3 3 1");
    CHECK_THROWS_AS(apolar_component(MultiPoly(3), 1), ZeroPolynomial);
}

TEST_CASE("pairing S_j x T_j is perfect") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (unsigned j = 0; j <= 5; ++j) {
            const MonomialBasis b(n, j);
            std::vector<MultiPoly> ops;
            for (const auto& e : b.monomials()) ops.push_back(MultiPoly::monomial(e, Scalar(1L)));
            const auto m = pairing_matrix(ops, j);
            CHECK(m.rows() == b.size());
            CHECK(rank(m) == b.size());
        }
}

TEST_CASE("Hilbert function of an apolar ring is symmetric") {
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform(2, 3));
        const unsigned j = static_cast<unsigned>(uniform(2, n == 3 ? 5 : 6));
        const MultiPoly f = random_form(n, j, 0.5);
        const HilbertFunction h = apolar_hilbert(f);
        CHECK(h.size() == j + 1);
        CHECK(h(0) == 1);
        CHECK(h(j) == 1);
        CHECK(h.is_symmetric());
    }
}

TEST_CASE("dual socle generator recovers the form") {
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform(2, 3));
        const unsigned j = static_cast<unsigned>(uniform(1, 4));
        const MultiPoly f = random_form(n, j, 0.5);
        CHECK(equal_up_to_scalar(dual_socle_generator(apolar_component(f, j)), f));
    }
    // two-dimensional annihilator
    const GradedIdealSlice bad(3, 1, nullptr, {x});
    CHECK_THROWS_AS(dual_socle_generator(bad), NotGorenstein);
}

TEST_CASE("apolar component against a brute-force oracle") {
    for (std::size_t n = 1; n <= 3; ++n)
        for (unsigned j = 0; j <= 4; ++j)
            for (int trial = 0; trial < 3; ++trial) {
                const MultiPoly f = random_form(n, j, 0.6);
                for (unsigned d = 0; d <= j + 1; ++d) {
                    const auto slice = apolar_component(f, d);
                    const MonomialBasis td(n, d);
                    // images of the monomial operators under repeated differentiation
                    std::vector<std::vector<Rational>> images;
                    if (d <= j) {
                        const MonomialBasis target(n, j - d);
                        for (const auto& e : td.monomials())
                            images.push_back(
                                rational_coords(target, differentiate_by(MultiPoly::monomial(e, Scalar(1L)), f)));
                    }
                    const std::size_t image_rank = images.empty() ? 0 : naive_rank(images);
                    CHECK(slice.dimension() == td.size() - image_rank);
                    for (const auto& g : slice.span()) CHECK(differentiate_by(g, f).is_zero());
                }
            }
}

TEST_CASE("graded ideal slice validation") {
    CHECK_THROWS_AS(GradedIdealSlice(3, 1, nullptr, {x, x.scaled(Scalar(2L))}), DomainError);
    CHECK_THROWS_AS(GradedIdealSlice(3, 1, nullptr, {MultiPoly(3)}), DomainError);
    const auto s = GradedIdealSlice::from_spanning_set(3, 1, nullptr, {x, x + y, y.scaled(Scalar(2L)), z});
    CHECK(s.dimension() == 3);
    CHECK(s.codimension() == 0);
    CHECK_THROWS_AS(pairing_matrix(std::vector<MultiPoly>{x.pow(3)}, 2), DegreeMismatch);
}
