#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace apolar;
using namespace testing_support;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-7/14") == Rational(-1, 2));
    CHECK(to_string(make_rational(6, 4)) == "3/2");
    CHECK(is_integer(make_rational(8, 2)));
    CHECK_FALSE(is_integer(Rational(1, 3)));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK(factorial(6) == 720);
    CHECK(apolar::pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("quadratic field inverse") {
    const auto f = NumberField::quadratic(3);
    const Scalar s = Scalar::generator(f);
    const Scalar x = Scalar::one(f) + s;
    CHECK(x.inverse().to_string() == "-1/2+1/2*sqrt(3)");
    CHECK((x * x.inverse()).is_one());
    CHECK((s * s) == Scalar::in(f, 3));
    CHECK(minimal_polynomial(x).to_string() == "t^2 - 2*t - 2");
}

TEST_CASE("scalar error paths") {
    const auto f = NumberField::quadratic(2);
    const auto g = NumberField::quadratic(5);
    CHECK_THROWS_AS(Scalar::generator(f) + Scalar::generator(g), FieldMismatch);
    CHECK_THROWS_AS(Scalar::zero(f).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Scalar(Rational(0)).inverse(), DivisionByZero);
    CHECK_THROWS_AS(NumberField::create(UniPoly(std::vector<Rational>{1, 2, 1}), "a"), NotSquarefree);
    // t^2 - 1 is squarefree but reducible: t - 1 is a zero divisor.
    const auto red = NumberField::create(UniPoly(std::vector<Rational>{-1, 0, 1}), "a");
    CHECK_THROWS_AS((Scalar::generator(red) - Scalar::one(red)).inverse(), NotInvertible);
    CHECK_THROWS_AS(Scalar::generator(f).rational_value(), DomainError);
    CHECK_THROWS_AS(Scalar::generator(f).embedded(g), FieldMismatch);
    CHECK(Scalar(Rational(2)).embedded(f) == Scalar::in(f, 2));
}

TEST_CASE("field axioms in a cubic field") {
    // Q(cbrt 2); compared against independent evaluation via (x^3 = 2).
    const auto f = NumberField::create(UniPoly(std::vector<Rational>{-2, 0, 0, 1}), "c");
    auto rnd = [&] {
        return Scalar::from_poly(f, UniPoly(std::vector<Rational>{random_rational(), random_rational(), random_rational()}));
    };
    for (int trial = 0; trial < 30; ++trial) {
        const Scalar a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        // minimal polynomial annihilates the element
        const UniPoly m = minimal_polynomial(a);
        CHECK(evaluate(m, a).is_zero());
        CHECK(m.degree() <= 3);
    }
}

TEST_CASE("radical roots of a quadratic") {
    const auto [r1, r2] = radical_roots_of_quadratic(UniPoly(std::vector<Rational>{-2, -2, 1}));
    CHECK(r1.to_string() == "1+sqrt(3)");
    CHECK(r2.to_string() == "1-sqrt(3)");
    const auto [s1, s2] = radical_roots_of_quadratic(UniPoly(std::vector<Rational>{262144, -704, 1}));
    CHECK(s1.to_string() == "352+96*sqrt(-15)");
    CHECK((s1 + s2) == Scalar::in(s1.field(), 704));
    CHECK_THROWS_AS(radical_roots_of_quadratic(UniPoly(std::vector<Rational>{2, -3, 1})), DomainError);
}

TEST_CASE("matrix kernel, determinant and inverse against oracles") {
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t r = static_cast<std::size_t>(uniform(1, 5)), c = static_cast<std::size_t>(uniform(1, 5));
        Matrix<Rational> m(r, c, Rational(0));
        std::vector<std::vector<Rational>> rows(r, std::vector<Rational>(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) rows[i][j] = m(i, j) = uniform(0, 2) ? random_rational(3, 2) : 0;
        const auto ker = kernel_basis(m);
        CHECK(rank(m) == naive_rank(rows));
        CHECK(ker.size() + rank(m) == c);
        for (const auto& v : ker)
            for (std::size_t i = 0; i < r; ++i) {
                Rational s = 0;
                for (std::size_t j = 0; j < c; ++j) s += m(i, j) * v[j];
                CHECK(s == 0);
            }
        if (r == c) {
            const Rational det = leibniz_determinant<Rational>(
                r, [&](std::size_t i, std::size_t j) { return m(i, j); }, Rational(0), Rational(1));
            CHECK(determinant(m) == det);
            if (det != 0) CHECK(inverse(m) * m == identity_matrix(r, Rational(0)));
            else CHECK_THROWS_AS(inverse(m), SingularMatrix);
        }
    }
}
