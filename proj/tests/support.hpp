#pragma once

// Random inputs and small independent oracles shared by the suites.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "apolar/apolar.hpp"

namespace testing_support {

using namespace apolar;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240917);
    return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long num_range = 9, long den_max = 4) {
    return make_rational(Integer(uniform(-num_range, num_range)), Integer(uniform(1, den_max)));
}

inline Rational random_nonzero_rational(long num_range = 9, long den_max = 4) {
    for (;;) {
        Rational q = random_rational(num_range, den_max);
        if (sgn(q) != 0) return q;
    }
}

/// Random nonzero form of the given degree; each monomial present with probability `density`.
inline MultiPoly random_form(std::size_t n, unsigned d, double density = 0.6, long range = 5) {
    const MonomialBasis basis(n, d);
    std::bernoulli_distribution keep(density);
    for (;;) {
        MultiPoly p(n);
        for (const auto& e : basis.monomials())
            if (keep(rng())) p.add_term(e, Scalar(Rational(uniform(-range, range))));
        if (!p.is_zero()) return p;
    }
}

inline LinearChange random_invertible(std::size_t n, long range = 3) {
    for (;;) {
        Matrix<Scalar> m(n, n, Scalar(0L));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(Rational(uniform(-range, range)));
        if (!determinant(m).is_zero()) return LinearChange(m);
    }
}

/// Leibniz expansion over all permutations; the reference for determinants.
template <class T, class Get>
T leibniz_determinant(std::size_t n, Get get, T zero, T one) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total = zero;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        T term = one;
        for (std::size_t i = 0; i < n; ++i) term = term * get(i, perm[i]);
        if (inversions % 2) total = total - term;
        else total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Rank by plain fraction arithmetic, written separately from the library's
/// row reduction.
inline std::size_t naive_rank(std::vector<std::vector<Rational>> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

/// h(d/dx) f by repeated partial derivatives.
inline MultiPoly differentiate_by(const MultiPoly& h, const MultiPoly& f) {
    MultiPoly out(f.num_vars(), f.field());
    for (const auto& [e, c] : h.terms()) {
        MultiPoly t = f;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t = t.partial_derivative(i);
        out += t.scaled(c);
    }
    return out;
}

inline std::vector<Rational> rational_coords(const MonomialBasis& b, const MultiPoly& p) {
    std::vector<Rational> v;
    for (const auto& s : b.to_vector(p)) v.push_back(s.rational_value());
    return v;
}

}  // namespace testing_support
