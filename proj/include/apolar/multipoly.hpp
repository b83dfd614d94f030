#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "apolar/error.hpp"
#include "apolar/matrix.hpp"
#include "apolar/number_field.hpp"

namespace apolar {

/// Dense exponent vector, one entry per variable.
using Exponent = std::vector<unsigned>;

inline unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0U); }

/// Graded-lex order with x0 > x1 > ...; sorts the larger monomial first.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const {
        const unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

inline std::vector<std::string> default_variable_names(std::size_t n) {
    static const char* names[] = {"x", "y", "z", "w", "t"};
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(n <= 5 ? names[i] : "x" + std::to_string(i));
    return v;
}

/// Sparse polynomial over a Scalar field. The same type houses forms in S and
/// the operators in T (identified with R); `contract` decides which acts.
class MultiPoly {
public:
    using TermMap = std::map<Exponent, Scalar, GrlexGreater>;

    explicit MultiPoly(std::size_t num_vars, FieldRef field = nullptr)
        : num_vars_(num_vars), field_(std::move(field)) {
        if (num_vars_ == 0) throw ArityMismatch("polynomial needs at least one variable");
    }

    static MultiPoly constant(std::size_t num_vars, const Scalar& c) {
        MultiPoly p(num_vars, c.field());
        p.add_term(Exponent(num_vars, 0), c);
        return p;
    }
    static MultiPoly variable(std::size_t num_vars, std::size_t i, const FieldRef& field = nullptr) {
        if (i >= num_vars) throw IndexOutOfRange("variable index out of range");
        Exponent e(num_vars, 0);
        e[i] = 1;
        return monomial(e, Scalar::one(field));
    }
    static MultiPoly monomial(const Exponent& e, const Scalar& c) {
        MultiPoly p(e.size(), c.field());
        p.add_term(e, c);
        return p;
    }

    std::size_t num_vars() const noexcept { return num_vars_; }
    const FieldRef& field() const noexcept { return field_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Total degree; -1 for zero.
    long degree() const {
        return terms_.empty() ? -1 : static_cast<long>(total_degree(terms_.begin()->first));
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const unsigned d = total_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }

    Scalar coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }
    const Exponent& leading_exponent() const {
        if (terms_.empty()) throw ZeroPolynomial("leading term of zero");
        return terms_.begin()->first;
    }
    const Scalar& leading_coefficient() const {
        if (terms_.empty()) throw ZeroPolynomial("leading term of zero");
        return terms_.begin()->second;
    }

    /// Scaled so the graded-lex leading coefficient is 1 (zero stays zero).
    MultiPoly normalized() const {
        if (terms_.empty()) return *this;
        return scaled(leading_coefficient().inverse());
    }

    void add_term(const Exponent& e, const Scalar& c) {
        if (e.size() != num_vars_) throw ArityMismatch("exponent length differs from variable count");
        if (!same_field(c.field(), field_)) throw FieldMismatch("coefficient from another field");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    /// The same polynomial with coefficients moved into `target` (Q embeds anywhere).
    MultiPoly over(const FieldRef& target) const {
        if (same_field(field_, target)) return *this;
        MultiPoly r(num_vars_, target);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.embedded(target));
        return r;
    }

    MultiPoly scaled(const Scalar& s) const {
        if (!same_field(s.field(), field_)) throw FieldMismatch("scalar from another field");
        MultiPoly r(num_vars_, field_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r(num_vars_, field_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check(a, b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        check(a, b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check(a, b);
        MultiPoly r(a.num_vars_, a.field_);
        Exponent e(a.num_vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(num_vars_, Scalar::one(field_));
        MultiPoly b = *this;
        while (e != 0) {
            if (e & 1U) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    MultiPoly partial_derivative(std::size_t i) const {
        if (i >= num_vars_) throw IndexOutOfRange("partial derivative index out of range");
        MultiPoly r(num_vars_, field_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponent d = e;
            --d[i];
            r.terms_.emplace(std::move(d), c * Scalar::in(field_, e[i]));
        }
        return r;
    }

    Scalar evaluate(const std::vector<Scalar>& point) const {
        if (point.size() != num_vars_) throw ArityMismatch("evaluation point has wrong length");
        Scalar acc = Scalar::zero(field_);
        for (const auto& [e, c] : terms_) {
            Scalar t = c;
            for (std::size_t i = 0; i < num_vars_; ++i) t *= point[i].pow(e[i]);
            acc += t;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.num_vars_ == b.num_vars_ && same_field(a.field_, b.field_) && a.terms_ == b.terms_;
    }

    /// Canonical text: graded-lex order, explicit `*` and `^`. Coefficients with
    /// more than one field term are parenthesized.
    std::string to_string(const std::vector<std::string>& vars) const {
        if (vars.size() != num_vars_) throw ArityMismatch("wrong number of variable names");
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (std::size_t i = 0; i < num_vars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += '*';
                mono += vars[i];
                if (e[i] > 1) mono += '^' + std::to_string(e[i]);
            }
            std::string mag;
            bool negative = false;
            if (c.term_count() == 1) {
                negative = negative_single_term(c);
                mag = (negative ? -c : c).to_string();
            } else {
                mag = "(" + c.to_string() + ")";
            }
            if (first) {
                if (negative) os << '-';
            } else {
                os << (negative ? " - " : " + ");
            }
            first = false;
            if (mono.empty()) os << mag;
            else if (mag == "1") os << mono;
            else os << mag << '*' << mono;
        }
        return os.str();
    }
    std::string to_string() const { return to_string(default_variable_names(num_vars_)); }

private:
    static bool negative_single_term(const Scalar& c) {
        for (const auto& q : c.coefficients())
            if (sgn(q) != 0) return sgn(q) < 0;
        return false;
    }

    static void check(const MultiPoly& a, const MultiPoly& b) {
        if (a.num_vars_ != b.num_vars_) throw ArityMismatch("polynomials in different numbers of variables");
        if (!same_field(a.field_, b.field_)) throw FieldMismatch("polynomials over different fields");
    }

    std::size_t num_vars_;
    FieldRef field_;
    TermMap terms_;
};

/// p == c * q for some nonzero scalar c (two zeros are equal).
inline bool equal_up_to_scalar(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    return p.normalized() == q.normalized();
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Monomials of one degree in graded-lex (here: lex) descending order;
/// coordinates for S_d and T_d.
class MonomialBasis {
public:
    MonomialBasis(std::size_t num_vars, unsigned degree) : num_vars_(num_vars), degree_(degree) {
        if (num_vars == 0) throw ArityMismatch("monomial basis needs at least one variable");
        Exponent e(num_vars, 0);
        generate(e, 0, degree);
        for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
    }

    std::size_t num_vars() const noexcept { return num_vars_; }
    unsigned degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return monomials_.size(); }
    const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
    const std::vector<Exponent>& monomials() const noexcept { return monomials_; }

    std::size_t index_of(const Exponent& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) throw DegreeMismatch("monomial not in basis");
        return it->second;
    }

    std::vector<Scalar> to_vector(const MultiPoly& p) const {
        if (p.num_vars() != num_vars_) throw ArityMismatch("polynomial arity differs from basis");
        if (!p.is_homogeneous()) throw NotHomogeneous("to_vector needs a homogeneous polynomial");
        if (!p.is_zero() && p.degree() != static_cast<long>(degree_))
            throw DegreeMismatch("polynomial of degree " + std::to_string(p.degree()) +
                                 " in a degree-" + std::to_string(degree_) + " basis");
        std::vector<Scalar> v(size(), Scalar::zero(p.field()));
        for (const auto& [e, c] : p.terms()) v[index_of(e)] = c;
        return v;
    }

    MultiPoly from_vector(const std::vector<Scalar>& v, const FieldRef& field) const {
        if (v.size() != size()) throw DegreeMismatch("coordinate vector has wrong length");
        MultiPoly p(num_vars_, field);
        for (std::size_t i = 0; i < v.size(); ++i) p.add_term(monomials_[i], v[i]);
        return p;
    }

private:
    void generate(Exponent& e, std::size_t pos, unsigned remaining) {
        if (pos + 1 == num_vars_) {
            e[pos] = remaining;
            monomials_.push_back(e);
            return;
        }
        for (unsigned k = remaining + 1; k-- > 0;) {
            e[pos] = k;
            generate(e, pos + 1, remaining - k);
        }
        e[pos] = 0;
    }

    std::size_t num_vars_;
    unsigned degree_;
    std::vector<Exponent> monomials_;
    std::map<Exponent, std::size_t> index_;
};

/// Invertible square matrix acting on variables: x_i -> sum_j A(i,j) x_j.
/// Only invertibility is required; all equivalences are up to scalar.
class LinearChange {
public:
    explicit LinearChange(Matrix<Scalar> m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols() || m_.rows() == 0) throw ArityMismatch("linear change must be square");
        if (determinant(m_).is_zero()) throw SingularMatrix("linear change is not invertible");
    }

    static LinearChange from_rows(const std::vector<std::vector<Scalar>>& rows) {
        if (rows.empty()) throw ArityMismatch("empty matrix");
        Matrix<Scalar> m(rows.size(), rows.size(), zero_like(rows[0].at(0)));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw ArityMismatch("matrix must be square");
            for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
        }
        return LinearChange(std::move(m));
    }
    static LinearChange identity(std::size_t n, const FieldRef& field = nullptr) {
        return LinearChange(identity_matrix(n, Scalar::zero(field)));
    }

    std::size_t size() const noexcept { return m_.rows(); }
    const Matrix<Scalar>& matrix() const noexcept { return m_; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    FieldRef field() const { return m_(0, 0).field(); }
    Scalar det() const { return determinant(m_); }

    LinearChange inverse() const { return LinearChange(apolar::inverse(m_)); }
    LinearChange transposed() const { return LinearChange(m_.transposed()); }
    /// (A^T)^{-1}, the change that keeps the apolarity pairing invariant.
    LinearChange contragredient() const { return inverse().transposed(); }

    friend LinearChange operator*(const LinearChange& a, const LinearChange& b) {
        return LinearChange(a.m_ * b.m_);
    }

private:
    Matrix<Scalar> m_;
};

/// p(A x): each x_i replaced by the i-th entry of A x. Composing,
/// substitute_linear(substitute_linear(p, A), B) == substitute_linear(p, A * B).
inline MultiPoly substitute_linear(const MultiPoly& p, const LinearChange& a) {
    const std::size_t n = p.num_vars();
    if (a.size() != n) throw ArityMismatch("linear change size differs from variable count");
    const FieldRef f = p.field();
    if (!same_field(a.field(), f)) throw FieldMismatch("linear change over another field");
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly l(n, f);
        for (std::size_t j = 0; j < n; ++j) {
            Exponent e(n, 0);
            e[j] = 1;
            l.add_term(e, a(i, j));
        }
        images.push_back(std::move(l));
    }
    // powers[i][k] = images[i]^k, filled lazily
    std::vector<std::vector<MultiPoly>> powers(n);
    auto power = [&](std::size_t i, unsigned k) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(n, Scalar::one(f)));
        while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };
    MultiPoly r(n, f);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly t = MultiPoly::constant(n, c);
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] != 0) t *= power(i, e[i]);
        r += t;
    }
    return r;
}

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Exact determinant by Laplace expansion over column subsets (row-by-row
/// dynamic programming, 2^n partial minors).
inline MultiPoly poly_matrix_determinant(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw ArityMismatch("determinant of an empty matrix");
    if (n > 20) throw SizeLimitExceeded("polynomial determinant larger than 20x20");
    const std::size_t vars = m[0].at(0).num_vars();
    const FieldRef f = m[0][0].field();
    for (const auto& row : m) {
        if (row.size() != n) throw ArityMismatch("polynomial matrix must be square");
        for (const auto& p : row) {
            if (p.num_vars() != vars) throw ArityMismatch("matrix entries in different numbers of variables");
            if (!same_field(p.field(), f)) throw FieldMismatch("matrix entries over different fields");
        }
    }
    // minors[mask] = det(rows 0..popcount(mask)-1, columns in mask)
    std::vector<MultiPoly> minors(std::size_t{1} << n, MultiPoly(vars, f));
    std::vector<bool> present(minors.size(), false);
    minors[0] = MultiPoly::constant(vars, Scalar::one(f));
    present[0] = true;
    for (std::size_t mask = 0; mask < minors.size(); ++mask) {
        if (!present[mask] || minors[mask].is_zero()) continue;
        const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (row == n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if ((mask >> j) & 1U) continue;
            if (m[row][j].is_zero()) continue;
            const std::size_t next = mask | (std::size_t{1} << j);
            const bool negative = (__builtin_popcountll(mask >> (j + 1)) & 1) != 0;
            MultiPoly term = m[row][j] * minors[mask];
            minors[next] += negative ? -term : term;
            present[next] = true;
        }
    }
    return minors.back();
}

}  // namespace apolar
