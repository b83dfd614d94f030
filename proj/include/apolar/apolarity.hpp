#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "apolar/error.hpp"
#include "apolar/matrix.hpp"
#include "apolar/multipoly.hpp"

namespace apolar {

/// Differentiation action of T on S: operator(d/dX_0, ..., d/dX_n) applied to
/// form. Works term by term, so inhomogeneous inputs are handled by linearity.
inline MultiPoly contract(const MultiPoly& op, const MultiPoly& form) {
    if (op.num_vars() != form.num_vars()) throw ArityMismatch("contraction arguments in different rings");
    if (!same_field(op.field(), form.field())) throw FieldMismatch("contraction arguments over different fields");
    const std::size_t n = op.num_vars();
    MultiPoly r(n, form.field());
    Exponent gamma(n);
    for (const auto& [alpha, c] : op.terms()) {
        for (const auto& [beta, d] : form.terms()) {
            bool divides = true;
            for (std::size_t i = 0; i < n && divides; ++i) divides = beta[i] >= alpha[i];
            if (!divides) continue;
            Integer falling = 1;
            for (std::size_t i = 0; i < n; ++i) {
                gamma[i] = beta[i] - alpha[i];
                for (unsigned k = 0; k < alpha[i]; ++k) falling *= beta[i] - k;
            }
            r.add_term(gamma, c * d * Scalar::in(form.field(), Rational(falling)));
        }
    }
    return r;
}

/// g . f == 0.
inline bool is_apolar(const MultiPoly& g, const MultiPoly& f) { return contract(g, f).is_zero(); }

namespace detail {

inline unsigned homogeneous_degree(const MultiPoly& f, const char* what) {
    if (!f.is_homogeneous()) throw NotHomogeneous(std::string(what) + " must be homogeneous");
    return f.is_zero() ? 0U : static_cast<unsigned>(f.degree());
}

}  // namespace detail

/// Catalecticant map T_e -> S_{j-e}, h |-> h . f, for f homogeneous of degree j.
/// Columns follow MonomialBasis(n, e), rows MonomialBasis(n, j - e); zero rows when e > j.
inline Matrix<Scalar> catalecticant(const MultiPoly& f, unsigned e) {
    const unsigned j = detail::homogeneous_degree(f, "catalecticant form");
    const MonomialBasis cols(f.num_vars(), e);
    if (e > j || f.is_zero()) return Matrix<Scalar>(0, cols.size(), Scalar::zero(f.field()));
    const MonomialBasis rows(f.num_vars(), j - e);
    Matrix<Scalar> m(rows.size(), cols.size(), Scalar::zero(f.field()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const MultiPoly image = contract(MultiPoly::monomial(cols[c], Scalar::one(f.field())), f);
        for (const auto& [gamma, coeff] : image.terms()) m(rows.index_of(gamma), c) = coeff;
    }
    return m;
}

/// Matrix of the pairing between degree-e operators and S_j: one block of
/// rows per operator (indexed by MonomialBasis(n, j - e)), one column per
/// monomial of S_j. For e == j each operator contributes a single row of the
/// perfect pairing S_j x T_j -> k.
inline Matrix<Scalar> pairing_matrix(std::span<const MultiPoly> operators, std::size_t num_vars,
                                     unsigned forms_degree, const FieldRef& field) {
    std::optional<unsigned> e;
    for (const auto& op : operators) {
        if (op.num_vars() != num_vars) throw ArityMismatch("operator arity differs");
        if (!same_field(op.field(), field)) throw FieldMismatch("operator over another field");
        if (op.is_zero()) continue;
        const unsigned d = detail::homogeneous_degree(op, "operator");
        if (e && *e != d) throw DegreeMismatch("operators of different degrees");
        e = d;
    }
    const unsigned op_degree = e.value_or(forms_degree);
    if (op_degree > forms_degree) throw DegreeMismatch("operator degree exceeds form degree");
    const MonomialBasis cols(num_vars, forms_degree);
    const MonomialBasis block(num_vars, forms_degree - op_degree);
    Matrix<Scalar> m(operators.size() * block.size(), cols.size(), Scalar::zero(field));
    for (std::size_t i = 0; i < operators.size(); ++i) {
        if (operators[i].is_zero()) continue;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const MultiPoly image = contract(operators[i], MultiPoly::monomial(cols[c], Scalar::one(field)));
            for (const auto& [gamma, coeff] : image.terms()) m(i * block.size() + block.index_of(gamma), c) = coeff;
        }
    }
    return m;
}

inline Matrix<Scalar> pairing_matrix(const std::vector<MultiPoly>& operators, unsigned forms_degree) {
    if (operators.empty()) throw ArityMismatch("pairing matrix needs at least one operator");
    return pairing_matrix(std::span<const MultiPoly>(operators), operators[0].num_vars(), forms_degree,
                          operators[0].field());
}

/// A linearly independent set of forms of one degree, e.g. I_j.
class GradedIdealSlice {
public:
    GradedIdealSlice(std::size_t num_vars, unsigned degree, FieldRef field, std::vector<MultiPoly> span)
        : num_vars_(num_vars), degree_(degree), field_(std::move(field)), span_(std::move(span)) {
        const MonomialBasis basis(num_vars_, degree_);
        if (span_.empty()) return;
        Matrix<Scalar> m(span_.size(), basis.size(), Scalar::zero(field_));
        for (std::size_t i = 0; i < span_.size(); ++i) {
            if (!same_field(span_[i].field(), field_)) throw FieldMismatch("slice member over another field");
            if (span_[i].is_zero()) throw DomainError("slice members must be nonzero");
            const auto v = basis.to_vector(span_[i]);
            for (std::size_t c = 0; c < v.size(); ++c) m(i, c) = v[c];
        }
        if (rank(m) != span_.size()) throw DomainError("slice members are linearly dependent");
    }

    /// Keeps each generator that is independent of the ones kept before it.
    static GradedIdealSlice from_spanning_set(std::size_t num_vars, unsigned degree, const FieldRef& field,
                                              const std::vector<MultiPoly>& generators) {
        const MonomialBasis basis(num_vars, degree);
        std::vector<std::vector<Scalar>> echelon;  // rows normalized at their pivot
        std::vector<std::size_t> pivots;
        std::vector<MultiPoly> kept;
        for (const auto& g : generators) {
            if (g.is_zero()) continue;
            auto v = basis.to_vector(g.over(field));
            for (std::size_t r = 0; r < echelon.size(); ++r) {
                if (v[pivots[r]].is_zero()) continue;
                const Scalar factor = v[pivots[r]];
                for (std::size_t c = 0; c < v.size(); ++c)
                    if (!echelon[r][c].is_zero()) v[c] -= factor * echelon[r][c];
            }
            std::size_t p = 0;
            while (p < v.size() && v[p].is_zero()) ++p;
            if (p == v.size()) continue;
            const Scalar inv = v[p].inverse();
            for (auto& x : v) x *= inv;
            echelon.push_back(std::move(v));
            pivots.push_back(p);
            kept.push_back(g.over(field));
        }
        GradedIdealSlice s(num_vars, degree, field, {});
        s.span_ = std::move(kept);
        return s;
    }

    std::size_t num_vars() const noexcept { return num_vars_; }
    unsigned degree() const noexcept { return degree_; }
    const FieldRef& field() const noexcept { return field_; }
    const std::vector<MultiPoly>& span() const noexcept { return span_; }
    std::size_t dimension() const noexcept { return span_.size(); }
    std::size_t codimension() const { return MonomialBasis(num_vars_, degree_).size() - span_.size(); }

private:
    std::size_t num_vars_;
    unsigned degree_;
    FieldRef field_;
    std::vector<MultiPoly> span_;
};

/// Dimensions H(0), H(1), ... of the graded pieces of a quotient ring.
class HilbertFunction {
public:
    HilbertFunction() = default;
    explicit HilbertFunction(std::vector<unsigned long> values) : values_(std::move(values)) {}

    std::size_t size() const noexcept { return values_.size(); }
    /// Zero beyond the stored range.
    unsigned long operator()(std::size_t d) const { return d < values_.size() ? values_[d] : 0; }
    const std::vector<unsigned long>& values() const noexcept { return values_; }

    /// Without trailing zeros.
    HilbertFunction trimmed() const {
        auto v = values_;
        while (!v.empty() && v.back() == 0) v.pop_back();
        return HilbertFunction(std::move(v));
    }
    HilbertFunction truncated(std::size_t len) const {
        auto v = values_;
        v.resize(std::min(len, v.size()));
        return HilbertFunction(std::move(v));
    }

    /// H(d) == H(top - d) where top is the last nonzero degree.
    bool is_symmetric() const {
        const auto v = trimmed().values_;
        for (std::size_t d = 0; d < v.size(); ++d)
            if (v[d] != v[v.size() - 1 - d]) return false;
        return true;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t d = 0; d < values_.size(); ++d) os << (d ? " " : "") << values_[d];
        return os.str();
    }

    friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;

private:
    std::vector<unsigned long> values_;
};

/// (f-perp)_d: kernel of the catalecticant T_d -> S_{j-d}; all of T_d when d > j.
inline GradedIdealSlice apolar_component(const MultiPoly& f, unsigned d) {
    if (f.is_zero()) throw ZeroPolynomial("apolar ideal of the zero form");
    const unsigned j = detail::homogeneous_degree(f, "form");
    const MonomialBasis basis(f.num_vars(), d);
    std::vector<MultiPoly> span;
    if (d > j) {
        for (const auto& e : basis.monomials()) span.push_back(MultiPoly::monomial(e, Scalar::one(f.field())));
    } else {
        for (const auto& v : kernel_basis(catalecticant(f, d))) span.push_back(basis.from_vector(v, f.field()));
    }
    return {f.num_vars(), d, f.field(), std::move(span)};
}

/// Hilbert function of T / f-perp, degrees 0..deg f.
inline HilbertFunction apolar_hilbert(const MultiPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("apolar ring of the zero form");
    const unsigned j = detail::homogeneous_degree(f, "form");
    std::vector<unsigned long> h;
    for (unsigned d = 0; d <= j; ++d) h.push_back(rank(catalecticant(f, d)));
    return HilbertFunction(std::move(h));
}

/// The form annihilated by a top-degree slice I_j: the one-dimensional space
/// (0 :_{S_j} I_j), returned with leading coefficient 1.
inline MultiPoly dual_socle_generator(const GradedIdealSlice& slice) {
    const MonomialBasis basis(slice.num_vars(), slice.degree());
    std::vector<std::vector<Scalar>> ker;
    if (slice.span().empty()) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<Scalar> v(basis.size(), Scalar::zero(slice.field()));
            v[i] = Scalar::one(slice.field());
            ker.push_back(std::move(v));
        }
    } else {
        ker = kernel_basis(pairing_matrix(std::span<const MultiPoly>(slice.span()), slice.num_vars(),
                                          slice.degree(), slice.field()));
    }
    if (ker.size() != 1)
        throw NotGorenstein("annihilator of the slice has dimension " + std::to_string(ker.size()) + ", not 1");
    return basis.from_vector(ker.front(), slice.field()).normalized();
}

}  // namespace apolar
