#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/error.hpp"
#include "apolar/multipoly.hpp"

namespace apolar {

/// Desk-scale guard rails.
struct Limits {
    unsigned max_socle_degree = 12;
};

/// V(g) for a nonzero form g of degree d >= 2 in n+1 variables.
class Hypersurface {
public:
    explicit Hypersurface(MultiPoly g) : g_(std::move(g)) {
        if (g_.is_zero()) throw ZeroPolynomial("hypersurface of the zero form");
        if (!g_.is_homogeneous()) throw NotHomogeneous("hypersurface equation must be homogeneous");
        if (g_.degree() < 2) throw DegreeTooLow("hypersurface equation must have degree >= 2");
        degree_ = static_cast<unsigned>(g_.degree());
        socle_degree_ = static_cast<unsigned>(g_.num_vars()) * (degree_ - 2);
    }

    const MultiPoly& polynomial() const noexcept { return g_; }
    std::size_t num_vars() const noexcept { return g_.num_vars(); }
    const FieldRef& field() const noexcept { return g_.field(); }
    unsigned degree() const noexcept { return degree_; }
    /// (n+1)(d-2), the socle degree of the Jacobian ring of a smooth g.
    unsigned socle_degree() const noexcept { return socle_degree_; }

private:
    MultiPoly g_;
    unsigned degree_ = 0;
    unsigned socle_degree_ = 0;
};

/// The n+1 partial derivatives, in variable order.
inline std::vector<MultiPoly> jacobian_ideal(const Hypersurface& h) {
    std::vector<MultiPoly> gens;
    for (std::size_t i = 0; i < h.num_vars(); ++i) gens.push_back(h.polynomial().partial_derivative(i));
    return gens;
}

namespace detail {

inline std::vector<MultiPoly> jacobian_products(const Hypersurface& h, unsigned e) {
    const auto partials = jacobian_ideal(h);
    const MonomialBasis multipliers(h.num_vars(), e - (h.degree() - 1));
    std::vector<MultiPoly> out;
    for (const auto& p : partials) {
        if (p.is_zero()) continue;
        for (const auto& m : multipliers.monomials()) out.push_back(MultiPoly::monomial(m, Scalar::one(h.field())) * p);
    }
    return out;
}

inline std::size_t jacobian_rank(const Hypersurface& h, unsigned e) {
    if (e < h.degree() - 1) return 0;
    const auto products = jacobian_products(h, e);
    const MonomialBasis basis(h.num_vars(), e);
    if (products.empty()) return 0;
    Matrix<Scalar> m(products.size(), basis.size(), Scalar::zero(h.field()));
    for (std::size_t i = 0; i < products.size(); ++i)
        for (const auto& [exp, c] : products[i].terms()) m(i, basis.index_of(exp)) = c;
    return rank(m);
}

inline void check_limits(const Hypersurface& h, const Limits& limits) {
    if (h.socle_degree() > limits.max_socle_degree)
        throw SizeLimitExceeded("socle degree " + std::to_string(h.socle_degree()) + " exceeds the limit " +
                                std::to_string(limits.max_socle_degree));
}

}  // namespace detail

/// J(g)_e as a basis chosen greedily from the products m * dg/dx_i.
inline GradedIdealSlice jacobian_slice(const Hypersurface& h, unsigned e) {
    if (e < h.degree() - 1)
        throw DegreeTooLow("Jacobian ideal has no elements of degree " + std::to_string(e));
    return GradedIdealSlice::from_spanning_set(h.num_vars(), e, h.field(), detail::jacobian_products(h, e));
}

/// H(R/J(g)) in degrees 0..socle_degree+1.
inline HilbertFunction jacobian_hilbert(const Hypersurface& h, const Limits& limits = {}) {
    detail::check_limits(h, limits);
    std::vector<unsigned long> values;
    for (unsigned e = 0; e <= h.socle_degree() + 1; ++e) {
        const auto dim = MonomialBasis(h.num_vars(), e).size();
        values.push_back(dim - detail::jacobian_rank(h, e));
    }
    return HilbertFunction(std::move(values));
}

/// The Jacobian ring is Artinian, i.e. vanishes one degree past the socle.
inline bool is_smooth(const Hypersurface& h, const Limits& limits = {}) {
    detail::check_limits(h, limits);
    const unsigned e = h.socle_degree() + 1;
    return detail::jacobian_rank(h, e) == MonomialBasis(h.num_vars(), e).size();
}

/// det of the matrix of second partials (not normalized).
inline MultiPoly hessian(const Hypersurface& h) {
    const auto partials = jacobian_ideal(h);
    PolyMatrix m(h.num_vars());
    for (std::size_t i = 0; i < h.num_vars(); ++i)
        for (std::size_t j = 0; j < h.num_vars(); ++j) m[i].push_back(partials[i].partial_derivative(j));
    return poly_matrix_determinant(m);
}

/// Mac(g): the dual socle generator of R/J(g), leading coefficient 1.
inline MultiPoly macaulay(const Hypersurface& h, const Limits& limits = {}) {
    if (!is_smooth(h, limits)) throw NotSmooth("Macaulay polynomial needs a smooth hypersurface");
    const unsigned sigma = h.socle_degree();
    if (sigma < h.degree() - 1) return dual_socle_generator(GradedIdealSlice(h.num_vars(), sigma, h.field(), {}));
    return dual_socle_generator(jacobian_slice(h, sigma));
}

/// q == p(A X) up to scalar.
inline bool verify_equivalence_witness(const MultiPoly& p, const MultiPoly& q, const LinearChange& a) {
    return equal_up_to_scalar(substitute_linear(p, a), q);
}

enum class Verdict { Equal, ProjectivelyEquivalent, NotEqual };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Equal: return "Equal";
        case Verdict::ProjectivelyEquivalent: return "ProjectivelyEquivalent";
        case Verdict::NotEqual: return "NotEqual";
    }
    return "?";
}

struct HessMacComparison {
    Verdict verdict;
    MultiPoly hessian;
    MultiPoly macaulay;
    /// Set when verdict is ProjectivelyEquivalent: Hess(g) == Mac(g)(A X) up to scalar.
    std::optional<LinearChange> witness;
};

/// Equal when Hess(g) and Mac(g) agree up to scalar. No search for an
/// equivalence is made; a supplied witness A with Hess(g) == Mac(g)(A X) is
/// verified and reported.
inline HessMacComparison hess_mac_compare(const Hypersurface& h, const std::optional<LinearChange>& witness = {},
                                          const Limits& limits = {}) {
    MultiPoly mac = macaulay(h, limits);
    MultiPoly hess = hessian(h);
    if (equal_up_to_scalar(hess, mac)) return {Verdict::Equal, std::move(hess), std::move(mac), std::nullopt};
    if (witness && verify_equivalence_witness(mac, hess, *witness))
        return {Verdict::ProjectivelyEquivalent, std::move(hess), std::move(mac), witness};
    return {Verdict::NotEqual, std::move(hess), std::move(mac), std::nullopt};
}

}  // namespace apolar
