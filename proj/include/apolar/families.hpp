#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/error.hpp"
#include "apolar/jacobian.hpp"
#include "apolar/multipoly.hpp"
#include "apolar/number_field.hpp"
#include "apolar/univariate.hpp"

namespace apolar {

namespace detail {

/// The integer v in the ring of `like`.
template <class Ring>
Ring num(const Ring& like, long v) {
    return lift_like(like, Rational(v));
}

inline MultiPoly binary_form(const std::array<Scalar, 5>& c) {
    MultiPoly q(2, c[0].field());
    for (unsigned k = 0; k < 5; ++k) q.add_term({4 - k, k}, c[k]);
    return q;
}

inline std::array<Scalar, 5> binary_quartic_coefficients(const MultiPoly& q) {
    if (q.num_vars() != 2) throw ArityMismatch("binary quartic must have two variables");
    if (q.is_zero()) throw ZeroPolynomial("binary quartic is zero");
    if (!q.is_homogeneous() || q.degree() != 4) throw DegreeMismatch("expected a homogeneous quartic");
    std::array<Scalar, 5> c;
    for (unsigned k = 0; k < 5; ++k) c[k] = q.coefficient({4 - k, k});
    return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Named families

/// x^3 + y^3 + z^3 - 3 a x y z, with no admissibility check.
inline MultiPoly hasse_polynomial(const Scalar& a) {
    const FieldRef f = a.field();
    const auto x = MultiPoly::variable(3, 0, f), y = MultiPoly::variable(3, 1, f), z = MultiPoly::variable(3, 2, f);
    return x.pow(3) + y.pow(3) + z.pow(3) - (x * y * z).scaled(detail::num(a, 3) * a);
}

/// Smooth member of the Hasse pencil; a^3 = 1 is rejected.
inline Hypersurface hasse_cubic(const Scalar& a) {
    if (a.pow(3).is_one()) throw ExcludedParameter("Hasse member with a^3 = 1 is singular");
    return Hypersurface(hasse_polynomial(a));
}

/// x y (x - y)(x + a y), with no admissibility check.
inline MultiPoly binary_quartic_polynomial(const Scalar& a) {
    return detail::binary_form({Scalar::zero(a.field()), Scalar::one(a.field()), a - detail::num(a, 1), -a,
                                Scalar::zero(a.field())});
}

/// f_a = x y (x - y)(x + a y); a = 0 and a = -1 give repeated roots.
inline Hypersurface binary_quartic(const Scalar& a) {
    if (a.is_zero() || (a + detail::num(a, 1)).is_zero())
        throw ExcludedParameter("binary quartic family needs a != 0, -1");
    return Hypersurface(binary_quartic_polynomial(a));
}

/// x_0^d + ... + x_n^d in n+1 variables.
inline Hypersurface fermat(std::size_t projective_dim, unsigned degree, const FieldRef& field = nullptr) {
    const std::size_t n = projective_dim + 1;
    MultiPoly g(n, field);
    for (std::size_t i = 0; i < n; ++i) g += MultiPoly::variable(n, i, field).pow(degree);
    return Hypersurface(std::move(g));
}

namespace detail {

inline void check_plane_linear(const MultiPoly& l) {
    if (l.num_vars() != 3) throw ArityMismatch("linear form must be in three variables");
    if (l.is_zero() || !l.is_homogeneous() || l.degree() != 1) throw DegreeMismatch("expected a linear form");
}

inline MultiPoly plane_fermat_quartic(const FieldRef& f) { return fermat(2, 4, f).polynomial(); }

}  // namespace detail

/// x^4 + y^4 + z^4 + l^4.
inline Hypersurface caporali(const MultiPoly& l) {
    detail::check_plane_linear(l);
    return Hypersurface(detail::plane_fermat_quartic(l.field()) + l.pow(4));
}

/// x^4 + y^4 + z^4 + l1^4 + l2^4.
inline Hypersurface clebsh(const MultiPoly& l1, const MultiPoly& l2) {
    detail::check_plane_linear(l1);
    detail::check_plane_linear(l2);
    return Hypersurface(detail::plane_fermat_quartic(l1.field()) + l1.pow(4) + l2.pow(4));
}

inline Hypersurface klein_quartic() {
    const auto x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);
    return Hypersurface(x.pow(3) * y + y.pow(3) * z + z.pow(3) * x);
}

/// x^2 y + y^2 z + z^2 w + w^2 t + t^2 x in P^4.
inline Hypersurface klein_cubic_p4() {
    std::vector<MultiPoly> v;
    for (std::size_t i = 0; i < 5; ++i) v.push_back(MultiPoly::variable(5, i));
    MultiPoly g(5);
    for (std::size_t i = 0; i < 5; ++i) g += v[i].pow(2) * v[(i + 1) % 5];
    return Hypersurface(std::move(g));
}

// ---------------------------------------------------------------------------
// Hasse pencil parameters

template <class Ring>
Ring hasse_hessian_param_value(const Ring& a) {
    return (detail::num(a, 4) - a * a * a) / (detail::num(a, 3) * a * a);
}

template <class Ring>
Ring hasse_macaulay_param_value(const Ring& a) {
    return detail::num(a, -2) / a;
}

template <class Ring>
Ring j_hasse_value(const Ring& a) {
    const Ring a3 = a * a * a;
    const Ring s = a3 + detail::num(a, 8);
    const Ring d = detail::num(a, 1) - a3;
    return -(a3 * s * s * s) / (d * d * d);
}

/// b with Hess(f_a) proportional to f_b.
inline Scalar hasse_hessian_param(const Scalar& a) {
    if (a.is_zero()) throw ExcludedParameter("Hessian of the Fermat member is xyz, outside the finite pencil");
    return hasse_hessian_param_value(a);
}

/// c with Mac(f_a) proportional to f_c.
inline Scalar hasse_macaulay_param(const Scalar& a) {
    if (a.is_zero()) throw ExcludedParameter("Macaulay polynomial of the Fermat member is xyz, outside the finite pencil");
    return hasse_macaulay_param_value(a);
}

/// j(f_a) = -a^3 (a^3 + 8)^3 / (1 - a^3)^3.
inline Scalar j_hasse(const Scalar& a) {
    if (a.pow(3).is_one()) throw SingularMember("j of a singular Hasse member (a^3 = 1)");
    return j_hasse_value(a);
}

inline RationalFn hasse_hessian_param_fn() { return hasse_hessian_param_value(RationalFn::variable()); }
inline RationalFn hasse_macaulay_param_fn() { return hasse_macaulay_param_value(RationalFn::variable()); }
inline RationalFn j_hasse_fn() { return j_hasse_value(RationalFn::variable()); }

// ---------------------------------------------------------------------------
// Points on P^1, cross-ratio and j

/// (u : v), not both zero. Equality is projective.
class ProjPointP1 {
public:
    ProjPointP1(Scalar u, Scalar v) : u_(std::move(u)), v_(std::move(v)) {
        if (!same_field(u_.field(), v_.field())) throw FieldMismatch("point coordinates over different fields");
        if (u_.is_zero() && v_.is_zero()) throw DomainError("(0 : 0) is not a point");
    }
    static ProjPointP1 affine(const Scalar& x) { return {x, Scalar::one(x.field())}; }
    static ProjPointP1 infinity(const FieldRef& f = nullptr) { return {Scalar::one(f), Scalar::zero(f)}; }

    const Scalar& u() const noexcept { return u_; }
    const Scalar& v() const noexcept { return v_; }

    friend bool operator==(const ProjPointP1& p, const ProjPointP1& q) { return bracket(p, q).is_zero(); }

    /// u_p v_q - u_q v_p; zero exactly when p == q.
    friend Scalar bracket(const ProjPointP1& p, const ProjPointP1& q) { return p.u_ * q.v_ - q.u_ * p.v_; }

private:
    Scalar u_;
    Scalar v_;
};

/// lambda = ((p1 - p3)(p2 - p4)) / ((p2 - p3)(p1 - p4)), written with brackets
/// so the point at infinity needs no special case. The j-invariant does not
/// depend on the ordering.
inline Scalar cross_ratio(const ProjPointP1& p1, const ProjPointP1& p2, const ProjPointP1& p3,
                          const ProjPointP1& p4) {
    const std::array<const ProjPointP1*, 4> p{&p1, &p2, &p3, &p4};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = i + 1; k < 4; ++k)
            if (*p[i] == *p[k]) throw CoincidentPoints("cross-ratio needs four distinct points");
    return bracket(p1, p3) * bracket(p2, p4) / (bracket(p2, p3) * bracket(p1, p4));
}

/// j = 2^8 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2).
inline Scalar j_from_cross_ratio(const Scalar& lambda) {
    const Scalar one = Scalar::one(lambda.field());
    if (lambda.is_zero() || lambda == one) throw DegenerateCrossRatio("cross-ratio 0 or 1");
    const Scalar s = lambda * lambda - lambda + one;
    const Scalar l1 = lambda - one;
    return detail::num(lambda, 256) * s * s * s / (lambda * lambda * l1 * l1);
}

/// Points (0:1), (1:0), (1:1), (-a:1) where x y (x - y)(x + a y) vanishes.
inline std::array<ProjPointP1, 4> binary_quartic_roots(const Scalar& a) {
    const FieldRef f = a.field();
    return {ProjPointP1(Scalar::zero(f), Scalar::one(f)), ProjPointP1::infinity(f),
            ProjPointP1(Scalar::one(f), Scalar::one(f)), ProjPointP1::affine(-a)};
}

/// Classical invariants of c0 x^4 + c1 x^3 y + ... + c4 y^4, written with the
/// binomial normalisation a_k = c_k / C(4, k).
template <class Ring>
struct QuarticInvariants {
    Ring i;
    Ring j;
    Ring discriminant;  // i^3 - 27 j^2
};

template <class Ring>
QuarticInvariants<Ring> quartic_invariants(const std::array<Ring, 5>& c) {
    const Ring& like = c[0];
    const Ring a0 = c[0], a1 = c[1] / detail::num(like, 4), a2 = c[2] / detail::num(like, 6),
               a3 = c[3] / detail::num(like, 4), a4 = c[4];
    Ring i = a0 * a4 - detail::num(like, 4) * a1 * a3 + detail::num(like, 3) * a2 * a2;
    Ring j = a0 * a2 * a4 + detail::num(like, 2) * a1 * a2 * a3 - a2 * a2 * a2 - a0 * a3 * a3 - a1 * a1 * a4;
    Ring disc = i * i * i - detail::num(like, 27) * j * j;
    return {std::move(i), std::move(j), std::move(disc)};
}

/// 1728 i^3 / (i^3 - 27 j^2); the constant agrees with j_from_cross_ratio
/// (checked against factored quartics in the tests).
template <class Ring>
Ring j_quartic_value(const std::array<Ring, 5>& c) {
    const auto inv = quartic_invariants(c);
    return detail::num(c[0], 1728) * inv.i * inv.i * inv.i / inv.discriminant;
}

inline Scalar j_binary_quartic(const MultiPoly& q) {
    const auto c = detail::binary_quartic_coefficients(q);
    const auto inv = quartic_invariants(c);
    if (inv.discriminant.is_zero()) throw SingularForm("binary quartic has a repeated root");
    return j_quartic_value(c);
}

// ---------------------------------------------------------------------------
// Closed forms for the binary quartic family

template <class Ring>
std::array<Ring, 5> binary_family_coefficients(const Ring& a) {
    return {detail::num(a, 0), detail::num(a, 1), a - detail::num(a, 1), -a, detail::num(a, 0)};
}

/// -9 x^4 - 12(a-1) x^3 y - 6(2a^2 - a + 2) x^2 y^2 + 12 a (a-1) x y^3 - 9 a^2 y^4.
template <class Ring>
std::array<Ring, 5> binary_hessian_coefficients(const Ring& a) {
    const Ring one = detail::num(a, 1);
    return {detail::num(a, -9), detail::num(a, -12) * (a - one),
            detail::num(a, -6) * (detail::num(a, 2) * a * a - a + detail::num(a, 2)),
            detail::num(a, 12) * a * (a - one), detail::num(a, -9) * a * a};
}

/// (a^2+a+1) x^4 - 2(a-1) x^3 y + 6 x^2 y^2 + 2 (a-1)/a x y^3 + (a^2+a+1)/a^2 y^4.
template <class Ring>
std::array<Ring, 5> binary_macaulay_coefficients(const Ring& a) {
    const Ring one = detail::num(a, 1);
    const Ring s = a * a + a + one;
    return {s, detail::num(a, -2) * (a - one), detail::num(a, 6), detail::num(a, 2) * (a - one) / a, s / (a * a)};
}

namespace detail {

inline void check_binary_param(const Scalar& a) {
    if (a.is_zero() || (a + num(a, 1)).is_zero()) throw ExcludedParameter("binary quartic family needs a != 0, -1");
}

}  // namespace detail

/// Closed form of Hess(f_a).
inline MultiPoly binary_H(const Scalar& a) {
    detail::check_binary_param(a);
    return detail::binary_form(binary_hessian_coefficients(a));
}

/// Closed form of Mac(f_a).
inline MultiPoly binary_M(const Scalar& a) {
    detail::check_binary_param(a);
    return detail::binary_form(binary_macaulay_coefficients(a));
}

inline RationalFn j_binary_family_fn() { return j_quartic_value(binary_family_coefficients(RationalFn::variable())); }
inline RationalFn j_binary_H_fn() { return j_quartic_value(binary_hessian_coefficients(RationalFn::variable())); }
inline RationalFn j_binary_M_fn() { return j_quartic_value(binary_macaulay_coefficients(RationalFn::variable())); }

// ---------------------------------------------------------------------------
// Plane quartics: Hilbert function comparison

struct HilbertComparison {
    HilbertFunction jacobian;      // R/J(g), degrees 0..sigma
    HilbertFunction hessian_perp;  // T/Hess(g)-perp
    std::vector<std::size_t> differing_degrees;
    bool equal() const { return differing_degrees.empty(); }
};

inline HilbertComparison compare_hilbert_functions(const Hypersurface& h, const Limits& limits = {}) {
    HilbertComparison out{jacobian_hilbert(h, limits).truncated(h.socle_degree() + 1),
                          apolar_hilbert(hessian(h)), {}};
    const std::size_t len = std::max(out.jacobian.size(), out.hessian_perp.size());
    for (std::size_t d = 0; d < len; ++d)
        if (out.jacobian(d) != out.hessian_perp(d)) out.differing_degrees.push_back(d);
    return out;
}

// ---------------------------------------------------------------------------
// Classification

/// A set of conjugate parameter values: the roots of `factor`.
struct RootGroup {
    UniPoly factor;  // monic squarefree
    unsigned multiplicity = 1;
    /// Minimal polynomials over Q of j(f_a), j(Hess), j(Mac) on the group.
    /// Degree 1 means the value is the same rational number at every root.
    UniPoly j_family;
    UniPoly j_hessian;
    UniPoly j_macaulay;
};

/// Parameter values handled outside the j-equation (poles of it, or members
/// whose Hessian/Macaulay leave the family).
struct SpecialMember {
    UniPoly factor;
    std::string note;
    UniPoly j_family;
    bool hessian_equals_macaulay = false;
    bool hessian_singular = false;
};

struct ClassificationReport {
    std::string family;
    /// Admissible part of j(Hess) = j(Mac) as an equation in the parameter.
    UniPoly equation;
    /// Parameter values where j(Hess) or j(Mac) is undefined.
    UniPoly poles;
    /// Values removed from the equation because the family treats them apart.
    std::vector<Rational> context_excluded;
    RootSet roots;
    std::vector<RootGroup> groups;
    std::vector<SpecialMember> special_members;
    /// Roots of Hess(f_a) = Mac(f_a) exactly (Hasse pencil only).
    std::optional<RootSet> equality_roots;
    /// Squarefree polynomial whose roots are the distinct j(f) over all classes.
    UniPoly class_j_values;

    std::size_t class_count() const { return static_cast<std::size_t>(class_j_values.degree()); }
    unsigned total_multiplicity() const { return roots.total_multiplicity(); }

    /// Multiplicity-weighted count of roots whose j(f) is the rational v.
    unsigned multiplicity_with_family_j(const Rational& v) const {
        unsigned n = 0;
        const UniPoly target = UniPoly::variable() - UniPoly(v);
        for (const auto& g : groups)
            if (g.j_family == target) n += g.multiplicity * static_cast<unsigned>(g.factor.degree());
        return n;
    }
};

namespace detail {

struct JFunctions {
    RationalFn family, hessian, macaulay;
};

/// Evaluates the three j-functions on the roots of `factor` and returns their
/// minimal polynomials.
inline RootGroup make_group(const UniPoly& factor, unsigned multiplicity, const JFunctions& j) {
    RootGroup g{factor.monic(), multiplicity, {}, {}, {}};
    if (factor.degree() == 1) {
        const Rational r = -g.factor.coeff(0);
        auto mp = [&](const RationalFn& f) { return UniPoly::variable() - UniPoly(evaluate(f, r)); };
        g.j_family = mp(j.family);
        g.j_hessian = mp(j.hessian);
        g.j_macaulay = mp(j.macaulay);
        return g;
    }
    const FieldRef field = NumberField::create(g.factor, "a");
    const Scalar a = Scalar::generator(field);
    g.j_family = minimal_polynomial(evaluate(j.family, a));
    g.j_hessian = minimal_polynomial(evaluate(j.hessian, a));
    g.j_macaulay = minimal_polynomial(evaluate(j.macaulay, a));
    return g;
}

inline std::vector<RootGroup> make_groups(const RootSet& roots, const JFunctions& j) {
    std::vector<RootGroup> out;
    for (const auto& r : roots.rational_roots)
        out.push_back(make_group(UniPoly::variable() - UniPoly(r.value), r.multiplicity, j));
    for (const auto& f : roots.residual_factors) out.push_back(make_group(f.factor, f.multiplicity, j));
    return out;
}

inline UniPoly union_of_values(const std::vector<RootGroup>& groups, const std::vector<SpecialMember>& specials) {
    UniPoly acc(1L);
    for (const auto& g : groups) acc = lcm(acc, g.j_family);
    for (const auto& s : specials) acc = lcm(acc, s.j_family);
    return acc;
}

inline UniPoly value_poly(const Rational& v) { return UniPoly::variable() - UniPoly(v); }

}  // namespace detail

/// Binary quartics x y (x - y)(x + a y) whose Hessian and Macaulay polynomial
/// are projectively equivalent, via j(H_a) = j(M_a).
inline ClassificationReport classify_binary_quartics() {
    ClassificationReport rep;
    rep.family = "binary-quartics";
    const detail::JFunctions j{j_binary_family_fn(), j_binary_H_fn(), j_binary_M_fn()};
    auto eq = rf_equal_equation(j.hessian, j.macaulay);
    rep.poles = eq.poles;
    // a in {0, -1}: f_a degenerate; a in {1, -2, -1/2}: f_a is the Fermat quartic.
    for (const Rational& v : {Rational(0), Rational(1), Rational(-1), Rational(-2), Rational(-1, 2)}) {
        const UniPoly lin = detail::value_poly(v);
        bool removed = false;
        while (!eq.equation.is_zero() && (eq.equation % lin).is_zero()) {
            eq.equation = eq.equation / lin;
            removed = true;
        }
        if (removed) rep.context_excluded.push_back(v);
    }
    rep.equation = eq.equation.monic();
    rep.roots = extract_roots(rep.equation);
    rep.groups = detail::make_groups(rep.roots, j);

    const Scalar one(1L);
    SpecialMember fermat_member{detail::value_poly(1), "a = 1: f_1 is projectively the Fermat quartic; H_1 and M_1 "
                                                       "are both multiples of (x^2 + y^2)^2",
                                detail::value_poly(j_binary_quartic(binary_quartic(one).polynomial()).rational_value()),
                                equal_up_to_scalar(binary_H(one), binary_M(one)), false};
    fermat_member.hessian_singular = quartic_invariants(detail::binary_quartic_coefficients(binary_H(one)))
                                         .discriminant.is_zero();
    rep.special_members.push_back(std::move(fermat_member));
    rep.class_j_values = detail::union_of_values(rep.groups, rep.special_members);
    return rep;
}

/// Smooth plane cubics (as Hasse members f_a) whose Hessian and Macaulay
/// polynomial are projectively equivalent.
inline ClassificationReport classify_hasse_cubics() {
    ClassificationReport rep;
    rep.family = "hasse-cubics";
    const RationalFn b = hasse_hessian_param_fn(), c = hasse_macaulay_param_fn(), jf = j_hasse_fn();
    const detail::JFunctions j{jf, compose(jf, b), compose(jf, c)};

    rep.equality_roots = extract_roots(rf_equal_equation(b, c).equation.monic());

    auto eq = rf_equal_equation(j.hessian, j.macaulay);
    rep.poles = eq.poles;
    rep.equation = eq.equation.monic();
    rep.roots = extract_roots(rep.equation);
    rep.groups = detail::make_groups(rep.roots, j);

    rep.special_members.push_back({detail::value_poly(0), "a = 0: Fermat cubic, H_0 = M_0 = xyz",
                                   detail::value_poly(0), true, false});
    // Equality members that are poles of the j-equation: Hess and Mac coincide
    // but are singular members of the pencil.
    auto add_pole_members = [&](const UniPoly& factor, const std::string& note, bool equal) {
        if (gcd(factor, rep.poles).degree() < factor.degree()) return;
        const auto g = detail::make_group(factor, 1, {jf, jf, jf});
        rep.special_members.push_back({g.factor, note, g.j_family, equal, true});
    };
    for (const auto& r : rep.equality_roots->rational_roots)
        add_pole_members(detail::value_poly(r.value), "H_a = M_a with both singular (b^3 = c^3 = 1)", true);
    for (const auto& f : rep.equality_roots->residual_factors)
        add_pole_members(f.factor, "H_a = M_a with both singular (b^3 = c^3 = 1)", true);
    // a^2 - 2a + 4: the two conjugate members exchange Hessian and Macaulay polynomial.
    add_pole_members(UniPoly(std::vector<Rational>{4, -2, 1}),
                     "a = 1 +- sqrt(-3): H_a = M_conj(a), both singular", false);

    rep.class_j_values = detail::union_of_values(rep.groups, rep.special_members);
    return rep;
}

/// Parameters a with j(f_a) = 0: {0, -2} and the roots of a^2 - 2a + 4
/// (returned as beta and 2 - beta in Q(beta)).
inline std::vector<Scalar> equianharmonic_hasse() {
    const RootSet roots = extract_roots(j_hasse_fn().numerator());
    std::vector<Scalar> out;
    for (const auto& r : roots.rational_roots) {
        const Scalar a(r.value);
        if (!a.pow(3).is_one()) out.push_back(a);
    }
    for (const auto& f : roots.residual_factors) {
        if (f.factor.degree() != 2) throw DomainError("unexpected non-quadratic factor " + f.factor.to_string());
        const FieldRef field = NumberField::create(f.factor, "b");
        const Scalar beta = Scalar::generator(field);
        const Scalar other = Scalar::in(field, -f.factor.coeff(1)) - beta;
        for (const auto& a : {beta, other})
            if (!a.pow(3).is_one()) out.push_back(a);
    }
    return out;
}

}  // namespace apolar
