#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "apolar/error.hpp"
#include "apolar/matrix.hpp"
#include "apolar/rational.hpp"
#include "apolar/univariate.hpp"

namespace apolar {

class NumberField;
/// Null means Q.
using FieldRef = std::shared_ptr<const NumberField>;

/// Q(alpha) = Q[t]/(m(t)) for a monic squarefree m. Irreducibility is not
/// checked; a reducible modulus shows up as NotInvertible on division.
class NumberField {
public:
    static FieldRef create(const UniPoly& minimal_polynomial, std::string symbol) {
        if (minimal_polynomial.degree() < 1)
            throw DomainError("minimal polynomial must have degree >= 1");
        UniPoly m = minimal_polynomial.monic();
        if (gcd(m, m.derivative()).degree() > 0)
            throw NotSquarefree("minimal polynomial " + m.to_string() + " is not squarefree");
        return FieldRef(new NumberField(std::move(m), std::move(symbol)));
    }

    /// Q(sqrt(d)), displayed as `sqrt(d)`.
    static FieldRef quadratic(const Rational& d) {
        return create(UniPoly::monomial(1, 2) - UniPoly(d), "sqrt(" + d.get_str() + ")");
    }

    std::size_t degree() const noexcept { return static_cast<std::size_t>(minimal_polynomial_.degree()); }
    const UniPoly& minimal_polynomial() const noexcept { return minimal_polynomial_; }
    const std::string& symbol() const noexcept { return symbol_; }

private:
    NumberField(UniPoly m, std::string symbol) : minimal_polynomial_(std::move(m)), symbol_(std::move(symbol)) {}

    UniPoly minimal_polynomial_;
    std::string symbol_;
};

inline bool same_field(const FieldRef& a, const FieldRef& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->minimal_polynomial() == b->minimal_polynomial();
}

inline std::size_t field_degree(const FieldRef& f) { return f ? f->degree() : 1; }

inline std::string field_name(const FieldRef& f) {
    if (!f) return "QQ";
    return "QQ(" + f->symbol() + ") with " + f->minimal_polynomial().to_string(f->symbol()) + " = 0";
}

/// Element of Q or of a NumberField, kept reduced modulo the minimal polynomial.
class Scalar {
public:
    Scalar() : c_{Rational(0)} {}
    Scalar(const Rational& q) : c_{q} {}                   // NOLINT(google-explicit-constructor)
    Scalar(long q) : c_{Rational(q)} {}                    // NOLINT(google-explicit-constructor)

    static Scalar in(const FieldRef& field, const Rational& q) {
        Scalar s;
        s.field_ = field;
        s.c_.assign(field_degree(field), Rational(0));
        s.c_[0] = q;
        return s;
    }
    static Scalar zero(const FieldRef& field) { return in(field, 0); }
    static Scalar one(const FieldRef& field) { return in(field, 1); }
    static Scalar generator(const FieldRef& field) {
        if (!field) throw DomainError("Q has no generator");
        return from_poly(field, UniPoly::variable());
    }
    /// p(alpha) reduced modulo the minimal polynomial.
    static Scalar from_poly(const FieldRef& field, const UniPoly& p) {
        Scalar s = zero(field);
        const UniPoly r = field ? p % field->minimal_polynomial() : p;
        for (std::size_t k = 0; k < s.c_.size(); ++k) s.c_[k] = r.coeff(k);
        return s;
    }

    const FieldRef& field() const noexcept { return field_; }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    UniPoly as_poly() const { return UniPoly(c_); }

    bool is_zero() const {
        for (const auto& x : c_)
            if (sgn(x) != 0) return false;
        return true;
    }
    bool is_one() const { return *this == one(field_); }
    bool is_rational() const {
        for (std::size_t k = 1; k < c_.size(); ++k)
            if (sgn(c_[k]) != 0) return false;
        return true;
    }
    Rational rational_value() const {
        if (!is_rational()) throw DomainError("scalar " + to_string() + " is not rational");
        return c_[0];
    }

    /// The same value viewed in `target`; only Q embeds into other fields.
    Scalar embedded(const FieldRef& target) const {
        if (same_field(field_, target)) return *this;
        if (field_) throw FieldMismatch("cannot move " + to_string() + " into " + field_name(target));
        return in(target, c_[0]);
    }

    Scalar operator-() const {
        Scalar r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        check(a, b);
        Scalar r = a;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        check(a, b);
        Scalar r = a;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        check(a, b);
        if (!a.field_) return Scalar(a.c_[0] * b.c_[0]);
        return from_poly(a.field_, a.as_poly() * b.as_poly());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        if (!field_) return Scalar(Rational(1) / c_[0]);
        const auto eg = extended_gcd(as_poly(), field_->minimal_polynomial());
        if (eg.gcd.degree() > 0)
            throw NotInvertible(to_string() + " is a zero divisor modulo " +
                                field_->minimal_polynomial().to_string(field_->symbol()));
        return from_poly(field_, eg.s);
    }

    Scalar pow(unsigned long e) const {
        Scalar r = one(field_);
        Scalar b = *this;
        while (e != 0) {
            if (e & 1UL) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return same_field(a.field_, b.field_) && a.c_ == b.c_;
    }

    /// Rational as `p` or `p/q`; extension elements as `c0+c1*a+...` in the
    /// field's symbol, lowest power first.
    std::string to_string() const {
        if (!field_) return c_[0].get_str();
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            Rational c = c_[k];
            if (sgn(c) == 0) continue;
            if (!first) os << (sgn(c) < 0 ? "-" : "+");
            else if (sgn(c) < 0 && k > 0) os << "-";
            if (!first || k > 0) c = abs(c);
            first = false;
            if (k == 0) {
                os << c.get_str();
                continue;
            }
            if (c != 1) os << c.get_str() << '*';
            os << field_->symbol();
            if (k > 1) os << '^' << k;
        }
        return first ? "0" : os.str();
    }

    /// Number of nonzero terms in the `to_string` rendering.
    std::size_t term_count() const {
        std::size_t n = 0;
        for (const auto& x : c_)
            if (sgn(x) != 0) ++n;
        return n;
    }

private:
    static void check(const Scalar& a, const Scalar& b) {
        if (!same_field(a.field_, b.field_))
            throw FieldMismatch("scalars from " + field_name(a.field_) + " and " + field_name(b.field_));
    }

    FieldRef field_;
    std::vector<Rational> c_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline Scalar zero_like(const Scalar& s) { return Scalar::zero(s.field()); }
inline Scalar one_like(const Scalar& s) { return Scalar::one(s.field()); }
inline Scalar lift_like(const Scalar& s, const Rational& q) { return Scalar::in(s.field(), q); }

/// Minimal polynomial over Q of an element of a NumberField (of the
/// multiplication-by-x map). For a reducible modulus this is the lcm of the
/// minimal polynomials on each component, so its roots are exactly the values
/// the element takes over the roots of the modulus.
inline UniPoly minimal_polynomial(const Scalar& x) {
    if (!x.field()) return UniPoly::variable() - UniPoly(x.coefficients()[0]);
    const FieldRef f = x.field();
    return krylov_minimal_polynomial(Scalar::one(f).coefficients(), f->degree(),
                                     [&](const std::vector<Rational>& v) {
                                         Scalar s = Scalar::from_poly(f, UniPoly(v));
                                         return (s * x).coefficients();
                                     });
}

/// Roots -p/2 +- c*sqrt(s) of a monic quadratic t^2 + p t + q, expressed in
/// Q(sqrt(s)) with s the squarefree integer part of the discriminant. Fails
/// with DomainError when the discriminant is a rational square.
inline std::pair<Scalar, Scalar> radical_roots_of_quadratic(const UniPoly& quadratic) {
    if (quadratic.degree() != 2) throw DegreeMismatch("expected a quadratic");
    const UniPoly m = quadratic.monic();
    const Rational disc = m.coeff(1) * m.coeff(1) - 4 * m.coeff(0);
    // disc = num/den = num*den / den^2; write num*den = s * k^2 with s squarefree.
    Integer nd = disc.get_num() * disc.get_den();
    std::vector<Integer> primes;
    detail::factor_into(abs(nd), primes);
    Integer s = sgn(nd) < 0 ? -1 : 1, k = 1;
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        for (std::size_t e = 0; e + 1 < j - i; e += 2) k *= primes[i];
        if ((j - i) % 2 == 1) s *= primes[i];
        i = j;
    }
    if (s == 1) throw DomainError("quadratic " + m.to_string() + " has rational roots");
    const FieldRef f = NumberField::quadratic(Rational(s));
    const Scalar half_b = Scalar::in(f, -m.coeff(1) / 2);
    const Scalar root = Scalar::generator(f) * Scalar::in(f, make_rational(k, disc.get_den()) / 2);
    return {half_b + root, half_b - root};
}

}  // namespace apolar
