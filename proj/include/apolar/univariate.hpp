#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "apolar/error.hpp"
#include "apolar/matrix.hpp"
#include "apolar/rational.hpp"

namespace apolar {

/// Dense univariate polynomial over Q, coefficients stored lowest degree first.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (sgn(c) != 0) c_.push_back(c);
    }
    UniPoly(long c) : UniPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit UniPoly(std::vector<Rational> low_first) : c_(std::move(low_first)) { trim(); }

    static UniPoly variable() { return monomial(1, 1); }
    static UniPoly monomial(const Rational& c, std::size_t k) {
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = c;
        return UniPoly(std::move(v));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(Rational(1) / leading());
    }

    UniPoly scaled(const Rational& s) const {
        if (sgn(s) == 0) return {};
        UniPoly r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> v(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * Rational(static_cast<long>(k));
        return UniPoly(std::move(v));
    }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly operator-() const { return scaled(-1); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
        return UniPoly(std::move(v));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(v));
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            Rational c = c_[k];
            if (sgn(c) == 0) continue;
            if (!first) {
                os << (sgn(c) < 0 ? " - " : " + ");
                c = abs(c);
            } else if (sgn(c) < 0 && k > 0 && c == -1) {
                os << '-';
                c = 1;
            }
            first = false;
            if (k == 0) {
                os << c.get_str();
                continue;
            }
            if (c != 1) os << c.get_str() << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline UniPoly pow(const UniPoly& base, unsigned long e) {
    UniPoly r(1L);
    UniPoly b = base;
    while (e != 0) {
        if (e & 1UL) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

/// Euclidean division; returns (quotient, remainder).
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const auto db = static_cast<std::size_t>(b.degree());
    if (rem.size() <= db) return {UniPoly(), a};
    std::vector<Rational> quot(rem.size() - db, Rational(0));
    const Rational lead_inv = Rational(1) / b.leading();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (sgn(rem[k]) == 0) continue;
        Rational q = rem[k] * lead_inv;
        quot[k - db] = q;
        for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= q * b.coeff(i);
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

inline UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
inline UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

/// Monic gcd; gcd(0, 0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline UniPoly lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return (a * b / gcd(a, b)).monic();
}

struct ExtendedGcd {
    UniPoly gcd;  // monic
    UniPoly s;
    UniPoly t;  // s*a + t*b = gcd
};

inline ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b, s0(1L), s1, t0, t1(1L);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Rational inv = Rational(1) / r0.leading();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Resultant via the Sylvester matrix determinant.
inline Rational resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const auto m = static_cast<std::size_t>(a.degree());
    const auto n = static_cast<std::size_t>(b.degree());
    if (m + n == 0) return 1;
    Matrix<Rational> s(m + n, m + n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s(i, i + k) = a.coeff(m - k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s(n + i, i + k) = b.coeff(n - k);
    return determinant(std::move(s));
}

/// Yun's squarefree decomposition: p = lc(p) * prod f_i^i with the f_i monic,
/// squarefree and pairwise coprime. Constant factors are omitted.
inline std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("squarefree decomposition of zero");
    std::vector<std::pair<UniPoly, unsigned>> out;
    if (p.degree() < 1) return out;
    const UniPoly a = p.monic();
    const UniPoly da = a.derivative();
    const UniPoly c = gcd(a, da);
    UniPoly w = a / c;
    UniPoly y = da / c;
    UniPoly z = y - w.derivative();
    unsigned i = 1;
    while (w.degree() > 0) {
        UniPoly g = gcd(w, z);
        if (g.degree() > 0) out.emplace_back(g, i);
        w = w / g;
        y = z / g;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

inline UniPoly squarefree_part(const UniPoly& p) {
    UniPoly r(1L);
    for (const auto& [f, m] : squarefree_decomposition(p)) r *= f;
    return r;
}

/// Scales p to a primitive polynomial with integer coefficients and positive
/// leading coefficient.
inline std::vector<Integer> primitive_integer_coefficients(const UniPoly& p) {
    Integer den_lcm = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> v;
    Integer content = 0;
    for (const auto& c : p.coefficients()) {
        Integer x = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        v.push_back(x);
    }
    if (content == 0) return v;
    if (sgn(p.leading()) < 0) content = -content;
    for (auto& x : v) x /= content;
    return v;
}

namespace detail {

inline Integer pollard_brent(const Integer& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        auto step = [&](const Integer& v) { return Integer((v * v + c) % n); };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            Integer diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

inline void factor_into(Integer n, std::vector<Integer>& primes) {
    if (n <= 1) return;
    for (unsigned long p = 2; p < 1000; ++p) {
        while (n % p == 0) {
            primes.emplace_back(p);
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        primes.push_back(n);
        return;
    }
    Integer d = pollard_brent(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

/// Positive divisors of |n|, n != 0.
inline std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> primes;
    factor_into(abs(n), primes);
    std::sort(primes.begin(), primes.end());
    std::vector<Integer> divs{1};
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        const std::size_t existing = divs.size();
        Integer pk = 1;
        for (std::size_t e = i; e < j; ++e) {
            pk *= primes[i];
            for (std::size_t k = 0; k < existing; ++k) divs.push_back(divs[k] * pk);
        }
        i = j;
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

inline Integer eval_integer(const std::vector<Integer>& c, const Integer& x) {
    Integer acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace detail

/// Distinct rational roots in increasing order (rational-root theorem).
inline std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
    std::vector<Rational> roots;
    UniPoly q = squarefree_part(p);
    if (sgn(q.coeff(0)) == 0) {
        roots.emplace_back(0);
        q = q / UniPoly::variable();
    }
    if (q.degree() >= 1) {
        const auto c = primitive_integer_coefficients(q);
        const Integer f1 = detail::eval_integer(c, 1);
        const Integer fm1 = detail::eval_integer(c, -1);
        for (const auto& num : detail::divisors(c.front())) {
            for (const auto& den : detail::divisors(c.back())) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                if (g != 1) continue;
                for (int s : {1, -1}) {
                    const Integer pn = num * s;
                    // For a root pn/den of an integer polynomial, (den - pn) | f(1)
                    // and (den + pn) | f(-1).
                    const Integer dm = den - pn, dp = den + pn;
                    if (dm != 0 && f1 % dm != 0) continue;
                    if (dp != 0 && fm1 % dp != 0) continue;
                    Rational r = make_rational(pn, den);
                    if (sgn(q(r)) == 0) roots.push_back(r);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

struct RationalRoot {
    Rational value;
    unsigned multiplicity;
};

struct ResidualFactor {
    UniPoly factor;  // monic, squarefree, degree >= 2, no rational roots
    unsigned multiplicity;
    /// Set for quadratic factors t^2 + p t + q: p^2 - 4q.
    std::optional<Rational> discriminant;
};

/// Rational roots with multiplicity plus the squarefree-decomposed remainder.
/// p = leading * prod (t - r)^m * prod f^k.
struct RootSet {
    Rational leading;
    std::vector<RationalRoot> rational_roots;
    std::vector<ResidualFactor> residual_factors;

    unsigned total_multiplicity() const {
        unsigned n = 0;
        for (const auto& r : rational_roots) n += r.multiplicity;
        for (const auto& f : residual_factors) n += f.multiplicity * static_cast<unsigned>(f.factor.degree());
        return n;
    }

    UniPoly reconstruct() const {
        UniPoly r(leading);
        for (const auto& root : rational_roots)
            r *= pow(UniPoly::variable() - UniPoly(root.value), root.multiplicity);
        for (const auto& f : residual_factors) r *= pow(f.factor, f.multiplicity);
        return r;
    }
};

inline RootSet extract_roots(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
    RootSet out{p.leading(), {}, {}};
    UniPoly rest = p.monic();
    for (const auto& r : rational_roots(p)) {
        const UniPoly lin = UniPoly::variable() - UniPoly(r);
        unsigned m = 0;
        for (;;) {
            auto [q, rem] = divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = std::move(q);
            ++m;
        }
        out.rational_roots.push_back({r, m});
    }
    for (auto& [f, m] : squarefree_decomposition(rest)) {
        std::optional<Rational> disc;
        if (f.degree() == 2) disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(0);
        out.residual_factors.push_back({f, m, disc});
    }
    return out;
}

/// Univariate rational function over Q; numerator and denominator coprime,
/// denominator monic.
class RationalFn {
public:
    RationalFn() : den_(1L) {}
    RationalFn(const Rational& c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
    RationalFn(long c) : RationalFn(Rational(c)) {}        // NOLINT(google-explicit-constructor)
    RationalFn(const UniPoly& p) : num_(p), den_(1L) {}    // NOLINT(google-explicit-constructor)
    RationalFn(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RationalFn variable() { return RationalFn(UniPoly::variable()); }

    const UniPoly& numerator() const noexcept { return num_; }
    const UniPoly& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RationalFn operator-() const { return RationalFn(-num_, den_); }
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        if (b.is_zero()) throw DivisionByZero("rational function division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
    RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::string& var = "t") const {
        if (den_ == UniPoly(1L)) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = UniPoly(1L);
            return;
        }
        UniPoly g = gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
        const Rational lc = den_.leading();
        num_ = num_.scaled(Rational(1) / lc);
        den_ = den_.scaled(Rational(1) / lc);
    }

    UniPoly num_;
    UniPoly den_;
};

inline bool is_zero(const RationalFn& f) { return f.is_zero(); }
inline RationalFn zero_like(const RationalFn&) { return {}; }
inline RationalFn one_like(const RationalFn&) { return RationalFn(1L); }
inline Rational lift_like(const Rational&, const Rational& c) { return c; }
inline RationalFn lift_like(const RationalFn&, const Rational& c) { return RationalFn(c); }

/// Horner evaluation of p at x in any ring that admits `lift_like`.
template <class T>
T evaluate(const UniPoly& p, const T& x) {
    T acc = lift_like(x, Rational(0));
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + lift_like(x, *it);
    return acc;
}

template <class T>
T evaluate(const RationalFn& f, const T& x) {
    T den = evaluate(f.denominator(), x);
    if (is_zero(den)) throw PoleAtPoint("rational function has a pole at the evaluation point");
    return evaluate(f.numerator(), x) / den;
}

/// f(g(t)).
inline RationalFn compose(const RationalFn& f, const RationalFn& g) { return evaluate(f, g); }

inline RationalFn rf_sub(const RationalFn& f, const RationalFn& g) { return f - g; }

/// The equation f = g with its inadmissible parameter values.
struct ParameterEquation {
    /// Numerator of f - g with every factor shared with `poles` divided out.
    UniPoly equation;
    /// Squarefree monic polynomial whose roots are the poles of f or g.
    UniPoly poles;
};

inline ParameterEquation rf_equal_equation(const RationalFn& f, const RationalFn& g) {
    const UniPoly poles = squarefree_part(lcm(f.denominator(), g.denominator()));
    UniPoly eq = rf_sub(f, g).numerator();
    if (!eq.is_zero()) {
        for (UniPoly c = gcd(eq, poles); c.degree() > 0; c = gcd(eq, poles)) eq = eq / c;
    }
    return {eq, poles};
}

/// Minimal annihilating monic polynomial of the vectors v_0, v_1, ... produced by
/// `next`, found by the first linear dependency (Krylov sequence). `dim` bounds
/// the search.
template <class Next>
UniPoly krylov_minimal_polynomial(std::vector<Rational> v0, std::size_t dim, Next next) {
    std::vector<std::vector<Rational>> seq{std::move(v0)};
    for (std::size_t k = 1; k <= dim; ++k) {
        seq.push_back(next(seq.back()));
        Matrix<Rational> m(dim, seq.size(), Rational(0));
        for (std::size_t j = 0; j < seq.size(); ++j)
            for (std::size_t i = 0; i < dim; ++i) m(i, j) = seq[j][i];
        auto ker = kernel_basis(m);
        if (!ker.empty()) return UniPoly(std::move(ker.front())).monic();
    }
    throw Error("no linear dependency within the ambient dimension");
}

}  // namespace apolar
