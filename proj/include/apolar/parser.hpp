#pragma once

// Polynomial expressions such as "(x+y)^3 + y^3 + z^3" or "(1+sqrt(3))*x*y".
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*        divisors must be constant
//   unary := ('-' | '+') unary | power
//   power := atom ('^' INTEGER)?
//   atom  := INTEGER | IDENT | 'sqrt' '(' ['-'] INTEGER ['/' INTEGER] ')' | '(' expr ')'
//
// Identifiers are matched case-insensitively. Juxtaposition is not
// multiplication: "xy" is a single (unknown) identifier.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "apolar/error.hpp"
#include "apolar/matrix.hpp"
#include "apolar/multipoly.hpp"
#include "apolar/number_field.hpp"
#include "apolar/rational.hpp"

namespace apolar {

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Parse tree of a polynomial expression.
struct PolyExpr {
    enum class Kind { Number, Variable, Sqrt, Negate, Sum, Difference, Product, Quotient, Power, Group };

    Kind kind = Kind::Number;
    SourcePos pos;
    Rational number;   // Number; radicand for Sqrt
    std::string name;  // Variable, lower-cased
    unsigned exponent = 0;
    std::vector<PolyExpr> children;
};

namespace detail {

inline std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    PolyExpr parse() {
        skip_space();
        if (at_end()) fail("empty expression");
        PolyExpr e = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + s_[i_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_.line, pos_.column); }

    bool at_end() const { return i_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[i_]; }

    void advance() {
        if (s_[i_] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        ++i_;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
    }

    bool accept(char c) {
        skip_space();
        if (peek() != c) return false;
        advance();
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    static PolyExpr node(PolyExpr::Kind k, SourcePos p, std::vector<PolyExpr> ch) {
        PolyExpr e;
        e.kind = k;
        e.pos = p;
        e.children = std::move(ch);
        return e;
    }

    PolyExpr expr() {
        PolyExpr lhs = term();
        for (;;) {
            skip_space();
            const SourcePos p = pos_;
            if (accept('+')) lhs = node(PolyExpr::Kind::Sum, p, {std::move(lhs), term()});
            else if (accept('-')) lhs = node(PolyExpr::Kind::Difference, p, {std::move(lhs), term()});
            else return lhs;
        }
    }

    PolyExpr term() {
        PolyExpr lhs = unary();
        for (;;) {
            skip_space();
            const SourcePos p = pos_;
            if (accept('*')) lhs = node(PolyExpr::Kind::Product, p, {std::move(lhs), unary()});
            else if (accept('/')) lhs = node(PolyExpr::Kind::Quotient, p, {std::move(lhs), unary()});
            else return lhs;
        }
    }

    PolyExpr unary() {
        skip_space();
        const SourcePos p = pos_;
        if (accept('-')) return node(PolyExpr::Kind::Negate, p, {unary()});
        if (accept('+')) return unary();
        return power();
    }

    PolyExpr power() {
        PolyExpr base = atom();
        skip_space();
        const SourcePos p = pos_;
        if (!accept('^')) return base;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a non-negative integer");
        const Integer n = integer();
        if (n > 1000000) fail("exponent too large");
        PolyExpr e = node(PolyExpr::Kind::Power, p, {std::move(base)});
        e.exponent = static_cast<unsigned>(n.get_ui());
        skip_space();
        if (peek() == '^') fail("chained exponents need parentheses");
        return e;
    }

    Integer integer() {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        return Integer(digits);
    }

    PolyExpr atom() {
        skip_space();
        const SourcePos p = pos_;
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            PolyExpr e = node(PolyExpr::Kind::Number, p, {});
            e.number = Rational(integer());
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                id += peek();
                advance();
            }
            id = lower(id);
            skip_space();
            if (id == "sqrt" && peek() == '(') return sqrt_atom(p);
            PolyExpr e = node(PolyExpr::Kind::Variable, p, {});
            e.name = id;
            return e;
        }
        if (accept('(')) {
            PolyExpr inner = expr();
            expect(')');
            return node(PolyExpr::Kind::Group, p, {std::move(inner)});
        }
        if (at_end()) fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }

    PolyExpr sqrt_atom(SourcePos p) {
        expect('(');
        skip_space();
        const bool neg = accept('-');
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("sqrt takes a rational literal");
        Rational d(integer());
        if (accept('/')) {
            skip_space();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("sqrt takes a rational literal");
            const Integer den = integer();
            if (den == 0) fail("zero denominator");
            d /= Rational(den);
        }
        expect(')');
        PolyExpr e = node(PolyExpr::Kind::Sqrt, p, {});
        e.number = neg ? Rational(-d) : d;
        return e;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    SourcePos pos_;
};

inline void collect(const PolyExpr& e, std::set<std::string>* names, std::vector<const PolyExpr*>* roots) {
    if (e.kind == PolyExpr::Kind::Variable && names) names->insert(e.name);
    if (e.kind == PolyExpr::Kind::Sqrt && roots) roots->push_back(&e);
    for (const auto& c : e.children) collect(c, names, roots);
}

/// Square root of q when q is a rational square.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    const Integer n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    return make_rational(sqrt(n), sqrt(d));
}

}  // namespace detail

inline PolyExpr parse_expression(const std::string& text) { return detail::ExprParser(text).parse(); }

/// Lower-cased identifiers used in the expression.
inline std::set<std::string> identifiers(const PolyExpr& e) {
    std::set<std::string> names;
    detail::collect(e, &names, nullptr);
    return names;
}

/// The one radicand d used by sqrt(d) across all expressions, if any.
/// Rational squares such as sqrt(9/4) need no extension and never conflict.
inline std::optional<Rational> sqrt_radicand(const std::vector<const PolyExpr*>& exprs) {
    std::vector<const PolyExpr*> roots;
    for (const auto* e : exprs) detail::collect(*e, nullptr, &roots);
    std::optional<Rational> d;
    for (const auto* r : roots) {
        if (detail::rational_sqrt(r->number)) continue;
        if (d && *d != r->number)
            throw SyntaxError("sqrt(" + r->number.get_str() + ") conflicts with sqrt(" + d->get_str() + ")",
                              r->pos.line, r->pos.column);
        d = r->number;
    }
    return d;
}

/// Q for rational squares, Q(sqrt(d)) otherwise.
inline FieldRef field_for_radicand(const std::optional<Rational>& d) {
    if (!d || detail::rational_sqrt(*d)) return nullptr;
    return NumberField::quadratic(*d);
}

namespace detail {

inline Scalar sqrt_value(const Rational& d, const FieldRef& field) {
    if (auto r = rational_sqrt(d)) return Scalar::in(field, *r);
    if (!field || field->minimal_polynomial() != UniPoly::monomial(1, 2) - UniPoly(d))
        throw FieldMismatch("sqrt(" + d.get_str() + ") is not in " + field_name(field));
    return Scalar::generator(field);
}

}  // namespace detail

/// Evaluates a parse tree. `vars` gives the ring's variable names (matched
/// case-insensitively); sqrt literals must live in `field`.
inline MultiPoly evaluate(const PolyExpr& e, const std::vector<std::string>& vars, const FieldRef& field) {
    using K = PolyExpr::Kind;
    const std::size_t n = vars.size();
    switch (e.kind) {
        case K::Number: return MultiPoly::constant(n, Scalar::in(field, e.number));
        case K::Sqrt: return MultiPoly::constant(n, detail::sqrt_value(e.number, field));
        case K::Variable: {
            for (std::size_t i = 0; i < n; ++i)
                if (detail::lower(vars[i]) == e.name) return MultiPoly::variable(n, i, field);
            std::ostringstream msg;
            msg << "unknown variable '" << e.name << "' at " << e.pos.line << ":" << e.pos.column;
            throw UnknownVariable(msg.str());
        }
        case K::Negate: return -evaluate(e.children[0], vars, field);
        case K::Group: return evaluate(e.children[0], vars, field);
        case K::Sum: return evaluate(e.children[0], vars, field) + evaluate(e.children[1], vars, field);
        case K::Difference: return evaluate(e.children[0], vars, field) - evaluate(e.children[1], vars, field);
        case K::Product: return evaluate(e.children[0], vars, field) * evaluate(e.children[1], vars, field);
        case K::Quotient: {
            const MultiPoly num = evaluate(e.children[0], vars, field);
            const MultiPoly den = evaluate(e.children[1], vars, field);
            if (den.degree() > 0) throw SyntaxError("division by a non-constant", e.pos.line, e.pos.column);
            if (den.is_zero()) throw DivisionByZero("division by zero");
            return num.scaled(den.leading_coefficient().inverse());
        }
        case K::Power: return evaluate(e.children[0], vars, field).pow(e.exponent);
    }
    throw Error("bad expression node");
}

/// Smallest prefix of x, y, z, w, t (at least two names) covering the
/// identifiers of all expressions.
inline std::vector<std::string> infer_variables(const std::vector<const PolyExpr*>& exprs) {
    static const std::vector<std::string> order{"x", "y", "z", "w", "t"};
    std::size_t need = 2;
    for (const auto* e : exprs) {
        for (const auto& id : identifiers(*e)) {
            const auto it = std::find(order.begin(), order.end(), id);
            if (it == order.end())
                throw UnknownVariable("unknown variable '" + id + "'; declare the ring with --vars");
            need = std::max(need, static_cast<std::size_t>(it - order.begin()) + 1);
        }
    }
    return {order.begin(), order.begin() + static_cast<long>(need)};
}

/// parse + evaluate for one expression; the field comes from its sqrt literals.
inline MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    const PolyExpr e = parse_expression(text);
    return evaluate(e, vars, field_for_radicand(sqrt_radicand({&e})));
}

/// Several expressions over one ring and one field. Empty `vars` means infer.
struct ParsedInputs {
    std::vector<std::string> vars;
    FieldRef field;
    std::vector<MultiPoly> polys;
};

inline ParsedInputs parse_polys(const std::vector<std::string>& texts, std::vector<std::string> vars = {},
                                const std::vector<std::string>& extra_constants = {}) {
    std::vector<PolyExpr> trees;
    for (const auto& t : texts) trees.push_back(parse_expression(t));
    for (const auto& t : extra_constants) trees.push_back(parse_expression(t));
    std::vector<const PolyExpr*> ptrs;
    for (const auto& t : trees) ptrs.push_back(&t);
    const std::vector<const PolyExpr*> poly_ptrs(ptrs.begin(), ptrs.begin() + static_cast<long>(texts.size()));
    if (vars.empty()) vars = infer_variables(poly_ptrs);
    ParsedInputs out{vars, field_for_radicand(sqrt_radicand(ptrs)), {}};
    for (const auto* p : ptrs) out.polys.push_back(evaluate(*p, out.vars, out.field));
    return out;
}

/// One row per line (or ';'), entries separated by whitespace. Entries are
/// constant expressions without spaces, e.g. "1/2", "-3", "sqrt(3)".
inline std::vector<std::vector<std::string>> split_matrix_text(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ';', '\n');
    std::istringstream in(normalized);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> row;
        for (std::string tok; ls >> tok;) row.push_back(tok);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InputError("empty matrix");
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw InputError("matrix must be square");
    return rows;
}

}  // namespace apolar
