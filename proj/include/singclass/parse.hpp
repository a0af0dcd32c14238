// Recursive-descent parser for polynomial expressions.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | atom ['^' uint]
//   atom   := uint | 'sqrt' '(' uint ')' | identifier | '(' expr ')'
//
// Multiplication is explicit, whitespace is ignored, division is only by
// nonzero constants.  Errors carry the byte offset of the offending token.
#pragma once

#include "poly.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

namespace singclass {

namespace detail_p {

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c))
            throw parse_error(std::string("expected '") + c + "'", pos);
    }
    std::optional<Int> integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) return std::nullopt;
        return Int(text.substr(start, pos - start));
    }
    std::optional<std::string> identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() &&
            (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                    text[pos] == '_'))
                ++pos;
            return text.substr(start, pos - start);
        }
        return std::nullopt;
    }
};

class Parser {
public:
    Parser(const std::string& text, std::vector<std::string> vars)
        : scan_{text}, vars_(std::move(vars)) {}

    Poly parse() {
        Poly p = expr();
        if (!scan_.eof())
            throw parse_error("unexpected trailing input", scan_.pos);
        return p;
    }

private:
    Scanner scan_;
    std::vector<std::string> vars_;

    Poly expr() {
        Poly acc = scan_.consume('-') ? -term() : term();
        for (;;) {
            if (scan_.consume('+'))
                acc = acc + term();
            else if (scan_.consume('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (scan_.consume('*')) {
                acc = acc * factor();
            } else if (scan_.consume('/')) {
                std::size_t at = scan_.pos;
                Poly d = factor();
                if (!d.is_constant() || d.is_zero())
                    throw parse_error("division only by nonzero constants", at);
                acc = acc * d.constant_value().inverse();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        if (scan_.consume('-')) return -factor();
        Poly base = atom();
        if (scan_.consume('^')) {
            std::size_t at = scan_.pos;
            auto e = scan_.integer();
            if (!e) throw parse_error("expected integer exponent after '^'", at);
            if (*e > 100000) throw parse_error("exponent too large", at);
            return base.pow(e->convert_to<unsigned long long>());
        }
        return base;
    }

    Poly atom() {
        std::size_t at = scan_.pos;
        if (scan_.consume('(')) {
            Poly p = expr();
            scan_.expect(')');
            return p;
        }
        if (auto n = scan_.integer()) return Poly::constant(vars_, Scalar(*n));
        if (auto name = scan_.identifier()) {
            if (*name == "sqrt") {
                scan_.expect('(');
                std::size_t nat = scan_.pos;
                auto n = scan_.integer();
                if (!n) throw parse_error("expected integer radicand", nat);
                scan_.expect(')');
                if (*n > std::numeric_limits<long long>::max())
                    throw parse_error("radicand too large", nat);
                long long rad = n->convert_to<long long>();
                if (rad < 2 || !is_square_free(rad))
                    throw parse_error("radicand must be square-free and > 1", nat);
                return Poly::constant(vars_, Scalar::sqrt_of(rad));
            }
            for (const std::string& v : vars_)
                if (v == *name) return Poly::var(vars_, *name);
            throw parse_error("unknown variable '" + *name + "'", at);
        }
        throw parse_error("expected a number, variable, or '('", at);
    }
};

// Identifiers other than sqrt, in order of first appearance.
inline std::vector<std::string> scan_variables(const std::string& text) {
    Scanner s{text};
    std::vector<std::string> vars;
    while (!s.eof()) {
        if (auto name = s.identifier()) {
            if (*name != "sqrt" &&
                std::find(vars.begin(), vars.end(), *name) == vars.end())
                vars.push_back(*name);
        } else {
            ++s.pos;
        }
    }
    return vars;
}

}  // namespace detail_p

// Parse over a fixed variable list, or (by default) over the variables that
// appear, falling back to the single variable "s" for constant input.
inline Poly parse_poly(const std::string& text,
                       std::optional<std::vector<std::string>> vars = std::nullopt) {
    std::vector<std::string> vlist;
    if (vars) {
        vlist = std::move(*vars);
    } else {
        vlist = detail_p::scan_variables(text);
        if (vlist.empty()) vlist = {"s"};
    }
    return detail_p::Parser(text, std::move(vlist)).parse();
}

inline Scalar parse_scalar(const std::string& text) {
    Poly p = detail_p::Parser(text, {}).parse();
    return p.constant_value();
}

}  // namespace singclass
