#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sympoly/decompose.hpp"
#include "sympoly/polynomial.hpp"

namespace sympoly {

/// Expression text plus an optional declared ambient variable count.  When
/// absent, the ambient is inferred as the highest variable index mentioned
/// (1 for a constant expression).
struct ExprSource {
    std::string text;
    std::optional<int> ambient_n;
};

namespace detail_io {

enum class TokKind { number, variable, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    TokKind kind;
    std::size_t offset;
    std::string digits{};  // number: its digit string
    char var_kind = 0;     // variable: 'x' or 's'
    int var_index = 0;     // variable: 1-based index
};

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t pos = 0;
    const auto read_digits = [&]() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return std::string(text.substr(start, pos - start));
    };
    while (pos < text.size()) {
        const char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        const std::size_t start = pos;
        switch (c) {
            case '+': out.push_back({TokKind::plus, start}); ++pos; continue;
            case '-': out.push_back({TokKind::minus, start}); ++pos; continue;
            case '*': out.push_back({TokKind::star, start}); ++pos; continue;
            case '^': out.push_back({TokKind::caret, start}); ++pos; continue;
            case '/': out.push_back({TokKind::slash, start}); ++pos; continue;
            case '(': out.push_back({TokKind::lparen, start}); ++pos; continue;
            case ')': out.push_back({TokKind::rparen, start}); ++pos; continue;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Token t{TokKind::number, start};
            t.digits = read_digits();
            out.push_back(std::move(t));
            continue;
        }
        char kind = 0;
        if (c == 'x') {
            kind = 'x';
            ++pos;
        } else if (c == 's') {
            kind = 's';
            ++pos;
        } else if (static_cast<unsigned char>(c) == 0xCF && pos + 1 < text.size() &&
                   static_cast<unsigned char>(text[pos + 1]) == 0x83) {
            kind = 's';  // UTF-8 sigma accepted as an input alias of "s"
            pos += 2;
        } else {
            throw SyntaxError(start, std::string("unexpected character '") + c + "'");
        }
        const std::string digits = read_digits();
        if (digits.empty()) throw SyntaxError(start, "variable letter needs an index");
        if (std::all_of(digits.begin(), digits.end(), [](char d) { return d == '0'; }))
            throw VariableIndexZeroError(start);
        if (digits.size() > 6) throw SyntaxError(start, "variable index too large");
        Token t{TokKind::variable, start};
        t.var_kind = kind;
        t.var_index = std::stoi(digits);
        out.push_back(std::move(t));
    }
    out.push_back({TokKind::end, text.size()});
    return out;
}

// Recursive descent over the token stream, producing a Polynomial directly.
// "^" binds tighter than "*", which binds tighter than "+"/"-"; unary minus
// only at expression head and after "(".
class Parser {
public:
    Parser(std::vector<Token> tokens, int ambient_n, char expected_kind)
        : toks_(std::move(tokens)), n_(ambient_n), expected_(expected_kind) {}

    Polynomial parse() {
        Polynomial p = expression();
        if (peek().kind != TokKind::end)
            throw SyntaxError(peek().offset, "unexpected trailing input");
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    Polynomial expression() {
        bool negate = false;
        if (peek().kind == TokKind::minus) {
            take();
            negate = true;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (peek().kind == TokKind::plus || peek().kind == TokKind::minus) {
            const bool minus = take().kind == TokKind::minus;
            const Polynomial rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (peek().kind == TokKind::star) {
            take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base_value = base();
        if (peek().kind != TokKind::caret) return base_value;
        take();
        if (peek().kind == TokKind::minus) throw ExponentNegativeError(peek().offset);
        if (peek().kind != TokKind::number)
            throw SyntaxError(peek().offset, "expected a nonnegative integer exponent");
        const Token t = take();
        if (t.digits.size() > 4)
            throw SyntaxError(t.offset, "exponent too large");
        return pow(base_value, std::stoi(t.digits));
    }

    Polynomial base() {
        const Token& t = peek();
        switch (t.kind) {
            case TokKind::number: {
                const Token num = take();
                mpz_class p(num.digits, 10);
                mpz_class q(1);
                if (peek().kind == TokKind::slash) {
                    take();
                    if (peek().kind != TokKind::number)
                        throw SyntaxError(peek().offset, "expected denominator digits");
                    const Token den = take();
                    q = mpz_class(den.digits, 10);
                    if (q == 0) throw SyntaxError(den.offset, "zero denominator in rational literal");
                }
                return Polynomial::constant(n_, Rational(std::move(p), std::move(q)));
            }
            case TokKind::variable: {
                const Token var = take();
                if (var.var_kind != expected_) {
                    if (expected_ == 's')
                        throw MixedVariableKindsError(
                            var.offset, "expected sigma variables (s), found x");
                    throw SyntaxError(var.offset,
                                      "sigma variable not allowed in a polynomial expression");
                }
                return Polynomial::variable(n_, var.var_index);
            }
            case TokKind::lparen: {
                take();
                Polynomial inner = expression();
                if (peek().kind != TokKind::rparen)
                    throw SyntaxError(peek().offset, "expected ')'");
                take();
                return inner;
            }
            default:
                throw SyntaxError(t.offset, "expected a number, a variable or '('");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int n_;
    char expected_;
};

inline Polynomial parse_with_kind(const ExprSource& src, char expected_kind) {
    std::vector<Token> toks = tokenize(src.text);
    int n = 1;
    if (src.ambient_n) {
        if (*src.ambient_n < 1)
            throw SyntaxError(0, "ambient variable count must be positive");
        n = *src.ambient_n;
        for (const Token& t : toks)
            if (t.kind == TokKind::variable && t.var_index > n)
                throw IndexExceedsAmbientError(
                    t.offset, "variable index " + std::to_string(t.var_index) +
                                  " exceeds declared ambient count " + std::to_string(n));
    } else {
        for (const Token& t : toks)
            if (t.kind == TokKind::variable) n = std::max(n, t.var_index);
    }
    return Parser(std::move(toks), n, expected_kind).parse();
}

}  // namespace detail_io

/// Parses the expression grammar over x-variables.
inline Polynomial parse_poly(const ExprSource& src) { return detail_io::parse_with_kind(src, 'x'); }
inline Polynomial parse_poly(std::string_view text, std::optional<int> ambient_n = std::nullopt) {
    return parse_poly(ExprSource{std::string(text), ambient_n});
}

/// Same grammar over s-variables, read as sigma exponents.
inline SigmaPolynomial parse_sigma(const ExprSource& src) {
    return SigmaPolynomial::reinterpret(detail_io::parse_with_kind(src, 's'));
}
inline SigmaPolynomial parse_sigma(std::string_view text,
                                   std::optional<int> ambient_n = std::nullopt) {
    return parse_sigma(ExprSource{std::string(text), ambient_n});
}

namespace detail_io {

inline std::string power_product_str(const Monomial& m, char letter) {
    std::string out;
    for (int k = 0; k < m.ambient_n(); ++k) {
        if (m[k] == 0) continue;
        if (!out.empty()) out += '*';
        out += letter;
        out += std::to_string(k + 1);
        if (m[k] > 1) out += '^' + std::to_string(m[k]);
    }
    return out;
}

inline std::string print_terms(const Polynomial& f, char letter) {
    if (f.is_zero()) return "0";
    // Total degree descending, then lex descending.
    std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const int da = a.first.degree(), db = b.first.degree();
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (first) {
            if (c.sign() < 0) out += '-';
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const Rational mag = c.abs();
        const std::string factors = power_product_str(m, letter);
        if (factors.empty())
            out += mag.str();
        else if (mag == Rational(1))
            out += factors;
        else
            out += mag.str() + "*" + factors;
    }
    return out;
}

}  // namespace detail_io

/// Deterministic canonical rendering; parse_poly(print_poly(f)) == f.
inline std::string print_poly(const Polynomial& f) { return detail_io::print_terms(f, 'x'); }

inline std::string print_sigma(const SigmaPolynomial& g) {
    return detail_io::print_terms(g.as_polynomial(), 's');
}

/// "x1^2*x2" style rendering of a bare power product; the unit monomial
/// prints "1".
inline std::string print_monomial(const Monomial& m) {
    std::string s = detail_io::power_product_str(m, 'x');
    return s.empty() ? "1" : s;
}

/// Degree-descending single-variable coefficient list (leading coefficient
/// included) rendered as e.g. "z^2 - 3*z + 2".
inline std::string print_univariate(const std::vector<Rational>& coefficients,
                                    const std::string& variable = "z") {
    const int deg = static_cast<int>(coefficients.size()) - 1;
    std::string out;
    bool first = true;
    for (int i = 0; i <= deg; ++i) {
        const Rational& c = coefficients[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) out += '-';
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const int power = deg - i;
        const Rational mag = c.abs();
        std::string factors;
        if (power > 0) {
            factors = variable;
            if (power > 1) factors += '^' + std::to_string(power);
        }
        if (factors.empty())
            out += mag.str();
        else if (mag == Rational(1))
            out += factors;
        else
            out += mag.str() + "*" + factors;
    }
    return out.empty() ? "0" : out;
}

}  // namespace sympoly
