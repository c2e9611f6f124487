#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sympoly/monomial.hpp"
#include "sympoly/rational.hpp"

namespace sympoly {

/**
 * Sparse multivariate polynomial over the rationals: a canonical map from
 * monomials to nonzero coefficients, tagged with the ambient variable count.
 *
 * Canonical form is an invariant, not a normalization step: no operation
 * ever stores a zero coefficient, and two polynomials are equal iff their
 * maps (and ambient counts) are equal.  The zero polynomial is the empty
 * map.  Values are immutable after construction.
 */
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    /// The zero polynomial in n variables.
    explicit Polynomial(int ambient_n) : n_(ambient_n) {
        if (ambient_n < 1)
            throw AmbientMismatchError("polynomial needs a positive ambient variable count");
    }

    static Polynomial constant(int ambient_n, const Rational& c) {
        Polynomial p(ambient_n);
        if (!c.is_zero()) p.terms_.emplace(Monomial::unit(ambient_n), c);
        return p;
    }

    static Polynomial monomial(const Monomial& m, const Rational& c) {
        Polynomial p(m.ambient_n());
        if (!c.is_zero()) p.terms_.emplace(m, c);
        return p;
    }

    /// x_index (1-based) in an ambient of n variables.
    static Polynomial variable(int ambient_n, int index) {
        if (index < 1 || index > ambient_n)
            throw AmbientMismatchError("variable index outside ambient range");
        std::vector<int> e(static_cast<std::size_t>(ambient_n), 0);
        e[static_cast<std::size_t>(index - 1)] = 1;
        return monomial(Monomial(std::move(e)), 1);
    }

    /// Canonicalizing bulk constructor: accumulates, drops zeros.
    static Polynomial from_terms(int ambient_n,
                                 const std::vector<std::pair<Monomial, Rational>>& terms) {
        Polynomial p(ambient_n);
        for (const auto& [m, c] : terms) {
            if (m.ambient_n() != ambient_n)
                throw AmbientMismatchError("term ambient count differs from polynomial's");
            p.accumulate(m, c);
        }
        return p;
    }

    int ambient_n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of m, zero if absent.
    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Polynomial operator-() const {
        Polynomial r(n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_ambient(o);
        for (const auto& [m, c] : o.terms_) accumulate(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        require_same_ambient(o);
        for (const auto& [m, c] : o.terms_) accumulate(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_ambient(b);
        Polynomial r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.accumulate(ma.times(mb), ca * cb);
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r(p.n_);
        if (c.is_zero()) return r;
        for (const auto& [m, coef] : p.terms_) r.terms_.emplace(m, c * coef);
        return r;
    }
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    friend class PolynomialAccumulator;

    void require_same_ambient(const Polynomial& o) const {
        if (n_ != o.n_)
            throw AmbientMismatchError("operands live in different ambient variable counts");
    }

    void accumulate(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
    int n_;
};

/// Mutable term accumulator for algorithms that build polynomials
/// incrementally; finish() hands over a canonical Polynomial.
class PolynomialAccumulator {
public:
    explicit PolynomialAccumulator(int ambient_n) : p_(ambient_n) {}
    explicit PolynomialAccumulator(Polynomial start) : p_(std::move(start)) {}

    void add(const Monomial& m, const Rational& c) { p_.accumulate(m, c); }
    void add_scaled(const Polynomial& g, const Rational& scale) {
        p_.require_same_ambient(g);
        if (scale.is_zero()) return;
        for (const auto& [m, c] : g.terms()) p_.accumulate(m, scale * c);
    }

    bool is_zero() const { return p_.is_zero(); }
    const Polynomial& current() const { return p_; }
    Polynomial finish() { return std::move(p_); }

private:
    Polynomial p_;
};

inline Polynomial pow(const Polynomial& a, int exponent) {
    if (exponent < 0) throw OutOfRangeError("polynomial power with negative exponent");
    Polynomial result = Polynomial::constant(a.ambient_n(), 1);
    Polynomial base = a;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

/**
 * Replaces x_k by images[k-1] and expands.  All images must share one
 * ambient count m, which becomes the result's ambient count; f itself must
 * have exactly images.size() variables.
 */
inline Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
    if (static_cast<std::size_t>(f.ambient_n()) != images.size())
        throw AmbientMismatchError("substitution needs one image per variable");
    const int m = images[0].ambient_n();
    for (const Polynomial& g : images)
        if (g.ambient_n() != m)
            throw AmbientMismatchError("substitution images live in different ambient counts");

    // Power tables, filled lazily per variable.
    std::vector<std::vector<Polynomial>> powers(images.size(),
                                                {Polynomial::constant(m, 1)});
    const auto power = [&](std::size_t k, int e) -> const Polynomial& {
        auto& table = powers[k];
        while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * images[k]);
        return table[static_cast<std::size_t>(e)];
    };

    PolynomialAccumulator acc(m);
    for (const auto& [mono, coef] : f.terms()) {
        Polynomial term = Polynomial::constant(m, coef);
        for (int k = 0; k < f.ambient_n(); ++k)
            if (mono[k] != 0) term = term * power(static_cast<std::size_t>(k), mono[k]);
        acc.add_scaled(term, 1);
    }
    return acc.finish();
}

inline Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
    if (static_cast<std::size_t>(f.ambient_n()) != point.size())
        throw AmbientMismatchError("evaluation point length differs from ambient count");
    Rational total = 0;
    for (const auto& [mono, coef] : f.terms()) {
        Rational term = coef;
        for (int k = 0; k < f.ambient_n(); ++k)
            for (int i = 0; i < mono[k]; ++i) term *= point[static_cast<std::size_t>(k)];
        total += term;
    }
    return total;
}

/// Max term degree; nullopt for the zero polynomial (a marker below every
/// integer, so degree-based inductions stay honest).
inline std::optional<int> total_degree(const Polynomial& f) {
    std::optional<int> deg;
    for (const auto& [m, c] : f.terms()) {
        int d = m.degree();
        if (!deg || d > *deg) deg = d;
    }
    return deg;
}

/// Splits f by total degree.  Components sum to f; no zero components.
inline std::map<int, Polynomial> homogeneous_components(const Polynomial& f) {
    std::map<int, PolynomialAccumulator> parts;
    for (const auto& [m, c] : f.terms()) {
        auto [it, _] = parts.try_emplace(m.degree(), f.ambient_n());
        it->second.add(m, c);
    }
    std::map<int, Polynomial> out;
    for (auto& [d, acc] : parts) out.emplace(d, acc.finish());
    return out;
}

}  // namespace sympoly
