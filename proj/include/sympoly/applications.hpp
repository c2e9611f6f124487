#pragma once

#include <utility>
#include <vector>

#include "sympoly/decompose.hpp"
#include "sympoly/elementary.hpp"

namespace sympoly {

/**
 * Monic single-variable polynomial z^n + c_1 z^{n-1} + ... + c_n, stored as
 * the trailing coefficients (c_1, ..., c_n) degree-descending with the
 * leading 1 implicit.  A different kind of object from the multivariate
 * Polynomial on purpose: conflating them invites index bugs.
 */
class MonicPoly {
public:
    MonicPoly() = default;
    explicit MonicPoly(std::vector<Rational> trailing_coefficients)
        : coeffs_(std::move(trailing_coefficients)) {}

    static MonicPoly from_roots(const std::vector<Rational>& roots) {
        std::vector<Rational> full = monic_from_roots(roots);
        return MonicPoly(std::vector<Rational>(full.begin() + 1, full.end()));
    }

    int degree() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Degree-descending list including the leading 1.
    std::vector<Rational> full_coefficients() const {
        std::vector<Rational> full{1};
        full.insert(full.end(), coeffs_.begin(), coeffs_.end());
        return full;
    }

    /// Vieta read-off: sigma_k of the roots is (-1)^k times the coefficient
    /// of z^{n-k}.
    std::vector<Rational> sigma_values() const {
        std::vector<Rational> sigma(coeffs_);
        for (std::size_t k = 0; k < sigma.size(); ++k)
            if (k % 2 == 0) sigma[k] = -sigma[k];
        return sigma;
    }

    friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

private:
    std::vector<Rational> coeffs_;
};

namespace detail {

// e_k(x_1^m, ..., x_n^m): every exponent of e_k scaled by m.
inline Polynomial elementary_of_powers(int k, int n, int m) {
    PolynomialAccumulator acc(n);
    const Polynomial ek = elementary_sigma(k, n);
    for (const auto& [mono, c] : ek.terms()) {
        std::vector<int> e = mono.exponents();
        for (int& x : e) x *= m;
        acc.add(Monomial(std::move(e)), c);
    }
    return acc.finish();
}

}  // namespace detail

/// The sigma-expression of e_k(x_1^m, ..., x_n^m): what the k-th signed
/// coefficient of the power-roots transform looks like symbolically.
inline SigmaPolynomial power_roots_coefficient(int k, int n, int m) {
    if (m < 1) throw OutOfRangeError("power-roots exponent must be >= 1");
    if (k < 1 || k > n) throw OutOfRangeError("coefficient index must satisfy 1 <= k <= n");
    return decompose_lex(detail::elementary_of_powers(k, n, m)).first;
}

/**
 * Gauss's transform: the monic polynomial whose roots are the m-th powers
 * of f's roots, computed without finding any root.  Each new coefficient is
 * (-1)^k e_k(roots^m); e_k(x^m) is symmetric, so its decomposition evaluates
 * at the sigma values read off f's coefficients.
 */
inline MonicPoly power_roots_transform(const MonicPoly& f, int m) {
    if (m < 1) throw OutOfRangeError("power-roots exponent must be >= 1");
    const int n = f.degree();
    if (n == 0) return f;
    const std::vector<Rational> sigma = f.sigma_values();
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const Rational value = evaluate(power_roots_coefficient(k, n, m), sigma);
        out.push_back(k % 2 == 0 ? value : -value);
    }
    return MonicPoly(std::move(out));
}

/**
 * Newton's common-root quantity: the exact value of prod_i g(alpha_i) over
 * the roots alpha_i of f, computed symbolically.  prod_i g(x_i) is a
 * symmetric polynomial; decompose it and evaluate at f's sigma values.
 * Zero exactly when f and g share a root in the splitting field.
 *
 * g is a degree-descending coefficient list and need not be monic; the
 * value is the classical resultant up to a power of g's leading coefficient.
 */
inline Rational resultant_vs_roots(const MonicPoly& f, const std::vector<Rational>& g) {
    const int n = f.degree();
    if (n < 1) throw OutOfRangeError("resultant needs deg f >= 1");
    Polynomial product = Polynomial::constant(n, 1);
    for (int i = 1; i <= n; ++i) {
        // g(x_i) as a polynomial in the ambient of n variables.
        PolynomialAccumulator gi(n);
        const int deg_g = static_cast<int>(g.size()) - 1;
        for (std::size_t j = 0; j < g.size(); ++j) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i - 1)] = deg_g - static_cast<int>(j);
            gi.add(Monomial(std::move(e)), g[j]);
        }
        product = product * gi.finish();
    }
    return evaluate(decompose_lex(product).first, f.sigma_values());
}

/// True iff f and g share a root (over the algebraic closure), decided
/// without finding any root.
inline bool common_root(const MonicPoly& f, const std::vector<Rational>& g) {
    return resultant_vs_roots(f, g).is_zero();
}

}  // namespace sympoly
