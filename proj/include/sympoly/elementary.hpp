#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "sympoly/polynomial.hpp"
#include "sympoly/symmetry.hpp"

namespace sympoly {

/**
 * Exponent vector (k_1, ..., k_n) of a product sigma_1^{k_1} ... sigma_n^{k_n}
 * of elementary symmetric polynomials.  Expanding that product gives a
 * homogeneous polynomial of degree sum_j j*k_j (weighted_degree).
 */
class SigmaExponent {
public:
    explicit SigmaExponent(std::vector<int> exponents) : exps_(std::move(exponents)) {
        if (exps_.empty())
            throw AmbientMismatchError("sigma exponent needs a positive ambient variable count");
        for (int e : exps_)
            if (e < 0) throw AmbientMismatchError("sigma exponents must be nonnegative");
    }

    static SigmaExponent zero(int ambient_n) {
        return SigmaExponent(std::vector<int>(static_cast<std::size_t>(ambient_n), 0));
    }

    int ambient_n() const { return static_cast<int>(exps_.size()); }
    const std::vector<int>& exponents() const { return exps_; }

    /// 0-based: the power of sigma_{k+1}.
    int operator[](int k) const { return exps_[static_cast<std::size_t>(k)]; }

    /// Degree of the expanded product: sum over j of j * k_j.
    int weighted_degree() const {
        int d = 0;
        for (int j = 0; j < ambient_n(); ++j) d += (j + 1) * exps_[static_cast<std::size_t>(j)];
        return d;
    }

    bool is_zero() const {
        for (int e : exps_)
            if (e != 0) return false;
        return true;
    }

    friend bool operator==(const SigmaExponent&, const SigmaExponent&) = default;
    friend std::strong_ordering operator<=>(const SigmaExponent& a, const SigmaExponent& b) {
        return a.exps_ <=> b.exps_;
    }

private:
    std::vector<int> exps_;
};

/**
 * The k-th elementary symmetric polynomial in n variables: the sum over all
 * size-k subsets of {x_1, ..., x_n} of their products.  C(n, k) terms, all
 * with coefficient 1.
 */
inline Polynomial elementary_sigma(int k, int n) {
    if (k < 1 || k > n)
        throw OutOfRangeError("elementary symmetric index must satisfy 1 <= k <= n");
    PolynomialAccumulator acc(n);
    // Walk size-k subsets in lexicographic order.
    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int i : subset) e[static_cast<std::size_t>(i)] = 1;
        acc.add(Monomial(std::move(e)), 1);
        int pos = k - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++subset[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            subset[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(i - 1)] + 1;
    }
    return acc.finish();
}

namespace detail {

// Decompositions expand the same handful of sigma-products over and over;
// memoizing them turns each repeat into a map lookup.
inline const Polynomial& sigma_product_expansion(const SigmaExponent& e) {
    thread_local std::map<std::vector<int>, Polynomial> cache;
    auto it = cache.find(e.exponents());
    if (it != cache.end()) return it->second;

    const int n = e.ambient_n();
    Polynomial product = Polynomial::constant(n, 1);
    for (int j = 0; j < n; ++j)
        if (e[j] > 0) product = product * pow(elementary_sigma(j + 1, n), e[j]);
    return cache.emplace(e.exponents(), std::move(product)).first->second;
}

}  // namespace detail

/// Fully expanded sigma_1^{k_1} ... sigma_n^{k_n}; homogeneous of degree
/// e.weighted_degree().
inline Polynomial sigma_product_expand(const SigmaExponent& e) {
    return detail::sigma_product_expansion(e);
}

/**
 * The coefficients of the monic polynomial whose roots have elementary
 * symmetric polynomials sigma_1, ..., sigma_n: the coefficient of z^{n-k}
 * is (-1)^k sigma_k.  Returned symbolically as (sign, unit sigma-exponent)
 * pairs for k = 1..n.
 */
inline std::vector<std::pair<int, SigmaExponent>> vieta_coefficients(int n) {
    if (n < 1) throw OutOfRangeError("vieta needs n >= 1");
    std::vector<std::pair<int, SigmaExponent>> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(k - 1)] = 1;
        out.emplace_back(k % 2 == 0 ? 1 : -1, SigmaExponent(std::move(e)));
    }
    return out;
}

/**
 * Coefficient list (degree-descending, leading 1 included) of the monic
 * polynomial prod_i (z - roots[i]), by exact expansion.  Empty input gives
 * the constant 1.
 */
inline std::vector<Rational> monic_from_roots(const std::vector<Rational>& roots) {
    std::vector<Rational> coeffs{1};
    for (const Rational& r : roots) {
        // Multiply the current polynomial by (z - r).
        coeffs.push_back(0);
        for (std::size_t i = coeffs.size() - 1; i > 0; --i)
            coeffs[i] -= r * coeffs[i - 1];
    }
    return coeffs;
}

/// The power sum x_1^m + ... + x_n^m.
inline Polynomial power_sum(int m, int n) {
    if (m < 1 || n < 1) throw OutOfRangeError("power sum needs m >= 1 and n >= 1");
    PolynomialAccumulator acc(n);
    for (int k = 0; k < n; ++k) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(k)] = m;
        acc.add(Monomial(std::move(e)), 1);
    }
    return acc.finish();
}

}  // namespace sympoly
