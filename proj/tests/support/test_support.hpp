#pragma once

// Shared test machinery: seeded random generators for library values,
// independent oracles (full-group symmetry, univariate evaluation and GCD),
// a trace monotonicity checker, and the malformed-input corpus.  Everything
// here stays independent of the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sympoly/sympoly.hpp"

namespace testsupport {

using Rng = std::mt19937_64;
using namespace sympoly;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, int max_abs_num = 9, int max_den = 4) {
    long num = uniform(rng, -max_abs_num, max_abs_num);
    long den = uniform(rng, 1, max_den);
    return Rational(num, den);
}

inline Rational random_nonzero_rational(Rng& rng, int max_abs_num = 9, int max_den = 4) {
    Rational r = random_rational(rng, max_abs_num, max_den);
    while (r.is_zero()) r = random_rational(rng, max_abs_num, max_den);
    return r;
}

inline Monomial random_monomial(Rng& rng, int n, int max_degree) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    int budget = uniform(rng, 0, max_degree);
    while (budget > 0) {
        e[static_cast<std::size_t>(uniform(rng, 0, n - 1))] += 1;
        --budget;
    }
    return Monomial(std::move(e));
}

inline Polynomial random_polynomial(Rng& rng, int n, int max_degree, int max_terms = 6) {
    PolynomialAccumulator acc(n);
    const int terms = uniform(rng, 0, max_terms);
    for (int i = 0; i < terms; ++i)
        acc.add(random_monomial(rng, n, max_degree), random_rational(rng));
    return acc.finish();
}

/// Symmetric by construction: a rational combination of orbit sums.
inline Polynomial random_symmetric(Rng& rng, int n, int max_degree, int max_orbits = 4) {
    PolynomialAccumulator acc(n);
    const int orbits = uniform(rng, 1, max_orbits);
    for (int i = 0; i < orbits; ++i)
        acc.add_scaled(orbit_sum(random_monomial(rng, n, max_degree)), random_rational(rng));
    return acc.finish();
}

/// Random sigma-polynomial whose expansion has degree <= max_degree.
inline SigmaPolynomial random_sigma_polynomial(Rng& rng, int n, int max_degree,
                                               int max_terms = 4) {
    std::vector<std::pair<SigmaExponent, Rational>> terms;
    const int count = uniform(rng, 1, max_terms);
    for (int i = 0; i < count; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        int budget = uniform(rng, 0, max_degree);
        while (budget > 0) {
            const int j = uniform(rng, 0, n - 1);  // bump sigma_{j+1}: costs j+1 degree
            if (j + 1 > budget) {
                --budget;
                continue;
            }
            e[static_cast<std::size_t>(j)] += 1;
            budget -= j + 1;
        }
        terms.emplace_back(SigmaExponent(std::move(e)), random_rational(rng));
    }
    return SigmaPolynomial::from_terms(n, terms);
}

inline Permutation random_permutation(Rng& rng, int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) im[static_cast<std::size_t>(k)] = k;
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(std::move(im));
}

/// Oracle: symmetry via all n! permutations (usable for small n only).
inline bool symmetric_under_full_group(const Polynomial& f) {
    const int n = f.ambient_n();
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) im[static_cast<std::size_t>(k)] = k;
    do {
        if (!(apply_permutation(f, Permutation(im)) == f)) return false;
    } while (std::next_permutation(im.begin(), im.end()));
    return true;
}

/// All weakly decreasing exponent vectors of length n with sum <= max_sum
/// (the zero partition included).
inline std::vector<std::vector<int>> partitions_up_to(int n, int max_sum) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<std::size_t>(n), 0);
    const auto recurse = [&](auto&& self, int pos, int bound, int budget) -> void {
        if (pos == n) {
            out.push_back(current);
            return;
        }
        for (int v = std::min(bound, budget); v >= 0; --v) {
            current[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v, budget - v);
        }
    };
    recurse(recurse, 0, max_sum, max_sum);
    return out;
}

/// A random weakly decreasing exponent vector of length n with sum exactly
/// in [1, max_sum].
inline std::vector<int> random_partition(Rng& rng, int n, int max_sum) {
    std::vector<int> e = random_monomial(rng, n, max_sum).exponents();
    std::sort(e.begin(), e.end(), std::greater<int>());
    if (e[0] == 0) e[0] = 1;
    return e;
}

// ---------------------------------------------------------------------------
// Univariate oracles (degree-descending Rational coefficient lists).
// ---------------------------------------------------------------------------

inline Rational eval_univariate(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc = 0;
    for (const Rational& c : coeffs) acc = acc * x + c;
    return acc;
}

inline std::vector<Rational> strip_leading_zeros(std::vector<Rational> coeffs) {
    std::size_t i = 0;
    while (i < coeffs.size() && coeffs[i].is_zero()) ++i;
    return {coeffs.begin() + static_cast<std::ptrdiff_t>(i), coeffs.end()};
}

/// Remainder of a divided by b (b nonzero after stripping).
inline std::vector<Rational> poly_remainder(std::vector<Rational> a,
                                            const std::vector<Rational>& b) {
    a = strip_leading_zeros(std::move(a));
    while (a.size() >= b.size() && !a.empty()) {
        const Rational factor = a[0] / b[0];
        for (std::size_t i = 0; i < b.size(); ++i) a[i] -= factor * b[i];
        a = strip_leading_zeros(std::move(a));
    }
    return a;
}

/// Degree of gcd(a, b) over the rationals; -1 for gcd of two zero
/// polynomials.  The classical Euclidean algorithm, used as the independent
/// oracle for the resultant-based common-root test.
inline int gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
    a = strip_leading_zeros(std::move(a));
    b = strip_leading_zeros(std::move(b));
    while (!b.empty()) {
        std::vector<Rational> r = poly_remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return static_cast<int>(a.size()) - 1;
}

// ---------------------------------------------------------------------------
// Trace checking.
// ---------------------------------------------------------------------------

/// Strict decrease of the algorithm's well-founded metric within each
/// homogeneous component, with consecutive steps chaining exactly
/// (after[i] == before[i+1]) and every component ending at the bottom.
inline bool trace_monotone(const DecompositionTrace& trace) {
    const auto strictly_greater = [&](const StepMetric& before, const StepMetric& after) {
        if (trace.algorithm == Algorithm::lex)
            return std::get<Monomial>(before) > std::get<Monomial>(after);
        return std::get<SpreadinessState>(before) > std::get<SpreadinessState>(after);
    };
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& step = trace.steps[i];
        if (step.metric_after && !strictly_greater(step.metric_before, *step.metric_after))
            return false;
        const bool component_continues =
            i + 1 < trace.steps.size() && trace.steps[i + 1].degree == step.degree;
        if (component_continues) {
            if (!step.metric_after) return false;
            if (!(*step.metric_after == trace.steps[i + 1].metric_before)) return false;
        } else if (step.metric_after) {
            return false;  // component must end with an empty remainder
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Malformed-input corpus: expression, expected error offset.
// ---------------------------------------------------------------------------

struct MalformedCase {
    std::string text;
    std::size_t offset;
};

inline std::vector<MalformedCase> malformed_corpus() {
    return {
        {"", 0},            // empty expression
        {"x", 0},           // variable letter without index
        {"x0", 0},          // index zero
        {"x1^-1", 3},       // negative exponent
        {"x1 +", 4},        // dangling operator
        {"* x1", 0},        // leading operator
        {"x1 x2", 3},       // juxtaposition is not multiplication
        {"(x1 + x2", 8},    // unclosed parenthesis
        {"x1 + x2)", 7},    // stray closing parenthesis
        {"x1^x2", 3},       // exponent must be a literal
        {"1/0", 2},         // zero denominator literal
        {"y1", 0},          // unknown variable letter
        {"x1 & x2", 3},     // unknown operator
        {"2 ** 3", 3},      // doubled operator
        {"()", 1},          // empty parentheses
        {"x1 ^ ^2", 5},     // doubled caret
        {"3 / x1", 4},      // '/' only inside rational literals
        {"x1 - - x2", 5},   // unary minus only at head or after '('
        {"x1 + (x2 -)", 10},// operator before ')'
        {"x1..2", 2},       // stray punctuation
    };
}

}  // namespace testsupport
