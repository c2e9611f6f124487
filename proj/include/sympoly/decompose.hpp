#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sympoly/elementary.hpp"
#include "sympoly/symmetry.hpp"

namespace sympoly {

/// Total lexicographic order: the first index where the exponents differ
/// decides, exponent of x_1 first.
inline std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
    if (a.ambient_n() != b.ambient_n())
        throw AmbientMismatchError("lex comparison across different ambient counts");
    return a <=> b;
}

/// The lex-maximal term of f.
inline std::pair<Monomial, Rational> lex_leading_term(const Polynomial& f) {
    if (f.is_zero()) throw ZeroPolynomialError("the zero polynomial has no leading term");
    const auto& [m, c] = *f.terms().rbegin();  // term map is lex-ordered
    return {m, c};
}

/// Sum of squared exponents.  For a fixed degree this ranks monomials by how
/// spread out their exponents are.
inline long long spreadiness(const Monomial& m) {
    long long s = 0;
    for (int e : m.exponents()) s += static_cast<long long>(e) * e;
    return s;
}

/**
 * For a weakly decreasing exponent vector i_1 >= ... >= i_n, the exponent
 * vector (i_1-i_2, i_2-i_3, ..., i_{n-1}-i_n, i_n) of the sigma-product
 * whose lex leading term (and unique maximum-spreadiness orbit) is x^i.
 */
inline std::pair<SigmaExponent, Rational> sigma_exponent_from_partition(
    const std::vector<int>& partition, const Rational& coefficient) {
    if (partition.empty())
        throw NotSortedError("partition needs a positive ambient variable count");
    const std::size_t n = partition.size();
    std::vector<int> e(n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (partition[k] < partition[k + 1])
            throw NotSortedError("exponent vector is not weakly decreasing");
        e[k] = partition[k] - partition[k + 1];
    }
    if (partition[n - 1] < 0) throw NotSortedError("exponents must be nonnegative");
    e[n - 1] = partition[n - 1];
    return {SigmaExponent(std::move(e)), coefficient};
}

/**
 * A polynomial in the elementary symmetric polynomials sigma_1, ..., sigma_n:
 * a canonical map from sigma-exponents to nonzero rational coefficients.
 * This is the output space of decomposition.
 */
class SigmaPolynomial {
public:
    using TermMap = std::map<SigmaExponent, Rational>;

    explicit SigmaPolynomial(int ambient_n) : n_(ambient_n) {
        if (ambient_n < 1)
            throw AmbientMismatchError("sigma polynomial needs a positive ambient variable count");
    }

    static SigmaPolynomial constant(int ambient_n, const Rational& c) {
        SigmaPolynomial g(ambient_n);
        if (!c.is_zero()) g.terms_.emplace(SigmaExponent::zero(ambient_n), c);
        return g;
    }

    static SigmaPolynomial from_terms(int ambient_n,
                                      const std::vector<std::pair<SigmaExponent, Rational>>& terms) {
        SigmaPolynomial g(ambient_n);
        for (const auto& [e, c] : terms) {
            if (e.ambient_n() != ambient_n)
                throw AmbientMismatchError("sigma term ambient count differs from polynomial's");
            g.accumulate(e, c);
        }
        return g;
    }

    int ambient_n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const SigmaExponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Reinterprets sigma_k as x_k; shares all polynomial machinery
    /// (printing, evaluation) with Polynomial.
    Polynomial as_polynomial() const {
        PolynomialAccumulator acc(n_);
        for (const auto& [e, c] : terms_) acc.add(Monomial(e.exponents()), c);
        return acc.finish();
    }

    /// Inverse of as_polynomial: reads x_k as sigma_k.
    static SigmaPolynomial reinterpret(const Polynomial& p) {
        SigmaPolynomial g(p.ambient_n());
        for (const auto& [m, c] : p.terms()) g.terms_.emplace(SigmaExponent(m.exponents()), c);
        return g;
    }

    friend bool operator==(const SigmaPolynomial&, const SigmaPolynomial&) = default;

private:
    void accumulate(const SigmaExponent& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
    int n_;
};

/// Exact value of g at given numeric sigma values.
inline Rational evaluate(const SigmaPolynomial& g, std::span<const Rational> sigma_values) {
    return evaluate(g.as_polynomial(), sigma_values);
}

/// Substitutes the actual elementary symmetric polynomials and expands:
/// sum over terms of coefficient * sigma_product_expand(exponent).
inline Polynomial expand_sigma(const SigmaPolynomial& g) {
    PolynomialAccumulator acc(g.ambient_n());
    for (const auto& [e, c] : g.terms()) acc.add_scaled(detail::sigma_product_expansion(e), c);
    return acc.finish();
}

enum class Algorithm { lex, spreadiness };

/// The spreadiness algorithm's well-founded measure: the pair (maximum
/// spreadiness in the remainder, number of terms attaining it), ordered
/// lexicographically.
struct SpreadinessState {
    long long max_spreadiness = 0;
    long long count_at_max = 0;
    friend auto operator<=>(const SpreadinessState&, const SpreadinessState&) = default;
};

/// Lex algorithm: the leading monomial.  Spreadiness algorithm: the
/// (max spreadiness, count) pair.
using StepMetric = std::variant<Monomial, SpreadinessState>;

struct TraceStep {
    Monomial selected;
    Rational coefficient;
    SigmaExponent sigma_exponent;
    int degree;  // homogeneous component this step belongs to
    StepMetric metric_before;
    std::optional<StepMetric> metric_after;  // nullopt once the component's remainder is zero
};

/**
 * Ordered record of decomposition steps.  Within one homogeneous component
 * the metric strictly decreases in the algorithm's well-founded order;
 * components appear in ascending degree.
 */
struct DecompositionTrace {
    Algorithm algorithm = Algorithm::lex;
    std::vector<TraceStep> steps;
};

struct SpreadinessOptions {
    enum class TieBreak { lex_greatest, uniform_random };
    TieBreak tie_break = TieBreak::lex_greatest;
    std::uint64_t seed = 0;  // used by uniform_random only
};

namespace detail {

using TermMap = Polynomial::TermMap;

inline void subtract_scaled(TermMap& r, const Polynomial& g, const Rational& scale) {
    for (const auto& [m, c] : g.terms()) {
        const Rational delta = scale * c;
        auto [it, inserted] = r.emplace(m, -delta);
        if (!inserted) {
            it->second -= delta;
            if (it->second.is_zero()) r.erase(it);
        }
    }
}

inline SpreadinessState spreadiness_state(const TermMap& r) {
    SpreadinessState st{-1, 0};
    for (const auto& [m, c] : r) {
        const long long s = spreadiness(m);
        if (s > st.max_spreadiness) {
            st.max_spreadiness = s;
            st.count_at_max = 1;
        } else if (s == st.max_spreadiness) {
            ++st.count_at_max;
        }
    }
    return st;
}

inline void check_orbit_constant(const TermMap& r, const Monomial& selected, const Rational& c) {
    for (const Monomial& o : monomial_orbit(selected)) {
        auto it = r.find(o);
        if (it == r.end() || it->second != c)
            throw Error("decompose.internal",
                        "remainder lost symmetry: selected term's orbit is not "
                        "uniformly present");
    }
}

}  // namespace detail

/**
 * Classical decomposition: repeatedly cancel the lex leading term c*x^i
 * (whose exponents are weakly decreasing, by symmetry) against
 * c * sigma_1^{i_1-i_2} ... sigma_n^{i_n}.  Terminates because each step
 * strictly lowers the leading term and monomials of a degree are finite.
 */
inline std::pair<SigmaPolynomial, DecompositionTrace> decompose_lex(const Polynomial& f) {
    if (auto witness = find_asymmetry_witness(f)) throw NotSymmetricError(*witness);
    std::vector<std::pair<SigmaExponent, Rational>> result;
    DecompositionTrace trace{Algorithm::lex, {}};
    for (const auto& [degree, component] : homogeneous_components(f)) {
        detail::TermMap remainder = component.terms();
        while (!remainder.empty()) {
            const Monomial lead = remainder.rbegin()->first;
            const Rational coeff = remainder.rbegin()->second;
            auto [sigma_exp, c] = sigma_exponent_from_partition(lead.exponents(), coeff);
            detail::subtract_scaled(remainder, detail::sigma_product_expansion(sigma_exp), c);
            result.emplace_back(sigma_exp, c);
            std::optional<StepMetric> after;
            if (!remainder.empty()) after = remainder.rbegin()->first;
            trace.steps.push_back(
                {lead, c, sigma_exp, degree, StepMetric(lead), std::move(after)});
        }
    }
    return {SigmaPolynomial::from_terms(f.ambient_n(), result), std::move(trace)};
}

/**
 * Spreadiness decomposition: cancel a maximum-spreadiness term (and, with
 * it, its whole conjugate orbit) against the sigma-product that has exactly
 * that orbit as its maximum-spreadiness terms.  Each step strictly lowers
 * (max spreadiness, count at max) lexicographically.
 *
 * The choice among maximum-spreadiness terms is free; by default we take
 * the lex-greatest for reproducible traces.  The result never depends on
 * the choice (the representation is unique).
 */
inline std::pair<SigmaPolynomial, DecompositionTrace> decompose_spreadiness(
    const Polynomial& f, const SpreadinessOptions& options = {}) {
    if (auto witness = find_asymmetry_witness(f)) throw NotSymmetricError(*witness);
    std::mt19937_64 rng(options.seed);
    std::vector<std::pair<SigmaExponent, Rational>> result;
    DecompositionTrace trace{Algorithm::spreadiness, {}};
    for (const auto& [degree, component] : homogeneous_components(f)) {
        detail::TermMap remainder = component.terms();
        SpreadinessState state = detail::spreadiness_state(remainder);
        while (!remainder.empty()) {
            Monomial selected = remainder.rbegin()->first;
            if (options.tie_break == SpreadinessOptions::TieBreak::lex_greatest) {
                // Map order is lex-ascending, so the last max-spreadiness
                // term seen is the lex-greatest one.
                for (const auto& [m, c] : remainder)
                    if (spreadiness(m) == state.max_spreadiness) selected = m;
            } else {
                std::vector<Monomial> pool;
                for (const auto& [m, c] : remainder)
                    if (spreadiness(m) == state.max_spreadiness) pool.push_back(m);
                selected = pool[std::uniform_int_distribution<std::size_t>(
                    0, pool.size() - 1)(rng)];
            }
            const Rational coeff = remainder.at(selected);
            detail::check_orbit_constant(remainder, selected, coeff);

            std::vector<int> partition = selected.exponents();
            std::sort(partition.begin(), partition.end(), std::greater<int>());
            auto [sigma_exp, c] = sigma_exponent_from_partition(partition, coeff);
            detail::subtract_scaled(remainder, detail::sigma_product_expansion(sigma_exp), c);
            result.emplace_back(sigma_exp, c);

            const SpreadinessState before = state;
            state = detail::spreadiness_state(remainder);
            std::optional<StepMetric> after;
            if (!remainder.empty()) after = state;
            trace.steps.push_back(
                {selected, c, sigma_exp, degree, StepMetric(before), std::move(after)});
        }
    }
    return {SigmaPolynomial::from_terms(f.ambient_n(), result), std::move(trace)};
}

inline constexpr int kDefaultLemmaDegreeGuard = 12;

/**
 * Brute-force check of the claim behind the spreadiness algorithm: expands
 * sigma_1^{i_1-i_2} ... sigma_n^{i_n} completely and returns true iff the
 * set of maximum-spreadiness terms is exactly x^i and its conjugates.
 *
 * Exponential in the degree; a verification tool, not a production path,
 * hence the degree guard (default sum of exponents <= 12).
 */
inline bool verify_spreadiness_lemma(const std::vector<int>& partition,
                                     int max_degree = kDefaultLemmaDegreeGuard) {
    auto [sigma_exp, c] = sigma_exponent_from_partition(partition, Rational(1));
    const int degree = sigma_exp.weighted_degree();
    if (degree > max_degree)
        throw SizeGuardError("decompose.size_guard",
                             "partition degree " + std::to_string(degree) +
                                 " exceeds the verification guard (" +
                                 std::to_string(max_degree) + ")");
    const Polynomial& expansion = detail::sigma_product_expansion(sigma_exp);

    long long max_spread = -1;
    for (const auto& [m, coef] : expansion.terms())
        max_spread = std::max(max_spread, spreadiness(m));

    std::vector<Monomial> argmax;
    for (const auto& [m, coef] : expansion.terms())
        if (spreadiness(m) == max_spread) argmax.push_back(m);

    std::vector<Monomial> orbit = monomial_orbit(Monomial(partition));
    std::sort(orbit.begin(), orbit.end());
    return argmax == orbit;  // both lex-sorted
}

/// Height of the center of gravity of the monomial's brick picture
/// (stack of height j_k over x_k, first brick at height 1): (s + d) / (2d).
inline Rational gravity_height(const Monomial& m) {
    const long d = m.degree();
    if (d == 0) throw ZeroDegreeError("the unit monomial has no bricks");
    return Rational(static_cast<long>(spreadiness(m)) + d, 2 * d);
}

/// Variance of the exponent multiset {j_1, ..., j_n}: s/n - (d/n)^2.
inline Rational exponent_variance(const Monomial& m) {
    const long n = m.ambient_n();
    const long d = m.degree();
    return Rational(static_cast<long>(spreadiness(m)), n) - Rational(d * d, n * n);
}

}  // namespace sympoly
