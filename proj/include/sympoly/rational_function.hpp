#pragma once

#include <optional>
#include <utility>

#include "sympoly/decompose.hpp"
#include "sympoly/symmetry.hpp"

namespace sympoly {

/**
 * Quotient of two polynomials with a nonzero denominator.  No GCD reduction
 * is ever applied; equality of quotients is cross-multiplication:
 * P1/Q1 == P2/Q2  iff  P1*Q2 == P2*Q1.
 */
class RationalFunction {
public:
    RationalFunction(Polynomial numerator, Polynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (num_.ambient_n() != den_.ambient_n())
            throw AmbientMismatchError("numerator and denominator ambient counts differ");
        if (den_.is_zero()) throw ZeroDenominatorError("rational function with zero denominator");
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    int ambient_n() const { return num_.ambient_n(); }

    friend bool equivalent(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

private:
    Polynomial num_;
    Polynomial den_;
};

/// Quotient of two sigma-polynomials; the output space of decompose_rational.
/// Not reduced to lowest terms (sigma-polynomial GCD is out of scope), so a
/// value is one representative of its quotient class.
class SigmaRationalFunction {
public:
    SigmaRationalFunction(SigmaPolynomial numerator, SigmaPolynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (num_.ambient_n() != den_.ambient_n())
            throw AmbientMismatchError("numerator and denominator ambient counts differ");
        if (den_.is_zero()) throw ZeroDenominatorError("sigma quotient with zero denominator");
    }

    const SigmaPolynomial& numerator() const { return num_; }
    const SigmaPolynomial& denominator() const { return den_; }

private:
    SigmaPolynomial num_;
    SigmaPolynomial den_;
};

/// Witness that adjacent transposition k moves f = P/Q: the cross-multiplied
/// difference P_t*Q - P*Q_t is nonzero; the witness monomial is its lex
/// leading monomial.
inline std::optional<AsymmetryWitness> find_asymmetry_witness(const RationalFunction& f) {
    const int n = f.ambient_n();
    for (int k = 1; k < n; ++k) {
        const Permutation t = Permutation::adjacent_transposition(n, k);
        const Polynomial diff = apply_permutation(f.numerator(), t) * f.denominator() -
                                f.numerator() * apply_permutation(f.denominator(), t);
        if (!diff.is_zero()) return AsymmetryWitness{k, lex_leading_term(diff).first};
    }
    return std::nullopt;
}

/// Symmetry of the quotient as a function, robust to non-symmetric
/// representations: (x1^2 + x1*x2)/x1 is symmetric because it equals x1 + x2.
inline bool is_symmetric(const RationalFunction& f) {
    return !find_asymmetry_witness(f).has_value();
}

/**
 * How to distribute the permuted images of the denominator between the two
 * sides of the symmetrizing quotient.  identity_in_product forms
 *
 *     f = P * prod_{pi != id} pi(Q)  /  prod_{all pi} pi(Q)
 *
 * whose parts are both symmetric whenever f is.  identity_separate instead
 * multiplies both parts by the full product (numerator P * prod_all,
 * denominator Q * prod_all); the quotient still equals f, but the parts are
 * generally not symmetric, so only the first reading supports decomposition.
 */
enum class SymmetrizationReading { identity_in_product, identity_separate };

/// The inflated but un-decomposed quotient produced by the symmetrization
/// construction.  Always equals f by cross-multiplication.
inline RationalFunction symmetrized_quotient(
    const RationalFunction& f,
    SymmetrizationReading reading = SymmetrizationReading::identity_in_product,
    int max_n = kDefaultFactorialGuard) {
    const int n = f.ambient_n();
    if (n > max_n)
        throw SizeGuardError("rational_fn.size_guard",
                             "symmetrization over " + std::to_string(n) +
                                 "! permutations exceeds the guard (max n = " +
                                 std::to_string(max_n) + ")");
    const Polynomial& q = f.denominator();
    if (q.is_zero()) throw ZeroInputError("zero denominator");  // unreachable, invariant

    std::vector<int> im(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) im[static_cast<std::size_t>(k)] = k;
    const std::vector<int> identity = im;
    Polynomial other_images = Polynomial::constant(n, 1);
    do {
        if (im != identity) other_images = other_images * apply_permutation(q, Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));

    if (reading == SymmetrizationReading::identity_in_product)
        return {f.numerator() * other_images, q * other_images};
    const Polynomial full_product = other_images * q;
    return {f.numerator() * full_product, q * full_product};
}

struct RationalDecomposeOptions {
    /// When the denominator is itself symmetric the n!-fold product only
    /// inflates degrees; decompose numerator and denominator directly.
    bool use_shortcut = true;
    int max_n = kDefaultFactorialGuard;
};

/**
 * Expresses a symmetric rational function as a quotient of two
 * sigma-polynomials.  General path: multiply the quotient through by every
 * non-identity permuted image of the denominator, making both parts
 * symmetric, then decompose each.  Output is not reduced; validity means
 * cross-multiplied equality with the input after expansion.
 */
inline SigmaRationalFunction decompose_rational(const RationalFunction& f,
                                                const RationalDecomposeOptions& options = {}) {
    if (auto witness = find_asymmetry_witness(f)) throw NotSymmetricError(*witness);
    if (options.use_shortcut && is_symmetric(f.denominator())) {
        // P = f * Q is symmetric whenever f and Q are.
        return {decompose_lex(f.numerator()).first, decompose_lex(f.denominator()).first};
    }
    const RationalFunction inflated =
        symmetrized_quotient(f, SymmetrizationReading::identity_in_product, options.max_n);
    return {decompose_lex(inflated.numerator()).first,
            decompose_lex(inflated.denominator()).first};
}

}  // namespace sympoly
