#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sympoly/polynomial.hpp"

namespace sympoly {

/**
 * A permutation of n variable slots.  images()[k] (0-based) is where
 * variable x_{k+1} is sent, also 0-based; the vector is a bijection of
 * {0, ..., n-1}.
 */
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int i : images_) {
            if (i < 0 || i >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(i)])
                throw AmbientMismatchError("permutation images must be a bijection");
            seen[static_cast<std::size_t>(i)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) im[static_cast<std::size_t>(k)] = k;
        return Permutation(std::move(im));
    }

    /// The transposition (x_{k} x_{k+1}), k 1-based in 1..n-1.
    static Permutation adjacent_transposition(int n, int k) {
        Permutation p = identity(n);
        std::swap(p.images_[static_cast<std::size_t>(k - 1)], p.images_[static_cast<std::size_t>(k)]);
        return p;
    }

    int size() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }

private:
    std::vector<int> images_;
};

inline Monomial apply_permutation(const Monomial& m, const Permutation& p) {
    if (p.size() != m.ambient_n())
        throw AmbientMismatchError("permutation size differs from monomial ambient count");
    std::vector<int> e(static_cast<std::size_t>(m.ambient_n()), 0);
    for (int k = 0; k < m.ambient_n(); ++k) e[static_cast<std::size_t>(p.images()[static_cast<std::size_t>(k)])] = m[k];
    return Monomial(std::move(e));
}

/// Relabels variables: x_k becomes x_{p(k)}.  Coefficients are untouched.
inline Polynomial apply_permutation(const Polynomial& f, const Permutation& p) {
    if (p.size() != f.ambient_n())
        throw AmbientMismatchError("permutation size differs from polynomial ambient count");
    PolynomialAccumulator acc(f.ambient_n());
    for (const auto& [m, c] : f.terms()) acc.add(apply_permutation(m, p), c);
    return acc.finish();
}

/// Evidence that f is not symmetric: swapping x_k and x_{k+1} moves the
/// witness monomial onto one with a different coefficient.
struct AsymmetryWitness {
    int transposition;  // 1-based k, meaning the swap (x_k x_{k+1})
    Monomial monomial;
};

class NotSymmetricError : public Error {
public:
    explicit NotSymmetricError(AsymmetryWitness witness)
        : Error("decompose.not_symmetric",
                "polynomial is not symmetric (transposition (x" +
                    std::to_string(witness.transposition) + " x" +
                    std::to_string(witness.transposition + 1) + ") changes it)"),
          witness_(std::move(witness)) {}

    const AsymmetryWitness& witness() const { return witness_; }

private:
    AsymmetryWitness witness_;
};

/// First violating (transposition, monomial) pair in scan order, or nullopt
/// when f is fixed by every adjacent transposition (hence by all of S_n).
inline std::optional<AsymmetryWitness> find_asymmetry_witness(const Polynomial& f) {
    const int n = f.ambient_n();
    for (int k = 1; k < n; ++k) {
        for (const auto& [m, c] : f.terms()) {
            std::vector<int> e = m.exponents();
            std::swap(e[static_cast<std::size_t>(k - 1)], e[static_cast<std::size_t>(k)]);
            if (f.coefficient(Monomial(std::move(e))) != c)
                return AsymmetryWitness{k, m};
        }
    }
    return std::nullopt;
}

/// True iff f is invariant under every permutation of the variables.
/// Checking the n-1 adjacent transpositions suffices: they generate S_n.
inline bool is_symmetric(const Polynomial& f) { return !find_asymmetry_witness(f).has_value(); }

/// All distinct permutations of m's exponent vector (its "conjugates"),
/// enumerated from the sorted multiset so duplicates never arise.
inline std::vector<Monomial> monomial_orbit(const Monomial& m) {
    std::vector<int> e = m.exponents();
    std::sort(e.begin(), e.end());
    std::vector<Monomial> orbit;
    do {
        orbit.emplace_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    return orbit;
}

/// The monomial symmetric polynomial: sum of the orbit, all coefficients 1.
inline Polynomial orbit_sum(const Monomial& m) {
    PolynomialAccumulator acc(m.ambient_n());
    for (const Monomial& o : monomial_orbit(m)) acc.add(o, 1);
    return acc.finish();
}

inline constexpr int kDefaultFactorialGuard = 5;

/**
 * Product of q over all n! variable permutations; symmetric by construction
 * and of total degree n! * deg(q).  Factorial in n, so refuses to run past
 * max_n (default 5) rather than silently grinding.
 */
inline Polynomial permutation_product(const Polynomial& q, int max_n = kDefaultFactorialGuard) {
    if (q.is_zero()) throw ZeroInputError("permutation product of the zero polynomial");
    const int n = q.ambient_n();
    if (n > max_n)
        throw SizeGuardError("symmetry.size_guard",
                             "permutation product over " + std::to_string(n) +
                                 "! permutations exceeds the guard (max n = " +
                                 std::to_string(max_n) + ")");
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) im[static_cast<std::size_t>(k)] = k;
    Polynomial product = Polynomial::constant(n, 1);
    do {
        product = product * apply_permutation(q, Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return product;
}

}  // namespace sympoly
