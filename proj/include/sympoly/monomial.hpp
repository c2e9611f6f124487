#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "sympoly/errors.hpp"

namespace sympoly {

/**
 * A power product x_1^{e_1} ... x_n^{e_n} over a fixed ambient variable
 * count n.  The ambient count is part of the identity: x_1^2 with n = 2 and
 * x_1^2 with n = 3 are different monomials (their symmetric closures differ).
 *
 * Ordering is lexicographic on the exponent vector (exponent of x_1 first),
 * which is the order used by std::map term storage and by lex_compare.
 */
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
        if (exps_.empty())
            throw AmbientMismatchError("monomial needs a positive ambient variable count");
        for (int e : exps_)
            if (e < 0) throw AmbientMismatchError("monomial exponents must be nonnegative");
    }

    /// The empty power product (all exponents zero), i.e. the constant 1.
    static Monomial unit(int ambient_n) { return Monomial(std::vector<int>(ambient_n, 0)); }

    int ambient_n() const { return static_cast<int>(exps_.size()); }
    const std::vector<int>& exponents() const { return exps_; }

    /// 0-based: exponent of x_{k+1}.
    int operator[](int k) const { return exps_[static_cast<std::size_t>(k)]; }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    bool is_unit() const {
        for (int e : exps_)
            if (e != 0) return false;
        return true;
    }

    /// Exponent-wise sum, i.e. the product of the two power products.
    Monomial times(const Monomial& other) const {
        if (exps_.size() != other.exps_.size())
            throw AmbientMismatchError("monomial product across different ambient counts");
        std::vector<int> e(exps_);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += other.exps_[k];
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        return a.exps_ <=> b.exps_;
    }

private:
    std::vector<int> exps_;
};

}  // namespace sympoly
