#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "support/test_support.hpp"
#include "sympoly/sympoly.hpp"

using namespace sympoly;
using testsupport::Rng;

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

TEST_CASE("apply_permutation") {
    const Polynomial f = parse_poly("x1 - x2", 2);
    CHECK(apply_permutation(f, Permutation({1, 0})) == parse_poly("x2 - x1", 2));
    CHECK(apply_permutation(f, Permutation::identity(2)) == f);
    // the cycle x1 -> x2 -> x3 -> x1 relabels x1^2*x2 into x2^2*x3
    CHECK(apply_permutation(parse_poly("x1^2*x2", 3), Permutation({1, 2, 0})) ==
          parse_poly("x2^2*x3", 3));
    CHECK_THROWS_AS(apply_permutation(f, Permutation::identity(3)), AmbientMismatchError);
    CHECK_THROWS_AS(Permutation({0, 0}), AmbientMismatchError);
}

TEST_CASE("is_symmetric") {
    CHECK(is_symmetric(parse_poly("(x1 - x2)^2", 2)));
    CHECK_FALSE(is_symmetric(parse_poly("x1 - x2", 2)));
    CHECK_FALSE(is_symmetric(parse_poly("x1^2 + x2", 2)));
    CHECK(is_symmetric(Polynomial(3)));  // zero polynomial

    const auto witness = find_asymmetry_witness(parse_poly("x1^2 + x2", 2));
    REQUIRE(witness.has_value());
    CHECK(witness->transposition == 1);
}

TEST_CASE("monomial_orbit") {
    const auto orbit = monomial_orbit(Monomial({2, 1, 0}));
    CHECK(orbit.size() == 6);
    const std::set<Monomial> expected{Monomial({2, 1, 0}), Monomial({2, 0, 1}),
                                      Monomial({1, 2, 0}), Monomial({0, 2, 1}),
                                      Monomial({1, 0, 2}), Monomial({0, 1, 2})};
    CHECK(std::set<Monomial>(orbit.begin(), orbit.end()) == expected);

    CHECK(monomial_orbit(Monomial({1, 1, 1})).size() == 1);
    CHECK(monomial_orbit(Monomial::unit(3)).size() == 1);
}

TEST_CASE("orbit_sum") {
    CHECK(orbit_sum(Monomial({4, 0})) == parse_poly("x1^4 + x2^4", 2));
    CHECK(orbit_sum(Monomial({1, 1})) == parse_poly("x1*x2", 2));
    CHECK(orbit_sum(Monomial({2, 1, 0})) ==
          parse_poly("x1^2*x2 + x1^2*x3 + x2^2*x1 + x2^2*x3 + x3^2*x1 + x3^2*x2", 3));
}

TEST_CASE("permutation_product") {
    CHECK(permutation_product(parse_poly("x1", 2)) == parse_poly("x1*x2", 2));
    // (x1 + 2*x2)(x2 + 2*x1) = 2*x1^2 + 5*x1*x2 + 2*x2^2
    CHECK(permutation_product(parse_poly("x1 + 2*x2", 2)) ==
          parse_poly("2*x1^2 + 5*x1*x2 + 2*x2^2", 2));
    CHECK(permutation_product(Polynomial::constant(2, 3)) == Polynomial::constant(2, 9));
    CHECK_THROWS_AS(permutation_product(Polynomial(2)), ZeroInputError);
    CHECK_THROWS_AS(permutation_product(parse_poly("x1", 6)), SizeGuardError);
    CHECK(permutation_product(parse_poly("x1", 6), 6).term_count() == 1);
}

TEST_CASE("orbit sums are symmetric") {
    Rng rng(12341);
    for (int i = 0; i < 100; ++i) {
        const int n = testsupport::uniform(rng, 1, 5);
        const Monomial m = testsupport::random_monomial(rng, n, 8);
        REQUIRE(is_symmetric(orbit_sum(m)));
    }
}

TEST_CASE("generator check agrees with the full-group oracle") {
    Rng rng(55521);
    for (int i = 0; i < 80; ++i) {
        const int n = testsupport::uniform(rng, 2, 4);
        Polynomial f = testsupport::random_symmetric(rng, n, 6);
        if (i % 2 == 1 && !f.is_zero()) {
            // Perturb one coefficient so most of these become asymmetric.
            f += Polynomial::monomial(testsupport::random_monomial(rng, n, 6),
                                      testsupport::random_nonzero_rational(rng));
        }
        REQUIRE(is_symmetric(f) == testsupport::symmetric_under_full_group(f));
    }
}

TEST_CASE("symmetric polynomials have orbit-constant coefficients") {
    Rng rng(77001);
    for (int i = 0; i < 60; ++i) {
        const int n = testsupport::uniform(rng, 1, 5);
        const Polynomial f = testsupport::random_symmetric(rng, n, 8);
        for (const auto& [m, c] : f.terms())
            for (const Monomial& o : monomial_orbit(m)) REQUIRE(f.coefficient(o) == c);
    }
}

TEST_CASE("permutation_product output is symmetric of degree n!*deg(q)") {
    Rng rng(88221);
    for (int i = 0; i < 30; ++i) {
        const int n = testsupport::uniform(rng, 1, 4);
        Polynomial q = testsupport::random_polynomial(rng, n, 3);
        if (q.is_zero()) q = Polynomial::constant(n, 1);
        const Polynomial product = permutation_product(q);
        REQUIRE(is_symmetric(product));
        REQUIRE(total_degree(product) == factorial(n) * *total_degree(q));
    }
}

TEST_CASE("orbit size divides n!") {
    Rng rng(31337);
    for (int i = 0; i < 100; ++i) {
        const int n = testsupport::uniform(rng, 1, 5);
        const Monomial m = testsupport::random_monomial(rng, n, 8);
        REQUIRE(factorial(n) % static_cast<long long>(monomial_orbit(m).size()) == 0);
    }
}
