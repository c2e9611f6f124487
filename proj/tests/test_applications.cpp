#include <catch2/catch_amalgamated.hpp>

#include "support/test_support.hpp"
#include "sympoly/sympoly.hpp"

using namespace sympoly;
using testsupport::Rng;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> values) {
    return {values.begin(), values.end()};
}

}  // namespace

TEST_CASE("power_roots_coefficient: the symbolic quadratic case") {
    // Squaring the roots of z^2 - s1*z + s2 gives z^2 - (s1^2 - 2*s2)*z + s2^2.
    CHECK(power_roots_coefficient(1, 2, 2) == parse_sigma("s1^2 - 2*s2", 2));
    CHECK(power_roots_coefficient(2, 2, 2) == parse_sigma("s2^2", 2));
}

TEST_CASE("power_roots_transform") {
    const MonicPoly f(rationals({-3, 2}));  // z^2 - 3z + 2, roots 1 and 2
    CHECK(power_roots_transform(f, 2) == MonicPoly(rationals({-5, 4})));  // roots 1 and 4
    CHECK(power_roots_transform(f, 1) == f);

    // Irrational roots: z^2 - 2 has roots +-sqrt(2); their squares are 2, 2.
    const MonicPoly irrational(rationals({0, -2}));
    CHECK(power_roots_transform(irrational, 2) == MonicPoly(rationals({-4, 4})));

    CHECK(power_roots_transform(MonicPoly(), 3) == MonicPoly());
    CHECK_THROWS_AS(power_roots_transform(f, 0), OutOfRangeError);
}

TEST_CASE("resultant_vs_roots") {
    const MonicPoly f(rationals({-3, 2}));            // roots 1, 2
    CHECK(resultant_vs_roots(f, rationals({1, -2})).is_zero());   // g = z - 2
    CHECK(resultant_vs_roots(f, rationals({1, -5})) == Rational(12));  // (-4)*(-3)
    CHECK(resultant_vs_roots(f, {Rational(1), Rational(-3), Rational(2)}).is_zero());  // g = f
    CHECK_THROWS_AS(resultant_vs_roots(MonicPoly(), rationals({1})), OutOfRangeError);
}

TEST_CASE("common_root") {
    CHECK(common_root(MonicPoly(rationals({-3, 2})), rationals({1, -5, 6})));    // share 2
    CHECK_FALSE(common_root(MonicPoly(rationals({-3, 2})), rationals({1, -7, 12})));
    CHECK_FALSE(common_root(MonicPoly(rationals({-3, 2})), rationals({1})));     // g = 1
}

TEST_CASE("power-roots correctness on random rational roots") {
    Rng rng(60601);
    for (int i = 0; i < 40; ++i) {
        const int deg = testsupport::uniform(rng, 1, 4);
        const int m = testsupport::uniform(rng, 1, 3);
        std::vector<Rational> roots;
        for (int k = 0; k < deg; ++k) roots.push_back(testsupport::random_rational(rng, 4, 2));

        const MonicPoly f = MonicPoly::from_roots(roots);
        const MonicPoly g = power_roots_transform(f, m);

        std::vector<Rational> powered;
        for (const Rational& r : roots) {
            Rational p = 1;
            for (int j = 0; j < m; ++j) p *= r;
            powered.push_back(p);
        }
        REQUIRE(g == MonicPoly::from_roots(powered));
        for (const Rational& r : powered)
            REQUIRE(testsupport::eval_univariate(g.full_coefficients(), r).is_zero());
    }
}

TEST_CASE("resultant agrees with the direct product over known roots") {
    Rng rng(70707);
    for (int i = 0; i < 40; ++i) {
        const int deg_f = testsupport::uniform(rng, 1, 4);
        const int deg_g = testsupport::uniform(rng, 0, 4);
        std::vector<Rational> roots;
        for (int k = 0; k < deg_f; ++k) roots.push_back(testsupport::random_rational(rng, 4, 2));
        std::vector<Rational> g;
        for (int k = 0; k <= deg_g; ++k) g.push_back(testsupport::random_rational(rng));

        Rational direct = 1;
        for (const Rational& r : roots) direct *= testsupport::eval_univariate(g, r);
        REQUIRE(resultant_vs_roots(MonicPoly::from_roots(roots), g) == direct);
    }
}

TEST_CASE("common_root agrees with the Euclidean GCD oracle") {
    Rng rng(81818);
    for (int i = 0; i < 60; ++i) {
        const int deg_f = testsupport::uniform(rng, 1, 4);
        std::vector<Rational> f_trailing;
        for (int k = 0; k < deg_f; ++k) f_trailing.push_back(testsupport::random_rational(rng, 4, 2));
        MonicPoly f(f_trailing);

        std::vector<Rational> g;
        if (i % 3 == 0) {
            // Engineer a shared factor: g = (z - r) * random with r a root of
            // a replacement f = (z - r) * monic-random.
            const Rational r = testsupport::random_rational(rng, 3, 2);
            std::vector<Rational> rest;
            for (int k = 0; k < deg_f - 1; ++k) rest.push_back(testsupport::random_rational(rng, 3, 2));
            std::vector<Rational> f_roots = rest;
            f_roots.push_back(r);
            f = MonicPoly::from_roots(f_roots);
            const std::vector<Rational> factor{1, -r};
            std::vector<Rational> cofactor;
            const int deg_c = testsupport::uniform(rng, 0, 2);
            for (int k = 0; k <= deg_c; ++k) cofactor.push_back(testsupport::random_rational(rng));
            // multiply factor * cofactor
            if (testsupport::strip_leading_zeros(cofactor).empty()) cofactor = {Rational(1)};
            g.assign(factor.size() + cofactor.size() - 1, Rational(0));
            for (std::size_t a = 0; a < factor.size(); ++a)
                for (std::size_t b = 0; b < cofactor.size(); ++b) g[a + b] += factor[a] * cofactor[b];
        } else {
            const int deg_g = testsupport::uniform(rng, 0, 4);
            for (int k = 0; k <= deg_g; ++k) g.push_back(testsupport::random_rational(rng));
        }

        const bool via_resultant = common_root(f, g);
        const bool via_gcd = testsupport::gcd_degree(f.full_coefficients(), g) >= 1;
        REQUIRE(via_resultant == via_gcd);
    }
}
