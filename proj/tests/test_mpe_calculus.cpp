#include <doctest.h>

#include <array>
#include <vector>

#include "mpecalc/calculus.hpp"
#include "mpecalc/error.hpp"
#include "test_support.hpp"

using namespace mpecalc;
using mpecalc::testing::kTol;

namespace {

double add2(double a, double b) {
    const std::array ps{Probability{a}, Probability{b}};
    return cmpe_add(ps).value();
}

}  // namespace

TEST_CASE("mpe multiplies probabilities of error") {
    CHECK_NEAR(mpe(probabilities({0.6, 0.3})).value(), 0.18, kTol);
    CHECK_NEAR(mpe(probabilities({0.001, 0.001})).value(), 0.000001, 1e-15);
    CHECK(mpe(probabilities({0.123})).value() == 0.123);
    CHECK_THROWS_AS(mpe(std::vector<Probability>{}), ArgumentError);
}

TEST_CASE("cmpe_add") {
    CHECK_NEAR(add2(0.4, 0.7), 0.82, kTol);
    CHECK_NEAR(add2(0.8, 0.1), 0.82, kTol);
    CHECK_NEAR(add2(0.8, 0.9), 0.98, kTol);
    CHECK_NEAR(add2(0.8, 0.99), 0.998, kTol);
    CHECK_NEAR(add2(0.999, 0.999), 0.999999, kTol);
    CHECK(add2(0.37, 0.0) == 0.37);
    CHECK(add2(0.37, 1.0) == 1.0);
    CHECK_THROWS_AS(cmpe_add(std::vector<Probability>{}), ArgumentError);
}

TEST_CASE("cmpe_add_expanded matches the product form") {
    CHECK_NEAR(cmpe_add_expanded(Probability{0.4}, Probability{0.7}).value(), 0.82, kTol);
    CHECK(cmpe_add_expanded(Probability{0.5}, Probability{0.5}).value() == 0.75);
    CHECK(cmpe_add_expanded(Probability{0.37}, Probability{0.0}).value() == 0.37);

    mpecalc::testing::ProbabilityGen gen(11);
    for (int i = 0; i < 1000; ++i) {
        const Probability a = gen.next();
        const Probability b = gen.next();
        CHECK_NEAR(cmpe_add_expanded(a, b).value(), add2(a.value(), b.value()), 1e-12);
    }
}

TEST_CASE("dpe_subtract") {
    CHECK_NEAR(dpe_subtract(Probability{0.99998}, probabilities({0.9998})).value(), 0.9, kTol);
    CHECK(dpe_subtract(Probability{0.42}, probabilities({0.0})).value() == 0.42);

    SUBCASE("errors") {
        CHECK_THROWS_AS(dpe_subtract(Probability{0.9}, probabilities({1.0})), DivisionError);
        CHECK_THROWS_AS(dpe_subtract(Probability{0.9}, probabilities({0.3, 1.0})), DivisionError);
        CHECK_THROWS_AS(dpe_subtract(Probability{0.3}, probabilities({0.5})), DomainError);
        CHECK_THROWS_AS(dpe_subtract(Probability{0.3}, std::vector<Probability>{}), ArgumentError);
    }

    SUBCASE("several subtrahends form a single quotient") {
        // 1 - 0.1 / (0.5 * 0.4) = 0.5
        CHECK_NEAR(dpe_subtract(Probability{0.9}, probabilities({0.5, 0.6})).value(), 0.5, 1e-12);
    }
}

TEST_CASE("dpe undoes cmpe on the 0.05 grid") {
    for (double a : mpecalc::testing::grid(0.05)) {
        for (double b : mpecalc::testing::grid(0.05)) {
            if (b >= 1.0) {
                continue;
            }
            const std::array sub{Probability{b}};
            const Probability sum{add2(a, b)};
            CHECK_NEAR(dpe_subtract(sum, sub).value(), a, 1e-12);
        }
    }
}

TEST_CASE("support measures") {
    const auto big = support(Probability{0.99998}, Probability{0.9998});
    CHECK_NEAR(big.linear, 0.00018, kTol);
    REQUIRE(big.dpe_based.has_value());
    CHECK_NEAR(big.dpe_based->value(), 0.9, kTol);
    // DPE gives 5000 times the linear difference here.
    CHECK_NEAR(big.dpe_based->value() / big.linear, 5000.0, 1e-3);

    const auto self = support(Probability{0.3}, Probability{0.3});
    CHECK(self.linear == 0.0);
    REQUIRE(self.dpe_based.has_value());
    CHECK(self.dpe_based->value() == 0.0);

    const auto winkler = support(Probability{0.165}, Probability{0.01});
    CHECK_NEAR(winkler.linear, 0.155, kTol);
    REQUIRE(winkler.dpe_based.has_value());
    CHECK_NEAR(winkler.dpe_based->value(), 1.0 - 0.835 / 0.99, kTol);
    CHECK_NEAR(winkler.dpe_based->value(), 0.15657, 1e-5);

    const auto down = support(Probability{0.2}, Probability{0.5});
    CHECK_NEAR(down.linear, -0.3, kTol);
    CHECK_FALSE(down.dpe_based.has_value());

    const auto at_one = support(Probability{1.0}, Probability{1.0});
    CHECK(at_one.linear == 0.0);
    CHECK_FALSE(at_one.dpe_based.has_value());
}

TEST_CASE("property: probabilistic-sum t-conorm laws") {
    mpecalc::testing::ProbabilityGen gen(2024);
    for (int i = 0; i < 1000; ++i) {
        const double a = gen.next().value();
        const double b = gen.next().value();
        const double c = gen.next().value();
        CHECK_NEAR(add2(a, b), add2(b, a), 1e-12);
        CHECK_NEAR(add2(add2(a, b), c), add2(a, add2(b, c)), 1e-12);
        const std::array triple{Probability{a}, Probability{b}, Probability{c}};
        CHECK_NEAR(cmpe_add(triple).value(), add2(add2(a, b), c), 1e-12);
        CHECK_NEAR(add2(a, 0.0), a, 1e-12);
        CHECK(add2(a, 1.0) == 1.0);
        CHECK(add2(a, b) >= std::max(a, b));
    }
}

TEST_CASE("property: cmpe_add is monotone in each argument") {
    mpecalc::testing::ProbabilityGen gen(5);
    for (int i = 0; i < 1000; ++i) {
        const double a = gen.next().value();
        const double b = gen.next().value();
        const double bigger = gen.between(b, 1.0);
        CHECK(add2(a, bigger) >= add2(a, b));
    }
}

TEST_CASE("property: lines of constant base are straight and meet at 1") {
    const auto g = mpecalc::testing::grid(0.05);
    for (double a : g) {
        for (std::size_t k = 1; k + 1 < g.size(); ++k) {
            const double second = add2(a, g[k + 1]) - 2.0 * add2(a, g[k]) + add2(a, g[k - 1]);
            CHECK(std::abs(second) <= 1e-12);
        }
        CHECK(add2(a, 1.0) == 1.0);
    }
}

TEST_CASE("property: mpe and cmpe are complementary") {
    mpecalc::testing::ProbabilityGen gen(99);
    for (int i = 0; i < 500; ++i) {
        const auto ps = gen.many(gen.index(1, 6));
        std::vector<Probability> complements;
        for (Probability p : ps) {
            complements.push_back(complement(p));
        }
        CHECK_NEAR(mpe(ps).value(), 1.0 - cmpe_add(complements).value(), 1e-12);
    }
}
