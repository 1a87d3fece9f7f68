#include <doctest.h>

#include <vector>

#include "mpecalc/bayes.hpp"
#include "mpecalc/error.hpp"
#include "test_support.hpp"

using namespace mpecalc;
using mpecalc::testing::kTol;

namespace {

BayesInputs with_marginal(double h, double l, double e) {
    return {Probability{h}, Probability{l}, Probability{e}, std::nullopt};
}

BayesInputs with_false_positive(double h, double l, double fp) {
    return {Probability{h}, Probability{l}, std::nullopt, Probability{fp}};
}

// Independent route for broad_chain: rebuild the denominator from scratch
// for every step.
double broad_direct(double prior, const std::vector<double>& cs, std::size_t steps) {
    double denominator = 1.0;
    for (std::size_t i = 0; i < steps; ++i) {
        denominator *= cs[i];
    }
    return prior / denominator;
}

}  // namespace

TEST_CASE("bayes_inverse") {
    CHECK(bayes_inverse(with_marginal(0.5, 1.0, 1.0)).value() == 0.5);
    CHECK_NEAR(bayes_inverse(with_marginal(0.3, 1.0, 0.4)).value(), 0.75, kTol);
    CHECK(bayes_inverse(with_marginal(0.37, 1.0, 1.0)).value() == 0.37);

    CHECK_THROWS_AS(bayes_inverse(with_marginal(0.3, 1.0, 0.0)), DivisionError);
    CHECK_THROWS_AS(bayes_inverse(with_marginal(0.5, 0.9, 0.2)), DomainError);
    CHECK_THROWS_AS(bayes_inverse(with_false_positive(0.5, 0.9, 0.2)), ArgumentError);
}

TEST_CASE("bayes_total") {
    CHECK_NEAR(bayes_total(with_false_positive(0.01, 0.98, 0.05)).value(), 0.0098 / 0.0593, 1e-12);
    CHECK_NEAR(bayes_total(with_false_positive(0.01, 0.98, 0.05)).value(), 0.16526, 1e-5);
    CHECK(bayes_total(with_false_positive(0.2, 0.7, 0.0)).value() == 1.0);
    CHECK_NEAR(bayes_total(with_false_positive(0.5, 0.33, 0.33)).value(), 0.5, 1e-12);

    CHECK_THROWS_AS(bayes_total(with_false_positive(0.0, 0.7, 0.0)), DivisionError);
    CHECK_THROWS_AS(bayes_total(with_marginal(0.5, 0.9, 0.9)), ArgumentError);
}

TEST_CASE("bayes_implication") {
    CHECK_NEAR(bayes_implication(Probability{0.4}, Probability{0.6}).value(), 2.0 / 3.0, 1e-12);
    CHECK_NEAR(bayes_implication(Probability{0.4}, Probability{0.6}).value(), 0.6667, 1e-4);
    CHECK_NEAR(bayes_implication(Probability{0.4}, Probability{0.8}).value(), 0.5, 1e-12);
    CHECK_NEAR(bayes_implication(Probability{0.4}, Probability{1.0}).value(), 0.4, 1e-12);
    CHECK(bayes_implication(Probability{0.4}, Probability{0.4}).value() == 1.0);

    CHECK_THROWS_AS(bayes_implication(Probability{0.5}, Probability{0.4}), DomainError);
    CHECK_THROWS_AS(bayes_implication(Probability{0.0}, Probability{0.0}), DivisionError);
}

TEST_CASE("relative_frequency") {
    CHECK_NEAR(relative_frequency({98, 593}).value(), 0.0098 / 0.0593, 1e-12);
    CHECK(relative_frequency({0, 17}).value() == 0.0);
    CHECK(relative_frequency({17, 17}).value() == 1.0);
    CHECK_THROWS_AS(relative_frequency({0, 0}), ArgumentError);
    CHECK_THROWS_AS(relative_frequency({5, 4}), ArgumentError);
}

TEST_CASE("broad_chain") {
    const std::vector<double> cs{0.9, 0.8, 0.7, 0.6};

    const auto three = broad_chain(Probability{0.5}, probabilities({0.9, 0.8, 0.7}));
    REQUIRE(three.size() == 3);
    CHECK_NEAR(three.back().value, broad_direct(0.5, cs, 3), 1e-12);
    CHECK_NEAR(three.back().value, 0.99206, 1e-5);
    CHECK_FALSE(three.back().exceeds_one);

    const auto four = broad_chain(Probability{0.5}, probabilities({0.9, 0.8, 0.7, 0.6}));
    REQUIRE(four.size() == 4);
    for (std::size_t k = 0; k < four.size(); ++k) {
        CHECK(four[k].step == k + 1);
        CHECK_NEAR(four[k].value, broad_direct(0.5, cs, k + 1), 1e-12);
    }
    CHECK_NEAR(four.back().value, 1.65344, 1e-4);
    CHECK(four.back().exceeds_one);
    CHECK_FALSE(four[2].exceeds_one);

    CHECK(broad_chain(Probability{0.5}, std::vector<Probability>{}).empty());
    CHECK_THROWS_AS(broad_chain(Probability{0.5}, probabilities({0.9, 0.0})), DivisionError);
}

TEST_CASE("property: broad_chain never decreases and strictly grows below 1") {
    mpecalc::testing::ProbabilityGen gen(3);
    for (int i = 0; i < 300; ++i) {
        std::vector<Probability> cs;
        const std::size_t n = gen.index(1, 10);
        for (std::size_t j = 0; j < n; ++j) {
            cs.emplace_back(gen.between(0.05, 0.999));
        }
        const Probability prior{gen.between(0.01, 1.0)};
        const auto steps = broad_chain(prior, cs);
        double last = prior.value();
        for (const auto& s : steps) {
            CHECK(s.value > last);
            CHECK(s.exceeds_one == (s.value > 1.0));
            last = s.value;
        }
    }
    const auto flat = broad_chain(Probability{0.5}, probabilities({1.0, 1.0}));
    CHECK(flat[0].value == 0.5);
    CHECK(flat[1].value == 0.5);
}

TEST_CASE("property: total probability makes bayes_total and bayes_inverse agree") {
    mpecalc::testing::ProbabilityGen gen(404);
    for (int i = 0; i < 1000; ++i) {
        const double h = gen.between(0.001, 1.0);
        const double l = gen.between(0.001, 1.0);
        const double fp = gen.next().value();
        const double marginal = h * l + (1.0 - h) * fp;
        const double inverse = bayes_inverse(with_marginal(h, l, marginal)).value();
        const double total = bayes_total(with_false_positive(h, l, fp)).value();
        CHECK_NEAR(inverse, total, 1e-12);
    }
}

TEST_CASE("property: bayes_total equals the relative frequency of the same cohort") {
    mpecalc::testing::ProbabilityGen gen(505);
    for (std::uint64_t size : {100ULL, 1'000ULL, 10'000ULL, 100'000ULL, 1'000'000ULL}) {
        for (int i = 0; i < 50; ++i) {
            const std::uint64_t diseased = gen.index(1, size - 1);
            const std::uint64_t true_pos = gen.index(1, diseased);
            const std::uint64_t false_pos = gen.index(0, size - diseased);
            const double n = static_cast<double>(size);
            const BayesInputs rates{Probability{diseased / n},
                                    Probability{static_cast<double>(true_pos) / diseased},
                                    std::nullopt,
                                    Probability{static_cast<double>(false_pos) / (n - diseased)}};
            CHECK_NEAR(bayes_total(rates).value(),
                       relative_frequency({true_pos, true_pos + false_pos}).value(), 1e-12);
        }
    }
}

TEST_CASE("property: P(H)/P(E) is strictly convex in P(E)") {
    for (int k = 1; k < 10; ++k) {
        const double h = k / 10.0;
        std::vector<double> es;
        for (int j = 0; j <= 20; ++j) {
            es.push_back(h + (1.0 - h) * j / 20.0);
        }
        for (std::size_t j = 1; j + 1 < es.size(); ++j) {
            const auto q = [&](double e) {
                return bayes_implication(Probability{h}, Probability{e}).value();
            };
            CHECK(q(es[j + 1]) - 2.0 * q(es[j]) + q(es[j - 1]) > 0.0);
        }
    }
}
