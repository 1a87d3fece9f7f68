#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mpecalc/probability.hpp"

#define CHECK_NEAR(got, want, tol) CHECK(std::abs((got) - (want)) <= (tol))
#define REQUIRE_NEAR(got, want, tol) REQUIRE(std::abs((got) - (want)) <= (tol))

namespace mpecalc::testing {

inline constexpr double kTol = 1e-9;

// Fixed-seed source of probabilities for property checks.
class ProbabilityGen {
public:
    explicit ProbabilityGen(std::uint64_t seed) : rng_(seed) {}

    Probability next() { return Probability{unit_(rng_)}; }

    // Uniform on [lo, hi].
    double between(double lo, double hi) { return lo + (hi - lo) * unit_(rng_); }

    std::vector<Probability> many(std::size_t n) {
        std::vector<Probability> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(next());
        }
        return out;
    }

    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

// 0, step, 2*step, ..., 1 with no accumulated drift.
inline std::vector<double> grid(double step) {
    std::vector<double> out;
    const int n = static_cast<int>(std::lround(1.0 / step));
    for (int k = 0; k <= n; ++k) {
        out.push_back(static_cast<double>(k) / n);
    }
    return out;
}

}  // namespace mpecalc::testing
