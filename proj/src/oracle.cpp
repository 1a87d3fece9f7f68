#include "mpecalc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <utility>

#include "mpecalc/error.hpp"

namespace mpecalc {

namespace {

// Neumaier compensated sum; 2^24 atoms lose too much with a plain loop.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

// Atom weights for every mask over events [first, first + count).
std::vector<double> half_weights(const std::vector<NamedEvent>& events, std::size_t first,
                                 std::size_t count) {
    std::vector<double> w(std::size_t{1} << count);
    for (std::size_t mask = 0; mask < w.size(); ++mask) {
        double weight = 1.0;
        for (std::size_t j = 0; j < count; ++j) {
            const double p = events[first + j].probability.value();
            weight *= (mask >> j) & 1U ? p : 1.0 - p;
        }
        w[mask] = weight;
    }
    return w;
}

constexpr std::uint64_t splitmix_step(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t trial_key(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t s = seed;
    std::uint64_t t = trial;
    return splitmix_step(s) ^ splitmix_step(t);
}

std::uint64_t count_hits(const SampleSpace& space, std::uint64_t seed, std::uint64_t begin,
                         std::uint64_t end) {
    std::uint64_t hits = 0;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
        std::uint64_t state = trial_key(seed, trial);
        for (const auto& e : space.events()) {
            const double u = static_cast<double>(splitmix_step(state) >> 11) * 0x1.0p-53;
            if (u < e.probability.value()) {
                ++hits;
                break;
            }
        }
    }
    return hits;
}

}  // namespace

SampleSpace::SampleSpace(std::vector<NamedEvent> events) : events_(std::move(events)) {}

SampleSpace SampleSpace::from_probabilities(std::span<const Probability> ps) {
    std::vector<NamedEvent> events;
    events.reserve(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        events.push_back({"e" + std::to_string(i + 1), ps[i]});
    }
    return SampleSpace{std::move(events)};
}

Enumeration enumerate_atoms(const SampleSpace& space) {
    const std::size_t n = space.size();
    if (n > kMaxExactEvents) {
        throw CapacityError("exact enumeration is limited to " + std::to_string(kMaxExactEvents) +
                            " events (got " + std::to_string(n) + "); use Monte Carlo");
    }
    const std::size_t low_count = n / 2;
    const auto low = half_weights(space.events(), 0, low_count);
    const auto high = half_weights(space.events(), low_count, n - low_count);

    CompensatedSum total;
    CompensatedSum any;
    for (std::size_t hi = 0; hi < high.size(); ++hi) {
        for (std::size_t lo = 0; lo < low.size(); ++lo) {
            const double w = high[hi] * low[lo];
            total.add(w);
            if (hi != 0 || lo != 0) {
                any.add(w);
            }
        }
    }
    return {static_cast<std::uint64_t>(low.size() * high.size()), total.value(), any.value()};
}

Probability union_probability_exact(const SampleSpace& space) {
    const Enumeration e = enumerate_atoms(space);
    if (std::abs(e.total_weight - 1.0) > 1e-9) {
        throw DomainError("atom weights sum to " + std::to_string(e.total_weight));
    }
    return Probability::from_computed(e.union_weight);
}

MonteCarloEstimate union_probability_monte_carlo(const SampleSpace& space, std::uint64_t trials,
                                                 std::uint64_t seed, unsigned threads) {
    if (trials == 0) {
        throw ArgumentError("monte carlo: trials must be positive");
    }
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));

    std::vector<std::uint64_t> hits(threads, 0);
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        const std::uint64_t chunk = trials / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t begin = t * chunk;
            const std::uint64_t end = t + 1 == threads ? trials : begin + chunk;
            workers.emplace_back([&, t, begin, end] { hits[t] = count_hits(space, seed, begin, end); });
        }
    }
    std::uint64_t total = 0;
    for (auto h : hits) {
        total += h;
    }
    const double p = static_cast<double>(total) / static_cast<double>(trials);
    return {Probability::from_computed(p), std::sqrt(p * (1.0 - p) / static_cast<double>(trials)),
            trials, seed};
}

CohortCells cohort_cells(const Cohort& cohort) {
    if (cohort.size == 0) {
        throw ArgumentError("cohort size must be positive");
    }
    const double n = static_cast<double>(cohort.size);
    const double diseased = n * cohort.disease_rate.value();
    const double healthy = n - diseased;
    CohortCells c;
    c.true_positive = diseased * cohort.sensitivity.value();
    c.false_negative = diseased - c.true_positive;
    c.false_positive = healthy * cohort.false_positive_rate.value();
    c.true_negative = healthy - c.false_positive;
    return c;
}

Probability cohort_posterior(const Cohort& cohort) {
    const CohortCells c = cohort_cells(cohort);
    const double positives = c.true_positive + c.false_positive;
    if (positives == 0.0) {
        throw DivisionError("cohort_posterior: no positive tests in cohort");
    }
    return Probability::from_computed(c.true_positive / positives);
}

}  // namespace mpecalc
