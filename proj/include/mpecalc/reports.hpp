#pragma once

// Reproductions of the published tables, figure datasets and worked
// examples. Every row that reproduces a printed number carries a check, so
// a table that prints is a table that matched.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mpecalc/probability.hpp"
#include "mpecalc/report.hpp"

namespace mpecalc {

// 0.8 added by cMPE to eight initial values.
ReportTable run_table1();

enum class Figure { fig1, fig5, fig6 };

// ArgumentError for anything but fig1/fig5/fig6.
Figure parse_figure(std::string_view name);

// fig1: cMPE vs clamped linear addition for bases 0.1..0.9 over an addend grid.
// fig5: rMPE vs P(H)/P(E) for priors 0.1..0.9 over e_ext in [prior, 1].
// fig6: the three-evidence rMPE evaluation with intermediates (step unused).
// ArgumentError unless 0 < grid_step <= 0.25.
ReportTable run_figure_dataset(Figure which, double grid_step = 0.05);

// Uniform grid from `from` to 1 inclusive; points are k*step snapped to 12
// decimals, with 1 appended when step does not divide the range.
std::vector<double> unit_grid(double from, double step);

struct Expected {
    std::string tag;
    double value = 0.0;
    double tolerance = 0.0;
};

struct Scenario;
using ScenarioBuilder = ReportTable (*)(const Scenario&);

struct Scenario {
    std::string name;
    std::string narrative;
    std::vector<std::pair<std::string, Probability>> inputs;
    std::vector<Expected> expected;
    bool independence_asserted = false;
    ScenarioBuilder build = nullptr;

    // ArgumentError when the input is not defined.
    [[nodiscard]] Probability input(std::string_view key) const;
};

// malaria, tuberculosis, deer, neptune.
const std::vector<Scenario>& scenario_catalog();

// ArgumentError listing the available names for an unknown one.
ReportTable run_scenario(std::string_view name);

// rMPE, P(H)/P(E), weight-bearing and residual evidence at one point.
// Domain errors are rethrown prefixed with the failing method's name.
ReportTable run_compare(Probability prior, Probability e_ext);

}  // namespace mpecalc
