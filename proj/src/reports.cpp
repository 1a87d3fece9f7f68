#include "mpecalc/reports.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "mpecalc/bayes.hpp"
#include "mpecalc/calculus.hpp"
#include "mpecalc/confirmation.hpp"
#include "mpecalc/error.hpp"
#include "mpecalc/oracle.hpp"

namespace mpecalc {

namespace {

constexpr double kPrintedEchoTolerance = 1e-12;

const std::vector<std::string> kPrintedColumns{"value", "rounded", "printed"};

double snap12(double x) { return std::round(x * 1e12) / 1e12; }

bool near(double a, double b) { return std::abs(a - b) < 1e-9; }

// value | value at printed precision | printed value.
ReportRow printed_row(std::string tag, double value, double printed, int decimals) {
    ReportRow row{std::move(tag),
                  {Cell{value}, Cell{round_decimals(value, decimals), decimals}, Cell{printed, decimals}},
                  {}};
    row.checks.push_back({1, printed, kPrintedEchoTolerance});
    return row;
}

ReportRow plain_row(std::string tag, double value) {
    return {std::move(tag), {Cell{value}, Cell::missing(), Cell::missing()}, {}};
}

// Attaches the scenario's expected values to the row, by tag.
ReportRow checked(const Scenario& s, ReportRow row) {
    for (const Expected& e : s.expected) {
        if (e.tag == row.tag) {
            row.checks.push_back({0, e.value, e.tolerance});
        }
    }
    return row;
}

ReportTable scenario_table(const Scenario& s) {
    ReportTable t("scenario " + s.name, kPrintedColumns);
    t.add_note("narrative", s.narrative);
    for (const auto& [key, p] : s.inputs) {
        t.add_note("input " + key, format_significant(p.value(), 17));
    }
    t.add_note("semantic independence", s.independence_asserted ? "asserted" : "not required");
    return t;
}

ReportTable build_malaria(const Scenario& s) {
    ReportTable t = scenario_table(s);
    const Probability prior = s.input("prior");
    const Probability evidence = s.input("evidence");
    const Probability bt = bayes_inverse({prior, s.input("likelihood"), evidence, std::nullopt});
    const ConfirmationResult rm = rmpe_implication({prior, evidence});
    t.add_row(checked(s, printed_row("bayes_inverse", bt.value(), 0.5, 1)));
    t.add_row(checked(s, printed_row("rmpe", rm.value.value(), 0.75, 2)));
    t.add_row(plain_row("weight_bearing", rm.e_w->value()));
    t.add_row(plain_row("residual", rm.residual->value()));
    return t;
}

ReportTable build_tuberculosis(const Scenario& s) {
    ReportTable t = scenario_table(s);
    const Probability prior = s.input("prior");
    const Probability sens = s.input("sensitivity");
    const Probability fp = s.input("false_positive");

    const Probability joint = conjoin_conditional(prior, sens);
    const Probability false_mass = conjoin_conditional(complement(prior), fp);
    const double positives = joint.value() + false_mass.value();
    const Probability bt = bayes_total({prior, sens, std::nullopt, fp});
    const Probability cohort = cohort_posterior({1'000'000, prior, sens, fp});

    const CohortCells cells = cohort_cells({10'000, prior, sens, fp});
    const auto favorable = static_cast<std::uint64_t>(std::llround(cells.true_positive));
    const auto possible =
        favorable + static_cast<std::uint64_t>(std::llround(cells.false_positive));
    const Probability freq = relative_frequency({favorable, possible});

    t.add_note("relative frequency cohort", "10000 persons: " + std::to_string(favorable) +
                                                " diseased positives of " +
                                                std::to_string(possible) + " positives");
    t.add_row(checked(s, printed_row("joint_positive", joint.value(), 0.0098, 4)));
    t.add_row(checked(s, printed_row("false_positive_mass", false_mass.value(), 0.0495, 4)));
    t.add_row(checked(s, printed_row("total_positive", positives, 0.0593, 4)));
    t.add_row(checked(s, printed_row("bayes_total", bt.value(), 0.165, 3)));
    t.add_row(checked(s, printed_row("cohort_posterior", cohort.value(), 0.165, 3)));
    t.add_row(checked(s, printed_row("relative_frequency", freq.value(), 0.165, 3)));
    t.add_row(checked(s, plain_row("bayes_minus_cohort", bt.value() - cohort.value())));
    return t;
}

ReportTable build_deer(const Scenario& s) {
    ReportTable t = scenario_table(s);
    const std::array errors{s.input("error_droppings"), s.input("error_antler")};
    const std::array beliefs{complement(errors[0]), complement(errors[1])};
    const Probability error = mpe(errors);
    const Probability combined = cmpe_add(beliefs);
    t.add_row(checked(s, printed_row("mpe", error.value(), 0.000001, 6)));
    t.add_row(checked(s, printed_row("cmpe", combined.value(), 0.999999, 6)));
    t.add_row(checked(s, printed_row("increase", combined.value() - beliefs[0].value(), 0.000999, 6)));
    return t;
}

ReportTable build_neptune(const Scenario& s) {
    ReportTable t = scenario_table(s);
    const Probability prior = s.input("prior");
    const Probability chance = s.input("p_e_given_not_h");
    const Probability chance_printed = s.input("p_e_given_not_h_printed");
    const std::array exact{prior, complement(chance)};
    const std::array printed{prior, complement(chance_printed)};

    t.add_note("chance constant", "7 planets / 41253 sky areas, computed exactly; printed as .00017");
    t.add_row(checked(s, printed_row("p_e_given_not_h", chance.value(), 0.00017, 5)));
    t.add_row(plain_row("p_e_given_not_h_printed", chance_printed.value()));
    t.add_row(plain_row("relative_discrepancy", chance_printed.value() / chance.value() - 1.0));
    t.add_row(checked(s, printed_row("cmpe", cmpe_add(exact).value(), 0.99999998, 8)));
    t.add_row(checked(s, printed_row("cmpe_printed_constant", cmpe_add(printed).value(), 0.99999998, 8)));
    return t;
}

std::vector<Scenario> make_catalog() {
    std::vector<Scenario> c;
    c.push_back({"malaria",
                 "fever patient, malaria assumed at .5; plasmodia in blood are certain under "
                 "malaria and are found",
                 {{"prior", Probability{0.5}},
                  {"likelihood", Probability{1.0}},
                  {"evidence", Probability{1.0}}},
                 {{"bayes_inverse", 0.5, 1e-12}, {"rmpe", 0.75, 1e-12}},
                 false,
                 &build_malaria});
    c.push_back({"tuberculosis",
                 "tuberculin skin test: 1% prevalence, 98% sensitivity, 5% false positives",
                 {{"prior", Probability{0.01}},
                  {"sensitivity", Probability{0.98}},
                  {"false_positive", Probability{0.05}}},
                 {{"joint_positive", 0.0098, 1e-12},
                  {"false_positive_mass", 0.0495, 1e-12},
                  {"total_positive", 0.0593, 1e-12},
                  {"bayes_total", 0.165, 5e-4},
                  {"cohort_posterior", 0.165, 5e-4},
                  {"relative_frequency", 0.165, 5e-4},
                  {"bayes_minus_cohort", 0.0, 1e-12}},
                 false,
                 &build_tuberculosis});
    c.push_back({"deer",
                 "deer in the wood: droppings and a shed antler, each with error probability .001",
                 {{"error_droppings", Probability{0.001}}, {"error_antler", Probability{0.001}}},
                 {{"mpe", 1e-6, 1e-12}, {"cmpe", 0.999999, 1e-12}, {"increase", 0.000999, 1e-12}},
                 true,
                 &build_deer});
    c.push_back({"neptune",
                 "gravitation theory at .9999; Neptune found in the one predicted sky area",
                 {{"prior", Probability{0.9999}},
                  {"p_e_given_not_h", Probability{7.0 / 41253.0}},
                  {"p_e_given_not_h_printed", Probability{0.00017}}},
                 {{"cmpe", 1.0 - 1e-4 * (7.0 / 41253.0), 1e-12},
                  {"cmpe_printed_constant", 1.0 - 0.0001 * 0.00017, 1e-10}},
                 true,
                 &build_neptune});
    return c;
}

template <typename F>
auto attributed(std::string_view method, F&& f) {
    try {
        return f();
    } catch (const DomainError& e) {
        throw DomainError(std::string(method) + ": " + e.what());
    } catch (const DivisionError& e) {
        throw DivisionError(std::string(method) + ": " + e.what());
    }
}

}  // namespace

ReportTable run_table1() {
    struct Line {
        double initial;
        double printed;
        int decimals;
    };
    constexpr std::array<Line, 8> lines{{{0.1, 0.82, 2},
                                         {0.3, 0.86, 2},
                                         {0.5, 0.9, 1},
                                         {0.8, 0.96, 2},
                                         {0.9, 0.98, 2},
                                         {0.99, 0.998, 3},
                                         {0.999, 0.9998, 4},
                                         {0.9999, 0.99998, 5}}};
    const Probability addend{0.8};
    ReportTable t("table1: .8 added by cMPE to the initial value",
                  {"initial", "addend", "sum", "rounded", "printed"});
    for (const Line& l : lines) {
        const std::array ps{Probability{l.initial}, addend};
        const double sum = cmpe_add(ps).value();
        ReportRow row{"cmpe",
                      {Cell{l.initial}, Cell{addend.value()}, Cell{sum},
                       Cell{round_decimals(sum, l.decimals), l.decimals},
                       Cell{l.printed, l.decimals}},
                      {}};
        row.checks.push_back({3, l.printed, kPrintedEchoTolerance});
        row.checks.push_back({2, l.printed, 0.5 * std::pow(10.0, -l.decimals)});
        t.add_row(std::move(row));
    }
    return t;
}

Figure parse_figure(std::string_view name) {
    if (name == "fig1") return Figure::fig1;
    if (name == "fig5") return Figure::fig5;
    if (name == "fig6") return Figure::fig6;
    throw ArgumentError("unknown figure '" + std::string(name) + "' (available: fig1, fig5, fig6)");
}

std::vector<double> unit_grid(double from, double step) {
    if (!(step > 0.0 && step <= 0.25)) {
        throw ArgumentError("grid step must be in (0, 0.25], got " + std::to_string(step));
    }
    std::vector<double> grid;
    for (int k = 0;; ++k) {
        const double x = snap12(from + k * step);
        if (x >= 1.0 - 1e-9) {
            break;
        }
        grid.push_back(x);
    }
    grid.push_back(1.0);
    return grid;
}

ReportTable run_figure_dataset(Figure which, double grid_step) {
    if (!(grid_step > 0.0 && grid_step <= 0.25)) {
        throw ArgumentError("grid step must be in (0, 0.25], got " + std::to_string(grid_step));
    }
    switch (which) {
        case Figure::fig1: {
            ReportTable t("fig1: cMPE addition vs linear addition",
                          {"base", "addend", "cmpe", "linear_clamped"});
            t.add_note("grid step", format_significant(grid_step, 17));
            for (int k = 1; k <= 9; ++k) {
                const Probability base{k / 10.0};
                for (double b : unit_grid(0.0, grid_step)) {
                    const std::array ps{base, Probability{b}};
                    t.add_row({"fig1",
                               {Cell{base.value()}, Cell{b}, Cell{cmpe_add(ps).value()},
                                Cell{std::min(1.0, base.value() + b)}},
                               {}});
                }
            }
            return t;
        }
        case Figure::fig5: {
            struct Spot {
                double prior, e_ext, rmpe, bayes;
            };
            constexpr std::array<Spot, 4> spots{{{0.3, 0.4, 0.93, 0.75},
                                                 {0.6, 0.8, 0.92, 0.75},
                                                 {0.5, 1.0, 0.75, 0.5},
                                                 {0.7, 1.0, 0.91, 0.7}}};
            ReportTable t("fig5: rMPE vs P(H)/P(E) for H implying E",
                          {"prior", "e_ext", "rmpe", "bayes_implication"});
            t.add_note("grid step", format_significant(grid_step, 17));
            for (int k = 1; k <= 9; ++k) {
                const Probability prior{k / 10.0};
                for (double e : unit_grid(prior.value(), grid_step)) {
                    const Probability ext{e};
                    ReportRow row{"fig5",
                                  {Cell{prior.value()}, Cell{e},
                                   Cell{rmpe_implication({prior, ext}).value.value()},
                                   Cell{bayes_implication(prior, ext).value()}},
                                  {}};
                    for (const Spot& s : spots) {
                        if (near(s.prior, prior.value()) && near(s.e_ext, e)) {
                            row.checks.push_back({2, s.rmpe, 1e-9});
                            row.checks.push_back({3, s.bayes, 1e-9});
                        }
                    }
                    t.add_row(std::move(row));
                }
            }
            return t;
        }
        case Figure::fig6: {
            const Probability prior{0.32};
            const auto evidence = probabilities({0.40, 0.48, 0.56});
            constexpr std::array printed_residuals{0.08, 0.16, 0.24};
            ReportTable t("fig6: three semantically independent pieces of evidence for H",
                          {"prior", "e_ext", "residual", "rmpe"});
            t.add_note("semantic independence", "asserted");
            for (std::size_t i = 0; i < evidence.size(); ++i) {
                const ConfirmationResult r =
                    rmpe_multi(prior, std::span<const Probability>(evidence.data(), i + 1));
                const double residual = residual_evidence({prior, evidence[i]}).value();
                ReportRow row{"e" + std::to_string(i + 1),
                              {Cell{prior.value()}, Cell{evidence[i].value()}, Cell{residual},
                               Cell{r.value.value()}},
                              {}};
                row.checks.push_back({2, printed_residuals[i], 1e-12});
                t.add_row(std::move(row));
            }
            const ConfirmationResult all = rmpe_multi(prior, evidence);
            ReportRow total{"rmpe_multi",
                            {Cell{prior.value()}, Cell::missing(), Cell{all.residual->value()},
                             Cell{all.value.value()}},
                            {}};
            total.checks.push_back({3, 0.99791104, 1e-12});
            total.checks.push_back({3, 0.9979, 5e-5});
            t.add_row(std::move(total));
            return t;
        }
    }
    throw ArgumentError("unknown figure");
}

Probability Scenario::input(std::string_view key) const {
    for (const auto& [k, p] : inputs) {
        if (k == key) {
            return p;
        }
    }
    throw ArgumentError("scenario " + name + " has no input '" + std::string(key) + "'");
}

const std::vector<Scenario>& scenario_catalog() {
    static const std::vector<Scenario> catalog = make_catalog();
    return catalog;
}

ReportTable run_scenario(std::string_view name) {
    std::string available;
    for (const Scenario& s : scenario_catalog()) {
        if (s.name == name) {
            ReportTable t = s.build(s);
            for (const Expected& e : s.expected) {
                if (t.find(e.tag) == nullptr) {
                    throw std::logic_error("scenario " + s.name + " lacks expected row " + e.tag);
                }
            }
            return t;
        }
        available += (available.empty() ? "" : ", ") + s.name;
    }
    throw ArgumentError("unknown scenario '" + std::string(name) + "' (available: " + available + ")");
}

ReportTable run_compare(Probability prior, Probability e_ext) {
    const EvidenceCase c{prior, e_ext};
    const ConfirmationResult rm = attributed("rmpe", [&] { return rmpe_implication(c); });
    const Probability bt =
        attributed("bayes_implication", [&] { return bayes_implication(prior, e_ext); });
    const Probability w = attributed("weight_bearing", [&] { return weight_bearing_evidence(c); });
    const Probability r = attributed("residual", [&] { return residual_evidence(c); });

    ReportTable t("compare: confirmation of H by implied evidence E", {"value"});
    t.add_note("prior", format_significant(prior.value(), 17));
    t.add_note("evidence", format_significant(e_ext.value(), 17));
    t.add_row({std::string(to_string(Method::rmpe)), {Cell{rm.value.value()}}, {}});
    t.add_row({std::string(to_string(Method::bayes_implication)), {Cell{bt.value()}}, {}});
    t.add_row({"weight_bearing", {Cell{w.value()}}, {}});
    t.add_row({"residual", {Cell{r.value()}}, {}});
    return t;
}

}  // namespace mpecalc
