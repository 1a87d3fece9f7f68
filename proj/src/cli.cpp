#include "mpecalc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>

#include "mpecalc/bayes.hpp"
#include "mpecalc/calculus.hpp"
#include "mpecalc/confirmation.hpp"
#include "mpecalc/error.hpp"
#include "mpecalc/oracle.hpp"
#include "mpecalc/reports.hpp"

namespace mpecalc {

namespace {

std::string join(const std::vector<double>& xs) {
    std::string s;
    for (double x : xs) {
        s += (s.empty() ? "" : " ") + format_significant(x, 17);
    }
    return s;
}

ReportTable add_table(const std::vector<double>& raw) {
    const auto ps = probabilities(raw);
    std::vector<Probability> errors;
    errors.reserve(ps.size());
    for (Probability p : ps) {
        errors.push_back(complement(p));
    }
    ReportTable t("add: cMPE sum of supporting probabilities", {"value"});
    t.add_note("inputs", join(raw));
    t.add_note("semantic independence", "asserted by caller");
    t.add_row({"cmpe", {Cell{cmpe_add(ps).value()}}, {}});
    if (ps.size() == 2) {
        t.add_row({"cmpe_expanded", {Cell{cmpe_add_expanded(ps[0], ps[1]).value()}}, {}});
    }
    t.add_row({"mpe", {Cell{mpe(errors).value()}}, {}});
    return t;
}

ReportTable sub_table(const std::vector<double>& raw) {
    if (raw.size() < 2) {
        throw ArgumentError("sub needs a minuend and at least one subtrahend");
    }
    const auto ps = probabilities(raw);
    const std::span<const Probability> subtrahends(ps.begin() + 1, ps.end());
    double linear = ps[0].value();
    for (Probability s : subtrahends) {
        linear -= s.value();
    }
    ReportTable t("sub: DPE difference", {"value"});
    t.add_note("minuend", format_significant(raw[0], 17));
    t.add_note("subtrahends", join({raw.begin() + 1, raw.end()}));
    t.add_row({"dpe", {Cell{dpe_subtract(ps[0], subtrahends).value()}}, {}});
    t.add_row({"linear", {Cell{linear}}, {}});
    return t;
}

ReportTable rmpe_table(double prior_raw, const std::vector<double>& evidence_raw) {
    const Probability prior{prior_raw};
    const auto evidence = probabilities(evidence_raw);
    const ConfirmationResult r = rmpe_multi(prior, evidence);
    ReportTable t("rmpe: confirmation of H by implied evidence", {"value"});
    t.add_note("prior", format_significant(prior_raw, 17));
    t.add_note("evidence", join(evidence_raw));
    if (evidence.size() > 1) {
        t.add_note("semantic independence", "asserted by caller");
    }
    t.add_row({"rmpe", {Cell{r.value.value()}}, {}});
    t.add_row({"weight_bearing", {Cell{r.e_w->value()}}, {}});
    t.add_row({"residual", {Cell{r.residual->value()}}, {}});
    return t;
}

ReportTable bayes_table(double prior, double likelihood, std::optional<double> marginal,
                        std::optional<double> false_positive) {
    if (marginal.has_value() == false_positive.has_value()) {
        throw ArgumentError("bayes needs exactly one of --marginal or --false-positive");
    }
    BayesInputs in{Probability{prior}, Probability{likelihood}, std::nullopt, std::nullopt};
    ReportTable t("bayes: classical posterior", {"value"});
    t.add_note("prior", format_significant(prior, 17));
    t.add_note("likelihood", format_significant(likelihood, 17));
    if (marginal) {
        in.evidence_marginal = Probability{*marginal};
        t.add_note("marginal", format_significant(*marginal, 17));
        t.add_row({std::string(to_string(Method::bayes_inverse)), {Cell{bayes_inverse(in).value()}}, {}});
    } else {
        in.false_positive = Probability{*false_positive};
        t.add_note("false positive", format_significant(*false_positive, 17));
        const double total = prior * likelihood + (1.0 - prior) * *false_positive;
        t.add_row({std::string(to_string(Method::bayes_total)), {Cell{bayes_total(in).value()}}, {}});
        t.add_row({"evidence_marginal", {Cell{total}}, {}});
    }
    return t;
}

ReportTable union_table(const std::vector<double>& raw, std::optional<std::uint64_t> trials,
                        std::uint64_t seed) {
    const auto ps = probabilities(raw);
    const SampleSpace space = SampleSpace::from_probabilities(ps);
    ReportTable t("oracle union: P(at least one independent event)", {"value", "std_error"});
    t.add_note("events", join(raw));
    t.add_row({"cmpe", {Cell{cmpe_add(ps).value()}, Cell::missing()}, {}});
    if (space.size() <= kMaxExactEvents || !trials) {
        t.add_row({"exact", {Cell{union_probability_exact(space).value()}, Cell::missing()}, {}});
    } else {
        t.add_note("exact", "skipped, more than " + std::to_string(kMaxExactEvents) + " events");
    }
    if (trials) {
        t.add_note("generator", std::string(kGeneratorName));
        t.add_note("seed", std::to_string(seed));
        t.add_note("trials", std::to_string(*trials));
        const MonteCarloEstimate mc = union_probability_monte_carlo(space, *trials, seed, 0);
        t.add_row({"monte_carlo", {Cell{mc.estimate.value()}, Cell{mc.std_error}}, {}});
    }
    return t;
}

ReportTable broad_table(double prior_raw, const std::vector<double>& chain_raw) {
    const Probability prior{prior_raw};
    const auto chain = probabilities(chain_raw);
    ReportTable t("broad: prior divided by accumulated consequences",
                  {"step", "value", "exceeds_one"});
    t.add_row({"prior", {Cell{0.0}, Cell{prior.value()}, Cell{0.0}}, {}});
    for (const BroadStep& s : broad_chain(prior, chain)) {
        t.add_row({"broad",
                   {Cell{static_cast<double>(s.step)}, Cell{s.value}, Cell{s.exceeds_one ? 1.0 : 0.0}},
                   {}});
    }
    return t;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Complement-based probability calculus and its Bayesian baselines", "mpecalc"};
    app.require_subcommand(1);
    app.fallthrough();

    int digits = kDefaultDigits;
    bool csv = false;
    bool pretty = false;
    app.add_option("--digits", digits, "Significant digits")->check(CLI::Range(1, 17));
    auto* csv_flag = app.add_flag("--csv", csv, "CSV output");
    app.add_flag("--pretty", pretty, "Aligned columns (default)")->excludes(csv_flag);

    std::function<ReportTable()> job;

    app.add_subcommand("table1", "cMPE addition of .8 to initial values")->callback([&] {
        job = [] { return run_table1(); };
    });

    std::string figure;
    double step = 0.05;
    auto* fig = app.add_subcommand("figure", "Figure dataset");
    fig->add_option("which", figure, "fig1, fig5 or fig6")->required();
    fig->add_option("--step", step, "Grid step in (0, 0.25]");
    fig->callback([&] { job = [&] { return run_figure_dataset(parse_figure(figure), step); }; });

    std::string scenario;
    auto* scen = app.add_subcommand("scenario", "Worked example");
    scen->add_option("name", scenario, "malaria, tuberculosis, deer or neptune")->required();
    scen->callback([&] { job = [&] { return run_scenario(scenario); }; });

    double prior = 0.0;
    double evidence = 0.0;
    auto* cmp = app.add_subcommand("compare", "All confirmation methods at one point");
    cmp->add_option("--prior", prior, "P(H)")->required();
    cmp->add_option("--evidence", evidence, "P(E_EXT)")->required();
    cmp->callback([&] {
        job = [&] { return run_compare(Probability{prior}, Probability{evidence}); };
    });

    std::vector<double> values;
    auto* add = app.add_subcommand("add", "cMPE sum");
    add->add_option("probabilities", values, "P1 P2 ...")->required();
    add->callback([&] { job = [&] { return add_table(values); }; });

    auto* sub = app.add_subcommand("sub", "DPE difference");
    sub->add_option("probabilities", values, "P Q1 Q2 ...")->required();
    sub->callback([&] { job = [&] { return sub_table(values); }; });

    std::vector<double> evidences;
    auto* rm = app.add_subcommand("rmpe", "rMPE confirmation");
    rm->add_option("--prior", prior, "P(H)")->required();
    rm->add_option("--evidence", evidences, "P(E_1) [P(E_2) ...]")->required();
    rm->callback([&] { job = [&] { return rmpe_table(prior, evidences); }; });

    double likelihood = 0.0;
    std::optional<double> marginal;
    std::optional<double> false_positive;
    auto* bay = app.add_subcommand("bayes", "Bayesian posterior");
    bay->add_option("--prior", prior, "P(H)")->required();
    bay->add_option("--likelihood", likelihood, "P(E|H)")->required();
    auto* m_opt = bay->add_option("--marginal", marginal, "P(E)");
    bay->add_option("--false-positive", false_positive, "P(E|~H)")->excludes(m_opt);
    bay->callback([&] {
        job = [&] { return bayes_table(prior, likelihood, marginal, false_positive); };
    });

    std::optional<std::uint64_t> trials;
    std::uint64_t seed = 42;
    auto* orc = app.add_subcommand("oracle", "Independent ground truth");
    orc->require_subcommand(1);
    auto* uni = orc->add_subcommand("union", "P(at least one) by enumeration and Monte Carlo");
    uni->add_option("probabilities", values, "P1 P2 ...")->required();
    uni->add_option("--trials", trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    uni->add_option("--seed", seed, "Monte Carlo seed");
    uni->callback([&] { job = [&] { return union_table(values, trials, seed); }; });

    std::vector<double> chain;
    auto* br = app.add_subcommand("broad", "Broad's divergent chain");
    br->add_option("--prior", prior, "P(H)")->required();
    br->add_option("--chain", chain, "C1 C2 ...")->expected(0, CLI::detail::expected_max_vector_size);
    br->callback([&] { job = [&] { return broad_table(prior, chain); }; });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const ReportTable table = job();
        const auto failures = table.failed_checks();
        if (!failures.empty()) {
            for (const auto& f : failures) {
                err << "check failed: " << f << '\n';
            }
            return kExitCheckFailed;
        }
        table.write(out, csv ? OutputFormat::csv : OutputFormat::pretty, digits);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace mpecalc
