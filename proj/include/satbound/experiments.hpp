// experiments.hpp
//
// Monte-Carlo checks of the sample bound against synthetic SUTs, plus the
// bound sweeps and per-file bound tables.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "satbound/conjunction.hpp"
#include "satbound/errors.hpp"
#include "satbound/format.hpp"
#include "satbound/pac_bound.hpp"
#include "satbound/spectrum.hpp"
#include "satbound/synthetic_sut.hpp"

namespace satbound {

struct TrialRecord {
    std::uint64_t trial_index = 0;
    std::uint64_t seed = 0;
    std::uint64_t m_used = 0;
    double gen_error = 0.0;
    std::uint64_t coverage_b = 0;
    std::uint64_t coverage_2b = 0;
    double delta_fraction = 0.0;
    bool exact = false;  // inferred conjunction equals the ground-truth conjunction

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct ReliabilityReport {
    std::string model_id;
    PacParams params{0.5, 0.5};
    SampleBound bound;
    std::uint64_t base_seed = 0;
    std::vector<TrialRecord> trials;
    double success_fraction = 0.0;   // share of trials with gen_error <= epsilon
    double delta_ok_fraction = 0.0;  // share of trials with delta_fraction <= epsilon
    double exact_fraction = 0.0;     // share of trials that recovered the ground truth
    double ci_low = 0.0;             // 95% Wilson interval on success_fraction
    double ci_high = 0.0;

    friend bool operator==(const ReliabilityReport&, const ReliabilityReport&) = default;
};

inline constexpr double kZ95 = 1.959963984540054;

/// Wilson score interval for `successes` out of `n` Bernoulli trials.
inline std::pair<double, double> wilson_interval(std::size_t successes, std::size_t n, double z = kZ95) {
    if (n == 0) return {0.0, 1.0};
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double centre = (p + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    return {std::clamp(std::min(centre - half, p), 0.0, 1.0), std::clamp(std::max(centre + half, p), 0.0, 1.0)};
}

namespace detail {

inline std::uint64_t covered_targets(const std::vector<BitRow>& rows, std::size_t count, std::size_t width) {
    std::vector<std::uint8_t> seen(width, 0);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < width; ++j) seen[j] |= rows[i][j];
    return static_cast<std::uint64_t>(std::count(seen.begin(), seen.end(), 1));
}

}  // namespace detail

/// One trial: m = bound.tests rows, then m more from the same stream for the 2b set.
inline TrialRecord run_trial(const SutProfileModel& model, const GroundTruth& truth, const SampleBound& bound,
                             std::uint64_t trial_index, std::uint64_t base_seed) {
    TrialRecord rec;
    rec.trial_index = trial_index;
    rec.seed = stream_seed(base_seed, trial_index);
    rec.m_used = bound.tests;

    Rng rng(rec.seed);
    std::vector<BitRow> rows;
    const auto m = static_cast<std::size_t>(bound.tests);
    draw_rows(model, m, rng, rows);

    auto h = ConjunctionHypothesis::initial(model.targets());
    for (const auto& row : rows) h.absorb(row);
    rec.gen_error = true_generalization_error(h, model);
    rec.exact = (h == truth.conjunction);

    draw_rows(model, m, rng, rows);
    const auto width = model.num_targets();
    rec.coverage_b = detail::covered_targets(rows, m, width);
    rec.coverage_2b = detail::covered_targets(rows, rows.size(), width);
    rec.delta_fraction =
        width == 0 ? 0.0 : static_cast<double>(rec.coverage_2b - rec.coverage_b) / static_cast<double>(width);
    return rec;
}

/// Recomputes the aggregate fields of `report` from its trial rows.
inline void aggregate(ReliabilityReport& report) {
    std::size_t ok = 0;
    std::size_t delta_ok = 0;
    std::size_t exact = 0;
    const double eps = report.params.epsilon();
    for (const auto& t : report.trials) {
        ok += t.gen_error <= eps ? 1 : 0;
        delta_ok += t.delta_fraction <= eps ? 1 : 0;
        exact += t.exact ? 1 : 0;
    }
    const auto n = report.trials.size();
    const double nn = n == 0 ? 1.0 : static_cast<double>(n);
    report.success_fraction = static_cast<double>(ok) / nn;
    report.delta_ok_fraction = static_cast<double>(delta_ok) / nn;
    report.exact_fraction = static_cast<double>(exact) / nn;
    std::tie(report.ci_low, report.ci_high) = wilson_interval(ok, n);
}

inline ReliabilityReport run_reliability(const SutProfileModel& model, const PacParams& params, std::uint64_t trials,
                                         std::uint64_t base_seed, std::string model_id = "model") {
    if (trials == 0) throw ParamError("reliability run needs at least one trial");
    ReliabilityReport report;
    report.model_id = std::move(model_id);
    report.params = params;
    report.bound = sample_complexity(model.num_targets(), params);
    report.base_seed = base_seed;
    const auto truth = ground_truth(model);
    report.trials.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t)
        report.trials.push_back(run_trial(model, truth, report.bound, t, base_seed));
    aggregate(report);
    return report;
}

inline nlohmann::ordered_json report_to_json(const ReliabilityReport& r) {
    nlohmann::ordered_json trials = nlohmann::ordered_json::array();
    for (const auto& t : r.trials) {
        trials.push_back({{"trial_index", t.trial_index},
                          {"seed", t.seed},
                          {"m_used", t.m_used},
                          {"gen_error", t.gen_error},
                          {"coverage_b", t.coverage_b},
                          {"coverage_2b", t.coverage_2b},
                          {"delta_fraction", t.delta_fraction},
                          {"exact", t.exact}});
    }
    return {{"model", r.model_id},
            {"epsilon", r.params.epsilon()},
            {"delta", r.params.delta()},
            {"bound", {{"raw", r.bound.raw}, {"tests", r.bound.tests}, {"n_targets", r.bound.n_targets}}},
            {"base_seed", r.base_seed},
            {"success_fraction", r.success_fraction},
            {"delta_ok_fraction", r.delta_ok_fraction},
            {"exact_fraction", r.exact_fraction},
            {"ci_low", r.ci_low},
            {"ci_high", r.ci_high},
            {"trials", trials}};
}

inline void write_report(std::ostream& os, const ReliabilityReport& report) {
    os << report_to_json(report).dump(2) << '\n';
}

inline std::string write_report(const ReliabilityReport& report) {
    std::ostringstream os;
    write_report(os, report);
    return os.str();
}

inline ReliabilityReport report_from_json(const nlohmann::ordered_json& doc) {
    try {
        ReliabilityReport r;
        r.model_id = doc.at("model").get<std::string>();
        r.params = PacParams(doc.at("epsilon").get<double>(), doc.at("delta").get<double>());
        const auto& b = doc.at("bound");
        r.bound = SampleBound{b.at("raw").get<double>(), b.at("tests").get<std::uint64_t>(),
                              b.at("n_targets").get<std::uint64_t>(), r.params};
        r.base_seed = doc.at("base_seed").get<std::uint64_t>();
        for (const auto& t : doc.at("trials")) {
            r.trials.push_back({t.at("trial_index").get<std::uint64_t>(), t.at("seed").get<std::uint64_t>(),
                                t.at("m_used").get<std::uint64_t>(), t.at("gen_error").get<double>(),
                                t.at("coverage_b").get<std::uint64_t>(), t.at("coverage_2b").get<std::uint64_t>(),
                                t.at("delta_fraction").get<double>(), t.at("exact").get<bool>()});
        }
        r.success_fraction = doc.at("success_fraction").get<double>();
        r.delta_ok_fraction = doc.at("delta_ok_fraction").get<double>();
        r.exact_fraction = doc.at("exact_fraction").get<double>();
        r.ci_low = doc.at("ci_low").get<double>();
        r.ci_high = doc.at("ci_high").get<double>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed report document: ") + e.what());
    }
}

inline ReliabilityReport read_report(std::istream& in) {
    try {
        return report_from_json(nlohmann::ordered_json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("report is not valid JSON: ") + e.what());
    }
}

inline std::vector<SweepRecord> run_bound_sweep(const std::vector<std::uint64_t>& n_list,
                                                const std::vector<double>& epsilon_list,
                                                const std::vector<double>& delta_list, std::ostream& out) {
    auto records = sweep_bounds(n_list, epsilon_list, delta_list);
    write_sweep_csv(out, records);
    return records;
}

// Per-file bound table parameters for the CARLA/TCP coverage study.
inline constexpr double kTable3Epsilon = 0.2;
inline constexpr double kTable3Delta = 0.1;

struct Table3Row {
    std::string name;
    std::uint64_t n = 0;
    double bound = 0.0;
};

inline std::vector<Table3Row> run_table3_check(const std::vector<std::pair<std::string, std::uint64_t>>& sizes) {
    const PacParams params(kTable3Epsilon, kTable3Delta);
    std::vector<Table3Row> out;
    for (const auto& [name, n] : sizes) {
        if (n == 0) throw ParamError("size for '" + name + "' must be positive");
        out.push_back({name, n, sample_complexity(n, params).raw});
    }
    return out;
}

/// Reads `name,size` lines. A first line whose size cell is not a number is taken as a header.
inline std::vector<std::pair<std::string, std::uint64_t>> parse_sizes(std::istream& in) {
    std::vector<std::pair<std::string, std::uint64_t>> sizes;
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::trim(line).empty()) continue;
        const auto cells = detail::split_cells(line);
        if (cells.size() != 2) throw ParseError(line_no, 0, "expected 2 cells (name,size)");
        const std::string size_text(cells[1]);
        const bool numeric = !size_text.empty() && size_text.find_first_not_of("0123456789") == std::string::npos;
        if (!numeric) {
            if (line_no == 1) continue;
            throw ParseError(line_no, 2, "size '" + size_text + "' is not a non-negative integer");
        }
        sizes.emplace_back(std::string(cells[0]), std::stoull(size_text));
    }
    return sizes;
}

inline void write_table3_csv(std::ostream& os, const std::vector<Table3Row>& rows) {
    os << "name,size,bound\n";
    for (const auto& r : rows) os << r.name << ',' << r.n << ',' << fixed(r.bound, 2) << '\n';
}

}  // namespace satbound
