// cli.hpp
//
// Command-line front end. Kept in a header so the test suite can drive it
// in-process with captured streams.
//
// Exit status: 0 success, 1 usage error (bad flags or PAC parameters),
// 2 data or model error.
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "satbound/satbound.hpp"

namespace satbound::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kData = 2;

namespace detail {

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    return in;
}

/// Runs `emit` against the --out file when given, else against `out`.
inline void emit_to(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& emit) {
    if (path.empty()) {
        emit(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open '" + path + "' for writing");
    emit(file);
    if (!file) throw Error("failed writing '" + path + "'");
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Random-test saturation bounds, hit-spectrum inference and bound validation", "satbound"};
    app.require_subcommand(1, 1);

    std::string out_path;

    // bound
    std::uint64_t n_targets = 0;
    double epsilon = 0.1;
    double delta = 0.1;
    auto* bound = app.add_subcommand("bound", "Sample-size bound for N coverage targets");
    bound->add_option("--targets", n_targets, "Number of coverage targets")->required();
    bound->add_option("--epsilon", epsilon, "Tolerated generalization error, in (0,1)")->required();
    bound->add_option("--delta", delta, "Tolerated failure probability, in (0,1)")->required();

    // sweep
    std::vector<std::uint64_t> n_list;
    std::vector<double> eps_list;
    std::vector<double> delta_list;
    auto* sweep = app.add_subcommand("sweep", "Bound over the product of target counts, epsilons and deltas");
    sweep->add_option("--targets", n_list, "Comma-separated target counts")->required()->delimiter(',');
    sweep->add_option("--epsilons", eps_list, "Comma-separated epsilons")->required()->delimiter(',');
    sweep->add_option("--deltas", delta_list, "Comma-separated deltas")->required()->delimiter(',');
    sweep->add_option("--out", out_path, "Output CSV (default: stdout)");

    // infer
    std::string spectrum_path;
    bool merge = false;
    auto* infer_cmd = app.add_subcommand("infer", "Infer the coverage conjunction from a hit spectrum");
    infer_cmd->add_option("--spectrum", spectrum_path, "Hit-spectrum CSV")->required();
    infer_cmd->add_flag("--merge-columns", merge, "Group targets with identical columns first");
    infer_cmd->add_option("--out", out_path, "Output JSON (default: stdout)");

    // simulate
    std::string model_path;
    std::uint64_t m_tests = 0;
    std::uint64_t seed = 0;
    auto* simulate = app.add_subcommand("simulate", "Sample a hit spectrum from a profile model");
    simulate->add_option("--model", model_path, "Model JSON")->required();
    simulate->add_option("--tests", m_tests, "Number of executions")->required();
    simulate->add_option("--seed", seed, "64-bit seed")->required()->envname("SATBOUND_SEED");
    simulate->add_option("--out", out_path, "Output CSV (default: stdout)");

    // validate
    std::uint64_t trials = 0;
    auto* validate = app.add_subcommand("validate", "Monte-Carlo reliability check of the bound on a model");
    validate->add_option("--model", model_path, "Model JSON")->required();
    validate->add_option("--epsilon", epsilon, "Tolerated generalization error, in (0,1)")->required();
    validate->add_option("--delta", delta, "Tolerated failure probability, in (0,1)")->required();
    validate->add_option("--trials", trials, "Number of trials")->required()->check(CLI::PositiveNumber);
    validate->add_option("--seed", seed, "64-bit base seed")->required()->envname("SATBOUND_SEED");
    validate->add_option("--out", out_path, "Output JSON report (default: stdout)");

    // saturation
    auto* saturation = app.add_subcommand("saturation", "Cumulative coverage after each execution");
    saturation->add_option("--spectrum", spectrum_path, "Hit-spectrum CSV")->required();
    saturation->add_option("--out", out_path, "Output CSV (default: stdout)");

    // table3
    std::string sizes_path;
    auto* table3 = app.add_subcommand("table3", "Bounds at epsilon=0.2, delta=0.1 for name,size rows");
    table3->add_option("--sizes", sizes_path, "CSV of name,size")->required();
    table3->add_option("--out", out_path, "Output CSV (default: stdout)");

    // triangle-export
    auto* tri_export = app.add_subcommand("triangle-export", "Write the built-in triangle model as JSON");
    tri_export->add_option("--out", out_path, "Output JSON (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const auto selected = app.get_subcommands();
        err << (selected.empty() ? app.help() : selected.front()->help());
        return kUsage;
    }

    auto* cmd = app.get_subcommands().front();
    try {
        if (cmd == bound) {
            const auto b = sample_complexity(n_targets, PacParams(epsilon, delta));
            out << "n_targets: " << b.n_targets << '\n'
                << "epsilon: " << fixed(epsilon, 4) << '\n'
                << "delta: " << fixed(delta, 4) << '\n'
                << "raw_bound: " << fixed(b.raw, 4) << '\n'
                << "tests: " << b.tests << '\n';
        } else if (cmd == sweep) {
            const auto records = sweep_bounds(n_list, eps_list, delta_list);
            detail::emit_to(out_path, out, [&](std::ostream& os) { write_sweep_csv(os, records); });
        } else if (cmd == infer_cmd) {
            auto in = detail::open_input(spectrum_path);
            const auto spectrum = parse_spectrum(in);
            nlohmann::ordered_json doc;
            if (merge) {
                const auto merged = merge_identical_columns(spectrum);
                doc = hypothesis_to_json(infer(merged.spectrum));
                nlohmann::ordered_json groups = nlohmann::ordered_json::object();
                for (const auto& [id, members] : merged.groups) groups[id] = members;
                doc["groups"] = groups;
            } else {
                doc = hypothesis_to_json(infer(spectrum));
            }
            detail::emit_to(out_path, out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
        } else if (cmd == simulate) {
            auto in = detail::open_input(model_path);
            const auto model = load_model(in);
            const auto spectrum = sample_executions(model, m_tests, seed);
            detail::emit_to(out_path, out, [&](std::ostream& os) { write_spectrum(os, spectrum); });
        } else if (cmd == validate) {
            const PacParams params(epsilon, delta);
            auto in = detail::open_input(model_path);
            const auto model = load_model(in);
            const auto id = std::filesystem::path(model_path).stem().string();
            const auto report = run_reliability(model, params, trials, seed, id);
            detail::emit_to(out_path, out, [&](std::ostream& os) { write_report(os, report); });
        } else if (cmd == saturation) {
            auto in = detail::open_input(spectrum_path);
            const auto curve = saturation_curve(parse_spectrum(in));
            detail::emit_to(out_path, out, [&](std::ostream& os) { write_saturation_csv(os, curve); });
        } else if (cmd == table3) {
            auto in = detail::open_input(sizes_path);
            const auto rows = run_table3_check(parse_sizes(in));
            detail::emit_to(out_path, out, [&](std::ostream& os) { write_table3_csv(os, rows); });
        } else if (cmd == tri_export) {
            const auto doc = model_to_json(triangle::build_triangle_model());
            detail::emit_to(out_path, out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
        }
    } catch (const ParamError& e) {
        err << "error: " << e.what() << "\n\n" << cmd->help();
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kData;
    }
    return kOk;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

}  // namespace satbound::cli
