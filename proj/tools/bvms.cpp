// bvms: load finite distance spaces from JSON documents or the built-in
// gallery, certify polygon-inequality classes by exhaustive enumeration,
// analyze self-maps, and run Picard iteration with convergence diagnostics.
//
// Exit status is a contract: 0 = claim upheld / computation completed,
// 1 = claim refuted (witness in the report), 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bvms/bvms.hpp"

namespace {

using bvms::json;

struct InputOptions {
    std::string space_file;
    std::string map_file;
    std::string gallery;
    std::size_t n = 0;
    std::optional<std::uint64_t> seed;
    int gallery_v = 1;
    std::uint64_t budget = 1'000'000'000;
    std::string format = "text";
    std::string output;
    std::string emit_space;
};

struct Input {
    bvms::FiniteSpace space;
    std::optional<bvms::SelfMap> map;
    std::optional<bvms::GalleryInstance> instance;
    std::string source;  // human-readable scope line
};

void add_input_options(CLI::App* cmd, InputOptions& opts, bool needs_map) {
    cmd->add_option("--space", opts.space_file,
                    "JSON space document (or gallery document {\"gallery\":...,\"n\":...})");
    cmd->add_option("--gallery", opts.gallery,
                    "gallery family: union_space, naturals_space, reciprocal_space, "
                    "unit_sequence_space, halving_space, random_space");
    cmd->add_option("--n", opts.n, "gallery truncation size");
    cmd->add_option("--seed", opts.seed, "seed for random_space");
    cmd->add_option("--gallery-v", opts.gallery_v, "v certified for random_space (default 1)");
    if (needs_map) cmd->add_option("--map", opts.map_file, "JSON map document {\"image\": [...]}");
    cmd->add_option("--budget", opts.budget, "tuple budget for exhaustive enumeration (default 1e9)");
    cmd->add_option("--format", opts.format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output", opts.output, "write the report to this path instead of stdout");
    cmd->add_option("--emit-space", opts.emit_space, "also write the materialized space document here");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bvms::JsonSchemaError(path, "cannot open file");
    json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw bvms::JsonSchemaError(path, e.what());
    }
    return doc;
}

Input resolve_input(const InputOptions& opts, bool needs_map) {
    const bvms::EnumerationBudget budget{opts.budget};
    std::optional<bvms::GalleryInstance> instance;
    std::optional<bvms::FiniteSpace> space;
    std::string source;

    if (!opts.gallery.empty()) {
        if (opts.n == 0) throw bvms::SizeError("--gallery needs --n");
        instance = bvms::make_gallery(opts.gallery, opts.n, opts.seed, opts.gallery_v, budget);
        source = "gallery=" + opts.gallery + " n=" + std::to_string(opts.n);
        if (opts.seed) source += " seed=" + std::to_string(*opts.seed);
    } else if (!opts.space_file.empty()) {
        const json doc = read_json_file(opts.space_file);
        if (doc.is_object() && doc.contains("gallery")) {
            instance = bvms::parse_gallery_spec(doc, budget);
            source = "gallery=" + instance->family + " n=" + std::to_string(instance->size);
        } else {
            space = bvms::parse_space(doc);
            source = "file=" + opts.space_file;
        }
    } else {
        throw bvms::SizeError("no input: pass --gallery NAME --n N or --space FILE");
    }

    Input input{instance ? instance->space : *space, std::nullopt, std::move(instance), source};
    if (!opts.map_file.empty()) {
        input.map = bvms::parse_map(read_json_file(opts.map_file), input.space);
    } else if (input.instance && input.instance->map) {
        input.map = input.instance->map;
    }
    if (needs_map && !input.map)
        throw bvms::SizeError("this command needs a self-map: pass --map FILE or a gallery family "
                              "that bundles one");
    return input;
}

bvms::PointId resolve_start(const Input& input, const std::string& x0) {
    if (!x0.empty()) return input.space.require(x0);
    if (input.instance && !input.instance->default_start.empty())
        return input.space.require(input.instance->default_start);
    throw bvms::SizeError("no orbit start: pass --x0 LABEL");
}

void emit_with_space(const InputOptions& opts, const Input& input, const std::string& text_report,
                     json json_report) {
    json_report["scope"] = json{{"source", input.source},
                                {"points", input.space.size()},
                                {"budget", opts.budget}};
    std::string payload = opts.format == "json" ? json_report.dump(2) + "\n" : text_report;
    if (opts.output.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(opts.output);
        if (!out) throw bvms::JsonSchemaError(opts.output, "cannot open for writing");
        out << payload;
    }
    if (!opts.emit_space.empty()) {
        std::ofstream out(opts.emit_space);
        if (!out) throw bvms::JsonSchemaError(opts.emit_space, "cannot open for writing");
        out << bvms::space_to_json(input.space).dump(2) << "\n";
    }
}

std::string scope_line(const InputOptions& opts, const Input& input) {
    std::ostringstream os;
    os << "scope: " << input.source << " (" << input.space.size() << " points), tuple budget "
       << opts.budget << "\n";
    return os.str();
}

int run_verify(const InputOptions& opts, int v, const std::string& s_text) {
    const Input input = resolve_input(opts, false);
    const bvms::Rational s = bvms::Rational::parse(s_text);
    const auto result = bvms::verify_polygon(input.space, v, s, {opts.budget});

    std::ostringstream os;
    os << scope_line(opts, input);
    os << "verify polygon inequality: v=" << v << " s=" << s << " -> " << to_string(result.verdict)
       << " (" << result.tuples_checked << " tuples)\n";
    if (result.witness) {
        const auto& w = *result.witness;
        os << "witness: d(" << input.space.label(w.x) << ", " << input.space.label(w.y) << ") = "
           << w.lhs << " > " << w.rhs << " = s * chain via";
        for (const auto u : w.chain) os << " " << input.space.label(u);
        os << "\n";
    }
    json report{{"command", "verify"}, {"v", v}, {"s", s.to_string()}};
    report.update(bvms::certification_to_json(input.space, result));
    emit_with_space(opts, input, os.str(), std::move(report));
    return result.verdict == bvms::Verdict::Refuted ? 1 : 0;
}

int run_min_s(const InputOptions& opts, int v) {
    const Input input = resolve_input(opts, false);
    const auto result = bvms::min_s_detail(input.space, v, {opts.budget});

    std::ostringstream os;
    os << scope_line(opts, input);
    os << "min admissible s for v=" << v << ": " << result.value
       << (result.vacuous ? " (vacuous: fewer than v+2 points)" : "") << " ("
       << result.tuples_checked << " tuples)\n";
    if (result.argmax) {
        os << "attained at d(" << input.space.label(result.argmax->x) << ", "
           << input.space.label(result.argmax->y) << ") = " << result.argmax->distance
           << " over chain sum " << result.argmax->chain_sum << "\n";
    }
    json report{{"command", "min-s"}, {"v", v}};
    report.update(bvms::min_s_to_json(input.space, result));
    emit_with_space(opts, input, os.str(), std::move(report));
    return 0;
}

int run_contractive(const InputOptions& opts) {
    const Input input = resolve_input(opts, true);
    const auto result = bvms::check_contractive(input.space, *input.map);

    std::ostringstream os;
    os << scope_line(opts, input);
    os << "contractivity (d(Tx,Ty) < d(x,y) for all x != y): "
       << (result.holds ? "holds" : "refuted") << "\n";
    for (const auto& v : result.violations)
        os << "violation: d(T " << input.space.label(v.x) << ", T " << input.space.label(v.y)
           << ") = " << v.after << " >= " << v.before << " = d(" << input.space.label(v.x) << ", "
           << input.space.label(v.y) << ")\n";
    json report{{"command", "contractive"}};
    report.update(bvms::contractivity_to_json(input.space, result));
    if (input.instance && !input.instance->errata.empty()) {
        report["errata"] = input.instance->errata;
        os << "errata:\n";
        for (const auto& e : input.instance->errata) os << "  - " << e << "\n";
    }
    emit_with_space(opts, input, os.str(), std::move(report));
    return result.holds ? 0 : 1;
}

std::vector<bvms::Rational> parse_epsilons(const std::string& text) {
    std::vector<bvms::Rational> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(bvms::Rational::parse(item));
    return grid;
}

std::string condition_text(const bvms::ConditionReport& report, const bvms::FiniteSpace& space) {
    std::ostringstream os;
    os << (report.orbital ? "condition over iterate pairs" : "condition over point pairs");
    if (report.orbital) os << " (horizon " << report.horizon << ")";
    os << ": " << (report.holds ? "holds" : "refuted") << "\n";
    for (const auto& e : report.delta_at) {
        os << "  epsilon " << e.epsilon << ": ";
        switch (e.kind) {
            case bvms::DeltaEntry::Kind::Value: os << "max delta " << e.delta; break;
            case bvms::DeltaEntry::Kind::Unconstrained: os << "unconstrained (any delta works)"; break;
            case bvms::DeltaEntry::Kind::Absent: os << "no positive delta exists"; break;
        }
        os << "\n";
    }
    if (report.witness) {
        os << "witness at epsilon " << report.witness->epsilon << ": ";
        if (report.orbital)
            os << "(i,j) = (" << report.witness->i << "," << report.witness->j << ")";
        else
            os << "(" << space.label(report.witness->i) << ", " << space.label(report.witness->j) << ")";
        os << " with d = " << report.witness->before << " then " << report.witness->after << "\n";
    }
    return os.str();
}

int run_condition_a(const InputOptions& opts, const std::string& epsilons) {
    const Input input = resolve_input(opts, true);
    const auto grid = epsilons.empty() ? bvms::default_epsilon_grid(input.space)
                                       : parse_epsilons(epsilons);
    const auto result = bvms::check_condition_a(input.space, *input.map, grid);
    json report{{"command", "condition-a"}};
    report.update(bvms::condition_to_json(result, &input.space));
    emit_with_space(opts, input, scope_line(opts, input) + condition_text(result, input.space),
                    std::move(report));
    return result.holds ? 0 : 1;
}

int run_condition_b(const InputOptions& opts, const std::string& x0, std::size_t horizon,
                    const std::string& epsilons) {
    const Input input = resolve_input(opts, true);
    const auto start = resolve_start(input, x0);
    const auto grid = epsilons.empty()
                          ? bvms::orbit_epsilon_grid(input.space, *input.map, start, horizon)
                          : parse_epsilons(epsilons);
    const auto result = bvms::check_condition_b(input.space, *input.map, start, grid, horizon);
    json report{{"command", "condition-b"}, {"x0", input.space.label(start)}};
    report.update(bvms::condition_to_json(result));
    emit_with_space(opts, input, scope_line(opts, input) + condition_text(result, input.space),
                    std::move(report));
    return result.holds ? 0 : 1;
}

int run_iterate(const InputOptions& opts, const std::string& x0, std::size_t max_steps,
                const std::string& tolerance_text, const std::string& z_label,
                const std::string& csv_path) {
    const Input input = resolve_input(opts, true);
    const auto start = resolve_start(input, x0);
    const std::size_t steps = max_steps == 0 ? 2 * input.space.size() + 2 : max_steps;
    const bvms::Rational tolerance = bvms::Rational::parse(tolerance_text);

    const auto trace = bvms::picard_iterate(input.space, *input.map, start, steps);
    const auto diag = bvms::orbit_diagnostics(input.space, trace, tolerance);
    const auto bounded = bvms::boundedness_check(input.space, trace);

    std::ostringstream os;
    os << scope_line(opts, input);
    os << "orbit from " << input.space.label(start) << ":";
    for (const auto p : trace.points) os << " " << input.space.label(p);
    os << "\n";
    if (trace.cycle)
        os << "cycle: entry " << trace.cycle->entry << ", period " << trace.cycle->period << "\n";
    if (trace.left_domain) os << "orbit left the map's domain\n";
    os << "max pairwise distance over the window: " << bounded.max_distance << "\n";

    json report{{"command", "iterate"}};
    report["trace"] = bvms::trace_to_json(input.space, trace);
    report["diagnostics"] = bvms::diagnostics_to_json(diag);
    report["boundedness"] =
        json{{"bounded", bounded.bounded}, {"M", bounded.max_distance.to_string()}};

    std::optional<bvms::PointId> z;
    if (!z_label.empty())
        z = input.space.require(z_label);
    else if (diag.fixed_point)
        z = diag.fixed_point;
    if (z) {
        const auto conv = bvms::convergence_check(input.space, trace, *z, tolerance);
        os << "convergence to " << input.space.label(*z) << " at tolerance " << tolerance << ": "
           << (conv.converged ? "yes" : "no");
        if (conv.first_index) os << " from index " << *conv.first_index;
        os << "\n";
        json jc{{"z", input.space.label(*z)},
                {"tolerance", tolerance.to_string()},
                {"converged", conv.converged}};
        jc["first_index"] = conv.first_index ? json(*conv.first_index) : json(nullptr);
        report["convergence"] = std::move(jc);
    }

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw bvms::JsonSchemaError(csv_path, "cannot open for writing");
        bvms::write_orbit_csv(csv, input.space, trace, diag);
        os << "plot data written to " << csv_path << "\n";
    }
    emit_with_space(opts, input, os.str(), std::move(report));
    return 0;
}

int run_orbit_bound(const InputOptions& opts, const std::string& x0, int v, std::size_t horizon) {
    const Input input = resolve_input(opts, true);
    const auto start = resolve_start(input, x0);
    const auto result = bvms::orbit_bound(input.space, *input.map, start, v, horizon);
    std::ostringstream os;
    os << scope_line(opts, input);
    os << "orbit bound from " << input.space.label(start) << " (v=" << v << ", horizon "
       << result.horizon_effective;
    if (result.horizon_effective != result.horizon_requested)
        os << " of requested " << result.horizon_requested << "; the map is partial";
    os << "): M = " << result.bound << ", attained at power " << result.attained_at << "\n";
    json report{{"command", "orbit-bound"}, {"x0", input.space.label(start)}};
    report.update(bvms::bound_to_json(result));
    emit_with_space(opts, input, os.str(), std::move(report));
    return 0;
}

int run_adjudicate(const InputOptions& opts, std::size_t horizon) {
    const Input input = resolve_input(opts, false);
    if (!input.instance)
        throw bvms::SizeError("adjudicate runs on gallery instances; pass --gallery or a gallery document");
    const auto report = bvms::adjudicate(*input.instance, {opts.budget}, horizon);

    std::ostringstream os;
    os << scope_line(opts, input);
    os << "adjudication of " << report.family << "(" << report.size << "): "
       << (report.upheld ? "all documented claims upheld" : "documented claims refuted") << "\n";
    for (const auto& c : report.claims)
        os << "  [" << (c.upheld ? "ok" : "REFUTED") << "] " << c.claim << ": " << c.detail << "\n";
    if (!report.errata.empty()) {
        os << "errata:\n";
        for (const auto& e : report.errata) os << "  - " << e << "\n";
    }
    emit_with_space(opts, input, os.str(), bvms::adjudication_to_json(input.space, report));
    return report.upheld ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification and fixed-point diagnostics for finite distance spaces"};
    app.require_subcommand(1);

    InputOptions opts;
    int v = 1;
    std::string s_text = "1";
    std::string epsilons;
    std::string x0;
    std::string z_label;
    std::string csv_path;
    std::string tolerance = "1/1000";
    std::size_t horizon = 16;
    std::size_t max_steps = 0;

    CLI::App* verify = app.add_subcommand("verify", "certify or refute the polygon inequality for (v, s)");
    add_input_options(verify, opts, false);
    verify->add_option("--v", v, "number of intermediate points")->required();
    verify->add_option("--s", s_text, "claimed coefficient s (rational)")->required();

    CLI::App* mins = app.add_subcommand("min-s", "least admissible s for a given v");
    add_input_options(mins, opts, false);
    mins->add_option("--v", v, "number of intermediate points")->required();

    CLI::App* contractive = app.add_subcommand("contractive", "check d(Tx,Ty) < d(x,y) on all pairs");
    add_input_options(contractive, opts, true);

    CLI::App* cond_a = app.add_subcommand("condition-a", "max admissible delta per epsilon, over point pairs");
    add_input_options(cond_a, opts, true);
    cond_a->add_option("--epsilons", epsilons, "comma-separated rational grid (default: realized distances and their halves)");

    CLI::App* cond_b = app.add_subcommand("condition-b", "max admissible delta per epsilon, over iterate pairs");
    add_input_options(cond_b, opts, true);
    cond_b->add_option("--x0", x0, "orbit start label (default: the gallery's canonical start)");
    cond_b->add_option("--horizon", horizon, "check pairs (i,j) with i < j < horizon (default 16)");
    cond_b->add_option("--epsilons", epsilons, "comma-separated rational grid (default: orbit distances and their halves)");

    CLI::App* iterate = app.add_subcommand("iterate", "run Picard iteration with diagnostics");
    add_input_options(iterate, opts, true);
    iterate->add_option("--x0", x0, "orbit start label (default: the gallery's canonical start)");
    iterate->add_option("--max-steps", max_steps, "step limit (default 2n+2)");
    iterate->add_option("--tolerance", tolerance, "tolerance for vanishing/convergence flags");
    iterate->add_option("--z", z_label, "check convergence to this point (default: detected fixed point)");
    iterate->add_option("--csv", csv_path, "write plot data (n, step_dist, dist_to_fixed) here");

    CLI::App* bound = app.add_subcommand("orbit-bound", "max d(x0, T^m x0) over m < horizon");
    add_input_options(bound, opts, true);
    bound->add_option("--x0", x0, "orbit start label (default: the gallery's canonical start)");
    bound->add_option("--v", v, "v the bound hypothesis refers to (reporting only)");
    bound->add_option("--horizon", horizon, "number of powers to take (default 16)");

    CLI::App* adjudicate = app.add_subcommand("adjudicate", "full battery over a gallery instance");
    add_input_options(adjudicate, opts, false);
    adjudicate->add_option("--horizon", horizon, "horizon for orbit-level checks (default 16)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(opts, v, s_text);
        if (mins->parsed()) return run_min_s(opts, v);
        if (contractive->parsed()) return run_contractive(opts);
        if (cond_a->parsed()) return run_condition_a(opts, epsilons);
        if (cond_b->parsed()) return run_condition_b(opts, x0, horizon, epsilons);
        if (iterate->parsed()) return run_iterate(opts, x0, max_steps, tolerance, z_label, csv_path);
        if (bound->parsed()) return run_orbit_bound(opts, x0, v, horizon);
        if (adjudicate->parsed()) return run_adjudicate(opts, horizon);
    } catch (const bvms::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << " (rerun with --budget >= " << e.required << ")\n";
        return 2;
    } catch (const bvms::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
