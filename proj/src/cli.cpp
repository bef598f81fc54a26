#include "twcst/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "twcst/core.hpp"
#include "twcst/io.hpp"

namespace twcst::cli {
namespace {

struct Options {
    std::string instance;
    std::string tree;
    std::string out;
    std::string format = "json";
    std::string bound = "plus";
    int n = 7;
    Weight min_weight = 1;
    Weight max_weight = 8;
    long samples = 1000;
    std::uint64_t seed = 7;
    unsigned jobs = 0;
    bool theorem = false;
    bool oracle_engine = false;
};

struct CheckFailed {
    json report;
};

void write(const Options& o, std::ostream& out, const std::string& text) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out);
    if (!file) throw IoError("cannot write " + o.out);
    file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Instance need_instance(const Options& o) {
    if (o.instance.empty()) throw CLI::RequiredError("--instance");
    return read_instance(o.instance);
}

Tree need_tree(const Options& o, const Instance* inst) {
    if (o.tree.empty()) throw CLI::RequiredError("--tree");
    Tree t = read_tree(o.tree);
    if (inst && !is_valid(t, all_keys(*inst))) {
        throw InvalidTree("tree does not route every key of the instance to its leaf: " + to_string(t));
    }
    return t;
}

void emit_result(const Options& o, std::ostream& out, const OptResult& r, const Instance& inst) {
    write(o, out, o.format == "dot" ? to_dot(r.tree, &inst) : dump(to_json(r)));
}

void cmd_solve(const Options& o, std::ostream& out) {
    const Instance inst = need_instance(o);
    emit_result(o, out, dp_opt(inst), inst);
}

void cmd_oracle(const Options& o, std::ostream& out) {
    const Instance inst = need_instance(o);
    emit_result(o, out, oracle_opt(inst), inst);
}

json lemma_report(const Tree& t, const Instance& inst) {
    const auto mono = check_side_weight_monotonicity(t, inst);
    json j{{"tree", to_string(t)}, {"sideWeightMonotone", mono.holds}};
    if (!mono.holds) j["firstViolation"] = {{"parent", to_string(mono.parent.value_or(Path{}))}, {"child", to_string(mono.child.value_or(Path{}))}};
    if (inst.size() > 2) j["eqRootMaxWeight"] = check_eq_root_max_weight(t, inst);
    return j;
}

void cmd_verify(const Options& o, std::ostream& out) {
    if (o.theorem) {
        SweepOptions s;
        s.samples = o.samples;
        s.max_n = o.n;
        s.seed = o.seed;
        s.jobs = o.jobs;
        const SweepSummary r = theorem_sweep(s);
        const json j = to_json(r);
        write(o, out, dump(j));
        if (r.failures != 0 || r.transform_failures != 0) throw CheckFailed{j};
        return;
    }
    const Instance inst = need_instance(o);
    const Engine engine = o.oracle_engine ? Engine::Oracle : Engine::Dp;
    const TheoremCheck check = verify_theorem(inst, engine);
    json j{{"theorem",
            {{"applicable", check.applicable}, {"holds", check.holds}, {"report", to_json(check.report)}}}};
    bool ok = check.holds;
    const HeaviestFirstDp dp(inst);
    json trees = json::array();
    std::vector<Tree> optimal;
    if (inst.size() <= 9) {
        optimal = Oracle(inst).all_optimal_trees(full_mask(inst.size()));
    } else {
        optimal.push_back(dp.tree());
    }
    for (const auto& t : optimal) {
        json l = lemma_report(t, inst);
        ok = ok && l["sideWeightMonotone"].get<bool>() && l.value("eqRootMaxWeight", true);
        trees.push_back(std::move(l));
    }
    j["optimalTrees"] = std::move(trees);
    j["ok"] = ok;
    write(o, out, dump(j));
    if (!ok) throw CheckFailed{j};
}

void cmd_transform(const Options& o, std::ostream& out) {
    const Instance inst = need_instance(o);
    const Tree input = need_tree(o, &inst);
    const TransformResult r = transform_to_eq_root(input, inst);
    if (o.format == "dot") {
        write(o, out, to_dot(input, &inst, "before") + to_dot(r.tree, &inst, "after"));
    } else {
        write(o, out, dump(json{{"tree", to_json(r.tree)}, {"trace", to_json(r.trace)}}));
    }
}

void cmd_sweep(const Options& o, std::ostream& out) {
    ScanOptions s;
    s.n = o.n;
    s.min_weight = o.min_weight;
    s.max_weight = o.max_weight;
    s.samples = o.samples;
    s.seed = o.seed;
    s.jobs = o.jobs;
    s.engine = o.oracle_engine ? Engine::Oracle : Engine::Dp;
    const ScanSummary r = o.bound == "plus" ? scan_lambda_plus(s) : scan_lambda_minus(s);
    if (o.format == "csv") {
        std::string text = csv_header() + "\n";
        for (const auto& row : r.frontier) text += csv_row(row) + "\n";
        for (const auto& row : r.violating) text += csv_row(row) + "\n";
        write(o, out, text);
    } else {
        write(o, out, dump(to_json(r)));
    }
    if (r.violations != 0) throw CheckFailed{to_json(r)};
}

void cmd_render(const Options& o, std::ostream& out) {
    std::optional<Instance> inst;
    if (!o.instance.empty()) inst = read_instance(o.instance);
    const Tree t = need_tree(o, inst ? &*inst : nullptr);
    write(o, out, to_dot(t, inst ? &*inst : nullptr));
}

void error_json(std::ostream& err, const std::string& kind, const std::string& message) {
    err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Optimal two-way comparison search trees"};
    app.require_subcommand(1, 1);

    const auto add_instance = [&](CLI::App* c, bool required) {
        auto* opt = c->add_option("--instance", o.instance, "Instance JSON {\"weights\": [...]}");
        if (required) opt->required();
    };
    const auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "Write output here instead of stdout"); };
    const auto add_format = [&](CLI::App* c, std::vector<std::string> allowed) {
        c->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
    };
    const auto add_scale = [&](CLI::App* c) {
        c->add_option("--n", o.n, "Number of keys (sweeps: largest n)")->capture_default_str()->check(CLI::Range(2, 64));
        c->add_option("--samples", o.samples, "Random samples / hill-climbing restarts")
            ->capture_default_str()
            ->check(CLI::NonNegativeNumber);
        c->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
        c->add_option("--jobs", o.jobs, "Worker threads (0: all cores)")->capture_default_str();
    };

    auto* solve = app.add_subcommand("solve", "Optimal tree by dynamic programming");
    add_instance(solve, true);
    add_format(solve, {"json", "dot"});
    add_out(solve);

    auto* oracle = app.add_subcommand("oracle", "Optimal tree by exhaustive search (n <= 15)");
    add_instance(oracle, true);
    add_format(oracle, {"json", "dot"});
    add_out(oracle);

    auto* verify = app.add_subcommand("verify", "Check lemmas and the 3/7 theorem on an instance or a random sweep");
    add_instance(verify, false);
    verify->add_flag("--theorem", o.theorem, "Random sweep over heavy instances with n in 2..--n");
    verify->add_flag("--oracle", o.oracle_engine, "Use exhaustive search for root-restricted costs");
    add_scale(verify);
    add_out(verify);

    auto* transform = app.add_subcommand("transform", "Rewrite a less-than-rooted optimal tree to an equal-to root");
    add_instance(transform, true);
    transform->add_option("--tree", o.tree, "Tree JSON")->required();
    add_format(transform, {"json", "dot"});
    add_out(transform);

    auto* sweep = app.add_subcommand("sweep", "Search for extreme weight ratios");
    sweep->add_option("--bound", o.bound, "plus: largest lt-strict ratio; minus: smallest eq-optimal ratio")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    sweep->add_option("--min-weight", o.min_weight, "Smallest weight")->capture_default_str();
    sweep->add_option("--max-weight", o.max_weight, "Largest weight")->capture_default_str();
    sweep->add_flag("--oracle", o.oracle_engine, "Use exhaustive search instead of the DP");
    add_scale(sweep);
    add_format(sweep, {"csv", "json"});
    add_out(sweep);

    auto* render = app.add_subcommand("render", "Tree JSON to Graphviz DOT");
    render->add_option("--tree", o.tree, "Tree JSON")->required();
    add_instance(render, false);
    add_out(render);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        error_json(err, "UsageError", e.what());
        return kUsage;
    }
    // Each sweep format has its own default.
    if (sweep->parsed() && sweep->count("--format") == 0) o.format = "csv";

    try {
        if (solve->parsed()) cmd_solve(o, out);
        if (oracle->parsed()) cmd_oracle(o, out);
        if (verify->parsed()) cmd_verify(o, out);
        if (transform->parsed()) cmd_transform(o, out);
        if (sweep->parsed()) cmd_sweep(o, out);
        if (render->parsed()) cmd_render(o, out);
    } catch (const CheckFailed& f) {
        error_json(err, "CheckFailed", "a verification check failed; see the report");
        return kCheckFailed;
    } catch (const PreconditionViolated& e) {
        err << json{{"error", e.kind()}, {"inequality", e.inequality()}, {"location", e.location()}}.dump() << "\n";
        return kCheckFailed;
    } catch (const MaxWeightTooSmall& e) {
        error_json(err, e.kind(), e.what());
        return kCheckFailed;
    } catch (const Error& e) {
        error_json(err, e.kind(), e.what());
        return kUsage;
    } catch (const CLI::Error& e) {
        error_json(err, "UsageError", std::string(e.what()) + " is required");
        return kUsage;
    } catch (const std::invalid_argument& e) {
        error_json(err, "InvalidArgument", e.what());
        return kUsage;
    }
    return kOk;
}

}  // namespace twcst::cli
