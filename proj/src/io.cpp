#include "twcst/io.hpp"

#include <fstream>
#include <sstream>

namespace twcst {

json to_json(const Instance& inst) {
    return json{{"weights", std::vector<Weight>(inst.weights().begin(), inst.weights().end())}};
}

Instance instance_from_json(const json& j) {
    if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array()) {
        throw InvalidInstance("instance JSON needs a \"weights\" array");
    }
    std::vector<Weight> w;
    for (const auto& x : j["weights"]) {
        if (!x.is_number_integer()) throw InvalidInstance("weights must be integers, got " + x.dump());
        w.push_back(x.get<Weight>());
    }
    return Instance(std::move(w));
}

json to_json(const Tree& tree) {
    switch (tree.kind()) {
        case NodeKind::Leaf: return json{{"kind", "leaf"}, {"key", tree.key()}};
        case NodeKind::Eq:
            return json{{"kind", "eq"}, {"key", tree.key()}, {"yes", to_json(tree.yes())}, {"no", to_json(tree.no())}};
        case NodeKind::Lt:
            return json{{"kind", "lt"}, {"key", tree.key()}, {"lt", to_json(tree.yes())}, {"ge", to_json(tree.no())}};
    }
    return {};
}

namespace {

const json& field(const json& j, const char* name) {
    if (!j.contains(name)) throw InvalidTree(std::string("tree node lacks \"") + name + "\": " + j.dump());
    return j[name];
}

}  // namespace

Tree tree_from_json(const json& j) {
    if (!j.is_object()) throw InvalidTree("tree node must be an object");
    const json& kind = field(j, "kind");
    const json& key = field(j, "key");
    if (!kind.is_string() || !key.is_number_integer()) throw InvalidTree("bad kind/key in " + j.dump());
    const std::string k = kind.get<std::string>();
    if (k == "leaf") return Tree::leaf(key.get<Key>());
    if (k == "eq") return Tree::eq(key.get<Key>(), tree_from_json(field(j, "yes")), tree_from_json(field(j, "no")));
    if (k == "lt") return Tree::lt(key.get<Key>(), tree_from_json(field(j, "lt")), tree_from_json(field(j, "ge")));
    throw InvalidTree("unknown node kind \"" + k + "\"");
}

json to_json(const OptResult& result) {
    json kinds = json::array();
    if (result.root_kind == RootKind::Both) {
        kinds = {"eq", "lt"};
    } else {
        kinds.push_back(to_string(result.root_kind));
    }
    return json{{"cost", result.cost}, {"rootKinds", kinds}, {"tree", to_json(result.tree)}};
}

json to_json(const RotationStep& step) { return json{{"rule", step.rule}, {"path", to_string(step.path)}}; }

json to_json(const TraceStep& step) {
    json j{{"case", to_string(step.label)},
           {"costDelta", step.cost_delta},
           {"location", step.location},
           {"mirrored", step.mirrored},
           {"withinBound", step.within_bound()}};
    if (step.bound) j[step.exact ? "expectedDelta" : "deltaBound"] = *step.bound;
    if (!step.rotations.empty()) {
        j["rotations"] = json::array();
        for (const auto& r : step.rotations) j["rotations"].push_back(to_json(r));
    }
    return j;
}

json to_json(const TransformTrace& trace) {
    json steps = json::array();
    for (const auto& s : trace.steps) steps.push_back(to_json(s));
    return json{{"inputCost", trace.input_cost}, {"outputCost", trace.output_cost}, {"steps", steps}};
}

json to_json(const ThresholdReport& r) {
    return json{{"weights", to_json(r.instance)["weights"]},
                {"ratio", to_string(r.ratio)},
                {"E", r.eq_cost},
                {"L", r.lt_cost},
                {"verdict", to_string(r.verdict)}};
}

namespace {

json report_list(const std::vector<ThresholdReport>& rs) {
    json out = json::array();
    for (const auto& r : rs) out.push_back(to_json(r));
    return out;
}

}  // namespace

json to_json(const ScanSummary& s) {
    return json{{"bound", s.bound},
                {"n", s.n},
                {"exhaustive", s.exhaustive},
                {"evaluated", s.evaluated},
                {"violations", s.violations},
                {"best", s.best ? to_json(*s.best) : json(nullptr)},
                {"frontier", report_list(s.frontier)},
                {"violating", report_list(s.violating)}};
}

json to_json(const SweepSummary& s) {
    return json{{"checked", s.checked},
                {"failures", s.failures},
                {"ties", s.ties},
                {"transformed", s.transformed},
                {"transformFailures", s.transform_failures},
                {"cases", s.cases},
                {"failing", report_list(s.failing)},
                {"transformErrors", s.transform_errors}};
}

std::string csv_header() { return "n,weights,w_max,W,ratio,E,L,verdict"; }

std::string csv_row(const ThresholdReport& r) {
    std::ostringstream out;
    out << r.instance.size() << ',';
    for (int k = 1; k <= r.instance.size(); ++k) out << (k > 1 ? " " : "") << r.instance.weight(k);
    out << ',' << r.instance.max_weight() << ',' << r.instance.total() << ',' << to_string(r.ratio) << ','
        << r.eq_cost << ',' << r.lt_cost << ',' << to_string(r.verdict);
    return out.str();
}

namespace {

int emit_dot(const Tree& t, const Instance* inst, int& next, std::ostream& out) {
    const int id = next++;
    if (t.is_leaf()) {
        out << "  n" << id << " [shape=box, label=\"" << t.key();
        if (inst) out << " (" << inst->weight(t.key()) << ")";
        out << "\"];\n";
        return id;
    }
    const bool eq = t.kind() == NodeKind::Eq;
    out << "  n" << id << " [label=\"" << (eq ? "=" : "<") << t.key() << "\"];\n";
    const int yes = emit_dot(t.yes(), inst, next, out);
    const int no = emit_dot(t.no(), inst, next, out);
    out << "  n" << id << " -> n" << yes << " [label=\"" << (eq ? "=" : "<") << "\"];\n";
    out << "  n" << id << " -> n" << no << " [label=\"" << (eq ? "!=" : ">=") << "\"];\n";
    return id;
}

}  // namespace

std::string to_dot(const Tree& tree, const Instance* inst, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    if (!tree.empty()) {
        int next = 0;
        emit_dot(tree, inst, next, out);
    }
    out << "}\n";
    return out.str();
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

Instance read_instance(const std::filesystem::path& path) { return instance_from_json(read_json_file(path)); }
Tree read_tree(const std::filesystem::path& path) { return tree_from_json(read_json_file(path)); }

}  // namespace twcst
