#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "twcst/instance.hpp"
#include "twcst/optimal.hpp"
#include "twcst/thresholds.hpp"
#include "twcst/transform.hpp"
#include "twcst/tree.hpp"

namespace twcst {

using json = nlohmann::json;

// Instance: {"weights": [w1, ..., wn]}, integers only.
json to_json(const Instance& inst);
Instance instance_from_json(const json& j);

// Tree: {"kind": "leaf", "key": k}
//       {"kind": "eq", "key": k, "yes": ..., "no": ...}
//       {"kind": "lt", "key": k, "lt": ..., "ge": ...}
json to_json(const Tree& tree);
Tree tree_from_json(const json& j);

json to_json(const OptResult& result);
json to_json(const RotationStep& step);
json to_json(const TraceStep& step);
json to_json(const TransformTrace& trace);
json to_json(const ThresholdReport& report);
json to_json(const ScanSummary& summary);
json to_json(const SweepSummary& summary);

/// n, weights, w_max, W, ratio, E, L, verdict
std::string csv_header();
std::string csv_row(const ThresholdReport& report);

/// Node ids n<preorder index>; tests "=k" / "<k"; leaves "k (w)" when an
/// instance is given, else "k".
std::string to_dot(const Tree& tree, const Instance* inst = nullptr, const std::string& name = "T");

json read_json_file(const std::filesystem::path& path);
Instance read_instance(const std::filesystem::path& path);
Tree read_tree(const std::filesystem::path& path);

}  // namespace twcst
