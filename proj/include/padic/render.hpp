#pragma once

#include <string>

#include <json.hpp>

#include "padic/classifier.hpp"
#include "padic/report.hpp"
#include "padic/tree.hpp"

namespace padic {

enum class RenderFormat { Ascii, Dot, Json };
enum class LabelStyle { Residue, Congruence };

struct RenderOptions {
  RenderFormat format = RenderFormat::Ascii;
  LabelStyle label_style = LabelStyle::Residue;
  bool show_boxed_valuations = true;
};

// "9q+5" / "25q" style labels, or "n=5 mod 9" in congruence style.
std::string node_label(const TreeNode& node, const Int& p, LabelStyle style);

// Deterministic text rendering; children appear left-to-right in
// construction order. Terminating nodes print boxed valuations "[v]".
std::string render_tree(const ValuationTree& tree, const RenderOptions& opts);

nlohmann::json tree_to_json(const ValuationTree& tree);
ValuationTree tree_from_json(const nlohmann::json& doc);

std::string render_report(const Classification& cls,
                          const Report* checks = nullptr);
nlohmann::json classification_to_json(const Classification& cls);

std::string render_checks(const Report& report);

}  // namespace padic
