#include "padic/render.hpp"

#include <sstream>

namespace padic {

namespace {

using nlohmann::json;

std::string status_text(const TreeNode& node, bool boxed) {
  switch (node.status) {
    case NodeStatus::Terminating:
      return boxed ? "[" + std::to_string(node.valuation) + "]"
                   : std::to_string(node.valuation);
    case NodeStatus::Splitting:
      return "nu>=" + std::to_string(node.level);
    case NodeStatus::DepthCapped:
      return "nu>=" + std::to_string(node.valuation) + "...";
  }
  return "?";
}

std::string decorated_label(const TreeNode& node, const Int& p,
                            const RenderOptions& opts) {
  std::string line = node_label(node, p, opts.label_style) + ": " +
                     status_text(node, opts.show_boxed_valuations);
  if (node.exact_root) line += " (exact root)";
  return line;
}

void render_ascii(const TreeNode& node, const Int& p,
                  const RenderOptions& opts, const std::string& prefix,
                  std::ostringstream& out) {
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    const TreeNode& child = node.children[i];
    bool last = i + 1 == node.children.size();
    out << prefix << (last ? "`- " : "|- ") << decorated_label(child, p, opts)
        << "\n";
    render_ascii(child, p, opts, prefix + (last ? "   " : "|  "), out);
  }
}

void render_dot(const TreeNode& node, const Int& p, const RenderOptions& opts,
                unsigned& counter, unsigned parent_id, std::ostringstream& out) {
  unsigned id = counter++;
  const char* shape =
      node.status == NodeStatus::Terminating ? "box" : "ellipse";
  out << "  n" << id << " [label=\"" << status_text(node, false)
      << (node.exact_root ? " (exact root)" : "") << "\", shape=" << shape
      << "];\n";
  if (id != 0) {
    out << "  n" << parent_id << " -> n" << id << " [label=\""
        << node_label(node, p, opts.label_style) << "\"];\n";
  }
  for (const TreeNode& child : node.children) {
    render_dot(child, p, opts, counter, id, out);
  }
}

json node_to_json(const TreeNode& node) {
  json doc;
  doc["level"] = node.level;
  doc["residue"] = node.residue.str();
  switch (node.status) {
    case NodeStatus::Terminating:
      doc["status"] = "terminating";
      doc["valuation"] = node.valuation;
      break;
    case NodeStatus::Splitting:
      doc["status"] = "splitting";
      break;
    case NodeStatus::DepthCapped:
      doc["status"] = "depth_capped";
      doc["valuation"] = node.valuation;  // lower bound
      break;
  }
  if (node.exact_root) doc["exact_root"] = true;
  doc["children"] = json::array();
  for (const TreeNode& child : node.children) {
    doc["children"].push_back(node_to_json(child));
  }
  return doc;
}

TreeNode node_from_json(const json& doc) {
  TreeNode node;
  node.level = doc.at("level").get<unsigned>();
  node.residue = Int(doc.at("residue").get<std::string>());
  std::string status = doc.at("status").get<std::string>();
  if (status == "terminating") {
    node.status = NodeStatus::Terminating;
    node.valuation = doc.at("valuation").get<long>();
  } else if (status == "splitting") {
    node.status = NodeStatus::Splitting;
  } else if (status == "depth_capped") {
    node.status = NodeStatus::DepthCapped;
    node.valuation = doc.at("valuation").get<long>();
  } else {
    throw Error("unknown node status: " + status);
  }
  node.exact_root = doc.value("exact_root", false);
  for (const json& child : doc.at("children")) {
    node.children.push_back(node_from_json(child));
  }
  return node;
}

}  // namespace

std::string node_label(const TreeNode& node, const Int& p, LabelStyle style) {
  if (node.level == 0) return "q";
  Int modulus = pow_int(p, node.level);
  if (style == LabelStyle::Congruence) {
    return "n=" + node.residue.str() + " mod " + modulus.str();
  }
  std::string label = modulus.str() + "q";
  if (node.residue != 0) label += "+" + node.residue.str();
  return label;
}

std::string render_tree(const ValuationTree& tree, const RenderOptions& opts) {
  std::ostringstream out;
  switch (opts.format) {
    case RenderFormat::Ascii:
      out << decorated_label(tree.root, tree.quadratic.p, opts) << "\n";
      render_ascii(tree.root, tree.quadratic.p, opts, "", out);
      break;
    case RenderFormat::Dot: {
      out << "digraph valuation_tree {\n";
      out << "  label=\"" << tree.quadratic.str() << ", p="
          << tree.quadratic.p.str() << "\";\n";
      unsigned counter = 0;
      render_dot(tree.root, tree.quadratic.p, opts, counter, 0, out);
      out << "}\n";
      break;
    }
    case RenderFormat::Json:
      out << tree_to_json(tree).dump(2) << "\n";
      break;
  }
  return out.str();
}

json tree_to_json(const ValuationTree& tree) {
  json doc;
  doc["polynomial"] = {{"a", tree.quadratic.a.str()},
                       {"b", tree.quadratic.b.str()},
                       {"c", tree.quadratic.c.str()},
                       {"p", tree.quadratic.p.str()}};
  doc["depth_cap"] = tree.depth_cap;
  doc["is_finite"] = tree.is_finite;
  if (tree.levels) doc["levels"] = *tree.levels;
  doc["root"] = node_to_json(tree.root);
  return doc;
}

ValuationTree tree_from_json(const json& doc) {
  const json& poly = doc.at("polynomial");
  Quadratic f(Int(poly.at("a").get<std::string>()),
              Int(poly.at("b").get<std::string>()),
              Int(poly.at("c").get<std::string>()),
              Int(poly.at("p").get<std::string>()));
  ValuationTree tree{f, doc.at("depth_cap").get<unsigned>(),
                     doc.at("is_finite").get<bool>(), std::nullopt,
                     node_from_json(doc.at("root"))};
  if (doc.contains("levels")) tree.levels = doc.at("levels").get<unsigned>();
  return tree;
}

std::string render_report(const Classification& cls, const Report* checks) {
  std::ostringstream out;
  out << "polynomial: " << cls.original.str() << "\n";
  out << "p: " << cls.original.p.str() << "\n";
  out << "variant: " << tree_kind_name(cls.kind) << "\n";
  out << "shift_k: " << cls.shift_k << "\n";
  if (cls.disc) {
    out << "D: " << cls.disc->D.str() << "\n";
    if (cls.disc->D != 0) {
      out << "nu_p(D): " << cls.disc->val.str() << "\n";
      out << "Delta: " << cls.disc->delta.str() << "\n";
      out << "legendre(Delta): " << (cls.disc->delta_is_qr ? 1 : -1) << "\n";
    }
  }
  switch (cls.kind) {
    case TreeKind::DotTree:
      out << "single node, valuation " << cls.shift_k << "\n";
      break;
    case TreeKind::Finite: {
      const FinitePayload& fin = *cls.finite;
      out << "levels: " << fin.levels_ell << "\n";
      out << "S_ell: " << fin.s_ell.str() << "\n";
      out << "max_valuation: " << fin.max_valuation << "\n";
      Quadratic translated(cls.reduced.a, fin.translated_b, fin.translated_c,
                           cls.reduced.p);
      out << "translated: " << translated.str() << "\n";
      break;
    }
    default: {
      out << "roots:\n";
      for (std::size_t i = 0; i < cls.roots.size(); ++i) {
        const PadicApprox& root = cls.roots[i];
        out << "  branch " << i + 1 << ": ";
        for (unsigned m = 1; m <= root.precision; ++m) {
          if (m > 1) out << ", ";
          out << mod_floor(root.residue, pow_int(root.prime, m)).str();
        }
        out << " (mod p^1.." << "p^" << root.precision << ")\n";
      }
      break;
    }
  }
  if (checks) out << render_checks(*checks);
  return out.str();
}

json classification_to_json(const Classification& cls) {
  json doc;
  doc["polynomial"] = {{"a", cls.original.a.str()},
                       {"b", cls.original.b.str()},
                       {"c", cls.original.c.str()},
                       {"p", cls.original.p.str()}};
  doc["variant"] = tree_kind_name(cls.kind);
  doc["shift_k"] = cls.shift_k;
  if (cls.disc) {
    doc["D"] = cls.disc->D.str();
    if (cls.disc->D != 0) {
      doc["nu_p_D"] = cls.disc->val.value();
      doc["Delta"] = cls.disc->delta.str();
      doc["Delta_is_qr"] = cls.disc->delta_is_qr;
    }
  }
  if (cls.finite) {
    doc["levels"] = cls.finite->levels_ell;
    doc["S_ell"] = cls.finite->s_ell.str();
    doc["max_valuation"] = cls.finite->max_valuation;
  }
  if (!cls.roots.empty()) {
    doc["roots"] = json::array();
    for (const PadicApprox& root : cls.roots) {
      doc["roots"].push_back(
          {{"residue", root.residue.str()}, {"precision", root.precision}});
    }
  }
  return doc;
}

std::string render_checks(const Report& report) {
  std::ostringstream out;
  out << "checks:\n";
  for (const CheckResult& check : report.checks) {
    out << "  [" << (check.pass ? "PASS" : "FAIL") << "] " << check.name;
    if (!check.pass && !check.detail.empty()) out << ": " << check.detail;
    out << "\n";
  }
  return out.str();
}

}  // namespace padic
