#pragma once

#include <optional>
#include <vector>

#include "padic/classifier.hpp"
#include "padic/quadratic.hpp"
#include "padic/report.hpp"

namespace padic {

enum class NodeStatus { Terminating, Splitting, DepthCapped };

// One residue class r mod p^m of the valuation tree.
struct TreeNode {
  unsigned level;
  Int residue;
  NodeStatus status;
  long valuation = 0;  // Terminating: the constant value; DepthCapped: lower bound
  bool exact_root = false;  // f(residue) == 0 exactly
  std::vector<TreeNode> children;  // p children, residues r + t*p^m ascending
};

struct ValuationTree {
  Quadratic quadratic;
  unsigned depth_cap;
  bool is_finite = false;
  std::optional<unsigned> levels;  // least all-terminating level, when finite
  TreeNode root;
};

struct NodeDecision {
  NodeStatus status;
  long valuation;  // meaningful for Terminating
  bool exact_root;
};

// Decides whether nu_p(f(p^m q + r)) is constant over q. The test is exact:
// substitute n = p^m q + r, strip the p-content of the resulting quadratic
// in q, and terminate iff the stripped quadratic has no root mod p.
NodeDecision expand_node(const Quadratic& f, unsigned level, const Int& residue);

// Breadth-first expansion up to depth_cap; Terminating nodes are pruned
// (no children stored), Splitting nodes at the cap become DepthCapped.
ValuationTree build_tree(const Quadratic& f, unsigned depth_cap);

// Verifies the per-variant structural rules (branch counts, terminal
// valuations, maximum valuation) of a built tree against a classification.
// Throws MismatchedInput when the tree and classification disagree on f.
Report check_structure(const ValuationTree& tree, const Classification& cls);

}  // namespace padic
