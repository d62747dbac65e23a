#include "padic/tree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace padic {

NodeDecision expand_node(const Quadratic& f, unsigned level, const Int& residue) {
  const Int& p = f.p;
  Int c = f.eval(residue);
  if (c == 0) return {NodeStatus::Splitting, 0, true};

  // f(p^m q + r) = A q^2 + B q + C as a quadratic in q
  Int pm = pow_int(p, level);
  Int a = f.a * pm * pm;
  Int b = pm * (2 * f.a * residue + f.b);

  long k = padic_valuation(c, p).value();
  k = std::min(k, padic_valuation(a, p).value());
  if (b != 0) k = std::min(k, padic_valuation(b, p).value());
  Int pk = pow_int(p, static_cast<unsigned>(k));
  Int a1 = mod_floor(a / pk, p);
  Int b1 = mod_floor(b / pk, p);
  Int c1 = mod_floor(c / pk, p);

  // After stripping the content, the valuation is constant (equal to k)
  // exactly when the stripped quadratic has no root mod p.
  bool solvable;
  if (a1 == 0) {
    solvable = b1 != 0;  // linear; b1 == 0 forces c1 != 0, no root
  } else {
    Int disc = b1 * b1 - 4 * a1 * c1;
    solvable = legendre_symbol(disc, p) != -1;
  }
  if (solvable) return {NodeStatus::Splitting, 0, false};
  return {NodeStatus::Terminating, k, false};
}

namespace {

constexpr unsigned kMaxTreePrime = 1u << 20;

TreeNode build_recursive(const Quadratic& f, unsigned level, const Int& residue,
                         unsigned depth_cap, std::vector<unsigned>& open) {
  NodeDecision d = expand_node(f, level, residue);
  TreeNode node{level, residue, d.status, d.valuation, d.exact_root, {}};
  if (d.status != NodeStatus::Splitting) return node;
  ++open[level];
  if (level >= depth_cap) {
    node.status = NodeStatus::DepthCapped;
    node.valuation = static_cast<long>(depth_cap);
    return node;
  }
  Int pm = pow_int(f.p, level);
  unsigned p = static_cast<unsigned>(f.p);
  node.children.reserve(p);
  for (unsigned t = 0; t < p; ++t) {
    node.children.push_back(
        build_recursive(f, level + 1, residue + t * pm, depth_cap, open));
  }
  return node;
}

void collect_by_level(const TreeNode& node,
                      std::map<unsigned, std::vector<const TreeNode*>>& out) {
  out[node.level].push_back(&node);
  for (const TreeNode& child : node.children) collect_by_level(child, out);
}

}  // namespace

ValuationTree build_tree(const Quadratic& f, unsigned depth_cap) {
  if (depth_cap < 1) throw Error("depth_cap must be >= 1");
  if (f.p > kMaxTreePrime) {
    throw Error("tree construction splits into p children per node; p = " +
                f.p.str() + " is too large to materialize");
  }
  std::vector<unsigned> open(depth_cap + 1, 0);  // non-terminating per level
  TreeNode root = build_recursive(f, 0, 0, depth_cap, open);

  ValuationTree tree{f, depth_cap, false, std::nullopt, std::move(root)};
  if (tree.root.status == NodeStatus::Terminating) {
    tree.is_finite = true;
    tree.levels = 0;
    return tree;
  }
  for (unsigned m = 1; m <= depth_cap; ++m) {
    if (open[m] == 0) {
      tree.is_finite = true;
      tree.levels = m;
      break;
    }
  }
  return tree;
}

Report check_structure(const ValuationTree& tree, const Classification& cls) {
  if (!(tree.quadratic == cls.original)) {
    throw MismatchedInput("tree and classification built from different inputs");
  }
  Report report;
  const Int& p = tree.quadratic.p;
  long k = static_cast<long>(cls.shift_k);

  std::map<unsigned, std::vector<const TreeNode*>> by_level;
  collect_by_level(tree.root, by_level);
  unsigned max_level = by_level.rbegin()->first;

  if (cls.kind == TreeKind::DotTree) {
    bool pass = tree.root.status == NodeStatus::Terminating &&
                tree.root.valuation == k && tree.levels == 0u;
    report.add("dot-tree: single node with valuation shift_k", pass,
               pass ? "" : "root is not a terminating node of valuation " +
                               std::to_string(k));
    return report;
  }

  if (cls.kind == TreeKind::Finite) {
    const FinitePayload& fin = *cls.finite;
    unsigned ell = fin.levels_ell;
    if (ell == 0) {
      bool pass = tree.root.status == NodeStatus::Terminating &&
                  tree.root.valuation == fin.max_valuation;
      report.add("finite: zero levels, constant valuation", pass);
      return report;
    }
    if (tree.depth_cap < ell) {
      report.add("finite: depth cap covers all levels", false,
                 "cap " + std::to_string(tree.depth_cap) + " < ell " +
                     std::to_string(ell));
      return report;
    }
    report.add("finite: tree level count equals ell",
               tree.is_finite && tree.levels == ell,
               "expected " + std::to_string(ell));

    long max_seen = -1;
    unsigned max_count = 0;
    for (unsigned m = 1; m <= ell; ++m) {
      Int spine = mod_floor(-fin.s_ell, pow_int(p, m));
      unsigned nonterm = 0, ok_terminals = 0;
      bool spine_ok = false;
      long expected_terminal = 2 * (static_cast<long>(m) - 1) + k;
      for (const TreeNode* node : by_level.at(m)) {
        if (node->status == NodeStatus::Terminating) {
          long want = (m == ell && node->residue == spine)
                          ? fin.max_valuation
                          : expected_terminal;
          if (node->valuation == want) ++ok_terminals;
          if (node->valuation > max_seen) {
            max_seen = node->valuation;
            max_count = 1;
          } else if (node->valuation == max_seen) {
            ++max_count;
          }
          if (m == ell && node->residue == spine) spine_ok = true;
        } else {
          ++nonterm;
          if (node->residue == spine) spine_ok = true;
        }
      }
      std::string tag = "level " + std::to_string(m);
      if (m < ell) {
        report.add(tag + ": one non-terminating node on the spine",
                   nonterm == 1 && spine_ok);
        report.add(tag + ": p-1 terminals with valuation 2(m-1)+k",
                   ok_terminals == by_level.at(m).size() - 1);
      } else {
        report.add(tag + ": all nodes terminate", nonterm == 0);
        report.add(tag + ": terminal valuations match the closed form",
                   ok_terminals == by_level.at(m).size() && spine_ok);
      }
    }
    report.add("finite: maximum valuation nu_p(D)+k attained exactly once",
               max_seen == fin.max_valuation && max_count == 1,
               "max " + std::to_string(max_seen) + " x" +
                   std::to_string(max_count));
    return report;
  }

  // infinite-branch variants
  std::vector<PadicApprox> roots = roots_at_precision(cls, max_level);
  for (unsigned m = 1; m <= max_level; ++m) {
    auto it = by_level.find(m);
    if (it == by_level.end()) break;
    Int pm = pow_int(p, m);
    std::set<Int> expected;
    for (const PadicApprox& root : roots) {
      expected.insert(mod_floor(root.residue, pm));
    }
    std::set<Int> actual;
    unsigned ok_terminals = 0, terminals = 0;
    for (const TreeNode* node : it->second) {
      if (node->status == NodeStatus::Terminating) {
        ++terminals;
        long want = 0;
        if (cls.kind == TreeKind::OneInfiniteBranchLinearCase) {
          want = static_cast<long>(m) - 1 + k;
        } else if (cls.kind == TreeKind::OneInfiniteBranchDoubleRoot) {
          want = 2 * (static_cast<long>(m) - 1) + k;
        }
        if (cls.kind == TreeKind::TwoInfiniteBranches || node->valuation == want) {
          ++ok_terminals;
        }
      } else {
        actual.insert(node->residue);
      }
    }
    std::string tag = "level " + std::to_string(m);
    report.add(tag + ": non-terminating nodes sit at the branch roots",
               actual == expected);
    if (cls.kind != TreeKind::TwoInfiniteBranches) {
      report.add(tag + ": terminal valuations match the corollary",
                 ok_terminals == terminals);
    }
  }
  return report;
}

}  // namespace padic
