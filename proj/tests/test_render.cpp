#include <doctest.h>

#include <random>

#include "padic/oracle.hpp"
#include "padic/render.hpp"

using namespace padic;

namespace {

bool nodes_equal(const TreeNode& lhs, const TreeNode& rhs) {
  if (lhs.level != rhs.level || lhs.residue != rhs.residue ||
      lhs.status != rhs.status || lhs.exact_root != rhs.exact_root ||
      lhs.children.size() != rhs.children.size()) {
    return false;
  }
  if (lhs.status != NodeStatus::Splitting && lhs.valuation != rhs.valuation) {
    return false;
  }
  for (std::size_t i = 0; i < lhs.children.size(); ++i) {
    if (!nodes_equal(lhs.children[i], rhs.children[i])) return false;
  }
  return true;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("ascii rendering of the two-level finite tree") {
  ValuationTree tree = build_tree(Quadratic(1, 0, 27, 3), 8);
  std::string text = render_tree(tree, RenderOptions{});
  CHECK(text.find("9q: [3]") != std::string::npos);
  CHECK(text.find("9q+3: [2]") != std::string::npos);
  CHECK(text.find("9q+6: [2]") != std::string::npos);
  CHECK(text.find("3q+1: [0]") != std::string::npos);
  CHECK(text.find("3q+2: [0]") != std::string::npos);
  CHECK(text.find("3q: nu>=1") != std::string::npos);
}

TEST_CASE("ascii rendering of a dot tree is a single line") {
  ValuationTree tree = build_tree(Quadratic(3, 3, 1, 3), 8);
  CHECK(render_tree(tree, RenderOptions{}) == "q: [0]\n");
}

TEST_CASE("congruence labels") {
  ValuationTree tree = build_tree(Quadratic(1, 0, 27, 3), 8);
  RenderOptions opts;
  opts.label_style = LabelStyle::Congruence;
  std::string text = render_tree(tree, opts);
  CHECK(text.find("n=3 mod 9: [2]") != std::string::npos);
}

TEST_CASE("dot export of a four-level finite tree") {
  ValuationTree tree = build_tree(Quadratic(4, 160, -587, 3), 8);
  RenderOptions opts;
  opts.format = RenderFormat::Dot;
  std::string text = render_tree(tree, opts);
  CHECK(count_occurrences(text, "shape=box") == 9);       // 9 leaves
  CHECK(count_occurrences(text, "shape=ellipse") == 4);   // q and 3 splits... plus root
  // leaf valuation multiset {0 x2, 2 x2, 4 x2, 6 x2, 7 x1}
  CHECK(count_occurrences(text, "[label=\"0\", shape=box]") == 2);
  CHECK(count_occurrences(text, "[label=\"2\", shape=box]") == 2);
  CHECK(count_occurrences(text, "[label=\"4\", shape=box]") == 2);
  CHECK(count_occurrences(text, "[label=\"6\", shape=box]") == 2);
  CHECK(count_occurrences(text, "[label=\"7\", shape=box]") == 1);
  CHECK(text.find("digraph") != std::string::npos);
}

TEST_CASE("json round-trip is an isomorphism") {
  std::mt19937_64 rng(321);
  std::uniform_int_distribution<long> coeff(-500, 500);
  const std::vector<int> primes = {3, 5, 7};
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    Int a = coeff(rng);
    if (a == 0) continue;
    Quadratic f(a, coeff(rng), coeff(rng), primes[pick(rng)]);
    ValuationTree tree = build_tree(f, 4);
    ValuationTree back = tree_from_json(tree_to_json(tree));
    CHECK(back.quadratic == tree.quadratic);
    CHECK(back.depth_cap == tree.depth_cap);
    CHECK(back.is_finite == tree.is_finite);
    CHECK(back.levels == tree.levels);
    CHECK(nodes_equal(back.root, tree.root));
  }
}

TEST_CASE("rendering is deterministic") {
  Quadratic f(1, 0, 1, 5);
  ValuationTree tree = build_tree(f, 3);
  for (RenderFormat format :
       {RenderFormat::Ascii, RenderFormat::Dot, RenderFormat::Json}) {
    RenderOptions opts;
    opts.format = format;
    CHECK(render_tree(tree, opts) == render_tree(build_tree(f, 3), opts));
  }
}

TEST_CASE("classification report fields") {
  Classification fin = classify(Quadratic(4, 160, -587, 3));
  std::string text = render_report(fin);
  CHECK(text.find("variant: Finite") != std::string::npos);
  CHECK(text.find("levels: 4") != std::string::npos);
  CHECK(text.find("max_valuation: 7") != std::string::npos);
  CHECK(text.find("S_ell: 20") != std::string::npos);
  CHECK(text.find("translated: 4n^2-2187") != std::string::npos);

  Classification two = classify(Quadratic(1, 0, 1, 5));
  std::string roots = render_report(two);
  CHECK(roots.find("branch 1: 2, 7, 57") != std::string::npos);
  CHECK(roots.find("branch 2: 3, 18, 68") != std::string::npos);

  Classification dot = classify(Quadratic(3, 3, 1, 3));
  CHECK(render_report(dot).find("single node, valuation 0") !=
        std::string::npos);

  Report checks = cross_check(Quadratic(1, 0, 27, 3), 3);
  std::string with_checks = render_report(classify(Quadratic(1, 0, 27, 3)),
                                          &checks);
  CHECK(with_checks.find("[PASS]") != std::string::npos);
}
