#include "padic/classifier.hpp"

#include <algorithm>

namespace padic {

std::string tree_kind_name(TreeKind kind) {
  switch (kind) {
    case TreeKind::DotTree:
      return "DotTree";
    case TreeKind::OneInfiniteBranchLinearCase:
      return "OneInfiniteBranchLinearCase";
    case TreeKind::OneInfiniteBranchDoubleRoot:
      return "OneInfiniteBranchDoubleRoot";
    case TreeKind::TwoInfiniteBranches:
      return "TwoInfiniteBranches";
    case TreeKind::Finite:
      return "Finite";
  }
  return "?";
}

std::pair<Quadratic, unsigned> reduce_content(const Quadratic& f) {
  long k = padic_valuation(f.a, f.p).value();
  Valuation vb = padic_valuation(f.b, f.p);
  Valuation vc = padic_valuation(f.c, f.p);
  if (!vb.is_infinite()) k = std::min(k, vb.value());
  if (!vc.is_infinite()) k = std::min(k, vc.value());
  Int q = pow_int(f.p, static_cast<unsigned>(k));
  return {Quadratic(f.a / q, f.b / q, f.c / q, f.p),
          static_cast<unsigned>(k)};
}

Int compute_s_ell(const Quadratic& reduced, unsigned ell) {
  if (mod_floor(reduced.a, reduced.p) == 0) {
    throw Error("compute_s_ell requires p not dividing a");
  }
  if (ell == 0) return 0;
  Int m = pow_int(reduced.p, ell);
  return mod_floor(reduced.b * mod_inverse(2 * reduced.a, m), m);
}

namespace {

Discriminant analyze_discriminant(const Quadratic& g) {
  Discriminant d;
  d.D = g.discriminant();
  d.val = padic_valuation(d.D, g.p);
  if (d.D != 0) {
    d.delta = d.D / pow_int(g.p, static_cast<unsigned>(d.val.value()));
    d.delta_is_qr = legendre_symbol(d.delta, g.p) == 1;
  }
  return d;
}

std::vector<PadicApprox> compute_roots(const Quadratic& g, TreeKind kind,
                                       const Discriminant* disc,
                                       unsigned precision) {
  const Int& p = g.p;
  Int m = pow_int(p, precision);
  switch (kind) {
    case TreeKind::OneInfiniteBranchLinearCase: {
      Int x0 = mod_floor(-g.c * mod_inverse(g.b, p), p);
      return {hensel_lift_quadratic_root(g, x0, precision)};
    }
    case TreeKind::OneInfiniteBranchDoubleRoot: {
      Int r = mod_floor(-g.b * mod_inverse(2 * g.a, m), m);
      return {PadicApprox{r, precision, p}};
    }
    case TreeKind::TwoInfiniteBranches: {
      unsigned e = static_cast<unsigned>(disc->val.value()) / 2;
      PadicApprox u = hensel_lift_sqrt(disc->delta, p, precision);
      Int sqrt_d = pow_int(p, e) * u.residue;
      Int inv2a = mod_inverse(2 * g.a, m);
      Int r1 = mod_floor((-g.b - sqrt_d) * inv2a, m);
      Int r2 = mod_floor((-g.b + sqrt_d) * inv2a, m);
      // order branches by the first p-adic digit where the roots differ
      for (unsigned j = 1; j <= precision; ++j) {
        Int pj = pow_int(p, j);
        Int d1 = mod_floor(r1, pj), d2 = mod_floor(r2, pj);
        if (d1 == d2) continue;
        if (d2 < d1) std::swap(r1, r2);
        break;
      }
      return {PadicApprox{r1, precision, p}, PadicApprox{r2, precision, p}};
    }
    default:
      return {};
  }
}

}  // namespace

Classification classify(const Quadratic& f, unsigned root_precision) {
  auto [g, k] = reduce_content(f);
  Classification cls{TreeKind::DotTree, k, f, g, std::nullopt, {}, std::nullopt};

  Int a0 = mod_floor(g.a, g.p);
  Int b0 = mod_floor(g.b, g.p);
  if (a0 == 0 && b0 == 0) {
    // reduction guarantees c != 0 mod p: a single node of valuation shift_k
    cls.kind = TreeKind::DotTree;
    return cls;
  }
  if (a0 == 0) {
    cls.kind = TreeKind::OneInfiniteBranchLinearCase;
    cls.roots = compute_roots(g, cls.kind, nullptr, root_precision);
    return cls;
  }

  Discriminant disc = analyze_discriminant(g);
  cls.disc = disc;
  if (disc.D == 0) {
    cls.kind = TreeKind::OneInfiniteBranchDoubleRoot;
    cls.roots = compute_roots(g, cls.kind, &disc, root_precision);
    return cls;
  }
  long nu_d = disc.val.value();
  if (nu_d % 2 == 0 && disc.delta_is_qr) {
    cls.kind = TreeKind::TwoInfiniteBranches;
    cls.roots = compute_roots(g, cls.kind, &disc, root_precision);
    return cls;
  }

  cls.kind = TreeKind::Finite;
  unsigned ell = static_cast<unsigned>((nu_d + 1) / 2);
  Int s_ell = compute_s_ell(g, ell);
  FinitePayload fin;
  fin.levels_ell = ell;
  fin.s_ell = s_ell;
  fin.max_valuation = nu_d + static_cast<long>(k);
  fin.translated_b = g.b - 2 * g.a * s_ell;
  fin.translated_c = g.eval(-s_ell);
  cls.finite = fin;
  return cls;
}

Valuation predict_valuation(const Classification& cls, const Int& n) {
  if (cls.kind != TreeKind::Finite) {
    throw WrongClassification("predict_valuation requires a Finite classification");
  }
  const FinitePayload& fin = *cls.finite;
  Valuation vt = padic_valuation(n + fin.s_ell, cls.reduced.p);
  if (vt.at_least(fin.levels_ell)) {
    return Valuation::finite(fin.max_valuation);
  }
  return Valuation::finite(2 * vt.value() + static_cast<long>(cls.shift_k));
}

std::vector<PadicApprox> roots_at_precision(const Classification& cls,
                                            unsigned precision) {
  if (!cls.has_infinite_branch()) {
    throw WrongClassification("no infinite branches for " +
                              tree_kind_name(cls.kind));
  }
  if (!cls.roots.empty() && cls.roots.front().precision >= precision) {
    std::vector<PadicApprox> out;
    for (const auto& r : cls.roots) out.push_back(r.truncated(precision));
    return out;
  }
  return compute_roots(cls.reduced, cls.kind,
                       cls.disc ? &*cls.disc : nullptr, precision);
}

std::vector<std::vector<std::pair<unsigned, Int>>> infinite_branch_residues(
    const Classification& cls, unsigned depth) {
  std::vector<std::vector<std::pair<unsigned, Int>>> out;
  for (const PadicApprox& root : roots_at_precision(cls, depth)) {
    std::vector<std::pair<unsigned, Int>> branch;
    for (unsigned m = 1; m <= depth; ++m) {
      branch.emplace_back(m, mod_floor(root.residue, pow_int(root.prime, m)));
    }
    out.push_back(std::move(branch));
  }
  return out;
}

}  // namespace padic
