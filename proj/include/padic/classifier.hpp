#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padic/core.hpp"
#include "padic/quadratic.hpp"

namespace padic {

enum class TreeKind {
  DotTree,
  OneInfiniteBranchLinearCase,  // a == 0, b != 0 mod p
  OneInfiniteBranchDoubleRoot,  // D == 0
  TwoInfiniteBranches,          // nu_p(D) even, Delta a residue
  Finite,                       // nu_p(D) odd or Delta a non-residue
};

std::string tree_kind_name(TreeKind kind);

// D = b^2 - 4ac decomposed as p^val * delta with p not dividing delta.
struct Discriminant {
  Int D;
  Valuation val = Valuation::infinity();  // nu_p(D); Infinity iff D == 0
  Int delta = 0;                          // undefined when D == 0
  bool delta_is_qr = false;
};

struct FinitePayload {
  unsigned levels_ell;   // ceil(nu_p(D) / 2)
  Int s_ell;             // truncation of b/(2a) mod p^ell, for the reduced f
  long max_valuation;    // nu_p(D) + shift_k
  Int translated_b;      // f(n - S_ell) = a n^2 + translated_b n + translated_c
  Int translated_c;
};

struct Classification {
  TreeKind kind;
  unsigned shift_k;
  Quadratic original;
  Quadratic reduced;
  std::optional<Discriminant> disc;   // set when reduced.a != 0 mod p
  std::vector<PadicApprox> roots;     // roots of the reduced polynomial in Z_p
  std::optional<FinitePayload> finite;

  bool has_infinite_branch() const {
    return kind != TreeKind::DotTree && kind != TreeKind::Finite;
  }
};

// Divide out the p-content: shift_k = min over coefficient valuations.
std::pair<Quadratic, unsigned> reduce_content(const Quadratic& f);

// The five-way classification; root payloads carried at root_precision.
Classification classify(const Quadratic& f, unsigned root_precision = 8);

// S_ell = b * (2a)^{-1} mod p^ell, the unique value in [0, p^ell) with
// nu_p(b - 2a*S_ell) >= ell. Requires p not dividing a.
Int compute_s_ell(const Quadratic& reduced, unsigned ell);

// Closed-form valuation for Finite classifications; agrees with
// padic_valuation(f(n)) for every integer n.
Valuation predict_valuation(const Classification& cls, const Int& n);

// Recompute the infinite-branch roots of the reduced polynomial at an
// arbitrary precision. Throws WrongClassification for DotTree/Finite.
std::vector<PadicApprox> roots_at_precision(const Classification& cls,
                                            unsigned precision);

// Per branch: the residues (m, root mod p^m) for m = 1..depth.
std::vector<std::vector<std::pair<unsigned, Int>>> infinite_branch_residues(
    const Classification& cls, unsigned depth);

}  // namespace padic
