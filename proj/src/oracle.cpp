#include "padic/oracle.hpp"

#include <algorithm>

namespace padic {

ValuationSequence valuation_sequence(const Quadratic& f, std::size_t count) {
  if (count < 1) throw Error("sequence length must be >= 1");
  ValuationSequence seq{f, {}, std::nullopt};
  seq.terms.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    seq.terms.push_back(padic_valuation(f.eval(Int(n)), f.p));
  }
  return seq;
}

std::optional<Int> detect_period(const ValuationSequence& seq,
                                 unsigned max_exponent) {
  const Int& p = seq.quadratic.p;
  Int largest = pow_int(p, max_exponent);
  if (Int(seq.terms.size()) < 2 * largest) {
    throw InsufficientData("need at least " + Int(2 * largest).str() +
                           " terms to check period p^" +
                           std::to_string(max_exponent));
  }
  for (unsigned e = 0; e <= max_exponent; ++e) {
    // the candidate fits in size_t: 2*p^e <= terms.size()
    std::size_t period = static_cast<std::size_t>(pow_int(p, e));
    bool verified = true;
    for (std::size_t n = 0; n + period < seq.terms.size(); ++n) {
      if (!(seq.terms[n] == seq.terms[n + period])) {
        verified = false;
        break;
      }
    }
    if (verified) return Int(period);
  }
  return std::nullopt;
}

Report cross_check(const Quadratic& f, unsigned depth) {
  Report report;
  Classification cls = classify(f);

  unsigned cap = std::max(depth, 1u);
  if (cls.kind == TreeKind::Finite) {
    cap = std::max(cap, cls.finite->levels_ell);
  }
  ValuationTree tree = build_tree(f, cap);

  bool finite_agree = tree.is_finite == (cls.kind == TreeKind::DotTree ||
                                         cls.kind == TreeKind::Finite);
  report.add("builder/classifier finiteness agreement", finite_agree,
             finite_agree ? "" : "variant " + tree_kind_name(cls.kind));

  Report structure = check_structure(tree, cls);
  report.checks.insert(report.checks.end(), structure.checks.begin(),
                       structure.checks.end());

  if (cls.kind == TreeKind::Finite) {
    unsigned ell = cls.finite->levels_ell;
    Int window = 2 * pow_int(f.p, ell);
    std::size_t count = static_cast<std::size_t>(window);
    ValuationSequence seq = valuation_sequence(f, count);
    std::string counterexample;
    for (std::size_t n = 0; n < count; ++n) {
      Valuation predicted = predict_valuation(cls, Int(n));
      if (!(predicted == seq.terms[n])) {
        counterexample = "n=" + std::to_string(n) + " predicted " +
                         predicted.str() + " actual " + seq.terms[n].str();
        break;
      }
    }
    report.add("closed-form valuation equals oracle on [0, 2p^ell)",
               counterexample.empty(), counterexample);

    auto period = detect_period(seq, ell);
    bool period_ok = period.has_value() && *period == pow_int(f.p, ell);
    report.add("detected period equals p^ell", period_ok,
               period ? "got " + period->str() : "no period found");
  } else if (cls.has_infinite_branch()) {
    unsigned prec = std::max(cap, 1u);
    std::string counterexample;
    for (const PadicApprox& root : roots_at_precision(cls, prec)) {
      for (unsigned k = 1; k <= prec; ++k) {
        Int r = mod_floor(root.residue, pow_int(f.p, k));
        if (!padic_valuation(f.eval(r), f.p).at_least(k)) {
          counterexample = "root " + r.str() + " mod p^" + std::to_string(k);
          break;
        }
      }
      if (!counterexample.empty()) break;
    }
    report.add("branch roots have growing residuals", counterexample.empty(),
               counterexample);
  }
  return report;
}

}  // namespace padic
