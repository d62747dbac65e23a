#pragma once

#include <optional>
#include <vector>

#include "padic/classifier.hpp"
#include "padic/quadratic.hpp"
#include "padic/report.hpp"
#include "padic/tree.hpp"

namespace padic {

// Ground-truth valuations nu_p(f(0)), ..., nu_p(f(N-1)) by direct evaluation.
struct ValuationSequence {
  Quadratic quadratic;
  std::vector<Valuation> terms;
  std::optional<Int> detected_period;
};

ValuationSequence valuation_sequence(const Quadratic& f, std::size_t count);

// Least power of p that is a verified period of seq over the whole sampled
// window (candidates p^0..p^max_exponent; smaller powers are refuted first).
// Throws InsufficientData unless the window holds >= 2*p^max_exponent terms.
std::optional<Int> detect_period(const ValuationSequence& seq,
                                 unsigned max_exponent);

// Runs classify, build_tree and check_structure, plus (Finite) the closed
// form and period against the brute-force sequence. Failures are report
// entries, never exceptions.
Report cross_check(const Quadratic& f, unsigned depth);

}  // namespace padic
