#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringweight/conv.hpp"
#include "ringweight/ring.hpp"
#include "ringweight/scalar.hpp"
#include "ringweight/weights.hpp"

namespace ringweight {

struct CriterionEntry {
  IdealExponent x;
  Scalar value;
  bool pass = false;  // value != 0
};

/// Per-ideal witnesses for the sufficient extension condition. The overall
/// flag is the conjunction of the entries; a failed entry means the
/// criterion is violated, not that extension fails.
struct CriterionReport {
  std::string ring;
  std::vector<CriterionEntry> entries;  // nonzero ideals in ideal_reps() order
  bool pass = false;
};

/// The sum over t with Rx^orth <= Rt of mu(0,Rxt) w(tx), evaluated directly
/// from its defining formula for every nonzero ideal x (in ideal_reps()
/// order). Equals the diagonal corr_eta_closed(w, x, x).
std::vector<std::pair<IdealExponent, Scalar>> criterion_values(const Weight& w);

CriterionReport criterion_check(const Weight& w);

/// Solves w (*) h = w_H for h in S, exactly. Returns std::nullopt when the
/// (triangular, criterion values on the diagonal) system is inconsistent;
/// a returned h always reproduces the Hamming expansion under corr_right.
std::optional<SElement> solve_to_hamming(const Weight& w);

}  // namespace ringweight
