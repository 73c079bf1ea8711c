#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upl/model.hpp"

namespace upl {

struct BadCutoffError : Error {
  using Error::Error;
};
struct TooLargeError : Error {
  using Error::Error;
};

/// One cutoff type index per item, 0-based.
using CutoffVector = std::vector<int>;

/// Per-item pseudo-revenue sequences R_i^k = (1 - F_{i-1}) theta_i^k, their
/// quasi-concave closures, and the argmax sets.
struct RevenueCurves {
  std::vector<RatVec> R;                // [item][type]
  std::vector<RatVec> Rbar;             // quasi-concave closures
  std::vector<std::vector<int>> peaks;  // argmax sets, ascending
};

/// Myersonian virtual values phi_i = theta_i - (1 - F_i)/f_i (theta_{i+1} - theta_i);
/// the last row equals theta_n. Indexed [type][item].
RatMat initial_virtual_values(const Instance& inst);

std::vector<RatVec> pseudo_revenues(const Instance& inst);

/// Pointwise smallest quasi-concave sequence dominating seq: running maxima
/// toward any argmax from both sides. Independent of the argmax choice.
RatVec quasi_concave_closure(const RatVec& seq);

RevenueCurves make_revenue_curves(const Instance& inst);

/// Maximal contiguous run of types where the closure differs from the curve.
struct IroningInterval {
  int item = 0;
  int lo = 0, hi = 0;  // inclusive, 0-based
  bool contains(int i) const { return lo <= i && i <= hi; }
};

std::vector<IroningInterval> candidate_ironing_intervals(const RevenueCurves& curves, int item);

/// Verdict of a condition check. `witness` holds the indices of the first
/// counterexample (0-based); `note` explains it.
struct CheckResult {
  bool ok = true;
  std::vector<int> witness;
  std::string note;
};

/// i <= i^k <= j implies theta_i^k <= theta_j^k, for every item.
CheckResult check_weak_monotonicity(const Instance& inst, const CutoffVector& cutoffs);

/// phi_i^k <= 0 below the cutoff and >= 0 at and above it; equivalently R^k is
/// single-peaked with peak i^k.
CheckResult check_regularity(const Instance& inst, const CutoffVector& cutoffs);

/// theta_i^l / theta_i^k nondecreasing in i for k <= l, by cross-multiplication.
CheckResult check_monotone_mrs(const Instance& inst);

/// The three mostly-regular conditions (no partial overlap, no ironing on
/// neighboring maxima, not too shuffled) for every adjacent item pair.
/// Requires nondecreasing cutoffs lying in the pseudo-revenue argmax sets.
CheckResult check_mostly_regular(const Instance& inst, const CutoffVector& cutoffs);

/// Per-item cutoff sets, for the compatible-cutoff intersection search.
std::vector<int> weakly_monotone_cutoffs(const Instance& inst, int item);
std::vector<int> regular_cutoffs(const Instance& inst, int item);

enum class ConditionMode { regular, mostly_regular };

struct CutoffSearch {
  std::optional<CutoffVector> cutoffs;
  std::string note;  // failure explanation when absent
};

CutoffSearch find_compatible_cutoffs(const Instance& inst, ConditionMode mode);

struct OrderSearch {
  std::optional<std::vector<int>> permutation;  // new position -> original index
  std::optional<Instance> reordered;
};

/// Exhaustive permutation search (n <= 8) for an order admitting compatible
/// cutoffs in the given mode.
OrderSearch search_type_orders(const Instance& inst, ConditionMode mode);

Instance apply_type_order(const Instance& inst, const std::vector<int>& perm);

/// Summary of every sufficient-condition verdict for one instance.
struct ConditionReport {
  CheckResult weakly_monotone;  // some per-item cutoff works
  CheckResult regular;
  CheckResult compatibly_wm_regular;
  CheckResult monotone_mrs;
  CheckResult mostly_regular;  // some nondecreasing argmax selection works
  CheckResult compatibly_wm_mostly_regular;
  std::optional<CutoffVector> cutoffs;
  std::optional<ConditionMode> route;
};

ConditionReport analyze_conditions(const Instance& inst);

}  // namespace upl
