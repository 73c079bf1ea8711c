#pragma once

#include <optional>
#include <vector>

#include "upl/rational.hpp"

namespace upl {

struct NegativeValueError : Error {
  using Error::Error;
};
struct BadDistributionError : Error {
  using Error::Error;
};
struct ShapeMismatchError : Error {
  using Error::Error;
};
struct NotChainOrderedError : Error {
  using Error::Error;
};
struct InconsistentPricingError : Error {
  using Error::Error;
};

/// Deviation target denoting the outside option (q0, t0) = (0, 0).
inline constexpr int kOutsideOption = -1;

/// A screening instance: n buyer types over d goods with full-support
/// distribution f. Types and goods are 0-based throughout the API; file
/// formats use 1-based indices.
struct Instance {
  int n = 0;
  int d = 0;
  RatMat theta;  // n x d marginal values, all >= 0
  RatVec f;      // n probabilities, all > 0, sum exactly 1
  RatVec F;      // cumulative sums; F[n-1] == 1

  /// 1 - F_{i-1}: mass of types i and above.
  Rat survival_before(int i) const { return i == 0 ? Rat(1) : Rat(1) - F[i - 1]; }
};

Instance validate_instance(int n, int d, RatMat theta, RatVec f);

/// A direct mechanism. The outside option (0, 0) is implicit.
struct Mechanism {
  RatMat q;  // n x d, entries in [0,1]
  RatVec t;  // n transfers (may be negative)
};

void validate_mechanism(const Instance& inst, const Mechanism& m);

/// Indirect representation of a chain-ordered mechanism: nested bundles with
/// strictly increasing prices. bundles[0] is always the zero bundle at price 0.
struct UpgradeMenu {
  RatMat bundles;
  RatVec prices;
  std::vector<int> assignment;  // type -> bundle index
};

Rat utility(const Instance& inst, int i, const RatVec& q_row, const Rat& t);
Rat revenue(const Instance& inst, const Mechanism& m);

/// IC slack of type j against deviation target i (kOutsideOption for IR):
/// s_{ji} = (<q_j, theta_j> - t_j) - (<q_i, theta_j> - t_i).
Rat ic_slack(const Instance& inst, const Mechanism& m, int j, int i);

struct IcIrViolation {
  int type;    // deviating type j
  int target;  // deviation target i, kOutsideOption for IR
  Rat slack;   // negative
};

/// All ordered pairs with negative slack; empty means IC and IR hold.
std::vector<IcIrViolation> ic_ir_violations(const Instance& inst, const Mechanism& m);

/// Witness permutation sorting the rows of q into a component-wise ascending
/// chain, or nullopt if two rows are incomparable. The implicit zero row is
/// below every allocation, so it never obstructs the order.
std::optional<std::vector<int>> chain_order(const RatMat& q);

bool is_upgrade_menu(const Mechanism& m);

UpgradeMenu mechanism_to_menu(const Instance& inst, const Mechanism& m);

/// Expands a menu back to a direct mechanism via its assignment.
Mechanism menu_to_mechanism(const Instance& inst, const UpgradeMenu& menu);

}  // namespace upl
