#include "upl/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace upl {

namespace {

// -1, 0, +1 comparison of two allocation rows in the component-wise order;
// nullopt when incomparable.
std::optional<int> compare_rows(const RatVec& a, const RatVec& b) {
  bool le = true, ge = true;
  for (size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) ge = false;
    if (a[k] > b[k]) le = false;
  }
  if (le && ge) return 0;
  if (le) return -1;
  if (ge) return 1;
  return std::nullopt;
}

}  // namespace

Instance validate_instance(int n, int d, RatMat theta, RatVec f) {
  if (n < 1 || d < 1) throw ShapeMismatchError("need n >= 1 and d >= 1");
  if (static_cast<int>(theta.size()) != n) {
    throw ShapeMismatchError("theta has " + std::to_string(theta.size()) + " rows, expected " +
                             std::to_string(n));
  }
  for (const auto& row : theta) {
    if (static_cast<int>(row.size()) != d) {
      throw ShapeMismatchError("theta row has " + std::to_string(row.size()) +
                               " entries, expected " + std::to_string(d));
    }
  }
  if (static_cast<int>(f.size()) != n) {
    throw ShapeMismatchError("f has " + std::to_string(f.size()) + " entries, expected " +
                             std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) {
      if (theta[i][k] < 0) {
        throw NegativeValueError("theta[" + std::to_string(i + 1) + "][" + std::to_string(k + 1) +
                                 "] = " + rat_str(theta[i][k]) + " is negative");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (f[i] <= 0) {
      throw BadDistributionError("f[" + std::to_string(i + 1) + "] = " + rat_str(f[i]) +
                                 " is not positive");
    }
  }
  Instance inst;
  inst.n = n;
  inst.d = d;
  inst.theta = std::move(theta);
  inst.f = std::move(f);
  inst.F.resize(n);
  Rat acc = 0;
  for (int i = 0; i < n; ++i) {
    acc += inst.f[i];
    inst.F[i] = acc;
  }
  if (inst.F[n - 1] != 1) {
    throw BadDistributionError("probabilities sum to " + rat_str(inst.F[n - 1]) + ", expected 1");
  }
  return inst;
}

void validate_mechanism(const Instance& inst, const Mechanism& m) {
  if (static_cast<int>(m.q.size()) != inst.n || static_cast<int>(m.t.size()) != inst.n) {
    throw ShapeMismatchError("mechanism shape does not match instance");
  }
  for (const auto& row : m.q) {
    if (static_cast<int>(row.size()) != inst.d) {
      throw ShapeMismatchError("allocation row width does not match instance");
    }
    for (const Rat& v : row) {
      if (v < 0 || v > 1) {
        throw ShapeMismatchError("allocation entry " + rat_str(v) + " outside [0,1]");
      }
    }
  }
}

Rat utility(const Instance& inst, int i, const RatVec& q_row, const Rat& t) {
  return dot(inst.theta[i], q_row) - t;
}

Rat revenue(const Instance& inst, const Mechanism& m) {
  Rat r = 0;
  for (int i = 0; i < inst.n; ++i) r += inst.f[i] * m.t[i];
  return r;
}

Rat ic_slack(const Instance& inst, const Mechanism& m, int j, int i) {
  Rat own = dot(m.q[j], inst.theta[j]) - m.t[j];
  if (i == kOutsideOption) return own;
  return own - (dot(m.q[i], inst.theta[j]) - m.t[i]);
}

std::vector<IcIrViolation> ic_ir_violations(const Instance& inst, const Mechanism& m) {
  std::vector<IcIrViolation> out;
  for (int j = 0; j < inst.n; ++j) {
    Rat ir = ic_slack(inst, m, j, kOutsideOption);
    if (ir < 0) out.push_back({j, kOutsideOption, ir});
    for (int i = 0; i < inst.n; ++i) {
      if (i == j) continue;
      Rat s = ic_slack(inst, m, j, i);
      if (s < 0) out.push_back({j, i, s});
    }
  }
  return out;
}

std::optional<std::vector<int>> chain_order(const RatMat& q) {
  const int n = static_cast<int>(q.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  // In a chain, component-wise order agrees with coordinate-sum order, so a
  // sum sort followed by adjacent comparability checks decides exactly.
  std::vector<Rat> sums(n);
  for (int i = 0; i < n; ++i) sums[i] = rat_sum(q[i]);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (sums[a] != sums[b]) return sums[a] < sums[b];
    return q[a] < q[b];
  });
  for (int i = 0; i + 1 < n; ++i) {
    auto cmp = compare_rows(q[order[i]], q[order[i + 1]]);
    if (!cmp || *cmp > 0) return std::nullopt;
  }
  return order;
}

bool is_upgrade_menu(const Mechanism& m) { return chain_order(m.q).has_value(); }

UpgradeMenu mechanism_to_menu(const Instance& inst, const Mechanism& m) {
  auto order = chain_order(m.q);
  if (!order) throw NotChainOrderedError("allocation rows are not chain-ordered");

  UpgradeMenu menu;
  menu.bundles.push_back(RatVec(inst.d, 0));
  menu.prices.push_back(0);
  menu.assignment.assign(inst.n, -1);

  for (int idx : *order) {
    const RatVec& row = m.q[idx];
    bool is_last = row == menu.bundles.back();
    if (is_last) {
      if (m.t[idx] != menu.prices.back()) {
        throw InconsistentPricingError("equal allocations with different transfers (types carry " +
                                       rat_str(menu.prices.back()) + " and " + rat_str(m.t[idx]) +
                                       ")");
      }
    } else {
      if (m.t[idx] <= menu.prices.back()) {
        throw InconsistentPricingError("bundle prices are not strictly increasing along the chain");
      }
      menu.bundles.push_back(row);
      menu.prices.push_back(m.t[idx]);
    }
    menu.assignment[idx] = static_cast<int>(menu.bundles.size()) - 1;
  }
  return menu;
}

Mechanism menu_to_mechanism(const Instance& inst, const UpgradeMenu& menu) {
  Mechanism m;
  m.q.resize(inst.n);
  m.t.resize(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    int b = menu.assignment[i];
    m.q[i] = menu.bundles[b];
    m.t[i] = menu.prices[b];
  }
  return m;
}

}  // namespace upl
