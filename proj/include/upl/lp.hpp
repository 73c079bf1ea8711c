#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upl/model.hpp"
#include "upl/rational.hpp"

namespace upl {

enum class Rel { le, eq, ge };

struct LpRow {
  RatVec coeffs;
  Rel rel = Rel::le;
  Rat rhs;
  std::string label;
};

/// A linear program in exact rational arithmetic, maximized.
struct LinearProgram {
  RatVec objective;
  std::vector<LpRow> rows;
  std::vector<std::optional<Rat>> lower;
  std::vector<std::optional<Rat>> upper;
  std::vector<std::string> var_labels;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int add_var(std::string label, std::optional<Rat> lo, std::optional<Rat> hi, Rat obj);
  void add_row(RatVec coeffs, Rel rel, Rat rhs, std::string label);
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rat value;
  RatVec x;
  long iterations = 0;
};

/// Two-phase primal simplex with Bland's rule. Exact; statuses instead of
/// errors for infeasible/unbounded programs.
LpSolution solve_lp(const LinearProgram& lp);

/// Full revenue-maximization LP: variables q_i^k in [0,1] and free t_i,
/// objective sum f_i t_i, IC rows for all ordered type pairs plus IR rows.
LinearProgram build_revenue_lp(const Instance& inst);

/// Same constraint set with the allocation held fixed; variables t only.
LinearProgram build_transfer_lp(const Instance& inst, const RatMat& q);

/// Human-readable dump for debugging.
std::string lp_to_text(const LinearProgram& lp);

}  // namespace upl
