#include "upl/lp.hpp"

#include <algorithm>
#include <sstream>

namespace upl {

int LinearProgram::add_var(std::string label, std::optional<Rat> lo, std::optional<Rat> hi,
                           Rat obj) {
  objective.push_back(std::move(obj));
  lower.push_back(std::move(lo));
  upper.push_back(std::move(hi));
  var_labels.push_back(std::move(label));
  return num_vars() - 1;
}

void LinearProgram::add_row(RatVec coeffs, Rel rel, Rat rhs, std::string label) {
  rows.push_back({std::move(coeffs), rel, std::move(rhs), std::move(label)});
}

namespace {

// Standard-form program: maximize c.y subject to A.y <= b, y >= 0, together
// with the affine map back to the original variables.
struct StandardForm {
  RatMat a;
  RatVec b;
  RatVec c;
  // x_j = offset[j] + sign[j] * y_{pos[j]} (- y_{neg[j]} when neg[j] >= 0).
  RatVec offset;
  std::vector<int> sign;
  std::vector<int> pos;
  std::vector<int> neg;
  int ny = 0;
};

StandardForm to_standard_form(const LinearProgram& lp) {
  const int nx = lp.num_vars();
  StandardForm sf;
  sf.offset.assign(nx, Rat(0));
  sf.sign.assign(nx, 1);
  sf.pos.assign(nx, -1);
  sf.neg.assign(nx, -1);

  std::vector<std::pair<int, Rat>> bound_rows;  // (y index, ub) from two-sided bounds
  for (int j = 0; j < nx; ++j) {
    if (lp.lower[j]) {
      sf.pos[j] = sf.ny++;
      sf.offset[j] = *lp.lower[j];
      sf.sign[j] = 1;
      if (lp.upper[j]) bound_rows.emplace_back(sf.pos[j], *lp.upper[j] - *lp.lower[j]);
    } else if (lp.upper[j]) {
      sf.pos[j] = sf.ny++;
      sf.offset[j] = *lp.upper[j];
      sf.sign[j] = -1;
    } else {
      sf.pos[j] = sf.ny++;
      sf.neg[j] = sf.ny++;
    }
  }

  sf.c.assign(sf.ny, Rat(0));
  for (int j = 0; j < nx; ++j) {
    sf.c[sf.pos[j]] += Rat(sf.sign[j]) * lp.objective[j];
    if (sf.neg[j] >= 0) sf.c[sf.neg[j]] -= lp.objective[j];
  }

  auto push_le = [&](const RatVec& coeffs, const Rat& rhs) {
    RatVec row(sf.ny, Rat(0));
    Rat shift = rhs;
    for (int j = 0; j < nx; ++j) {
      if (coeffs[j] == 0) continue;
      shift -= coeffs[j] * sf.offset[j];
      row[sf.pos[j]] += Rat(sf.sign[j]) * coeffs[j];
      if (sf.neg[j] >= 0) row[sf.neg[j]] -= coeffs[j];
    }
    sf.a.push_back(std::move(row));
    sf.b.push_back(std::move(shift));
  };

  for (const LpRow& r : lp.rows) {
    if (r.rel == Rel::le || r.rel == Rel::eq) push_le(r.coeffs, r.rhs);
    if (r.rel == Rel::ge || r.rel == Rel::eq) {
      RatVec negated(nx);
      for (int j = 0; j < nx; ++j) negated[j] = -r.coeffs[j];
      push_le(negated, -r.rhs);
    }
  }
  for (auto& [yj, ub] : bound_rows) {
    RatVec row(sf.ny, Rat(0));
    row[yj] = 1;
    sf.a.push_back(std::move(row));
    sf.b.push_back(ub);
  }
  return sf;
}

// Full-tableau simplex state over exact rationals.
struct Tableau {
  RatMat rows;          // m x (ncols + 1); last column is the rhs
  RatVec obj1;          // phase-1 reduced-cost row (artificial infeasibility)
  RatVec obj2;          // phase-2 reduced-cost row
  std::vector<int> basis;
  std::vector<bool> enabled;
  long iterations = 0;

  int ncols() const { return static_cast<int>(enabled.size()); }
  int m() const { return static_cast<int>(rows.size()); }

  void pivot(int r, int s) {
    Rat piv = rows[r][s];
    for (Rat& v : rows[r]) v /= piv;
    auto eliminate = [&](RatVec& row) {
      if (row[s] == 0) return;
      Rat factor = row[s];
      for (int j = 0; j <= ncols(); ++j) row[j] -= factor * rows[r][j];
    };
    for (int i = 0; i < m(); ++i) {
      if (i != r) eliminate(rows[i]);
    }
    eliminate(obj1);
    eliminate(obj2);
    basis[r] = s;
    ++iterations;
  }

  // Bland's rule: smallest-index entering column with negative reduced cost;
  // leaving row minimizes the ratio, ties broken by smallest basic index.
  // Returns false at optimality; throws Unbounded via the out-parameter.
  bool step(const RatVec& obj, bool* unbounded) {
    int enter = -1;
    for (int j = 0; j < ncols(); ++j) {
      if (enabled[j] && obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return false;
    int leave = -1;
    Rat best_ratio;
    for (int i = 0; i < m(); ++i) {
      if (rows[i][enter] <= 0) continue;
      Rat ratio = rows[i][ncols()] / rows[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      *unbounded = true;
      return false;
    }
    pivot(leave, enter);
    return true;
  }
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  StandardForm sf = to_standard_form(lp);
  const int m = static_cast<int>(sf.a.size());
  const int ny = sf.ny;

  // Columns: structural | slack per row | artificial per negative-rhs row.
  std::vector<int> art_col(m, -1);
  int nart = 0;
  for (int i = 0; i < m; ++i) {
    if (sf.b[i] < 0) art_col[i] = nart++;
  }
  const int ncols = ny + m + nart;

  Tableau t;
  t.rows.assign(m, RatVec(ncols + 1, Rat(0)));
  t.basis.assign(m, -1);
  t.enabled.assign(ncols, true);
  t.obj1.assign(ncols + 1, Rat(0));
  t.obj2.assign(ncols + 1, Rat(0));

  for (int i = 0; i < m; ++i) {
    bool flip = sf.b[i] < 0;
    for (int j = 0; j < ny; ++j) t.rows[i][j] = flip ? -sf.a[i][j] : sf.a[i][j];
    t.rows[i][ny + i] = flip ? Rat(-1) : Rat(1);
    t.rows[i][ncols] = flip ? -sf.b[i] : sf.b[i];
    if (flip) {
      t.rows[i][ny + m + art_col[i]] = 1;
      t.basis[i] = ny + m + art_col[i];
    } else {
      t.basis[i] = ny + i;
    }
  }
  for (int j = 0; j < ny; ++j) t.obj2[j] = -sf.c[j];

  // Phase 1: minimize the artificial mass. The reduced-cost row accumulates
  // the artificial-basic rows so that basic columns remain at zero cost.
  if (nart > 0) {
    for (int i = 0; i < m; ++i) {
      if (art_col[i] < 0) continue;
      for (int j = 0; j <= ncols; ++j) t.obj1[j] -= t.rows[i][j];
    }
    // Artificial columns carry objective -1, so their reduced cost starts at
    // zero while they are basic.
    for (int i = 0; i < m; ++i) {
      if (art_col[i] >= 0) t.obj1[ny + m + art_col[i]] += 1;
    }
    bool unbounded = false;
    while (t.step(t.obj1, &unbounded)) {
    }
    if (unbounded) throw Error("phase-1 simplex reported unbounded");
    if (t.obj1[ncols] != 0) return {LpStatus::infeasible, Rat(0), {}, t.iterations};

    // Drive any residual artificial out of the basis; an all-zero row is a
    // redundant constraint and is dropped.
    for (int i = 0; i < t.m();) {
      if (t.basis[i] < ny + m) {
        ++i;
        continue;
      }
      int s = -1;
      for (int j = 0; j < ny + m; ++j) {
        if (t.enabled[j] && t.rows[i][j] != 0) {
          s = j;
          break;
        }
      }
      if (s >= 0) {
        t.pivot(i, s);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + i);
        t.basis.erase(t.basis.begin() + i);
      }
    }
    for (int j = ny + m; j < ncols; ++j) t.enabled[j] = false;
  }

  bool unbounded = false;
  while (t.step(t.obj2, &unbounded)) {
  }
  if (unbounded) return {LpStatus::unbounded, Rat(0), {}, t.iterations};

  RatVec y(ny, Rat(0));
  for (int i = 0; i < t.m(); ++i) {
    if (t.basis[i] < ny) y[t.basis[i]] = t.rows[i][ncols];
  }

  LpSolution sol;
  sol.status = LpStatus::optimal;
  sol.iterations = t.iterations;
  sol.x.resize(lp.num_vars());
  for (int j = 0; j < lp.num_vars(); ++j) {
    sol.x[j] = sf.offset[j] + Rat(sf.sign[j]) * y[sf.pos[j]];
    if (sf.neg[j] >= 0) sol.x[j] -= y[sf.neg[j]];
  }
  sol.value = dot(lp.objective, sol.x);

  // Exactness check: the returned point satisfies every constraint with zero
  // residual tolerance.
  for (int j = 0; j < lp.num_vars(); ++j) {
    if (lp.lower[j] && sol.x[j] < *lp.lower[j]) throw Error("lp: lower bound violated");
    if (lp.upper[j] && sol.x[j] > *lp.upper[j]) throw Error("lp: upper bound violated");
  }
  for (const LpRow& r : lp.rows) {
    Rat lhs = dot(r.coeffs, sol.x);
    bool ok = r.rel == Rel::le ? lhs <= r.rhs : r.rel == Rel::ge ? lhs >= r.rhs : lhs == r.rhs;
    if (!ok) throw Error("lp: row '" + r.label + "' violated by returned solution");
  }
  return sol;
}

LinearProgram build_revenue_lp(const Instance& inst) {
  LinearProgram lp;
  const int n = inst.n, d = inst.d;
  auto qvar = [&](int i, int k) { return i * d + k; };
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) {
      lp.add_var("q[" + std::to_string(i + 1) + "][" + std::to_string(k + 1) + "]", Rat(0), Rat(1),
                 Rat(0));
    }
  }
  std::vector<int> tvar(n);
  for (int i = 0; i < n; ++i) {
    tvar[i] = lp.add_var("t[" + std::to_string(i + 1) + "]", std::nullopt, std::nullopt, inst.f[i]);
  }
  const int nv = lp.num_vars();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      RatVec row(nv, Rat(0));
      for (int k = 0; k < d; ++k) {
        row[qvar(j, k)] += inst.theta[j][k];
        row[qvar(i, k)] -= inst.theta[j][k];
      }
      row[tvar[j]] = -1;
      row[tvar[i]] += 1;
      lp.add_row(std::move(row), Rel::ge, Rat(0),
                 "IC(" + std::to_string(j + 1) + "->" + std::to_string(i + 1) + ")");
    }
  }
  for (int j = 0; j < n; ++j) {
    RatVec row(nv, Rat(0));
    for (int k = 0; k < d; ++k) row[qvar(j, k)] = inst.theta[j][k];
    row[tvar[j]] = -1;
    lp.add_row(std::move(row), Rel::ge, Rat(0), "IR(" + std::to_string(j + 1) + ")");
  }
  return lp;
}

LinearProgram build_transfer_lp(const Instance& inst, const RatMat& q) {
  LinearProgram lp;
  const int n = inst.n;
  for (int i = 0; i < n; ++i) {
    lp.add_var("t[" + std::to_string(i + 1) + "]", std::nullopt, std::nullopt, inst.f[i]);
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      RatVec row(n, Rat(0));
      row[j] = -1;
      row[i] = 1;
      Rat gain = dot(q[j], inst.theta[j]) - dot(q[i], inst.theta[j]);
      lp.add_row(std::move(row), Rel::ge, -gain,
                 "IC(" + std::to_string(j + 1) + "->" + std::to_string(i + 1) + ")");
    }
  }
  for (int j = 0; j < n; ++j) {
    RatVec row(n, Rat(0));
    row[j] = -1;
    lp.add_row(std::move(row), Rel::ge, -dot(q[j], inst.theta[j]),
               "IR(" + std::to_string(j + 1) + ")");
  }
  return lp;
}

std::string lp_to_text(const LinearProgram& lp) {
  std::ostringstream os;
  os << "maximize";
  for (int j = 0; j < lp.num_vars(); ++j) {
    if (lp.objective[j] == 0) continue;
    os << " + (" << rat_str(lp.objective[j]) << ")*" << lp.var_labels[j];
  }
  os << "\nsubject to\n";
  for (const LpRow& r : lp.rows) {
    os << "  " << r.label << ":";
    for (int j = 0; j < lp.num_vars(); ++j) {
      if (r.coeffs[j] == 0) continue;
      os << " + (" << rat_str(r.coeffs[j]) << ")*" << lp.var_labels[j];
    }
    os << (r.rel == Rel::le ? " <= " : r.rel == Rel::ge ? " >= " : " == ") << rat_str(r.rhs)
       << "\n";
  }
  os << "bounds\n";
  for (int j = 0; j < lp.num_vars(); ++j) {
    os << "  " << (lp.lower[j] ? rat_str(*lp.lower[j]) : std::string("-inf")) << " <= "
       << lp.var_labels[j] << " <= " << (lp.upper[j] ? rat_str(*lp.upper[j]) : std::string("inf"))
       << "\n";
  }
  return os.str();
}

}  // namespace upl
