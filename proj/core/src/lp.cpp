// Copyright 2026 The satlcp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "satlcp/lp.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "satlcp/errors.hpp"

namespace satlcp {

LpInstance build_lp(const LcpInstance& inst,
                    const MangasarianCertificate& cert) {
  const int dim = inst.dimension();
  if (static_cast<int>(cert.s.size()) != dim) {
    throw DimensionMismatch("certificate s has wrong length");
  }
  LpInstance lp;
  lp.A = to_rational(inst.M);
  lp.b.reserve(dim);
  for (long long qi : inst.q) lp.b.push_back(rat(-qi));
  lp.cost.reserve(dim);
  for (int j = 0; j < dim; ++j) {
    long long cj = 0;
    for (int i = 0; i < dim; ++i) cj += cert.s[i] * inst.M(i, j);
    lp.cost.push_back(rat(cj));
  }
  return lp;
}

namespace {

// Full exact tableau over columns [structurals | slacks | artificials | rhs].
// Rows with a positive right-hand side keep their orientation and get an
// artificial basic variable; the rest are negated so their slack can start
// basic with a nonnegative right-hand side. Row scaling never leaks into the
// reported certificates: the duals are read off the slack columns' reduced
// costs, which are multipliers for the *original* rows.
class Tableau {
 public:
  Tableau(const LpInstance& lp)
      : nrows_(lp.A.rows()), nu_(lp.A.cols()) {
    art_col_.assign(nrows_, -1);
    for (int i = 0; i < nrows_; ++i) {
      if (sgn(lp.b[i]) > 0) art_col_[i] = nu_ + nrows_ + nart_++;
    }
    const int width = ncols() + 1;
    row_.assign(nrows_, std::vector<Rational>(width, Rational(0)));
    basis_.assign(nrows_, -1);
    for (int i = 0; i < nrows_; ++i) {
      const bool keep = art_col_[i] >= 0;
      const Rational sign(keep ? 1 : -1);
      for (int j = 0; j < nu_; ++j) {
        if (sgn(lp.A(i, j)) != 0) row_[i][j] = sign * lp.A(i, j);
      }
      row_[i][nu_ + i] = -sign;
      row_[i][ncols()] = sign * lp.b[i];
      if (keep) {
        row_[i][art_col_[i]] = 1;
        basis_[i] = art_col_[i];
      } else {
        basis_[i] = nu_ + i;
      }
    }
    red_.assign(ncols(), Rational(0));
  }

  int ncols() const { return nu_ + nrows_ + nart_; }
  int nart() const { return nart_; }
  const Rational& rhs(int i) const { return row_[i][ncols()]; }
  const Rational& entry(int i, int j) const { return row_[i][j]; }
  const Rational& reduced_cost(int j) const { return red_[j]; }
  int basis(int i) const { return basis_[i]; }
  bool is_artificial(int j) const { return j >= nu_ + nrows_; }

  // red_j = c_j - sum_i c_basis[i] * row[i][j] for the given column costs.
  void load_reduced_costs(const std::vector<Rational>& col_cost) {
    for (int j = 0; j < ncols(); ++j) red_[j] = col_cost[j];
    for (int i = 0; i < nrows_; ++i) {
      const Rational& cb = col_cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j < ncols(); ++j) {
        if (sgn(row_[i][j]) != 0) red_[j] -= cb * row_[i][j];
      }
    }
  }

  void pivot(int r, int jcol) {
    const Rational p = row_[r][jcol];
    const int width = ncols() + 1;
    for (int c = 0; c < width; ++c) {
      if (sgn(row_[r][c]) != 0) row_[r][c] /= p;
    }
    for (int i = 0; i < nrows_; ++i) {
      if (i == r) continue;
      const Rational f = row_[i][jcol];
      if (sgn(f) == 0) continue;
      for (int c = 0; c < width; ++c) {
        if (sgn(row_[r][c]) != 0) row_[i][c] -= f * row_[r][c];
      }
    }
    const Rational f = red_[jcol];
    if (sgn(f) != 0) {
      for (int c = 0; c < ncols(); ++c) {
        if (sgn(row_[r][c]) != 0) red_[c] -= f * row_[r][c];
      }
    }
    basis_[r] = jcol;
  }

  // Bland's rule: lowest eligible column enters; among minimum-ratio rows
  // the lowest basic variable index leaves. Returns false on an unbounded
  // direction, leaving the entering column in *entering.
  bool run(bool allow_artificial_entering, int* entering) {
    long long guard = 0;
    for (;;) {
      if (++guard > kMaxPivots) {
        throw InternalError("simplex exceeded the pivot guard");
      }
      int enter = -1;
      for (int j = 0; j < ncols(); ++j) {
        if (!allow_artificial_entering && is_artificial(j)) continue;
        if (sgn(red_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < nrows_; ++i) {
        if (sgn(row_[i][enter]) <= 0) continue;
        const Rational ratio = rhs(i) / row_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) {
        *entering = enter;
        return false;
      }
      pivot(leave, enter);
    }
  }

  // Replaces every basic artificial that has a nonzero entry in a real
  // column; rows without one are redundant and stay inert (their entries in
  // real columns are and remain zero, so later pivots never move them).
  void drive_out_artificials() {
    for (int i = 0; i < nrows_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (int j = 0; j < nu_ + nrows_; ++j) {
        if (sgn(row_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

 private:
  static constexpr long long kMaxPivots = 5'000'000;

  int nrows_, nu_;
  int nart_ = 0;
  std::vector<int> art_col_;
  std::vector<std::vector<Rational>> row_;
  std::vector<Rational> red_;
  std::vector<int> basis_;
};

}  // namespace

LpOutcome solve_simplex(const LpInstance& lp) {
  const int nr = lp.A.rows(), nu = lp.A.cols();
  if (static_cast<int>(lp.b.size()) != nr ||
      static_cast<int>(lp.cost.size()) != nu) {
    throw DimensionMismatch("instance shapes disagree");
  }

  Tableau tab(lp);

  if (tab.nart() > 0) {
    std::vector<Rational> phase1(tab.ncols(), Rational(0));
    for (int j = nu + nr; j < tab.ncols(); ++j) phase1[j] = 1;
    tab.load_reduced_costs(phase1);
    int entering = -1;
    if (!tab.run(/*allow_artificial_entering=*/true, &entering)) {
      // The phase-1 objective is bounded below by zero.
      throw InternalError("phase 1 reported unbounded");
    }
    Rational infeasibility(0);
    for (int i = 0; i < nr; ++i) {
      if (tab.is_artificial(tab.basis(i))) infeasibility += tab.rhs(i);
    }
    if (sgn(infeasibility) > 0) {
      LpInfeasible out;
      out.y.reserve(nr);
      for (int i = 0; i < nr; ++i) out.y.push_back(tab.reduced_cost(nu + i));
      return out;
    }
    tab.drive_out_artificials();
  }

  std::vector<Rational> phase2(tab.ncols(), Rational(0));
  for (int j = 0; j < nu; ++j) phase2[j] = lp.cost[j];
  tab.load_reduced_costs(phase2);
  int entering = -1;
  if (!tab.run(/*allow_artificial_entering=*/false, &entering)) {
    // Moving along the entering column never hits a bound (no positive
    // entry), so each basic variable changes at rate -entry(i, entering) >= 0
    // while the entering variable grows at rate 1.
    LpUnbounded out;
    out.ray.assign(nu, Rational(0));
    if (entering < nu) out.ray[entering] = 1;
    for (int i = 0; i < nr; ++i) {
      if (tab.basis(i) < nu) out.ray[tab.basis(i)] = -tab.entry(i, entering);
    }
    return out;
  }

  LpOptimal out;
  out.u.assign(nu, Rational(0));
  for (int i = 0; i < nr; ++i) {
    if (tab.basis(i) < nu) out.u[tab.basis(i)] = tab.rhs(i);
  }
  Rational value(0);
  for (int j = 0; j < nu; ++j) {
    if (sgn(out.u[j]) != 0) value += lp.cost[j] * out.u[j];
  }
  out.value = value;
  out.dual.reserve(nr);
  for (int i = 0; i < nr; ++i) out.dual.push_back(tab.reduced_cost(nu + i));
  for (int i = 0; i < nr; ++i) {
    if (tab.basis(i) < nu + nr) out.basis.push_back(tab.basis(i));
  }
  std::sort(out.basis.begin(), out.basis.end());
  return out;
}

namespace {

std::vector<Rational> residuals(const RationalMatrix& a,
                                const std::vector<Rational>& u,
                                const std::vector<Rational>& b) {
  std::vector<Rational> out(a.rows(), Rational(0));
  for (int i = 0; i < a.rows(); ++i) {
    Rational acc(0);
    for (int j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) != 0) acc += a(i, j) * u[j];
    }
    out[i] = acc - b[i];
  }
  return out;
}

bool check_optimal(const LpInstance& lp, const LpOptimal& opt) {
  const int nr = lp.A.rows(), nu = lp.A.cols();
  if (static_cast<int>(opt.u.size()) != nu ||
      static_cast<int>(opt.dual.size()) != nr) {
    throw DimensionMismatch("outcome shapes disagree with the instance");
  }
  for (const Rational& x : opt.u) {
    if (sgn(x) < 0) return false;
  }
  const std::vector<Rational> slack = residuals(lp.A, opt.u, lp.b);
  for (const Rational& s : slack) {
    if (sgn(s) < 0) return false;
  }
  Rational value(0);
  for (int j = 0; j < nu; ++j) {
    if (sgn(opt.u[j]) != 0) value += lp.cost[j] * opt.u[j];
  }
  if (value != opt.value) return false;
  for (const Rational& y : opt.dual) {
    if (sgn(y) < 0) return false;
  }
  // Dual feasibility and the two complementary slackness families; together
  // with primal feasibility these force optimality.
  for (int j = 0; j < nu; ++j) {
    Rational reduced = lp.cost[j];
    for (int i = 0; i < nr; ++i) {
      if (sgn(opt.dual[i]) != 0) reduced -= opt.dual[i] * lp.A(i, j);
    }
    if (sgn(reduced) < 0) return false;
    if (sgn(reduced) != 0 && sgn(opt.u[j]) != 0) return false;
  }
  for (int i = 0; i < nr; ++i) {
    if (sgn(opt.dual[i]) != 0 && sgn(slack[i]) != 0) return false;
  }
  return true;
}

bool check_infeasible(const LpInstance& lp, const LpInfeasible& inf) {
  const int nr = lp.A.rows(), nu = lp.A.cols();
  if (static_cast<int>(inf.y.size()) != nr) {
    throw DimensionMismatch("outcome shapes disagree with the instance");
  }
  Rational yb(0);
  for (int i = 0; i < nr; ++i) {
    if (sgn(inf.y[i]) < 0) return false;
    if (sgn(inf.y[i]) != 0) yb += inf.y[i] * lp.b[i];
  }
  if (sgn(yb) <= 0) return false;
  for (int j = 0; j < nu; ++j) {
    Rational ya(0);
    for (int i = 0; i < nr; ++i) {
      if (sgn(inf.y[i]) != 0) ya += inf.y[i] * lp.A(i, j);
    }
    if (sgn(ya) > 0) return false;
  }
  return true;
}

bool check_unbounded(const LpInstance& lp, const LpUnbounded& unb) {
  const int nr = lp.A.rows(), nu = lp.A.cols();
  if (static_cast<int>(unb.ray.size()) != nu) {
    throw DimensionMismatch("outcome shapes disagree with the instance");
  }
  Rational drop(0);
  for (int j = 0; j < nu; ++j) {
    if (sgn(unb.ray[j]) < 0) return false;
    if (sgn(unb.ray[j]) != 0) drop += lp.cost[j] * unb.ray[j];
  }
  if (sgn(drop) >= 0) return false;
  for (int i = 0; i < nr; ++i) {
    Rational rate(0);
    for (int j = 0; j < nu; ++j) {
      if (sgn(unb.ray[j]) != 0) rate += lp.A(i, j) * unb.ray[j];
    }
    if (sgn(rate) < 0) return false;
  }
  return true;
}

}  // namespace

bool check_outcome(const LpInstance& lp, const LpOutcome& outcome) {
  if (const auto* opt = std::get_if<LpOptimal>(&outcome)) {
    return check_optimal(lp, *opt);
  }
  if (const auto* inf = std::get_if<LpInfeasible>(&outcome)) {
    return check_infeasible(lp, *inf);
  }
  return check_unbounded(lp, std::get<LpUnbounded>(outcome));
}

}  // namespace satlcp
