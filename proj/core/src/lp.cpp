#include "semigame/lp.hpp"

#include <stdexcept>
#include <utility>

#include "semigame/errors.hpp"

namespace semigame::lp {

int Problem::add_variable(const Rational& obj, bool is_free) {
  objective.push_back(obj);
  free_var.push_back(is_free);
  return num_vars++;
}

void Problem::add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars) {
    throw BadParamError("lp row has " + std::to_string(coeffs.size()) +
                        " coefficients for " + std::to_string(num_vars) + " variables");
  }
  row_coeffs.push_back(std::move(coeffs));
  row_rel.push_back(rel);
  row_rhs.push_back(std::move(rhs));
}

namespace {

constexpr long kMaxPivots = 2'000'000;

// Column layout of the standard-form tableau:
//   for each original var j: one column (plus a paired negative column if free),
//   then one slack column per inequality row, then artificial columns last.
struct Standardized {
  int n_main = 0;                       // var + slack columns
  std::vector<int> pos_col, neg_col;    // original var -> columns (-1 if none)
  std::vector<int> slack_col;           // per row, -1 for eq rows
  std::vector<bool> flipped;            // row was negated to make rhs >= 0
  std::vector<std::vector<Rational>> t; // m rows, each n_cols + 1 (last = rhs)
  std::vector<int> basis;               // per row: basic column
  std::vector<int> art_col;             // per row: artificial column or -1
  int n_cols = 0;
};

class Tableau {
 public:
  Standardized s;
  std::vector<Rational> red;  // reduced costs, size n_cols + 1; red[n_cols] = -value
  int width = 0;              // columns eligible to enter (excludes artificials in phase 2)

  Rational value() const { return -red[s.n_cols]; }

  void set_objective(const std::vector<Rational>& c) {
    red.assign(s.n_cols + 1, Rational(0));
    for (int j = 0; j < static_cast<int>(c.size()); ++j) red[j] = c[j];
    for (std::size_t i = 0; i < s.t.size(); ++i) {
      const Rational& cb = red[s.basis[i]];
      if (cb == 0) continue;
      Rational f = cb;
      for (int j = 0; j <= s.n_cols; ++j) red[j] -= f * s.t[i][j];
    }
  }

  void pivot(int row, int col) {
    auto& tr = s.t[row];
    Rational inv = tr[col];
    for (int j = 0; j <= s.n_cols; ++j) tr[j] /= inv;
    for (std::size_t i = 0; i < s.t.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      Rational f = s.t[i][col];
      if (f == 0) continue;
      for (int j = 0; j <= s.n_cols; ++j) s.t[i][j] -= f * tr[j];
    }
    Rational f = red[col];
    if (f != 0) {
      for (int j = 0; j <= s.n_cols; ++j) red[j] -= f * tr[j];
    }
    s.basis[row] = col;
  }

  // Returns optimal=true, or false when unbounded.
  bool run() {
    for (long iter = 0; iter < kMaxPivots; ++iter) {
      int enter = -1;
      for (int j = 0; j < width; ++j) {
        if (red[j] > 0) { enter = j; break; }  // Bland: smallest index
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (std::size_t i = 0; i < s.t.size(); ++i) {
        const Rational& a = s.t[i][enter];
        if (a <= 0) continue;
        Rational ratio = s.t[i][s.n_cols] / a;
        if (leave < 0 || ratio < best ||
            (ratio == best && s.basis[i] < s.basis[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    throw Error("simplex exceeded pivot limit");  // unreachable with Bland's rule
  }
};

Standardized standardize(const Problem& p) {
  Standardized s;
  s.pos_col.assign(p.num_vars, -1);
  s.neg_col.assign(p.num_vars, -1);
  int col = 0;
  for (int j = 0; j < p.num_vars; ++j) {
    s.pos_col[j] = col++;
    if (p.free_var[j]) s.neg_col[j] = col++;
  }
  const int m = static_cast<int>(p.row_coeffs.size());
  s.slack_col.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    if (p.row_rel[i] != Relation::eq) s.slack_col[i] = col++;
  }
  s.n_main = col;
  s.flipped.assign(m, false);
  s.basis.assign(m, -1);
  s.art_col.assign(m, -1);

  // First pass: which rows need an artificial?  A row can start with its slack
  // basic iff the slack coefficient is +1 after sign normalization.
  int n_art = 0;
  for (int i = 0; i < m; ++i) {
    bool flip = p.row_rhs[i] < 0;
    s.flipped[i] = flip;
    Rational slack_coeff(0);
    if (p.row_rel[i] == Relation::le) slack_coeff = 1;
    if (p.row_rel[i] == Relation::ge) slack_coeff = -1;
    if (flip) slack_coeff = -slack_coeff;
    if (!(p.row_rel[i] != Relation::eq && slack_coeff == 1)) {
      s.art_col[i] = s.n_main + n_art++;
    }
  }
  s.n_cols = s.n_main + n_art;

  s.t.assign(m, std::vector<Rational>(s.n_cols + 1, Rational(0)));
  for (int i = 0; i < m; ++i) {
    auto& row = s.t[i];
    Rational sign(s.flipped[i] ? -1 : 1);
    for (int j = 0; j < p.num_vars; ++j) {
      const Rational& a = p.row_coeffs[i][j];
      if (a == 0) continue;
      row[s.pos_col[j]] = sign * a;
      if (s.neg_col[j] >= 0) row[s.neg_col[j]] = -sign * a;
    }
    if (s.slack_col[i] >= 0) {
      Rational sc(p.row_rel[i] == Relation::le ? 1 : -1);
      row[s.slack_col[i]] = sign * sc;
    }
    row[s.n_cols] = sign * p.row_rhs[i];
    if (s.art_col[i] >= 0) {
      row[s.art_col[i]] = 1;
      s.basis[i] = s.art_col[i];
    } else {
      s.basis[i] = s.slack_col[i];
    }
  }
  return s;
}

std::vector<Rational> extract_farkas(const Problem& p, const Tableau& tab) {
  // For the unit column u_i that started row i, y_i = c_{u_i} - red_{u_i}
  // gives the phase-1 dual; negate and undo row flips to certify the
  // original system.
  const int m = static_cast<int>(p.row_coeffs.size());
  std::vector<Rational> y(m);
  for (int i = 0; i < m; ++i) {
    int u = tab.s.art_col[i] >= 0 ? tab.s.art_col[i] : tab.s.slack_col[i];
    Rational c_u(tab.s.art_col[i] >= 0 ? -1 : 0);
    Rational yi = c_u - tab.red[u];
    y[i] = tab.s.flipped[i] ? yi : -yi;
  }
  return y;
}

}  // namespace

bool verify_farkas(const Problem& p, const std::vector<Rational>& y) {
  const int m = static_cast<int>(p.row_coeffs.size());
  if (static_cast<int>(y.size()) != m) return false;
  for (int i = 0; i < m; ++i) {
    if (p.row_rel[i] == Relation::ge && y[i] < 0) return false;
    if (p.row_rel[i] == Relation::le && y[i] > 0) return false;
  }
  Rational rhs(0);
  for (int i = 0; i < m; ++i) rhs += y[i] * p.row_rhs[i];
  if (!(rhs > 0)) return false;
  for (int j = 0; j < p.num_vars; ++j) {
    Rational zj(0);
    for (int i = 0; i < m; ++i) zj += y[i] * p.row_coeffs[i][j];
    if (p.free_var[j] ? zj != 0 : zj > 0) return false;
  }
  return true;
}

Solution solve(const Problem& p) {
  if (p.num_vars <= 0) throw BadParamError("lp problem has no variables");

  Tableau tab;
  tab.s = standardize(p);
  tab.width = tab.s.n_cols;
  const int m = static_cast<int>(p.row_coeffs.size());

  bool has_art = false;
  for (int i = 0; i < m; ++i) has_art |= tab.s.art_col[i] >= 0;

  if (has_art) {
    std::vector<Rational> c(tab.s.n_cols, Rational(0));
    for (int i = 0; i < m; ++i) {
      if (tab.s.art_col[i] >= 0) c[tab.s.art_col[i]] = -1;
    }
    tab.set_objective(c);
    if (!tab.run()) throw Error("phase-1 simplex reported unbounded");
    if (tab.value() < 0) {
      Solution sol;
      sol.status = Status::infeasible;
      sol.farkas = extract_farkas(p, tab);
      if (!verify_farkas(p, sol.farkas)) {
        throw Error("internal error: infeasibility certificate failed verification");
      }
      return sol;
    }
    // Drive artificials out of the basis; rhs is 0 there so any nonzero
    // pivot in a main column keeps the point feasible.  A row with no such
    // column is redundant and dropped.
    for (int i = static_cast<int>(tab.s.t.size()) - 1; i >= 0; --i) {
      if (tab.s.basis[i] < tab.s.n_main) continue;
      int piv = -1;
      for (int j = 0; j < tab.s.n_main; ++j) {
        if (tab.s.t[i][j] != 0) { piv = j; break; }
      }
      if (piv >= 0) {
        tab.pivot(i, piv);
      } else {
        tab.s.t.erase(tab.s.t.begin() + i);
        tab.s.basis.erase(tab.s.basis.begin() + i);
      }
    }
    tab.width = tab.s.n_main;  // artificials may never re-enter
  }

  std::vector<Rational> c(tab.s.n_cols, Rational(0));
  for (int j = 0; j < p.num_vars; ++j) {
    c[tab.s.pos_col[j]] = p.objective[j];
    if (tab.s.neg_col[j] >= 0) c[tab.s.neg_col[j]] = -p.objective[j];
  }
  tab.set_objective(c);
  if (!tab.run()) {
    Solution sol;
    sol.status = Status::unbounded;
    return sol;
  }

  Solution sol;
  sol.status = Status::optimal;
  sol.objective = tab.value();
  std::vector<Rational> std_x(tab.s.n_cols, Rational(0));
  for (std::size_t i = 0; i < tab.s.t.size(); ++i) {
    std_x[tab.s.basis[i]] = tab.s.t[i][tab.s.n_cols];
  }
  sol.x.assign(p.num_vars, Rational(0));
  for (int j = 0; j < p.num_vars; ++j) {
    sol.x[j] = std_x[tab.s.pos_col[j]];
    if (tab.s.neg_col[j] >= 0) sol.x[j] -= std_x[tab.s.neg_col[j]];
  }
  return sol;
}

}  // namespace semigame::lp
