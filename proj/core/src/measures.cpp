#include "semigame/measures.hpp"

#include <algorithm>
#include <set>

#include "semigame/errors.hpp"

namespace semigame {

namespace {

// Incremental reduced row echelon form over the rationals.  Rows are fed one
// at a time; the reduced invariant (pivot columns cleared everywhere else) is
// maintained so solutions and null-space bases read off directly.
class Rref {
 public:
  explicit Rref(int n) : n_(n) {}

  // Returns false when the row reduces to 0 = nonzero.
  bool add(std::vector<Rational> row) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      Rational f = row[pivot_col_[k]];
      if (f == 0) continue;
      for (int j = 0; j <= n_; ++j) row[j] -= f * rows_[k][j];
    }
    int lead = -1;
    for (int j = 0; j < n_; ++j) {
      if (row[j] != 0) { lead = j; break; }
    }
    if (lead < 0) return row[n_] == 0;
    Rational inv = row[lead];
    for (int j = 0; j <= n_; ++j) row[j] /= inv;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      Rational f = rows_[k][lead];
      if (f == 0) continue;
      for (int j = 0; j <= n_; ++j) rows_[k][j] -= f * row[j];
    }
    rows_.push_back(std::move(row));
    pivot_col_.push_back(lead);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

  // rank == n only: the unique solution of the equation system.
  std::vector<Rational> unique_solution() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t k = 0; k < rows_.size(); ++k) x[pivot_col_[k]] = rows_[k][n_];
    return x;
  }

  // Solution set as x = origin + basis * t over free coordinates t.
  void parametrize(std::vector<Rational>& origin,
                   std::vector<std::vector<Rational>>& basis) const {
    std::vector<bool> is_pivot(n_, false);
    for (int pc : pivot_col_) is_pivot[pc] = true;
    origin.assign(n_, Rational(0));
    for (std::size_t k = 0; k < rows_.size(); ++k) origin[pivot_col_[k]] = rows_[k][n_];
    basis.clear();
    for (int j = 0; j < n_; ++j) {
      if (is_pivot[j]) continue;
      std::vector<Rational> v(n_, Rational(0));
      v[j] = 1;
      for (std::size_t k = 0; k < rows_.size(); ++k) v[pivot_col_[k]] = -rows_[k][j];
      basis.push_back(std::move(v));
    }
  }

 private:
  int n_;
  std::vector<std::vector<Rational>> rows_;  // width n_ + 1, rhs last
  std::vector<int> pivot_col_;
};

void append_fiber_equations(InvarianceSystem& sys, const FiniteSemigroup& s,
                            bool left) {
  const int n = s.size();
  for (int t = 0; t < n; ++t) {
    std::vector<std::vector<int>> fiber(n);
    for (int x = 0; x < n; ++x) {
      int image = left ? s.op(t, x) : s.op(x, t);
      fiber[image].push_back(x);
    }
    for (int i = 0; i < n; ++i) {
      if (fiber[i].size() == 1 && fiber[i][0] == i) continue;  // trivially 0 = 0
      std::vector<Rational> row(n, Rational(0));
      for (int x : fiber[i]) row[x] += 1;
      row[i] -= 1;
      sys.eq_coeffs.push_back(std::move(row));
      sys.eq_rhs.emplace_back(0);
    }
  }
}

// Exact solve of a square system by Gaussian elimination; nullopt if singular.
std::optional<std::vector<Rational>> solve_square(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const int d = static_cast<int>(b.size());
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r) {
      if (a[r][col] != 0) { piv = r; break; }
    }
    if (piv < 0) return std::nullopt;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    Rational inv = a[col][col];
    for (int j = col; j < d; ++j) a[col][j] /= inv;
    b[col] /= inv;
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      Rational f = a[r][col];
      if (f == 0) continue;
      for (int j = col; j < d; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

long binomial_capped(int n, int k, long cap) {
  if (k < 0 || k > n) return 0;
  long result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

void mark_empty(InvariantMeasurePolytope& poly, std::string reason,
                const lp::Problem& prob) {
  poly.status = PolytopeStatus::empty;
  poly.empty_reason = std::move(reason);
  lp::Solution sol = lp::solve(prob);
  if (sol.status != lp::Status::infeasible) {
    throw Error("internal error: elimination and LP disagree on polytope feasibility");
  }
  poly.farkas = std::move(sol.farkas);
}

}  // namespace

InvarianceSystem assemble_invariance_system(const FiniteSemigroup& s) {
  InvarianceSystem sys;
  sys.n = s.size();
  sys.eq_coeffs.emplace_back(sys.n, Rational(1));  // total mass
  sys.eq_rhs.emplace_back(1);
  append_fiber_equations(sys, s, /*left=*/true);
  append_fiber_equations(sys, s, /*left=*/false);
  return sys;
}

lp::Problem invariance_feasibility_lp(const InvarianceSystem& sys) {
  lp::Problem prob;
  for (int i = 0; i < sys.n; ++i) prob.add_variable();
  for (std::size_t r = 0; r < sys.eq_coeffs.size(); ++r) {
    prob.add_row(sys.eq_coeffs[r], lp::Relation::eq, sys.eq_rhs[r]);
  }
  return prob;
}

InvariantMeasurePolytope invariant_measures(const FiniteSemigroup& s,
                                            int max_enum_dim,
                                            long combination_cap) {
  InvariantMeasurePolytope poly;
  poly.n = s.size();
  poly.system = assemble_invariance_system(s);
  const int n = poly.n;
  lp::Problem feas = invariance_feasibility_lp(poly.system);

  Rref rref(n);
  bool consistent = true;
  for (std::size_t r = 0; r < poly.system.eq_coeffs.size() && consistent; ++r) {
    std::vector<Rational> row = poly.system.eq_coeffs[r];
    row.push_back(poly.system.eq_rhs[r]);
    consistent = rref.add(std::move(row));
  }
  if (!consistent) {
    mark_empty(poly, "invariance equations are inconsistent", feas);
    return poly;
  }

  const int rank = rref.rank();
  poly.dim = n - rank;

  if (rank == n) {
    std::vector<Rational> m = rref.unique_solution();
    bool nonneg = std::all_of(m.begin(), m.end(),
                              [](const Rational& q) { return q >= 0; });
    if (!nonneg) {
      mark_empty(poly, "the unique solution of the invariance equations has a negative coordinate", feas);
      return poly;
    }
    poly.status = PolytopeStatus::nonempty;
    poly.unique = true;
    poly.complete = true;
    poly.extreme_points.emplace_back(std::move(m));
    return poly;
  }

  lp::Solution sol = lp::solve(feas);
  if (sol.status == lp::Status::infeasible) {
    poly.status = PolytopeStatus::empty;
    poly.empty_reason = "invariance equations admit no nonnegative solution";
    poly.farkas = std::move(sol.farkas);
    return poly;
  }
  if (sol.status != lp::Status::optimal) {
    throw Error("internal error: feasibility program reported unbounded");
  }

  poly.status = PolytopeStatus::nonempty;
  const int d = poly.dim;
  long combos = binomial_capped(n, d, combination_cap);
  if (d > max_enum_dim || combos > combination_cap) {
    poly.complete = false;
    poly.unique = false;
    poly.extreme_points.emplace_back(std::move(sol.x));
    return poly;
  }

  // The solution set of the equations is origin + basis * t with t of
  // dimension d; the polytope is the nonnegativity region in t-space.  Every
  // vertex makes d linearly independent coordinates tight.
  std::vector<Rational> origin;
  std::vector<std::vector<Rational>> basis;
  rref.parametrize(origin, basis);

  std::set<std::vector<Rational>> vertices;
  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
    std::vector<Rational> b(d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) a[r][c] = basis[c][pick[r]];
      b[r] = -origin[pick[r]];
    }
    if (auto t = solve_square(std::move(a), std::move(b))) {
      std::vector<Rational> m = origin;
      for (int c = 0; c < d; ++c) {
        if ((*t)[c] == 0) continue;
        for (int i = 0; i < n; ++i) m[i] += (*t)[c] * basis[c][i];
      }
      if (std::all_of(m.begin(), m.end(),
                      [](const Rational& q) { return q >= 0; })) {
        vertices.insert(std::move(m));
      }
    }
    int pos = d - 1;
    while (pos >= 0 && pick[pos] == n - d + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int j = pos + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }

  if (vertices.empty()) {
    throw Error("internal error: nonempty bounded polytope yielded no vertices");
  }
  poly.complete = true;
  poly.unique = vertices.size() == 1;
  for (const auto& v : vertices) poly.extreme_points.emplace_back(v);
  return poly;
}

ImBounds im_bounds(const FiniteSemigroup& s, const PayoffFunction& f) {
  if (f.size() != s.size()) {
    throw BadParamError("payoff length does not match semigroup size");
  }
  InvarianceSystem sys = assemble_invariance_system(s);

  // When the equations already pin a unique candidate the bounds collapse to
  // its mean; skip the optimizer entirely (the common case: groups,
  // commutative tables, chains all have rank-n systems).
  {
    Rref rref(sys.n);
    bool consistent = true;
    for (std::size_t r = 0; r < sys.eq_coeffs.size() && consistent; ++r) {
      std::vector<Rational> row = sys.eq_coeffs[r];
      row.push_back(sys.eq_rhs[r]);
      consistent = rref.add(std::move(row));
    }
    if (!consistent) {
      throw NoInvariantMeasureError("no invariant measure exists on this table");
    }
    if (rref.rank() == sys.n) {
      std::vector<Rational> m = rref.unique_solution();
      for (const Rational& q : m) {
        if (q < 0) {
          throw NoInvariantMeasureError("no invariant measure exists on this table");
        }
      }
      Rational mean(0);
      for (int i = 0; i < sys.n; ++i) mean += m[i] * f[i];
      return {mean, mean};
    }
  }

  lp::Problem prob = invariance_feasibility_lp(sys);
  for (int i = 0; i < sys.n; ++i) prob.objective[i] = f[i];
  lp::Solution hi = lp::solve(prob);
  if (hi.status == lp::Status::infeasible) {
    throw NoInvariantMeasureError("no invariant measure exists on this table");
  }
  if (hi.status != lp::Status::optimal) {
    throw Error("internal error: bounded mean-payoff program reported unbounded");
  }
  for (int i = 0; i < sys.n; ++i) prob.objective[i] = -f[i];
  lp::Solution lo = lp::solve(prob);
  if (lo.status != lp::Status::optimal) {
    throw Error("internal error: bound programs disagree on feasibility");
  }
  ImBounds bounds;
  bounds.lower = -lo.objective;
  bounds.upper = hi.objective;
  if (bounds.lower > bounds.upper) {
    throw Error("internal error: mean-payoff bounds inverted");
  }
  return bounds;
}

bool has_property_IM(const FiniteSemigroup& s, const PayoffFunction& f) {
  ImBounds bounds = im_bounds(s, f);
  return bounds.lower == bounds.upper;
}

TileMeasureReport tile_measure_check(const FiniteSemigroup& s, const Subset& w,
                                     const std::vector<int>& translates) {
  TileCheck tile = verify_tile(s, w, translates);
  if (!tile.ok) {
    std::string detail = tile.uncovered
        ? "element " + std::to_string(*tile.uncovered) + " is not covered"
        : "translates overlap";
    throw NotATileError("the given translates do not tile the semigroup: " + detail);
  }
  TileMeasureReport report;
  report.k = tile.k;
  report.expected = Rational(1, tile.k);
  report.bounds = im_bounds(s, PayoffFunction::characteristic(w));  // throws when empty

  InvariantMeasurePolytope poly = invariant_measures(s);
  for (std::size_t idx = 0; idx < poly.extreme_points.size(); ++idx) {
    Rational mass(0);
    for (int i : w.indices()) mass += poly.extreme_points[idx][i];
    if (mass != report.expected) report.violations.push_back(static_cast<int>(idx));
    report.point_measures.push_back(std::move(mass));
  }
  report.all_match = report.violations.empty() &&
                     report.bounds.lower == report.expected &&
                     report.bounds.upper == report.expected;
  return report;
}

}  // namespace semigame
