#include "semigame/semigroup.hpp"

#include <algorithm>

namespace semigame {

Subset Subset::from_indices(int universe, const std::vector<int>& indices) {
  Subset s(universe);
  for (int i : indices) {
    if (i < 0 || i >= universe)
      throw BadParamError("subset index " + std::to_string(i) + " out of range 0.." +
                          std::to_string(universe - 1));
    s.mask_[i] = true;
  }
  return s;
}

int Subset::count() const {
  return static_cast<int>(std::count(mask_.begin(), mask_.end(), true));
}

Subset Subset::complement() const {
  Subset r(universe());
  for (int i = 0; i < universe(); ++i) r.mask_[i] = !mask_[i];
  return r;
}

Subset Subset::set_union(const Subset& other) const {
  Subset r(universe());
  for (int i = 0; i < universe(); ++i) r.mask_[i] = mask_[i] || other.mask_[i];
  return r;
}

Subset Subset::set_minus(const Subset& other) const {
  Subset r(universe());
  for (int i = 0; i < universe(); ++i) r.mask_[i] = mask_[i] && !other.mask_[i];
  return r;
}

bool Subset::disjoint_with(const Subset& other) const {
  for (int i = 0; i < universe(); ++i)
    if (mask_[i] && other.mask_[i]) return false;
  return true;
}

bool Subset::is_subset_of(const Subset& other) const {
  for (int i = 0; i < universe(); ++i)
    if (mask_[i] && !other.mask_[i]) return false;
  return true;
}

std::vector<int> Subset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < universe(); ++i)
    if (mask_[i]) out.push_back(i);
  return out;
}

FiniteSemigroup FiniteSemigroup::validate(const std::vector<std::vector<long long>>& raw_table,
                                          bool require_associative,
                                          std::vector<std::string> labels) {
  const int n = static_cast<int>(raw_table.size());
  if (n < 1) throw BadParamError("Cayley table must have at least one element");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw BadParamError("label count does not match element count");

  FiniteSemigroup s;
  s.n_ = n;
  s.table_.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(raw_table[x].size()) != n)
      throw BadParamError("Cayley table is not square: row " + std::to_string(x));
    for (int y = 0; y < n; ++y) {
      long long v = raw_table[x][y];
      if (v < 0 || v >= n)
        throw NonClosedError(x, y, v,
                             "table[" + std::to_string(x) + "][" + std::to_string(y) +
                                 "] = " + std::to_string(v) + " is outside 0.." +
                                 std::to_string(n - 1));
      s.table_[static_cast<std::size_t>(x) * n + y] = static_cast<int>(v);
    }
  }

  // Full triple scan; n is desk-scale, and a failing triple is a usable witness.
  for (int x = 0; x < n && s.associative_; ++x)
    for (int y = 0; y < n && s.associative_; ++y)
      for (int z = 0; z < n; ++z) {
        if (s.op(s.op(x, y), z) != s.op(x, s.op(y, z))) {
          if (require_associative)
            throw NonAssociativeError(x, y, z,
                                      "(x*y)*z != x*(y*z) at (" + std::to_string(x) + "," +
                                          std::to_string(y) + "," + std::to_string(z) + ")");
          s.associative_ = false;
          s.witness_ = std::make_tuple(x, y, z);
          break;
        }
      }

  s.labels_ = std::move(labels);
  return s;
}

std::vector<std::vector<int>> FiniteSemigroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) t[x][y] = op(x, y);
  return t;
}

namespace {

FiniteSemigroup from_rule(int n, bool require_associative, int (*rule)(int, int, int)) {
  std::vector<std::vector<long long>> t(n, std::vector<long long>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = rule(x, y, n);
  return FiniteSemigroup::validate(t, require_associative);
}

void check_positive(int n, const char* what) {
  if (n < 1) throw BadParamError(std::string(what) + " requires a positive size");
}

}  // namespace

FiniteSemigroup make_cyclic_group(int n) {
  check_positive(n, "cyclic_group");
  return from_rule(n, true, [](int x, int y, int m) { return (x + y) % m; });
}

FiniteSemigroup make_left_zero(int n) {
  check_positive(n, "left_zero");
  return from_rule(n, true, [](int x, int, int) { return x; });
}

FiniteSemigroup make_right_zero(int n) {
  check_positive(n, "right_zero");
  return from_rule(n, true, [](int, int y, int) { return y; });
}

FiniteSemigroup make_min_chain(int n) {
  check_positive(n, "min_semilattice_chain");
  return from_rule(n, true, [](int x, int y, int) { return std::min(x, y); });
}

FiniteSemigroup make_null_semigroup(int n) {
  check_positive(n, "null_semigroup");
  return from_rule(n, true, [](int, int, int) { return 0; });
}

FiniteSemigroup make_monogenic(int index, int period) {
  check_positive(index, "monogenic");
  check_positive(period, "monogenic");
  // Element i stands for a^(i+1), i in 0..index+period-2; a^(m+r) = a^m.
  const int n = index + period - 1;
  std::vector<std::vector<long long>> t(n, std::vector<long long>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      long long e = static_cast<long long>(x) + y + 2;  // exponent of a
      if (e > n) e = index + (e - index) % period;
      t[x][y] = e - 1;
    }
  return FiniteSemigroup::validate(t, true);
}

FiniteSemigroup make_rps() {
  // x*y = the winner of rock(0) / paper(1) / scissors(2). Commutative but not
  // associative, and it admits no invariant probability measure.
  std::vector<std::vector<long long>> t = {{0, 1, 0}, {1, 1, 2}, {0, 2, 2}};
  return FiniteSemigroup::validate(t, false, {"rock", "paper", "scissors"});
}

FiniteSemigroup make_direct_product(const FiniteSemigroup& a, const FiniteSemigroup& b) {
  const int na = a.size(), nb = b.size();
  const int n = na * nb;
  std::vector<std::vector<long long>> t(n, std::vector<long long>(n));
  auto id = [nb](int i, int j) { return i * nb + j; };
  for (int x1 = 0; x1 < na; ++x1)
    for (int x2 = 0; x2 < nb; ++x2)
      for (int y1 = 0; y1 < na; ++y1)
        for (int y2 = 0; y2 < nb; ++y2)
          t[id(x1, x2)][id(y1, y2)] = id(a.op(x1, y1), b.op(x2, y2));
  return FiniteSemigroup::validate(t, a.is_associative() && b.is_associative());
}

TranslationMaps translation_maps(const FiniteSemigroup& s) {
  const int n = s.size();
  TranslationMaps m;
  m.left.assign(n, std::vector<int>(n));
  m.right.assign(n, std::vector<int>(n));
  for (int t = 0; t < n; ++t)
    for (int x = 0; x < n; ++x) {
      m.left[t][x] = s.op(t, x);
      m.right[t][x] = s.op(x, t);
    }
  return m;
}

TileCheck verify_tile(const FiniteSemigroup& s, const Subset& w,
                      const std::vector<int>& translates) {
  const int n = s.size();
  if (w.universe() != n) throw BadParamError("subset universe does not match semigroup size");
  if (translates.empty()) throw BadParamError("tile check needs at least one translate");
  for (int t : translates)
    if (t < 0 || t >= n) throw BadParamError("translate out of range");

  TileCheck r;
  r.k = static_cast<int>(translates.size());
  // owner[x] = index of the first translate whose image covers x.
  std::vector<int> owner(n, -1);
  for (int i = 0; i < r.k; ++i) {
    for (int x = 0; x < n; ++x) {
      if (!w.contains(x)) continue;
      int image = s.op(translates[i], x);
      if (owner[image] >= 0 && owner[image] != i) {
        r.overlap = std::make_tuple(owner[image], i, image);
        return r;
      }
      owner[image] = i;
    }
  }
  for (int x = 0; x < n; ++x)
    if (owner[x] < 0) {
      r.uncovered = x;
      return r;
    }
  r.ok = true;
  return r;
}

}  // namespace semigame
