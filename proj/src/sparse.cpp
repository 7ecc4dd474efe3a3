#include "semimon/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace semimon {

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : row_entries) n += r.size();
  return n;
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& [c, v] : row_entries[r]) m(r, c) = static_cast<long>(v);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) s.row_entries[r].emplace_back(c, m(r, c).get_si());
  return s;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  assert(a.cols == b.rows);
  SparseMatrix p(a.rows, b.cols);
  for (std::size_t r = 0; r < a.rows; ++r) {
    std::map<std::size_t, std::int64_t> acc;
    for (const auto& [k, v] : a.row_entries[r])
      for (const auto& [c, w] : b.row_entries[k]) acc[c] += v * w;
    for (const auto& [c, v] : acc)
      if (v != 0) p.row_entries[r].emplace_back(c, v);
  }
  return p;
}

namespace {

struct ModP {
  using Value = std::uint64_t;
  std::uint64_t p;

  Value from(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    return static_cast<Value>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  bool is_zero(Value v) const { return v == 0; }
  bool is_unit(Value v) const { return v != 0; }
  Value mul(Value a, Value b) const { return a * b % p; }
  Value sub(Value a, Value b) const { return (a + p - b) % p; }
  Value inverse(Value a) const {
    // Fermat; p is prime.
    Value result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
};

struct OverZ {
  using Value = Integer;

  Value from(std::int64_t x) const { return Value(static_cast<long>(x)); }
  bool is_zero(const Value& v) const { return sgn(v) == 0; }
  bool is_unit(const Value& v) const { return v == 1 || v == -1; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value inverse(const Value& a) const { return a; }
};

// Markowitz-style elimination on unit pivots: the shortest row holding a unit
// is pivoted on the unit whose column is sparsest. The pivot row and column
// leave the active matrix, which preserves both rank and the nonunit Smith
// invariants of what remains.
template <class Ring>
class UnitEliminator {
 public:
  using Value = typename Ring::Value;
  using Row = std::vector<std::pair<std::size_t, Value>>;

  UnitEliminator(const SparseMatrix& m, Ring ring) : ring_(ring), rows_(m.rows), col_rows_(m.cols) {
    for (std::size_t r = 0; r < m.rows; ++r) {
      for (const auto& [c, v] : m.row_entries[r]) {
        Value x = ring_.from(v);
        if (!ring_.is_zero(x)) rows_[r].emplace_back(c, x);
      }
      for (const auto& e : rows_[r]) col_rows_[e.first].insert(r);
      if (!rows_[r].empty()) alive_.insert(r);
    }
  }

  std::size_t run() {
    std::size_t rank = 0;
    while (true) {
      std::size_t best_row = rows_.size(), best_len = 0;
      for (std::size_t r : alive_) {
        const auto& row = rows_[r];
        if (best_row != rows_.size() && row.size() >= best_len) continue;
        if (std::any_of(row.begin(), row.end(), [&](const auto& e) { return ring_.is_unit(e.second); })) {
          best_row = r;
          best_len = row.size();
          if (best_len == 1) break;
        }
      }
      if (best_row == rows_.size()) break;
      std::size_t best_col = 0, best_count = 0;
      Value pivot{};
      bool found = false;
      for (const auto& [c, v] : rows_[best_row]) {
        if (!ring_.is_unit(v)) continue;
        if (!found || col_rows_[c].size() < best_count) {
          found = true;
          best_col = c;
          best_count = col_rows_[c].size();
          pivot = v;
        }
      }
      eliminate(best_row, best_col, pivot);
      ++rank;
    }
    return rank;
  }

  /// Rows still holding entries after run(), as a dense integer matrix.
  IntMatrix remainder() const {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < col_rows_.size(); ++c)
      if (!col_rows_[c].empty()) cols.push_back(c);
    IntMatrix d(alive_.size(), cols.size());
    std::size_t i = 0;
    for (std::size_t r : alive_) {
      for (const auto& [c, v] : rows_[r]) {
        auto j = static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), c) - cols.begin());
        d(i, j) = v;
      }
      ++i;
    }
    return d;
  }

 private:
  void eliminate(std::size_t prow, std::size_t pcol, const Value& pivot) {
    const Value inv = ring_.inverse(pivot);
    std::vector<std::size_t> targets(col_rows_[pcol].begin(), col_rows_[pcol].end());
    for (std::size_t r : targets) {
      if (r == prow) continue;
      auto it = std::lower_bound(rows_[r].begin(), rows_[r].end(), pcol,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      const Value factor = ring_.mul(it->second, inv);
      update_row(r, prow, factor);
    }
    for (const auto& e : rows_[prow]) col_rows_[e.first].erase(prow);
    rows_[prow].clear();
    alive_.erase(prow);
  }

  // rows_[r] -= factor * rows_[src]
  void update_row(std::size_t r, std::size_t src, const Value& factor) {
    const Row& a = rows_[r];
    const Row& b = rows_[src];
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        Value v = ring_.sub(Value(0), ring_.mul(factor, b[j].second));
        col_rows_[b[j].first].insert(r);
        out.emplace_back(b[j].first, std::move(v));
        ++j;
      } else {
        Value v = ring_.sub(a[i].second, ring_.mul(factor, b[j].second));
        if (ring_.is_zero(v))
          col_rows_[a[i].first].erase(r);
        else
          out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    rows_[r] = std::move(out);
    if (rows_[r].empty()) alive_.erase(r);
  }

  Ring ring_;
  std::vector<Row> rows_;
  std::vector<std::set<std::size_t>> col_rows_;
  std::set<std::size_t> alive_;
};

}  // namespace

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
  assert(p >= 2);
  UnitEliminator<ModP> e(m, ModP{p});
  return e.run();
}

IntegerElimination eliminate_over_integers(const SparseMatrix& m) {
  UnitEliminator<OverZ> e(m, OverZ{});
  IntegerElimination out;
  out.rank = e.run();
  IntMatrix rest = e.remainder();
  if (rest.rows() > 0 && rest.cols() > 0) {
    for (const auto& d : smith_diagonal(rest)) {
      if (sgn(d) == 0) continue;
      ++out.rank;
      if (d > 1) out.invariant_factors.push_back(d);
    }
  }
  std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
  return out;
}

}  // namespace semimon
