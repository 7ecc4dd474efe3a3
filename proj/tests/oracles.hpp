#pragma once

// Reference computations for the tests. They share nothing with the library
// beyond the Integer type: plain Gaussian elimination over Q and F_p, box
// enumeration, subset enumeration.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Row = std::vector<mpz_class>;
using QRow = std::vector<mpq_class>;

inline std::size_t rank_q(std::vector<QRow> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline long inverse_mod(long a, long p) {
  long r = 1, b = a % p, e = p - 2;
  if (b < 0) b += p;
  for (; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

inline std::size_t rank_mod(std::vector<std::vector<long>> m, long p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const long inv = inverse_mod(m[r][c], p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const long f = m[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

/// y with y * rows == x over Q, for linearly independent rows; nullopt when
/// x is not in their span.
inline std::optional<QRow> solve_rows(const std::vector<Row>& rows, const Row& x) {
  const std::size_t k = rows.size(), m = x.size();
  // Columns of the augmented system: unknowns y_0..y_{k-1}, one equation per coordinate.
  std::vector<QRow> a(m, QRow(k + 1));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < k; ++i) a[j][i] = rows[i][j];
    a[j][k] = x[j];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < k && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (a[i][k] != 0) return std::nullopt;
  QRow y(k, 0);
  for (std::size_t i = 0; i < r; ++i) y[pivots[i]] = a[i][k] / a[i][pivots[i]];
  return y;
}

/// x in the group generated by linearly independent rows.
inline bool in_row_lattice(const std::vector<Row>& rows, const Row& x) {
  auto y = solve_rows(rows, x);
  if (!y) return false;
  return std::all_of(y->begin(), y->end(), [](const mpq_class& q) { return q.get_den() == 1; });
}

/// Does A/B have an element of order p? a_rows and b_rows are bases of equal
/// rank with B inside A. Classes are enumerated by A-coordinates in [0, D)^r,
/// D the index, so this is meant for small quotients.
inline bool has_p_torsion(const std::vector<Row>& a_rows, const std::vector<Row>& b_rows, long p) {
  const std::size_t r = a_rows.size();
  if (r == 0) return false;
  std::vector<Row> t;  // B in A-coordinates
  for (const auto& b : b_rows) {
    auto y = solve_rows(a_rows, b);
    Row row;
    for (const auto& q : *y) row.push_back(q.get_num());
    t.push_back(row);
  }
  std::vector<QRow> tq;
  for (const auto& row : t) tq.emplace_back(row.begin(), row.end());
  // |det T| by elimination.
  mpq_class det = 1;
  {
    auto m = tq;
    for (std::size_t c = 0; c < r; ++c) {
      std::size_t piv = c;
      while (piv < r && m[piv][c] == 0) ++piv;
      if (piv == r) return false;
      if (piv != c) std::swap(m[piv], m[c]);
      det *= m[c][c];
      for (std::size_t i = c + 1; i < r; ++i) {
        const mpq_class f = m[i][c] / m[c][c];
        for (std::size_t j = c; j < r; ++j) m[i][j] -= f * m[c][j];
      }
    }
  }
  const long d = mpz_class(abs(det.get_num())).get_si();
  if (d % p != 0) return false;
  Row c(r, 0);
  for (;;) {
    Row pc(r);
    for (std::size_t i = 0; i < r; ++i) pc[i] = c[i] * p;
    if (!in_row_lattice(t, c) && in_row_lattice(t, pc)) return true;
    std::size_t i = 0;
    while (i < r && c[i] == d - 1) c[i++] = 0;
    if (i == r) return false;
    c[i] += 1;
  }
}

/// Integer points x in [-box, box]^m with every form >= 0 and
/// 0 <= grading(x) <= bound.
inline std::vector<Row> cone_points(const std::vector<Row>& forms, std::size_t m, long box, long bound) {
  std::vector<Row> out;
  Row x(m, -box);
  for (;;) {
    bool ok = true;
    mpz_class deg = 0;
    for (const auto& f : forms) {
      mpz_class v = 0;
      for (std::size_t j = 0; j < m; ++j) v += f[j] * x[j];
      if (v < 0) {
        ok = false;
        break;
      }
      deg += v;
    }
    if (ok && deg <= bound) out.push_back(x);
    std::size_t i = 0;
    while (i < m && x[i] == box) x[i++] = -box;
    if (i == m) break;
    x[i] += 1;
  }
  return out;
}

/// Reduced homology dimensions h[j + 1] = dim H~_j, j = -1..dim, of the
/// complex generated by the facets; characteristic 0 means Q.
inline std::vector<std::size_t> reduced_homology(const std::vector<std::vector<std::size_t>>& facets,
                                                 unsigned long characteristic) {
  std::set<std::vector<std::size_t>> faces;
  for (const auto& f : facets) {
    const std::size_t n = f.size();
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1UL) s.push_back(f[i]);
      faces.insert(s);
    }
  }
  std::size_t top = 0;
  for (const auto& f : faces) top = std::max(top, f.size());
  // by_size[k]: faces with k vertices (k = 0 is the empty face).
  std::vector<std::vector<std::vector<std::size_t>>> by_size(top + 1);
  for (const auto& f : faces) by_size[f.size()].push_back(f);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(top + 1);
  for (std::size_t k = 0; k <= top; ++k)
    for (std::size_t i = 0; i < by_size[k].size(); ++i) index[k][by_size[k][i]] = i;
  // rank of the boundary from k-vertex faces to (k-1)-vertex faces.
  auto boundary_rank = [&](std::size_t k) -> std::size_t {
    if (k == 0 || k > top) return 0;
    const std::size_t rows = by_size[k].size(), cols = by_size[k - 1].size();
    if (characteristic == 0) {
      std::vector<QRow> m(rows, QRow(cols, 0));
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t i = 0; i < k; ++i) {
          auto g = by_size[k][r];
          g.erase(g.begin() + static_cast<long>(i));
          m[r][index[k - 1][g]] = (i % 2 == 0) ? 1 : -1;
        }
      return rank_q(std::move(m));
    }
    std::vector<std::vector<long>> m(rows, std::vector<long>(cols, 0));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t i = 0; i < k; ++i) {
        auto g = by_size[k][r];
        g.erase(g.begin() + static_cast<long>(i));
        m[r][index[k - 1][g]] = (i % 2 == 0) ? 1 : -1;
      }
    return rank_mod(std::move(m), static_cast<long>(characteristic));
  };
  std::vector<std::size_t> h;
  for (std::size_t k = 0; k + 1 <= top; ++k) {
    const std::size_t n = by_size[k].size();
    h.push_back(n - boundary_rank(k) - boundary_rank(k + 1));
  }
  // k runs over face sizes 0..top-1, i.e. j = k - 1 = -1..top-2; add the top size.
  h.push_back(by_size[top].size() - boundary_rank(top));
  return h;
}

}  // namespace oracle
