#include "semimon/exactlin.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "semimon/error.hpp"

namespace semimon {

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  assert(a.size() == b.size());
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVector primitive(IntVector v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntVector add(std::span<const Integer> a, std::span<const Integer> b) {
  IntVector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVector subtract(std::span<const Integer> a, std::span<const Integer> b) {
  IntVector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVector scale(const Integer& k, std::span<const Integer> v) {
  IntVector r(v.begin(), v.end());
  for (auto& x : r) x *= k;
  return r;
}

std::string to_string(std::span<const Integer> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return IntVector(s.begin(), s.end());
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols() == b.rows());
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ",";
    os << to_string(m.row(r));
  }
  return os << "]";
}

// ---------------------------------------------------------------------------
// Normal forms

HermiteForm hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Euclid on the column below pivot_row until a single nonzero remains.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t r = pivot_row; r < h.rows(); ++r) {
        if (sgn(h(r, col)) == 0) continue;
        if (best == h.rows() || mpz_cmpabs(h(r, col).get_mpz_t(), h(best, col).get_mpz_t()) < 0) best = r;
      }
      if (best == h.rows()) break;
      h.swap_rows(pivot_row, best);
      u.swap_rows(pivot_row, best);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < h.rows(); ++r) {
        if (sgn(h(r, col)) == 0) continue;
        Integer q = floor_div(h(r, col), h(pivot_row, col));
        h.add_row_multiple(r, pivot_row, -q);
        u.add_row_multiple(r, pivot_row, -q);
        if (sgn(h(r, col)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(h(pivot_row, col)) == 0) continue;
    if (sgn(h(pivot_row, col)) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q = floor_div(h(r, col), h(pivot_row, col));
      h.add_row_multiple(r, pivot_row, -q);
      u.add_row_multiple(r, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

namespace {

// Moves an entry of least absolute value in the trailing block to (t, t).
bool place_smallest(IntMatrix& s, IntMatrix& u, IntMatrix& v, std::size_t t) {
  std::size_t br = s.rows(), bc = s.cols();
  for (std::size_t r = t; r < s.rows(); ++r)
    for (std::size_t c = t; c < s.cols(); ++c) {
      if (sgn(s(r, c)) == 0) continue;
      if (br == s.rows() || mpz_cmpabs(s(r, c).get_mpz_t(), s(br, bc).get_mpz_t()) < 0) {
        br = r;
        bc = c;
      }
    }
  if (br == s.rows()) return false;
  s.swap_rows(t, br);
  u.swap_rows(t, br);
  s.swap_cols(t, bc);
  v.swap_cols(t, bc);
  return true;
}

}  // namespace

SmithForm snf(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(s.rows(), s.cols());
  for (std::size_t t = 0; t < n; ++t) {
    if (!place_smallest(s, u, v, t)) break;
    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < s.rows(); ++r) {
        if (sgn(s(r, t)) == 0) continue;
        Integer q = floor_div(s(r, t), s(t, t));
        s.add_row_multiple(r, t, -q);
        u.add_row_multiple(r, t, -q);
        if (sgn(s(r, t)) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < s.cols(); ++c) {
        if (sgn(s(t, c)) == 0) continue;
        Integer q = floor_div(s(t, c), s(t, t));
        s.add_col_multiple(c, t, -q);
        v.add_col_multiple(c, t, -q);
        if (sgn(s(t, c)) != 0) clean = false;
      }
      if (!clean) {
        place_smallest(s, u, v, t);
        continue;
      }
      // Divisibility: fold a row whose entries the pivot does not divide.
      std::size_t bad = s.rows();
      for (std::size_t r = t + 1; r < s.rows() && bad == s.rows(); ++r)
        for (std::size_t c = t + 1; c < s.cols(); ++c)
          if (!mpz_divisible_p(s(r, c).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad = r;
            break;
          }
      if (bad == s.rows()) break;
      s.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (sgn(s(t, t)) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

std::vector<Integer> smith_diagonal(const IntMatrix& m) {
  SmithForm f = snf(m);
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) d.push_back(f.s(i, i));
  return d;
}

Integer determinant(const IntMatrix& m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(a(r, k)) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  HermiteForm f = hnf(m);
  std::size_t r = 0;
  while (r < f.h.rows() && !is_zero(f.h.row(r))) ++r;
  return r;
}

std::vector<std::size_t> independent_rows(const std::vector<IntVector>& rows) {
  std::vector<std::size_t> picked;
  if (rows.empty()) return picked;
  // Incremental echelon basis over Q, kept integral by cross-multiplication.
  std::vector<IntVector> echelon;
  std::vector<std::size_t> lead;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    IntVector v = rows[i];
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const std::size_t c = lead[k];
      if (sgn(v[c]) == 0) continue;
      Integer a = echelon[k][c], b = v[c];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] * a - echelon[k][j] * b;
      v = primitive(std::move(v));
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; });
    if (it == v.end()) continue;
    lead.push_back(static_cast<std::size_t>(it - v.begin()));
    echelon.push_back(std::move(v));
    picked.push_back(i);
  }
  return picked;
}

IntMatrix left_kernel(const IntMatrix& m) {
  HermiteForm f = hnf(m);
  std::size_t r = 0;
  while (r < f.h.rows() && !is_zero(f.h.row(r))) ++r;
  IntMatrix k(f.h.rows() - r, m.rows());
  for (std::size_t i = r; i < f.h.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) k(i - r, j) = f.u(i, j);
  return k;
}

std::optional<std::vector<Rational>> solve_unique(const IntMatrix& a, const std::vector<Rational>& rhs) {
  // Unknowns x (length k) with sum_i x_i a(i, j) = rhs_j; work on the
  // transposed system a^T x = rhs.
  const std::size_t k = a.rows(), t = a.cols();
  assert(rhs.size() == t);
  std::vector<std::vector<Rational>> aug(t, std::vector<Rational>(k + 1));
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug[j][i] = a(i, j);
    aug[j][k] = rhs[j];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < k && row < t; ++c) {
    std::size_t p = row;
    while (p < t && sgn(aug[p][c]) == 0) ++p;
    if (p == t) continue;
    std::swap(aug[p], aug[row]);
    for (std::size_t r = 0; r < t; ++r) {
      if (r == row || sgn(aug[r][c]) == 0) continue;
      Rational f = aug[r][c] / aug[row][c];
      for (std::size_t j = c; j <= k; ++j) aug[r][j] -= f * aug[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < t; ++r)
    if (sgn(aug[r][k]) != 0) return std::nullopt;
  if (row < k) return std::nullopt;
  std::vector<Rational> x(k);
  for (std::size_t r = 0; r < row; ++r) x[pivot_col[r]] = aug[r][k] / aug[r][pivot_col[r]];
  return x;
}

// ---------------------------------------------------------------------------
// Lattices

Lattice Lattice::zero(std::size_t ambient) {
  Lattice l;
  l.ambient_ = ambient;
  l.basis_ = IntMatrix(0, ambient);
  return l;
}

Lattice Lattice::full(std::size_t ambient) {
  Lattice l;
  l.ambient_ = ambient;
  l.basis_ = IntMatrix::identity(ambient);
  return l;
}

Lattice Lattice::from_rows(std::size_t ambient, const std::vector<IntVector>& rows) {
  Lattice l;
  l.ambient_ = ambient;
  if (rows.empty()) {
    l.basis_ = IntMatrix(0, ambient);
    return l;
  }
  HermiteForm f = hnf(IntMatrix::from_rows(rows, ambient));
  std::size_t r = 0;
  while (r < f.h.rows() && !is_zero(f.h.row(r))) ++r;
  l.basis_ = IntMatrix(r, ambient);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < ambient; ++j) l.basis_(i, j) = f.h(i, j);
  return l;
}

std::optional<IntVector> Lattice::coordinates(std::span<const Integer> x) const {
  assert(x.size() == ambient_);
  IntVector rest(x.begin(), x.end());
  IntVector coords(rank());
  std::size_t col = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    auto b = basis_.row(i);
    std::size_t pivot = col;
    while (sgn(b[pivot]) == 0) ++pivot;
    for (; col < pivot; ++col)
      if (sgn(rest[col]) != 0) return std::nullopt;
    if (!mpz_divisible_p(rest[pivot].get_mpz_t(), b[pivot].get_mpz_t())) return std::nullopt;
    coords[i] = rest[pivot] / b[pivot];
    for (std::size_t j = pivot; j < ambient_; ++j) rest[j] -= coords[i] * b[j];
    col = pivot + 1;
  }
  for (; col < ambient_; ++col)
    if (sgn(rest[col]) != 0) return std::nullopt;
  return coords;
}

bool Lattice::contains(std::span<const Integer> x) const { return coordinates(x).has_value(); }

IntVector Lattice::combine(std::span<const Integer> coords) const {
  assert(coords.size() == rank());
  IntVector x(ambient_);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) x[j] += coords[i] * basis_(i, j);
  return x;
}

Integer AbelianQuotient::order() const {
  Integer n = 1;
  for (const auto& f : invariant_factors) n *= f;
  return n;
}

std::vector<unsigned long> AbelianQuotient::torsion_primes() const {
  if (invariant_factors.empty()) return {};
  // The last factor is divisible by all others.
  return prime_factors(invariant_factors.back());
}

Lattice lattice_from_rows(std::size_t ambient, const std::vector<IntVector>& rows) {
  return Lattice::from_rows(ambient, rows);
}

bool lattice_member(const Lattice& lattice, std::span<const Integer> x) { return lattice.contains(x); }

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  assert(a.ambient_dim() == b.ambient_dim());
  if (a.rank() == 0 || b.rank() == 0) return Lattice::zero(a.ambient_dim());
  std::vector<IntVector> stacked = a.basis_rows();
  for (auto& r : b.basis_rows()) stacked.push_back(std::move(r));
  IntMatrix k = left_kernel(IntMatrix::from_rows(stacked, a.ambient_dim()));
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < k.rows(); ++i) {
    auto coeffs = k.row(i).subspan(0, a.rank());
    rows.push_back(a.combine(coeffs));
  }
  return Lattice::from_rows(a.ambient_dim(), rows);
}

Lattice saturation(const Lattice& lattice) {
  const std::size_t m = lattice.ambient_dim();
  if (lattice.rank() == 0) return Lattice::zero(m);
  if (lattice.rank() == m) return Lattice::full(m);
  // Orthogonal complement N of the span, then its orthogonal complement in Z^m.
  IntMatrix normals = left_kernel(lattice.basis().transpose());  // rows z with B z = 0
  IntMatrix sat = left_kernel(normals.transpose());
  return Lattice::from_rows(m, sat.row_vectors());
}

bool is_sublattice(const Lattice& sub, const Lattice& super) {
  for (std::size_t i = 0; i < sub.rank(); ++i)
    if (!super.contains(sub.basis().row(i))) return false;
  return true;
}

AbelianQuotient quotient_structure(const Lattice& a, const Lattice& b) {
  if (!is_sublattice(b, a)) throw Error(ErrorKind::NotSublattice, "quotient of non-nested lattices");
  AbelianQuotient q;
  q.free_rank = a.rank() - b.rank();
  if (b.rank() == 0) return q;
  std::vector<IntVector> coords;
  for (std::size_t i = 0; i < b.rank(); ++i) coords.push_back(*a.coordinates(b.basis().row(i)));
  for (const auto& d : smith_diagonal(IntMatrix::from_rows(coords, a.rank())))
    if (d > 1) q.invariant_factors.push_back(d);
  return q;
}

std::vector<unsigned long> prime_factors(const Integer& n) {
  std::vector<unsigned long> out;
  Integer r = abs(n);
  for (unsigned long p = 2; r > 1; ++p) {
    if (Integer(p) * p > r) {
      out.push_back(r.get_ui());
      break;
    }
    if (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(r.get_mpz_t(), p)) r /= p;
    }
  }
  return out;
}

IntMatrix section_of(const Lattice& saturated) {
  const std::size_t k = saturated.rank(), m = saturated.ambient_dim();
  SmithForm f = snf(saturated.basis());
  for (std::size_t i = 0; i < k; ++i)
    if (f.s(i, i) != 1) throw Error(ErrorKind::InvariantViolated, "section_of needs a saturated lattice");
  // u B v = [I 0]  =>  B * (v[:, :k] * u) = I
  IntMatrix vk(m, k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < k; ++c) vk(r, c) = f.v(r, c);
  return vk * f.u;
}

}  // namespace semimon
