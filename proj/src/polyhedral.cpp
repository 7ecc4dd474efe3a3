#include "semimon/polyhedral.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <set>
#include <unordered_set>

#include "semimon/error.hpp"

namespace semimon {

// ---------------------------------------------------------------------------
// BitSet

std::size_t BitSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitSet::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitSet::is_subset_of(const BitSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<std::size_t> BitSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

BitSet& BitSet::operator&=(const BitSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::size_t BitSet::hash() const {
  std::size_t h = size_;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------------------
// Double description

namespace {

struct DDRay {
  IntVector v;
  BitSet zeros;  // processed constraints vanishing on v
};

}  // namespace

std::vector<IntVector> extreme_rays_of(const std::vector<IntVector>& constraints, std::size_t dim) {
  if (dim == 0) return {};
  const std::size_t n = constraints.size();
  std::vector<std::size_t> basis = independent_rows(constraints);
  if (basis.size() != dim) throw Error(ErrorKind::NotPointed, "constraint rows do not have full rank");

  // Initial simplicial cone from the first independent constraints: its rays
  // are the columns of the inverse of that square block.
  IntMatrix square(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) square(i, j) = constraints[basis[i]][j];
  const IntMatrix square_t = square.transpose();
  std::vector<DDRay> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<Rational> e(dim, Rational(0));
    e[j] = 1;
    auto x = solve_unique(square_t, e);
    assert(x);
    Integer l = 1;
    for (const auto& q : *x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Integer((*x)[i] * l);
    DDRay r{primitive(std::move(v)), BitSet(n)};
    for (std::size_t i = 0; i < dim; ++i)
      if (i != j) r.zeros.set(basis[i]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> done(n, false);
  for (auto b : basis) done[b] = true;
  for (std::size_t c = 0; c < n; ++c) {
    if (done[c]) continue;
    done[c] = true;
    const IntVector& a = constraints[c];
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      int s = sgn(val[i]);
      if (s > 0) pos.push_back(i);
      else if (s < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (sgn(val[i]) == 0) rays[i].zeros.set(c);
      continue;
    }
    std::vector<DDRay> next;
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        BitSet common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < dim) continue;
        // Combinatorial adjacency: no third ray shares the common zero set.
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && common.is_subset_of(rays[r].zeros)) adjacent = false;
        if (!adjacent) continue;
        IntVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = val[p] * rays[q].v[i] - val[q] * rays[p].v[i];
        common.set(c);
        next.push_back({primitive(std::move(v)), std::move(common)});
      }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      int s = sgn(val[i]);
      if (s < 0) continue;
      if (s == 0) rays[i].zeros.set(c);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }
  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

// ---------------------------------------------------------------------------
// RationalCone

bool RationalCone::contains(std::span<const Integer> x) const {
  if (!span_.contains(x)) return false;
  return std::all_of(forms_.begin(), forms_.end(), [&](const IntVector& a) { return sgn(dot(a, x)) >= 0; });
}

RationalCone dual_description(const std::vector<IntVector>& generators, std::size_t ambient) {
  RationalCone cone;
  cone.ambient_ = ambient;
  for (const auto& g : generators) {
    if (g.size() != ambient) throw Error(ErrorKind::OutOfRange, "generator has wrong length");
    if (!is_zero(g)) cone.generators_.push_back(g);
  }
  cone.span_ = saturation(lattice_from_rows(ambient, cone.generators_));
  const std::size_t k = cone.span_.rank();
  if (k == 0) return cone;

  // Work in coordinates of the saturated span, where the cone is full-dimensional.
  const IntMatrix section = section_of(cone.span_);
  std::vector<IntVector> coords;
  for (const auto& g : cone.generators_) {
    IntVector c(k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < ambient; ++i) c[j] += g[i] * section(i, j);
    coords.push_back(std::move(c));
  }
  std::vector<IntVector> dual_rays = extreme_rays_of(coords, k);
  if (dual_rays.empty() || independent_rows(dual_rays).size() != k)
    throw Error(ErrorKind::NotPointed, "cone contains a line");
  std::vector<IntVector> ray_coords = extreme_rays_of(dual_rays, k);

  for (const auto& alpha : dual_rays) {
    IntVector f(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
      for (std::size_t j = 0; j < k; ++j) f[i] += section(i, j) * alpha[j];
    cone.forms_.push_back(primitive(std::move(f)));
  }
  std::sort(cone.forms_.begin(), cone.forms_.end());

  std::vector<IntVector> rays;
  for (const auto& c : ray_coords) rays.push_back(primitive(cone.span_.combine(c)));
  for (const auto& g : cone.generators_) {
    IntVector p = primitive(g);
    if (std::find(cone.rays_.begin(), cone.rays_.end(), p) != cone.rays_.end()) continue;
    if (std::find(rays.begin(), rays.end(), p) != rays.end()) cone.rays_.push_back(std::move(p));
  }
  if (cone.rays_.size() != rays.size())
    throw Error(ErrorKind::InvariantViolated, "extreme ray not among the generators");

  for (const auto& a : cone.forms_) {
    BitSet b(cone.rays_.size());
    for (std::size_t r = 0; r < cone.rays_.size(); ++r)
      if (sgn(dot(a, cone.rays_[r])) == 0) b.set(r);
    cone.facet_rays_.push_back(std::move(b));
  }
  return cone;
}

RationalCone cone_from_inequalities(const std::vector<IntVector>& forms, std::size_t ambient) {
  return dual_description(extreme_rays_of(forms, ambient), ambient);
}

IntVector grading_form(const RationalCone& cone) {
  IntVector g(cone.ambient_dim());
  for (const auto& a : cone.support_forms()) g = add(g, a);
  return g;
}

// ---------------------------------------------------------------------------
// Face lattice

FaceLattice::FaceLattice(RationalCone cone, IncidenceConvention convention) : cone_(std::move(cone)) {
  enumerate_faces();
  build_covers();
  build_incidence(convention);
}

void FaceLattice::enumerate_faces() {
  const std::size_t nrays = cone_.extreme_rays().size();
  const std::size_t nforms = cone_.support_forms().size();
  BitSet all(nrays);
  for (std::size_t i = 0; i < nrays; ++i) all.set(i);

  std::unordered_set<BitSet, BitSetHash> seen{all};
  std::vector<BitSet> queue{all};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (std::size_t f = 0; f < nforms; ++f) {
      BitSet g = queue[q] & cone_.facet_rays(f);
      if (seen.insert(g).second) queue.push_back(g);
    }

  for (auto& rays : queue) {
    Face face;
    std::vector<IntVector> rows;
    for (auto i : rays.indices()) rows.push_back(cone_.extreme_rays()[i]);
    face.span = saturation(lattice_from_rows(cone_.ambient_dim(), rows));
    face.dim = face.span.rank();
    for (std::size_t f = 0; f < nforms; ++f)
      if (rays.is_subset_of(cone_.facet_rays(f))) face.zero_set.push_back(f);
    face.rays = std::move(rays);
    faces_.push_back(std::move(face));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.rays < b.rays;
  });
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    faces_[i].id = i;
    index_.emplace(faces_[i].rays, i);
  }
  facets_.resize(nforms);
  for (std::size_t f = 0; f < nforms; ++f) facets_[f] = index_.at(cone_.facet_rays(f));
}

void FaceLattice::build_covers() {
  up_.assign(faces_.size(), {});
  down_.assign(faces_.size(), {});
  for (const auto& face : faces_) {
    if (face.dim == 0) continue;
    std::set<std::size_t> below;
    for (std::size_t f = 0; f < cone_.support_forms().size(); ++f) {
      if (std::binary_search(face.zero_set.begin(), face.zero_set.end(), f)) continue;
      std::size_t g = index_.at(face.rays & cone_.facet_rays(f));
      if (faces_[g].dim + 1 == face.dim) below.insert(g);
    }
    for (auto g : below) {
      down_[face.id].push_back(g);
      up_[g].push_back(face.id);
    }
  }
  for (auto& u : up_) std::sort(u.begin(), u.end());
}

namespace {

struct FaceFrame {
  std::vector<IntVector> basis;
  std::vector<std::size_t> pivot_cols;
  int sign = 1;
};

IntMatrix columns_of(const std::vector<IntVector>& rows, const std::vector<std::size_t>& cols) {
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = rows[i][cols[j]];
  return m;
}

}  // namespace

void FaceLattice::build_incidence(IncidenceConvention convention) {
  const auto& rays = cone_.extreme_rays();
  const std::size_t m = cone_.ambient_dim();
  std::vector<FaceFrame> frames(faces_.size());
  for (const auto& face : faces_) {
    std::vector<std::size_t> order = face.rays.indices();
    if (convention == IncidenceConvention::LastRays) std::reverse(order.begin(), order.end());
    std::vector<IntVector> candidates;
    for (auto i : order) candidates.push_back(rays[i]);
    FaceFrame& fr = frames[face.id];
    for (auto i : independent_rows(candidates)) fr.basis.push_back(candidates[i]);
    if (fr.basis.empty()) continue;
    std::vector<IntVector> cols(m, IntVector(fr.basis.size()));
    for (std::size_t r = 0; r < fr.basis.size(); ++r)
      for (std::size_t c = 0; c < m; ++c) cols[c][r] = fr.basis[r][c];
    fr.pivot_cols = independent_rows(cols);
    fr.sign = sgn(determinant(columns_of(fr.basis, fr.pivot_cols)));
  }

  up_eps_.assign(faces_.size(), {});
  for (const auto& g : faces_) {
    for (auto f : up_[g.id]) {
      const FaceFrame& ff = frames[f];
      std::vector<IntVector> x = frames[g.id].basis;
      x.push_back(subtract(ray_sum(f), ray_sum(g.id)));
      int s = sgn(determinant(columns_of(x, ff.pivot_cols)));
      if (s == 0) throw Error(ErrorKind::InvariantViolated, "degenerate incidence frame");
      up_eps_[g.id].push_back(s * ff.sign);
    }
  }
  if (!diamond_condition_holds(up_eps_))
    throw Error(ErrorKind::InvariantViolated, "incidence function violates the diamond condition");
}

int FaceLattice::epsilon(std::size_t lower, std::size_t upper) const {
  const auto& u = up_[lower];
  auto it = std::lower_bound(u.begin(), u.end(), upper);
  if (it == u.end() || *it != upper) throw Error(ErrorKind::OutOfRange, "not a cover pair");
  return up_eps_[lower][static_cast<std::size_t>(it - u.begin())];
}

bool FaceLattice::diamond_condition_holds(const std::vector<std::vector<int>>& eps) const {
  auto lookup = [&](std::size_t lo, std::size_t hi) {
    const auto& u = up_[lo];
    auto it = std::lower_bound(u.begin(), u.end(), hi);
    return eps[lo][static_cast<std::size_t>(it - u.begin())];
  };
  for (const auto& e : faces_) {
    std::map<std::size_t, std::vector<std::size_t>> middles;
    for (auto h : up_[e.id])
      for (auto f : up_[h]) middles[f].push_back(h);
    for (const auto& [f, hs] : middles) {
      if (hs.size() != 2) return false;
      if (lookup(e.id, hs[0]) * lookup(hs[0], f) + lookup(e.id, hs[1]) * lookup(hs[1], f) != 0) return false;
    }
  }
  return true;
}

std::optional<std::size_t> FaceLattice::find(const BitSet& rays) const {
  auto it = index_.find(rays);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FaceLattice::is_subface(std::size_t small, std::size_t big) const {
  return faces_[small].rays.is_subset_of(faces_[big].rays);
}

std::vector<std::size_t> FaceLattice::interval_above(std::size_t id) const {
  std::vector<std::size_t> out;
  for (std::size_t g = id; g < faces_.size(); ++g)
    if (is_subface(id, g)) out.push_back(g);
  return out;
}

std::vector<std::size_t> FaceLattice::faces_of_dim(std::size_t d) const {
  std::vector<std::size_t> out;
  for (const auto& f : faces_)
    if (f.dim == d) out.push_back(f.id);
  return out;
}

IntVector FaceLattice::ray_sum(std::size_t id) const {
  IntVector s(cone_.ambient_dim());
  for (auto i : faces_[id].rays.indices()) s = add(s, cone_.extreme_rays()[i]);
  return s;
}

std::size_t find_face(const FaceLattice& fl, const std::vector<std::size_t>& rays) {
  BitSet b(fl.cone().extreme_rays().size());
  for (auto r : rays) {
    if (r >= b.size()) throw Error(ErrorKind::OutOfRange, "ray index out of range");
    b.set(r);
  }
  auto id = fl.find(b);
  if (!id) throw Error(ErrorKind::OutOfRange, "ray set is not a face");
  return *id;
}

std::size_t minimal_face(const FaceLattice& fl, std::span<const Integer> x) {
  const RationalCone& c = fl.cone();
  if (x.size() != c.ambient_dim() || !c.contains(x)) throw Error(ErrorKind::NotInCone, to_string(x));
  BitSet rays(c.extreme_rays().size());
  for (std::size_t i = 0; i < c.extreme_rays().size(); ++i) rays.set(i);
  for (std::size_t f = 0; f < c.support_forms().size(); ++f)
    if (sgn(dot(c.support_forms()[f], x)) == 0) rays &= c.facet_rays(f);
  return *fl.find(rays);
}

bool in_relative_interior(const FaceLattice& fl, std::size_t face, std::span<const Integer> x) {
  if (!fl.cone().contains(x)) return false;
  return minimal_face(fl, x) == face;
}

bool is_simple_face(const FaceLattice& fl, std::size_t face) {
  const std::size_t codim = fl.dim() - fl.face(face).dim;
  if (fl.face(face).zero_set.size() != codim) return false;
  // The interval of a simplex face lattice is Boolean: 2^codim faces, each
  // face of dimension e covered by exactly dim C - e faces.
  auto interval = fl.interval_above(face);
  if (codim >= 63 || interval.size() != (std::size_t{1} << codim)) return false;
  return std::all_of(interval.begin(), interval.end(),
                     [&](std::size_t g) { return fl.up(g).size() == fl.dim() - fl.face(g).dim; });
}

}  // namespace semimon
