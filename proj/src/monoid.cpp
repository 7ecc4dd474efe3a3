#include "semimon/monoid.hpp"

#include <algorithm>
#include <functional>

#include "semimon/error.hpp"

namespace semimon {

std::size_t IntVectorHash::operator()(const IntVector& v) const {
  std::size_t h = v.size();
  for (const auto& x : v) {
    std::size_t e = std::hash<long>{}(mpz_get_si(x.get_mpz_t()));
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

bool satisfies_forms(const RationalCone& cone, std::span<const Integer> x) {
  for (const auto& a : cone.support_forms())
    if (sgn(dot(a, x)) < 0) return false;
  return true;
}

}  // namespace

std::vector<IntVector> lattice_points_up_to(const RationalCone& cone, const Lattice& L, const IntVector& deg,
                                            const Integer& bound) {
  const std::size_t m = cone.ambient_dim();
  std::vector<IntVector> out;
  if (sgn(bound) < 0) return out;
  // Bounding box of the slice {x in cone : deg x <= bound}, whose vertices
  // are 0 and bound/deg(r) * r for the extreme rays r.
  IntVector lo(m), hi(m);
  for (const auto& r : cone.extreme_rays()) {
    const Integer d = dot(deg, r);
    if (sgn(d) <= 0) throw Error(ErrorKind::NotPositive, "degree form not positive on the cone");
    for (std::size_t i = 0; i < m; ++i) {
      Integer num = r[i] * bound;
      lo[i] = std::min(lo[i], floor_div(num, d));
      hi[i] = std::max(hi[i], ceil_div(num, d));
    }
  }

  const IntMatrix& basis = L.basis();
  const std::size_t k = basis.rows();
  std::vector<std::size_t> pivot(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t c = 0;
    while (sgn(basis(j, c)) == 0) ++c;
    pivot[j] = c;
  }

  std::vector<std::pair<Integer, IntVector>> found;
  IntVector x(m);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == k) {
      for (std::size_t i = 0; i < m; ++i)
        if (x[i] < lo[i] || x[i] > hi[i]) return;
      Integer d = dot(deg, x);
      if (d > bound || !satisfies_forms(cone, x)) return;
      found.emplace_back(d, x);
      return;
    }
    const Integer& p = basis(j, pivot[j]);
    const Integer cmin = ceil_div(lo[pivot[j]] - x[pivot[j]], p);
    const Integer cmax = floor_div(hi[pivot[j]] - x[pivot[j]], p);
    if (cmin > cmax) return;
    for (std::size_t i = 0; i < m; ++i) x[i] += cmin * basis(j, i);
    for (Integer c = cmin; c <= cmax; ++c) {
      rec(j + 1);
      for (std::size_t i = 0; i < m; ++i) x[i] += basis(j, i);
    }
    for (std::size_t i = 0; i < m; ++i) x[i] -= (cmax + 1) * basis(j, i);
  };
  rec(0);
  std::sort(found.begin(), found.end());
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

// ---------------------------------------------------------------------------
// AffineMonoid

AffineMonoid::AffineMonoid(std::vector<IntVector> generators, std::size_t ambient)
    : ambient_(ambient), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.size() != ambient_) throw Error(ErrorKind::OutOfRange, "generator has wrong length");
    if (is_zero(g)) throw Error(ErrorKind::ZeroGenerator, "zero generator");
  }
  try {
    faces_ = std::make_shared<const FaceLattice>(dual_description(generators_, ambient_));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotPointed) throw Error(ErrorKind::NotPositive, "cone is not pointed");
    throw;
  }
  grading_ = grading_form(faces_->cone());
  face_groups_.reserve(faces_->size());
  for (std::size_t f = 0; f < faces_->size(); ++f)
    face_groups_.push_back(lattice_from_rows(ambient_, face_submonoid_generators(*this, f)));
}

AffineMonoid monoid_new(const std::vector<IntVector>& generators, std::size_t ambient) {
  return AffineMonoid(generators, ambient);
}

std::vector<IntVector> face_submonoid_generators(const AffineMonoid& m, std::size_t face) {
  const auto& forms = m.cone().support_forms();
  const auto& zero = m.faces().face(face).zero_set;
  std::vector<IntVector> out;
  for (const auto& g : m.generators())
    if (std::all_of(zero.begin(), zero.end(), [&](std::size_t f) { return sgn(dot(forms[f], g)) == 0; }))
      out.push_back(g);
  return out;
}

bool member(const AffineMonoid& m, std::span<const Integer> x) {
  if (x.size() != m.ambient_dim() || !m.cone().contains(x)) return false;
  std::vector<const IntVector*> gens;
  for (const auto& g : m.generators()) gens.push_back(&g);
  std::stable_sort(gens.begin(), gens.end(),
                   [&](const IntVector* a, const IntVector* b) { return m.degree(*a) > m.degree(*b); });
  PointSet failed;
  std::function<bool(const IntVector&)> rec = [&](const IntVector& y) {
    if (is_zero(y)) return true;
    if (failed.count(y)) return false;
    for (const IntVector* g : gens) {
      IntVector rest = subtract(y, *g);
      if (!satisfies_forms(m.cone(), rest)) continue;
      if (rec(rest)) return true;
    }
    failed.insert(y);
    return false;
  };
  return rec(IntVector(x.begin(), x.end()));
}

PointSet elements_up_to(const AffineMonoid& m, const Integer& bound) {
  PointSet seen;
  if (sgn(bound) < 0) return seen;
  std::vector<IntVector> frontier{IntVector(m.ambient_dim())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& e : frontier)
      for (const auto& g : m.generators()) {
        IntVector s = add(e, g);
        if (m.degree(s) > bound) continue;
        if (seen.insert(s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  return seen;
}

IntVector primitive_multiple_in(const Lattice& L, const IntVector& ray) {
  Lattice line = lattice_intersect(L, lattice_from_rows(ray.size(), {ray}));
  if (line.rank() != 1) throw Error(ErrorKind::DegenerateFace, "ray has no multiple in the lattice");
  IntVector v = line.basis().row_vector(0);
  if (sgn(dot(v, ray)) < 0) v = scale(Integer(-1), v);
  return v;
}

std::vector<IntVector> hilbert_basis(const RationalCone& cone, const Lattice& L) {
  const IntVector deg = grading_form(cone);
  Integer stop = 0;
  for (const auto& r : cone.extreme_rays()) stop += dot(deg, primitive_multiple_in(L, r));
  std::vector<IntVector> kept;
  for (auto& x : lattice_points_up_to(cone, L, deg, stop)) {
    if (is_zero(x)) continue;
    bool reducible = std::any_of(kept.begin(), kept.end(),
                                 [&](const IntVector& h) { return satisfies_forms(cone, subtract(x, h)); });
    if (!reducible) kept.push_back(std::move(x));
  }
  return kept;
}

NormalityVerdict is_normal(const AffineMonoid& m) {
  NormalityVerdict v;
  for (const auto& h : hilbert_basis(m.cone(), m.group()))
    if (!member(m, h)) {
      v.normal = false;
      v.witness = h;
      break;
    }
  return v;
}

bool sn_member(const AffineMonoid& m, std::span<const Integer> x) {
  if (x.size() != m.ambient_dim() || !m.cone().contains(x)) return false;
  return m.face_group(minimal_face(m.faces(), x)).contains(x);
}

Integer default_degree_bound(const AffineMonoid& m) {
  Integer top = 0;
  for (const auto& g : m.generators()) top = std::max(top, m.degree(g));
  return Integer(static_cast<unsigned long>(m.rank() + 1)) * top;
}

SeminormalityVerdict is_seminormal_up_to(const AffineMonoid& m, const Integer& bound) {
  SeminormalityVerdict v;
  v.bound = bound;
  PointSet elements = elements_up_to(m, bound);
  for (const auto& x : lattice_points_up_to(m.cone(), m.group(), m.grading(), bound)) {
    if (elements.count(x)) continue;
    if (sn_member(m, x)) {
      v.seminormal_up_to = false;
      v.witness = x;
      break;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Decorated cones

DecoratedCone::DecoratedCone(std::shared_ptr<const FaceLattice> faces, std::vector<Lattice> lambda,
                             IntVector degree_form)
    : faces_(std::move(faces)), lambda_(std::move(lambda)), degree_(std::move(degree_form)) {
  const FaceLattice& fl = *faces_;
  if (lambda_.size() != fl.size()) throw Error(ErrorKind::OutOfRange, "one lattice per face required");
  if (degree_.size() != fl.cone().ambient_dim()) throw Error(ErrorKind::OutOfRange, "degree form has wrong length");
  for (const auto& r : fl.cone().extreme_rays())
    if (sgn(dot(degree_, r)) <= 0) throw Error(ErrorKind::NotPositive, "degree form not positive on the cone");
  for (const auto& face : fl.faces()) {
    const Lattice& l = lambda_[face.id];
    if (l.ambient_dim() != fl.cone().ambient_dim() || l.rank() != face.dim || !is_sublattice(l, face.span))
      throw Error(ErrorKind::DegenerateFace, "lattice of face " + std::to_string(face.id) + " is not full rank in its span");
  }
  for (const auto& face : fl.faces())
    for (auto up : fl.up(face.id))
      if (!is_sublattice(lambda_[face.id], lambda_[up]))
        throw Error(ErrorKind::InvariantViolated,
                    "lattices not monotone between faces " + std::to_string(face.id) + " and " + std::to_string(up));
}

DecoratedCone model_from_facet_lattices(std::shared_ptr<const FaceLattice> faces,
                                        const std::vector<Lattice>& facet_lattices, const Lattice& group,
                                        IntVector degree_form) {
  std::vector<Lattice> lambda;
  lambda.reserve(faces->size());
  for (const auto& face : faces->faces()) {
    Lattice l = lattice_intersect(face.span, group);
    for (auto f : face.zero_set) l = lattice_intersect(l, facet_lattices[f]);
    lambda.push_back(std::move(l));
  }
  return DecoratedCone(std::move(faces), std::move(lambda), std::move(degree_form));
}

DecoratedCone to_model(const AffineMonoid& m) {
  std::vector<Lattice> lambda;
  for (std::size_t f = 0; f < m.faces().size(); ++f) lambda.push_back(m.face_group(f));
  return DecoratedCone(m.faces_ptr(), std::move(lambda), m.grading());
}

bool model_member(const DecoratedCone& w, std::span<const Integer> x) {
  if (x.size() != w.ambient_dim() || !w.cone().contains(x)) return false;
  return w.lambda(minimal_face(w.faces(), x)).contains(x);
}

DecoratedCone restrict_to_face(const DecoratedCone& w, std::size_t face) {
  const FaceLattice& fl = w.faces();
  const std::vector<std::size_t> rays = fl.face(face).rays.indices();
  std::vector<IntVector> gens;
  for (auto r : rays) gens.push_back(fl.cone().extreme_rays()[r]);
  auto sub = std::make_shared<const FaceLattice>(dual_description(gens, w.ambient_dim()));
  std::vector<Lattice> lambda;
  for (const auto& g : sub->faces()) {
    std::vector<std::size_t> old;
    for (auto i : g.rays.indices()) old.push_back(rays[i]);
    lambda.push_back(w.lambda(find_face(fl, old)));
  }
  return DecoratedCone(std::move(sub), std::move(lambda), w.degree_form());
}

std::vector<IntVector> model_irreducibles(const DecoratedCone& w, const Integer& bound) {
  std::vector<IntVector> kept;
  for (auto& x : lattice_points_up_to(w.cone(), w.group(), w.degree_form(), bound)) {
    if (is_zero(x) || !model_member(w, x)) continue;
    bool reducible =
        std::any_of(kept.begin(), kept.end(), [&](const IntVector& h) { return model_member(w, subtract(x, h)); });
    if (!reducible) kept.push_back(std::move(x));
  }
  return kept;
}

}  // namespace semimon
