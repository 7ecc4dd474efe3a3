#include "semimon/criteria.hpp"

#include <algorithm>
#include <set>

#include "semimon/error.hpp"

namespace semimon {

S2Verdict s2_lattice_test(const DecoratedCone& w) {
  const FaceLattice& fl = w.faces();
  for (const auto& face : fl.faces()) {
    if (face.id == fl.top()) continue;
    Lattice expected = face.span;
    for (auto f : face.zero_set) expected = lattice_intersect(expected, w.lambda(fl.facet(f)));
    if (!(expected == w.lambda(face.id))) return {false, face.id};
  }
  return {};
}

std::optional<IntVector> interior_hypothesis_counterexample(const AffineMonoid& m, const Integer& bound) {
  PointSet elements = elements_up_to(m, bound);
  for (const auto& x : lattice_points_up_to(m.cone(), m.group(), m.grading(), bound))
    if (minimal_face(m.faces(), x) == m.faces().top() && !elements.count(x)) return x;
  return std::nullopt;
}

namespace {

bool m_prime_unchecked(const AffineMonoid& m, std::span<const Integer> x) {
  if (x.size() != m.ambient_dim() || !m.cone().contains(x) || !m.group().contains(x)) return false;
  const FaceLattice& fl = m.faces();
  const std::size_t f = minimal_face(fl, x);
  for (auto j : fl.face(f).zero_set)
    if (!m.face_group(fl.facet(j)).contains(x)) return false;
  return true;
}

void require_hypothesis(const AffineMonoid& m, const Integer& bound) {
  if (auto c = interior_hypothesis_counterexample(m, bound))
    throw Error(ErrorKind::HypothesisUnverified, "interior group point outside the monoid: " + to_string(*c));
}

}  // namespace

bool m_prime_member(const AffineMonoid& m, std::span<const Integer> x, const Integer& bound) {
  require_hypothesis(m, bound);
  return m_prime_unchecked(m, x);
}

BoundedS2Verdict s2_up_to(const AffineMonoid& m, const Integer& bound) {
  require_hypothesis(m, bound);
  BoundedS2Verdict v;
  v.bound = bound;
  PointSet elements = elements_up_to(m, bound);
  for (const auto& x : lattice_points_up_to(m.cone(), m.group(), m.grading(), bound)) {
    if (elements.count(x) || !m_prime_unchecked(m, x)) continue;
    v.s2_up_to = false;
    v.witness = x;
    break;
  }
  return v;
}

bool face_is_normal(const DecoratedCone& w, std::size_t face) {
  const FaceLattice& fl = w.faces();
  for (std::size_t g = 0; g <= face; ++g)
    if (fl.is_subface(g, face) && !(w.lambda(g) == lattice_intersect(w.lambda(face), fl.face(g).span)))
      return false;
  return true;
}

CMCriterion normal_facets_cm(const DecoratedCone& w) {
  for (auto f : w.faces().facets())
    if (!face_is_normal(w, f)) return {false, f};
  return {true, std::nullopt};
}

SimpleConeVerdict simple_cone_cm(const DecoratedCone& w) {
  const FaceLattice& fl = w.faces();
  SimpleConeVerdict v;
  v.simple.resize(fl.size());
  for (const auto& f : fl.faces()) {
    v.simple[f.id] = f.id == fl.top() || is_simple_face(fl, f.id);
    if (f.dim == 1 && !v.simple[f.id] && !v.non_simple_ray) v.non_simple_ray = f.id;
  }
  v.s2 = s2_lattice_test(w).holds;
  v.applies = v.s2 && !v.non_simple_ray;
  return v;
}

std::size_t normality_index(const DecoratedCone& w) {
  const FaceLattice& fl = w.faces();
  std::size_t n = fl.dim();
  for (const auto& f : fl.faces())
    if (f.dim <= n && !face_is_normal(w, f.id)) n = f.dim - 1;
  return n;
}

DepthBounds depth_bounds(const DecoratedCone& w, Field field, const TypologyOptions& options) {
  const FaceLattice& fl = w.faces();
  DepthBounds b;
  b.depth = depth_report(w, {field}, options).at(field).depth;
  b.n = normality_index(w);
  b.c_k = fl.dim();
  // Faces come sorted by dimension, so the first failure fixes c_K.
  for (const auto& f : fl.faces()) {
    if (f.dim < 2) continue;
    if (f.dim > b.c_k) break;
    const std::size_t d = f.id == fl.top() ? b.depth
                                           : depth_report(restrict_to_face(w, f.id), {field}, options).at(field).depth;
    if (d < f.dim) b.c_k = f.dim - 1;
  }
  b.chain_holds = b.depth >= b.c_k && b.c_k >= std::min(b.n + 1, fl.dim());
  return b;
}

std::vector<unsigned long> f_bad_primes(const DecoratedCone& w) {
  std::set<unsigned long> primes;
  for (const auto& f : w.faces().faces())
    for (auto p : quotient_structure(lattice_intersect(f.span, w.group()), w.lambda(f.id)).torsion_primes())
      primes.insert(p);
  return {primes.begin(), primes.end()};
}

GorensteinVerdict gorenstein_check(const DecoratedCone& w, bool cohen_macaulay) {
  if (!cohen_macaulay) throw Error(ErrorKind::NotCM, "the Gorenstein test needs a Cohen-Macaulay ring");
  const FaceLattice& fl = w.faces();
  const RationalCone& cone = fl.cone();
  const Lattice& group = w.group();
  const std::size_t k = group.rank(), t = cone.support_forms().size();
  GorensteinVerdict v;
  // sigma_F: the support form rescaled to take the value group Z on Lambda_C.
  IntMatrix sigma(k, t);
  std::vector<Rational> rhs(t);
  for (std::size_t f = 0; f < t; ++f) {
    const std::size_t face = fl.facet(f);
    const Integer gamma = quotient_structure(lattice_intersect(fl.face(face).span, group), w.lambda(face)).order();
    v.gamma.push_back(gamma);
    IntVector values(k);
    for (std::size_t i = 0; i < k; ++i) values[i] = dot(cone.support_forms()[f], group.basis().row(i));
    const Integer g = content(values);
    for (std::size_t i = 0; i < k; ++i) sigma(i, f) = values[i] / g;
    rhs[f] = gamma == 1 ? 1 : 0;
  }
  for (std::size_t f = 0; f < t; ++f)
    if (v.gamma[f] > 2) {
      v.reason = "facet " + std::to_string(fl.facet(f)) + " has lattice index " + v.gamma[f].get_str() + " > 2";
      return v;
    }
  auto y = solve_unique(sigma, rhs);
  if (!y) {
    v.reason = "no unique solution for b";
    return v;
  }
  IntVector coords(k);
  for (std::size_t i = 0; i < k; ++i) {
    if ((*y)[i].get_den() != 1) {
      v.reason = "b is not in the group";
      return v;
    }
    coords[i] = (*y)[i].get_num();
  }
  IntVector b = group.combine(coords);
  if (!cone.contains(b)) {
    v.reason = "b is not in the cone";
    return v;
  }
  for (std::size_t f = 0; f < t; ++f)
    if (v.gamma[f] == 2 && w.lambda(fl.facet(f)).contains(b)) {
      v.reason = "b lies in the lattice of facet " + std::to_string(fl.facet(f));
      v.b = b;
      return v;
    }
  v.gorenstein = true;
  v.b = std::move(b);
  return v;
}

}  // namespace semimon
