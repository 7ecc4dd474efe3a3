#include "semimon/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "semimon/error.hpp"
#include "semimon/sparse.hpp"

namespace semimon {

namespace {

Lattice even_last_coordinate(std::size_t d) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector r(d);
    r[i] = i + 1 == d ? 2 : 1;
    rows.push_back(std::move(r));
  }
  return lattice_from_rows(d, rows);
}

IntVector unit(std::size_t d, std::size_t i) {
  IntVector e(d);
  e[i] = 1;
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// Square pyramid models

DecoratedCone builtin(std::string_view name) {
  std::vector<std::vector<std::size_t>> even;
  if (name == "pyramid-7.1")
    even = {{0, 1, 2}, {0, 3, 4}};
  else if (name == "pyramid-7.3")
    even = {{0, 1, 2}};
  else
    throw Error(ErrorKind::OutOfRange, "unknown builtin model: " + std::string(name));
  const std::vector<IntVector> rays{make_vector({0, 0, 1, 1}), make_vector({-1, 1, 0, 1}),
                                    make_vector({-1, -1, 0, 1}), make_vector({1, -1, 0, 1}),
                                    make_vector({1, 1, 0, 1})};
  auto fl = std::make_shared<const FaceLattice>(dual_description(rays, 4));
  std::vector<Lattice> facet_lattices;
  for (std::size_t f = 0; f < fl->cone().support_forms().size(); ++f) {
    auto on = fl->cone().facet_rays(f).indices();
    bool restricted = std::find(even.begin(), even.end(), on) != even.end();
    facet_lattices.push_back(restricted ? even_last_coordinate(4) : Lattice::full(4));
  }
  return model_from_facet_lattices(fl, facet_lattices, Lattice::full(4), unit(4, 3));
}

std::vector<std::string> builtin_names() { return {"pyramid-7.1", "pyramid-7.3"}; }

// ---------------------------------------------------------------------------
// Simplicial complexes

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<long>>& facets) {
  SimplicialComplex s;
  std::set<long> labels;
  for (const auto& f : facets) labels.insert(f.begin(), f.end());
  s.labels_.assign(labels.begin(), labels.end());
  std::set<std::vector<std::size_t>> sets;
  for (const auto& f : facets) {
    std::vector<std::size_t> v;
    for (long x : f)
      v.push_back(static_cast<std::size_t>(std::lower_bound(s.labels_.begin(), s.labels_.end(), x) - s.labels_.begin()));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (!v.empty()) sets.insert(std::move(v));
  }
  for (const auto& f : sets) {
    bool covered = std::any_of(sets.begin(), sets.end(), [&](const auto& g) {
      return g != f && std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (!covered) s.facets_.push_back(f);
  }
  return s;
}

bool SimplicialComplex::contains(const std::vector<std::size_t>& face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const auto& f) { return std::includes(f.begin(), f.end(), face.begin(), face.end()); });
}

long SimplicialComplex::dim() const {
  long d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<long>(f.size()) - 1);
  return d;
}

std::vector<std::vector<std::size_t>> SimplicialComplex::faces_of_dim(long j) const {
  std::set<std::vector<std::size_t>> out;
  if (j < -1) return {};
  const auto k = static_cast<std::size_t>(j + 1);
  for (const auto& f : facets_) {
    if (f.size() < k) continue;
    std::vector<bool> pick(f.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::size_t> face;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (pick[i]) face.push_back(f[i]);
      out.insert(std::move(face));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  if (k == 0) out.insert({});
  return {out.begin(), out.end()};
}

std::vector<std::vector<std::size_t>> SimplicialComplex::minimal_nonfaces() const {
  const std::size_t n = vertex_count();
  if (n > 24) throw Error(ErrorKind::TooLarge, "too many vertices");
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> g;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) g.push_back(i);
    if (contains(g)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < g.size() && minimal; ++i) {
      std::vector<std::size_t> h = g;
      h.erase(h.begin() + static_cast<long>(i));
      minimal = contains(h);
    }
    if (minimal) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SimplicialHomology::at(long j) const {
  if (j < -1 || j + 1 >= static_cast<long>(reduced.size())) return 0;
  return reduced[static_cast<std::size_t>(j + 1)];
}

SimplicialHomology simplicial_homology(const SimplicialComplex& delta, Field field) {
  const long top = delta.dim();
  std::vector<std::vector<std::vector<std::size_t>>> faces;
  for (long j = -1; j <= top; ++j) faces.push_back(delta.faces_of_dim(j));
  // ranks[j + 1] = rank of the boundary C_j -> C_{j-1}; zero for j = -1.
  std::vector<std::size_t> ranks(faces.size() + 1, 0);
  std::set<unsigned long> torsion;
  for (long j = 0; j <= top; ++j) {
    const auto& cols = faces[static_cast<std::size_t>(j + 1)];
    const auto& rows = faces[static_cast<std::size_t>(j)];
    std::map<std::vector<std::size_t>, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
    SparseMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t i = 0; i < cols[c].size(); ++i) {
        std::vector<std::size_t> side = cols[c];
        side.erase(side.begin() + static_cast<long>(i));
        m.row_entries[row_index.at(side)].emplace_back(c, i % 2 == 0 ? 1 : -1);
      }
    IntegerElimination e = eliminate_over_integers(m);
    for (const auto& f : e.invariant_factors)
      for (auto p : prime_factors(f)) torsion.insert(p);
    ranks[static_cast<std::size_t>(j + 1)] =
        field.is_rationals() ? e.rank : rank_mod_p(m, static_cast<std::uint32_t>(field.characteristic));
  }
  SimplicialHomology h;
  for (std::size_t k = 0; k < faces.size(); ++k) h.reduced.push_back(faces[k].size() - ranks[k] - ranks[k + 1]);
  h.torsion_primes.assign(torsion.begin(), torsion.end());
  return h;
}

// ---------------------------------------------------------------------------
// The construction

namespace {

// Coordinates (x_1..x_{n-1}, h, s): a pyramid of height 1 over n times the
// standard simplex, homogenized by s.
struct PolytopeData {
  std::vector<IntVector> inequalities;  // base, n sides, then one per planed non-face
  std::vector<IntVector> vertices;
  std::vector<BitSet> tight;  // per inequality: vertices on it
};

IntVector side_form(std::size_t n, std::size_t v) {
  IntVector f(n + 1);
  if (v + 1 < n) {
    f[v] = 1;
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) f[i] = -1;
    f[n] = static_cast<long>(n);
  }
  f[n - 1] -= 1;
  return f;
}

std::size_t vector_rank(const std::vector<IntVector>& rows) { return independent_rows(rows).size(); }

std::vector<IntVector> select(const std::vector<IntVector>& all, const BitSet& which) {
  std::vector<IntVector> out;
  for (auto i : which.indices()) out.push_back(all[i]);
  return out;
}

// Returns an empty string when every check passes, else the first failure.
std::string verify_polytope(const SimplicialComplex& delta, const PolytopeData& p) {
  const std::size_t n = delta.vertex_count();
  const std::size_t nv = p.vertices.size();
  std::set<std::vector<std::size_t>> distinct;
  for (std::size_t f = 0; f < p.inequalities.size(); ++f) {
    if (vector_rank(select(p.vertices, p.tight[f])) != n) return "inequality " + std::to_string(f) + " is not a facet";
    if (!distinct.insert(p.tight[f].indices()).second) return "inequality " + std::to_string(f) + " repeats a facet";
  }
  for (std::size_t x = 0; x < nv; ++x) {
    std::size_t count = 0;
    for (const auto& t : p.tight) count += t.test(x) ? 1 : 0;
    if (count != n) return "vertex " + std::to_string(x) + " lies on " + std::to_string(count) + " facets";
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> face;
    BitSet on(nv);
    for (std::size_t x = 0; x < nv; ++x) on.set(x);
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1U) {
        face.push_back(v);
        on &= p.tight[1 + v];
      }
    const bool in_delta = delta.contains(face);
    if (!in_delta) {
      if (!on.none()) return "non-face " + std::to_string(mask) + " survives";
      continue;
    }
    if (on.none()) return "face " + std::to_string(mask) + " was planed off";
    if (vector_rank(select(p.vertices, on)) != n - face.size() + 1)
      return "face " + std::to_string(mask) + " has the wrong dimension";
    for (std::size_t f = 0; f < p.inequalities.size(); ++f) {
      const bool contains_face = on.is_subset_of(p.tight[f]);
      const bool expected = f >= 1 && f <= n && (mask >> (f - 1) & 1U);
      if (contains_face != expected) return "face " + std::to_string(mask) + " lies on an unexpected facet";
    }
  }
  return {};
}

PolytopeData planed_polytope(const SimplicialComplex& delta, const Integer& displacement,
                             const std::vector<std::vector<std::size_t>>& nonfaces) {
  const std::size_t n = delta.vertex_count();
  PolytopeData p;
  p.inequalities.push_back(unit(n + 1, n - 1));
  for (std::size_t v = 0; v < n; ++v) p.inequalities.push_back(side_form(n, v));
  Integer factor = displacement;
  for (const auto& g : nonfaces) {
    // sum over v in G of side_v >= 1 / (scale * 3^k), cleared of denominators
    IntVector f(n + 1);
    for (auto v : g) f = add(f, side_form(n, v));
    f = scale(factor, f);
    f[n] -= 1;
    p.inequalities.push_back(primitive(std::move(f)));
    factor *= 3;
  }
  std::vector<IntVector> constraints = p.inequalities;
  constraints.push_back(unit(n + 1, n));
  p.vertices = extreme_rays_of(constraints, n + 1);
  std::sort(p.vertices.begin(), p.vertices.end());
  for (const auto& f : p.inequalities) {
    BitSet t(p.vertices.size());
    for (std::size_t x = 0; x < p.vertices.size(); ++x)
      if (sgn(dot(f, p.vertices[x])) == 0) t.set(x);
    p.tight.push_back(std::move(t));
  }
  return p;
}

}  // namespace

ConstructionResult delta_construct(const SimplicialComplex& delta) {
  const std::size_t n = delta.vertex_count();
  if (n == 0) throw Error(ErrorKind::OutOfRange, "the complex needs at least one vertex");
  const auto nonfaces = delta.minimal_nonfaces();
  std::vector<std::string> log;
  log.push_back("vertices " + std::to_string(n) + ", minimal non-faces " + std::to_string(nonfaces.size()));

  PolytopeData p;
  Integer displacement = 2 * static_cast<unsigned long>(n);
  bool ok = false;
  for (int attempt = 0; attempt < 12 && !ok; ++attempt, displacement *= 2) {
    p = planed_polytope(delta, displacement, nonfaces);
    bool bounded = std::all_of(p.vertices.begin(), p.vertices.end(), [&](const IntVector& x) { return sgn(x[n]) > 0; });
    std::string failure = bounded ? verify_polytope(delta, p) : "unbounded";
    log.push_back("displacement scale " + displacement.get_str() + ": " + (failure.empty() ? "verified" : failure));
    ok = failure.empty();
  }
  if (!ok) throw Error(ErrorKind::VerificationFailed, "no displacement scale passed verification");
  log.push_back("polytope vertices " + std::to_string(p.vertices.size()) + ", facets " +
                std::to_string(p.inequalities.size()));

  // Cone over the pyramid with apex v over the polytope at height z = 0;
  // coordinates (y, z, w) with w the degree.
  const std::size_t d = n + 2;
  std::vector<IntVector> gens;
  for (const auto& x : p.vertices) {
    IntVector g(d);
    for (std::size_t i = 0; i < n; ++i) g[i] = x[i];
    g[d - 1] = x[n];
    gens.push_back(primitive(std::move(g)));
  }
  IntVector apex = unit(d, n);
  apex[d - 1] = 1;
  gens.push_back(apex);
  auto fl = std::make_shared<const FaceLattice>(dual_description(gens, d));
  const RationalCone& cone = fl->cone();
  if (cone.dim() != d || cone.extreme_rays().size() != gens.size() ||
      cone.support_forms().size() != p.inequalities.size() + 1)
    throw Error(ErrorKind::VerificationFailed, "cone over the pyramid has unexpected shape");

  const std::size_t apex_index = gens.size() - 1;
  const Lattice even = even_last_coordinate(d);
  std::vector<Lattice> facet_lattices;
  std::size_t full_count = 0;
  for (std::size_t f = 0; f < cone.support_forms().size(); ++f) {
    const BitSet& on = cone.facet_rays(f);
    bool full = false;
    if (on.test(apex_index)) {
      for (std::size_t v = 0; v < n && !full; ++v) {
        bool same = true;
        for (std::size_t x = 0; x < p.vertices.size() && same; ++x) same = on.test(x) == p.tight[1 + v].test(x);
        full = same;
      }
    }
    full_count += full ? 1 : 0;
    facet_lattices.push_back(full ? Lattice::full(d) : even);
  }
  if (full_count != n) throw Error(ErrorKind::VerificationFailed, "vertex facets not identified");
  log.push_back("rank " + std::to_string(d) + ", faces " + std::to_string(fl->size()));

  ConstructionResult r{model_from_facet_lattices(fl, facet_lattices, Lattice::full(d), unit(d, d - 1)), apex, d,
                       p.vertices, std::move(log)};
  return r;
}

bool verify_homology_correspondence(const ConstructionResult& result, const SimplicialComplex& delta, Field field) {
  std::vector<unsigned long> primes;
  if (!field.is_rationals()) primes.push_back(field.characteristic);
  const auto dims = local_cohomology_at(result.model, result.distinguished_degree, primes).dims(field);
  const SimplicialHomology h = simplicial_homology(delta, field);
  const long d = static_cast<long>(result.rank);
  for (long i = 0; i <= d; ++i)
    if (dims[static_cast<std::size_t>(i)] != h.at(d - i - 1)) return false;
  return true;
}

}  // namespace semimon
