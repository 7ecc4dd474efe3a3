#pragma once

// Seeded random decorated cones of rank 2 to 4 over small lattice polytopes:
// restrictions of index 2 or 3 on facets or lower faces, and normal models
// over random full-rank groups.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "semimon/monoid.hpp"

namespace corpus {

using namespace semimon;

struct Entry {
  std::string name;
  DecoratedCone model;
};

inline std::vector<IntVector> homogenize(const std::vector<std::vector<long>>& points) {
  std::vector<IntVector> out;
  for (const auto& p : points) {
    IntVector v;
    for (long x : p) v.emplace_back(x);
    v.emplace_back(1);
    out.push_back(std::move(v));
  }
  return out;
}

struct Base {
  std::string name;
  std::vector<IntVector> rays;
};

inline std::vector<Base> bases() {
  return {
      {"segment1", homogenize({{0}, {1}})},
      {"segment2", homogenize({{0}, {2}})},
      {"segment3", homogenize({{0}, {3}})},
      {"triangle", homogenize({{0, 0}, {1, 0}, {0, 1}})},
      {"triangle2", homogenize({{0, 0}, {2, 0}, {0, 2}})},
      {"square", homogenize({{0, 0}, {1, 0}, {0, 1}, {1, 1}})},
      {"pentagon", homogenize({{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 1}})},
      {"hexagon", homogenize({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}})},
      {"tetrahedron", homogenize({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})},
      {"pyramid", homogenize({{0, 0, 1}, {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}, {1, 1, 0}})},
      {"octahedron", homogenize({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}})},
      {"prism", homogenize({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}})},
      {"bipyramid", homogenize({{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {0, 0, -1}})},
  };
}

/// {x in Z^m : l.x = 0 mod p} for a random l.
inline Lattice congruence_lattice(std::size_t m, unsigned long p, std::mt19937& rng) {
  std::uniform_int_distribution<long> coef(0, static_cast<long>(p) - 1);
  std::vector<long> l(m);
  do {
    for (auto& x : l) x = coef(rng);
  } while (std::all_of(l.begin(), l.end(), [](long x) { return x == 0; }));
  std::size_t j = 0;
  while (l[j] == 0) ++j;
  long inv = 1;
  while ((inv * l[j]) % static_cast<long>(p) != 1) ++inv;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < m; ++i) {
    IntVector e(m);
    e[i] = static_cast<long>(p);
    rows.push_back(e);
    if (i == j) continue;
    IntVector f(m);
    f[i] = 1;
    f[j] = -((l[i] * inv) % static_cast<long>(p));
    rows.push_back(f);
  }
  return lattice_from_rows(m, rows);
}

/// Restricts face g and everything below it to a congruence sublattice.
inline void restrict_face(const FaceLattice& fl, std::vector<Lattice>& lambda, std::size_t g, unsigned long p,
                          std::mt19937& rng) {
  const Lattice sub = congruence_lattice(fl.cone().ambient_dim(), p, rng);
  for (const auto& h : fl.faces())
    if (h.id != fl.apex() && fl.is_subface(h.id, g)) lambda[h.id] = lattice_intersect(lambda[h.id], sub);
}

inline IntVector last_coordinate(std::size_t m) {
  IntVector d(m);
  d[m - 1] = 1;
  return d;
}

/// count models; restrictions hit facets (probability 1/2) or lower faces.
inline std::vector<Entry> decorated(std::size_t count, unsigned seed, std::size_t max_rank = 4) {
  std::mt19937 rng(seed);
  std::vector<Base> pool;
  for (auto& b : bases())
    if (b.rays[0].size() <= max_rank) pool.push_back(b);
  std::vector<Entry> out;
  for (std::size_t k = 0; k < count; ++k) {
    const Base& b = pool[k % pool.size()];
    const std::size_t m = b.rays[0].size();
    auto fl = std::make_shared<const FaceLattice>(dual_description(b.rays, m));
    std::vector<Lattice> lambda;
    for (const auto& f : fl->faces()) lambda.push_back(f.span);
    std::string name = b.name;
    const std::size_t restrictions = 1 + rng() % 3;
    for (std::size_t r = 0; r < restrictions; ++r) {
      const unsigned long p = rng() % 2 == 0 ? 2 : 3;
      std::size_t g;
      if (rng() % 2 == 0) {
        g = fl->facet(rng() % fl->facets().size());
      } else {
        do g = 1 + rng() % (fl->size() - 2);
        while (fl->face(g).dim == fl->dim() - 1 && fl->dim() > 2);
      }
      restrict_face(*fl, lambda, g, p, rng);
      name += "/" + std::to_string(g) + "@" + std::to_string(p);
    }
    out.push_back({name, DecoratedCone(fl, std::move(lambda), last_coordinate(m))});
  }
  return out;
}

/// Lambda_F = span(F) ∩ L for a random full-rank L of index 1, 2 or 3.
inline std::vector<Entry> normal(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  const auto pool = bases();
  std::vector<Entry> out;
  for (std::size_t k = 0; k < count; ++k) {
    const Base& b = pool[(k * 5 + 3) % pool.size()];
    const std::size_t m = b.rays[0].size();
    auto fl = std::make_shared<const FaceLattice>(dual_description(b.rays, m));
    const unsigned long p = 1 + rng() % 3;
    const Lattice group = p == 1 ? Lattice::full(m) : congruence_lattice(m, p, rng);
    std::vector<Lattice> lambda;
    for (const auto& f : fl->faces()) lambda.push_back(lattice_intersect(f.span, group));
    out.push_back({b.name + "/normal@" + std::to_string(p), DecoratedCone(fl, std::move(lambda), last_coordinate(m))});
  }
  return out;
}

}  // namespace corpus
