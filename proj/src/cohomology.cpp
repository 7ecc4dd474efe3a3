#include "semimon/cohomology.hpp"

#include <algorithm>
#include <set>

#include "semimon/error.hpp"

namespace semimon {

std::string Field::name() const { return is_rationals() ? "Q" : "F" + std::to_string(characteristic); }

bool is_up_closed(const FaceLattice& fl, const Filter& filter) {
  for (auto f : filter)
    for (auto g : fl.up(f))
      if (!std::binary_search(filter.begin(), filter.end(), g)) return false;
  return true;
}

Filter filter_at(const DecoratedCone& w, std::span<const Integer> a) {
  if (a.size() != w.ambient_dim() || !w.cone().contains(a) || !w.group().contains(a))
    throw Error(ErrorKind::OutOfRange, "degree outside cone or group: " + to_string(a));
  const FaceLattice& fl = w.faces();
  const std::size_t base = minimal_face(fl, a);
  Filter out;
  for (auto f : fl.interval_above(base))
    if (w.lambda(f).contains(a)) out.push_back(f);
  if (!is_up_closed(fl, out)) throw Error(ErrorKind::InvariantViolated, "filter is not up-closed");
  return out;
}

CochainComplex cochain_complex(const FaceLattice& fl, const Filter& filter) {
  return cochain_complex(fl, filter, fl.epsilon_table());
}

CochainComplex cochain_complex(const FaceLattice& fl, const Filter& filter,
                               const std::vector<std::vector<int>>& epsilon) {
  if (!std::is_sorted(filter.begin(), filter.end()) || !is_up_closed(fl, filter))
    throw Error(ErrorKind::NotUpClosed, "filter is not up-closed");
  CochainComplex c;
  c.top = fl.dim();
  c.cells.assign(c.top + 1, {});
  std::vector<std::size_t> position(fl.size());
  for (auto f : filter) {
    position[f] = c.cells[fl.face(f).dim].size();
    c.cells[fl.face(f).dim].push_back(f);
  }
  for (std::size_t t = 0; t < c.top; ++t) {
    SparseMatrix d(c.cells[t + 1].size(), c.cells[t].size());
    for (std::size_t j = 0; j < c.cells[t].size(); ++j) {
      const std::size_t g = c.cells[t][j];
      const auto& ups = fl.up(g);
      for (std::size_t k = 0; k < ups.size(); ++k)
        d.row_entries[position[ups[k]]].emplace_back(j, epsilon[g][k]);
    }
    c.differential.push_back(std::move(d));
  }
  return c;
}

bool squares_to_zero(const CochainComplex& c) {
  for (std::size_t t = 0; t + 1 < c.differential.size(); ++t)
    if (multiply(c.differential[t + 1], c.differential[t]).nonzeros() != 0) return false;
  return true;
}

namespace {

std::vector<std::size_t> dims_from_ranks(const CochainComplex& c, const std::vector<std::size_t>& ranks) {
  std::vector<std::size_t> dims(c.top + 1);
  for (std::size_t t = 0; t <= c.top; ++t) {
    std::size_t r = c.cells[t].size();
    if (t < ranks.size()) r -= ranks[t];
    if (t > 0) r -= ranks[t - 1];
    dims[t] = r;
  }
  return dims;
}

}  // namespace

std::vector<std::size_t> cohomology_dims(const CochainComplex& c, Field field) {
  std::vector<std::size_t> ranks;
  for (const auto& d : c.differential)
    ranks.push_back(field.is_rationals() ? eliminate_over_integers(d).rank
                                         : rank_mod_p(d, static_cast<std::uint32_t>(field.characteristic)));
  return dims_from_ranks(c, ranks);
}

std::vector<unsigned long> torsion_primes(const CochainComplex& c) {
  std::set<unsigned long> primes;
  for (const auto& d : c.differential)
    for (const auto& f : eliminate_over_integers(d).invariant_factors)
      for (auto p : prime_factors(f)) primes.insert(p);
  return {primes.begin(), primes.end()};
}

std::vector<std::size_t> CohomologyProfile::dims(Field field) const {
  if (field.is_rationals()) return dims_q;
  auto it = dims_p.find(field.characteristic);
  if (it != dims_p.end()) return it->second;
  if (std::binary_search(torsion_primes.begin(), torsion_primes.end(), field.characteristic))
    throw Error(ErrorKind::OutOfRange, "profile lacks dimensions over " + field.name());
  return dims_q;
}

std::size_t CohomologyProfile::first_nonzero(Field field) const {
  auto d = dims(field);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) return i;
  return d.size();
}

CohomologyProfile profile_of(const CochainComplex& c, const std::vector<unsigned long>& primes) {
  CohomologyProfile p;
  std::vector<std::size_t> ranks;
  std::set<unsigned long> torsion;
  for (const auto& d : c.differential) {
    IntegerElimination e = eliminate_over_integers(d);
    ranks.push_back(e.rank);
    for (const auto& f : e.invariant_factors)
      for (auto q : prime_factors(f)) torsion.insert(q);
  }
  p.dims_q = dims_from_ranks(c, ranks);
  p.torsion_primes.assign(torsion.begin(), torsion.end());
  std::set<unsigned long> wanted(primes.begin(), primes.end());
  wanted.insert(torsion.begin(), torsion.end());
  for (auto q : wanted) p.dims_p[q] = cohomology_dims(c, Field::prime(q));
  return p;
}

CohomologyProfile local_cohomology_at(const DecoratedCone& w, std::span<const Integer> a,
                                      const std::vector<unsigned long>& primes) {
  return profile_of(cochain_complex(w.faces(), filter_at(w, a)), primes);
}

bool top_support_member(const DecoratedCone& w, std::span<const Integer> a) {
  if (a.size() != w.ambient_dim() || !w.cone().contains(a) || !w.group().contains(a)) return false;
  for (auto f : w.faces().facets())
    if (w.lambda(f).contains(a)) return false;
  return true;
}

}  // namespace semimon
