#include "semimon/typology.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "semimon/error.hpp"

namespace semimon {

// ---------------------------------------------------------------------------
// FiniteQuotient

FiniteQuotient::FiniteQuotient(const Lattice& a, const Lattice& b, std::size_t cap) : a_(a) {
  const std::size_t k = a.rank();
  if (b.rank() != k) throw Error(ErrorKind::InvariantViolated, "quotient is not finite");
  std::vector<IntVector> coords;
  for (std::size_t i = 0; i < k; ++i) {
    auto c = a.coordinates(b.basis().row(i));
    if (!c) throw Error(ErrorKind::NotSublattice, "quotient of non-nested lattices");
    coords.push_back(std::move(*c));
  }
  SmithForm f = snf(IntMatrix::from_rows(coords, k));
  to_smith_ = f.v;
  from_smith_ = hnf(f.v).u * a.basis();
  for (std::size_t i = 0; i < k; ++i) {
    const Integer& d = f.s(i, i);
    if (!d.fits_ulong_p() || d > Integer(static_cast<unsigned long>(cap)) ||
        Integer(static_cast<unsigned long>(order_)) * d > Integer(static_cast<unsigned long>(cap)))
      throw Error(ErrorKind::TooLarge, "finite quotient exceeds " + std::to_string(cap) + " elements");
    moduli_.push_back(d.get_ui());
    order_ *= d.get_ui();
  }
}

std::size_t FiniteQuotient::class_of(std::span<const Integer> x) const {
  auto c = a_.coordinates(x);
  if (!c) throw Error(ErrorKind::OutOfRange, "vector outside the quotient's lattice");
  std::size_t index = 0, stride = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    Integer y = 0;
    for (std::size_t j = 0; j < c->size(); ++j) y += (*c)[j] * to_smith_(j, i);
    Integer r = y - floor_div(y, Integer(moduli_[i])) * moduli_[i];
    index += r.get_ui() * stride;
    stride *= moduli_[i];
  }
  return index;
}

IntVector FiniteQuotient::lift(std::size_t index) const {
  IntVector r(a_.ambient_dim());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const unsigned long y = index % moduli_[i];
    index /= moduli_[i];
    if (y == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += from_smith_(i, j) * y;
  }
  return r;
}

std::vector<bool> FiniteQuotient::subgroup(const std::vector<IntVector>& gens) const {
  std::vector<std::vector<unsigned long>> steps;
  for (const auto& g : gens) {
    std::size_t idx = class_of(g);
    std::vector<unsigned long> digits;
    for (auto m : moduli_) {
      digits.push_back(idx % m);
      idx /= m;
    }
    steps.push_back(std::move(digits));
  }
  auto add = [&](std::size_t idx, const std::vector<unsigned long>& d) {
    std::size_t out = 0, stride = 1;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      out += ((idx % moduli_[i] + d[i]) % moduli_[i]) * stride;
      idx /= moduli_[i];
      stride *= moduli_[i];
    }
    return out;
  };
  std::vector<bool> in(order_, false);
  std::vector<std::size_t> queue{0};
  in[0] = true;
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& s : steps) {
      std::size_t n = add(queue[q], s);
      if (!in[n]) {
        in[n] = true;
        queue.push_back(n);
      }
    }
  return in;
}

// ---------------------------------------------------------------------------
// Realizability

namespace {

// a = r + k c with c = e * (sum of rays of G), e the exponent of
// span(G)/Lambda_G, and k least with a in relint G.
IntVector interior_witness(const DecoratedCone& w, std::size_t base, const IntVector& r) {
  const FaceLattice& fl = w.faces();
  if (fl.face(base).dim == 0) return r;
  AbelianQuotient q = quotient_structure(fl.face(base).span, w.lambda(base));
  Integer e = q.invariant_factors.empty() ? Integer(1) : q.invariant_factors.back();
  IntVector c = scale(e, fl.ray_sum(base));
  const auto& forms = fl.cone().support_forms();
  const auto& zero = fl.face(base).zero_set;
  bool first = true;
  Integer k = 0;
  for (std::size_t j = 0; j < forms.size(); ++j) {
    if (std::binary_search(zero.begin(), zero.end(), j)) continue;
    Integer need = floor_div(-dot(forms[j], r), dot(forms[j], c)) + 1;
    if (first || need > k) k = need;
    first = false;
  }
  return add(r, scale(k, c));
}

void check_filter(const FaceLattice& fl, std::size_t base, const Filter& s) {
  if (!std::is_sorted(s.begin(), s.end()) || s.empty() || s.back() != fl.top())
    throw Error(ErrorKind::BadFilter, "filter must be sorted and contain the full cone");
  for (auto f : s)
    if (!fl.is_subface(base, f)) throw Error(ErrorKind::BadFilter, "filter face does not contain the base face");
  if (!is_up_closed(fl, s)) throw Error(ErrorKind::BadFilter, "filter is not up-closed");
}

}  // namespace

Realizability realizable(const DecoratedCone& w, std::size_t base, const Filter& s, const TypologyOptions& options) {
  const FaceLattice& fl = w.faces();
  check_filter(fl, base, s);
  Lattice a_g = fl.face(base).span;
  for (auto f : s) a_g = lattice_intersect(a_g, w.lambda(f));
  std::vector<Lattice> excluded;
  Lattice c_prime = a_g;
  for (auto f : fl.interval_above(base)) {
    if (std::binary_search(s.begin(), s.end(), f)) continue;
    excluded.push_back(lattice_intersect(a_g, w.lambda(f)));
    c_prime = lattice_intersect(c_prime, excluded.back());
  }
  FiniteQuotient q(a_g, c_prime, options.max_quotient);
  std::vector<bool> covered(q.order(), false);
  for (const auto& b : excluded) {
    auto sub = q.subgroup(b.basis_rows());
    for (std::size_t i = 0; i < q.order(); ++i)
      if (sub[i]) covered[i] = true;
  }
  Realizability out;
  for (std::size_t i = 0; i < q.order(); ++i)
    if (!covered[i]) {
      out.realizable = true;
      out.witness = interior_witness(w, base, q.lift(i));
      break;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Types

const CohomologyProfile& ProfileCache::get(const Filter& filter) {
  auto it = cache_.find(filter);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(filter, profile_of(cochain_complex(fl_, filter), primes_)).first->second;
}

namespace {

bool type_order(const CohomologyType& a, const CohomologyType& b) {
  return std::tie(a.base_face, a.filter) < std::tie(b.base_face, b.filter);
}

}  // namespace

std::vector<CohomologyType> enumerate_types(const DecoratedCone& w, const TypologyOptions& options) {
  const FaceLattice& fl = w.faces();
  ProfileCache cache(fl, options.primes);
  std::vector<CohomologyType> out;
  for (const auto& g : fl.faces()) {
    std::vector<std::size_t> interval = fl.interval_above(g.id);
    std::stable_sort(interval.begin(), interval.end(),
                     [&](std::size_t x, std::size_t y) { return fl.face(x).dim > fl.face(y).dim; });
    // Decide faces from the top down; a face may join only when all faces
    // covering it have joined.
    std::vector<Filter> filters;
    std::vector<bool> in(fl.size(), false);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == interval.size()) {
        Filter s;
        for (auto f : interval)
          if (in[f]) s.push_back(f);
        std::sort(s.begin(), s.end());
        filters.push_back(std::move(s));
        if (filters.size() > options.max_filters)
          throw Error(ErrorKind::TooLarge, "more than " + std::to_string(options.max_filters) +
                                               " filters above face " + std::to_string(g.id));
        return;
      }
      const std::size_t f = interval[i];
      const bool forced = f == fl.top();
      if (!forced) rec(i + 1);
      const auto& ups = fl.up(f);
      if (std::all_of(ups.begin(), ups.end(), [&](std::size_t u) { return in[u]; })) {
        in[f] = true;
        rec(i + 1);
        in[f] = false;
      }
    };
    rec(0);
    for (auto& s : filters) {
      CohomologyType t;
      t.base_face = g.id;
      Realizability r = realizable(w, g.id, s, options);
      t.realizable = r.realizable;
      t.witness = std::move(r.witness);
      t.profile = cache.get(s);
      t.filter = std::move(s);
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end(), type_order);
  return out;
}

std::vector<CohomologyType> realizable_types(const DecoratedCone& w, const TypologyOptions& options) {
  const FaceLattice& fl = w.faces();
  ProfileCache cache(fl, options.primes);
  std::vector<CohomologyType> out;
  for (const auto& g : fl.faces()) {
    const std::vector<std::size_t> interval = fl.interval_above(g.id);
    // Every Lambda_F above G contains Lambda_G, so the filter only depends on
    // the class of a modulo Lambda_G, and every class meets relint G.
    FiniteQuotient q(lattice_intersect(g.span, w.group()), w.lambda(g.id), options.max_quotient);
    std::map<Filter, IntVector> seen;
    for (std::size_t i = 0; i < q.order(); ++i) {
      IntVector r = q.lift(i);
      Filter s;
      for (auto f : interval)
        if (w.lambda(f).contains(r)) s.push_back(f);
      if (!seen.count(s)) seen.emplace(std::move(s), interior_witness(w, g.id, r));
    }
    for (auto& [s, a] : seen) {
      CohomologyType t;
      t.base_face = g.id;
      t.filter = s;
      t.realizable = true;
      t.witness = a;
      t.profile = cache.get(s);
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end(), type_order);
  return out;
}

const FieldDepth& DepthReport::at(Field f) const {
  for (const auto& d : fields)
    if (d.field == f) return d;
  throw Error(ErrorKind::OutOfRange, "depth not computed over " + f.name());
}

DepthReport depth_report(const DecoratedCone& w, const std::vector<Field>& fields, const TypologyOptions& options) {
  TypologyOptions opts = options;
  for (const auto& f : fields)
    if (!f.is_rationals() && std::find(opts.primes.begin(), opts.primes.end(), f.characteristic) == opts.primes.end())
      opts.primes.push_back(f.characteristic);
  const std::vector<CohomologyType> types = realizable_types(w, opts);
  DepthReport report;
  report.rank = w.rank();
  report.type_count = types.size();
  std::set<unsigned long> torsion;
  for (const auto& t : types) torsion.insert(t.profile.torsion_primes.begin(), t.profile.torsion_primes.end());
  report.torsion_primes.assign(torsion.begin(), torsion.end());
  for (const auto& field : fields) {
    FieldDepth fd;
    fd.field = field;
    fd.depth = report.rank;
    std::vector<bool> witnessed(report.rank, false);
    for (const auto& t : types) {
      const auto dims = t.profile.dims(field);
      for (std::size_t i = 0; i < report.rank; ++i) {
        if (dims[i] == 0) continue;
        fd.depth = std::min(fd.depth, i);
        if (!witnessed[i]) {
          witnessed[i] = true;
          fd.witnesses.emplace_back(i, *t.witness);
        }
      }
    }
    std::sort(fd.witnesses.begin(), fd.witnesses.end());
    fd.cohen_macaulay = fd.depth == report.rank;
    if (!fd.cohen_macaulay) report.not_cm.push_back(field);
    report.fields.push_back(std::move(fd));
  }
  return report;
}

}  // namespace semimon
