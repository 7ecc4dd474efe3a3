#include "semimon/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "semimon/error.hpp"

namespace semimon {

namespace {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json verdict(Json value, const std::string& method, Json witness = nullptr) {
  return Json{{"value", std::move(value)}, {"method", method}, {"witness", std::move(witness)}};
}

std::string bounded(const Integer& d) { return "bounded(" + d.get_str() + ")"; }

Json primes_json(const std::vector<unsigned long>& primes) {
  Json a = Json::array();
  for (auto p : primes) a.push_back(p);
  return a;
}

Json rows_json(const std::vector<IntVector>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(to_json(r));
  return a;
}

Json dims_json(const std::vector<std::size_t>& dims) {
  Json a = Json::array();
  for (auto d : dims) a.push_back(d);
  return a;
}

std::vector<unsigned long> field_primes(const std::vector<Field>& fields) {
  std::vector<unsigned long> primes;
  for (const auto& f : fields)
    if (!f.is_rationals()) primes.push_back(f.characteristic);
  return primes;
}

// Deterministic degrees to probe: ray sums of faces, their doubles and their
// sums with single rays, kept when they lie in Lambda_C.
std::vector<IntVector> sample_degrees(const DecoratedCone& w, std::size_t cap) {
  const FaceLattice& fl = w.faces();
  const auto& rays = fl.cone().extreme_rays();
  std::set<IntVector> seen;
  std::vector<IntVector> out;
  auto offer = [&](IntVector x) {
    if (out.size() < cap && w.group().contains(x) && seen.insert(x).second) out.push_back(std::move(x));
  };
  offer(IntVector(w.ambient_dim()));
  for (const auto& f : fl.faces()) {
    const IntVector s = fl.ray_sum(f.id);
    offer(s);
    offer(scale(Integer(2), s));
    for (const auto& r : rays) offer(add(s, r));
  }
  return out;
}

struct Check {
  Json list = Json::array();
  bool passed = true;

  void add(const std::string& name, bool ok, Json detail = nullptr) {
    passed = passed && ok;
    list.push_back(Json{{"name", name}, {"passed", ok}, {"detail", std::move(detail)}});
  }
};

void model_checks(const DecoratedCone& w, const AnalysisOptions& options, Check& check) {
  const FaceLattice& fl = w.faces();
  const RationalCone& cone = fl.cone();

  check.add("diamond_condition", fl.diamond_condition_holds(fl.epsilon_table()));

  {
    const RationalCone back = cone_from_inequalities(cone.support_forms(), cone.ambient_dim());
    bool ok = true;
    if (cone.dim() == cone.ambient_dim()) {
      auto a = back.extreme_rays(), b = cone.extreme_rays();
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      ok = a == b;
    }
    const RationalCone again = dual_description(cone.extreme_rays(), cone.ambient_dim());
    ok = ok && again.support_forms() == cone.support_forms() && again.extreme_rays() == cone.extreme_rays();
    check.add("dual_description_round_trip", ok);
  }

  TypologyOptions topts = options.typology;
  for (auto p : field_primes(options.fields))
    if (std::find(topts.primes.begin(), topts.primes.end(), p) == topts.primes.end()) topts.primes.push_back(p);
  const std::vector<CohomologyType> types = realizable_types(w, topts);

  {
    bool ok = true;
    Json bad = nullptr;
    // Every up-set, realizable or not; refuses past max_filters.
    const std::vector<CohomologyType> all = enumerate_types(w, topts);
    for (const auto& t : all) {
      if (!squares_to_zero(cochain_complex(fl, t.filter))) {
        ok = false;
        bad = face_json(fl, t.base_face);
        break;
      }
    }
    check.add("differential_squares_to_zero", ok, Json{{"up_sets", all.size()}, {"base_face", bad}});
  }

  {
    const FaceLattice other(cone, IncidenceConvention::LastRays);
    bool ok = other.diamond_condition_holds(other.epsilon_table());
    Json bad = nullptr;
    for (const auto& t : types) {
      if (!ok) break;
      const CohomologyProfile p = profile_of(cochain_complex(other, t.filter), topts.primes);
      if (!(p == t.profile)) {
        ok = false;
        bad = to_json(*t.witness);
      }
    }
    check.add("incidence_convention_independence", ok, Json{{"witness", bad}});
  }

  {
    const auto samples = sample_degrees(w, 300);
    bool partition_ok = true, support_ok = true;
    Json bad = nullptr;
    for (const auto& a : samples) {
      const std::size_t base = minimal_face(fl, a);
      const Filter filter = filter_at(w, a);
      std::size_t hits = 0;
      const CohomologyType* hit = nullptr;
      for (const auto& t : types)
        if (t.base_face == base && t.filter == filter) {
          ++hits;
          hit = &t;
        }
      if (hits != 1 || !(hit->profile == local_cohomology_at(w, a, topts.primes))) {
        if (partition_ok) bad = to_json(a);
        partition_ok = false;
      }
      const bool top_only = filter.size() == 1 && filter[0] == fl.top();
      if (top_support_member(w, a) != top_only) support_ok = false;
    }
    check.add("fiber_partition", partition_ok, Json{{"samples", samples.size()}, {"witness", bad}});
    check.add("top_support_consistency", support_ok);
  }

  if (fl.size() <= options.depth_bounds_max_faces) {
    for (const auto& field : options.fields) {
      const DepthBounds b = depth_bounds(w, field, options.typology);
      check.add("depth_chain_" + field.name(), b.chain_holds,
                Json{{"depth", b.depth}, {"c_k", b.c_k}, {"n", b.n}});
    }
  }
}

}  // namespace

std::vector<Field> parse_fields(const std::string& text) {
  std::vector<Field> fields;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok == "q" || tok == "Q" || tok == "0") {
      fields.push_back(Field::rationals());
      continue;
    }
    Integer p;
    if (tok.empty() || p.set_str(tok, 10) != 0 || sgn(p) <= 0 || !p.fits_ulong_p())
      throw Error(ErrorKind::ParseError, "bad field: " + tok);
    const auto factors = prime_factors(p);
    if (factors.size() != 1 || factors[0] != p.get_ui()) throw Error(ErrorKind::ParseError, "not a prime: " + tok);
    fields.push_back(Field::prime(p.get_ui()));
  }
  if (fields.empty()) throw Error(ErrorKind::ParseError, "no fields given");
  std::sort(fields.begin(), fields.end());
  fields.erase(std::unique(fields.begin(), fields.end()), fields.end());
  return fields;
}

IntVector parse_point(const std::string& text) {
  IntVector v;
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  for (std::string tok; in >> tok;) {
    Integer x;
    if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
    if (tok.empty() || x.set_str(tok, 10) != 0) throw Error(ErrorKind::ParseError, "not an integer: " + tok);
    v.push_back(x);
  }
  return v;
}

Json to_json(std::span<const Integer> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

Json face_json(const FaceLattice& fl, std::size_t face) {
  Json a = Json::array();
  for (auto r : fl.face(face).rays.indices()) a.push_back(r);
  return a;
}

Json analyze_model(const DecoratedCone& w, const AnalysisOptions& options) {
  const FaceLattice& fl = w.faces();
  Json r;
  r["input"] = Json{{"kind", "model"},
                    {"ambient", w.ambient_dim()},
                    {"extreme_rays", rows_json(fl.cone().extreme_rays())},
                    {"degree_form", to_json(w.degree_form())},
                    {"group", rows_json(w.group().basis_rows())}};
  r["rank"] = w.rank();
  r["faces"] = fl.size();
  r["support_forms"] = rows_json(fl.cone().support_forms());

  const S2Verdict s2 = s2_lattice_test(w);
  r["s2"] = verdict(s2.holds, "exact", s2.failing_face ? face_json(fl, *s2.failing_face) : Json(nullptr));

  const DepthReport depth = depth_report(w, options.fields, options.typology);
  r["types"] = depth.type_count;
  Json dj = Json::object();
  Json cmj = Json::object();
  bool cm_somewhere = false;
  for (const auto& fd : depth.fields) {
    Json wit = Json::array();
    for (const auto& [i, a] : fd.witnesses) wit.push_back(Json{{"i", i}, {"degree", to_json(scale(Integer(-1), a))}});
    dj[fd.field.name()] = verdict(fd.depth, "exact", std::move(wit));
    Json cw = nullptr;
    if (!fd.witnesses.empty())
      cw = Json{{"i", fd.witnesses[0].first}, {"degree", to_json(scale(Integer(-1), fd.witnesses[0].second))}};
    cmj[fd.field.name()] = verdict(fd.cohen_macaulay, "exact", std::move(cw));
    cm_somewhere = cm_somewhere || fd.cohen_macaulay;
  }
  r["depth"] = std::move(dj);
  r["cohen_macaulay"] = std::move(cmj);
  r["torsion_primes"] = verdict(primes_json(depth.torsion_primes), "exact");
  r["f_bad_primes"] = verdict(primes_json(f_bad_primes(w)), "exact");

  Json gj = Json::object();
  std::optional<GorensteinVerdict> g;
  if (cm_somewhere) g = gorenstein_check(w, true);
  for (const auto& fd : depth.fields) {
    if (!fd.cohen_macaulay) {
      gj[fd.field.name()] = Json{{"value", false}, {"method", "exact"}, {"witness", nullptr},
                                 {"reason", "not Cohen-Macaulay"}};
      continue;
    }
    Json gamma = Json::array();
    for (const auto& x : g->gamma) gamma.push_back(integer_json(x));
    gj[fd.field.name()] = Json{{"value", g->gorenstein},
                               {"method", "exact"},
                               {"witness", g->b ? to_json(*g->b) : Json(nullptr)},
                               {"gamma", std::move(gamma)},
                               {"reason", g->reason}};
  }
  r["gorenstein"] = std::move(gj);

  if (fl.size() <= options.depth_bounds_max_faces) {
    Json bj = Json::object();
    for (const auto& field : options.fields) {
      const DepthBounds b = depth_bounds(w, field, options.typology);
      bj[field.name()] = Json{{"depth", b.depth}, {"c_k", b.c_k}, {"n", b.n}, {"chain_holds", b.chain_holds},
                              {"method", "exact"}};
    }
    r["depth_bounds"] = std::move(bj);
  } else {
    r["depth_bounds"] = Json{{"skipped", "more than " + std::to_string(options.depth_bounds_max_faces) + " faces"},
                             {"n", normality_index(w)}};
  }

  const CMCriterion nf = normal_facets_cm(w);
  r["normal_facets_cm"] =
      verdict(nf.applies, "exact", nf.failing_face ? face_json(fl, *nf.failing_face) : Json(nullptr));
  const SimpleConeVerdict sc = simple_cone_cm(w);
  Json scj = verdict(sc.applies, "exact", sc.non_simple_ray ? Json(*sc.non_simple_ray) : Json(nullptr));
  scj["s2"] = sc.s2;
  r["simple_cone_cm"] = std::move(scj);
  return r;
}

Json analyze_monoid(const AffineMonoid& m, const AnalysisOptions& options) {
  const Integer bound = options.degree_bound ? *options.degree_bound : default_degree_bound(m);
  Json r;
  r["input"] = Json{{"kind", "monoid"}, {"ambient", m.ambient_dim()}, {"generators", rows_json(m.generators())}};
  r["rank"] = m.rank();
  r["positive"] = verdict(true, "exact");
  r["extreme_rays"] = rows_json(m.cone().extreme_rays());
  r["grading"] = to_json(m.grading());

  const NormalityVerdict nv = is_normal(m);
  r["normal"] = verdict(nv.normal, "exact", nv.witness ? to_json(*nv.witness) : Json(nullptr));

  const SeminormalityVerdict sv = is_seminormal_up_to(m, bound);
  // A witness is a proof; without one the answer only covers degrees <= bound.
  if (sv.witness)
    r["seminormal"] = verdict(false, "exact", to_json(*sv.witness));
  else
    r["seminormal"] = verdict(true, bounded(bound));

  try {
    const BoundedS2Verdict s2 = s2_up_to(m, bound);
    if (s2.witness)
      r["s2_monoid"] = verdict(false, "exact", to_json(*s2.witness));
    else
      r["s2_monoid"] = verdict(true, bounded(bound));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HypothesisUnverified) throw;
    const auto x = interior_hypothesis_counterexample(m, bound);
    Json j = verdict(nullptr, bounded(bound), x ? to_json(*x) : Json(nullptr));
    j["reason"] = e.what();
    r["s2_monoid"] = std::move(j);
  }

  // Ring-theoretic verdicts below are for the seminormalization, which is M
  // itself exactly when the seminormality verdict holds.
  Json model = analyze_model(to_model(m), options);
  model.erase("input");
  r["seminormalization"] = std::move(model);
  return r;
}

Json cohomology_report(const DecoratedCone& w, std::span<const Integer> a, const std::vector<Field>& fields) {
  const FaceLattice& fl = w.faces();
  const Filter filter = filter_at(w, a);
  const CohomologyProfile p = local_cohomology_at(w, a, field_primes(fields));
  Json r;
  r["a"] = to_json(a);
  r["degree"] = to_json(scale(Integer(-1), a));
  r["base_face"] = face_json(fl, minimal_face(fl, a));
  Json faces = Json::array();
  for (auto id : filter) faces.push_back(face_json(fl, id));
  r["filter"] = std::move(faces);
  Json dims = Json::object();
  for (const auto& f : fields) dims[f.name()] = dims_json(p.dims(f));
  r["dims"] = std::move(dims);
  r["torsion_primes"] = primes_json(p.torsion_primes);
  r["method"] = "exact";
  return r;
}

Json construction_report(const ConstructionResult& c, const SimplicialComplex& delta,
                         const std::vector<Field>& fields) {
  Json r;
  Json facets = Json::array();
  for (const auto& f : delta.facets()) {
    Json labels = Json::array();
    for (auto v : f) labels.push_back(delta.labels()[v]);
    facets.push_back(std::move(labels));
  }
  r["complex"] = Json{{"vertices", delta.vertex_count()}, {"dim", delta.dim()}, {"facets", std::move(facets)}};
  r["rank"] = c.rank;
  r["faces"] = c.model.faces().size();
  r["extreme_rays"] = c.model.faces().cone().extreme_rays().size();
  r["distinguished_degree"] = to_json(c.distinguished_degree);
  r["polytope_vertices"] = rows_json(c.polytope_vertices);

  const CohomologyProfile p = local_cohomology_at(c.model, c.distinguished_degree, field_primes(fields));
  Json corr = Json::object();
  for (const auto& f : fields) {
    const SimplicialHomology h = simplicial_homology(delta, f);
    const auto dims = p.dims(f);
    std::vector<std::size_t> expected(c.rank + 1, 0);
    for (std::size_t i = 0; i <= c.rank; ++i) expected[i] = h.at(static_cast<long>(c.rank) - static_cast<long>(i) - 1);
    corr[f.name()] = Json{{"local_cohomology", dims_json(dims)},
                          {"reduced_homology", dims_json(h.reduced)},
                          {"matches", dims == expected},
                          {"method", "exact"}};
  }
  r["correspondence"] = std::move(corr);
  r["torsion_primes"] = primes_json(p.torsion_primes);
  return r;
}

CheckOutcome check_model(const DecoratedCone& w, const AnalysisOptions& options) {
  Check check;
  model_checks(w, options, check);
  return {Json{{"kind", "model"}, {"checks", check.list}, {"passed", check.passed}}, check.passed};
}

CheckOutcome check_monoid(const AffineMonoid& m, const AnalysisOptions& options) {
  Check check;
  const Integer bound = options.degree_bound ? *options.degree_bound : default_degree_bound(m);
  const DecoratedCone w = to_model(m);
  const PointSet elements = elements_up_to(m, bound);
  const auto points = lattice_points_up_to(m.cone(), m.group(), m.grading(), bound);

  bool chain = true, model_agrees = true;
  Json bad = nullptr;
  for (const auto& x : points) {
    const bool in_m = elements.count(x) > 0;
    const bool in_sn = sn_member(m, x);
    if ((in_m && !in_sn) || in_m != member(m, x)) {
      chain = false;
      bad = to_json(x);
    }
    if (model_member(w, x) != in_sn) model_agrees = false;
  }
  check.add("member_implies_seminormalization_implies_normalization", chain,
            Json{{"points", points.size()}, {"bound", integer_json(bound)}, {"witness", bad}});
  check.add("model_membership_matches_seminormalization", model_agrees);

  const auto hb = hilbert_basis(m.cone(), m.group());
  bool hb_ok = true;
  for (const auto& h : hb) hb_ok = hb_ok && m.cone().contains(h) && m.group().contains(h);
  const NormalityVerdict nv = is_normal(m);
  bool normal_consistent = true;
  for (const auto& h : hb) normal_consistent = normal_consistent && (member(m, h) || !nv.normal);
  check.add("hilbert_basis_in_normalization", hb_ok, Json{{"size", hb.size()}});
  check.add("normality_consistent", normal_consistent);

  model_checks(w, options, check);
  return {Json{{"kind", "monoid"}, {"checks", check.list}, {"passed", check.passed}}, check.passed};
}

}  // namespace semimon
