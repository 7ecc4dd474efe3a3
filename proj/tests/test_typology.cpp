#include <set>

#include <doctest.h>

#include "corpus.hpp"
#include "semimon/constructions.hpp"
#include "semimon/error.hpp"
#include "semimon/typology.hpp"

using namespace semimon;

namespace {

Filter with_top(const FaceLattice& fl, std::vector<std::vector<std::size_t>> ray_sets) {
  Filter f;
  for (const auto& s : ray_sets) f.push_back(find_face(fl, s));
  f.push_back(fl.top());
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace

TEST_SUITE("typology") {
  TEST_CASE("finite quotient") {
    const Lattice a = Lattice::full(2);
    const Lattice b = lattice_from_rows(2, {make_vector({2, 0}), make_vector({0, 3})});
    const FiniteQuotient q(a, b, 100);
    CHECK(q.order() == 6);
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < q.order(); ++i) {
      CHECK(q.class_of(q.lift(i)) == i);
      seen.insert(q.class_of(q.lift(i)));
    }
    CHECK(seen.size() == 6);
    CHECK(q.class_of(make_vector({2, 3})) == q.class_of(make_vector({0, 0})));
    const auto sub = q.subgroup({make_vector({1, 0})});
    CHECK(std::count(sub.begin(), sub.end(), true) == 2);
    CHECK_THROWS_AS(FiniteQuotient(a, b, 5), Error);
  }

  TEST_CASE("realizability on the pyramid") {
    const DecoratedCone w = builtin("pyramid-7.1");
    const FaceLattice& fl = w.faces();
    const std::size_t ray = find_face(fl, {0});
    const auto odd = realizable(w, ray, with_top(fl, {{0, 2, 3}, {0, 1, 4}}));
    CHECK(odd.realizable);
    REQUIRE(odd.witness);
    CHECK(minimal_face(fl, *odd.witness) == ray);
    CHECK(filter_at(w, *odd.witness) == with_top(fl, {{0, 2, 3}, {0, 1, 4}}));
    CHECK((*odd.witness)[3] % 2 != 0);
    CHECK_FALSE(realizable(w, ray, with_top(fl, {{0, 2, 3}})).realizable);
    const auto interior = realizable(w, fl.top(), {fl.top()});
    CHECK(interior.realizable);
    CHECK(minimal_face(fl, *interior.witness) == fl.top());
    CHECK_THROWS_AS(realizable(w, ray, {find_face(fl, {0, 2, 3})}), Error);
  }

  TEST_CASE("type counts of the pyramids") {
    const DecoratedCone w = builtin("pyramid-7.1");
    const auto all = enumerate_types(w);
    CHECK(all.size() == 921);
    CHECK(std::count_if(all.begin(), all.end(), [](const auto& t) { return t.realizable; }) == 33);
    CHECK(realizable_types(w).size() == 33);
    CHECK(realizable_types(builtin("pyramid-7.3")).size() == 27);
    TypologyOptions tiny;
    tiny.max_filters = 1;
    CHECK_THROWS_AS(enumerate_types(w, tiny), Error);
  }

  TEST_CASE("one-dimensional normal cone has two types, cohomology only on top") {
    auto fl = std::make_shared<const FaceLattice>(dual_description({make_vector({1})}, 1));
    const DecoratedCone w(fl, {Lattice::zero(1), Lattice::full(1)}, make_vector({1}));
    const auto types = realizable_types(w);
    CHECK(types.size() == 2);
    for (const auto& t : types) CHECK(t.profile.dims_q[0] == 0);
    CHECK(depth_report(w, {Field::rationals()}).at(Field::rationals()).cohen_macaulay);
  }

  TEST_CASE("orthant types have a unique minimal element") {
    auto fl = std::make_shared<const FaceLattice>(dual_description({make_vector({1, 0}), make_vector({0, 1})}, 2));
    std::vector<Lattice> lambda;
    for (const auto& f : fl->faces()) lambda.push_back(f.span);
    const DecoratedCone w(fl, lambda, make_vector({1, 1}));
    for (const auto& t : realizable_types(w)) {
      const auto& f = t.filter;
      CHECK(std::all_of(f.begin(), f.end(), [&](std::size_t g) { return fl->is_subface(f.front(), g); }));
      CHECK(t.profile.first_nonzero(Field::rationals()) >= 2);
    }
  }

  TEST_CASE("depth reports of the pyramids") {
    const std::vector<Field> fields{Field::rationals(), Field::prime(2), Field::prime(3)};
    const DepthReport r1 = depth_report(builtin("pyramid-7.1"), fields);
    for (const auto& f : fields) {
      CHECK(r1.at(f).depth == 3);
      CHECK_FALSE(r1.at(f).cohen_macaulay);
      REQUIRE_FALSE(r1.at(f).witnesses.empty());
      CHECK(r1.at(f).witnesses[0].first == 3);
    }
    CHECK(r1.not_cm.size() == 3);
    const DepthReport r3 = depth_report(builtin("pyramid-7.3"), fields);
    for (const auto& f : fields) CHECK(r3.at(f).depth == 4);
    CHECK(r3.not_cm.empty());
  }

  TEST_CASE("coset walk finds exactly the realizable pairs of the exhaustive enumeration") {
    std::size_t compared = 0;
    for (const auto& e : corpus::decorated(16, 7)) {
      INFO(e.name);
      std::vector<CohomologyType> all;
      try {
        all = enumerate_types(e.model);
      } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::TooLarge);
        continue;
      }
      ++compared;
      std::set<std::pair<std::size_t, Filter>> a, b;
      for (const auto& t : all)
        if (t.realizable) a.emplace(t.base_face, t.filter);
      for (const auto& t : realizable_types(e.model)) {
        b.emplace(t.base_face, t.filter);
        REQUIRE(t.witness);
        CHECK(minimal_face(e.model.faces(), *t.witness) == t.base_face);
        CHECK(filter_at(e.model, *t.witness) == t.filter);
      }
      CHECK(a == b);
    }
    CHECK(compared >= 12);
  }
}
