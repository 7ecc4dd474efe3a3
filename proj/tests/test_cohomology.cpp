#include <numeric>

#include <doctest.h>

#include "corpus.hpp"
#include "semimon/cohomology.hpp"
#include "semimon/constructions.hpp"
#include "semimon/error.hpp"
#include "semimon/typology.hpp"

using namespace semimon;

namespace {

Filter faces_of(const FaceLattice& fl, std::vector<std::vector<std::size_t>> ray_sets) {
  Filter f;
  for (const auto& s : ray_sets) f.push_back(find_face(fl, s));
  f.push_back(fl.top());
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("filters of the pyramids at an odd point of the apex ray") {
    const DecoratedCone w1 = builtin("pyramid-7.1");
    const FaceLattice& fl = w1.faces();
    CHECK(filter_at(w1, make_vector({0, 0, 1, 1})) == faces_of(fl, {{0, 2, 3}, {0, 1, 4}}));
    const DecoratedCone w3 = builtin("pyramid-7.3");
    CHECK(filter_at(w3, make_vector({0, 0, 3, 3})) ==
          faces_of(w3.faces(), {{0, 3}, {0, 4}, {0, 2, 3}, {0, 1, 4}, {0, 3, 4}}));
    Filter all(fl.size());
    std::iota(all.begin(), all.end(), 0);
    CHECK(filter_at(w1, make_vector({0, 0, 0, 0})) == all);
    CHECK_THROWS_AS(filter_at(w1, make_vector({0, 0, -1, 1})), Error);
  }

  TEST_CASE("cohomology at the odd apex-ray point") {
    const DecoratedCone w1 = builtin("pyramid-7.1");
    const Filter odd = filter_at(w1, make_vector({0, 0, 1, 1}));
    const CochainComplex c = cochain_complex(w1.faces(), odd);
    CHECK(c.cells[3].size() == 2);
    CHECK(c.cells[4].size() == 1);
    CHECK(c.differential[3].rows == 1);
    CHECK(c.differential[3].cols == 2);
    for (const auto& [col, v] : c.differential[3].row_entries[0]) CHECK((v == 1 || v == -1));
    for (auto field : {Field::rationals(), Field::prime(2), Field::prime(3)})
      CHECK(cohomology_dims(c, field) == std::vector<std::size_t>{0, 0, 0, 1, 0});
    CHECK(torsion_primes(c).empty());

    const DecoratedCone w3 = builtin("pyramid-7.3");
    const CochainComplex c3 = cochain_complex(w3.faces(), filter_at(w3, make_vector({0, 0, 1, 1})));
    CHECK(cohomology_dims(c3, Field::rationals()) == std::vector<std::size_t>{0, 0, 0, 0, 0});
  }

  TEST_CASE("the full filter is acyclic") {
    const DecoratedCone w = builtin("pyramid-7.1");
    const auto p = local_cohomology_at(w, make_vector({0, 0, 0, 0}), {2, 3});
    CHECK(p.dims_q == std::vector<std::size_t>{0, 0, 0, 0, 0});
    CHECK(p.first_nonzero(Field::rationals()) == 5);
  }

  TEST_CASE("one-dimensional full filter is 0 -> K -> K -> 0") {
    auto fl = std::make_shared<const FaceLattice>(dual_description({make_vector({1})}, 1));
    const CochainComplex c = cochain_complex(*fl, {0, 1});
    CHECK(c.differential[0].rows == 1);
    CHECK(c.differential[0].row_entries[0].size() == 1);
    CHECK(cohomology_dims(c, Field::rationals()) == std::vector<std::size_t>{0, 0});
    const CochainComplex empty = cochain_complex(*fl, {});
    CHECK(cohomology_dims(empty, Field::rationals()) == std::vector<std::size_t>{0, 0});
  }

  TEST_CASE("filters must be up-closed") {
    const DecoratedCone w = builtin("pyramid-7.1");
    const Filter bad{find_face(w.faces(), {0})};
    CHECK_FALSE(is_up_closed(w.faces(), bad));
    CHECK_THROWS_AS(cochain_complex(w.faces(), bad), Error);
  }

  TEST_CASE("differentials square to zero on every up-closed set of the pyramid") {
    const DecoratedCone w = builtin("pyramid-7.1");
    for (const auto& t : enumerate_types(w)) CHECK(squares_to_zero(cochain_complex(w.faces(), t.filter)));
  }

  TEST_CASE("top support") {
    const DecoratedCone w = builtin("pyramid-7.1");
    CHECK_FALSE(top_support_member(w, make_vector({0, 0, 0, 0})));
    CHECK(top_support_member(w, make_vector({0, 0, 1, 3})));
    CHECK_FALSE(top_support_member(w, make_vector({0, 0, 1, 1})));
    CHECK_FALSE(top_support_member(w, make_vector({0, 0, 2, 2})));
  }

  TEST_CASE("profiles: field names and dims lookup") {
    CHECK(Field::rationals().name() == "Q");
    CHECK(Field::prime(2).name() == "F2");
    CohomologyProfile p;
    p.dims_q = {0, 1};
    p.dims_p[2] = {1, 1};
    p.torsion_primes = {2};
    CHECK(p.dims(Field::prime(2)) == std::vector<std::size_t>{1, 1});
    CHECK(p.dims(Field::prime(5)) == std::vector<std::size_t>{0, 1});
    CHECK(p.first_nonzero(Field::prime(2)) == 0);
    CHECK(p.first_nonzero(Field::rationals()) == 1);
  }

  TEST_CASE("convention independence on the corpus") {
    for (const auto& e : corpus::decorated(12, 41)) {
      const FaceLattice other(e.model.cone(), IncidenceConvention::LastRays);
      for (const auto& t : realizable_types(e.model)) {
        INFO(e.name);
        const auto a = cochain_complex(e.model.faces(), t.filter);
        const auto b = cochain_complex(other, t.filter);
        CHECK(squares_to_zero(b));
        CHECK(cohomology_dims(a, Field::rationals()) == cohomology_dims(b, Field::rationals()));
        CHECK(cohomology_dims(a, Field::prime(2)) == cohomology_dims(b, Field::prime(2)));
      }
    }
  }
}
