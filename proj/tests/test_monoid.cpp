#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "semimon/constructions.hpp"
#include "semimon/error.hpp"
#include "semimon/monoid.hpp"

using namespace semimon;

namespace {

AffineMonoid two_three() { return AffineMonoid({make_vector({2}), make_vector({3})}, 1); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_SUITE("monoid") {
  TEST_CASE("construction and validation") {
    CHECK(two_three().rank() == 1);
    CHECK(kind_of([] { AffineMonoid({make_vector({1, 0}), make_vector({-1, 0})}, 2); }) == ErrorKind::NotPositive);
    CHECK(kind_of([] { AffineMonoid({make_vector({1, 0}), make_vector({0, 0})}, 2); }) == ErrorKind::ZeroGenerator);
    const AffineMonoid m = monoid_new({make_vector({1, 0}), make_vector({1, 2})}, 2);
    CHECK(m.group() == lattice_from_rows(2, {make_vector({1, 0}), make_vector({0, 2})}));
  }

  TEST_CASE("membership in <2,3>") {
    const AffineMonoid m = two_three();
    CHECK_FALSE(member(m, make_vector({1})));
    CHECK(member(m, make_vector({7})));
    CHECK(member(m, make_vector({0})));
    CHECK_FALSE(member(m, make_vector({-2})));
  }

  TEST_CASE("random nonnegative combinations are members") {
    std::mt19937 rng(17);
    const AffineMonoid m({make_vector({2, 0, 1}), make_vector({0, 3, 1}), make_vector({1, 1, 1}), make_vector({3, 1, 2})}, 3);
    for (int t = 0; t < 100; ++t) {
      IntVector x(3);
      for (const auto& g : m.generators()) x = add(x, scale(Integer(static_cast<long>(rng() % 4)), g));
      CHECK(member(m, x));
    }
  }

  TEST_CASE("face submonoid generators") {
    const AffineMonoid m({make_vector({1, 0}), make_vector({1, 1}), make_vector({0, 1})}, 2);
    CHECK(face_submonoid_generators(m, m.faces().top()).size() == 3);
    CHECK(face_submonoid_generators(m, m.faces().apex()).empty());
  }

  TEST_CASE("hilbert bases") {
    const auto orth = hilbert_basis(dual_description({make_vector({1, 0}), make_vector({0, 1})}, 2), Lattice::full(2));
    CHECK(orth.size() == 2);
    auto hb = hilbert_basis(dual_description({make_vector({1, 0}), make_vector({1, 2})}, 2), Lattice::full(2));
    std::sort(hb.begin(), hb.end());
    CHECK(hb == std::vector<IntVector>{make_vector({1, 0}), make_vector({1, 1}), make_vector({1, 2})});
    CHECK(hilbert_basis(dual_description({make_vector({5})}, 1), Lattice::full(1)) ==
          std::vector<IntVector>{make_vector({1})});
  }

  TEST_CASE("normality") {
    const auto v = is_normal(two_three());
    CHECK_FALSE(v.normal);
    CHECK(v.witness == make_vector({1}));
    CHECK(is_normal(AffineMonoid({make_vector({1, 0}), make_vector({0, 1})}, 2)).normal);
    const auto hb = hilbert_basis(dual_description({make_vector({1, 0}), make_vector({1, 3})}, 2), Lattice::full(2));
    CHECK(is_normal(AffineMonoid(hb, 2)).normal);
  }

  TEST_CASE("seminormalization") {
    const AffineMonoid m = two_three();
    CHECK(sn_member(m, make_vector({1})));
    const auto v = is_seminormal_up_to(m, Integer(3));
    CHECK_FALSE(v.seminormal_up_to);
    CHECK(v.witness == make_vector({1}));
    const AffineMonoid orth({make_vector({1, 0}), make_vector({0, 1})}, 2);
    CHECK(is_seminormal_up_to(orth, Integer(8)).seminormal_up_to);
  }

  TEST_CASE("models of <2,3> and of a normal monoid") {
    const DecoratedCone w = to_model(two_three());
    CHECK(w.lambda(w.faces().top()) == Lattice::full(1));
    CHECK(w.lambda(w.faces().apex()).rank() == 0);
    const AffineMonoid n({make_vector({1, 0}), make_vector({1, 1}), make_vector({1, 2})}, 2);
    const DecoratedCone wn = to_model(n);
    for (const auto& f : wn.faces().faces())
      CHECK(wn.lambda(f.id) == lattice_intersect(f.span, n.group()));
  }

  TEST_CASE("the builtin pyramid is the model of its own irreducibles") {
    const DecoratedCone w = builtin("pyramid-7.1");
    // Ray multiples first so that extreme rays keep their order.
    std::vector<IntVector> gens;
    for (const auto& r : w.cone().extreme_rays())
      gens.push_back(primitive_multiple_in(w.lambda(minimal_face(w.faces(), r)), r));
    for (auto& x : model_irreducibles(w, Integer(6)))
      if (std::find(gens.begin(), gens.end(), x) == gens.end()) gens.push_back(x);
    const AffineMonoid m(gens, 4);
    const DecoratedCone back = to_model(m);
    CHECK(back.faces().cone().extreme_rays() == w.faces().cone().extreme_rays());
    CHECK(back.lambdas() == w.lambdas());
    // odd point in relint F_1 is not in the seminormal monoid
    CHECK_FALSE(sn_member(m, make_vector({-2, 0, 1, 3})));
    CHECK(is_seminormal_up_to(m, Integer(6)).seminormal_up_to);
    const auto on_f1 = face_submonoid_generators(m, find_face(w.faces(), {0, 1, 2}));
    for (const auto& g : on_f1) CHECK(g[3] % 2 == 0);
  }

  TEST_CASE("model membership equals seminormalization membership") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> entry(0, 3);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<IntVector> gens;
      const std::size_t n = 2 + rng() % 4;
      for (std::size_t i = 0; i < n; ++i) gens.push_back(make_vector({entry(rng), entry(rng), 1 + entry(rng) % 2}));
      const AffineMonoid m(gens, 3);
      const DecoratedCone w = to_model(m);
      for (const auto& x : lattice_points_up_to(m.cone(), m.group(), m.grading(), Integer(8))) {
        CHECK(model_member(w, x) == sn_member(m, x));
        if (member(m, x)) CHECK(sn_member(m, x));
      }
    }
  }

  TEST_CASE("decorated cone validation") {
    auto fl = std::make_shared<const FaceLattice>(dual_description({make_vector({1, 0}), make_vector({0, 1})}, 2));
    std::vector<Lattice> lambda;
    for (const auto& f : fl->faces()) lambda.push_back(f.span);
    // Ray lattice larger than the top lattice is not monotone.
    auto bad = lambda;
    bad[fl->top()] = lattice_from_rows(2, {make_vector({2, 0}), make_vector({0, 2})});
    CHECK(kind_of([&] { DecoratedCone(fl, bad, make_vector({1, 1})); }) == ErrorKind::InvariantViolated);
    auto degenerate = lambda;
    degenerate[fl->top()] = lattice_from_rows(2, {make_vector({1, 0})});
    CHECK(kind_of([&] { DecoratedCone(fl, degenerate, make_vector({1, 1})); }) == ErrorKind::DegenerateFace);
    CHECK(kind_of([&] { DecoratedCone(fl, lambda, make_vector({1, -1})); }) == ErrorKind::NotPositive);
  }

  TEST_CASE("restriction to a face and primitive multiples") {
    const DecoratedCone w = builtin("pyramid-7.3");
    const std::size_t f3 = find_face(w.faces(), {0, 3, 4});
    const DecoratedCone r = restrict_to_face(w, f3);
    CHECK(r.rank() == 3);
    CHECK(r.faces().size() == 8);
    const Lattice even = lattice_from_rows(4, {make_vector({0, 0, 2, 2})});
    CHECK(primitive_multiple_in(even, make_vector({0, 0, 1, 1})) == make_vector({0, 0, 2, 2}));
  }

  TEST_CASE("lattice points agree with box enumeration") {
    const RationalCone c = dual_description({make_vector({1, 0}), make_vector({1, 2})}, 2);
    const auto pts = lattice_points_up_to(c, Lattice::full(2), grading_form(c), Integer(6));
    std::vector<oracle::Row> forms(c.support_forms().begin(), c.support_forms().end());
    const auto box = oracle::cone_points(forms, 2, 12, 6);
    CHECK(pts.size() == box.size());
  }
}
