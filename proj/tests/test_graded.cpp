#include <doctest.h>

#include <random>
#include <stdexcept>

#include "asl2/graded.hpp"
#include "asl2/weighted.hpp"

using namespace asl2;

namespace {

SpacePtr small_space() {
  return std::make_shared<GradedSpace>(std::vector<BasisVector>{
      {"u0", 0, 0, {}}, {"u1", 0, 1, {}}, {"u2", 0, 2, {}},
      {"v0", 1, 0, {}}, {"v1", 1, 1, {}}, {"v2", 1, 2, {}}});
}

GradedOperator random_homogeneous(const SpacePtr& s, int parity,
                                  std::mt19937& rng) {
  GradedOperator op(s, s, parity);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::uniform_int_distribution<int> keep(0, 2);
  for (const auto& r : s->basis())
    for (const auto& c : s->basis()) {
      if ((r.parity + c.parity) % 2 != parity) continue;
      if (keep(rng) == 0) continue;
      op.set(r.label, c.label, Scalar::rational(num(rng), den(rng)));
    }
  return op;
}

}  // namespace

TEST_CASE("space validation") {
  CHECK_THROWS_AS(GradedSpace(std::vector<BasisVector>{{"x", 0, 0, {}},
                                                       {"x", 1, 1, {}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GradedSpace(std::vector<BasisVector>{{"x", 2, 0, {}}}),
                  std::invalid_argument);
}

TEST_CASE("apply: identity, zero, domain mismatch") {
  auto s = small_space();
  auto id = GradedOperator::identity(s);
  Vec e1{{"u1", Scalar(1)}};
  CHECK(id.apply(e1) == e1);
  auto z = GradedOperator::zero(s, s, 0);
  CHECK(vec_is_zero(z.apply(e1)));
  CHECK_THROWS_AS(id.apply(Vec{{"nope", Scalar(1)}}), std::invalid_argument);
}

TEST_CASE("operator parity invariant on entries") {
  auto s = small_space();
  GradedOperator odd(s, s, 1);
  odd.set("v0", "u0", Scalar(1));  // parity 1 edge: fine
  CHECK_THROWS_AS(odd.set("u1", "u0", Scalar(1)), std::invalid_argument);
  odd.set("u1", "u0", Scalar(0));  // assigning zero anywhere is a no-op
  GradedOperator any(s, s, std::nullopt);
  any.set("u1", "u0", Scalar(1));  // unconstrained staging operator
  CHECK_THROWS_AS(any.require_parity(), std::invalid_argument);
}

TEST_CASE("ladder shift on a chain window") {
  auto rep = build_module(WeightedSpec::make(Scalar(0), -12, 12));
  CHECK(rep.A.apply_basis("e1") == Vec{{"e2", Scalar(1)}});
}

TEST_CASE("bracket examples") {
  auto rep = build_module(WeightedSpec::make(Scalar(0), -12, 12));
  auto anti = bracket(rep.A, rep.B, BracketMode::Anticommutator);
  for (const auto& col : rep.interior(2))
    CHECK(vec_is_zero(anti.residual_column(rep.Eps, col)));

  auto id = GradedOperator::identity(rep.space);
  CHECK(bracket(id, id, BracketMode::Anticommutator) == id.scaled(Scalar(2)));

  auto gamma = rep.Eps - id.scaled(Scalar::rational(1, 2));
  auto tw = bracket(rep.A, gamma, BracketMode::Twisted);
  for (const auto& col : rep.interior(2))
    CHECK(vec_is_zero(tw.column(col)));
}

TEST_CASE("bracket sign rules on a two-dimensional space") {
  auto s = std::make_shared<GradedSpace>(
      std::vector<BasisVector>{{"u", 0, 0, {}}, {"v", 1, 1, {}}});
  GradedOperator X(s, s, 1), Y(s, s, 1);
  X.set("v", "u", Scalar(1));           // X u = v
  Y.set("u", "v", Scalar(1));           // Y v = u
  // odd-odd: anticommutator = XY - YX, commutator = XY + YX.
  auto a = bracket(X, Y, BracketMode::Anticommutator);
  CHECK(a.apply_basis("v") == Vec{{"v", Scalar(1)}});
  CHECK(a.apply_basis("u") == Vec{{"u", Scalar(-1)}});
  auto c = bracket(X, Y, BracketMode::Commutator);
  CHECK(c.apply_basis("v") == Vec{{"v", Scalar(1)}});
  CHECK(c.apply_basis("u") == Vec{{"u", Scalar(1)}});
  // odd X, even Y: twisted = XY + YX.
  GradedOperator P(s, s, 0);
  P.set("v", "v", Scalar(1));
  auto t = bracket(X, P, BracketMode::Twisted);
  CHECK(t.apply_basis("u") == Vec{{"v", Scalar(1)}});
}

TEST_CASE("bracket supersymmetry on randomized sparse operators") {
  std::mt19937 rng(99);
  auto s = small_space();
  for (int t = 0; t < 40; ++t) {
    int px = t % 2, py = (t / 2) % 2;
    auto X = random_homogeneous(s, px, rng);
    auto Y = random_homogeneous(s, py, rng);
    int sign = (px * py) % 2 ? -1 : 1;
    CHECK(bracket(X, Y, BracketMode::Anticommutator) ==
          bracket(Y, X, BracketMode::Anticommutator).scaled(Scalar(sign)));
    CHECK(*bracket(X, Y, BracketMode::Anticommutator).parity() ==
          (px + py) % 2);
  }
}

TEST_CASE("compose tracks parity") {
  std::mt19937 rng(3);
  auto s = small_space();
  for (int t = 0; t < 20; ++t) {
    int px = t % 2, py = (t + 1) % 2;
    auto X = random_homogeneous(s, px, rng);
    auto Y = random_homogeneous(s, py, rng);
    CHECK(*(X * Y).parity() == (px + py) % 2);
  }
}

TEST_CASE("tensor lift signs") {
  auto rep = build_module(WeightedSpec::make(Scalar(0), -4, 4));
  auto s = rep.space;

  // Right lift of an even operator carries no sign.
  auto lifted_eps = tensor_lift(rep.Eps, LiftSide::Right, s);
  CHECK(lifted_eps.apply_basis("e0⊗e1") == Vec{{"e0⊗e1", Scalar(1)}});

  // Right lift of an odd operator picks up -1 on odd left factors.
  auto lifted_a = tensor_lift(rep.A, LiftSide::Right, s);
  CHECK(lifted_a.apply_basis("e1⊗e1") ==
        Vec{{"e1⊗e2", Scalar(-1)}});
  CHECK(lifted_a.apply_basis("e0⊗e1") == Vec{{"e0⊗e2", Scalar(1)}});

  // Left lifts are unsigned.
  auto left_a = tensor_lift(rep.A, LiftSide::Left, s);
  CHECK(left_a.apply_basis("e1⊗e1") == Vec{{"e2⊗e1", Scalar(1)}});
}

TEST_CASE("same-side lifts respect composition") {
  std::mt19937 rng(11);
  auto s = small_space();
  for (int t = 0; t < 12; ++t) {
    auto X = random_homogeneous(s, t % 2, rng);
    auto Y = random_homogeneous(s, (t / 2) % 2, rng);
    for (auto side : {LiftSide::Left, LiftSide::Right})
      CHECK(tensor_lift(X * Y, side, s) ==
            tensor_lift(X, side, s) * tensor_lift(Y, side, s));
  }
}

TEST_CASE("projector detection and eigenspace split") {
  auto rep = build_module(WeightedSpec::make(Scalar(0), -6, 6));
  auto id = GradedOperator::identity(rep.space);

  auto rid = is_projector(id);
  CHECK(rid.idempotent);
  CHECK(rid.eigen0.empty());
  CHECK(rid.eigen1.size() == rep.space->dim());

  auto reps = is_projector(rep.Eps);
  CHECK(reps.idempotent);
  // Eigenvalue 1 on odd-index labels, 0 on even-index labels.
  std::size_t odd_count = 0, even_count = 0;
  for (const auto& b : rep.space->basis())
    (b.index % 2 != 0 ? odd_count : even_count) += 1;
  CHECK(reps.eigen1.size() == odd_count);
  CHECK(reps.eigen0.size() == even_count);
  for (const auto& v : reps.eigen1) {
    REQUIRE(v.size() == 1);
    CHECK(rep.space->vec(v.begin()->first).index % 2 != 0);
  }

  CHECK_FALSE(is_projector(id.scaled(Scalar(2))).idempotent);
}

TEST_CASE("projector split for a non-diagonal idempotent") {
  auto s = std::make_shared<GradedSpace>(
      std::vector<BasisVector>{{"p", 0, 0, {}}, {"q", 0, 1, {}}});
  GradedOperator P(s, s, 0);
  P.set("p", "p", Scalar(1));
  P.set("p", "q", Scalar(1));
  auto r = is_projector(P);
  REQUIRE(r.idempotent);
  REQUIRE(r.eigen0.size() == 1);
  REQUIRE(r.eigen1.size() == 1);
  CHECK(vec_is_zero(P.apply(r.eigen0[0])));
  CHECK(P.apply(r.eigen1[0]) == r.eigen1[0]);
}

TEST_CASE("proportionality") {
  Vec u{{"a", Scalar(3)}, {"b", Scalar(6)}};
  Vec ref{{"a", Scalar(1)}, {"b", Scalar(2)}};
  auto c = proportionality(u, ref);
  REQUIRE(c.has_value());
  CHECK(*c == Scalar(3));
  CHECK_FALSE(proportionality(Vec{{"a", Scalar(1)}}, ref).has_value());
  CHECK(proportionality(Vec{}, ref).value() == Scalar(0));
  CHECK_THROWS_AS(proportionality(u, Vec{}), std::invalid_argument);
}
