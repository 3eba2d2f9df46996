#include <doctest.h>

#include <stdexcept>

#include "asl2/rep.hpp"
#include "asl2/weighted.hpp"

using namespace asl2;

namespace {

const IdentityResult& entry(const Report& r, const std::string& name) {
  for (const auto& e : r.results)
    if (e.identity == name) return e;
  throw std::logic_error("missing entry: " + name);
}

}  // namespace

TEST_CASE("defining relations on a generic window") {
  auto rep = build_module(WeightedSpec::make(Scalar(0), -12, 12));
  Report r = check_asl_relations(rep, 2);
  CHECK(r.pass());
  CHECK(r.results.size() == 4);
  CHECK_THROWS_AS(check_asl_relations(rep, 1), std::invalid_argument);
  auto tiny = build_module(WeightedSpec::make(Scalar(0), -2, 2));
  CHECK_THROWS_AS(check_asl_relations(tiny, 3), std::invalid_argument);
}

TEST_CASE("lowest-weight window passes including the boundary vector") {
  auto rep = build_module(WeightedSpec::with_default_window(Scalar(1)));
  Report r = check_asl_relations(rep, 2);
  CHECK(r.pass());
  // The bottom edge is a genuine module boundary, so e_1 is checked.
  bool saw_boundary = false;
  for (const auto& idx : entry(r, "AB-BA = E").checked)
    if (idx == Json(1)) saw_boundary = true;
  CHECK(saw_boundary);
  CHECK(vec_is_zero(rep.B.column("e1")));
}

TEST_CASE("doubling E breaks idempotence") {
  auto rep = build_module(WeightedSpec::make(Scalar(0), -12, 12));
  rep.Eps = rep.Eps.scaled(Scalar(2));
  Report r = check_asl_relations(rep, 2);
  CHECK_FALSE(entry(r, "E^2 = E").pass);
}

TEST_CASE("grading alignment") {
  auto rep = build_module(WeightedSpec::make(Scalar::rational(1, 2), -10, 10));
  CHECK(check_grading_alignment(rep, 0).pass());
}

TEST_CASE("regrade restores the eigenvalue grading") {
  auto rep = build_module(WeightedSpec::make(Scalar(0), -6, 6));

  // Aligned input: the regrade is the identity on parities.
  auto same = regrade(rep);
  for (std::size_t i = 0; i < rep.space->dim(); ++i)
    CHECK(same.space->at(i).parity == rep.space->at(i).parity);

  // Flip two parities and rebuild the ladders as unconstrained operators.
  std::vector<BasisVector> flipped = rep.space->basis();
  for (auto& b : flipped)
    if (b.index == 2 || b.index == 3) b.parity = 1 - b.parity;
  auto bad_space = std::make_shared<GradedSpace>(flipped);
  auto relax = [&](const GradedOperator& op) {
    GradedOperator out(bad_space, bad_space, std::nullopt);
    for (const auto& [col, colmap] : op.columns())
      for (const auto& [row, v] : colmap) out.set(row, col, v);
    return out;
  };
  Representation bad{bad_space, relax(rep.A), relax(rep.B), relax(rep.Eps),
                     rep.kmin, rep.kmax, true, true, "misgraded fixture"};
  CHECK_FALSE(check_grading_alignment(bad, 0).pass());

  auto fixed = regrade(bad);
  CHECK(check_grading_alignment(fixed, 0).pass());
  CHECK(fixed.A.require_parity() == 1);
  CHECK(fixed.B.require_parity() == 1);
  CHECK(fixed.Eps.require_parity() == 0);
  for (std::size_t i = 0; i < rep.space->dim(); ++i)
    CHECK(fixed.space->at(i).parity == rep.space->at(i).parity);

  // Idempotent on misgraded inputs.
  auto twice = regrade(fixed);
  for (std::size_t i = 0; i < fixed.space->dim(); ++i)
    CHECK(twice.space->at(i).parity == fixed.space->at(i).parity);

  // Non-idempotent E refuses.
  Representation broken = rep;
  broken.Eps = rep.Eps.scaled(Scalar(2));
  CHECK_THROWS_AS(regrade(broken), std::domain_error);
}

TEST_CASE("derived even generators on the weight-zero chain") {
  auto rep = build_module(WeightedSpec::make(Scalar(0), -12, 12));
  OspAction osp = derive_osp(rep);
  CHECK(osp.E.apply_basis("e1") == Vec{{"e3", Scalar(1)}});
  CHECK(osp.H.apply_basis("e2") == Vec{{"e2", Scalar(1)}});
  CHECK(osp.F.apply_basis("e2") == Vec{{"e0", Scalar::rational(1, 4)}});
}

TEST_CASE("even-generator relations") {
  auto rep = build_module(WeightedSpec::make(Scalar(0), -16, 16));
  OspAction osp = derive_osp(rep);
  Report r = check_osp_relations(osp, rep, 4);
  CHECK(r.pass());
  CHECK(r.results.size() == 12);

  auto low = build_module(WeightedSpec::with_default_window(Scalar(1)));
  CHECK(check_osp_relations(derive_osp(low), low, 4).pass());

  // Shifting E by the identity shifts [H,E] off target.
  OspAction broken = osp;
  broken.E = osp.E + GradedOperator::identity(rep.space);
  Report br = check_osp_relations(broken, rep, 4);
  CHECK_FALSE(entry(br, "[H,E] = 2E").pass);

  CHECK_THROWS_AS(check_osp_relations(osp, rep, 3), std::invalid_argument);
}

TEST_CASE("ghost invariant") {
  auto rep = build_module(WeightedSpec::make(Scalar(0), -12, 12));
  auto gamma = ghost_casimir(rep);
  Scalar half = Scalar::rational(1, 2);
  CHECK(gamma.apply_basis("e1") == Vec{{"e1", half}});
  CHECK(gamma.apply_basis("e2") == Vec{{"e2", -half}});
  CHECK(gamma + GradedOperator::identity(rep.space).scaled(half) == rep.Eps);
}

TEST_CASE("Casimir identities") {
  auto rep = build_module(WeightedSpec::make(Scalar(0), -24, 24));
  Report r = check_casimir_identities(rep, 8);
  CHECK(r.pass());
  CHECK(r.results.size() == 9);

  // C0 = C - E/2 acts as -1/2 on interior odd vectors.
  OspAction osp = derive_osp(rep);
  Scalar half = Scalar::rational(1, 2);
  auto c0 = osp.E * osp.F + osp.F * osp.E + (osp.H * osp.H).scaled(half);
  CHECK(c0.apply_basis("e3") == Vec{{"e3", -half}});

  CHECK_THROWS_AS(check_casimir_identities(rep, 7), std::invalid_argument);

  // Scaling B rescales E and breaks the ghost square.
  Representation scaled = rep;
  scaled.B = rep.B.scaled(Scalar(2));
  scaled.Eps = (scaled.A * scaled.B - scaled.B * scaled.A);
  Report br = check_casimir_identities(scaled, 8);
  CHECK_FALSE(entry(br, "Gamma^2 = Id/4").pass);
}

TEST_CASE("ghost eigenvalue tracks parity across weights") {
  Scalar half = Scalar::rational(1, 2);
  for (const char* w : {"0", "1/2", "-3/2", "1/3", "1", "3", "7", "-1", "-5"}) {
    auto rep = build_module(WeightedSpec::with_default_window(Scalar::parse(w)));
    auto gamma = ghost_casimir(rep);
    for (const auto& col : rep.interior(0)) {
      Scalar expected = rep.space->parity(col) == 1 ? half : -half;
      CHECK(gamma.apply_basis(col) == Vec{{col, expected}});
    }
  }
}

TEST_CASE("complex weight windows satisfy every suite") {
  for (const char* w : {"i", "2+i"}) {
    auto rep = build_module(WeightedSpec::with_default_window(Scalar::parse(w)));
    CHECK(check_asl_relations(rep, 2).pass());
    CHECK(check_osp_relations(derive_osp(rep), rep, 4).pass());
    CHECK(check_casimir_identities(rep, 8).pass());
  }
}
