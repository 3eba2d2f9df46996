#include <doctest.h>

#include <stdexcept>

#include "asl2/antialgebra.hpp"
#include "asl2/weighted.hpp"

using namespace asl2;

namespace {

bool axiom_passes(const Report& r, const std::string& prefix) {
  for (const auto& e : r.results)
    if (e.identity.rfind(prefix, 0) == 0) return e.pass;
  throw std::logic_error("missing axiom entry: " + prefix);
}

const IdentityResult& axiom_entry(const Report& r, const std::string& prefix) {
  for (const auto& e : r.results)
    if (e.identity.rfind(prefix, 0) == 0) return e;
  throw std::logic_error("missing axiom entry: " + prefix);
}

}  // namespace

TEST_CASE("builtin structure constants") {
  auto alg = asl2_data(ScalarMode::Real);
  Scalar half = Scalar::rational(1, 2);
  CHECK(alg.product("a", "b") == Vec{{"eps", half}});
  CHECK(alg.product("b", "a") == Vec{{"eps", -half}});
  CHECK(alg.product("a", "a").empty());
  CHECK(alg.product("eps", "eps") == Vec{{"eps", Scalar(1)}});
  CHECK(alg.product("eps", "a") == Vec{{"a", half}});
}

TEST_CASE("axioms hold in both modes") {
  for (auto mode : {ScalarMode::Real, ScalarMode::Complex}) {
    Report r = verify_axioms(asl2_data(mode));
    CHECK(r.pass());
    CHECK(r.results.size() == 6);
  }
}

TEST_CASE("half-action mutation fails axiom 4 at (eps,eps,a)") {
  auto alg = asl2_data(ScalarMode::Real);
  alg.set_product("eps", "a", {{"a", Scalar(1)}});
  alg.set_product("a", "eps", {{"a", Scalar(1)}});
  Report r = verify_axioms(alg);
  CHECK_FALSE(r.pass());
  const auto& ax4 = axiom_entry(r, "axiom 4");
  CHECK_FALSE(ax4.pass);
  bool found = false;
  for (const auto& f : ax4.failures)
    if (f.where == Json::array({"eps", "eps", "a"})) found = true;
  CHECK(found);
}

TEST_CASE("zero product passes every axiom") {
  AntialgebraData alg;
  alg.basis_space = std::make_shared<GradedSpace>(
      std::vector<BasisVector>{{"x", 0, 0, {}}, {"y", 1, 1, {}}});
  CHECK(verify_axioms(alg).pass());
}

TEST_CASE("evenness violation is axiom 1") {
  auto alg = asl2_data(ScalarMode::Real);
  alg.set_product("eps", "eps", {{"a", Scalar(1)}});
  Report r = verify_axioms(alg);
  CHECK_FALSE(axiom_passes(r, "axiom 1"));
}

TEST_CASE("structure constants JSON round trip") {
  auto alg = asl2_data(ScalarMode::Real);
  Json j = structure_constants_json(alg);
  auto back = load_structure_constants(j);
  CHECK(back.products == alg.products);
  CHECK(*back.basis_space == *alg.basis_space);
  CHECK(verify_axioms(back).pass());
  CHECK_THROWS_AS(load_structure_constants(Json::object()),
                  std::invalid_argument);
}

TEST_CASE("representation property on a chain window") {
  auto alg = asl2_data(ScalarMode::Real);
  auto rep = build_module(WeightedSpec::make(Scalar(0), -12, 12));
  Scalar half = Scalar::rational(1, 2);
  std::map<std::string, GradedOperator> chi{{"eps", rep.Eps.scaled(half)},
                                            {"a", rep.A.scaled(half)},
                                            {"b", rep.B.scaled(half)}};
  auto cols = rep.interior(2);
  CHECK(check_representation_property(alg, chi, &cols).pass());

  // Doubling one odd generator breaks the defining identity at the pair (a,b).
  auto chi2 = chi;
  chi2.at("a") = rep.A;  // scale 2 relative to the correct normalization
  Report r = check_representation_property(alg, chi2, &cols);
  CHECK_FALSE(r.pass());
  bool ab_failed = false;
  for (const auto& e : r.results)
    if (e.identity.find("chi_a,chi_b") != std::string::npos && !e.pass)
      ab_failed = true;
  CHECK(ab_failed);
}

TEST_CASE("the multiplication maps are not a representation") {
  auto alg = asl2_data(ScalarMode::Real);
  std::map<std::string, GradedOperator> ad;
  for (const auto& x : alg.basis_space->basis()) {
    GradedOperator op(alg.basis_space, alg.basis_space, x.parity);
    for (const auto& y : alg.basis_space->basis())
      for (const auto& [l, c] : alg.product(x.label, y.label))
        op.set(l, y.label, c);
    ad.emplace(x.label, op);
  }
  CHECK_FALSE(check_representation_property(alg, ad).pass());
}

TEST_CASE("zero map is a representation") {
  auto alg = asl2_data(ScalarMode::Real);
  auto s = std::make_shared<GradedSpace>(
      std::vector<BasisVector>{{"w0", 0, 0, {}}, {"w1", 1, 1, {}}});
  std::map<std::string, GradedOperator> chi{
      {"eps", GradedOperator::zero(s, s, 0)},
      {"a", GradedOperator::zero(s, s, 1)},
      {"b", GradedOperator::zero(s, s, 1)}};
  CHECK(check_representation_property(alg, chi).pass());
}

TEST_CASE("representation property requires an even map") {
  auto alg = asl2_data(ScalarMode::Real);
  auto s = std::make_shared<GradedSpace>(
      std::vector<BasisVector>{{"w0", 0, 0, {}}, {"w1", 1, 1, {}}});
  std::map<std::string, GradedOperator> chi{
      {"eps", GradedOperator::zero(s, s, 1)},  // wrong parity
      {"a", GradedOperator::zero(s, s, 1)},
      {"b", GradedOperator::zero(s, s, 1)}};
  CHECK_THROWS_AS(check_representation_property(alg, chi),
                  std::invalid_argument);
}
