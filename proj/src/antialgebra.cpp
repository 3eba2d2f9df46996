#include "asl2/antialgebra.hpp"

#include <stdexcept>

namespace asl2 {

Vec AntialgebraData::product(const std::string& x, const std::string& y) const {
  basis_space->position(x);
  basis_space->position(y);
  auto it = products.find({x, y});
  if (it == products.end()) return {};
  return it->second;
}

Vec AntialgebraData::product(const Vec& x, const std::string& y) const {
  Vec out;
  for (const auto& [lx, cx] : x)
    out = vec_add(out, vec_scale(cx, product(lx, y)));
  return out;
}

Vec AntialgebraData::product(const std::string& x, const Vec& y) const {
  Vec out;
  for (const auto& [ly, cy] : y)
    out = vec_add(out, vec_scale(cy, product(x, ly)));
  return out;
}

Vec AntialgebraData::product(const Vec& x, const Vec& y) const {
  Vec out;
  for (const auto& [lx, cx] : x)
    out = vec_add(out, vec_scale(cx, product(lx, y)));
  return out;
}

void AntialgebraData::set_product(const std::string& x, const std::string& y,
                                  Vec value) {
  basis_space->position(x);
  basis_space->position(y);
  for (const auto& [l, c] : value) basis_space->position(l);
  if (vec_is_zero(value))
    products.erase({x, y});
  else
    products[{x, y}] = std::move(value);
}

AntialgebraData asl2_data(ScalarMode mode) {
  AntialgebraData alg;
  alg.mode = mode;
  alg.basis_space = std::make_shared<GradedSpace>(std::vector<BasisVector>{
      {"eps", 0, 0, {}}, {"a", 1, 1, {}}, {"b", 1, 2, {}}});
  Scalar half = Scalar::rational(1, 2);
  if (mode == ScalarMode::Complex) half = half.complexified();
  Scalar one = half + half;
  alg.set_product("eps", "eps", {{"eps", one}});
  alg.set_product("eps", "a", {{"a", half}});
  alg.set_product("a", "eps", {{"a", half}});
  alg.set_product("eps", "b", {{"b", half}});
  alg.set_product("b", "eps", {{"b", half}});
  alg.set_product("a", "b", {{"eps", half}});
  alg.set_product("b", "a", {{"eps", -half}});
  return alg;
}

namespace {

std::map<std::string, std::string> residual_strings(const Vec& v) {
  std::map<std::string, std::string> out;
  for (const auto& [k, c] : v) out.emplace(k, c.str());
  return out;
}

void record(IdentityResult& res, const Json& where, const std::string& column,
            const Vec& residual) {
  if (vec_is_zero(residual)) return;
  res.pass = false;
  res.failures.push_back({where, column, residual_strings(residual)});
}

}  // namespace

Report verify_axioms(const AntialgebraData& alg) {
  Report report;
  const auto& basis = alg.basis_space->basis();
  std::vector<std::string> even, odd;
  for (const auto& b : basis)
    (b.parity == 0 ? even : odd).push_back(b.label);

  auto parity = [&](const std::string& l) { return alg.basis_space->parity(l); };

  // 1: products land in the parity-(i+j) component only.
  {
    IdentityResult res;
    res.identity = "axiom 1 (evenness)";
    for (const auto& x : basis)
      for (const auto& y : basis) {
        Vec p = alg.product(x.label, y.label);
        Vec bad;
        for (const auto& [l, c] : p)
          if (parity(l) != (x.parity + y.parity) % 2) bad.emplace(l, c);
        res.checked.push_back(Json::array({x.label, y.label}));
        record(res, Json::array({x.label, y.label}), y.label, bad);
      }
    report.add(std::move(res));
  }

  // 2: x*y = (-1)^{p(x)p(y)} y*x.
  {
    IdentityResult res;
    res.identity = "axiom 2 (supercommutativity)";
    for (const auto& x : basis)
      for (const auto& y : basis) {
        int sign = (x.parity * y.parity) % 2 ? -1 : 1;
        Vec diff = vec_sub(alg.product(x.label, y.label),
                           vec_scale(Scalar(sign), alg.product(y.label, x.label)));
        res.checked.push_back(Json::array({x.label, y.label}));
        record(res, Json::array({x.label, y.label}), y.label, diff);
      }
    report.add(std::move(res));
  }

  // 3: the even part is a commutative associative algebra.
  {
    IdentityResult res;
    res.identity = "axiom 3 (even part commutative-associative)";
    for (const auto& x : even)
      for (const auto& y : even) {
        Vec diff = vec_sub(alg.product(x, y), alg.product(y, x));
        res.checked.push_back(Json::array({x, y}));
        record(res, Json::array({x, y}), y, diff);
        for (const auto& z : even) {
          Vec assoc = vec_sub(alg.product(alg.product(x, y), z),
                              alg.product(x, alg.product(y, z)));
          res.checked.push_back(Json::array({x, y, z}));
          record(res, Json::array({x, y, z}), z, assoc);
        }
      }
    report.add(std::move(res));
  }

  // 4: x1*(x2*y) = (x1*x2)*y / 2 for even x1, x2 and odd y.
  {
    IdentityResult res;
    res.identity = "axiom 4 (half-action)";
    Scalar half = Scalar::rational(1, 2);
    for (const auto& x1 : even)
      for (const auto& x2 : even)
        for (const auto& y : odd) {
          Vec diff = vec_sub(alg.product(x1, alg.product(x2, y)),
                             vec_scale(half, alg.product(alg.product(x1, x2), y)));
          res.checked.push_back(Json::array({x1, x2, y}));
          record(res, Json::array({x1, x2, y}), y, diff);
        }
    report.add(std::move(res));
  }

  // 5: x*(y1*y2) = (x*y1)*y2 + y1*(x*y2) for even x and odd y1, y2.
  {
    IdentityResult res;
    res.identity = "axiom 5 (Leibniz)";
    for (const auto& x : even)
      for (const auto& y1 : odd)
        for (const auto& y2 : odd) {
          Vec rhs = vec_add(alg.product(alg.product(x, y1), y2),
                            alg.product(y1, alg.product(x, y2)));
          Vec diff = vec_sub(alg.product(x, alg.product(y1, y2)), rhs);
          res.checked.push_back(Json::array({x, y1, y2}));
          record(res, Json::array({x, y1, y2}), y2, diff);
        }
    report.add(std::move(res));
  }

  // 6: cyclic sum y1*(y2*y3) + y2*(y3*y1) + y3*(y1*y2) = 0 on odd triples.
  {
    IdentityResult res;
    res.identity = "axiom 6 (Jacobi-type)";
    for (const auto& y1 : odd)
      for (const auto& y2 : odd)
        for (const auto& y3 : odd) {
          Vec sum = vec_add(alg.product(y1, alg.product(y2, y3)),
                            vec_add(alg.product(y2, alg.product(y3, y1)),
                                    alg.product(y3, alg.product(y1, y2))));
          res.checked.push_back(Json::array({y1, y2, y3}));
          record(res, Json::array({y1, y2, y3}), y3, sum);
        }
    report.add(std::move(res));
  }

  return report;
}

Report check_representation_property(
    const AntialgebraData& alg,
    const std::map<std::string, GradedOperator>& chi,
    const std::vector<std::string>* columns) {
  const auto& basis = alg.basis_space->basis();
  if (chi.size() != basis.size())
    throw std::invalid_argument("chi must map every basis label");
  SpacePtr space;
  for (const auto& x : basis) {
    auto it = chi.find(x.label);
    if (it == chi.end())
      throw std::invalid_argument("chi missing basis label: " + x.label);
    const GradedOperator& op = it->second;
    if (op.require_parity() != x.parity)
      throw std::invalid_argument("chi is not an even map at " + x.label);
    if (!same_space(op.domain(), op.codomain()))
      throw std::invalid_argument("chi_" + x.label + " is not square");
    if (!space)
      space = op.domain();
    else if (!same_space(space, op.domain()))
      throw std::invalid_argument("chi operators act on different spaces");
  }

  std::vector<std::string> cols;
  if (columns) {
    cols = *columns;
  } else {
    for (const auto& b : space->basis()) cols.push_back(b.label);
  }

  Report report;
  for (const auto& x : basis)
    for (const auto& y : basis) {
      GradedOperator lhs =
          bracket(chi.at(x.label), chi.at(y.label), BracketMode::Anticommutator);
      GradedOperator rhs = GradedOperator::zero(space, space,
                                                (x.parity + y.parity) % 2);
      for (const auto& [l, c] : alg.product(x.label, y.label))
        rhs = rhs + chi.at(l).scaled(c);
      report.add(check_columns("]chi_" + x.label + ",chi_" + y.label +
                                   "[ = chi_{" + x.label + "*" + y.label + "}",
                               lhs, rhs, cols));
    }
  return report;
}

AntialgebraData load_structure_constants(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("products"))
    throw std::invalid_argument(
        "structure constants need \"basis\" and \"products\"");
  std::vector<BasisVector> basis;
  long idx = 0;
  for (const auto& b : j.at("basis")) {
    BasisVector v;
    v.label = b.at("label").get<std::string>();
    v.parity = b.at("parity").get<int>();
    v.index = idx++;
    basis.push_back(std::move(v));
  }
  AntialgebraData alg;
  alg.basis_space = std::make_shared<GradedSpace>(std::move(basis));
  bool complex_seen = false;
  for (const auto& p : j.at("products")) {
    Vec value;
    for (const auto& term : p.at("result")) {
      Scalar c = Scalar::parse(term.at("coeff").get<std::string>());
      if (c.mode() == ScalarMode::Complex) complex_seen = true;
      if (!c.is_zero()) value[term.at("label").get<std::string>()] += c;
    }
    alg.set_product(p.at("left").get<std::string>(),
                    p.at("right").get<std::string>(), std::move(value));
  }
  alg.mode = complex_seen ? ScalarMode::Complex : ScalarMode::Real;
  return alg;
}

Json structure_constants_json(const AntialgebraData& alg) {
  Json j;
  Json basis = Json::array();
  for (const auto& b : alg.basis_space->basis())
    basis.push_back(Json{{"label", b.label}, {"parity", b.parity}});
  j["basis"] = std::move(basis);
  Json products = Json::array();
  for (const auto& [key, value] : alg.products) {
    Json result = Json::array();
    for (const auto& [l, c] : value)
      result.push_back(Json{{"label", l}, {"coeff", c.str()}});
    products.push_back(Json{
        {"left", key.first}, {"right", key.second}, {"result", result}});
  }
  j["products"] = std::move(products);
  return j;
}

}  // namespace asl2
