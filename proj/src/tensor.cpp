#include "asl2/tensor.hpp"

#include <stdexcept>

namespace asl2 {

namespace {

GradedOperator lift_left(const GradedOperator& X, const SpacePtr& right) {
  return tensor_lift(X, LiftSide::Left, right);
}

GradedOperator lift_right(const GradedOperator& X, const SpacePtr& left) {
  return tensor_lift(X, LiftSide::Right, left);
}

// X⊗Y with the Koszul convention, as (X⊗Id)(Id⊗Y).
GradedOperator kron(const GradedOperator& X, const GradedOperator& Y,
                    const SpacePtr& left, const SpacePtr& right) {
  return lift_left(X, right) * lift_right(Y, left);
}

}  // namespace

std::vector<std::string> product_interior(const TensorRep& t, int margin) {
  auto li = t.left.interior(margin);
  auto ri = t.right.interior(margin);
  std::vector<std::string> out;
  out.reserve(li.size() * ri.size());
  for (const auto& l : li)
    for (const auto& r : ri) out.push_back(l + "⊗" + r);
  return out;
}

TensorRep build_tensor(const Representation& left, const Representation& right) {
  const SpacePtr& ls = left.space;
  const SpacePtr& rs = right.space;
  SpacePtr space = tensor_space(ls, rs);

  GradedOperator atil = lift_left(left.A, rs) + lift_right(right.A, ls);
  GradedOperator btil = lift_left(left.B, rs) + lift_right(right.B, ls);
  GradedOperator etil = atil * btil - btil * atil;

  GradedOperator explicit_form = lift_left(left.Eps, rs) +
                                 lift_right(right.Eps, ls) +
                                 (kron(left.A, right.B, ls, rs) -
                                  kron(left.B, right.A, ls, rs))
                                     .scaled(Scalar(2));

  OspAction lo = derive_osp(left), ro = derive_osp(right);
  Scalar half = Scalar::rational(1, 2);
  GradedOperator cbar = kron(lo.E, ro.F, ls, rs) + kron(lo.F, ro.E, ls, rs) +
                        (kron(lo.H, ro.H, ls, rs) +
                         kron(left.A, right.B, ls, rs) -
                         kron(left.B, right.A, ls, rs))
                            .scaled(half);

  TensorRep t{left, right, space, atil, btil, etil, cbar};

  // The two constructions of the lifted projector candidate must coincide;
  // a mismatch means the sign convention on right lifts is broken.
  for (const auto& col : product_interior(t, 2))
    if (!vec_is_zero(etil.residual_column(explicit_form, col)))
      throw std::logic_error(
          "lifted E mismatch between defining and explicit forms at " + col);

  return t;
}

GradedOperator diagonal_casimir(const TensorRep& t) { return t.Cbar; }

Report check_deformed_relations(const TensorRep& t, int margin,
                                bool dump_residual) {
  if (margin < 8)
    throw std::invalid_argument("deformed relation check needs margin >= 8");
  auto cols = product_interior(t, margin);
  if (cols.empty())
    throw std::invalid_argument("windows too small for margin " +
                                std::to_string(margin));

  const auto& A = t.Atil;
  const auto& B = t.Btil;
  const auto& E = t.Etil;
  const auto& C = t.Cbar;
  Report report;
  report.add(check_columns("A~B~-B~A~ = E~", A * B - B * A, E, cols));
  report.add(check_columns("A~E~+E~A~ = A~", A * E + E * A, A, cols));
  report.add(check_columns("B~E~+E~B~ = B~", B * E + E * B, B, cols));
  report.add(check_columns("E~^2 = E~+4C", E * E,
                           E + C.scaled(Scalar(4)), cols));
  report.add(check_columns("[C,A~] = 0", C * A - A * C,
                           GradedOperator::zero(t.space, t.space, 1), cols));
  report.add(check_columns("[C,B~] = 0", C * B - B * C,
                           GradedOperator::zero(t.space, t.space, 1), cols));
  report.add(check_columns("[C,E~] = 0", C * E - E * C,
                           GradedOperator::zero(t.space, t.space, 0), cols));

  // The unlifted projector relation must fail somewhere: exhibit an interior
  // vector with (E~^2 - E~)v != 0.
  GradedOperator defect = E * E - E;
  IdentityResult witness;
  witness.identity = "E~^2 != E~ witness";
  witness.pass = false;
  for (const auto& col : cols) {
    Vec v = defect.column(col);
    if (!vec_is_zero(v)) {
      witness.pass = true;
      const auto& b = t.space->vec(col);
      witness.note = "E~^2 differs from E~ at " + col +
                     "; the unlifted relation system does not descend to the "
                     "product";
      witness.extra = Json{{"witness_index", index_json(b)},
                           {"witness_column", col}};
      break;
    }
  }
  if (!witness.pass)
    witness.note = "no interior vector with E~^2 != E~ (defect vanishes)";
  report.add(std::move(witness));

  if (dump_residual) {
    GradedOperator res = E * E - E - C.scaled(Scalar(4));
    IdentityResult dump;
    dump.identity = "residual E~^2-E~-4C table";
    dump.pass = true;
    Json table = Json::object();
    for (const auto& col : cols) {
      Vec v = res.column(col);
      Json entries = Json::object();
      for (const auto& [row, c] : v) entries[row] = c.str();
      table[col] = std::move(entries);
    }
    dump.extra = Json{{"residual", table}};
    dump.note = "expected all-zero on the interior";
    report.add(std::move(dump));
  }
  return report;
}

}  // namespace asl2
