#include "asl2/rep.hpp"

#include <stdexcept>

namespace asl2 {

std::vector<std::string> Representation::interior(int margin) const {
  if (margin < 0) throw std::invalid_argument("margin must be nonnegative");
  long lo = kmin + (bottom_truncated ? margin : 0);
  long hi = kmax - (top_truncated ? margin : 0);
  std::vector<std::string> out;
  for (const auto& b : space->basis())
    if (b.index >= lo && b.index <= hi) out.push_back(b.label);
  return out;
}

namespace {

std::vector<std::string> interior_or_throw(const Representation& rep,
                                           int margin, int min_margin,
                                           const char* what) {
  if (margin < min_margin)
    throw std::invalid_argument(std::string(what) + " needs margin >= " +
                                std::to_string(min_margin));
  auto cols = rep.interior(margin);
  if (cols.empty())
    throw std::invalid_argument(std::string("window too small for margin ") +
                                std::to_string(margin));
  return cols;
}

}  // namespace

Report check_asl_relations(const Representation& rep, int margin) {
  auto cols = interior_or_throw(rep, margin, 2, "relation check");
  const auto& A = rep.A;
  const auto& B = rep.B;
  const auto& E = rep.Eps;
  Report report;
  report.add(check_columns("AB-BA = E", A * B - B * A, E, cols));
  report.add(check_columns("AE+EA = A", A * E + E * A, A, cols));
  report.add(check_columns("BE+EB = B", B * E + E * B, B, cols));
  report.add(check_columns("E^2 = E", E * E, E, cols));
  return report;
}

Report check_grading_alignment(const Representation& rep, int margin) {
  auto cols = interior_or_throw(rep, margin, 0, "alignment check");
  GradedOperator projector(rep.space, rep.space, 0);
  for (const auto& b : rep.space->basis())
    if (b.parity == 1) projector.set(b.label, b.label, Scalar(1));
  Report report;
  report.add(
      check_columns("E = parity projector", rep.Eps, projector, cols));
  return report;
}

Representation regrade(const Representation& rep) {
  auto proj = is_projector(rep.Eps);
  if (!proj.idempotent)
    throw std::domain_error("regrade requires an idempotent E");

  // Eigenvalue per basis vector; requires E diagonal on the basis.
  std::vector<BasisVector> new_basis;
  for (const auto& b : rep.space->basis()) {
    Vec col = rep.Eps.column(b.label);
    int eig;
    if (col.empty()) {
      eig = 0;
    } else if (col.size() == 1 && col.count(b.label)) {
      const Scalar& v = col.at(b.label);
      if (v == Scalar(1))
        eig = 1;
      else if (v.is_zero())
        eig = 0;
      else
        throw std::domain_error("E is not diagonal 0/1 at " + b.label);
    } else {
      throw std::domain_error("E is not diagonal on the basis at " + b.label);
    }
    BasisVector nb = b;
    nb.parity = eig;
    new_basis.push_back(std::move(nb));
  }
  auto new_space = std::make_shared<GradedSpace>(std::move(new_basis));

  auto rebuild = [&](const GradedOperator& op, int parity) {
    GradedOperator out(new_space, new_space, parity);
    for (const auto& [col, colmap] : op.columns())
      for (const auto& [row, v] : colmap) out.set(row, col, v);
    return out;
  };

  Representation out{rep.space, rep.A, rep.B, rep.Eps, rep.kmin, rep.kmax,
                     rep.bottom_truncated, rep.top_truncated, rep.provenance};
  out.space = new_space;
  out.A = rebuild(rep.A, 1);
  out.B = rebuild(rep.B, 1);
  out.Eps = rebuild(rep.Eps, 0);
  return out;
}

OspAction derive_osp(const Representation& rep) {
  OspAction osp{rep.A * rep.A, (rep.B * rep.B).scaled(Scalar(-1)),
                (rep.A * rep.B + rep.B * rep.A).scaled(Scalar(-1))};
  return osp;
}

namespace {

GradedOperator comm(const GradedOperator& X, const GradedOperator& Y) {
  return X * Y - Y * X;
}

}  // namespace

Report check_osp_relations(const OspAction& osp, const Representation& rep,
                           int margin) {
  auto cols = interior_or_throw(rep, margin, 4, "osp relation check");
  const auto& E = osp.E;
  const auto& F = osp.F;
  const auto& H = osp.H;
  const auto& A = rep.A;
  const auto& B = rep.B;
  const auto& Ep = rep.Eps;
  auto zero_even = GradedOperator::zero(rep.space, rep.space, 0);
  auto zero_odd = GradedOperator::zero(rep.space, rep.space, 1);

  Report report;
  report.add(check_columns("[H,E] = 2E", comm(H, E), E.scaled(Scalar(2)), cols));
  report.add(
      check_columns("[H,F] = -2F", comm(H, F), F.scaled(Scalar(-2)), cols));
  report.add(check_columns("[E,F] = H", comm(E, F), H, cols));
  report.add(check_columns("[H,A] = A", comm(H, A), A, cols));
  report.add(check_columns("[E,A] = 0", comm(E, A), zero_odd, cols));
  report.add(check_columns("[F,A] = B", comm(F, A), B, cols));
  report.add(check_columns("[H,B] = -B", comm(H, B), B.scaled(Scalar(-1)), cols));
  report.add(check_columns("[E,B] = A", comm(E, B), A, cols));
  report.add(check_columns("[F,B] = 0", comm(F, B), zero_odd, cols));
  report.add(check_columns("[H,Eps] = 0", comm(H, Ep), zero_even, cols));
  report.add(check_columns("[E,Eps] = 0", comm(E, Ep), zero_even, cols));
  report.add(check_columns("[F,Eps] = 0", comm(F, Ep), zero_even, cols));
  return report;
}

GradedOperator ghost_casimir(const Representation& rep) {
  return rep.Eps -
         GradedOperator::identity(rep.space).scaled(Scalar::rational(1, 2));
}

Report check_casimir_identities(const Representation& rep, int margin) {
  auto cols = interior_or_throw(rep, margin, 8, "Casimir check");
  OspAction osp = derive_osp(rep);
  GradedOperator gamma = ghost_casimir(rep);
  GradedOperator id = GradedOperator::identity(rep.space);
  Scalar half = Scalar::rational(1, 2);

  GradedOperator ef = osp.E * osp.F + osp.F * osp.E;
  GradedOperator c0 = ef + (osp.H * osp.H).scaled(half);
  GradedOperator c =
      c0 + (rep.A * rep.B - rep.B * rep.A).scaled(half);
  GradedOperator cdiff = c - c0;

  auto zero_even = GradedOperator::zero(rep.space, rep.space, 0);

  Report report;
  report.add(check_columns("Gamma^2 = Id/4", gamma * gamma,
                           id.scaled(Scalar::rational(1, 4)), cols));
  report.add(check_columns_zero("twisted ad_A Gamma = 0",
                                bracket(rep.A, gamma, BracketMode::Twisted),
                                cols));
  report.add(check_columns_zero("twisted ad_B Gamma = 0",
                                bracket(rep.B, gamma, BracketMode::Twisted),
                                cols));
  report.add(check_columns("[E,Gamma] = 0", comm(osp.E, gamma), zero_even, cols));
  report.add(check_columns("[F,Gamma] = 0", comm(osp.F, gamma), zero_even, cols));
  report.add(check_columns("[H,Gamma] = 0", comm(osp.H, gamma), zero_even, cols));
  report.add(check_columns("Eps = 2(C-C0)", rep.Eps, cdiff.scaled(Scalar(2)),
                           cols));
  report.add(check_columns("4(C-C0)^2 = 4C-2C0",
                           (cdiff * cdiff).scaled(Scalar(4)),
                           c.scaled(Scalar(4)) - c0.scaled(Scalar(2)), cols));
  report.add(check_columns("C = 0", c, zero_even, cols));
  return report;
}

}  // namespace asl2
