#include "asl2/geom.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace asl2 {

namespace {

void add_term(std::map<long, Scalar>& terms, long n, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(n);
  if (it == terms.end()) {
    terms.emplace(n, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string exponent_str(const Scalar& lambda, long n) {
  return (lambda + Scalar(n)).str();
}

std::string even_label(const Scalar& lambda, long n) {
  return "x^(" + exponent_str(lambda, n) + ")";
}

std::string odd_label(const Scalar& lambda, long n) {
  return even_label(lambda, n) + "xi";
}

}  // namespace

SuperFunction SuperFunction::monomial(const Scalar& lambda, long n, bool odd,
                                      const Scalar& coeff) {
  SuperFunction f;
  f.lambda = lambda;
  if (!coeff.is_zero()) (odd ? f.odd_terms : f.even_terms).emplace(n, coeff);
  return f;
}

bool SuperFunction::is_zero() const {
  return even_terms.empty() && odd_terms.empty();
}

void SuperFunction::prune() {
  for (auto* terms : {&even_terms, &odd_terms})
    for (auto it = terms->begin(); it != terms->end();)
      it = it->second.is_zero() ? terms->erase(it) : std::next(it);
}

std::string SuperFunction::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](long n, const Scalar& c, bool odd) {
    if (!first) os << " + ";
    first = false;
    if (c != Scalar(1)) os << c.str() << " ";
    os << "x^{" << exponent_str(lambda, n) << "}";
    if (odd) os << " ξ";
  };
  for (const auto& [n, c] : even_terms) emit(n, c, false);
  for (const auto& [n, c] : odd_terms) emit(n, c, true);
  return os.str();
}

SuperFunction apply_field(GeomField field, const SuperFunction& f) {
  SuperFunction out;
  out.lambda = f.lambda;
  const Scalar& la = f.lambda;
  auto exp_of = [&](long n) { return la + Scalar(n); };

  switch (field) {
    case GeomField::D:
    case GeomField::A:
      // D(f + g xi) = g + f' xi
      for (const auto& [n, c] : f.odd_terms) add_term(out.even_terms, n, c);
      for (const auto& [n, c] : f.even_terms)
        add_term(out.odd_terms, n - 1, c * exp_of(n));
      break;
    case GeomField::B:
      // x D: x^p xi -> x^{p+1}, x^p -> p x^p xi
      for (const auto& [n, c] : f.odd_terms) add_term(out.even_terms, n + 1, c);
      for (const auto& [n, c] : f.even_terms)
        add_term(out.odd_terms, n, c * exp_of(n));
      break;
    case GeomField::Eps:
      // xi D projects onto the odd part
      for (const auto& [n, c] : f.odd_terms) add_term(out.odd_terms, n, c);
      break;
    case GeomField::E:
      for (const auto& [n, c] : f.even_terms)
        add_term(out.even_terms, n - 1, c * exp_of(n));
      for (const auto& [n, c] : f.odd_terms)
        add_term(out.odd_terms, n - 1, c * exp_of(n));
      break;
    case GeomField::F:
      // -x^2 d/dx - x xi D; the second term reaches only the odd part.
      for (const auto& [n, c] : f.even_terms)
        add_term(out.even_terms, n + 1, -c * exp_of(n));
      for (const auto& [n, c] : f.odd_terms)
        add_term(out.odd_terms, n + 1, -c * (exp_of(n) + Scalar(1)));
      break;
    case GeomField::H:
      for (const auto& [n, c] : f.even_terms)
        add_term(out.even_terms, n, Scalar(-2) * c * exp_of(n));
      for (const auto& [n, c] : f.odd_terms)
        add_term(out.odd_terms, n, Scalar(-2) * c * exp_of(n) - c);
      break;
    default:
      throw std::logic_error("unreachable");
  }
  return out;
}

SpacePtr geom_space(const Scalar& lambda, long degree_window) {
  if (degree_window < 1)
    throw std::invalid_argument("degree window must be >= 1");
  std::vector<BasisVector> basis;
  for (long n = -degree_window; n <= degree_window; ++n) {
    basis.push_back({even_label(lambda, n), 0, n, {}});
    basis.push_back({odd_label(lambda, n), 1, n, {}});
  }
  return std::make_shared<GradedSpace>(std::move(basis));
}

namespace {

int field_parity(GeomField field) {
  switch (field) {
    case GeomField::D:
    case GeomField::A:
    case GeomField::B:
      return 1;
    default:
      return 0;
  }
}

GradedOperator field_operator_on(const SpacePtr& space, GeomField field,
                                 const Scalar& lambda, long degree_window) {
  GradedOperator op(space, space, field_parity(field));
  for (long n = -degree_window; n <= degree_window; ++n)
    for (bool odd : {false, true}) {
      SuperFunction src = SuperFunction::monomial(lambda, n, odd);
      SuperFunction dst = apply_field(field, src);
      std::string col = odd ? odd_label(lambda, n) : even_label(lambda, n);
      for (const auto& [m, c] : dst.even_terms)
        if (m >= -degree_window && m <= degree_window)
          op.set(even_label(lambda, m), col, c);
      for (const auto& [m, c] : dst.odd_terms)
        if (m >= -degree_window && m <= degree_window)
          op.set(odd_label(lambda, m), col, c);
    }
  return op;
}

}  // namespace

GradedOperator geom_field_operator(GeomField field, const Scalar& lambda,
                                   long degree_window) {
  return field_operator_on(geom_space(lambda, degree_window), field, lambda,
                           degree_window);
}

Representation geom_rep(const Scalar& lambda, long degree_window) {
  SpacePtr space = geom_space(lambda, degree_window);
  std::ostringstream prov;
  prov << "F[xi]/(xi^2) span at lambda=" << lambda << ", |n| <= "
       << degree_window;
  Representation rep{space,
                     field_operator_on(space, GeomField::A, lambda, degree_window),
                     field_operator_on(space, GeomField::B, lambda, degree_window),
                     field_operator_on(space, GeomField::Eps, lambda, degree_window),
                     -degree_window,
                     degree_window,
                     true,
                     true,
                     prov.str()};
  return rep;
}

Report check_geom_relations(const Scalar& lambda, long degree_window) {
  if (degree_window < 8)
    throw std::invalid_argument("geometric check needs degree window >= 8");
  Representation rep = geom_rep(lambda, degree_window);
  Report report;
  report.merge(check_grading_alignment(rep, 0));
  report.merge(check_asl_relations(rep, 2));
  OspAction osp = derive_osp(rep);
  report.merge(check_osp_relations(osp, rep, 4));
  report.merge(check_casimir_identities(rep, 8));

  // The explicit first-order fields must agree with the products of A and B.
  auto cols = rep.interior(2);
  report.add(check_columns(
      "E field = A^2",
      field_operator_on(rep.space, GeomField::E, lambda, degree_window), osp.E,
      cols));
  report.add(check_columns(
      "F field = -B^2",
      field_operator_on(rep.space, GeomField::F, lambda, degree_window), osp.F,
      cols));
  report.add(check_columns(
      "H field = -(AB+BA)",
      field_operator_on(rep.space, GeomField::H, lambda, degree_window), osp.H,
      cols));

  // Integer lambda puts x^0 in the lattice; A, B and Eps all kill it.
  IdentityResult red;
  red.identity = "reducibility";
  red.pass = true;
  if (lambda.is_integer()) {
    long n0 = -lambda.to_long();
    red.note = "integer lambda: trivial invariant line";
    if (n0 >= -degree_window && n0 <= degree_window) {
      std::string l = even_label(lambda, n0);
      red.extra = Json{{"invariant_line", l},
                       {"A", vec_is_zero(rep.A.column(l))},
                       {"B", vec_is_zero(rep.B.column(l))},
                       {"Eps", vec_is_zero(rep.Eps.column(l))}};
    }
  } else {
    red.note = "non-integer lambda: no invariant line on the lattice";
  }
  report.add(std::move(red));
  return report;
}

IntertwineResult generate_and_intertwine(const Scalar& lambda, long kmin,
                                         long kmax) {
  if (kmin >= kmax) throw std::invalid_argument("window requires kmin < kmax");
  IntertwineResult result;
  result.weight = Scalar(-2) * lambda - Scalar(1);

  if (lambda.is_integer()) {
    result.reducible_case = true;
    IdentityResult refuse;
    refuse.identity = "generate_and_intertwine";
    refuse.pass = false;
    refuse.note =
        "reducible case: integer lambda generates a module with a trivial "
        "invariant line";
    result.report.add(std::move(refuse));

    // Exhibit the submodule: the constant monomial is killed by all fields.
    long n0 = -lambda.to_long();
    SuperFunction one = SuperFunction::monomial(lambda, n0, false);
    IdentityResult sub;
    sub.identity = "trivial submodule span{" + even_label(lambda, n0) + "}";
    sub.pass = apply_field(GeomField::A, one).is_zero() &&
               apply_field(GeomField::B, one).is_zero() &&
               apply_field(GeomField::Eps, one).is_zero();
    sub.extra = Json{{"A", apply_field(GeomField::A, one).str()},
                     {"B", apply_field(GeomField::B, one).str()},
                     {"Eps", apply_field(GeomField::Eps, one).str()}};
    result.report.add(std::move(sub));
    return result;
  }

  WeightedSpec spec = WeightedSpec::make(result.weight, kmin, kmax);
  Representation module = build_module(spec);

  // Single-monomial images of the chain basis, generated from x^lambda xi.
  struct Mono {
    long n;
    bool odd;
    Scalar coeff;
  };
  std::map<long, Mono> images;
  images[1] = {0, true, Scalar(1)};
  auto single_term = [](const SuperFunction& f) -> Mono {
    if (f.even_terms.size() + f.odd_terms.size() != 1)
      throw std::logic_error("generated image is not a monomial");
    if (!f.even_terms.empty()) {
      auto& [n, c] = *f.even_terms.begin();
      return {n, false, c};
    }
    auto& [n, c] = *f.odd_terms.begin();
    return {n, true, c};
  };
  for (long k = 1; k < kmax; ++k) {
    const Mono& m = images.at(k);
    SuperFunction f = SuperFunction::monomial(lambda, m.n, m.odd, m.coeff);
    images[k + 1] = single_term(apply_field(GeomField::A, f));
  }
  Scalar half = Scalar::rational(1, 2);
  for (long k = 1; k > kmin; --k) {
    const Mono& m = images.at(k);
    Scalar beta = (Scalar(1) - result.weight) * half - Scalar(floor_half(k));
    SuperFunction f = SuperFunction::monomial(lambda, m.n, m.odd, m.coeff);
    Mono down = single_term(apply_field(GeomField::B, f));
    down.coeff = down.coeff / beta;
    images[k - 1] = down;
  }

  long reach = 0;
  for (const auto& [k, m] : images)
    reach = std::max(reach, m.n >= 0 ? m.n : -m.n);
  long w = reach + 2;
  Representation geo = geom_rep(lambda, w);

  GradedOperator phi(module.space, geo.space, 0);
  for (const auto& [k, m] : images) {
    std::string row = m.odd ? odd_label(lambda, m.n) : even_label(lambda, m.n);
    phi.set(row, chain_label(k), m.coeff);
    result.normalization.push_back({k, m.n, m.odd, m.coeff});
  }

  auto cols = module.interior(2);
  if (cols.empty())
    throw std::invalid_argument("window too small for intertwiner check");
  result.report.add(
      check_columns("Phi A = A Phi", geo.A * phi, phi * module.A, cols));
  result.report.add(
      check_columns("Phi B = B Phi", geo.B * phi, phi * module.B, cols));
  result.report.add(
      check_columns("Phi E = E Phi", geo.Eps * phi, phi * module.Eps, cols));
  result.report.add(check_columns("Phi H = H Phi",
                                  derive_osp(geo).H * phi,
                                  phi * derive_osp(module).H, cols));
  result.map = phi;

  IdentityResult wnote;
  wnote.identity = "intertwined weight";
  wnote.pass = true;
  wnote.note = "weight -2*lambda-1 = " + result.weight.str();
  result.report.add(std::move(wnote));
  return result;
}

}  // namespace asl2
