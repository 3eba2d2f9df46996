#include "asl2/weighted.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace asl2 {

namespace {

long floor_rational(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!f.fits_slong_p()) throw std::domain_error("weight out of range");
  return f.get_si();
}

}  // namespace

std::string chain_label(long k) { return "e" + std::to_string(k); }

WeightedCase WeightedSpec::case_for(const Scalar& ell) {
  if (ell.is_odd_integer())
    return ell.re() > 0 ? WeightedCase::LowestWeight
                        : WeightedCase::HighestWeight;
  return WeightedCase::Generic;
}

WeightedSpec WeightedSpec::with_default_window(const Scalar& ell) {
  WeightedSpec s;
  s.ell = ell;
  s.kind = case_for(ell);
  switch (s.kind) {
    case WeightedCase::Generic:
      s.kmin = -24;
      s.kmax = 24;
      break;
    case WeightedCase::LowestWeight:
      s.kmin = 2 - ell.to_long();
      s.kmax = s.kmin + 48;
      break;
    case WeightedCase::HighestWeight:
      s.kmax = -ell.to_long();
      s.kmin = s.kmax - 48;
      break;
  }
  return s;
}

WeightedSpec WeightedSpec::make(const Scalar& ell, long kmin, long kmax) {
  return make_with_case(case_for(ell), ell, kmin, kmax);
}

WeightedSpec WeightedSpec::make_with_case(WeightedCase kind, const Scalar& ell,
                                          long kmin, long kmax) {
  WeightedSpec s;
  s.ell = ell;
  s.kind = kind;
  s.kmin = kmin;
  s.kmax = kmax;
  return s;
}

void WeightedSpec::validate() const {
  if (kmin >= kmax)
    throw std::invalid_argument("window requires kmin < kmax");
  switch (kind) {
    case WeightedCase::Generic:
      break;
    case WeightedCase::LowestWeight:
      if (!ell.is_odd_integer() || ell.re() <= 0)
        throw std::invalid_argument(
            "lowest-weight case requires a positive odd integer weight");
      if (kmin != 2 - ell.to_long())
        throw std::invalid_argument("lowest-weight window must start at 2-l");
      break;
    case WeightedCase::HighestWeight:
      if (!ell.is_odd_integer() || ell.re() >= 0)
        throw std::invalid_argument(
            "highest-weight case requires a negative odd integer weight");
      if (kmax != -ell.to_long())
        throw std::invalid_argument("highest-weight window must end at -l");
      break;
  }
}

Representation build_module(const WeightedSpec& spec) {
  spec.validate();
  const Scalar& ell = spec.ell;
  Scalar half = Scalar::rational(1, 2);
  Scalar base = (Scalar(1) - ell) * half;  // (1-l)/2

  long boundary = 0;
  if (spec.kind != WeightedCase::Generic) boundary = spec.ell.to_long();

  // Ladder coefficients of the full chain; genuine boundary zeros included.
  auto alpha = [&](long k) -> Scalar {
    if (spec.kind == WeightedCase::HighestWeight) {
      if (k >= -boundary) return Scalar(0);
      return base - Scalar(floor_half(k + 1));
    }
    return Scalar(1);
  };
  auto beta = [&](long k) -> Scalar {
    if (spec.kind == WeightedCase::HighestWeight) return Scalar(1);
    if (spec.kind == WeightedCase::LowestWeight && k <= 2 - boundary)
      return Scalar(0);
    return base - Scalar(floor_half(k));
  };

  std::vector<BasisVector> basis;
  for (long k = spec.kmin; k <= spec.kmax; ++k)
    basis.push_back({chain_label(k), static_cast<int>(((k % 2) + 2) % 2), k, {}});
  auto space = std::make_shared<GradedSpace>(std::move(basis));

  GradedOperator A(space, space, 1), B(space, space, 1), Eps(space, space, 0);
  for (long k = spec.kmin; k < spec.kmax; ++k)
    A.set(chain_label(k + 1), chain_label(k), alpha(k));
  for (long k = spec.kmin + 1; k <= spec.kmax; ++k)
    B.set(chain_label(k - 1), chain_label(k), beta(k));
  // AB-BA composed on the full chain is diagonal on every window column.
  for (long k = spec.kmin; k <= spec.kmax; ++k) {
    Scalar d = beta(k) * alpha(k - 1) - alpha(k) * beta(k + 1);
    Eps.set(chain_label(k), chain_label(k), d);
  }

  std::ostringstream prov;
  const char* kind_name = spec.kind == WeightedCase::Generic ? "generic"
                          : spec.kind == WeightedCase::LowestWeight
                              ? "lowest-weight"
                              : "highest-weight";
  prov << "V(" << ell << ") " << kind_name << " window [" << spec.kmin << ","
       << spec.kmax << "]";

  Representation rep{space,
                     A,
                     B,
                     Eps,
                     spec.kmin,
                     spec.kmax,
                     spec.kind != WeightedCase::LowestWeight,
                     spec.kind != WeightedCase::HighestWeight,
                     prov.str()};
  return rep;
}

Scalar weight_of_basis(const WeightedSpec& spec, long k) {
  if (k < spec.kmin || k > spec.kmax)
    throw std::invalid_argument("index outside window: " + std::to_string(k));
  return spec.ell + Scalar(k - 1);
}

Scalar ladder_coeff(LadderKind kind, long k, int i, const Scalar& ell) {
  if (k < 1) throw std::invalid_argument("ladder index must be >= 1");
  if (i != 0 && i != 1) throw std::invalid_argument("parity must be 0 or 1");
  Scalar half = Scalar::rational(1, 2);
  Scalar fh(floor_half(k - i));
  if (kind == LadderKind::Lambda) return fh + (Scalar(i) - ell) * half;
  return -fh - (Scalar(i) + ell) * half;
}

namespace {

long support_min(const SpacePtr& space, const Vec& v) {
  long m = 0;
  bool first = true;
  for (const auto& [l, c] : v) {
    long idx = space->vec(l).index;
    if (first || idx < m) m = idx;
    first = false;
  }
  return m;
}

long support_max(const SpacePtr& space, const Vec& v) {
  long m = 0;
  bool first = true;
  for (const auto& [l, c] : v) {
    long idx = space->vec(l).index;
    if (first || idx > m) m = idx;
    first = false;
  }
  return m;
}

// Applying a ladder operator to a vector supported on a truncated edge would
// silently drop the out-of-window component.
void check_step_safe(const Representation& rep, const Vec& v, bool upward) {
  if (vec_is_zero(v)) return;
  if (upward) {
    if (rep.top_truncated && support_max(rep.space, v) >= rep.kmax)
      throw std::invalid_argument("window overflow in ladder iteration");
  } else {
    if (rep.bottom_truncated && support_min(rep.space, v) <= rep.kmin)
      throw std::invalid_argument("window overflow in ladder iteration");
  }
}

}  // namespace

Scalar coeff_oracle(const Representation& rep, long v_index, LadderKind kind,
                    long k) {
  if (k < 1) throw std::invalid_argument("ladder index must be >= 1");
  std::string start = chain_label(v_index);
  rep.space->position(start);

  const GradedOperator& step = kind == LadderKind::Lambda ? rep.B : rep.A;
  const GradedOperator& back = kind == LadderKind::Lambda ? rep.A : rep.B;
  bool step_up = kind == LadderKind::Mu;

  Vec cur{{start, Scalar(1)}};
  Vec ref;
  for (long s = 0; s < k; ++s) {
    ref = cur;
    check_step_safe(rep, cur, step_up);
    cur = step.apply(cur);
  }
  check_step_safe(rep, cur, !step_up);
  Vec u = back.apply(cur);

  if (vec_is_zero(ref))
    throw std::domain_error("ladder coefficient undefined: reference vanishes");
  auto c = proportionality(u, ref);
  if (!c)
    throw std::domain_error("ladder image is not proportional to reference");
  return *c;
}

WeightClass canonicalize_weight(const Scalar& ell) {
  if (!ell.is_real_value()) {
    mpq_class t = (ell.re() + 1) / 2;
    long q = floor_rational(t);
    Scalar canonical(ell.re() - 2 * mpq_class(q), ell.im());
    return {WeightClass::Kind::ComplexStrip, canonical, -q};
  }
  if (ell.is_odd_integer()) {
    bool positive = ell.re() > 0;
    return {positive ? WeightClass::Kind::OddPositive
                     : WeightClass::Kind::OddNegative,
            Scalar(positive ? 1 : -1), std::nullopt};
  }
  mpq_class t = (ell.re() + 1) / 2;
  long q = floor_rational(t);
  Scalar canonical(ell.re() - 2 * mpq_class(q));
  return {WeightClass::Kind::RealNonOdd, canonical, -q};
}

std::string WeightClass::describe() const {
  std::ostringstream os;
  os << "canonical " << canonical.str();
  if (shift_m)
    os << ", shift m=" << *shift_m;
  else
    os << ", sign class (m unset)";
  return os.str();
}

IsoResult build_isomorphism(const WeightedSpec& from, const WeightedSpec& to) {
  from.validate();
  to.validate();
  WeightClass cf = canonicalize_weight(from.ell);
  WeightClass ct = canonicalize_weight(to.ell);

  IsoResult res;
  if (!cf.same_class(ct)) {
    auto is_odd_kind = [](WeightClass::Kind k) {
      return k == WeightClass::Kind::OddPositive ||
             k == WeightClass::Kind::OddNegative;
    };
    if (is_odd_kind(cf.kind) && is_odd_kind(ct.kind)) {
      res.obstruction =
          "opposite-sign odd weights: A acts injectively on the lowest-weight "
          "module but has a kernel on the highest-weight module";
    } else if (is_odd_kind(cf.kind) != is_odd_kind(ct.kind)) {
      res.obstruction = "odd vs non-odd weight: " + cf.canonical.str() +
                        " and " + ct.canonical.str() + " are never isomorphic";
    } else {
      res.obstruction = "distinct canonical class: " + cf.canonical.str() +
                        " vs " + ct.canonical.str();
    }
    return res;
  }

  Scalar diff = from.ell - to.ell;
  long shift = diff.to_long();
  if (from.kmin + shift < to.kmin || from.kmax + shift > to.kmax)
    throw std::invalid_argument(
        "window incompatibility: shifted source window must lie inside the "
        "target window");

  Representation rf = build_module(from);
  Representation rt = build_module(to);
  GradedOperator phi(rf.space, rt.space, 0);
  for (long k = from.kmin; k <= from.kmax; ++k)
    phi.set(chain_label(k + shift), chain_label(k), Scalar(1));

  auto cols = rf.interior(2);
  if (cols.empty())
    throw std::invalid_argument("window too small for equivariance check");
  Report eq;
  eq.add(check_columns("Phi A = A Phi", rt.A * phi, phi * rf.A, cols));
  eq.add(check_columns("Phi B = B Phi", rt.B * phi, phi * rf.B, cols));
  eq.add(check_columns("Phi E = E Phi", rt.Eps * phi, phi * rf.Eps, cols));

  res.isomorphic = eq.pass();
  res.map = phi;
  res.shift = shift;
  res.equivariance = std::move(eq);
  if (!res.isomorphic) res.obstruction = "equivariance residuals (unexpected)";
  return res;
}

std::vector<SplitPoint> find_splits(const Representation& rep) {
  std::vector<SplitPoint> out;
  for (long k = rep.kmin; k <= rep.kmax; ++k) {
    std::string l = chain_label(k);
    if (!rep.space->has(l)) continue;
    // A e_k = 0 leaves the lower sub-window invariant; skip the synthetic
    // zero column at a truncated top edge.
    if (rep.A.column(l).empty() && !(rep.top_truncated && k == rep.kmax))
      out.push_back({'A', k, rep.kmin, k, !rep.top_truncated && k == rep.kmax});
    if (rep.B.column(l).empty() && !(rep.bottom_truncated && k == rep.kmin))
      out.push_back(
          {'B', k, k, rep.kmax, !rep.bottom_truncated && k == rep.kmin});
  }
  return out;
}

Report detect_reducibility(const Representation& rep) {
  auto splits = find_splits(rep);
  IdentityResult res;
  res.identity = "reducibility scan";
  res.pass = true;
  Json jsplits = Json::array();
  std::size_t interior_splits = 0;
  for (const auto& s : splits) {
    Json j;
    j["op"] = std::string(1, s.op);
    j["k"] = s.k;
    j["invariant_subwindow"] = Json::array({s.sub_lo, s.sub_hi});
    j["defining_boundary"] = s.defining_boundary;
    jsplits.push_back(std::move(j));
    if (!s.defining_boundary) ++interior_splits;
  }
  res.extra = Json{{"splits", jsplits}};
  if (splits.empty()) {
    res.note = "no vanishing ladder coefficients: irreducible at window scale";
  } else if (interior_splits == 0) {
    res.note = "only the defining boundary zero; no interior split";
  } else {
    std::ostringstream os;
    os << interior_splits << " interior split point"
       << (interior_splits == 1 ? "" : "s") << " found";
    res.note = os.str();
  }
  Report report;
  report.add(std::move(res));
  return report;
}

std::vector<std::array<long, 3>> nogo_scan(long max_nm, long rhs) {
  if (max_nm < 1) throw std::invalid_argument("scan bound must be >= 1");
  std::vector<std::array<long, 3>> out;
  for (long i = 0; i <= 1; ++i)
    for (long n = 1; n <= max_nm; ++n)
      for (long m = 1; m <= max_nm; ++m)
        if (floor_half(n - i) + floor_half(m - i) + i == rhs)
          out.push_back({n, m, i});
  std::sort(out.begin(), out.end());
  return out;
}

std::string render_weight_diagram(const WeightedSpec& spec) {
  Representation rep = build_module(spec);
  std::vector<std::string> ks, ps, ws, as, bs;
  for (long k = spec.kmin; k <= spec.kmax; ++k) {
    ks.push_back(std::to_string(k));
    ps.push_back(std::to_string(((k % 2) + 2) % 2));
    ws.push_back(weight_of_basis(spec, k).str());
    Vec acol = rep.A.column(chain_label(k));
    if (k == spec.kmax && rep.top_truncated) {
      as.push_back("");
    } else {
      auto it = acol.find(chain_label(k + 1));
      as.push_back(it == acol.end() ? "0" : it->second.str());
    }
    Vec bcol = rep.B.column(chain_label(k));
    if (k == spec.kmin && rep.bottom_truncated) {
      bs.push_back("");
    } else {
      auto it = bcol.find(chain_label(k - 1));
      bs.push_back(it == bcol.end() ? "0" : it->second.str());
    }
  }
  std::size_t w = 1;
  for (const auto* v : {&ks, &ps, &ws, &as, &bs})
    for (const auto& s : *v) w = std::max(w, s.size());
  auto row = [&](const std::string& head, const std::vector<std::string>& v) {
    std::ostringstream os;
    os << head;
    for (const auto& s : v) {
      os << " ";
      os << std::string(w - s.size(), ' ') << s;
    }
    return os.str();
  };
  std::ostringstream os;
  os << rep.provenance << "\n";
  os << row("k        :", ks) << "\n";
  os << row("parity   :", ps) << "\n";
  os << row("weight   :", ws) << "\n";
  os << row("A k->k+1 :", as) << "\n";
  os << row("B k->k-1 :", bs) << "\n";
  return os.str();
}

}  // namespace asl2
