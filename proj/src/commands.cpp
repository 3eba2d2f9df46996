#include "asl2/commands.hpp"

#include <sstream>
#include <stdexcept>

#include "asl2/antialgebra.hpp"
#include "asl2/geom.hpp"
#include "asl2/tensor.hpp"
#include "asl2/weighted.hpp"

namespace asl2::cmd {

namespace {

Json top(const std::string& command, Json params, const Report& report) {
  Json j;
  j["command"] = command;
  j["params"] = std::move(params);
  j["results"] = report.to_json();
  j["pass"] = report.pass();
  return j;
}

void echo_seed(Json& params, const std::optional<long>& seed) {
  if (seed) params["seed"] = *seed;
}

std::string window_str(const Window& w) {
  return std::to_string(w.first) + ":" + std::to_string(w.second);
}

WeightedSpec spec_for(const Scalar& ell, const std::optional<Window>& window,
                      bool force_generic) {
  WeightedCase kind =
      force_generic ? WeightedCase::Generic : WeightedSpec::case_for(ell);
  if (!window) {
    if (kind == WeightedSpec::case_for(ell))
      return WeightedSpec::with_default_window(ell);
    return WeightedSpec::make_with_case(kind, ell, -24, 24);
  }
  return WeightedSpec::make_with_case(kind, ell, window->first,
                                      window->second);
}

int suite_margin(int requested, int minimum) {
  return requested > minimum ? requested : minimum;
}

}  // namespace

Window parse_window(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("window must be written a:b");
  try {
    long lo = std::stol(text.substr(0, colon));
    long hi = std::stol(text.substr(colon + 1));
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed window: " + text);
  }
}

CommandResult axioms(const std::optional<std::string>& structure_json,
                     bool complex_mode, std::optional<long> seed) {
  AntialgebraData alg;
  Json params;
  if (structure_json) {
    alg = load_structure_constants(Json::parse(*structure_json));
    params["input"] = "file";
  } else {
    alg = asl2_data(complex_mode ? ScalarMode::Complex : ScalarMode::Real);
    params["input"] = "builtin asl2";
  }
  params["mode"] =
      alg.mode == ScalarMode::Complex ? "complex" : "real";
  echo_seed(params, seed);
  Report report = verify_axioms(alg);
  CommandResult res;
  res.pass = report.pass();
  res.json = top("axioms", std::move(params), report);
  res.text = report.to_text();
  return res;
}

CommandResult rep_check(const std::string& weight,
                        std::optional<Window> window, int margin,
                        bool force_generic, std::optional<long> seed) {
  Scalar ell = Scalar::parse(weight);
  WeightedSpec spec = spec_for(ell, window, force_generic);
  Representation rep = build_module(spec);

  Report report;
  report.merge(check_grading_alignment(rep, 0));
  report.merge(check_asl_relations(rep, suite_margin(margin, 2)));
  report.merge(
      check_osp_relations(derive_osp(rep), rep, suite_margin(margin, 4)));
  report.merge(check_casimir_identities(rep, suite_margin(margin, 8)));
  report.merge(detect_reducibility(rep));

  Json params;
  params["weight"] = ell.str();
  params["window"] = window_str({spec.kmin, spec.kmax});
  params["margin"] = margin;
  if (force_generic) params["case"] = "generic";
  echo_seed(params, seed);

  CommandResult res;
  res.pass = report.pass();
  res.json = top("rep-check", std::move(params), report);
  res.text = rep.provenance + "\n" + report.to_text();
  return res;
}

CommandResult weights(const std::string& weight, std::optional<Window> window,
                      bool force_generic, std::optional<long> seed) {
  Scalar ell = Scalar::parse(weight);
  std::optional<Window> w = window;
  if (!w && WeightedSpec::case_for(ell) == WeightedCase::Generic &&
      !force_generic)
    w = Window{-6, 6};  // compact display window for the doubly infinite chain
  WeightedSpec spec = spec_for(ell, w, force_generic);
  std::string diagram = render_weight_diagram(spec);

  Report report;
  IdentityResult res0;
  res0.identity = "weight diagram";
  res0.pass = true;
  Json table = Json::array();
  for (long k = spec.kmin; k <= spec.kmax; ++k)
    table.push_back(Json{{"k", k},
                         {"parity", ((k % 2) + 2) % 2},
                         {"weight", weight_of_basis(spec, k).str()}});
  res0.extra = Json{{"diagram", diagram}, {"weights", table}};
  report.add(std::move(res0));

  Json params;
  params["weight"] = ell.str();
  params["window"] = window_str({spec.kmin, spec.kmax});
  if (force_generic) params["case"] = "generic";
  echo_seed(params, seed);

  CommandResult res;
  res.pass = true;
  res.json = top("weights", std::move(params), report);
  res.text = diagram;
  return res;
}

CommandResult casimir(const std::string& weight, std::optional<Window> window,
                      int margin, std::optional<long> seed) {
  Scalar ell = Scalar::parse(weight);
  WeightedSpec spec = spec_for(ell, window, false);
  Representation rep = build_module(spec);
  Report report = check_casimir_identities(rep, suite_margin(margin, 8));

  Json params;
  params["weight"] = ell.str();
  params["window"] = window_str({spec.kmin, spec.kmax});
  params["margin"] = margin;
  echo_seed(params, seed);

  CommandResult res;
  res.pass = report.pass();
  res.json = top("casimir", std::move(params), report);
  res.text = rep.provenance + "\n" + report.to_text();
  return res;
}

CommandResult classify(const std::string& weight, std::optional<long> seed) {
  Scalar ell = Scalar::parse(weight);
  WeightClass cls = canonicalize_weight(ell);

  Report report;
  IdentityResult entry;
  entry.identity = "classification";
  entry.pass = true;
  entry.note = cls.describe();
  Json extra;
  extra["canonical"] = cls.canonical.str();
  if (cls.shift_m)
    extra["shift_m"] = *cls.shift_m;
  else
    extra["shift_m"] = nullptr;
  switch (cls.kind) {
    case WeightClass::Kind::RealNonOdd: extra["kind"] = "real"; break;
    case WeightClass::Kind::OddPositive: extra["kind"] = "odd positive"; break;
    case WeightClass::Kind::OddNegative: extra["kind"] = "odd negative"; break;
    case WeightClass::Kind::ComplexStrip: extra["kind"] = "complex"; break;
  }
  entry.extra = std::move(extra);
  report.add(std::move(entry));

  Json params;
  params["weight"] = ell.str();
  echo_seed(params, seed);

  CommandResult res;
  res.pass = true;
  res.json = top("classify", std::move(params), report);
  res.text = cls.describe() + "\n";
  return res;
}

CommandResult iso(const std::string& weight_from, const std::string& weight_to,
                  std::optional<Window> window_from, std::optional<long> seed) {
  Scalar ef = Scalar::parse(weight_from);
  Scalar et = Scalar::parse(weight_to);
  WeightedSpec from = spec_for(ef, window_from, false);

  WeightedSpec to;
  WeightClass cf = canonicalize_weight(ef);
  WeightClass ct = canonicalize_weight(et);
  if (cf.same_class(ct)) {
    long shift = (ef - et).to_long();
    to = WeightedSpec::make(et, from.kmin + shift, from.kmax + shift);
  } else {
    to = WeightedSpec::with_default_window(et);
  }

  IsoResult r = build_isomorphism(from, to);

  Report report;
  IdentityResult entry;
  entry.identity = "isomorphism V(" + ef.str() + ") -> V(" + et.str() + ")";
  entry.pass = true;
  Json extra;
  extra["isomorphic"] = r.isomorphic;
  if (r.isomorphic) {
    extra["shift"] = r.shift;
    extra["m"] = r.shift / 2;
    std::ostringstream os;
    os << "isomorphic: e_k -> e_(k" << (r.shift >= 0 ? "+" : "")
       << r.shift << "), m=" << r.shift / 2;
    entry.note = os.str();
  } else {
    extra["obstruction"] = r.obstruction;
    entry.note = "not isomorphic: " + r.obstruction;
  }
  entry.extra = std::move(extra);
  report.add(std::move(entry));
  if (r.isomorphic) report.merge(r.equivariance);

  Json params;
  params["from"] = ef.str();
  params["to"] = et.str();
  params["window"] = window_str({from.kmin, from.kmax});
  echo_seed(params, seed);

  CommandResult res;
  res.pass = report.pass();
  res.json = top("iso", std::move(params), report);
  res.text = report.to_text();
  return res;
}

CommandResult nogo(long max_nm, long rhs, std::optional<long> seed) {
  auto triples = nogo_scan(max_nm, rhs);

  Report report;
  IdentityResult entry;
  entry.identity = "floor((N-i)/2)+floor((M-i)/2)+i = " + std::to_string(rhs) +
                   " over 1<=N,M<=" + std::to_string(max_nm) + ", i in {0,1}";
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& t : triples) {
    list.push_back(Json::array({t[0], t[1], t[2]}));
    text << "(" << t[0] << "," << t[1] << "," << t[2] << ")\n";
  }
  entry.extra = Json{{"solutions", list}};
  if (rhs == 0) {
    entry.pass = triples.size() == 1 && triples[0] == std::array<long, 3>{1, 1, 0};
    entry.note = entry.pass
                     ? "unique solution (1,1,0): only the trivial module fits"
                     : "unexpected solution set";
  } else {
    entry.pass = true;
    entry.note = std::to_string(triples.size()) + " solutions";
  }
  report.add(std::move(entry));

  Json params;
  params["max"] = max_nm;
  params["rhs"] = rhs;
  echo_seed(params, seed);

  CommandResult res;
  res.pass = report.pass();
  res.json = top("nogo", std::move(params), report);
  res.text = text.str();
  return res;
}

CommandResult geom(const std::string& lambda, long degree_window,
                   bool intertwine, std::optional<Window> chain_window,
                   std::optional<long> seed) {
  Scalar la = Scalar::parse(lambda);
  Report report = check_geom_relations(la, degree_window);
  if (intertwine) {
    Window w = chain_window.value_or(Window{-8, 8});
    IntertwineResult r = generate_and_intertwine(la, w.first, w.second);
    report.merge(r.report);
    if (!r.normalization.empty()) {
      IdentityResult norm;
      norm.identity = "intertwiner normalization";
      norm.pass = true;
      Json list = Json::array();
      for (const auto& n : r.normalization)
        list.push_back(Json{{"k", n.k},
                            {"n", n.n},
                            {"odd", n.odd},
                            {"coeff", n.coeff.str()}});
      norm.extra = Json{{"normalization", list}};
      report.add(std::move(norm));
    }
  }

  Json params;
  params["lambda"] = la.str();
  params["degree_window"] = degree_window;
  params["intertwine"] = intertwine;
  if (chain_window) params["chain_window"] = window_str(*chain_window);
  echo_seed(params, seed);

  CommandResult res;
  res.pass = report.pass();
  res.json = top("geom", std::move(params), report);
  res.text = report.to_text();
  return res;
}

CommandResult tensor(const std::string& weight_left,
                     const std::string& weight_right,
                     std::optional<Window> window_left,
                     std::optional<Window> window_right, int margin,
                     bool dump_residual, std::optional<long> seed) {
  Scalar el = Scalar::parse(weight_left);
  Scalar er = Scalar::parse(weight_right);
  WeightedSpec sl = spec_for(el, window_left, false);
  WeightedSpec sr = spec_for(er, window_right, false);
  TensorRep t = build_tensor(build_module(sl), build_module(sr));
  Report report = check_deformed_relations(t, margin, dump_residual);

  Json params;
  params["left"] = el.str();
  params["right"] = er.str();
  params["window_left"] = window_str({sl.kmin, sl.kmax});
  params["window_right"] = window_str({sr.kmin, sr.kmax});
  params["margin"] = margin;
  if (dump_residual) params["dump_residual"] = true;
  echo_seed(params, seed);

  CommandResult res;
  res.pass = report.pass();
  res.json = top("tensor", std::move(params), report);
  res.text = report.to_text();
  return res;
}

}  // namespace asl2::cmd
