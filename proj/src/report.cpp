#include "asl2/report.hpp"

#include <sstream>

namespace asl2 {

bool Report::pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

void Report::merge(const Report& other) {
  for (const auto& r : other.results) results.push_back(r);
}

Json index_json(const BasisVector& b) {
  if (b.index2) return Json::array({b.index, *b.index2});
  return Json(b.index);
}

Json Report::to_json() const {
  Json arr = Json::array();
  for (const auto& r : results) {
    Json j;
    j["identity"] = r.identity;
    j["status"] = r.pass ? "pass" : "fail";
    j["checked_indices"] = r.checked;
    Json fails = Json::array();
    for (const auto& f : r.failures) {
      Json jf;
      jf["index"] = f.where;
      jf["column"] = f.column;
      jf["residual"] = f.residual;
      fails.push_back(std::move(jf));
    }
    j["failures"] = std::move(fails);
    if (!r.note.empty()) j["note"] = r.note;
    if (r.extra.is_object())
      for (auto& [k, v] : r.extra.items()) j[k] = v;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.identity;
    if (!r.pass) {
      os << "  [" << r.failures.size() << " failing column"
         << (r.failures.size() == 1 ? "" : "s");
      if (!r.failures.empty()) {
        os << ", first at " << r.failures.front().where.dump();
      }
      os << "]";
    }
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << "\n";
  }
  return os.str();
}

namespace {

std::map<std::string, std::string> residual_strings(const Vec& v) {
  std::map<std::string, std::string> out;
  for (const auto& [k, c] : v) out.emplace(k, c.str());
  return out;
}

}  // namespace

IdentityResult check_columns(const std::string& identity,
                             const GradedOperator& lhs,
                             const GradedOperator& rhs,
                             const std::vector<std::string>& columns) {
  IdentityResult res;
  res.identity = identity;
  const auto& space = *lhs.domain();
  for (const auto& col : columns) {
    Vec r = lhs.residual_column(rhs, col);
    const auto& b = space.vec(col);
    res.checked.push_back(index_json(b));
    if (!vec_is_zero(r)) {
      res.pass = false;
      res.failures.push_back({index_json(b), col, residual_strings(r)});
    }
  }
  return res;
}

IdentityResult check_columns_zero(const std::string& identity,
                                  const GradedOperator& lhs,
                                  const std::vector<std::string>& columns) {
  return check_columns(identity, lhs,
                       GradedOperator::zero(lhs.domain(), lhs.codomain(),
                                            lhs.parity()),
                       columns);
}

}  // namespace asl2
