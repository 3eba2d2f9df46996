#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "asl2/graded.hpp"

namespace asl2 {

using Json = nlohmann::ordered_json;

struct CheckFailure {
  Json where;                                   // index, [k,k'], or label
  std::string column;                           // basis label
  std::map<std::string, std::string> residual;  // row label -> scalar string
};

struct IdentityResult {
  std::string identity;
  bool pass = true;
  Json checked = Json::array();  // indices or labels that were verified
  std::vector<CheckFailure> failures;
  std::string note;      // free-form commentary (witnesses, splits, ...)
  Json extra;            // structured payload merged into the JSON object
};

struct Report {
  std::vector<IdentityResult> results;

  bool pass() const;
  void add(IdentityResult r) { results.push_back(std::move(r)); }
  void merge(const Report& other);

  Json to_json() const;
  std::string to_text() const;  // one PASS/FAIL line per identity
};

// Index of a basis vector as a JSON value: plain integer on a chain,
// [index, index2] on a product space.
Json index_json(const BasisVector& b);

// Compares lhs and rhs on the given columns and records the outcome.
IdentityResult check_columns(const std::string& identity,
                             const GradedOperator& lhs,
                             const GradedOperator& rhs,
                             const std::vector<std::string>& columns);

// As above against the zero operator.
IdentityResult check_columns_zero(const std::string& identity,
                                  const GradedOperator& lhs,
                                  const std::vector<std::string>& columns);

}  // namespace asl2
