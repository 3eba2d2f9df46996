#pragma once

#include <map>
#include <string>
#include <utility>

#include "asl2/graded.hpp"
#include "asl2/report.hpp"

namespace asl2 {

// Structure constants of a finite Z2-graded algebra: a graded basis and the
// products of basis pairs as sparse combinations. Absent pairs multiply to 0.
struct AntialgebraData {
  SpacePtr basis_space;
  std::map<std::pair<std::string, std::string>, Vec> products;
  ScalarMode mode = ScalarMode::Real;

  Vec product(const std::string& x, const std::string& y) const;
  // Bilinear extensions.
  Vec product(const Vec& x, const std::string& y) const;
  Vec product(const std::string& x, const Vec& y) const;
  Vec product(const Vec& x, const Vec& y) const;

  void set_product(const std::string& x, const std::string& y, Vec value);
};

// The three-dimensional simple algebra on {eps; a, b}:
//   eps*eps = eps, eps*a = a*eps = a/2, eps*b = b*eps = b/2,
//   a*b = eps/2, b*a = -eps/2.
AntialgebraData asl2_data(ScalarMode mode);

// Checks the six defining axioms on all basis tuples (the axioms are
// multilinear, so basis verification is exhaustive):
//   1 evenness, 2 supercommutativity, 3 even part commutative-associative,
//   4 half-action of the even part on the odd part, 5 Leibniz,
//   6 Jacobi-type cyclic identity on odd triples.
// Failures cite the violating basis tuple; they are report entries, not errors.
Report verify_axioms(const AntialgebraData& alg);

// Verifies ]chi_x, chi_y[ = chi_{x*y} for all basis pairs, where ]..[ is the
// anticommutator bracket. chi must be parity-preserving (chi_x has the parity
// of x) and all operators must act on one common space; violations of those
// preconditions throw. If `columns` is given, the identity is compared only
// on those columns (used to stay clear of truncated window edges).
Report check_representation_property(
    const AntialgebraData& alg,
    const std::map<std::string, GradedOperator>& chi,
    const std::vector<std::string>* columns = nullptr);

// Structure-constants file format:
// {"basis": [{"label": "eps", "parity": 0}, ...],
//  "products": [{"left": "a", "right": "b",
//                "result": [{"label": "eps", "coeff": "1/2"}]}, ...]}
AntialgebraData load_structure_constants(const Json& j);
Json structure_constants_json(const AntialgebraData& alg);

}  // namespace asl2
