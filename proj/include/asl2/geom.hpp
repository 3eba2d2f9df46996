#pragma once

#include <map>
#include <string>

#include "asl2/rep.hpp"
#include "asl2/weighted.hpp"

namespace asl2 {

// Element of F[xi]/(xi^2) supported on the exponent lattice lambda + Z:
// finitely many terms c x^{lambda+n} (even) and c x^{lambda+n} xi (odd).
struct SuperFunction {
  Scalar lambda;
  std::map<long, Scalar> even_terms;  // n -> coefficient of x^{lambda+n}
  std::map<long, Scalar> odd_terms;   // n -> coefficient of x^{lambda+n} xi

  static SuperFunction monomial(const Scalar& lambda, long n, bool odd,
                                const Scalar& coeff = Scalar(1));

  bool is_zero() const;
  void prune();
  std::string str() const;  // "c x^{p}" / "c x^{p} ξ" terms

  friend bool operator==(const SuperFunction& a, const SuperFunction& b) {
    return a.lambda == b.lambda && a.even_terms == b.even_terms &&
           a.odd_terms == b.odd_terms;
  }
};

// The super vector fields acting on F[xi]/(xi^2), with D = d/dxi + xi d/dx:
//   A = D, B = x D, Eps = xi D,
//   E = d/dx, F = -x^2 d/dx - x xi D, H = -2x d/dx - xi D.
// The x factor in F is forced by F = -B^2: composing B = x D with itself
// gives B^2 = x^2 d/dx + x xi D because [D, x] = xi.
enum class GeomField { D, A, B, Eps, E, F, H };

// Exact symbolic application with xi^2 = 0 and
// d/dx x^{lambda+n} = (lambda+n) x^{lambda+n-1}.
SuperFunction apply_field(GeomField field, const SuperFunction& f);

// Truncated lattice span {x^{lambda+n}, x^{lambda+n} xi : |n| <= degree_window}
// as a graded space (index = n, even label "x^(p)", odd label "x^(p)xi").
SpacePtr geom_space(const Scalar& lambda, long degree_window);

// Matrix of a field on the truncated span; terms leaving the span are
// dropped, so columns near the lattice edges carry truncation artifacts.
GradedOperator geom_field_operator(GeomField field, const Scalar& lambda,
                                   long degree_window);

// The A, B, Eps matrices packaged as a window representation (both lattice
// edges truncated).
Representation geom_rep(const Scalar& lambda, long degree_window);

// Runs the defining relations, the twelve even-generator relations, the
// Casimir identities and a reducibility scan on the truncated span, plus a
// comparison of the explicit E, F, H fields against the products derived
// from A and B. Requires degree_window >= 8.
Report check_geom_relations(const Scalar& lambda, long degree_window);

// Iterates A and B on e_1 = x^lambda xi, matches the generated monomials to
// the chain module of weight -2 lambda - 1 on [kmin, kmax], and verifies the
// intertwiner. Integer lambda has no intertwiner onto a single chain module
// (the generated module contains a trivial invariant line); the result then
// carries the submodule report instead of a map.
struct IntertwineResult {
  bool reducible_case = false;
  Scalar weight;  // -2 lambda - 1
  Report report;
  std::optional<GradedOperator> map;  // chain module space -> geom span
  // per-index normalization: e_k corresponds to coeff * x^{lambda+n} (xi)
  struct Normalization {
    long k;
    long n;
    bool odd;
    Scalar coeff;
  };
  std::vector<Normalization> normalization;
};

IntertwineResult generate_and_intertwine(const Scalar& lambda, long kmin,
                                         long kmax);

}  // namespace asl2
