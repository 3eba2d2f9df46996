#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "asl2/rep.hpp"

namespace asl2 {

enum class WeightedCase { Generic, LowestWeight, HighestWeight };

// Parameters of a finite window of the chain module V(l): the case tag, the
// weight l and the index range. LowestWeight requires l a positive odd
// integer and kmin = 2-l; HighestWeight requires l a negative odd integer
// and kmax = -l; Generic takes any l (odd integers are allowed and come out
// reducible).
struct WeightedSpec {
  WeightedCase kind = WeightedCase::Generic;
  Scalar ell;
  long kmin = 0, kmax = 0;

  void validate() const;  // throws std::invalid_argument

  static WeightedCase case_for(const Scalar& ell);
  // Case-appropriate spec on the default window: [-24,24] generic,
  // [2-l, 2-l+48] lowest weight, [-l-48, -l] highest weight.
  static WeightedSpec with_default_window(const Scalar& ell);
  // Case chosen from the weight.
  static WeightedSpec make(const Scalar& ell, long kmin, long kmax);
  // Explicit case; lets a Generic window be built at an odd integer weight,
  // where the construction is reducible rather than refused.
  static WeightedSpec make_with_case(WeightedCase kind, const Scalar& ell,
                                     long kmin, long kmax);
};

// Chain basis {e_k} with parity k mod 2. Ladder actions:
//   Generic/LowestWeight:  A e_k = e_{k+1},
//                          B e_k = ((1-l)/2 - floor(k/2)) e_{k-1},
//                          B e_{2-l} = 0 at the lowest-weight boundary;
//   HighestWeight:         B e_k = e_{k-1},
//                          A e_k = ((1-l)/2 - floor((k+1)/2)) e_{k+1},
//                          A e_{-l} = 0 at the boundary.
// Eps is the composition AB-BA evaluated on the full chain, so its matrix is
// the exact parity projector on every window column.
Representation build_module(const WeightedSpec& spec);

std::string chain_label(long k);

// Weight of e_k: l + k - 1. Throws if k is outside the window.
Scalar weight_of_basis(const WeightedSpec& spec, long k);

enum class LadderKind { Lambda, Mu };

// Closed forms for the ladder proportionality constants at a weight vector of
// parity i: lambda_k = floor((k-i)/2) + (i-l)/2 governs A B^k v, and
// mu_k = -floor((k-i)/2) - (i+l)/2 governs B A^k v. Requires k >= 1.
Scalar ladder_coeff(LadderKind kind, long k, int i, const Scalar& ell);

// Independent check of the ladder constants by literal operator iteration on
// a built window: computes A B^k v (resp. B A^k v) and extracts the exact
// proportionality coefficient against B^{k-1} v (resp. A^{k-1} v). Throws on
// window overflow, when the reference vector vanishes (coefficient
// undefined), or when the vectors fail to be proportional.
Scalar coeff_oracle(const Representation& rep, long v_index, LadderKind kind,
                    long k);

// Canonical parameter of the isomorphism class of V(l):
//   real odd l        -> +1 or -1 by sign (no shift witness),
//   real non-odd l    -> the unique l' in (-1,1) with l'-l even,
//   complex l         -> the unique l' with Re in [-1,1) and l'-l even.
struct WeightClass {
  enum class Kind { RealNonOdd, OddPositive, OddNegative, ComplexStrip };
  Kind kind;
  Scalar canonical;
  std::optional<long> shift_m;  // canonical = l + 2m when set

  bool same_class(const WeightClass& o) const {
    return kind == o.kind && canonical == o.canonical;
  }
  std::string describe() const;
};

WeightClass canonicalize_weight(const Scalar& ell);

// Equivariant chain map between two windows, when one exists. The map sends
// e_k of `from` to e_{k+shift} of `to` with shift = l_from - l_to (an even
// integer whenever the classes agree); equivariance with A, B, Eps is
// verified column-wise on the interior and reported.
struct IsoResult {
  bool isomorphic = false;
  std::string obstruction;            // set when not isomorphic
  std::optional<GradedOperator> map;  // from-space -> to-space
  long shift = 0;                     // e_k -> e_{k+shift}
  Report equivariance;
};

IsoResult build_isomorphism(const WeightedSpec& from, const WeightedSpec& to);

// A vanishing ladder coefficient inside a window splits off an invariant
// sub-window: B e_k = 0 leaves span{e_j : j >= k} invariant and A e_k = 0
// leaves span{e_j : j <= k} invariant.
struct SplitPoint {
  char op;  // 'A' or 'B'
  long k;
  long sub_lo, sub_hi;
  bool defining_boundary;  // the boundary zero of a lowest/highest window
};

std::vector<SplitPoint> find_splits(const Representation& rep);
Report detect_reducibility(const Representation& rep);

// All triples (N, M, i) with 1 <= N,M <= max_nm, i in {0,1} satisfying
// floor((N-i)/2) + floor((M-i)/2) + i = rhs. With rhs = 0 the solution set
// is exactly {(1,1,0)}; nonzero rhs exercises the scanner itself.
std::vector<std::array<long, 3>> nogo_scan(long max_nm, long rhs = 0);

// Text chain diagram of a window: index, parity and weight rows plus the
// A/B ladder coefficients.
std::string render_weight_diagram(const WeightedSpec& spec);

}  // namespace asl2
