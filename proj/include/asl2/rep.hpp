#pragma once

#include <string>
#include <vector>

#include "asl2/graded.hpp"
#include "asl2/report.hpp"

namespace asl2 {

// A triple of scaled generator actions on a finite window of a module.
// A and B are odd, Eps is even, and after a regrade Eps acts as 0 on
// parity-0 basis vectors and as the identity on parity-1 ones.
//
// Window semantics: kmin/kmax bound the basis indices. An edge flagged as
// truncated is an artifact of cutting an infinite chain, so operator columns
// within a word length of it are meaningless; an untruncated edge is a
// genuine module boundary and checks include it.
struct Representation {
  SpacePtr space;
  GradedOperator A, B, Eps;
  long kmin = 0, kmax = 0;
  bool bottom_truncated = true, top_truncated = true;
  std::string provenance;

  // Labels of basis vectors at distance >= margin from every truncated edge.
  std::vector<std::string> interior(int margin) const;
};

// The four defining relations: AB-BA = Eps, A Eps + Eps A = A,
// B Eps + Eps B = B, Eps^2 = Eps, each compared column-wise on the
// margin-restricted interior. Requires margin >= 2; throws when the window
// leaves no interior.
Report check_asl_relations(const Representation& rep, int margin);

// Eps equals the parity projector: Eps e = e on parity-1 basis vectors and
// 0 on parity-0 ones (the normal form the regrade establishes).
Report check_grading_alignment(const Representation& rep, int margin);

// Reassigns basis parities from the eigenvalues of Eps (parity-0 part =
// kernel, parity-1 part = fixed space) leaving the operator matrices
// untouched. Requires Eps to be idempotent and diagonal on the basis;
// throws std::domain_error otherwise.
Representation regrade(const Representation& rep);

struct OspAction {
  GradedOperator E, F, H;  // E = A^2, F = -B^2, H = -(AB+BA)
};

OspAction derive_osp(const Representation& rep);

// The twelve even-generator relations: [H,E]=2E, [H,F]=-2F, [E,F]=H plus
// the mixed table [H,A]=A, [E,A]=0, [F,A]=B, [H,B]=-B, [E,B]=A, [F,B]=0,
// [H,Eps]=[E,Eps]=[F,Eps]=0. Requires margin >= 4.
Report check_osp_relations(const OspAction& osp, const Representation& rep,
                           int margin);

// Gamma = Eps - Id/2 (equivalently AB - BA - Id/2 on the module).
GradedOperator ghost_casimir(const Representation& rep);

// Casimir-type identities, margin >= 8:
//   (i)   Gamma^2 = Id/4
//   (ii)  twisted-adjoint invariance of Gamma under A and B, and
//         [E,Gamma]=[F,Gamma]=[H,Gamma]=0
//   (iii) Eps = 2(C - C0)
//   (iv)  4(C-C0)^2 = 4C - 2C0
//   (v)   C = 0
// with C = EF+FE+(H^2+AB-BA)/2 and C0 = EF+FE+H^2/2.
Report check_casimir_identities(const Representation& rep, int margin);

}  // namespace asl2
