#pragma once

#include "asl2/rep.hpp"

namespace asl2 {

// Leibniz lifts of two window representations to their graded tensor
// product. Atil = A⊗Id + Id⊗A and Btil = B⊗Id + Id⊗B (right factors carry
// the Koszul sign); Etil is defined as Atil Btil - Btil Atil and is checked
// at build time against the expanded form
// Eps⊗Id + Id⊗Eps + 2(A⊗B - B⊗A) on the margin-2 product interior.
// Cbar is the diagonal part of the lifted quadratic Casimir:
// E⊗F + F⊗E + (H⊗H + A⊗B - B⊗A)/2.
struct TensorRep {
  Representation left, right;
  SpacePtr space;
  GradedOperator Atil, Btil, Etil, Cbar;
};

TensorRep build_tensor(const Representation& left, const Representation& right);

GradedOperator diagonal_casimir(const TensorRep& t);

// Product columns v⊗w whose factor indices are both margin-deep in their
// windows.
std::vector<std::string> product_interior(const TensorRep& t, int margin);

// The deformed relation system on the product, margin >= 8 per factor:
//   Atil Btil - Btil Atil = Etil,
//   Atil Etil + Etil Atil = Atil,
//   Btil Etil + Etil Btil = Btil,
//   Etil^2 = Etil + 4 Cbar,
// the commutation of Cbar with all three lifts, and a witness that
// Etil^2 != Etil on some interior vector (the product does not carry the
// unlifted relation system). With dump_residual set, the exact residual
// table of Etil^2 - Etil - 4 Cbar is attached to the report.
Report check_deformed_relations(const TensorRep& t, int margin,
                                bool dump_residual = false);

}  // namespace asl2
