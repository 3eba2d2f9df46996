#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asl2/scalar.hpp"

namespace asl2 {

// One basis vector of a Z2-graded space. `index` places the vector on the
// integer chain (or degree lattice) its module lives on; product-space
// vectors additionally carry the second factor's index in `index2`.
struct BasisVector {
  std::string label;
  int parity = 0;
  long index = 0;
  std::optional<long> index2;
};

class GradedSpace {
public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<BasisVector> basis);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisVector>& basis() const { return basis_; }
  const BasisVector& at(std::size_t i) const { return basis_.at(i); }
  bool has(const std::string& label) const { return pos_.count(label) != 0; }
  std::size_t position(const std::string& label) const;
  const BasisVector& vec(const std::string& label) const {
    return basis_[position(label)];
  }
  int parity(const std::string& label) const { return vec(label).parity; }

  friend bool operator==(const GradedSpace& a, const GradedSpace& b);
  friend bool operator!=(const GradedSpace& a, const GradedSpace& b) {
    return !(a == b);
  }

private:
  std::vector<BasisVector> basis_;
  std::map<std::string, std::size_t> pos_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

bool same_space(const SpacePtr& a, const SpacePtr& b);

// Sparse graded vector: basis label -> coefficient, zeros pruned.
using Vec = std::map<std::string, Scalar>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
// Exact coefficient c with u == c * ref, if it exists; ref must be nonzero.
std::optional<Scalar> proportionality(const Vec& u, const Vec& ref);

// Sparse exact operator between graded spaces. A homogeneous operator
// declares its parity and every nonzero entry must connect basis vectors
// whose parities differ by exactly that parity mod 2. Operators holding a
// nullopt parity are unconstrained (used only to stage misgraded data that
// a regrade repairs).
class GradedOperator {
public:
  GradedOperator(SpacePtr domain, SpacePtr codomain, std::optional<int> parity);

  static GradedOperator identity(const SpacePtr& space);
  static GradedOperator zero(const SpacePtr& domain, const SpacePtr& codomain,
                             std::optional<int> parity);

  const SpacePtr& domain() const { return domain_; }
  const SpacePtr& codomain() const { return codomain_; }
  std::optional<int> parity() const { return parity_; }
  int require_parity() const;

  void set(const std::string& row, const std::string& col, const Scalar& v);
  void add_to(const std::string& row, const std::string& col, const Scalar& v);

  const std::map<std::string, std::map<std::string, Scalar>>& columns() const {
    return cols_;
  }
  // Column as a vector; empty Vec if the column is zero.
  Vec column(const std::string& col) const;

  Vec apply(const Vec& v) const;
  Vec apply_basis(const std::string& col) const { return column(col); }

  GradedOperator compose(const GradedOperator& rhs) const;  // this after rhs
  GradedOperator operator*(const GradedOperator& rhs) const {
    return compose(rhs);
  }
  GradedOperator operator+(const GradedOperator& o) const;
  GradedOperator operator-(const GradedOperator& o) const;
  GradedOperator scaled(const Scalar& c) const;

  bool is_zero() const { return cols_.empty(); }
  friend bool operator==(const GradedOperator& a, const GradedOperator& b);
  friend bool operator!=(const GradedOperator& a, const GradedOperator& b) {
    return !(a == b);
  }

  // (this - other) restricted to one column.
  Vec residual_column(const GradedOperator& other,
                      const std::string& col) const;

private:
  SpacePtr domain_, codomain_;
  std::optional<int> parity_;
  // column label -> (row label -> coefficient)
  std::map<std::string, std::map<std::string, Scalar>> cols_;
};

enum class BracketMode { Commutator, Anticommutator, Twisted };

// Commutator: XY - (-1)^{p(X)p(Y)} YX (the usual super sign rule).
// Anticommutator: XY + (-1)^{p(X)p(Y)} YX (the opposite rule).
// Twisted: XY - (-1)^{p(X)(p(Y)+1)} YX.
GradedOperator bracket(const GradedOperator& X, const GradedOperator& Y,
                       BracketMode mode);

// Product space with row-major basis ordering over (left index, right index);
// labels are "l⊗r", parities add mod 2.
SpacePtr tensor_space(const SpacePtr& left, const SpacePtr& right);

enum class LiftSide { Left, Right };

// Left lift X⊗Id acts as (X⊗Id)(v⊗w) = Xv⊗w with no sign; the right lift
// carries the Koszul sign: (Id⊗X)(v⊗w) = (-1)^{p(X)p(v)} v⊗Xw.
// `other` is the untouched factor (the right space for a left lift and the
// left space for a right lift).
GradedOperator tensor_lift(const GradedOperator& X, LiftSide side,
                           const SpacePtr& other);

struct ProjectorReport {
  bool idempotent = false;
  // Exact bases of the eigenvalue-0 and eigenvalue-1 subspaces (kernel and
  // image of the idempotent), as sparse coordinate vectors.
  std::vector<Vec> eigen0, eigen1;
};

// Decides X*X == X exactly; the eigenspace split is computed by exact
// kernel/image elimination and only filled in for idempotents.
ProjectorReport is_projector(const GradedOperator& X);

}  // namespace asl2
