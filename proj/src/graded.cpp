#include "asl2/graded.hpp"

#include <stdexcept>

namespace asl2 {

GradedSpace::GradedSpace(std::vector<BasisVector> basis)
    : basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& b = basis_[i];
    if (b.parity != 0 && b.parity != 1)
      throw std::invalid_argument("parity must be 0 or 1: " + b.label);
    if (!pos_.emplace(b.label, i).second)
      throw std::invalid_argument("duplicate basis label: " + b.label);
  }
}

std::size_t GradedSpace::position(const std::string& label) const {
  auto it = pos_.find(label);
  if (it == pos_.end())
    throw std::invalid_argument("unknown basis label: " + label);
  return it->second;
}

bool operator==(const GradedSpace& a, const GradedSpace& b) {
  if (a.basis_.size() != b.basis_.size()) return false;
  for (std::size_t i = 0; i < a.basis_.size(); ++i) {
    const auto& x = a.basis_[i];
    const auto& y = b.basis_[i];
    if (x.label != y.label || x.parity != y.parity || x.index != y.index ||
        x.index2 != y.index2)
      return false;
  }
  return true;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& [k, c] : v)
    if (!c.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (const auto& [k, c] : b) {
    auto it = r.find(k);
    if (it == r.end()) {
      if (!c.is_zero()) r.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  return vec_add(a, vec_scale(Scalar(-1), b));
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r;
  if (c.is_zero()) return r;
  for (const auto& [k, x] : v) {
    Scalar y = c * x;
    if (!y.is_zero()) r.emplace(k, y);
  }
  return r;
}

std::optional<Scalar> proportionality(const Vec& u, const Vec& ref) {
  if (vec_is_zero(ref)) throw std::invalid_argument("zero reference vector");
  const auto& [k0, c0] = *ref.begin();
  Scalar c(0);
  if (auto it = u.find(k0); it != u.end()) c = it->second / c0;
  if (vec_is_zero(vec_sub(u, vec_scale(c, ref)))) return c;
  return std::nullopt;
}

GradedOperator::GradedOperator(SpacePtr domain, SpacePtr codomain,
                               std::optional<int> parity)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      parity_(parity) {
  if (!domain_ || !codomain_) throw std::invalid_argument("null space");
  if (parity_ && *parity_ != 0 && *parity_ != 1)
    throw std::invalid_argument("operator parity must be 0 or 1");
}

GradedOperator GradedOperator::identity(const SpacePtr& space) {
  GradedOperator id(space, space, 0);
  for (const auto& b : space->basis()) id.set(b.label, b.label, Scalar(1));
  return id;
}

GradedOperator GradedOperator::zero(const SpacePtr& domain,
                                    const SpacePtr& codomain,
                                    std::optional<int> parity) {
  return GradedOperator(domain, codomain, parity);
}

int GradedOperator::require_parity() const {
  if (!parity_)
    throw std::invalid_argument("operator is not parity-homogeneous");
  return *parity_;
}

void GradedOperator::set(const std::string& row, const std::string& col,
                         const Scalar& v) {
  int rp = codomain_->parity(row);
  int cp = domain_->parity(col);
  if (v.is_zero()) {
    auto it = cols_.find(col);
    if (it != cols_.end()) {
      it->second.erase(row);
      if (it->second.empty()) cols_.erase(it);
    }
    return;
  }
  if (parity_ && ((rp + cp) % 2) != *parity_)
    throw std::invalid_argument("entry (" + row + ", " + col +
                                ") violates operator parity");
  cols_[col][row] = v;
}

void GradedOperator::add_to(const std::string& row, const std::string& col,
                            const Scalar& v) {
  Scalar cur(0);
  auto it = cols_.find(col);
  if (it != cols_.end()) {
    auto jt = it->second.find(row);
    if (jt != it->second.end()) cur = jt->second;
  }
  set(row, col, cur + v);
}

Vec GradedOperator::column(const std::string& col) const {
  domain_->position(col);
  auto it = cols_.find(col);
  if (it == cols_.end()) return {};
  return it->second;
}

Vec GradedOperator::apply(const Vec& v) const {
  Vec out;
  for (const auto& [label, c] : v) {
    if (!domain_->has(label))
      throw std::invalid_argument("vector component outside domain: " + label);
    if (c.is_zero()) continue;
    auto it = cols_.find(label);
    if (it == cols_.end()) continue;
    for (const auto& [row, e] : it->second) {
      Scalar add = c * e;
      auto jt = out.find(row);
      if (jt == out.end()) {
        if (!add.is_zero()) out.emplace(row, add);
      } else {
        jt->second += add;
        if (jt->second.is_zero()) out.erase(jt);
      }
    }
  }
  return out;
}

GradedOperator GradedOperator::compose(const GradedOperator& rhs) const {
  if (!same_space(domain_, rhs.codomain_))
    throw std::invalid_argument("non-composable operator shapes");
  std::optional<int> p;
  if (parity_ && rhs.parity_) p = (*parity_ + *rhs.parity_) % 2;
  GradedOperator out(rhs.domain_, codomain_, p);
  for (const auto& [c, rhs_col] : rhs.cols_) {
    for (const auto& [m, rv] : rhs_col) {
      auto it = cols_.find(m);
      if (it == cols_.end()) continue;
      for (const auto& [r, lv] : it->second) out.add_to(r, c, lv * rv);
    }
  }
  return out;
}

GradedOperator GradedOperator::operator+(const GradedOperator& o) const {
  if (!same_space(domain_, o.domain_) || !same_space(codomain_, o.codomain_))
    throw std::invalid_argument("operator shape mismatch in sum");
  std::optional<int> p;
  if (parity_ && o.parity_) {
    if (*parity_ != *o.parity_)
      throw std::invalid_argument("parity mismatch in operator sum");
    p = parity_;
  }
  GradedOperator out(domain_, codomain_, p);
  out.cols_ = cols_;
  for (const auto& [c, col] : o.cols_)
    for (const auto& [r, v] : col) out.add_to(r, c, v);
  return out;
}

GradedOperator GradedOperator::operator-(const GradedOperator& o) const {
  return *this + o.scaled(Scalar(-1));
}

GradedOperator GradedOperator::scaled(const Scalar& c) const {
  GradedOperator out(domain_, codomain_, parity_);
  if (c.is_zero()) return out;
  for (const auto& [col, colmap] : cols_)
    for (const auto& [row, v] : colmap) out.set(row, col, c * v);
  return out;
}

bool operator==(const GradedOperator& a, const GradedOperator& b) {
  return same_space(a.domain_, b.domain_) &&
         same_space(a.codomain_, b.codomain_) && a.cols_ == b.cols_;
}

Vec GradedOperator::residual_column(const GradedOperator& other,
                                    const std::string& col) const {
  return vec_sub(column(col), other.column(col));
}

GradedOperator bracket(const GradedOperator& X, const GradedOperator& Y,
                       BracketMode mode) {
  int px = X.require_parity();
  int py = Y.require_parity();
  if (!same_space(X.domain(), X.codomain()) ||
      !same_space(Y.domain(), Y.codomain()) ||
      !same_space(X.domain(), Y.domain()))
    throw std::invalid_argument("bracket requires square operators on one space");
  int sign;
  switch (mode) {
    case BracketMode::Commutator: sign = (px * py) % 2 ? 1 : -1; break;
    case BracketMode::Anticommutator: sign = (px * py) % 2 ? -1 : 1; break;
    case BracketMode::Twisted: sign = (px * (py + 1)) % 2 ? 1 : -1; break;
    default: throw std::logic_error("unreachable");
  }
  return X * Y + (Y * X).scaled(Scalar(sign));
}

SpacePtr tensor_space(const SpacePtr& left, const SpacePtr& right) {
  std::vector<BasisVector> basis;
  basis.reserve(left->dim() * right->dim());
  for (const auto& l : left->basis())
    for (const auto& r : right->basis()) {
      BasisVector b;
      b.label = l.label + "⊗" + r.label;
      b.parity = (l.parity + r.parity) % 2;
      b.index = l.index;
      b.index2 = r.index;
      basis.push_back(std::move(b));
    }
  return std::make_shared<GradedSpace>(std::move(basis));
}

GradedOperator tensor_lift(const GradedOperator& X, LiftSide side,
                           const SpacePtr& other) {
  int px = X.require_parity();
  SpacePtr dom, cod;
  if (side == LiftSide::Left) {
    dom = tensor_space(X.domain(), other);
    cod = tensor_space(X.codomain(), other);
  } else {
    dom = tensor_space(other, X.domain());
    cod = tensor_space(other, X.codomain());
  }
  GradedOperator out(dom, cod, px);
  for (const auto& [col, colmap] : X.columns())
    for (const auto& [row, v] : colmap)
      for (const auto& w : other->basis()) {
        if (side == LiftSide::Left) {
          out.set(row + "⊗" + w.label, col + "⊗" + w.label, v);
        } else {
          Scalar signed_v = (px * w.parity) % 2 ? -v : v;
          out.set(w.label + "⊗" + row, w.label + "⊗" + col, signed_v);
        }
      }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot column per row.
std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), ncols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < ncols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Scalar inv = Scalar(1) / m[r][c];
    for (std::size_t j = c; j < ncols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

ProjectorReport is_projector(const GradedOperator& X) {
  if (!same_space(X.domain(), X.codomain()))
    throw std::invalid_argument("projector test requires a square operator");
  ProjectorReport rep;
  rep.idempotent = (X * X == X);
  if (!rep.idempotent) return rep;

  const auto& space = *X.domain();
  std::size_t n = space.dim();
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar(0)));
  for (const auto& [col, colmap] : X.columns()) {
    std::size_t c = space.position(col);
    for (const auto& [row, v] : colmap) m[space.position(row)][c] = v;
  }

  // Image basis = original columns at pivot positions (fixed vectors).
  auto mcopy = m;
  std::vector<std::size_t> pivots = rref(mcopy);
  for (std::size_t c : pivots) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i)
      if (!m[i][c].is_zero()) v.emplace(space.at(i).label, m[i][c]);
    rep.eigen1.push_back(std::move(v));
  }

  // Kernel basis from the reduced system.
  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> pivot_row(n, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    is_pivot[pivots[i]] = true;
    pivot_row[pivots[i]] = i;
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v;
    v.emplace(space.at(c).label, Scalar(1));
    for (std::size_t p = 0; p < n; ++p)
      if (is_pivot[p] && !mcopy[pivot_row[p]][c].is_zero())
        v.emplace(space.at(p).label, -mcopy[pivot_row[p]][c]);
    rep.eigen0.push_back(std::move(v));
  }
  return rep;
}

}  // namespace asl2
