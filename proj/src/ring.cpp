#include "xyk/ring.hpp"

namespace xyk {

std::string Variable::str() const {
  switch (kind) {
    case VarKind::X:
      return "x[" + std::to_string(i) + "][" + std::to_string(j) + "]";
    case VarKind::Y:
      return "y[" + std::to_string(j) + "]";
    case VarKind::Aux:
      return "t[" + std::to_string(j) + "]";
  }
  return "?";
}

std::string kind_str(MatrixKind k) {
  switch (k) {
    case MatrixKind::Generic: return "generic";
    case MatrixKind::Symmetric: return "symmetric";
    case MatrixKind::Skew: return "skew";
  }
  return "?";
}

MatrixKind kind_from_str(const std::string& s) {
  if (s == "generic") return MatrixKind::Generic;
  if (s == "symmetric") return MatrixKind::Symmetric;
  if (s == "skew" || s == "skew-symmetric") return MatrixKind::Skew;
  throw std::invalid_argument("unknown matrix kind: " + s);
}

Ring::Ring(MatrixKind kind, int m, int n, int aux) : kind_(kind), m_(m), n_(n), aux_(aux) {
  if (m < 1 || n < 1) throw ShapeError("matrix dimensions must be positive");
  if (kind != MatrixKind::Generic && m != n)
    throw ShapeError("symmetric/skew-symmetric matrices must be square");
  switch (kind) {
    case MatrixKind::Generic:
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) vars_.push_back(Variable::x(i, j));
      break;
    case MatrixKind::Symmetric:
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) vars_.push_back(Variable::x(i, j));
      break;
    case MatrixKind::Skew:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) vars_.push_back(Variable::x(i, j));
      break;
  }
  y_base_ = static_cast<int>(vars_.size());
  for (int j = 1; j <= n; ++j) vars_.push_back(Variable::y(j));
  for (int a = 1; a <= aux; ++a) vars_.push_back(Variable::aux(a));
  if (var_count() > kMaxVars) throw ShapeError("too many variables for this kernel");
}

std::shared_ptr<const Ring> Ring::make(MatrixKind kind, int m, int n) {
  return std::make_shared<const Ring>(kind, m, n, 0);
}

std::shared_ptr<const Ring> Ring::extended(int aux) const {
  return std::make_shared<const Ring>(kind_, m_, n_, aux_ + aux);
}

std::optional<int> Ring::find(const Variable& v) const {
  Variable probe = v;
  if (v.kind == VarKind::X && kind_ == MatrixKind::Symmetric && v.i > v.j)
    probe = Variable::x(v.j, v.i);
  for (int idx = 0; idx < var_count(); ++idx)
    if (vars_[static_cast<size_t>(idx)] == probe) return idx;
  return std::nullopt;
}

int Ring::x_index(int i, int j) const {
  auto idx = find(Variable::x(i, j));
  if (!idx) throw ShapeError("no variable " + Variable::x(i, j).str() + " in " + str());
  return *idx;
}

int Ring::y_index(int j) const {
  if (j < 1 || j > n_) throw ShapeError("no variable y[" + std::to_string(j) + "] in " + str());
  return y_base_ + (j - 1);
}

int Ring::aux_index(int id) const {
  if (id < 1 || id > aux_) throw ShapeError("no auxiliary t[" + std::to_string(id) + "]");
  return y_base_ + n_ + (id - 1);
}

bool Ring::same_universe(const Ring& o) const {
  return kind_ == o.kind_ && m_ == o.m_ && n_ == o.n_ && aux_ == o.aux_;
}

bool Ring::extends(const Ring& base) const {
  if (kind_ != base.kind_ || m_ != base.m_ || n_ != base.n_) return false;
  return aux_ >= base.aux_;
}

std::string Ring::str() const {
  std::string s = kind_str(kind_) + " " + std::to_string(m_) + "x" + std::to_string(n_);
  if (aux_ > 0) s += "+" + std::to_string(aux_) + "aux";
  return s;
}

}  // namespace xyk
