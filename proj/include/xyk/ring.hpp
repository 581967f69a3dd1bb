#ifndef XYK_RING_HPP
#define XYK_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xyk/errors.hpp"

namespace xyk {

enum class VarKind : std::uint8_t { X, Y, Aux };

/// An indexed indeterminate: x[i][j], y[j], or an internal elimination
/// auxiliary t[j].
struct Variable {
  VarKind kind{VarKind::X};
  int i = 0;  // X: row (1-based)
  int j = 0;  // X: column; Y: index; Aux: id
  friend bool operator==(const Variable&, const Variable&) = default;
  std::string str() const;

  static Variable x(int i, int j) { return Variable{VarKind::X, i, j}; }
  static Variable y(int j) { return Variable{VarKind::Y, 0, j}; }
  static Variable aux(int j) { return Variable{VarKind::Aux, 0, j}; }
};

enum class MatrixKind { Generic, Symmetric, Skew };

std::string kind_str(MatrixKind k);
MatrixKind kind_from_str(const std::string& s);

/// The variable universe of one session: the x-variables of an m x n shape
/// (upper triangle only for symmetric/skew), y_1..y_n, and optionally some
/// elimination auxiliaries appended at the end. Immutable; polynomials and
/// orders hold it by shared_ptr.
class Ring {
 public:
  static constexpr int kMaxVars = 64;

  static std::shared_ptr<const Ring> make(MatrixKind kind, int m, int n);
  std::shared_ptr<const Ring> extended(int aux) const;

  MatrixKind kind() const { return kind_; }
  int rows() const { return m_; }
  int cols() const { return n_; }
  int aux_count() const { return aux_; }

  int var_count() const { return static_cast<int>(vars_.size()); }
  const Variable& var(int idx) const { return vars_.at(static_cast<size_t>(idx)); }
  const std::vector<Variable>& vars() const { return vars_; }

  /// Index lookup. For symmetric rings x[j][i] with j>i resolves to the
  /// declared x[i][j]; for skew rings only i<j is a variable.
  std::optional<int> find(const Variable& v) const;
  int x_index(int i, int j) const;  // throws ShapeError if not declared
  int y_index(int j) const;
  int aux_index(int id) const;

  bool same_universe(const Ring& o) const;
  bool extends(const Ring& base) const;  // base's variables are a prefix
  std::string str() const;

  Ring(MatrixKind kind, int m, int n, int aux);

 private:
  MatrixKind kind_;
  int m_, n_, aux_;
  std::vector<Variable> vars_;
  int y_base_ = 0;  // index of y[1]
};

using RingPtr = std::shared_ptr<const Ring>;

}  // namespace xyk

#endif
