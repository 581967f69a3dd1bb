#ifndef XYK_DETLAB_HPP
#define XYK_DETLAB_HPP

#include <map>
#include <vector>

#include "xyk/polynomial.hpp"

namespace xyk {

/// A generic / generic-symmetric / generic-skew-symmetric matrix of
/// indeterminates together with the generic column Y, the entry polynomials
/// g_i of XY, determinants, cofactors and row-deleted maximal minors.
/// Immutable after construction.
template <class F>
class SymbolicMatrix {
 public:
  using K = typename F::Element;

  SymbolicMatrix(const F& field, MatrixKind kind, int m, int n)
      : field_(field), kind_(kind), m_(m), n_(n), ring_(Ring::make(kind, m, n)) {}

  const F& field() const { return field_; }
  MatrixKind kind() const { return kind_; }
  int rows() const { return m_; }
  int cols() const { return n_; }
  const RingPtr& ring() const { return ring_; }

  /// entry(i, j), 1-based. Symmetric: x[min][max]; skew: sign convention with
  /// zero diagonal; the lower triangle is synthesized on access.
  Polynomial<K> entry(int i, int j) const {
    if (i < 1 || i > m_ || j < 1 || j > n_) throw ShapeError("entry index out of range");
    switch (kind_) {
      case MatrixKind::Generic:
      case MatrixKind::Symmetric:
        return Polynomial<K>::variable(ring_, ring_->x_index(i, j), field_.one());
      case MatrixKind::Skew:
        if (i == j) return Polynomial<K>::zero(ring_);
        if (i < j) return Polynomial<K>::variable(ring_, ring_->x_index(i, j), field_.one());
        return -Polynomial<K>::variable(ring_, ring_->x_index(j, i), field_.one());
    }
    throw ShapeError("bad kind");
  }

  Polynomial<K> y(int j) const {
    return Polynomial<K>::variable(ring_, ring_->y_index(j), field_.one());
  }

  /// g_i = sum_k entry(i,k) y_k, the entries of the m x 1 matrix XY.
  std::vector<Polynomial<K>> xy_entries() const {
    std::vector<Polynomial<K>> g;
    g.reserve(static_cast<size_t>(m_));
    for (int i = 1; i <= m_; ++i) {
      Polynomial<K> gi = Polynomial<K>::zero(ring_);
      for (int k = 1; k <= n_; ++k) gi = gi + entry(i, k) * y(k);
      g.push_back(std::move(gi));
    }
    return g;
  }

  /// det(X) by Laplace expansion with sub-minors memoized on column subsets.
  Polynomial<K> determinant() const {
    if (m_ != n_) throw ShapeError("determinant of a non-square matrix");
    std::vector<int> rows(static_cast<size_t>(m_));
    for (int i = 0; i < m_; ++i) rows[static_cast<size_t>(i)] = i + 1;
    return det_of_rows(rows);
  }

  /// A_ji: the cofactor of x_ji, i.e. (-1)^(i+j) times the minor deleting
  /// row j and column i.
  Polynomial<K> cofactor(int j, int i) const {
    if (m_ != n_) throw ShapeError("cofactor of a non-square matrix");
    if (i < 1 || i > n_ || j < 1 || j > m_) throw ShapeError("cofactor index out of range");
    std::vector<int> rows;
    for (int r = 1; r <= m_; ++r)
      if (r != j) rows.push_back(r);
    std::uint32_t cols = full_mask(n_) & ~(1u << (i - 1));
    std::map<std::uint32_t, Polynomial<K>> memo;
    Polynomial<K> minor = det_memo(rows, cols, memo);
    return ((i + j) % 2 == 0) ? minor : -minor;
  }

  /// Delta_i for an (n+1) x n matrix: the maximal minor deleting row i.
  Polynomial<K> row_deleted_minor(int i) const {
    if (m_ != n_ + 1) throw ShapeError("row-deleted minors need an (n+1) x n matrix");
    if (i < 1 || i > m_) throw ShapeError("row index out of range");
    std::vector<int> rows;
    for (int r = 1; r <= m_; ++r)
      if (r != i) rows.push_back(r);
    return det_of_rows(rows);
  }

  /// Delta * y_i == sum_j A_ji g_j, expanded symbolically to zero.
  bool cofactor_identity_check(int i) const {
    Polynomial<K> lhs = determinant() * y(i);
    Polynomial<K> rhs = Polynomial<K>::zero(ring_);
    std::vector<Polynomial<K>> g = xy_entries();
    for (int j = 1; j <= m_; ++j) rhs = rhs + cofactor(j, i) * g[static_cast<size_t>(j - 1)];
    return (lhs - rhs).is_zero();
  }

  /// y_n g_n = -(y_1 g_1 + ... + y_{n-1} g_{n-1}); equivalently Y^t X Y = 0.
  bool skew_relation_check() const {
    if (kind_ != MatrixKind::Skew) throw ShapeError("skew relation needs a skew matrix");
    std::vector<Polynomial<K>> g = xy_entries();
    Polynomial<K> total = Polynomial<K>::zero(ring_);
    for (int i = 1; i <= n_; ++i) total = total + y(i) * g[static_cast<size_t>(i - 1)];
    return total.is_zero();
  }

 private:
  static std::uint32_t full_mask(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }

  Polynomial<K> det_of_rows(const std::vector<int>& rows) const {
    std::map<std::uint32_t, Polynomial<K>> memo;
    return det_memo(rows, full_mask(n_), memo);
  }

  // Expansion along rows[k] where k = |rows| - popcount(cols); because rows
  // are always consumed front-to-back, the column mask determines the
  // sub-minor.
  Polynomial<K> det_memo(const std::vector<int>& rows, std::uint32_t cols,
                         std::map<std::uint32_t, Polynomial<K>>& memo) const {
    if (cols == 0) return Polynomial<K>::constant(ring_, field_.one());
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    int live = __builtin_popcount(cols);
    int k = static_cast<int>(rows.size()) - live;
    int row = rows[static_cast<size_t>(k)];
    Polynomial<K> acc = Polynomial<K>::zero(ring_);
    int sign = 1;
    for (int c = 0; c < n_; ++c) {
      if (!(cols & (1u << c))) continue;
      Polynomial<K> e = entry(row, c + 1);
      if (!e.is_zero()) {
        Polynomial<K> sub = det_memo(rows, cols & ~(1u << c), memo);
        Polynomial<K> term = e * sub;
        acc = (sign > 0) ? acc + term : acc - term;
      }
      sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
  }

  F field_;
  MatrixKind kind_;
  int m_, n_;
  RingPtr ring_;
};

}  // namespace xyk

#endif
