#ifndef XYK_ORDER_HPP
#define XYK_ORDER_HPP

#include <memory>
#include <string>
#include <vector>

#include "xyk/monomial.hpp"
#include "xyk/ring.hpp"

namespace xyk {

enum class Cmp { LT, EQ, GT };

struct OrderDomainError : std::invalid_argument {
  OrderDomainError()
      : std::invalid_argument("variable not covered by the monomial order") {}
};

/// A total lexicographic monomial order given by an explicit priority list
/// over all variables of a ring (first = highest). Partial chains are
/// completed deterministically: remaining x-variables in row-major order,
/// then y_1 > ... > y_n, then auxiliaries.
class MonomialOrder {
 public:
  static MonomialOrder lex(RingPtr ring, std::vector<int> priority,
                           std::string name = "lex");
  static MonomialOrder lex_completed(RingPtr ring, std::vector<int> chain,
                                     std::string name);
  /// Declaration order: x row-major, then y, then aux (variable index order).
  static MonomialOrder declaration(RingPtr ring);
  /// The regular-sequence order: diagonal chain x11 > x22 > ... (generic,
  /// symmetric) or superdiagonal chain x[n-1][n] > ... > x[1][2] (skew),
  /// everything else below, completed.
  static MonomialOrder regseq(RingPtr ring);
  /// y_1 > ... > y_n > x row-major (> aux).
  static MonomialOrder grob(RingPtr ring);
  /// Block elimination order on an extended ring: all auxiliaries above the
  /// base order's priorities.
  static MonomialOrder eliminate_aux(RingPtr ext, const MonomialOrder& base);

  Cmp compare(const Monomial& u, const Monomial& v) const;
  bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) == Cmp::LT; }
  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) == Cmp::GT; }

  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& priority() const { return priority_; }
  const std::vector<int>& rank() const { return rank_; }
  const std::string& name() const { return name_; }
  bool same_as(const MonomialOrder& o) const {
    return ring_->same_universe(*o.ring_) && priority_ == o.priority_;
  }
  std::string str() const;  // "order lex: y[1] > y[2] > ..."

 private:
  MonomialOrder(RingPtr ring, std::vector<int> priority, std::string name);
  RingPtr ring_;
  std::vector<int> priority_;
  std::vector<int> rank_;
  std::string name_;
};

}  // namespace xyk

#endif
