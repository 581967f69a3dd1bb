#include "xyk/order.hpp"

#include <array>

namespace xyk {

MonomialOrder::MonomialOrder(RingPtr ring, std::vector<int> priority, std::string name)
    : ring_(std::move(ring)), priority_(std::move(priority)), name_(std::move(name)) {
  const int nv = ring_->var_count();
  if (static_cast<int>(priority_.size()) != nv)
    throw std::invalid_argument("monomial order must list every variable exactly once");
  rank_.assign(static_cast<size_t>(nv), -1);
  for (int r = 0; r < nv; ++r) {
    int v = priority_[static_cast<size_t>(r)];
    if (v < 0 || v >= nv || rank_[static_cast<size_t>(v)] != -1)
      throw std::invalid_argument("monomial order priority list is not a permutation");
    rank_[static_cast<size_t>(v)] = r;
  }
}

MonomialOrder MonomialOrder::lex(RingPtr ring, std::vector<int> priority, std::string name) {
  return MonomialOrder(std::move(ring), std::move(priority), std::move(name));
}

MonomialOrder MonomialOrder::lex_completed(RingPtr ring, std::vector<int> chain,
                                           std::string name) {
  const int nv = ring->var_count();
  std::vector<char> used(static_cast<size_t>(nv), 0);
  for (int v : chain) {
    if (v < 0 || v >= nv || used[static_cast<size_t>(v)])
      throw std::invalid_argument("invalid or repeated variable in order chain");
    used[static_cast<size_t>(v)] = 1;
  }
  // completion: remaining x row-major, then y_1..y_n, then aux, which is
  // exactly the declaration order of the remaining indices.
  for (int v = 0; v < nv; ++v)
    if (!used[static_cast<size_t>(v)]) chain.push_back(v);
  return MonomialOrder(std::move(ring), std::move(chain), std::move(name));
}

MonomialOrder MonomialOrder::declaration(RingPtr ring) {
  std::vector<int> p(static_cast<size_t>(ring->var_count()));
  for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
  return MonomialOrder(std::move(ring), std::move(p), "declaration");
}

MonomialOrder MonomialOrder::regseq(RingPtr ring) {
  std::vector<int> chain;
  const int n = ring->cols();
  const int m = ring->rows();
  std::string name = "regseq-generic";
  switch (ring->kind()) {
    case MatrixKind::Generic:
      if (m > n) throw ShapeError("regseq order needs m <= n for generic matrices");
      for (int i = 1; i <= m; ++i) chain.push_back(ring->x_index(i, i));
      break;
    case MatrixKind::Symmetric:
      for (int i = 1; i <= n; ++i) chain.push_back(ring->x_index(i, i));
      break;
    case MatrixKind::Skew:
      for (int i = n - 1; i >= 1; --i) chain.push_back(ring->x_index(i, i + 1));
      name = "regseq-skew";
      break;
  }
  return lex_completed(std::move(ring), std::move(chain), std::move(name));
}

MonomialOrder MonomialOrder::grob(RingPtr ring) {
  std::vector<int> chain;
  for (int j = 1; j <= ring->cols(); ++j) chain.push_back(ring->y_index(j));
  return lex_completed(std::move(ring), std::move(chain), "grob");
}

MonomialOrder MonomialOrder::eliminate_aux(RingPtr ext, const MonomialOrder& base) {
  if (!ext->extends(*base.ring()))
    throw std::invalid_argument("elimination ring does not extend the base ring");
  std::vector<int> p;
  for (int a = ext->aux_count(); a > base.ring()->aux_count(); --a)
    p.push_back(ext->aux_index(a));
  for (int v : base.priority()) p.push_back(v);
  // any base auxiliaries are already in base.priority()
  return MonomialOrder(std::move(ext), std::move(p), "eliminate+" + base.name());
}

Cmp MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  std::array<std::pair<int, int>, Ring::kMaxVars> a, b;
  size_t na = 0, nb = 0;
  for (const auto& [var, e] : u.entries()) {
    if (var < 0 || var >= static_cast<int>(rank_.size())) throw OrderDomainError();
    a[na++] = {rank_[static_cast<size_t>(var)], e};
  }
  for (const auto& [var, e] : v.entries()) {
    if (var < 0 || var >= static_cast<int>(rank_.size())) throw OrderDomainError();
    b[nb++] = {rank_[static_cast<size_t>(var)], e};
  }
  std::sort(a.begin(), a.begin() + na);
  std::sort(b.begin(), b.begin() + nb);
  size_t i = 0, j = 0;
  while (i < na || j < nb) {
    int ru = i < na ? a[i].first : Ring::kMaxVars + 1;
    int rv = j < nb ? b[j].first : Ring::kMaxVars + 1;
    if (ru < rv) return Cmp::GT;
    if (rv < ru) return Cmp::LT;
    if (a[i].second != b[j].second) return a[i].second > b[j].second ? Cmp::GT : Cmp::LT;
    ++i;
    ++j;
  }
  return Cmp::EQ;
}

std::string MonomialOrder::str() const {
  std::string s = "order lex:";
  bool first = true;
  for (int v : priority_) {
    s += first ? " " : " > ";
    s += ring_->var(v).str();
    first = false;
  }
  return s;
}

}  // namespace xyk
