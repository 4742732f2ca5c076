#include "skewder/poset.hpp"

#include <algorithm>

namespace skewder {

Poset Poset::from_covers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  Poset p;
  p.elements_ = std::move(elements);
  const auto n = p.elements_.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = p.index_.emplace(p.elements_[i], static_cast<int>(i));
    if (!fresh)
      throw ParseError("duplicate element '" + p.elements_[i] + "'");
  }

  p.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
  for (const auto& [a, b] : relations) {
    const auto ia = p.index_.find(a);
    if (ia == p.index_.end()) throw UnknownElementError(a);
    const auto ib = p.index_.find(b);
    if (ib == p.index_.end()) throw UnknownElementError(b);
    p.leq_[static_cast<std::size_t>(ia->second) * n +
           static_cast<std::size_t>(ib->second)] = 1;
  }

  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.leq_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq_[i * n + j] && p.leq_[j * n + i])
        throw CycleError(p.elements_[i], p.elements_[j]);

  // Covers = transitive reduction.
  p.upper_covers_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !p.leq_[i * n + j]) continue;
      bool via = false;
      for (std::size_t z = 0; z < n && !via; ++z)
        via = z != i && z != j && p.leq_[i * n + z] && p.leq_[z * n + j];
      if (!via) {
        p.covers_.emplace_back(static_cast<int>(i), static_cast<int>(j));
        p.upper_covers_[i].push_back(static_cast<int>(j));
      }
    }
  std::sort(p.covers_.begin(), p.covers_.end());

  p.pair_lookup_.assign(n * n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.leq_[i * n + j]) {
        p.pair_lookup_[i * n + j] = static_cast<int>(p.pairs_.size());
        p.pairs_.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }

  p.intervals_.resize(p.pairs_.size());
  for (std::size_t k = 0; k < p.pairs_.size(); ++k) {
    const auto [a, b] = p.pairs_[k];
    for (std::size_t z = 0; z < n; ++z)
      if (p.leq_[static_cast<std::size_t>(a) * n + z] &&
          p.leq_[z * n + static_cast<std::size_t>(b)])
        p.intervals_[k].push_back(static_cast<int>(z));
  }
  return p;
}

Poset poset_from_covers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  return Poset::from_covers(std::move(elements), relations);
}

int Poset::index_of(const std::string& token) const {
  const auto it = index_.find(token);
  if (it == index_.end()) throw UnknownElementError(token);
  return it->second;
}

int Poset::pair_index(int a, int b) const {
  const int k = pair_lookup_[static_cast<std::size_t>(a) * elements_.size() +
                             static_cast<std::size_t>(b)];
  if (k < 0) throw NotComparableError(token(a), token(b));
  return k;
}

std::optional<int> Poset::find_pair_index(int a, int b) const {
  const int k = pair_lookup_[static_cast<std::size_t>(a) * elements_.size() +
                             static_cast<std::size_t>(b)];
  if (k < 0) return std::nullopt;
  return k;
}

PosetAutomorphism PosetAutomorphism::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
  return PosetAutomorphism(id, id);
}

bool PosetAutomorphism::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (apply(i) != i) return false;
  return true;
}

PosetAutomorphism validate_automorphism(const Poset& p,
                                        const std::vector<int>& forward) {
  const int n = p.size();
  if (static_cast<int>(forward.size()) != n)
    throw NotBijectiveError("mapping is not defined on every element");
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    const int y = forward[static_cast<std::size_t>(x)];
    if (y < 0 || y >= n)
      throw NotBijectiveError("mapping leaves the element set");
    if (inverse[static_cast<std::size_t>(y)] != -1)
      throw NotBijectiveError("mapping is not injective: '" + p.token(x) +
                              "' and '" +
                              p.token(inverse[static_cast<std::size_t>(y)]) +
                              "' share the image '" + p.token(y) + "'");
    inverse[static_cast<std::size_t>(y)] = x;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.leq(x, y) != p.leq(forward[static_cast<std::size_t>(x)],
                               forward[static_cast<std::size_t>(y)]))
        throw NotOrderPreservingError(p.token(x), p.token(y));
  return PosetAutomorphism(forward, std::move(inverse));
}

PosetAutomorphism validate_automorphism(
    const Poset& p, const std::map<std::string, std::string>& mapping) {
  std::vector<int> forward(static_cast<std::size_t>(p.size()), -1);
  for (const auto& [from, to] : mapping)
    forward[static_cast<std::size_t>(p.index_of(from))] = p.index_of(to);
  for (int x = 0; x < p.size(); ++x)
    if (forward[static_cast<std::size_t>(x)] < 0)
      throw NotBijectiveError("mapping is not defined on '" + p.token(x) +
                              "'");
  return validate_automorphism(p, forward);
}

std::vector<Multichain> multichains(const Poset& p, int n) {
  std::vector<Multichain> out;
  Multichain current(static_cast<std::size_t>(n) + 1);
  // Depth-first in index order: lexicographic by element positions.
  auto extend = [&](auto&& self, int depth) -> void {
    if (depth == n + 1) {
      out.push_back(current);
      return;
    }
    const int prev = current[static_cast<std::size_t>(depth) - 1];
    for (int next = 0; next < p.size(); ++next) {
      if (!p.leq(prev, next)) continue;
      current[static_cast<std::size_t>(depth)] = next;
      self(self, depth + 1);
    }
  };
  for (int first = 0; first < p.size(); ++first) {
    current[0] = first;
    extend(extend, 1);
  }
  return out;
}

std::vector<int> all_comparable_elements(const Poset& p) {
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x) {
    bool all = true;
    for (int y = 0; y < p.size() && all; ++y)
      all = p.leq(x, y) || p.leq(y, x);
    if (all) out.push_back(x);
  }
  return out;
}

bool check_vanishing_condition(const Poset& p, const PosetAutomorphism& lam,
                               int x0) {
  bool x0_comparable = true;
  for (int y = 0; y < p.size() && x0_comparable; ++y)
    x0_comparable = p.leq(x0, y) || p.leq(y, x0);
  if (!x0_comparable) throw NotAllComparableError(p.token(x0));
  for (int x = 0; x < p.size(); ++x) {
    const bool above = p.leq(x0, x) && p.leq(lam.apply(x0), x);
    const bool below = p.leq(x, x0) && p.leq(lam.apply(x), x0);
    if ((above || below) && !p.leq(lam.apply(x), x)) return false;
  }
  return true;
}

int poset_length(const Poset& p) {
  // Longest strict chain ending at x, memoized over the order DAG.
  const int n = p.size();
  std::vector<int> height(static_cast<std::size_t>(n), -1);
  auto chain_to = [&](auto&& self, int x) -> int {
    int& hx = height[static_cast<std::size_t>(x)];
    if (hx >= 0) return hx;
    hx = 0;
    for (int y = 0; y < n; ++y)
      if (p.less(y, x)) hx = std::max(hx, self(self, y) + 1);
    return hx;
  };
  int best = 0;
  for (int x = 0; x < n; ++x) best = std::max(best, chain_to(chain_to, x));
  return best;
}

}  // namespace skewder
