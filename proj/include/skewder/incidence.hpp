/**
 * The incidence algebra I(X,K) of a finite poset X over an exact field K:
 * elements as sparse functions on comparable pairs, convolution product,
 * triangular inversion, Hadamard product, multiplicative and fractional
 * elements, and the automorphisms built from (beta, sigma, lambda).
 */

#ifndef SKEWDER_INCIDENCE_HPP
#define SKEWDER_INCIDENCE_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

#include "skewder/fields.hpp"
#include "skewder/linalg.hpp"
#include "skewder/poset.hpp"

namespace skewder {

inline std::shared_ptr<const Poset> make_poset(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  return std::make_shared<const Poset>(
      poset_from_covers(std::move(elements), relations));
}

/**
 * An element f of I(X,K): K-values on comparable pairs (x, y), x <= y.
 * Absent entries are zero; stored entries are never zero, so equality is
 * plain representation equality.
 */
template <typename K>
class IncidenceElement {
 public:
  explicit IncidenceElement(std::shared_ptr<const Poset> poset)
      : poset_(std::move(poset)), field_(ScalarTraits<K>::spec()) {}

  const Poset& poset() const { return *poset_; }
  const std::shared_ptr<const Poset>& poset_ptr() const { return poset_; }
  const FieldSpec& field() const { return field_; }

  K operator()(int x, int y) const {
    const auto it = entries_.find({x, y});
    return it == entries_.end() ? K(0) : it->second;
  }

  void set(int x, int y, K value) {
    if (!poset_->leq(x, y))
      throw NotComparableError(poset_->token(x), poset_->token(y));
    if (is_zero(value))
      entries_.erase({x, y});
    else
      entries_.insert_or_assign({x, y}, std::move(value));
  }

  const std::map<std::pair<int, int>, K>& entries() const { return entries_; }
  bool is_zero_element() const { return entries_.empty(); }

  IncidenceElement& operator+=(const IncidenceElement& o) {
    require_compatible(o);
    for (const auto& [key, val] : o.entries_) {
      auto it = entries_.find(key);
      if (it == entries_.end()) {
        entries_.emplace(key, val);
      } else {
        it->second += val;
        if (is_zero(it->second)) entries_.erase(it);
      }
    }
    return *this;
  }
  IncidenceElement& operator-=(const IncidenceElement& o) {
    return *this += -o;
  }
  friend IncidenceElement operator+(IncidenceElement a,
                                    const IncidenceElement& b) {
    return a += b;
  }
  friend IncidenceElement operator-(IncidenceElement a,
                                    const IncidenceElement& b) {
    return a -= b;
  }
  IncidenceElement operator-() const {
    IncidenceElement out(*this);
    for (auto& [key, val] : out.entries_) val = -val;
    return out;
  }
  friend IncidenceElement operator*(const K& c, IncidenceElement f) {
    if (is_zero(c)) return IncidenceElement(f.poset_ptr());
    for (auto& [key, val] : f.entries_) val = c * val;
    return f;
  }

  bool operator==(const IncidenceElement& o) const {
    require_compatible(o);
    return entries_ == o.entries_;
  }

  /** Coordinates over the canonical comparable-pair basis. */
  VectorX<K> to_vector() const {
    VectorX<K> v = VectorX<K>::Zero(poset_->pair_count());
    for (const auto& [key, val] : entries_)
      v(poset_->pair_index(key.first, key.second)) = val;
    return v;
  }

  static IncidenceElement from_vector(std::shared_ptr<const Poset> poset,
                                      const VectorX<K>& v) {
    IncidenceElement out(std::move(poset));
    const auto& pairs = out.poset().comparable_pairs();
    for (Eigen::Index k = 0; k < v.size(); ++k)
      if (!is_zero(v(k)))
        out.entries_.emplace(pairs[static_cast<std::size_t>(k)], v(k));
    return out;
  }

  void require_compatible(const IncidenceElement& o) const {
    if (poset_.get() != o.poset_.get())
      throw MismatchError("operands live on different posets");
    if (field_ != o.field_)
      throw MixedFieldsError("operands live over different fields: " +
                             field_.str() + " vs " + o.field_.str());
    ScalarTraits<K>::check_context(field_);
  }

 private:
  std::shared_ptr<const Poset> poset_;
  FieldSpec field_;
  std::map<std::pair<int, int>, K> entries_;
};

/** The identity element: 1 on the diagonal. */
template <typename K>
IncidenceElement<K> delta_identity(std::shared_ptr<const Poset> poset) {
  IncidenceElement<K> out(std::move(poset));
  for (int x = 0; x < out.poset().size(); ++x) out.set(x, x, K(1));
  return out;
}

/** The zeta function: 1 on every comparable pair. */
template <typename K>
IncidenceElement<K> zeta(std::shared_ptr<const Poset> poset) {
  IncidenceElement<K> out(std::move(poset));
  for (const auto& [x, y] : out.poset().comparable_pairs()) out.set(x, y, K(1));
  return out;
}

/** The matrix unit e_{xy}: 1 at (x, y), zero elsewhere. Requires x <= y. */
template <typename K>
IncidenceElement<K> matrix_unit(std::shared_ptr<const Poset> poset, int x,
                                int y) {
  IncidenceElement<K> out(std::move(poset));
  out.set(x, y, K(1));
  return out;
}

/** Convolution product (fg)(x,y) = sum over x <= z <= y of f(x,z)g(z,y). */
template <typename K>
IncidenceElement<K> multiply(const IncidenceElement<K>& f,
                             const IncidenceElement<K>& g) {
  f.require_compatible(g);
  IncidenceElement<K> out(f.poset_ptr());
  for (const auto& [fk, fv] : f.entries()) {
    const auto [x, z] = fk;
    // g's entries with first coordinate z form a contiguous map range.
    for (auto it = g.entries().lower_bound({z, 0});
         it != g.entries().end() && it->first.first == z; ++it) {
      const int y = it->first.second;
      K term = fv * it->second;
      if (!is_zero(term)) {
        K acc = out(x, y) + term;
        out.set(x, y, std::move(acc));
      }
    }
  }
  return out;
}

template <typename K>
IncidenceElement<K> operator*(const IncidenceElement<K>& f,
                              const IncidenceElement<K>& g) {
  return multiply(f, g);
}

/**
 * Inverse by the triangular interval recursion:
 *   g(x,x) = f(x,x)^{-1},
 *   g(x,y) = -f(x,x)^{-1} * sum over x < z <= y of f(x,z) g(z,y).
 * Throws NotInvertibleError naming an x with f(x,x) = 0.
 */
template <typename K>
IncidenceElement<K> invert(const IncidenceElement<K>& f) {
  ScalarTraits<K>::check_context(f.field());
  const Poset& p = f.poset();
  IncidenceElement<K> g(f.poset_ptr());
  std::vector<K> diag_inv(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    const K d = f(x, x);
    if (is_zero(d)) throw NotInvertibleError(p.token(x));
    diag_inv[static_cast<std::size_t>(x)] = field_inv(d);
    g.set(x, x, diag_inv[static_cast<std::size_t>(x)]);
  }
  // Pairs ordered by interval size so g(z,y) is ready before g(x,y).
  std::vector<int> order(static_cast<std::size_t>(p.pair_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return p.interval(p.comparable_pairs()[static_cast<std::size_t>(a)].first,
                      p.comparable_pairs()[static_cast<std::size_t>(a)].second)
               .size() <
           p.interval(p.comparable_pairs()[static_cast<std::size_t>(b)].first,
                      p.comparable_pairs()[static_cast<std::size_t>(b)].second)
               .size();
  });
  for (int k : order) {
    const auto [x, y] = p.comparable_pairs()[static_cast<std::size_t>(k)];
    if (x == y) continue;
    K acc(0);
    for (int z : p.interval(x, y)) {
      if (z == x) continue;
      acc += f(x, z) * g(z, y);
    }
    g.set(x, y, -(diag_inv[static_cast<std::size_t>(x)] * acc));
  }
  return g;
}

/** Hadamard (pointwise) product (s * f)(x,y) = s(x,y) f(x,y). */
template <typename K>
IncidenceElement<K> hadamard(const IncidenceElement<K>& s,
                             const IncidenceElement<K>& f) {
  s.require_compatible(f);
  IncidenceElement<K> out(f.poset_ptr());
  for (const auto& [key, val] : f.entries()) {
    K prod = s(key.first, key.second) * val;
    if (!is_zero(prod)) out.set(key.first, key.second, std::move(prod));
  }
  return out;
}

/**
 * A validated multiplicative element: nowhere zero on comparable pairs,
 * with sigma(x,z) = sigma(x,y) sigma(y,z) on all weak triples.
 */
template <typename K>
class MultiplicativeElement {
 public:
  const IncidenceElement<K>& element() const { return element_; }
  const Poset& poset() const { return element_.poset(); }
  const std::shared_ptr<const Poset>& poset_ptr() const {
    return element_.poset_ptr();
  }

  K operator()(int x, int y) const { return element_(x, y); }

  /** The entrywise inverse, again multiplicative. */
  MultiplicativeElement entrywise_inverse() const {
    IncidenceElement<K> inv(element_.poset_ptr());
    for (const auto& [key, val] : element_.entries())
      inv.set(key.first, key.second, field_inv(val));
    return MultiplicativeElement(std::move(inv));
  }

  /** The Hadamard product with another multiplicative element. */
  MultiplicativeElement hadamard_with(const MultiplicativeElement& o) const {
    return MultiplicativeElement(hadamard(element_, o.element_));
  }

  bool operator==(const MultiplicativeElement& o) const {
    return element_ == o.element_;
  }

 private:
  template <typename K2>
  friend MultiplicativeElement<K2> validate_multiplicative(
      const IncidenceElement<K2>&);
  template <typename K2>
  friend MultiplicativeElement<K2> multiplicative_from_covers(
      std::shared_ptr<const Poset>, const std::map<std::pair<int, int>, K2>&);
  template <typename K2>
  friend MultiplicativeElement<K2> fractional_element(
      std::shared_ptr<const Poset>, const std::vector<K2>&);

  explicit MultiplicativeElement(IncidenceElement<K> e)
      : element_(std::move(e)) {}

  IncidenceElement<K> element_;
};

/**
 * Validates a full table. Throws ZeroEntryError for a vanishing entry and
 * NotMultiplicativeError with a witness triple.
 */
template <typename K>
MultiplicativeElement<K> validate_multiplicative(
    const IncidenceElement<K>& s) {
  ScalarTraits<K>::check_context(s.field());
  const Poset& p = s.poset();
  for (const auto& [x, y] : p.comparable_pairs())
    if (is_zero(s(x, y))) throw ZeroEntryError(p.token(x), p.token(y));
  for (const auto& t : multichains(p, 2))
    if (s(t[0], t[2]) != s(t[0], t[1]) * s(t[1], t[2]))
      throw NotMultiplicativeError(p.token(t[0]), p.token(t[1]),
                                   p.token(t[2]));
  return MultiplicativeElement<K>(s);
}

template <typename K>
MultiplicativeElement<K> zeta_multiplicative(
    std::shared_ptr<const Poset> poset) {
  return validate_multiplicative(zeta<K>(std::move(poset)));
}

/** The fractional element sigma(x,y) = eta(x) eta(y)^{-1}. */
template <typename K>
MultiplicativeElement<K> fractional_element(std::shared_ptr<const Poset> poset,
                                            const std::vector<K>& eta) {
  IncidenceElement<K> s(poset);
  const Poset& p = *poset;
  for (const auto& [x, y] : p.comparable_pairs()) {
    const K& ex = eta[static_cast<std::size_t>(x)];
    const K& ey = eta[static_cast<std::size_t>(y)];
    s.set(x, y, field_div(ex, ey));
  }
  return MultiplicativeElement<K>(std::move(s));
}

namespace detail {

// All saturated chains from x to y inside [x, y].
inline void saturated_chains(const Poset& p, int x, int y,
                             std::vector<int>& prefix,
                             std::vector<std::vector<int>>& out) {
  prefix.push_back(x);
  if (x == y) {
    out.push_back(prefix);
  } else {
    for (int z : p.upper_covers(x))
      if (p.leq(z, y)) saturated_chains(p, z, y, prefix, out);
  }
  prefix.pop_back();
}

}  // namespace detail

/**
 * Extends nonzero cover values to the multiplicative element whose value
 * on (x, y) is the product along saturated chains from x to y. Throws
 * PathInconsistentError with two disagreeing chains when no extension
 * exists, and ZeroEntryError for a zero cover value.
 */
template <typename K>
MultiplicativeElement<K> multiplicative_from_covers(
    std::shared_ptr<const Poset> poset,
    const std::map<std::pair<int, int>, K>& cover_values) {
  const Poset& p = *poset;
  for (const auto& [key, val] : cover_values) {
    if (std::find(p.cover_pairs().begin(), p.cover_pairs().end(), key) ==
        p.cover_pairs().end())
      throw Error("('" + p.token(key.first) + "', '" + p.token(key.second) +
                  "') is not a cover pair");
    if (is_zero(val)) throw ZeroEntryError(p.token(key.first), p.token(key.second));
  }
  for (const auto& c : p.cover_pairs())
    if (!cover_values.count(c))
      throw Error("missing cover value for ('" + p.token(c.first) + "', '" +
                  p.token(c.second) + "')");

  IncidenceElement<K> s(poset);
  for (const auto& [x, y] : p.comparable_pairs()) {
    std::vector<std::vector<int>> chains;
    std::vector<int> prefix;
    detail::saturated_chains(p, x, y, prefix, chains);
    K value(1);
    bool first = true;
    const std::vector<int>* reference = nullptr;
    for (const auto& chain : chains) {
      K prod(1);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        prod *= cover_values.at({chain[i], chain[i + 1]});
      if (first) {
        value = prod;
        reference = &chain;
        first = false;
      } else if (prod != value) {
        auto tokens = [&](const std::vector<int>& c) {
          std::vector<std::string> t;
          for (int e : c) t.push_back(p.token(e));
          return t;
        };
        throw PathInconsistentError(p.token(x), p.token(y), tokens(*reference),
                                    tokens(chain));
      }
    }
    s.set(x, y, std::move(value));
  }
  return MultiplicativeElement<K>(std::move(s));
}

/**
 * Outcome of the fractionality test. When sigma is not fractional, `cycle`
 * is a closed walk (first == last) in the comparability graph whose
 * alternating sigma-product, `cycle_product`, differs from one.
 */
template <typename K>
struct FractionalCheck {
  bool fractional = false;
  std::vector<K> eta;
  std::vector<int> cycle;
  K cycle_product{};

  explicit operator bool() const { return fractional; }
};

/**
 * Tests whether sigma(x,y) = eta(x) eta(y)^{-1} for some eta: X -> K^*.
 * Breadth-first propagation over the comparability graph with one base
 * point per connected component (the smallest element in canonical order).
 */
template <typename K>
FractionalCheck<K> is_fractional(const MultiplicativeElement<K>& sigma) {
  const Poset& p = sigma.poset();
  const int n = p.size();
  FractionalCheck<K> out;
  std::vector<K> eta(static_cast<std::size_t>(n), K(0));
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);

  auto comparable = [&](int a, int b) { return p.leq(a, b) || p.leq(b, a); };
  // sigma-quotient along a directed comparability step a -> b.
  auto step = [&](int a, int b) -> K {
    return p.leq(a, b) ? field_inv(sigma(a, b)) : sigma(b, a);
  };

  for (int base = 0; base < n; ++base) {
    if (seen[static_cast<std::size_t>(base)]) continue;
    seen[static_cast<std::size_t>(base)] = 1;
    eta[static_cast<std::size_t>(base)] = K(1);
    std::queue<int> queue;
    queue.push(base);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      for (int y = 0; y < n; ++y) {
        if (x == y || seen[static_cast<std::size_t>(y)] || !comparable(x, y))
          continue;
        seen[static_cast<std::size_t>(y)] = 1;
        parent[static_cast<std::size_t>(y)] = x;
        // x <= y: eta(y) = eta(x) / sigma(x,y); otherwise eta(y) = eta(x) sigma(y,x).
        eta[static_cast<std::size_t>(y)] =
            eta[static_cast<std::size_t>(x)] * step(x, y);
        queue.push(y);
      }
    }
  }

  for (const auto& [x, y] : p.comparable_pairs()) {
    if (x == y) continue;
    if (sigma(x, y) == field_div(eta[static_cast<std::size_t>(x)],
                                 eta[static_cast<std::size_t>(y)]))
      continue;
    // Violating pair: close the BFS-tree paths into a cycle through (x, y).
    auto path_to_root = [&](int v) {
      std::vector<int> path{v};
      while (parent[static_cast<std::size_t>(path.back())] != -1)
        path.push_back(parent[static_cast<std::size_t>(path.back())]);
      return path;
    };
    std::vector<int> from_x = path_to_root(x), from_y = path_to_root(y);
    while (from_x.size() > 1 && from_y.size() > 1 &&
           from_x[from_x.size() - 2] == from_y[from_y.size() - 2]) {
      from_x.pop_back();
      from_y.pop_back();
    }
    std::vector<int> cycle{x, y};
    cycle.insert(cycle.end(), from_y.begin() + 1, from_y.end());
    cycle.insert(cycle.end(), from_x.rbegin() + 1, from_x.rend());
    K product(1);
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
      const int a = cycle[i], b = cycle[i + 1];
      product *= p.leq(a, b) ? sigma(a, b) : field_inv(sigma(b, a));
    }
    out.cycle = std::move(cycle);
    out.cycle_product = std::move(product);
    return out;
  }
  out.fractional = true;
  out.eta = std::move(eta);
  return out;
}

/** sigma' ~ sigma iff the entrywise quotient sigma' * sigma^{-*} is fractional. */
template <typename K>
bool are_equivalent(const MultiplicativeElement<K>& sigma,
                    const MultiplicativeElement<K>& sigma_prime) {
  sigma.element().require_compatible(sigma_prime.element());
  return static_cast<bool>(
      is_fractional(sigma_prime.hadamard_with(sigma.entrywise_inverse())));
}

/**
 * The twisting data (sigma, lambda). Applied to f it acts as the algebra
 * automorphism f |-> sigma * (f relabeled through lambda^{-1}), i.e. the
 * Hadamard automorphism composed with the induced automorphism.
 */
template <typename K>
struct Twist {
  MultiplicativeElement<K> sigma;
  PosetAutomorphism lam;

  const Poset& poset() const { return sigma.poset(); }
  const std::shared_ptr<const Poset>& poset_ptr() const {
    return sigma.poset_ptr();
  }

  IncidenceElement<K> apply(const IncidenceElement<K>& f) const {
    IncidenceElement<K> out(f.poset_ptr());
    for (const auto& [key, val] : f.entries()) {
      const int x = lam.apply(key.first), y = lam.apply(key.second);
      out.set(x, y, sigma(x, y) * val);
    }
    return out;
  }

  IncidenceElement<K> apply_inverse(const IncidenceElement<K>& f) const {
    IncidenceElement<K> out(f.poset_ptr());
    for (const auto& [key, val] : f.entries()) {
      const int x = lam.apply_inverse(key.first),
                y = lam.apply_inverse(key.second);
      out.set(x, y, field_div(val, sigma(key.first, key.second)));
    }
    return out;
  }
};

/**
 * A factored algebra automorphism: conjugation by an invertible beta
 * composed with the twist automorphism of (sigma, lambda).
 */
template <typename K>
class AutomorphismSpec {
 public:
  static AutomorphismSpec make(IncidenceElement<K> beta,
                               MultiplicativeElement<K> sigma,
                               PosetAutomorphism lam) {
    beta.require_compatible(sigma.element());
    IncidenceElement<K> beta_inv = invert(beta);
    return AutomorphismSpec(std::move(beta), std::move(beta_inv),
                            Twist<K>{std::move(sigma), std::move(lam)});
  }

  /** The twist automorphism alone, with identity beta. */
  static AutomorphismSpec core(MultiplicativeElement<K> sigma,
                               PosetAutomorphism lam) {
    auto poset = sigma.poset_ptr();
    return make(delta_identity<K>(poset), std::move(sigma), std::move(lam));
  }

  const IncidenceElement<K>& beta() const { return beta_; }
  const IncidenceElement<K>& beta_inverse() const { return beta_inv_; }
  const Twist<K>& twist() const { return twist_; }
  const Poset& poset() const { return twist_.poset(); }
  const std::shared_ptr<const Poset>& poset_ptr() const {
    return twist_.poset_ptr();
  }

  bool has_identity_beta() const {
    return beta_ == delta_identity<K>(beta_.poset_ptr());
  }

  IncidenceElement<K> apply(const IncidenceElement<K>& f) const {
    return beta_ * twist_.apply(f) * beta_inv_;
  }

 private:
  AutomorphismSpec(IncidenceElement<K> beta, IncidenceElement<K> beta_inv,
                   Twist<K> twist)
      : beta_(std::move(beta)),
        beta_inv_(std::move(beta_inv)),
        twist_(std::move(twist)) {}

  IncidenceElement<K> beta_;
  IncidenceElement<K> beta_inv_;
  Twist<K> twist_;
};

}  // namespace skewder

#endif  // SKEWDER_INCIDENCE_HPP
