/**
 * Finite posets: construction by relation closure, Hasse covers, interval
 * and multichain enumeration, order automorphisms.
 *
 * Elements are opaque string tokens; the canonical element order is the
 * construction order and never changes, so every basis derived from a
 * poset (comparable pairs, multichains) is stable across runs.
 */

#ifndef SKEWDER_POSET_HPP
#define SKEWDER_POSET_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skewder/errors.hpp"

namespace skewder {

/** A weak chain x0 <= x1 <= ... <= xn stored as element indices. */
using Multichain = std::vector<int>;

class Poset {
 public:
  /**
   * Builds the poset whose order is the reflexive-transitive closure of
   * the given relation pairs. The input may be any generating set, not
   * only covers; covers are recomputed as the transitive reduction.
   *
   * Throws UnknownElementError for pairs over undeclared tokens and
   * CycleError when the closure violates antisymmetry.
   */
  static Poset from_covers(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& relations);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& token(int i) const {
    return elements_[static_cast<std::size_t>(i)];
  }
  int index_of(const std::string& token) const;

  bool leq(int a, int b) const {
    return leq_[static_cast<std::size_t>(a) * elements_.size() +
                static_cast<std::size_t>(b)] != 0;
  }
  bool less(int a, int b) const { return a != b && leq(a, b); }

  const std::vector<std::pair<int, int>>& cover_pairs() const {
    return covers_;
  }

  /** All comparable pairs (x, y) with x <= y, in canonical order. */
  const std::vector<std::pair<int, int>>& comparable_pairs() const {
    return pairs_;
  }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  int pair_index(int a, int b) const;
  std::optional<int> find_pair_index(int a, int b) const;

  /** Elements z with a <= z <= b, in canonical order. */
  const std::vector<int>& interval(int a, int b) const {
    return intervals_[static_cast<std::size_t>(pair_index(a, b))];
  }

  /** Upper covers of x (immediate successors). */
  const std::vector<int>& upper_covers(int x) const {
    return upper_covers_[static_cast<std::size_t>(x)];
  }

 private:
  Poset() = default;

  std::vector<std::string> elements_;
  std::unordered_map<std::string, int> index_;
  std::vector<char> leq_;  // row-major n x n incidence of <=
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> pair_lookup_;  // n x n -> pair index or -1
  std::vector<std::vector<int>> intervals_;
  std::vector<std::vector<int>> upper_covers_;
};

Poset poset_from_covers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& relations);

/** An order automorphism together with its inverse. */
class PosetAutomorphism {
 public:
  static PosetAutomorphism identity(int n);

  int size() const { return static_cast<int>(forward_.size()); }
  int apply(int x) const { return forward_[static_cast<std::size_t>(x)]; }
  int apply_inverse(int x) const {
    return inverse_[static_cast<std::size_t>(x)];
  }
  bool is_identity() const;
  const std::vector<int>& forward() const { return forward_; }

  bool operator==(const PosetAutomorphism&) const = default;

 private:
  friend PosetAutomorphism validate_automorphism(const Poset&,
                                                 const std::vector<int>&);
  PosetAutomorphism(std::vector<int> fwd, std::vector<int> inv)
      : forward_(std::move(fwd)), inverse_(std::move(inv)) {}

  std::vector<int> forward_;
  std::vector<int> inverse_;
};

/**
 * Checks that `forward` (indexed by canonical position) is a bijection
 * with x <= y iff forward(x) <= forward(y).
 * Throws NotBijectiveError / NotOrderPreservingError with a witness.
 */
PosetAutomorphism validate_automorphism(const Poset& p,
                                        const std::vector<int>& forward);
PosetAutomorphism validate_automorphism(
    const Poset& p, const std::map<std::string, std::string>& mapping);

/**
 * All weak (n+1)-chains x0 <= x1 <= ... <= xn, repetitions allowed, in
 * lexicographic order of element positions. This ordering is the
 * canonical basis index for degree-n cochains.
 */
std::vector<Multichain> multichains(const Poset& p, int n);

/** Elements comparable to every element of the poset. */
std::vector<int> all_comparable_elements(const Poset& p);

/**
 * For an all-comparable x0, tests whether every x with
 * (x0, lam(x0) <= x) or (x, lam(x) <= x0) also satisfies lam(x) <= x.
 * Throws NotAllComparableError when x0 is not all-comparable.
 */
bool check_vanishing_condition(const Poset& p, const PosetAutomorphism& lam,
                               int x0);

/** Length of the poset: largest strict-chain cardinality minus one. */
int poset_length(const Poset& p);

}  // namespace skewder

#endif  // SKEWDER_POSET_HPP
