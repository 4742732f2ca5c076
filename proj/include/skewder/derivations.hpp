/**
 * Skew derivations of I(X,K): linear endomorphisms in the comparable-pair
 * basis, the Leibniz test, inner derivations, additive and potential
 * elements, the additive derivation attached to an additive element, the
 * constructive inner + additive decomposition, and brute-force bases of
 * the derivation spaces.
 *
 * A linear map d is stored as the m x m matrix whose column j holds the
 * coordinates of d(e_j) over the canonical pair basis, m = |X^2_<=|.
 * Every space question (membership, span, intersection) is then a rank
 * computation.
 */

#ifndef SKEWDER_DERIVATIONS_HPP
#define SKEWDER_DERIVATIONS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "skewder/incidence.hpp"
#include "skewder/linalg.hpp"

namespace skewder {

template <typename K>
class LinearEndomorphism {
 public:
  LinearEndomorphism(std::shared_ptr<const Poset> poset, MatrixX<K> matrix)
      : poset_(std::move(poset)),
        field_(ScalarTraits<K>::spec()),
        matrix_(std::move(matrix)) {
    if (matrix_.rows() != poset_->pair_count() ||
        matrix_.cols() != poset_->pair_count())
      throw DimensionMismatchError(
          "endomorphism matrix must be m x m over the pair basis");
  }

  static LinearEndomorphism zero(std::shared_ptr<const Poset> poset) {
    const int m = poset->pair_count();
    return LinearEndomorphism(std::move(poset), MatrixX<K>::Zero(m, m));
  }

  const Poset& poset() const { return *poset_; }
  const std::shared_ptr<const Poset>& poset_ptr() const { return poset_; }
  const FieldSpec& field() const { return field_; }
  const MatrixX<K>& matrix() const { return matrix_; }

  IncidenceElement<K> apply(const IncidenceElement<K>& f) const {
    return IncidenceElement<K>::from_vector(poset_, matrix_ * f.to_vector());
  }

  /** d(e_j) for the j-th comparable pair. */
  IncidenceElement<K> unit_image(int pair_idx) const {
    return IncidenceElement<K>::from_vector(poset_, matrix_.col(pair_idx));
  }

  /** Column-major flattening; the coordinate vector in K^(m*m). */
  VectorX<K> vec() const { return matrix_.reshaped(); }

  static LinearEndomorphism from_vec(std::shared_ptr<const Poset> poset,
                                     const VectorX<K>& v) {
    const int m = poset->pair_count();
    return LinearEndomorphism(std::move(poset), v.reshaped(m, m));
  }

  LinearEndomorphism& operator+=(const LinearEndomorphism& o) {
    require_compatible(o);
    matrix_ += o.matrix_;
    return *this;
  }
  LinearEndomorphism& operator-=(const LinearEndomorphism& o) {
    require_compatible(o);
    matrix_ -= o.matrix_;
    return *this;
  }
  friend LinearEndomorphism operator+(LinearEndomorphism a,
                                      const LinearEndomorphism& b) {
    return a += b;
  }
  friend LinearEndomorphism operator-(LinearEndomorphism a,
                                      const LinearEndomorphism& b) {
    return a -= b;
  }
  bool operator==(const LinearEndomorphism& o) const {
    require_compatible(o);
    return matrix_ == o.matrix_;
  }

  void require_compatible(const LinearEndomorphism& o) const {
    if (poset_.get() != o.poset_.get())
      throw MismatchError("endomorphisms live on different posets");
    if (field_ != o.field_)
      throw MixedFieldsError("endomorphisms live over different fields");
    ScalarTraits<K>::check_context(field_);
  }

 private:
  std::shared_ptr<const Poset> poset_;
  FieldSpec field_;
  MatrixX<K> matrix_;
};

/** Matrix of f |-> g f in the pair basis. */
template <typename K>
MatrixX<K> left_multiplication_matrix(const IncidenceElement<K>& g) {
  const Poset& p = g.poset();
  const int m = p.pair_count();
  MatrixX<K> out = MatrixX<K>::Zero(m, m);
  // g e_{zw} = sum over u <= z of g(u,z) e_{uw}.
  for (const auto& [key, val] : g.entries()) {
    const auto [u, z] = key;
    for (int k = 0; k < m; ++k) {
      const auto [first, w] = p.comparable_pairs()[static_cast<std::size_t>(k)];
      if (first != z) continue;
      out(p.pair_index(u, w), k) += val;
    }
  }
  return out;
}

/** Matrix of f |-> f g in the pair basis. */
template <typename K>
MatrixX<K> right_multiplication_matrix(const IncidenceElement<K>& g) {
  const Poset& p = g.poset();
  const int m = p.pair_count();
  MatrixX<K> out = MatrixX<K>::Zero(m, m);
  // e_{xy} g = sum over y <= v of g(y,v) e_{xv}.
  for (const auto& [key, val] : g.entries()) {
    const auto [y, v] = key;
    for (int k = 0; k < m; ++k) {
      const auto [x, second] = p.comparable_pairs()[static_cast<std::size_t>(k)];
      if (second != y) continue;
      out(p.pair_index(x, v), k) += val;
    }
  }
  return out;
}

/** Matrix of the twist automorphism: e_{xy} |-> sigma(lx,ly) e_{lx,ly}. */
template <typename K>
MatrixX<K> twist_matrix(const Twist<K>& twist) {
  const Poset& p = twist.poset();
  const int m = p.pair_count();
  MatrixX<K> out = MatrixX<K>::Zero(m, m);
  for (int k = 0; k < m; ++k) {
    const auto [x, y] = p.comparable_pairs()[static_cast<std::size_t>(k)];
    const int lx = twist.lam.apply(x), ly = twist.lam.apply(y);
    out(p.pair_index(lx, ly), k) = twist.sigma(lx, ly);
  }
  return out;
}

/** Matrix of the full factored automorphism f |-> beta psi(f) beta^{-1}. */
template <typename K>
MatrixX<K> automorphism_matrix(const AutomorphismSpec<K>& spec) {
  return left_multiplication_matrix(spec.beta()) *
         right_multiplication_matrix(spec.beta_inverse()) *
         twist_matrix(spec.twist());
}

/**
 * Result of the Leibniz test. When it fails, (left_unit, right_unit) are
 * the comparable pairs of a witness pair (e_a, e_b) with
 * d(e_a e_b) != d(e_a) e_b + phi(e_a) d(e_b).
 */
struct LeibnizCheck {
  bool ok = true;
  std::pair<int, int> left_unit{-1, -1};
  std::pair<int, int> right_unit{-1, -1};
  explicit operator bool() const { return ok; }
};

/**
 * Checks the Leibniz rule on all basis pairs, which suffices by
 * bilinearity.
 */
template <typename K>
LeibnizCheck is_skew_derivation(const LinearEndomorphism<K>& d,
                                const AutomorphismSpec<K>& spec) {
  if (d.poset_ptr().get() != spec.poset_ptr().get())
    throw MismatchError("derivation and automorphism posets differ");
  const Poset& p = d.poset();
  const int m = p.pair_count();
  std::vector<IncidenceElement<K>> d_unit, phi_unit, unit;
  d_unit.reserve(m);
  phi_unit.reserve(m);
  unit.reserve(m);
  for (int k = 0; k < m; ++k) {
    const auto [x, y] = p.comparable_pairs()[static_cast<std::size_t>(k)];
    unit.push_back(matrix_unit<K>(d.poset_ptr(), x, y));
    d_unit.push_back(d.unit_image(k));
    phi_unit.push_back(spec.apply(unit.back()));
  }
  const IncidenceElement<K> zero(d.poset_ptr());
  for (int a = 0; a < m; ++a) {
    const auto [x, y] = p.comparable_pairs()[static_cast<std::size_t>(a)];
    for (int b = 0; b < m; ++b) {
      const auto [z, w] = p.comparable_pairs()[static_cast<std::size_t>(b)];
      const IncidenceElement<K> lhs =
          y == z ? d.unit_image(p.pair_index(x, w)) : zero;
      const IncidenceElement<K> rhs =
          d_unit[static_cast<std::size_t>(a)] * unit[static_cast<std::size_t>(b)] +
          phi_unit[static_cast<std::size_t>(a)] * d_unit[static_cast<std::size_t>(b)];
      if (!(lhs == rhs))
        return LeibnizCheck{false, {x, y}, {z, w}};
    }
  }
  return LeibnizCheck{};
}

/** The inner derivation b |-> a b - phi(b) a. */
template <typename K>
LinearEndomorphism<K> inner_derivation(const IncidenceElement<K>& a,
                                       const AutomorphismSpec<K>& spec) {
  a.require_compatible(spec.beta());
  MatrixX<K> mat = left_multiplication_matrix(a) -
                   right_multiplication_matrix(a) * automorphism_matrix(spec);
  return LinearEndomorphism<K>(a.poset_ptr(), std::move(mat));
}

enum class BetaTransport {
  to_core,    // d' = beta^{-1} d : strips the inner factor of phi
  from_core,  // d  = beta d'    : reattaches it
};

/**
 * Transports derivations between phi = xi_beta o psi and the twist part
 * psi by left multiplication with beta^{-1} (or beta).
 */
template <typename K>
LinearEndomorphism<K> transport_by_beta(const LinearEndomorphism<K>& d,
                                        const IncidenceElement<K>& beta,
                                        BetaTransport direction) {
  for (int x = 0; x < beta.poset().size(); ++x)
    if (is_zero(beta(x, x))) throw NotInvertibleError(beta.poset().token(x));
  const IncidenceElement<K> factor =
      direction == BetaTransport::to_core ? invert(beta) : beta;
  return LinearEndomorphism<K>(d.poset_ptr(),
                               left_multiplication_matrix(factor) * d.matrix());
}

/**
 * A validated (sigma, lambda)-additive element: tau vanishes wherever
 * lambda(x) is not below y and satisfies the twisted cocycle identity
 * tau(x,z) = tau(x,y) + sigma(lx,ly) tau(y,z) on weak triples.
 */
template <typename K>
class AdditiveElement {
 public:
  const IncidenceElement<K>& tau() const { return tau_; }
  const Twist<K>& twist() const { return twist_; }
  const Poset& poset() const { return tau_.poset(); }

  bool operator==(const AdditiveElement& o) const { return tau_ == o.tau_; }

 private:
  template <typename K2>
  friend AdditiveElement<K2> validate_additive(const IncidenceElement<K2>&,
                                               const Twist<K2>&);
  template <typename K2>
  friend AdditiveElement<K2> potential_element(const Twist<K2>&,
                                               const std::vector<K2>&);
  template <typename K2>
  friend std::vector<AdditiveElement<K2>> additive_space(const Twist<K2>&);

  AdditiveElement(IncidenceElement<K> tau, Twist<K> twist)
      : tau_(std::move(tau)), twist_(std::move(twist)) {}

  IncidenceElement<K> tau_;
  Twist<K> twist_;
};

template <typename K>
AdditiveElement<K> validate_additive(const IncidenceElement<K>& tau,
                                     const Twist<K>& twist) {
  tau.require_compatible(twist.sigma.element());
  const Poset& p = tau.poset();
  for (const auto& [x, y] : p.comparable_pairs())
    if (!p.leq(twist.lam.apply(x), y) && !is_zero(tau(x, y)))
      throw VanishingViolationError(p.token(x), p.token(y));
  for (const auto& t : multichains(p, 2)) {
    const K lhs = tau(t[0], t[2]);
    const K rhs = tau(t[0], t[1]) +
                  twist.sigma(twist.lam.apply(t[0]), twist.lam.apply(t[1])) *
                      tau(t[1], t[2]);
    if (lhs != rhs)
      throw CocycleViolationError(p.token(t[0]), p.token(t[1]), p.token(t[2]));
  }
  return AdditiveElement<K>(tau, twist);
}

/**
 * The additive derivation attached to tau: on units,
 * e_{xy} |-> tau(x,y) e_{lambda(x) y} when lambda(x) <= y, else 0.
 */
template <typename K>
LinearEndomorphism<K> additive_derivation(const AdditiveElement<K>& t) {
  const Poset& p = t.poset();
  const int m = p.pair_count();
  MatrixX<K> mat = MatrixX<K>::Zero(m, m);
  for (int k = 0; k < m; ++k) {
    const auto [x, y] = p.comparable_pairs()[static_cast<std::size_t>(k)];
    const int lx = t.twist().lam.apply(x);
    const auto target = p.find_pair_index(lx, y);
    if (!target) continue;
    mat(*target, k) = t.tau()(x, y);
  }
  return LinearEndomorphism<K>(t.tau().poset_ptr(), std::move(mat));
}

template <typename K>
struct PotentialWitness {
  std::vector<K> epsilon;  // indexed by canonical element order
};

/**
 * The potential element tau(x,y) = eps(x) - sigma(lx,ly) eps(y) of a point
 * function eps vanishing wherever lambda(x) is not below x. Always
 * additive.
 */
template <typename K>
AdditiveElement<K> potential_element(const Twist<K>& twist,
                                     const std::vector<K>& epsilon) {
  const Poset& p = twist.poset();
  if (static_cast<int>(epsilon.size()) != p.size())
    throw DimensionMismatchError("epsilon must assign a value to every element");
  for (int x = 0; x < p.size(); ++x)
    if (!p.leq(twist.lam.apply(x), x) &&
        !is_zero(epsilon[static_cast<std::size_t>(x)]))
      throw Error("epsilon must vanish at '" + p.token(x) +
                  "' where lambda(x) is not below x");
  IncidenceElement<K> tau(twist.poset_ptr());
  for (const auto& [x, y] : p.comparable_pairs()) {
    K value = epsilon[static_cast<std::size_t>(x)] -
              twist.sigma(twist.lam.apply(x), twist.lam.apply(y)) *
                  epsilon[static_cast<std::size_t>(y)];
    if (!is_zero(value)) tau.set(x, y, std::move(value));
  }
  return AdditiveElement<K>(std::move(tau), twist);
}

/**
 * Solves tau(x,y) = eps(x) - sigma(lx,ly) eps(y) for eps over the
 * unknowns {eps(x) : lambda(x) <= x} (all other eps are forced to zero).
 * The witness is the reduced-echelon particular solution. Returns nullopt
 * when tau is not potential.
 */
template <typename K>
std::optional<PotentialWitness<K>> find_potential_witness(
    const AdditiveElement<K>& t) {
  const Poset& p = t.poset();
  const Twist<K>& twist = t.twist();
  std::vector<int> unknown_of(static_cast<std::size_t>(p.size()), -1);
  std::vector<int> element_of;
  for (int x = 0; x < p.size(); ++x)
    if (p.leq(twist.lam.apply(x), x)) {
      unknown_of[static_cast<std::size_t>(x)] =
          static_cast<int>(element_of.size());
      element_of.push_back(x);
    }
  const int m = p.pair_count();
  MatrixX<K> a = MatrixX<K>::Zero(m, static_cast<Eigen::Index>(element_of.size()));
  VectorX<K> b(m);
  for (int k = 0; k < m; ++k) {
    const auto [x, y] = p.comparable_pairs()[static_cast<std::size_t>(k)];
    b(k) = t.tau()(x, y);
    if (unknown_of[static_cast<std::size_t>(x)] >= 0)
      a(k, unknown_of[static_cast<std::size_t>(x)]) += K(1);
    if (unknown_of[static_cast<std::size_t>(y)] >= 0)
      a(k, unknown_of[static_cast<std::size_t>(y)]) -=
          twist.sigma(twist.lam.apply(x), twist.lam.apply(y));
  }
  auto solution = solve_linear<K>(a, b);
  if (!solution.consistent) return std::nullopt;
  PotentialWitness<K> witness;
  witness.epsilon.assign(static_cast<std::size_t>(p.size()), K(0));
  for (std::size_t i = 0; i < element_of.size(); ++i)
    witness.epsilon[static_cast<std::size_t>(element_of[i])] =
        (*solution.particular)(static_cast<Eigen::Index>(i));
  return witness;
}

template <typename K>
struct DerivationDecomposition {
  IncidenceElement<K> inner_part;    // f with d(e_y)(x,y), giving D_f
  AdditiveElement<K> additive_part;  // tau with d = D_f + L_tau
};

/**
 * The constructive decomposition of a twist derivation:
 * f(x,y) = d(e_y)(x,y), and tau read off from d - D_f on the units.
 * Throws NotADerivationError when d fails the Leibniz test for the twist.
 */
template <typename K>
DerivationDecomposition<K> decompose_derivation(const LinearEndomorphism<K>& d,
                                                const Twist<K>& twist) {
  const auto spec = AutomorphismSpec<K>::core(twist.sigma, twist.lam);
  if (const auto check = is_skew_derivation(d, spec); !check) {
    const Poset& p = d.poset();
    throw NotADerivationError(
        "map is not a derivation for the twist automorphism; Leibniz fails "
        "on (e_{" +
        p.token(check.left_unit.first) + "," + p.token(check.left_unit.second) +
        "}, e_{" + p.token(check.right_unit.first) + "," +
        p.token(check.right_unit.second) + "})");
  }
  const Poset& p = d.poset();
  IncidenceElement<K> f(d.poset_ptr());
  for (const auto& [x, y] : p.comparable_pairs()) {
    const K value = d.unit_image(p.pair_index(y, y))(x, y);
    if (!is_zero(value)) f.set(x, y, value);
  }
  const LinearEndomorphism<K> remainder = d - inner_derivation(f, spec);
  IncidenceElement<K> tau(d.poset_ptr());
  for (const auto& [x, y] : p.comparable_pairs()) {
    const int lx = twist.lam.apply(x);
    if (!p.leq(lx, y)) continue;
    const K value = remainder.unit_image(p.pair_index(x, y))(lx, y);
    if (!is_zero(value)) tau.set(x, y, value);
  }
  return DerivationDecomposition<K>{std::move(f),
                                    validate_additive(tau, twist)};
}

/**
 * Basis of the space of all phi-derivations, by solving the homogeneous
 * Leibniz system over the m^2 unknown matrix entries on all unit pairs.
 */
template <typename K>
std::vector<LinearEndomorphism<K>> derivation_space(
    const AutomorphismSpec<K>& spec) {
  const Poset& p = spec.poset();
  const int m = p.pair_count();
  const auto& pairs = p.comparable_pairs();
  const MatrixX<K> phi = automorphism_matrix(spec);

  // Unit products e_a e_b as pair indices (-1 when zero).
  std::vector<std::vector<int>> unit_product(
      static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const auto [x, y] = pairs[static_cast<std::size_t>(a)];
      const auto [z, w] = pairs[static_cast<std::size_t>(b)];
      unit_product[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          y == z ? p.pair_index(x, w) : -1;
    }

  // Sparse action of "right-multiply by e_b" on unit coordinates:
  // e_s e_b = e_{x_s, w_b} when y_s = z_b.
  struct Entry {
    int row, col;
  };
  std::vector<std::vector<Entry>> right_action(static_cast<std::size_t>(m));
  for (int b = 0; b < m; ++b) {
    const auto [z, w] = pairs[static_cast<std::size_t>(b)];
    for (int s = 0; s < m; ++s) {
      const auto [u, v] = pairs[static_cast<std::size_t>(s)];
      if (v == z)
        right_action[static_cast<std::size_t>(b)].push_back(
            Entry{p.pair_index(u, w), s});
    }
  }
  // Sparse action of "left-multiply by phi(e_a)".
  struct ScaledEntry {
    int row, col;
    K value;
  };
  std::vector<std::vector<ScaledEntry>> left_action(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    const auto g =
        IncidenceElement<K>::from_vector(spec.poset_ptr(), phi.col(a));
    for (const auto& [key, val] : g.entries()) {
      const auto [u, z] = key;
      for (int s = 0; s < m; ++s) {
        const auto [first, w] = pairs[static_cast<std::size_t>(s)];
        if (first == z)
          left_action[static_cast<std::size_t>(a)].push_back(
              ScaledEntry{p.pair_index(u, w), s, val});
      }
    }
  }

  RowSpace<K> constraints(static_cast<Eigen::Index>(m) * m);
  MatrixX<K> block(m, static_cast<Eigen::Index>(m) * m);
  std::vector<char> touched(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      block.setZero();
      std::fill(touched.begin(), touched.end(), 0);
      // d(e_a e_b) - d(e_a) e_b - phi(e_a) d(e_b) = 0, coordinatewise.
      const int c = unit_product[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (c >= 0)
        for (int r = 0; r < m; ++r) {
          block(r, r + m * c) += K(1);
          touched[static_cast<std::size_t>(r)] = 1;
        }
      for (const auto& entry : right_action[static_cast<std::size_t>(b)]) {
        block(entry.row, entry.col + m * a) -= K(1);
        touched[static_cast<std::size_t>(entry.row)] = 1;
      }
      for (const auto& entry : left_action[static_cast<std::size_t>(a)]) {
        block(entry.row, entry.col + m * b) -= entry.value;
        touched[static_cast<std::size_t>(entry.row)] = 1;
      }
      for (int r = 0; r < m; ++r)
        if (touched[static_cast<std::size_t>(r)])
          constraints.insert(block.row(r).transpose());
    }

  const MatrixX<K> kernel =
      kernel_basis_from(constraints.echelon(), static_cast<Eigen::Index>(m) * m);
  std::vector<LinearEndomorphism<K>> basis;
  basis.reserve(static_cast<std::size_t>(kernel.cols()));
  for (Eigen::Index j = 0; j < kernel.cols(); ++j)
    basis.push_back(
        LinearEndomorphism<K>::from_vec(spec.poset_ptr(), kernel.col(j)));
  return basis;
}

/** Span of the inner derivations, generated by D_{e_{uv}} over all pairs. */
template <typename K>
RowSpace<K> inner_derivation_span(const AutomorphismSpec<K>& spec) {
  const Poset& p = spec.poset();
  const int m = p.pair_count();
  const MatrixX<K> phi = automorphism_matrix(spec);
  RowSpace<K> span(static_cast<Eigen::Index>(m) * m);
  for (int c = 0; c < m; ++c) {
    const auto [u, v] = p.comparable_pairs()[static_cast<std::size_t>(c)];
    const auto unit = matrix_unit<K>(spec.poset_ptr(), u, v);
    const MatrixX<K> mat = left_multiplication_matrix(unit) -
                           right_multiplication_matrix(unit) * phi;
    span.insert(mat.reshaped());
  }
  return span;
}

/** Basis of the space of (sigma, lambda)-additive elements. */
template <typename K>
std::vector<AdditiveElement<K>> additive_space(const Twist<K>& twist) {
  const Poset& p = twist.poset();
  const int m = p.pair_count();
  std::vector<VectorX<K>> rows;
  for (int k = 0; k < m; ++k) {
    const auto [x, y] = p.comparable_pairs()[static_cast<std::size_t>(k)];
    if (!p.leq(twist.lam.apply(x), y)) {
      VectorX<K> row = VectorX<K>::Zero(m);
      row(k) = K(1);
      rows.push_back(std::move(row));
    }
  }
  for (const auto& t : multichains(p, 2)) {
    VectorX<K> row = VectorX<K>::Zero(m);
    row(p.pair_index(t[0], t[2])) += K(1);
    row(p.pair_index(t[0], t[1])) -= K(1);
    row(p.pair_index(t[1], t[2])) -=
        twist.sigma(twist.lam.apply(t[0]), twist.lam.apply(t[1]));
    rows.push_back(std::move(row));
  }
  MatrixX<K> a(static_cast<Eigen::Index>(rows.size()), m);
  for (std::size_t i = 0; i < rows.size(); ++i)
    a.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  const MatrixX<K> kernel = kernel_basis<K>(a);
  std::vector<AdditiveElement<K>> basis;
  basis.reserve(static_cast<std::size_t>(kernel.cols()));
  for (Eigen::Index j = 0; j < kernel.cols(); ++j)
    basis.push_back(AdditiveElement<K>(
        IncidenceElement<K>::from_vector(twist.poset_ptr(), kernel.col(j)),
        twist));
  return basis;
}

/**
 * Basis of the space of (sigma, lambda)-potential elements, extracted
 * from the point-function generators eps = unit at x, lambda(x) <= x.
 */
template <typename K>
std::vector<AdditiveElement<K>> potential_space(const Twist<K>& twist) {
  const Poset& p = twist.poset();
  RowSpace<K> span(p.pair_count());
  std::vector<AdditiveElement<K>> basis;
  for (int x = 0; x < p.size(); ++x) {
    if (!p.leq(twist.lam.apply(x), x)) continue;
    std::vector<K> eps(static_cast<std::size_t>(p.size()), K(0));
    eps[static_cast<std::size_t>(x)] = K(1);
    auto tau = potential_element(twist, eps);
    if (span.insert(tau.tau().to_vector())) basis.push_back(std::move(tau));
  }
  return basis;
}

}  // namespace skewder

#endif  // SKEWDER_DERIVATIONS_HPP
