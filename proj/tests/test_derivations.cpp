/**
 * Tests for skew derivations: the Leibniz test, inner derivations and
 * beta transport, additive and potential elements, the constructive
 * decomposition, and the brute-force space dimensions.
 */

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "skewder/cohomology.hpp"
#include "skewder/derivations.hpp"
#include "support/generators.hpp"

using namespace skewder;
namespace st = skewder::testing;

namespace {

std::shared_ptr<const Poset> two_crown() {
  return make_poset({"1", "2", "3", "4"},
                    {{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}});
}

std::shared_ptr<const Poset> v_poset() {
  return make_poset({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}});
}

std::shared_ptr<const Poset> chain(int n) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  for (int i = 1; i <= n; ++i) elements.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i)
    relations.emplace_back(std::to_string(i), std::to_string(i + 1));
  return make_poset(elements, relations);
}

template <typename K>
AutomorphismSpec<K> trivial_spec(const std::shared_ptr<const Poset>& p) {
  return AutomorphismSpec<K>::core(zeta_multiplicative<K>(p),
                                   PosetAutomorphism::identity(p->size()));
}

PosetAutomorphism crown_swap(const Poset& p) {
  return validate_automorphism(
      p, {{"1", "2"}, {"2", "1"}, {"3", "4"}, {"4", "3"}});
}

PosetAutomorphism v_swap(const Poset& p) {
  return validate_automorphism(p, {{"1", "1"}, {"2", "3"}, {"3", "2"}});
}

}  // namespace

TEST_CASE("the zero map is a derivation for every spec", "[derivations]") {
  std::mt19937_64 rng(3);
  FpContext ctx(7);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = st::random_poset(rng);
    const auto spec = st::random_spec<Fp>(rng, p);
    REQUIRE(is_skew_derivation(LinearEndomorphism<Fp>::zero(p), spec).ok);
  }
}

TEST_CASE("inner maps are derivations", "[derivations][property]") {
  std::mt19937_64 rng(7);
  FpContext ctx(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = st::random_poset(rng);
    const auto spec = st::random_spec<Fp>(rng, p);
    const auto a = st::random_element<Fp>(rng, p);
    REQUIRE(is_skew_derivation(inner_derivation(a, spec), spec).ok);
  }
}

TEST_CASE("the identity map is not a derivation", "[derivations]") {
  auto c2 = chain(2);
  const auto spec = trivial_spec<Rational>(c2);
  const LinearEndomorphism<Rational> id(
      c2, MatrixX<Rational>::Identity(c2->pair_count(), c2->pair_count()));
  const auto check = is_skew_derivation(id, spec);
  REQUIRE_FALSE(check.ok);
  // The returned pair really violates the Leibniz rule.
  const auto ea = matrix_unit<Rational>(c2, check.left_unit.first,
                                        check.left_unit.second);
  const auto eb = matrix_unit<Rational>(c2, check.right_unit.first,
                                        check.right_unit.second);
  REQUIRE_FALSE(ea * eb == ea * eb + spec.apply(ea) * eb);
}

TEST_CASE("central elements give the zero inner derivation", "[derivations]") {
  auto crown = two_crown();
  const auto spec = trivial_spec<Rational>(crown);
  const auto d = inner_derivation(delta_identity<Rational>(crown), spec);
  REQUIRE(d == LinearEndomorphism<Rational>::zero(crown));
}

TEST_CASE("inner generators span dimension 4 on the V poset", "[derivations]") {
  // dim I(X,K) - dim of the center = 5 - 1.
  auto v = v_poset();
  REQUIRE(inner_derivation_span(trivial_spec<Rational>(v)).rank() == 4);
}

TEST_CASE("beta transport matches the inner-derivation formula",
          "[derivations][property]") {
  std::mt19937_64 rng(13);
  FpContext ctx(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = st::random_poset(rng);
    const auto beta = st::random_invertible<Fp>(rng, p);
    const auto sigma = st::random_multiplicative<Fp>(rng, p);
    const auto lam = st::random_automorphism(rng, *p);
    const auto phi_spec = AutomorphismSpec<Fp>::make(beta, sigma, lam);
    const auto psi_spec = AutomorphismSpec<Fp>::core(sigma, lam);
    const auto a = st::random_element<Fp>(rng, p);

    // D^phi_a = beta . D^psi_{beta^{-1} a}
    const auto lhs = inner_derivation(a, phi_spec);
    const auto rhs = transport_by_beta(
        inner_derivation(invert(beta) * a, psi_spec), beta,
        BetaTransport::from_core);
    REQUIRE(lhs == rhs);

    // Transport sends phi-derivations to psi-derivations and back.
    const auto transported =
        transport_by_beta(lhs, beta, BetaTransport::to_core);
    REQUIRE(is_skew_derivation(transported, psi_spec).ok);
    REQUIRE(transport_by_beta(transported, beta, BetaTransport::from_core) ==
            lhs);
  }
}

TEST_CASE("beta transport preserves space dimensions", "[derivations][property]") {
  std::mt19937_64 rng(17);
  FpContext ctx(5);
  for (int trial = 0; trial < 6; ++trial) {
    const auto p = st::random_poset(rng, 4);
    const auto sigma = st::random_multiplicative<Fp>(rng, p);
    const auto lam = st::random_automorphism(rng, *p);
    const auto beta = st::random_invertible<Fp>(rng, p);
    const auto phi_spec = AutomorphismSpec<Fp>::make(beta, sigma, lam);
    const auto psi_spec = AutomorphismSpec<Fp>::core(sigma, lam);
    REQUIRE(derivation_space(phi_spec).size() ==
            derivation_space(psi_spec).size());
    REQUIRE(inner_derivation_span(phi_spec).rank() ==
            inner_derivation_span(psi_spec).rank());
  }
}

TEST_CASE("additive element validation", "[derivations]") {
  auto crown = two_crown();
  const auto z = zeta_multiplicative<Rational>(crown);
  const Twist<Rational> twist{z, crown_swap(*crown)};
  REQUIRE_NOTHROW(
      validate_additive(IncidenceElement<Rational>(crown), twist));

  // Arbitrary values on the four strict pairs are additive here.
  IncidenceElement<Rational> tau(crown);
  int value = 1;
  for (const auto& [x, y] : crown->comparable_pairs())
    if (x != y) tau.set(x, y, Rational(value++));
  REQUIRE_NOTHROW(validate_additive(tau, twist));
  REQUIRE(additive_space(twist).size() == 4);

  // Vanishing violations are caught.
  IncidenceElement<Rational> bad(crown);
  bad.set(0, 0, Rational(1));  // lam(1) = 2 is not below 1
  REQUIRE_THROWS_AS(validate_additive(bad, twist), VanishingViolationError);

  // Cocycle violations are caught with a witness triple.
  auto c3 = chain(3);
  const Twist<Rational> chain_twist{zeta_multiplicative<Rational>(c3),
                                    PosetAutomorphism::identity(3)};
  IncidenceElement<Rational> broken(c3);
  broken.set(0, 1, Rational(1));
  broken.set(1, 2, Rational(1));
  broken.set(0, 2, Rational(5));
  try {
    validate_additive(broken, chain_twist);
    FAIL("expected CocycleViolationError");
  } catch (const CocycleViolationError& e) {
    REQUIRE(e.first == "1");
    REQUIRE(e.second == "2");
    REQUIRE(e.third == "3");
  }
}

TEST_CASE("additive derivations are derivations killing idempotents",
          "[derivations][property]") {
  std::mt19937_64 rng(19);
  FpContext ctx(5);
  auto crown = two_crown();
  const Twist<Fp> twist{st::random_multiplicative<Fp>(rng, crown),
                        crown_swap(*crown)};
  const auto spec = AutomorphismSpec<Fp>::core(twist.sigma, twist.lam);
  for (int trial = 0; trial < 10; ++trial) {
    const auto tau = st::random_additive<Fp>(rng, twist);
    const auto d = additive_derivation(tau);
    REQUIRE(is_skew_derivation(d, spec).ok);
    for (int x = 0; x < crown->size(); ++x)
      REQUIRE(d.apply(matrix_unit<Fp>(crown, x, x)).is_zero_element());
  }
  // tau = 0 gives the zero map.
  const auto zero_tau = validate_additive(IncidenceElement<Fp>(crown), twist);
  REQUIRE(additive_derivation(zero_tau) == LinearEndomorphism<Fp>::zero(crown));
}

TEST_CASE("the additive derivation determines tau", "[derivations][property]") {
  std::mt19937_64 rng(23);
  FpContext ctx(5);
  for (int trial = 0; trial < 8; ++trial) {
    const auto p = st::random_poset(rng);
    const Twist<Fp> twist{st::random_multiplicative<Fp>(rng, p),
                          st::random_automorphism(rng, *p)};
    // Injectivity: the map tau -> L_tau has full rank on the basis.
    const auto basis = additive_space(twist);
    RowSpace<Fp> images(static_cast<Eigen::Index>(p->pair_count()) *
                        p->pair_count());
    for (const auto& tau : basis)
      REQUIRE(images.insert(additive_derivation(tau).vec()));

    // Round trip: tau can be read back off the unit images.
    const auto tau = st::random_additive<Fp>(rng, twist);
    const auto d = additive_derivation(tau);
    IncidenceElement<Fp> recovered(p);
    for (const auto& [x, y] : p->comparable_pairs()) {
      const int lx = twist.lam.apply(x);
      if (!p->leq(lx, y)) continue;
      const Fp v = d.unit_image(p->pair_index(x, y))(lx, y);
      if (!is_zero(v)) recovered.set(x, y, v);
    }
    REQUIRE(recovered == tau.tau());
  }
}

TEST_CASE("potential elements from point functions", "[derivations]") {
  auto v = v_poset();
  const auto z = zeta_multiplicative<Rational>(v);
  const Twist<Rational> twist{z, v_swap(*v)};

  // eps must vanish at 2 and 3; the free value at 1 spreads to both pairs.
  std::vector<Rational> eps{Rational(7), Rational(0), Rational(0)};
  const auto tau = potential_element(twist, eps);
  REQUIRE(tau.tau()(0, 1) == Rational(7));
  REQUIRE(tau.tau()(0, 2) == Rational(7));
  REQUIRE(tau.tau()(0, 0) == Rational(0));

  std::vector<Rational> bad{Rational(0), Rational(1), Rational(0)};
  REQUIRE_THROWS_AS(potential_element(twist, bad), Error);

  // The identity twist turns potentials into plain differences.
  auto c3 = chain(3);
  const Twist<Rational> chain_twist{zeta_multiplicative<Rational>(c3),
                                    PosetAutomorphism::identity(3)};
  std::vector<Rational> g{Rational(1), Rational(4), Rational(9)};
  const auto diff = potential_element(chain_twist, g);
  for (const auto& [x, y] : c3->comparable_pairs())
    REQUIRE(diff.tau()(x, y) == g[static_cast<std::size_t>(x)] -
                                    g[static_cast<std::size_t>(y)]);

  // Zero point function, zero element.
  std::vector<Rational> zero(3, Rational(0));
  REQUIRE(potential_element(chain_twist, zero).tau().is_zero_element());
}

TEST_CASE("potential elements are additive", "[derivations][property]") {
  std::mt19937_64 rng(29);
  FpContext ctx(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = st::random_poset(rng);
    const Twist<Fp> twist{st::random_multiplicative<Fp>(rng, p),
                          st::random_automorphism(rng, *p)};
    std::vector<Fp> eps(static_cast<std::size_t>(p->size()), Fp(0));
    for (int x = 0; x < p->size(); ++x)
      if (p->leq(twist.lam.apply(x), x))
        eps[static_cast<std::size_t>(x)] = st::random_scalar<Fp>(rng);
    const auto tau = potential_element(twist, eps);
    REQUIRE_NOTHROW(validate_additive(tau.tau(), twist));
  }
}

TEST_CASE("potential witnesses", "[derivations]") {
  auto v = v_poset();
  const auto z = zeta_multiplicative<Rational>(v);
  const Twist<Rational> twist{z, v_swap(*v)};

  const auto zero_tau = validate_additive(IncidenceElement<Rational>(v), twist);
  const auto witness = find_potential_witness(zero_tau);
  REQUIRE(witness.has_value());
  for (const auto& e : witness->epsilon) REQUIRE(e == Rational(0));

  // tau(1,2) != tau(1,3) cannot be potential for the swap.
  IncidenceElement<Rational> tau(v);
  tau.set(0, 1, Rational(1));
  tau.set(0, 2, Rational(2));
  REQUIRE_FALSE(find_potential_witness(validate_additive(tau, twist)));

  // With lambda = id on a chain every additive element is potential.
  auto c3 = chain(3);
  std::mt19937_64 rng(31);
  FpContext ctx(5);
  const Twist<Fp> chain_twist{st::random_multiplicative<Fp>(rng, c3),
                              PosetAutomorphism::identity(3)};
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = st::random_additive<Fp>(rng, chain_twist);
    const auto w = find_potential_witness(t);
    REQUIRE(w.has_value());
    REQUIRE(potential_element(chain_twist, w->epsilon).tau() == t.tau());
  }
}

TEST_CASE("potential equals inner among additive", "[derivations][property]") {
  std::mt19937_64 rng(37);
  FpContext ctx(5);
  for (int trial = 0; trial < 8; ++trial) {
    const auto p = st::random_poset(rng, 4);
    const Twist<Fp> twist{st::random_multiplicative<Fp>(rng, p),
                          st::random_automorphism(rng, *p)};
    const auto spec = AutomorphismSpec<Fp>::core(twist.sigma, twist.lam);
    const auto inner = inner_derivation_span(spec);
    for (const auto& tau : additive_space(twist)) {
      const bool potential = find_potential_witness(tau).has_value();
      const bool is_inner = inner.contains(additive_derivation(tau).vec());
      REQUIRE(potential == is_inner);
    }
    // And each potential generator is genuinely inner.
    for (const auto& tau : potential_space(twist))
      REQUIRE(inner.contains(additive_derivation(tau).vec()));
  }
}

TEST_CASE("decomposition of the zero map and of additive maps",
          "[derivations]") {
  auto crown = two_crown();
  const auto z = zeta_multiplicative<Rational>(crown);
  const Twist<Rational> twist{z, crown_swap(*crown)};
  const auto dec =
      decompose_derivation(LinearEndomorphism<Rational>::zero(crown), twist);
  REQUIRE(dec.inner_part.is_zero_element());
  REQUIRE(dec.additive_part.tau().is_zero_element());

  std::mt19937_64 rng(41);
  FpContext ctx(5);
  const Twist<Fp> ftwist{st::random_multiplicative<Fp>(rng, crown),
                         crown_swap(*crown)};
  for (int trial = 0; trial < 8; ++trial) {
    const auto tau = st::random_additive<Fp>(rng, ftwist);
    const auto d = additive_derivation(tau);
    const auto parts = decompose_derivation(d, ftwist);
    // Additive maps kill the idempotents, so f = 0 and tau comes back.
    REQUIRE(parts.inner_part.is_zero_element());
    REQUIRE(parts.additive_part == tau);
  }
}

TEST_CASE("decomposition is exact and sends inner to potential",
          "[derivations][property]") {
  std::mt19937_64 rng(43);
  FpContext ctx(5);
  for (int trial = 0; trial < 8; ++trial) {
    const auto p = st::random_poset(rng, 4);
    const Twist<Fp> twist{st::random_multiplicative<Fp>(rng, p),
                          st::random_automorphism(rng, *p)};
    const auto spec = AutomorphismSpec<Fp>::core(twist.sigma, twist.lam);

    const auto a = st::random_element<Fp>(rng, p);
    const auto inner = inner_derivation(a, spec);
    const auto parts = decompose_derivation(inner, twist);
    REQUIRE(inner == inner_derivation(parts.inner_part, spec) +
                         additive_derivation(parts.additive_part));
    REQUIRE(find_potential_witness(parts.additive_part).has_value());

    for (const auto& d : derivation_space(spec)) {
      const auto dp = decompose_derivation(d, twist);
      REQUIRE(d == inner_derivation(dp.inner_part, spec) +
                       additive_derivation(dp.additive_part));
    }
  }
}

TEST_CASE("decomposition rejects non-derivations", "[derivations]") {
  auto c2 = chain(2);
  const Twist<Rational> twist{zeta_multiplicative<Rational>(c2),
                              PosetAutomorphism::identity(2)};
  const LinearEndomorphism<Rational> id(
      c2, MatrixX<Rational>::Identity(c2->pair_count(), c2->pair_count()));
  REQUIRE_THROWS_AS(decompose_derivation(id, twist), NotADerivationError);
}

TEST_CASE("derivation space dimensions on the paper posets", "[derivations]") {
  // 3-chain, identity twist: 5 derivations, all inner.
  auto c3 = chain(3);
  const auto chain_spec = trivial_spec<Rational>(c3);
  REQUIRE(derivation_space(chain_spec).size() == 5);
  REQUIRE(inner_derivation_span(chain_spec).rank() == 5);

  // 2-crown with the swap: quotient has dimension 4.
  auto crown = two_crown();
  const auto crown_spec = AutomorphismSpec<Rational>::core(
      zeta_multiplicative<Rational>(crown), crown_swap(*crown));
  const auto crown_dim =
      static_cast<Eigen::Index>(derivation_space(crown_spec).size());
  REQUIRE(crown_dim - inner_derivation_span(crown_spec).rank() == 4);

  // V poset with the swap: quotient has dimension 1.
  auto v = v_poset();
  const auto v_spec = AutomorphismSpec<Rational>::core(
      zeta_multiplicative<Rational>(v), v_swap(*v));
  const auto v_dim = static_cast<Eigen::Index>(derivation_space(v_spec).size());
  REQUIRE(v_dim - inner_derivation_span(v_spec).rank() == 1);
}

TEST_CASE("oracle bases really are derivations", "[derivations][property]") {
  std::mt19937_64 rng(47);
  FpContext ctx(5);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = st::random_poset(rng, 4);
    const auto spec = st::random_spec<Fp>(rng, p);
    for (const auto& d : derivation_space(spec))
      REQUIRE(is_skew_derivation(d, spec).ok);
  }
}
