/**
 * Exact scalar types: arbitrary-precision rationals and prime fields F_p.
 *
 * Both scalar types work as Eigen matrix scalars. Rational arithmetic is
 * GMP-backed via Boost.Multiprecision and always kept canonical (reduced,
 * positive denominator). F_p elements store a residue in [0, p); the
 * modulus is a thread-local context installed with FpContext, so matrices
 * of Fp can be built and combined with the usual value semantics.
 */

#ifndef SKEWDER_FIELDS_HPP
#define SKEWDER_FIELDS_HPP

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "skewder/errors.hpp"

namespace skewder {

using Rational = boost::multiprecision::mpq_rational;

bool is_prime(std::uint32_t n);

/** An element of F_p for the thread-local modulus p. */
class Fp {
 public:
  Fp() = default;

  Fp(long long n) {  // NOLINT: implicit by design, Eigen needs Scalar(0)
    if (n == 0) {
      value_ = 0;
      return;
    }
    const auto p = static_cast<long long>(require_modulus());
    long long r = n % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint32_t>(r);
  }

  static std::uint32_t modulus() { return modulus_; }

  std::uint32_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  Fp inverse() const;

  friend Fp operator+(Fp a, Fp b) {
    const std::uint64_t p = require_modulus();
    return raw((a.value_ + static_cast<std::uint64_t>(b.value_)) % p);
  }
  friend Fp operator-(Fp a, Fp b) {
    const std::uint64_t p = require_modulus();
    return raw((a.value_ + p - b.value_) % p);
  }
  friend Fp operator*(Fp a, Fp b) {
    const std::uint64_t p = require_modulus();
    return raw(static_cast<std::uint64_t>(a.value_) * b.value_ % p);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const {
    return value_ == 0 ? Fp() : raw(require_modulus() - value_);
  }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.value_ == b.value_; }
  friend bool operator!=(Fp a, Fp b) { return a.value_ != b.value_; }

  friend std::ostream& operator<<(std::ostream& os, Fp v);

 private:
  friend class FpContext;

  static Fp raw(std::uint64_t v) {
    Fp x;
    x.value_ = static_cast<std::uint32_t>(v);
    return x;
  }
  static std::uint32_t require_modulus() {
    if (modulus_ == 0)
      throw MixedFieldsError("no prime-field modulus is installed");
    return modulus_;
  }

  std::uint32_t value_ = 0;
  static thread_local std::uint32_t modulus_;
};

/** Installs a prime modulus for Fp on this thread; restores on destruction. */
class FpContext {
 public:
  explicit FpContext(std::uint32_t p);
  ~FpContext() { Fp::modulus_ = saved_; }
  FpContext(const FpContext&) = delete;
  FpContext& operator=(const FpContext&) = delete;

 private:
  std::uint32_t saved_;
};

/** Identifies the coefficient field: the rationals or F_p. */
struct FieldSpec {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::rationals;
  std::uint32_t characteristic = 0;  // p when kind == prime_field

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime_field(std::uint32_t p);

  /** Parses the textual form "Q" or "F<p>" (e.g. "F5"). */
  static FieldSpec parse(const std::string& text);
  std::string str() const;

  bool operator==(const FieldSpec&) const = default;
};

template <typename K>
struct ScalarTag {
  using type = K;
};

/** Per-scalar glue: field tag, text round-trip, context validation. */
template <typename K>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static FieldSpec spec() { return FieldSpec::rationals(); }
  static void check_context(const FieldSpec& fs) {
    if (fs.kind != FieldSpec::Kind::rationals)
      throw MixedFieldsError("rational scalar used with field " + fs.str());
  }
  static Rational parse(const std::string& text);
  static std::string str(const Rational& v) { return v.str(); }
};

template <>
struct ScalarTraits<Fp> {
  static FieldSpec spec() { return FieldSpec::prime_field(Fp::modulus()); }
  static void check_context(const FieldSpec& fs) {
    if (fs.kind != FieldSpec::Kind::prime_field ||
        fs.characteristic != Fp::modulus())
      throw MixedFieldsError("prime-field scalar (modulus " +
                             std::to_string(Fp::modulus()) +
                             ") used with field " + fs.str());
  }
  static Fp parse(const std::string& text);
  static std::string str(const Fp& v) { return std::to_string(v.value()); }
};

inline bool is_zero(const Rational& v) { return v.is_zero(); }
inline bool is_zero(const Fp& v) { return v.is_zero(); }

template <typename K>
K field_inv(const K& v) {
  if (is_zero(v)) throw DivisionByZeroError();
  if constexpr (std::is_same_v<K, Fp>)
    return v.inverse();
  else
    return K(1) / v;
}

template <typename K>
K field_div(const K& a, const K& b) {
  if (is_zero(b)) throw DivisionByZeroError();
  return a * field_inv(b);
}

/**
 * Runs fn under the scalar type selected by fs, installing the prime-field
 * context when needed. fn receives a ScalarTag<K>.
 */
template <typename F>
decltype(auto) with_scalar(const FieldSpec& fs, F&& fn) {
  if (fs.kind == FieldSpec::Kind::rationals)
    return std::forward<F>(fn)(ScalarTag<Rational>{});
  FpContext ctx(fs.characteristic);
  return std::forward<F>(fn)(ScalarTag<Fp>{});
}

}  // namespace skewder

namespace Eigen {

template <>
struct NumTraits<skewder::Fp> {
  using Real = skewder::Fp;
  using NonInteger = skewder::Fp;
  using Nested = skewder::Fp;
  using Literal = skewder::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 2
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // SKEWDER_FIELDS_HPP
