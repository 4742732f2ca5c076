#include "skewder/fields.hpp"

#include <cctype>
#include <ostream>

namespace skewder {

thread_local std::uint32_t Fp::modulus_ = 0;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp Fp::inverse() const {
  if (value_ == 0) throw DivisionByZeroError();
  // Fermat: v^(p-2) mod p.
  const std::uint64_t p = require_modulus();
  std::uint64_t base = value_, acc = 1;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
  }
  return raw(acc);
}

std::ostream& operator<<(std::ostream& os, Fp v) { return os << v.value(); }

FpContext::FpContext(std::uint32_t p) : saved_(Fp::modulus_) {
  if (!is_prime(p))
    throw MixedFieldsError("modulus " + std::to_string(p) + " is not prime");
  Fp::modulus_ = p;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (!is_prime(p))
    throw ParseError("'" + std::to_string(p) + "' is not a prime");
  FieldSpec fs;
  fs.kind = Kind::prime_field;
  fs.characteristic = p;
  return fs;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text.front() == 'F') {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("bad field '" + text + "': expected \"Q\" or \"F<p>\"");
      p = p * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (p > 0x7fffffffULL)
        throw ParseError("bad field '" + text + "': modulus too large");
    }
    return prime_field(static_cast<std::uint32_t>(p));
  }
  throw ParseError("bad field '" + text + "': expected \"Q\" or \"F<p>\"");
}

std::string FieldSpec::str() const {
  return kind == Kind::rationals ? "Q" : "F" + std::to_string(characteristic);
}

namespace {

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational ScalarTraits<Rational>::parse(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!is_integer_text(num))
    throw ParseError("bad rational '" + text + "'");
  Rational value{boost::multiprecision::mpz_int(num)};
  if (slash != std::string::npos) {
    const std::string den = text.substr(slash + 1);
    if (!is_integer_text(den))
      throw ParseError("bad rational '" + text + "'");
    const Rational d{boost::multiprecision::mpz_int(den)};
    if (d.is_zero()) throw DivisionByZeroError();
    value /= d;  // canonicalizes
  }
  return value;
}

Fp ScalarTraits<Fp>::parse(const std::string& text) {
  if (!is_integer_text(text))
    throw ParseError("bad residue '" + text + "'");
  // Reduce digit by digit so arbitrarily long decimals are accepted.
  const std::uint64_t p = Fp::modulus();
  if (p == 0) throw MixedFieldsError("no prime-field modulus is installed");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  std::uint64_t r = 0;
  for (; i < text.size(); ++i)
    r = (r * 10 + static_cast<std::uint64_t>(text[i] - '0')) % p;
  Fp v(static_cast<long long>(r));
  return text[0] == '-' ? -v : v;
}

}  // namespace skewder
