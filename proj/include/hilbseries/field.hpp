#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "hilbseries/error.hpp"

namespace hilbseries {

using BigInt = mpz_class;
using Rational = mpq_class;

template <class F>
concept ExactField = std::copy_constructible<F> && requires(const F& f, const typename F::Element& a,
                                                          const Rational& q) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.add(a, a) } -> std::same_as<typename F::Element>;
  { f.sub(a, a) } -> std::same_as<typename F::Element>;
  { f.mul(a, a) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.from_rational(q) } -> std::same_as<typename F::Element>;
  { f.to_rational(a) } -> std::same_as<Rational>;
  { f.name() } -> std::same_as<std::string>;
};

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The prime field F_p for p < 2^16; elements are residues 0..p-1.
class PrimeField {
 public:
  using Element = std::uint32_t;
  static constexpr std::uint32_t kMaxCharacteristic = 1u << 16;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= kMaxCharacteristic)
      throw InputError("GF(" + std::to_string(p) + "): characteristic must be a prime below 65536");
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element add(Element a, Element b) const noexcept {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept { return (a * b) % p_; }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    Element result = 1, base = a;
    for (std::uint32_t e = p_ - 2; e != 0; e >>= 1) {
      if (e & 1u) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
  bool is_zero(Element a) const noexcept { return a == 0; }

  Element from_integer(const BigInt& v) const {
    BigInt r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
  }
  Element from_rational(const Rational& q) const {
    Element den = from_integer(q.get_den());
    if (den == 0) throw InputError("coefficient " + q.get_str() + " is undefined in " + name());
    return mul(from_integer(q.get_num()), inv(den));
  }
  Rational to_rational(Element a) const { return Rational(static_cast<unsigned long>(a)); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// The rationals with arbitrary-precision numerators and denominators.
class RationalField {
 public:
  using Element = Rational;

  std::string name() const { return "Q"; }
  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return Element(1) / a;
  }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element from_rational(const Rational& q) const { return q; }
  Rational to_rational(const Element& a) const { return a; }

  bool operator==(const RationalField&) const = default;
};

static_assert(ExactField<PrimeField>);
static_assert(ExactField<RationalField>);

/// Runtime description of a field, as read from an input file.
struct FieldSpec {
  enum class Kind { prime, rationals };
  Kind kind = Kind::rationals;
  std::uint32_t characteristic = 0;

  static FieldSpec prime(std::uint32_t p) {
    PrimeField checked(p);
    return {Kind::prime, checked.characteristic()};
  }
  static FieldSpec rationals() { return {Kind::rationals, 0}; }

  bool is_finite() const noexcept { return kind == Kind::prime; }
  std::string name() const {
    return kind == Kind::prime ? "GF(" + std::to_string(characteristic) + ")" : "Q";
  }
  bool operator==(const FieldSpec&) const = default;
};

/// Calls `fn` with a concrete field object for `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::prime) return std::forward<Fn>(fn)(PrimeField(spec.characteristic));
  return std::forward<Fn>(fn)(RationalField{});
}

inline FieldSpec spec_of(const PrimeField& f) { return FieldSpec::prime(f.characteristic()); }
inline FieldSpec spec_of(const RationalField&) { return FieldSpec::rationals(); }

template <ExactField F>
std::string format_element(const F& field, const typename F::Element& a) {
  return field.to_rational(a).get_str();
}

}  // namespace hilbseries
