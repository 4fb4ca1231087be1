#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace homkit {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// The base field: the rationals or a prime field F_p with p < 2^31.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q", "F<p>" and the alias "Fp" (= F101).
  static FieldSpec parse(std::string_view text);

  bool is_rationals() const { return kind == Kind::Rationals; }
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;
};

inline constexpr std::uint32_t kDefaultPrime = 101;

/// Element of F_p stored as its canonical representative in [0, p).
/// A default-constructed value is the zero of every prime field; the modulus
/// of a result is taken from whichever operand carries one.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t p) : p_(p) {
    if (p == 0) throw Error("Fp: zero modulus");
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  friend Fp operator+(Fp a, Fp b) {
    const std::uint32_t p = a.p_ > b.p_ ? a.p_ : b.p_;
    std::uint32_t s = a.v_ + b.v_;
    if (p != 0 && s >= p) s -= p;
    return raw(s, p);
  }
  friend Fp operator-(Fp a) { return raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  friend Fp operator-(Fp a, Fp b) { return a + (-b); }
  friend Fp operator*(Fp a, Fp b) {
    const std::uint32_t p = a.p_ > b.p_ ? a.p_ : b.p_;
    if (p == 0) return {};
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % p), p);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  Fp inverse() const;

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

inline Rational inverse(const Rational& x) {
  if (is_zero(x)) throw Error("division by zero");
  return Rational(1) / x;
}
inline Fp inverse(const Fp& x) { return x.inverse(); }

std::string to_string(const Rational& x);
std::string to_string(const Fp& x);
std::string to_string(const Integer& x);

/// Parses an integer or "a/b" rational literal.
Rational parse_rational(std::string_view text);

/// Maps a rational number into the field (fails when the denominator
/// vanishes mod p).
template <class K>
K from_rational(const FieldSpec& field, const Rational& q);

template <>
Rational from_rational<Rational>(const FieldSpec& field, const Rational& q);
template <>
Fp from_rational<Fp>(const FieldSpec& field, const Rational& q);

template <class K>
K from_int(const FieldSpec& field, std::int64_t v) {
  return from_rational<K>(field, Rational(static_cast<long>(v)));
}

template <class K>
inline constexpr bool kIsRational = std::is_same_v<K, Rational>;

/// Field kind check used at API boundaries.
template <class K>
void require_field_kind(const FieldSpec& field) {
  if (kIsRational<K> != field.is_rationals())
    throw Error("scalar type does not match field " + field.name());
}

template <class K>
concept FieldScalar = std::is_same_v<K, Rational> || std::is_same_v<K, Fp>;

}  // namespace homkit
