#include "homkit/scalar.hpp"

#include <cctype>

namespace homkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ull << 31)) throw Error("prime modulus must be < 2^31: " + std::to_string(p));
  if (!is_prime(p)) throw Error("modulus is not prime: " + std::to_string(p));
  return {Kind::PrimeField, static_cast<std::uint32_t>(p)};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text == "Fp") return prime(kDefaultPrime);
  if (text.size() >= 2 && text[0] == 'F') {
    std::uint64_t p = 0;
    for (char c : text.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("bad field: " + std::string(text));
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
      if (p >= (1ull << 31)) throw Error("prime modulus must be < 2^31");
    }
    return prime(p);
  }
  throw Error("bad field: " + std::string(text));
}

std::string FieldSpec::name() const {
  return is_rationals() ? std::string("Q") : "F" + std::to_string(p);
}

Fp Fp::inverse() const {
  if (v_ == 0) throw Error("division by zero in F_p");
  std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    const std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, p_);
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Fp& x) { return std::to_string(x.value()); }
std::string to_string(const Integer& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("empty number");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digits = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = true;
    } else {
      throw Error("bad number: " + s);
    }
  }
  if (!digits) throw Error("bad number: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational q(s, 10);
  if (q.get_den() == 0) throw Error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

template <>
Rational from_rational<Rational>(const FieldSpec& field, const Rational& q) {
  if (!field.is_rationals()) throw Error("rational scalar requested for " + field.name());
  return q;
}

template <>
Fp from_rational<Fp>(const FieldSpec& field, const Rational& q) {
  if (field.is_rationals()) throw Error("F_p scalar requested for Q");
  const Integer p(field.p);
  Integer num = q.get_num() % p;
  Integer den = q.get_den() % p;
  if (den == 0) throw Error("denominator vanishes mod " + std::to_string(field.p));
  const Fp n(num.get_si(), field.p);
  const Fp d(den.get_si(), field.p);
  return n / d;
}

}  // namespace homkit
