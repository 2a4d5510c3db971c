#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "hopfq/errors.hpp"

namespace hopfq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Ground field descriptor: modulus 0 means the rationals, otherwise GF(p).
struct FieldDesc {
  std::uint64_t modulus = 0;

  bool is_rational() const { return modulus == 0; }

  static FieldDesc rationals() { return FieldDesc{0}; }

  static FieldDesc prime(std::uint64_t p) {
    if (p < 2) throw Error("modulus must be a prime >= 2");
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw Error("modulus " + std::to_string(p) + " is not prime");
    }
    return FieldDesc{p};
  }

  std::string str() const {
    return is_rational() ? "rational" : "prime " + std::to_string(modulus);
  }

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

/// Exact field element: a reduced rational or a canonical residue mod p.
class Scalar {
 public:
  Scalar() : field_{}, q_(0), r_(0) {}

  static Scalar zero(const FieldDesc& f) { return Scalar(f, Rational(0), 0); }

  static Scalar one(const FieldDesc& f) {
    return f.is_rational() ? Scalar(f, Rational(1), 0) : Scalar(f, Rational(0), 1 % f.modulus);
  }

  static Scalar rational(Rational q) {
    return Scalar(FieldDesc::rationals(), std::move(q), 0);
  }

  static Scalar rational(long long num, long long den) {
    return rational(Rational(num, den));
  }

  static Scalar residue(std::uint64_t r, const FieldDesc& f) {
    if (f.is_rational()) throw Error("residue scalar needs a prime field");
    return Scalar(f, Rational(0), r % f.modulus);
  }

  static Scalar from_integer(long long n, const FieldDesc& f) {
    if (f.is_rational()) return Scalar(f, Rational(n), 0);
    long long m = n % static_cast<long long>(f.modulus);
    if (m < 0) m += static_cast<long long>(f.modulus);
    return Scalar(f, Rational(0), static_cast<std::uint64_t>(m));
  }

  const FieldDesc& field() const { return field_; }

  bool is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
  bool is_one() const {
    return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.modulus;
  }

  const Rational& rational_value() const { return q_; }
  std::uint64_t residue_value() const { return r_; }

  Scalar operator+(const Scalar& o) const {
    check_field(o);
    if (field_.is_rational()) return Scalar(field_, q_ + o.q_, 0);
    return Scalar(field_, Rational(0), add_mod(r_, o.r_, field_.modulus));
  }

  Scalar operator-() const {
    if (field_.is_rational()) return Scalar(field_, -q_, 0);
    return Scalar(field_, Rational(0), r_ == 0 ? 0 : field_.modulus - r_);
  }

  Scalar operator-(const Scalar& o) const { return *this + (-o); }

  Scalar operator*(const Scalar& o) const {
    check_field(o);
    if (field_.is_rational()) return Scalar(field_, q_ * o.q_, 0);
    return Scalar(field_, Rational(0), mul_mod(r_, o.r_, field_.modulus));
  }

  Scalar inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    if (field_.is_rational()) return Scalar(field_, 1 / q_, 0);
    return Scalar(field_, Rational(0), inv_mod(r_, field_.modulus));
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && (a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_);
  }

  /// Canonical text form: "n", "n/d" (reduced, d > 0) or "r mod p".
  std::string str() const {
    if (!field_.is_rational()) {
      return std::to_string(r_) + " mod " + std::to_string(field_.modulus);
    }
    std::string s = numerator(q_).str();
    if (denominator(q_) != 1) s += "/" + denominator(q_).str();
    return s;
  }

  /// Parses the canonical text form; rejects anything non-canonical.
  static Scalar parse(const std::string& text, const FieldDesc& f) {
    if (!f.is_rational()) {
      auto pos = text.find(" mod ");
      if (pos == std::string::npos) throw NonCanonicalScalarError(text);
      std::uint64_t r = parse_u64(text.substr(0, pos));
      std::uint64_t p = parse_u64(text.substr(pos + 5));
      if (p != f.modulus || r >= p) throw NonCanonicalScalarError(text);
      return residue(r, f);
    }
    auto slash = text.find('/');
    const std::string num_s = text.substr(0, slash);
    const std::string den_s = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!canonical_int(num_s, /*allow_neg=*/true) || !canonical_int(den_s, false)) {
      throw NonCanonicalScalarError(text);
    }
    BigInt num, den = 1;
    try {
      num = BigInt(num_s);
      den = BigInt(den_s);
    } catch (const std::exception&) {
      throw NonCanonicalScalarError(text);
    }
    if (den <= 0) throw NonCanonicalScalarError(text);
    Rational q(num, den);
    // canonical means already reduced, and no "n/1"
    if (numerator(q) != num || denominator(q) != den) throw NonCanonicalScalarError(text);
    if (den == 1 && slash != std::string::npos) throw NonCanonicalScalarError(text);
    return rational(std::move(q));
  }

 private:
  Scalar(FieldDesc f, Rational q, std::uint64_t r)
      : field_(f), q_(std::move(q)), r_(r) {}

  void check_field(const Scalar& o) const {
    if (!(field_ == o.field_)) throw MixedFieldsError(field_.str(), o.field_.str());
  }

  static std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % p);
  }

  static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }

  static std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (a, p), p prime
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t; new_t = tmp;
      tmp = r - q * new_r;
      r = new_r; new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
  }

  /// Canonical decimal integer: digits only, no leading zeros, no "-0".
  static bool canonical_int(const std::string& s, bool allow_neg) {
    std::size_t i = 0;
    if (allow_neg && !s.empty() && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    if (s[i] == '0' && (s.size() > i + 1 || i == 1)) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  }

  static std::uint64_t parse_u64(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw NonCanonicalScalarError(s);
    }
    if (s.size() > 1 && s[0] == '0') throw NonCanonicalScalarError(s);
    return std::stoull(s);
  }

  FieldDesc field_;
  Rational q_;
  std::uint64_t r_;
};

}  // namespace hopfq
