#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "multirec/errors.hpp"

namespace multirec {

// Reduced fraction with overflow-checked 64-bit parts.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : n_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  static Rational parse(const std::string& text);

  std::int64_t num() const { return n_; }
  std::int64_t den() const { return d_; }
  bool isZero() const { return n_ == 0; }
  int sign() const { return (n_ > 0) - (n_ < 0); }
  double toDouble() const { return static_cast<double>(n_) / static_cast<double>(d_); }
  std::int64_t floor() const;
  std::string toString() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-n_, d_); }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational fromWide(__int128 n, __int128 d);
  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
};

// Element of Q(sqrt p_1, ..., sqrt p_m) for distinct primes p_j. Coefficient
// at bitmask S multiplies sqrt(prod_{j in S} p_j); these products are
// squarefree and distinct, so the representation is unique.
class QuadExt {
 public:
  QuadExt() : coeffs_{Rational(0)} {}
  QuadExt(Rational r) : coeffs_{r} {}    // NOLINT(google-explicit-constructor)
  QuadExt(std::int64_t n) : coeffs_{Rational(n)} {}  // NOLINT(google-explicit-constructor)

  static QuadExt sqrt(std::int64_t n);
  static QuadExt term(const Rational& c, std::int64_t radicand);

  const std::vector<std::int64_t>& primes() const { return primes_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Nonzero terms as (squarefree radicand, coefficient), radicand 1 first.
  std::vector<std::pair<std::int64_t, Rational>> terms() const;

  bool isZero() const;
  bool isRational() const;
  Rational rationalPart() const { return coeffs_[0]; }
  double approx() const;
  int sign() const;
  std::int64_t floor() const;
  std::string toString() const;

  QuadExt withPrimes(const std::vector<std::int64_t>& primes) const;

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& b) { return *this = *this + b; }
  QuadExt scaled(const Rational& r) const;

  friend bool operator==(const QuadExt& a, const QuadExt& b);

 private:
  std::vector<std::int64_t> primes_;
  std::vector<Rational> coeffs_;
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

Cmp qextCompare(const QuadExt& x, const QuadExt& y);
inline bool operator<(const QuadExt& a, const QuadExt& b) { return qextCompare(a, b) == Cmp::LT; }
inline bool operator<=(const QuadExt& a, const QuadExt& b) { return qextCompare(a, b) != Cmp::GT; }
inline bool operator>(const QuadExt& a, const QuadExt& b) { return qextCompare(a, b) == Cmp::GT; }
inline bool operator>=(const QuadExt& a, const QuadExt& b) { return qextCompare(a, b) != Cmp::LT; }

QuadExt mod1(const QuadExt& x);

std::vector<std::int64_t> unionPrimes(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);

}  // namespace multirec
