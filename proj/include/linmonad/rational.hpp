#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "linmonad/field.hpp"

namespace linmonad {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Thin value wrapper so generic code sees plain (non
/// expression-template) semantics.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long long num) : q_(static_cast<long>(num)) {}
  Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    q_.canonicalize();
  }
  explicit Rational(std::string_view text) {
    q_ = mpq_class(std::string(text), 10);
    if (q_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(q_ / o.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational numerator() const { return Rational(mpq_class(q_.get_num())); }
  Rational denominator() const { return Rational(mpq_class(q_.get_den())); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  long long to_int() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer");
    if (!q_.get_num().fits_slong_p()) throw std::overflow_error("Rational: integer overflow");
    return q_.get_num().get_si();
  }

  std::string str() const { return q_.get_str(); }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

/// Field descriptor for Q (no runtime parameters).
struct QInfo {
  bool operator==(const QInfo&) const { return true; }
};

template <>
struct FieldTraits<Rational> {
  using Info = QInfo;
  static constexpr bool fraction_free = true;

  static Info info(const Rational&) { return {}; }
  static Rational zero(Info) { return Rational(0); }
  static Rational one(Info) { return Rational(1); }
  static Rational from_int(Info, long long n) { return Rational(n); }
  static Rational parse(Info, std::string_view s) { return Rational(s); }
  static std::string to_string(const Rational& x) { return x.str(); }
  // Small-integer draws keep random rational monads readable and exact.
  static Rational random(Info, std::mt19937_64& rng) {
    return Rational(static_cast<long long>(rng() % 9) - 4);
  }
  static std::string name(Info) { return "Q"; }
};

}  // namespace linmonad
