#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "linmonad/field.hpp"

namespace linmonad {

inline bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Prime-field element: residue in [0,p) with p prime, p > 2. Elements carry
/// their modulus; a default-constructed zero (p = 0) unifies with any modulus.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(long long value, std::uint32_t p) : p_(p) {
    check_modulus(p);
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  Fp operator+(const Fp& o) const {
    std::uint32_t p = join(o);
    if (p == 0) return Fp();
    std::uint64_t s = static_cast<std::uint64_t>(v_) + o.v_;
    return make(s >= p ? s - p : s, p);
  }
  Fp operator-(const Fp& o) const {
    std::uint32_t p = join(o);
    if (p == 0) return Fp();
    std::uint64_t s = static_cast<std::uint64_t>(v_) + p - o.v_;
    return make(s >= p ? s - p : s, p);
  }
  Fp operator*(const Fp& o) const {
    std::uint32_t p = join(o);
    if (p == 0) return Fp();
    return make(static_cast<std::uint64_t>(v_) * o.v_ % p, p);
  }
  Fp operator/(const Fp& o) const {
    if (o.is_zero()) throw std::domain_error("Fp: division by zero");
    return *this * o.inverse();
  }
  Fp operator-() const {
    if (p_ == 0) return Fp();
    return make(v_ == 0 ? 0 : p_ - v_, p_);
  }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inverse() const {
    if (is_zero()) throw std::domain_error("Fp: inverse of zero");
    // extended Euclid on (v, p)
    long long t = 0, new_t = 1;
    long long r = p_, new_r = v_;
    while (new_r != 0) {
      long long q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += p_;
    return make(static_cast<std::uint64_t>(t), p_);
  }

  bool operator==(const Fp& o) const {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_) return false;
    return v_ == o.v_;
  }
  bool operator!=(const Fp& o) const { return !(*this == o); }
  bool is_zero() const { return v_ == 0; }

  std::string str() const { return std::to_string(v_); }

  static void check_modulus(std::uint32_t p) {
    if (p <= 2 || !is_prime(p))
      throw std::invalid_argument("Fp: modulus must be a prime > 2");
  }

 private:
  static Fp make(std::uint64_t v, std::uint32_t p) {
    Fp x;
    x.v_ = static_cast<std::uint32_t>(v);
    x.p_ = p;
    return x;
  }
  // Moduli must agree; p = 0 marks an unattached zero and adopts the other side.
  std::uint32_t join(const Fp& o) const {
    if (p_ == 0) return o.p_;
    assert(o.p_ == 0 || o.p_ == p_);
    return p_;
  }

  std::uint32_t v_;
  std::uint32_t p_;
};

struct FpInfo {
  std::uint32_t p = 101;
  bool operator==(const FpInfo& o) const { return p == o.p; }
};

template <>
struct FieldTraits<Fp> {
  using Info = FpInfo;
  static constexpr bool fraction_free = false;

  static Info info(const Fp& x) { return {x.modulus()}; }
  static Fp zero(Info fi) { return Fp(0, fi.p); }
  static Fp one(Info fi) { return Fp(1, fi.p); }
  static Fp from_int(Info fi, long long n) { return Fp(n, fi.p); }
  static Fp parse(Info fi, std::string_view s) {
    return Fp(std::stoll(std::string(s)), fi.p);
  }
  static std::string to_string(const Fp& x) { return x.str(); }
  static Fp random(Info fi, std::mt19937_64& rng) {
    return Fp(static_cast<long long>(rng() % fi.p), fi.p);
  }
  static std::string name(Info fi) { return "F_" + std::to_string(fi.p); }
};

}  // namespace linmonad
