#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace linmonad {

inline constexpr int kMaxVars = 8;

inline long long binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

/// dim H^0(P^n, O(k)): monomials of degree k in n+1 variables.
inline long long graded_dim(int n, int k) {
  assert(n >= 1);
  return k >= 0 ? binomial(n + k, n) : 0;
}

/// dim H^n(P^n, O(m)): monomials with all exponents <= -1 of degree m.
inline long long serre_dim(int n, int m) {
  assert(n >= 1);
  return m <= -n - 1 ? binomial(-m - 1, n) : 0;
}

/// Exponent vector in up to kMaxVars variables. Section-basis monomials have
/// all exponents >= 0; Serre-basis monomials all <= -1.
class Monomial {
 public:
  Monomial() : nvars_(0) { e_.fill(0); }
  explicit Monomial(int nvars) : nvars_(nvars) {
    assert(nvars >= 1 && nvars <= kMaxVars);
    e_.fill(0);
  }
  Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}
  explicit Monomial(const std::vector<int>& exps) : nvars_(static_cast<int>(exps.size())) {
    assert(nvars_ >= 1 && nvars_ <= kMaxVars);
    e_.fill(0);
    for (int i = 0; i < nvars_; ++i) e_[i] = static_cast<std::int16_t>(exps[i]);
  }

  static Monomial variable(int i, int nvars) {
    Monomial m(nvars);
    m.e_[i] = 1;
    return m;
  }

  int nvars() const { return nvars_; }
  int exponent(int i) const { return e_[i]; }
  void set_exponent(int i, int v) { e_[i] = static_cast<std::int16_t>(v); }

  int degree() const {
    int d = 0;
    for (int i = 0; i < nvars_; ++i) d += e_[i];
    return d;
  }

  bool is_one() const {
    for (int i = 0; i < nvars_; ++i)
      if (e_[i] != 0) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < nvars_; ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(nvars_);
    for (int i = 0; i < nvars_; ++i) r.e_[i] = e_[i] + m.e_[i];
    return r;
  }

  /// Exact quotient; requires m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    Monomial r(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      assert(e_[i] >= m.e_[i]);
      r.e_[i] = e_[i] - m.e_[i];
    }
    return r;
  }

  /// Saturating quotient (*this) : m, used by colon-ideal constructions.
  Monomial colon(const Monomial& m) const {
    Monomial r(nvars_);
    for (int i = 0; i < nvars_; ++i)
      r.e_[i] = static_cast<std::int16_t>(std::max(0, e_[i] - m.e_[i]));
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (int i = 0; i < a.nvars_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  bool coprime_with(const Monomial& m) const {
    for (int i = 0; i < nvars_; ++i)
      if (e_[i] > 0 && m.e_[i] > 0) return false;
    return true;
  }

  /// Bitmask of variables with nonzero exponent.
  unsigned support() const {
    unsigned s = 0;
    for (int i = 0; i < nvars_; ++i)
      if (e_[i] != 0) s |= 1u << i;
    return s;
  }

  bool operator==(const Monomial& m) const {
    return nvars_ == m.nvars_ && e_ == m.e_;
  }
  bool operator!=(const Monomial& m) const { return !(*this == m); }

  /// Packs nonnegative exponents < 256 into a hashable key.
  std::uint64_t pack() const {
    std::uint64_t k = 0;
    for (int i = 0; i < nvars_; ++i) {
      assert(e_[i] >= 0 && e_[i] < 256);
      k |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(e_[i])) << (8 * i);
    }
    return k;
  }

  std::string str(const std::string& base = "x") const {
    if (is_one()) return "1";
    std::string s;
    for (int i = 0; i < nvars_; ++i) {
      if (e_[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += base + std::to_string(i);
      if (e_[i] != 1) s += "^" + std::to_string(e_[i]);
    }
    return s;
  }

 private:
  std::array<std::int16_t, kMaxVars> e_;
  int nvars_;
};

enum class MonomialOrder { Grevlex, Lex };

/// Three-way comparison under the given order; positive when a > b.
inline int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  assert(a.nvars() == b.nvars());
  if (order == MonomialOrder::Grevlex) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = a.nvars() - 1; i >= 0; --i) {
      int d = a.exponent(i) - b.exponent(i);
      if (d != 0) return d > 0 ? -1 : 1;
    }
    return 0;
  }
  for (int i = 0; i < a.nvars(); ++i) {
    int d = a.exponent(i) - b.exponent(i);
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

inline bool mono_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
  return mono_cmp(a, b, order) < 0;
}

/// Monomial basis of the degree-d graded piece in nvars variables, listed in
/// descending grevlex order (so x0^d comes first); the fixed basis order for
/// every matrix of graded maps.
inline std::vector<Monomial> section_basis(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial m(nvars);
  // enumerate exponent vectors summing to d
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == nvars - 1) {
      e[pos] = rest;
      out.push_back(Monomial(e));
      return;
    }
    for (int k = rest; k >= 0; --k) {
      e[pos] = k;
      self(self, pos + 1, rest - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return mono_cmp(a, b, MonomialOrder::Grevlex) > 0;
  });
  return out;
}

/// Basis of H^n(P^n, O(m)) for nvars = n+1: monomials with every exponent
/// <= -1 and total degree m. Ordered by their complements (-a-1), matching
/// section_basis of degree -m-nvars, so the duality pairing is the identity.
inline std::vector<Monomial> serre_basis(int nvars, int m) {
  std::vector<Monomial> out;
  int dual_degree = -m - nvars;
  if (dual_degree < 0) return out;
  for (const Monomial& b : section_basis(nvars, dual_degree)) {
    Monomial a(nvars);
    for (int i = 0; i < nvars; ++i) a.set_exponent(i, -b.exponent(i) - 1);
    out.push_back(a);
  }
  return out;
}

/// Basis with O(1) membership lookup by packed exponents (nonnegative only).
struct BasisIndex {
  std::vector<Monomial> monomials;
  std::unordered_map<std::uint64_t, std::size_t> index;

  explicit BasisIndex(std::vector<Monomial> basis) : monomials(std::move(basis)) {
    for (std::size_t i = 0; i < monomials.size(); ++i)
      index.emplace(monomials[i].pack(), i);
  }

  std::size_t size() const { return monomials.size(); }

  // returns size() when absent
  std::size_t find(const Monomial& m) const {
    auto it = index.find(m.pack());
    return it == index.end() ? monomials.size() : it->second;
  }
};

}  // namespace linmonad
