#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linmonad/field.hpp"
#include "linmonad/monomial.hpp"

namespace linmonad {

/// Multivariate polynomial with exact coefficients; terms kept sorted in
/// descending monomial order, no zero coefficients stored.
template <Field K>
class Polynomial {
 public:
  using Term = std::pair<Monomial, K>;

  Polynomial(int nvars, FieldInfo<K> field, MonomialOrder order = MonomialOrder::Grevlex)
      : nvars_(nvars), field_(field), order_(order) {}

  Polynomial(std::vector<Term> terms, int nvars, FieldInfo<K> field,
             MonomialOrder order = MonomialOrder::Grevlex)
      : nvars_(nvars), field_(field), order_(order), terms_(std::move(terms)) {
    normalize();
  }

  static Polynomial from_monomial(const Monomial& m, const K& c, FieldInfo<K> field,
                                  MonomialOrder order = MonomialOrder::Grevlex) {
    return Polynomial({{m, c}}, m.nvars(), field, order);
  }

  int nvars() const { return nvars_; }
  FieldInfo<K> field() const { return field_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const {
    assert(!terms_.empty());
    return terms_.front().first;
  }
  const K& leading_coeff() const {
    assert(!terms_.empty());
    return terms_.front().second;
  }

  int degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().first.degree();
    for (const Term& t : terms_)
      if (t.first.degree() != d) return false;
    return true;
  }

  Polynomial operator+(const Polynomial& o) const {
    check_compatible(o);
    std::vector<Term> out = terms_;
    out.insert(out.end(), o.terms_.begin(), o.terms_.end());
    return Polynomial(std::move(out), nvars_, field_, order_);
  }

  Polynomial operator-(const Polynomial& o) const {
    check_compatible(o);
    std::vector<Term> out = terms_;
    out.reserve(out.size() + o.terms_.size());
    for (const Term& t : o.terms_) out.emplace_back(t.first, -t.second);
    return Polynomial(std::move(out), nvars_, field_, order_);
  }

  Polynomial operator*(const K& c) const {
    std::vector<Term> out;
    if (!c.is_zero()) {
      out.reserve(terms_.size());
      for (const Term& t : terms_) out.emplace_back(t.first, t.second * c);
    }
    return Polynomial(std::move(out), nvars_, field_, order_);
  }

  Polynomial operator-() const { return *this * (-FieldTraits<K>::one(field_)); }

  /// Product with a single term c * m.
  Polynomial times_term(const Monomial& m, const K& c) const {
    std::vector<Term> out;
    if (!c.is_zero()) {
      out.reserve(terms_.size());
      for (const Term& t : terms_) out.emplace_back(t.first * m, t.second * c);
    }
    return Polynomial(std::move(out), nvars_, field_, order_);
  }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
      for (const Term& b : o.terms_)
        out.emplace_back(a.first * b.first, a.second * b.second);
    return Polynomial(std::move(out), nvars_, field_, order_);
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * (FieldTraits<K>::one(field_) / leading_coeff());
  }

  /// Re-sorts the terms under a different monomial order.
  Polynomial with_order(MonomialOrder order) const {
    if (order == order_) return *this;
    return Polynomial(terms_, nvars_, field_, order);
  }

  bool operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].first != o.terms_[i].first || !(terms_[i].second == o.terms_[i].second))
        return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str(const std::string& base = "x") const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      std::string c = FieldTraits<K>::to_string(terms_[i].second);
      bool neg = !c.empty() && c.front() == '-';
      if (i == 0) {
        if (neg) { s += "-"; c = c.substr(1); }
      } else {
        s += neg ? " - " : " + ";
        if (neg) c = c.substr(1);
      }
      const Monomial& m = terms_[i].first;
      if (m.is_one()) {
        s += c;
      } else {
        if (c != "1") s += c + "*";
        s += m.str(base);
      }
    }
    return s;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    assert(nvars_ == o.nvars_ && order_ == o.order_);
    (void)o;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
      return mono_cmp(a.first, b.first, order_) > 0;
    });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (Term& t : terms_) {
      if (!merged.empty() && merged.back().first == t.first)
        merged.back().second += t.second;
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.second.is_zero(); });
    terms_ = std::move(merged);
  }

  int nvars_;
  FieldInfo<K> field_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

}  // namespace linmonad
