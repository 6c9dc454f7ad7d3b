#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "waring/error.hpp"

namespace waring {

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

namespace detail {
template <typename F>
bool coeff_is_zero(const F& x) {
  return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial over an exact field F, c[i] being the
/// coefficient of t^i. Trailing zeros are always trimmed, so the zero
/// polynomial has an empty coefficient vector.
template <typename F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit UPoly(const F& constant) {
    if (!waring_is_zero(constant)) c_.push_back(constant);
  }

  static UPoly monomial(const F& coeff, std::size_t power) {
    if (waring_is_zero(coeff)) return {};
    std::vector<F> c(power + 1, F(0));
    c[power] = coeff;
    return UPoly(std::move(c));
  }

  const std::vector<F>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const F& lead() const { return c_.back(); }

  F operator[](std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }

  /// Lowest power with a nonzero coefficient (order of vanishing at 0).
  int ord() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!waring_is_zero(c_[i])) return static_cast<int>(i);
    return -1;
  }

  bool is_constant() const { return c_.size() <= 1; }

  F eval(const F& t) const {
    F acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d(c_.size() - 1, F(0));
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(static_cast<long>(i));
    return UPoly(std::move(d));
  }

  UPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<F> c(k, F(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return UPoly(std::move(c));
  }

  /// Drops the first k coefficients (division by t^k, assuming ord() >= k).
  UPoly unshifted(std::size_t k) const {
    if (k >= c_.size()) return {};
    return UPoly(std::vector<F>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  UPoly monic() const {
    if (is_zero()) return {};
    F inv = F(1) / lead();
    return *this * inv;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return UPoly(std::move(c));
  }

  friend UPoly operator-(const UPoly& a) {
    std::vector<F> c = a.c_;
    for (auto& x : c) x = -x;
    return UPoly(std::move(c));
  }

  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (waring_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (waring_is_zero(b.c_[j])) continue;
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return UPoly(std::move(c));
  }

  friend UPoly operator*(const UPoly& a, const F& s) {
    if (waring_is_zero(s)) return {};
    std::vector<F> c = a.c_;
    for (auto& x : c) x = x * s;
    return UPoly(std::move(c));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  /// Euclidean division: returns (quotient, remainder).
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<F> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<F> q(r.size() - db, F(0));
    F inv_lead = F(1) / b.lead();
    for (std::size_t k = r.size(); k-- > db;) {
      if (waring_is_zero(r[k])) continue;
      F factor = r[k] * inv_lead;
      q[k - db] = factor;
      for (std::size_t i = 0; i <= db; ++i) {
        if (waring_is_zero(b.c_[i])) continue;
        r[k - db + i] = r[k - db + i] - factor * b.c_[i];
      }
    }
    r.resize(db);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  /// Monic gcd; gcd(0, 0) = 0.
  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  static bool waring_is_zero(const F& x) { return detail::coeff_is_zero(x); }

  void trim() {
    while (!c_.empty() && waring_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Extended Euclid: returns (g, s) with s*a = g (mod b), g monic gcd.
template <typename F>
std::pair<UPoly<F>, UPoly<F>> half_gcdex(UPoly<F> a, UPoly<F> b) {
  UPoly<F> s0(F(1)), s1;
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    UPoly<F> s2 = s0 - q * s1;
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (a.is_zero()) return {a, s0};
  F inv = F(1) / a.lead();
  return {a * inv, s0 * inv};
}

}  // namespace waring
