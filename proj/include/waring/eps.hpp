#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "waring/cyclotomic.hpp"
#include "waring/upoly.hpp"

namespace waring {

using EpsPoly = UPoly<Scalar>;

struct Valuation {
  int order;
  Scalar lead;
};

/// Rational function in the limit parameter eps over a cyclotomic field,
/// kept in lowest terms with a monic denominator.
class EpsScalar {
 public:
  EpsScalar() : den_(Scalar(1)) {}
  EpsScalar(int v) : EpsScalar(Scalar(v)) {}
  EpsScalar(const Scalar& s) : num_(s), den_(Scalar(1)) {}
  EpsScalar(EpsPoly num, EpsPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static EpsScalar eps() { return EpsScalar(EpsPoly::monomial(Scalar(1), 1), EpsPoly(Scalar(1))); }

  const EpsPoly& num() const { return num_; }
  const EpsPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// Laurent order at eps = 0 and the coefficient of eps^order.
  Valuation valuation() const {
    if (is_zero()) fail(ErrorKind::ZeroValuation, "valuation of zero");
    const int on = num_.ord(), od = den_.ord();
    return {on - od, num_[static_cast<std::size_t>(on)] / den_[static_cast<std::size_t>(od)]};
  }

  Scalar eval0() const {
    if (is_zero()) return Scalar(0);
    Valuation v = valuation();
    if (v.order < 0) fail(ErrorKind::PoleAtZero, "rational function has a pole at eps = 0");
    return v.order == 0 ? v.lead : Scalar(0);
  }

  /// Value at eps = t; the denominator must not vanish there.
  Scalar eval(const Scalar& t) const { return num_.eval(t) / den_.eval(t); }

  friend EpsScalar operator+(const EpsScalar& a, const EpsScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return EpsScalar(a.num_ + b.num_, a.den_);
    return EpsScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend EpsScalar operator-(const EpsScalar& a) { return EpsScalar(-a.num_, a.den_, Normalized{}); }
  friend EpsScalar operator-(const EpsScalar& a, const EpsScalar& b) { return a + (-b); }
  friend EpsScalar operator*(const EpsScalar& a, const EpsScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return EpsScalar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend EpsScalar operator/(const EpsScalar& a, const EpsScalar& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero rational function");
    return EpsScalar(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const EpsScalar& a, const EpsScalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const EpsScalar& a, const EpsScalar& b) { return !(a == b); }

  EpsScalar pow(int k) const {
    if (k < 0) return EpsScalar(1) / pow(-k);
    EpsScalar r(1), base = *this;
    while (k > 0) {
      if (k & 1) r = r * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return r;
  }

  /// Substitutes eps -> u * eps for a nonzero scalar u.
  EpsScalar rescaled(const Scalar& u) const {
    return EpsScalar(rescale_poly(num_, u), rescale_poly(den_, u));
  }

 private:
  struct Normalized {};
  EpsScalar(EpsPoly num, EpsPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  static EpsPoly rescale_poly(const EpsPoly& p, const Scalar& u) {
    std::vector<Scalar> c = p.coeffs();
    Scalar power(1);
    for (auto& x : c) {
      x = x * power;
      power = power * u;
    }
    return EpsPoly(std::move(c));
  }

  void normalize() {
    if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
      den_ = EpsPoly(Scalar(1));
      return;
    }
    const int k = std::min(num_.ord(), den_.ord());
    if (k > 0) {
      num_ = num_.unshifted(static_cast<std::size_t>(k));
      den_ = den_.unshifted(static_cast<std::size_t>(k));
    }
    if (!den_.is_constant() && !num_.is_constant()) {
      EpsPoly g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
      }
    }
    Scalar inv = den_.lead().inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }

  EpsPoly num_;
  EpsPoly den_;
};

inline bool is_zero(const EpsScalar& x) { return x.is_zero(); }

inline std::string to_string(const EpsPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Scalar& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    std::string cs = to_string(c);
    const bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    if (!first) out += "+";
    first = false;
    if (k == 0) {
      out += compound ? "(" + cs + ")" : cs;
      continue;
    }
    if (cs == "-1")
      out += "-";
    else if (cs != "1")
      out += (compound ? "(" + cs + ")" : cs) + "*";
    out += "e";
    if (k > 1) out += "^" + std::to_string(k);
  }
  // "+-" only arises from a negative coefficient following a term.
  std::string cleaned;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == '+' && i + 1 < out.size() && out[i + 1] == '-') continue;
    cleaned += out[i];
  }
  return cleaned;
}

/// Canonical eps-expression literal, e.g. "(1/3)/(e)" or "1+e^2".
inline std::string to_string(const EpsScalar& x) {
  if (x.is_polynomial()) return to_string(x.num());
  return "(" + to_string(x.num()) + ")/(" + to_string(x.den()) + ")";
}

}  // namespace waring
