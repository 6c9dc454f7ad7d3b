#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "waring/catalecticant.hpp"
#include "waring/poly.hpp"
#include "waring/roots.hpp"

namespace waring {

using ScalarPoly = UPoly<Scalar>;

/// phi(t, 1) for a binary form phi, and the multiplicity of the root (1 : 0).
struct Dehomogenized {
  ScalarPoly p;
  int at_infinity;
};

inline Dehomogenized dehomogenize(const Poly& phi) {
  if (phi.nvars() != 2) fail(ErrorKind::ArityMismatch, "binary form expected");
  std::vector<Scalar> c(static_cast<std::size_t>(phi.degree()) + 1, Scalar(0));
  for (const auto& [m, s] : phi.terms()) c[static_cast<std::size_t>(m[0])] = s;
  ScalarPoly p(std::move(c));
  return {p, phi.degree() - p.degree()};
}

inline Poly homogenize(const ScalarPoly& p, int degree) {
  Poly f(2, degree);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) f.add_term({static_cast<int>(i), degree - static_cast<int>(i)}, p.coeffs()[i]);
  return f;
}

/// Root multiplicities over the algebraic closure, largest first (Yun).
inline std::vector<int> multiplicity_pattern(const Poly& phi) {
  if (phi.is_zero()) fail(ErrorKind::ZeroInput, "zero binary form");
  auto [p, inf] = dehomogenize(phi);
  std::vector<int> out;
  if (inf > 0) out.push_back(inf);
  if (p.degree() > 0) {
    ScalarPoly a0 = gcd(p, p.derivative());
    ScalarPoly b = divmod(p, a0).first;
    ScalarPoly c = divmod(p.derivative(), a0).first;
    ScalarPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
      ScalarPoly a = gcd(b, d);
      for (int k = 0; k < a.degree(); ++k) out.push_back(i);
      b = divmod(b, a).first;
      c = divmod(d, a).first;
      d = c - b.derivative();
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline bool is_squarefree(const Poly& phi) {
  auto m = multiplicity_pattern(phi);
  return std::all_of(m.begin(), m.end(), [](int k) { return k == 1; });
}

/// Monic-normalized gcd of binary forms.
inline Poly binary_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto da = dehomogenize(a), db = dehomogenize(b);
  ScalarPoly g = gcd(da.p, db.p);
  int inf = std::min(da.at_infinity, db.at_infinity);
  return homogenize(g, g.degree() + inf);
}

/// Linear form l = alpha x + beta y for a root (alpha : beta) of the operator phi.
struct BinaryRoot {
  LinForm form;
  int multiplicity;
};

/// Roots of phi with rational coordinates; nullopt if some root is irrational.
inline std::optional<std::vector<BinaryRoot>> rational_binary_roots(const Poly& phi) {
  auto [p, inf] = dehomogenize(phi);
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) return std::nullopt;
  std::vector<Rational> q;
  for (const auto& c : p.coeffs()) q.push_back(c.rational_value());
  RatPoly rp(q);
  std::vector<BinaryRoot> out;
  if (inf > 0) out.push_back({LinForm(Vector{Scalar(1), Scalar(0)}), inf});
  int found = inf;
  for (const auto& t : rational_roots(rp)) {
    RatPoly lin(std::vector<Rational>{-t, Rational(1)});
    RatPoly rest = rp;
    int mult = 0;
    for (;;) {
      auto [qq, r] = divmod(rest, lin);
      if (!r.is_zero()) break;
      rest = qq;
      ++mult;
    }
    out.push_back({LinForm(Vector{Scalar(t), Scalar(1)}), mult});
    found += mult;
  }
  if (found != phi.degree()) return std::nullopt;
  return out;
}

/// Whether some element of span(basis) is square-free: for a single form,
/// the form itself; for a larger system, its fixed part (the gcd).
inline bool span_has_squarefree(const std::vector<Poly>& basis) {
  if (basis.empty()) return false;
  if (basis.size() == 1) return is_squarefree(basis.front());
  Poly g = basis.front();
  for (std::size_t i = 1; i < basis.size(); ++i) g = binary_gcd(g, basis[i]);
  return g.degree() == 0 || is_squarefree(g);
}

}  // namespace waring
