#pragma once

#include <algorithm>
#include <vector>

#include "waring/cyclotomic.hpp"

namespace waring {

namespace detail {

inline int sign_at(const RatPoly& p, const mpz_class& x) {
  Rational acc = 0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
  return sgn(acc);
}

inline int sign_variations(const std::vector<RatPoly>& chain, const mpz_class& x) {
  int v = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

inline void integer_roots_in(const RatPoly& p, const std::vector<RatPoly>& chain, mpz_class lo, mpz_class hi,
                             std::vector<mpz_class>& out) {
  // roots in (lo, hi]
  if (sign_variations(chain, lo) - sign_variations(chain, hi) == 0) return;
  if (hi - lo <= 1) {
    if (sign_at(p, hi) == 0) out.push_back(hi);
    return;
  }
  mpz_class mid = lo + (hi - lo) / 2;
  integer_roots_in(p, chain, lo, mid, out);
  integer_roots_in(p, chain, mid, hi, out);
}

}  // namespace detail

/// Distinct rational roots of p, ascending.
inline std::vector<Rational> rational_roots(const RatPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  RatPoly s = divmod(p, gcd(p, p.derivative())).first;
  if (s[0] == 0) {
    roots.push_back(0);
    s = s.unshifted(1);
  }
  if (s.degree() < 1) return roots;
  // Integer coefficients a_i, then the monic P(u) = a_n^(n-1) s(u / a_n).
  mpz_class den = 1;
  for (const auto& c : s.coeffs()) den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> a;
  for (const auto& c : s.coeffs()) a.push_back(mpz_class(c * den));
  const std::size_t n = a.size() - 1;
  const mpz_class lead = a[n];
  std::vector<Rational> monic(n + 1);
  mpz_class scale = 1;
  for (std::size_t i = n; i-- > 0;) {
    monic[i] = Rational(a[i] * scale);
    scale *= lead;
  }
  monic[n] = 1;
  RatPoly big(monic);
  mpz_class bound = 1;
  for (const auto& c : monic) bound = std::max(bound, mpz_class(abs(c.get_num())));
  bound += 1;
  std::vector<RatPoly> chain{big, big.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  std::vector<mpz_class> ints;
  detail::integer_roots_in(big, chain, -bound, bound, ints);
  for (const auto& u : ints) {
    Rational r(u, lead);
    r.canonicalize();
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace waring
