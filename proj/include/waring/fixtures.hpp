#pragma once

#include <vector>

#include "waring/border.hpp"

namespace waring {

namespace detail {

inline EpsLinForm eps_form(std::size_t n, const std::vector<std::pair<std::size_t, EpsScalar>>& entries) {
  EpsLinForm f(n, EpsScalar(0));
  for (const auto& [i, c] : entries) f[i] = f[i] + c;
  return f;
}

}  // namespace detail

/// x^(d-1) y as lim (1/(d eps)) [(x + eps y)^d - x^d], two variables.
inline BorderDecomposition intro_tangent(int d) {
  if (d < 1) fail(ErrorKind::InvalidFamily, "degree must be positive");
  const EpsScalar e = EpsScalar::eps();
  const EpsScalar w = EpsScalar(1) / (EpsScalar(d) * e);
  BorderDecomposition b{2, d, {}};
  b.summands.push_back({w, detail::eps_form(2, {{0, EpsScalar(1)}, {1, e}})});
  b.summands.push_back({-w, detail::eps_form(2, {{0, EpsScalar(1)}})});
  return b;
}

/// x0^(d-1) y0 + x1^(d-1) y1 + 2 (x0 + x1)^(d-1) y2 from three tangent pairs.
/// Variables are ordered x0, x1, y0, y1, y2.
inline BorderDecomposition eq1_fd(int d) {
  if (d < 1) fail(ErrorKind::InvalidFamily, "degree must be positive");
  const EpsScalar e = EpsScalar::eps();
  const EpsScalar w = EpsScalar(1) / (EpsScalar(d) * e);
  BorderDecomposition b{5, d, {}};
  const EpsScalar one(1);
  b.summands.push_back({w, detail::eps_form(5, {{0, one}, {2, e}})});
  b.summands.push_back({-w, detail::eps_form(5, {{0, one}})});
  b.summands.push_back({w, detail::eps_form(5, {{1, one}, {3, e}})});
  b.summands.push_back({-w, detail::eps_form(5, {{1, one}})});
  b.summands.push_back({EpsScalar(2) * w, detail::eps_form(5, {{0, one}, {1, one}, {4, e}})});
  b.summands.push_back({EpsScalar(-2) * w, detail::eps_form(5, {{0, one}, {1, one}})});
  return b;
}

/// The five-summand cubic whose summands all have different limits.
inline BorderDecomposition eq2_wild() {
  const EpsScalar e = EpsScalar::eps();
  const EpsScalar w = EpsScalar(1) / (EpsScalar(9) * e);
  const EpsScalar one(1), two(2);
  BorderDecomposition b{5, 3, {}};
  b.summands.push_back({EpsScalar(3) * w, detail::eps_form(5, {{0, one}, {2, e}})});
  b.summands.push_back({EpsScalar(3) * w, detail::eps_form(5, {{1, one}, {3, e}})});
  b.summands.push_back({EpsScalar(6) * w, detail::eps_form(5, {{0, one}, {1, one}, {4, e}})});
  b.summands.push_back({-w, detail::eps_form(5, {{0, one}, {1, two}})});
  b.summands.push_back({-w, detail::eps_form(5, {{0, two}, {1, one}})});
  return b;
}

}  // namespace waring
