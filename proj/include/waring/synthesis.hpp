#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "waring/border.hpp"
#include "waring/catalecticant.hpp"
#include "waring/gad.hpp"
#include "waring/matrix.hpp"
#include "waring/poly.hpp"

namespace waring {

struct WaringSummand {
  Scalar weight;
  LinForm form;
};

/// f = sum_i weight_i * form_i^d
struct WaringDecomposition {
  std::size_t nvars = 0;
  int degree = 0;
  std::vector<WaringSummand> summands;

  std::size_t size() const { return summands.size(); }

  Poly polynomial() const {
    Poly f(nvars, degree);
    for (const auto& s : summands) f = f + power_of_linform(s.form, degree) * s.weight;
    return f;
  }

  std::uint64_t conductor() const {
    std::uint64_t n = 1;
    auto visit = [&](const Scalar& c) {
      if (!c.is_rational()) n = std::lcm(n, c.conductor());
    };
    for (const auto& s : summands) {
      visit(s.weight);
      for (const auto& c : s.form.coeffs) visit(c);
    }
    return n;
  }
};

inline bool verify_waring(const WaringDecomposition& w, const Poly& f) {
  if (w.nvars != f.nvars()) return false;
  if (!f.is_zero() && w.degree != f.degree()) return false;
  return w.polynomial() == f;
}

/// y1^a y2^b = 1/((a+1) C(a+b,a)) sum_k zeta^k (zeta^k y1 + y2)^(a+b), zeta of order a+1,
/// for a >= b; the roles of y1 and y2 are swapped when b > a.
inline WaringDecomposition monomial_two_form(int a, int b) {
  if (a < 0 || b < 0) fail(ErrorKind::Usage, "exponents must be nonnegative");
  const bool swapped = b > a;
  if (swapped) std::swap(a, b);
  auto ctx = make_context(static_cast<std::uint64_t>(a + 1));
  const Scalar scale = Scalar(Rational(1) / (Rational(a + 1) * binomial(a + b, a)));
  WaringDecomposition w{2, a + b, {}};
  for (int k = 0; k <= a; ++k) {
    Scalar z = Scalar::zeta_power(ctx, k);
    LinForm l(swapped ? Vector{Scalar(1), z} : Vector{z, Scalar(1)});
    w.summands.push_back({z * scale, std::move(l)});
  }
  return w;
}

namespace detail {

struct PowerBasisCache {
  std::mutex mutex;
  std::map<std::pair<std::size_t, int>, std::vector<LinForm>> bases;
};

inline PowerBasisCache& power_basis_cache() {
  static PowerBasisCache cache;
  return cache;
}

/// Integer coordinates ordered 0, 1, -1, 2, -2, ...
inline int nth_small_integer(int k) { return k % 2 == 1 ? (k + 1) / 2 : -(k / 2); }

inline std::vector<LinForm> compute_power_basis(std::size_t n, int e) {
  const std::size_t target = monomials_of_degree(n, e).size();
  MonomialBasis basis(n, e);
  IncrementalBasis span(basis.size());
  std::vector<LinForm> out;
  for (int s = 1; out.size() < target; ++s) {
    // Every vector with entries in [-s, s]; keep max-norm s with first nonzero positive.
    std::vector<int> idx(n, 0);
    const int width = 2 * s + 1;
    auto advance = [&] {
      for (std::size_t pos = n; pos-- > 0;) {
        if (++idx[pos] < width) return true;
        idx[pos] = 0;
      }
      return false;
    };
    do {
      Vector v(n);
      int norm = 0;
      int first = 0;
      for (std::size_t i = 0; i < n; ++i) {
        int x = nth_small_integer(idx[i]);
        v[i] = Scalar(x);
        norm = std::max(norm, std::abs(x));
        if (first == 0) first = x;
      }
      if (norm != s || first <= 0) continue;
      LinForm l(std::move(v));
      if (span.insert(power_of_linform(l, e).to_vector(basis))) out.push_back(std::move(l));
    } while (out.size() < target && advance());
  }
  return out;
}

}  // namespace detail

/// dim S_e linear forms with small integer coefficients whose e-th powers
/// form a basis of S_e. Deterministic.
inline std::vector<LinForm> power_basis(std::size_t n, int e) {
  if (n == 0 || e < 0) fail(ErrorKind::Usage, "power basis needs n >= 1 and e >= 0");
  auto& cache = detail::power_basis_cache();
  std::lock_guard lock(cache.mutex);
  auto key = std::make_pair(n, e);
  auto it = cache.bases.find(key);
  if (it != cache.bases.end()) return it->second;
  return cache.bases.emplace(key, detail::compute_power_basis(n, e)).first->second;
}

inline WaringDecomposition decompose_in_power_basis(const Poly& g) {
  WaringDecomposition w{g.nvars(), g.degree(), {}};
  if (g.is_zero()) return w;
  const auto forms = power_basis(g.nvars(), g.degree());
  MonomialBasis basis(g.nvars(), g.degree());
  Matrix m(basis.size(), forms.size());
  for (std::size_t j = 0; j < forms.size(); ++j) {
    Vector col = power_of_linform(forms[j], g.degree()).to_vector(basis);
    for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = col[i];
  }
  auto c = solve(m, g.to_vector(basis));
  if (!c) fail(ErrorKind::SynthesisError, "power basis does not span");
  for (std::size_t j = 0; j < forms.size(); ++j)
    if (!(*c)[j].is_zero()) w.summands.push_back({(*c)[j], forms[j]});
  return w;
}

inline constexpr std::uint64_t default_max_conductor = 512;

namespace detail {

inline LinForm embed_form(const LinForm& l, const FieldContext& ctx) {
  LinForm out = l;
  for (auto& c : out.coeffs) c = c.in(ctx);
  return out;
}

inline void check_conductor(std::uint64_t n, std::uint64_t max_conductor) {
  if (n > max_conductor)
    fail(ErrorKind::ConductorTooLarge,
         "needs zeta_" + std::to_string(n) + ", above the limit " + std::to_string(max_conductor));
}

/// Decomposition of g through its essential variables, forms mapped back
/// to the original coordinates.
inline WaringDecomposition decompose_via_essential_vars(const Poly& g) {
  WaringDecomposition out{g.nvars(), g.degree(), {}};
  if (g.is_zero()) return out;
  EssentialVars ev = essential_vars(g);
  const std::size_t n = g.nvars();
  if (ev.m == 0) {
    // constant: any form to the power 0
    out.summands.push_back({g.terms().begin()->second, LinForm::unit(n, 0)});
    return out;
  }
  Poly reduced = truncate_vars(substitute_linear(g, ev.a), ev.m);
  Matrix back = *inverse(ev.a);
  for (const auto& s : decompose_in_power_basis(reduced).summands) {
    Vector padded(n, Scalar(0));
    for (std::size_t i = 0; i < ev.m; ++i) padded[i] = s.form.coeffs[i];
    out.summands.push_back({s.weight, substitute_linear(LinForm(std::move(padded)), back)});
  }
  return out;
}

}  // namespace detail

inline WaringDecomposition synthesize(const GAD& g, std::uint64_t max_conductor = default_max_conductor) {
  const int d = g.degree;
  std::uint64_t n = g.conductor();
  for (const auto& p : g.parts)
    if (p.r >= 2 && d - p.r + 1 >= 1) n = std::lcm(n, static_cast<std::uint64_t>(std::max(d - p.r + 1, p.r - 1) + 1));
  detail::check_conductor(n, max_conductor);
  auto ctx = make_context(n);
  WaringDecomposition out{g.nvars, d, {}};
  for (const auto& part : g.parts) {
    if (part.g.is_zero()) continue;
    const LinForm l = detail::embed_form(part.l, ctx);
    if (part.r == 1) {
      out.summands.push_back({part.g.terms().begin()->second.in(ctx), l});
      continue;
    }
    const int a = d - part.r + 1, b = part.r - 1;
    WaringDecomposition two;
    if (a > 0) two = monomial_two_form(a, b);
    for (auto& s : two.summands) {
      s.weight = s.weight.in(ctx);
      s.form = detail::embed_form(s.form, ctx);
    }
    for (const auto& term : detail::decompose_via_essential_vars(part.g).summands) {
      const LinForm big = detail::embed_form(term.form, ctx);
      const Scalar c = term.weight.in(ctx);
      if (a == 0) {
        out.summands.push_back({c, big});
        continue;
      }
      if (proportional(big, l)) {
        const std::size_t j = l.pivot();
        const Scalar lambda = big.coeffs[j] / l.coeffs[j];
        out.summands.push_back({c * lambda.pow(b), l});
        continue;
      }
      // l^a L^b through the substitution y1 = l, y2 = L
      for (const auto& s : two.summands)
        out.summands.push_back({c * s.weight, s.form.coeffs[0] * l + s.form.coeffs[1] * big});
    }
  }
  if (out.polynomial() != g.polynomial()) fail(ErrorKind::SynthesisError, "synthesized decomposition does not verify");
  return out;
}

struct BoundReport {
  int r = 0, d = 0, n = 0;
  mpz_class binom_bound, bt_bound, fp_bound, generic_rank;
};

inline mpz_class binomial_z(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BoundReport bounds(int r, int d, int n) {
  if (r < 1 || d < 1 || n < 1) fail(ErrorKind::Usage, "bounds need r, d, n >= 1");
  BoundReport b{r, d, n, 0, 0, 0, 0};
  const auto ur = static_cast<unsigned long>(r);
  b.binom_bound = binomial_z(2 * ur - 2, ur - 1);
  b.bt_bound = 2 * ((b.binom_bound + r - 1) / r);
  mpz_class four;
  mpz_ui_pow_ui(four.get_mpz_t(), 4, ur);
  b.fp_bound = four * d;
  mpz_class dim = binomial_z(static_cast<unsigned long>(n + d - 1), static_cast<unsigned long>(d));
  b.generic_rank = (dim + n - 1) / n;
  return b;
}

struct DeborderResult {
  WaringDecomposition waring;
  Poly limit;
  bool via_gad = false;
  std::optional<GAD> gad;
};

inline DeborderResult deborder_detailed(const BorderDecomposition& b, std::uint64_t max_conductor = default_max_conductor) {
  DeborderResult out{WaringDecomposition{b.nvars, b.degree, {}}, limit_of_decomposition(b), false, std::nullopt};
  const int r = static_cast<int>(b.size());
  if (r == 0 || out.limit.is_zero()) return out;
  if (b.degree >= r - 1) {
    out.gad = extract_gad(b);
    out.via_gad = true;
    out.waring = synthesize(*out.gad, max_conductor);
  } else {
    detail::check_conductor(out.limit.conductor(), max_conductor);
    out.waring = detail::decompose_via_essential_vars(out.limit);
    if (!verify_waring(out.waring, out.limit)) fail(ErrorKind::SynthesisError, "fallback decomposition does not verify");
  }
  if (mpz_class(static_cast<unsigned long>(out.waring.size())) > bounds(r, b.degree, static_cast<int>(b.nvars)).fp_bound)
    fail(ErrorKind::SynthesisError, "output exceeds 4^r * d summands");
  return out;
}

inline WaringDecomposition deborder(const BorderDecomposition& b, std::uint64_t max_conductor = default_max_conductor) {
  return deborder_detailed(b, max_conductor).waring;
}

}  // namespace waring
