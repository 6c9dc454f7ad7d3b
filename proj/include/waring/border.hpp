#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "waring/eps.hpp"
#include "waring/poly.hpp"

namespace waring {

using EpsLinForm = std::vector<EpsScalar>;

struct BorderSummand {
  EpsScalar weight;
  EpsLinForm form;
};

/// f = lim_{eps -> 0} sum_k weight_k * form_k^d
struct BorderDecomposition {
  std::size_t nvars = 0;
  int degree = 0;
  std::vector<BorderSummand> summands;

  std::size_t size() const { return summands.size(); }

  std::uint64_t conductor() const {
    std::uint64_t n = 1;
    auto visit_poly = [&](const EpsPoly& p) {
      for (const auto& c : p.coeffs())
        if (!c.is_rational()) n = std::lcm(n, c.conductor());
    };
    auto visit = [&](const EpsScalar& x) {
      visit_poly(x.num());
      visit_poly(x.den());
    };
    for (const auto& s : summands) {
      visit(s.weight);
      for (const auto& c : s.form) visit(c);
    }
    return n;
  }

  BorderDecomposition subset(const std::vector<std::size_t>& indices) const {
    BorderDecomposition b{nvars, degree, {}};
    for (auto i : indices) b.summands.push_back(summands[i]);
    return b;
  }
};

inline EpsPoly eps_lcm(const EpsPoly& a, const EpsPoly& b) {
  if (a.is_constant()) return b;
  if (b.is_constant()) return a;
  EpsPoly g = gcd(a, b);
  return a * divmod(b, g).first;
}

/// Exact expansion of a weighted sum of eps-parametric powers, stored as
/// numerator polynomials in eps over one shared denominator.
class EpsExpansion {
 public:
  using Terms = std::map<Monomial, EpsPoly, GradedLexDescending>;

  EpsExpansion(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree), den_(Scalar(1)) {}

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const EpsPoly& den() const { return den_; }
  const Terms& numerators() const { return num_; }
  bool is_zero() const { return num_.empty(); }

  void add(const EpsScalar& weight, const EpsLinForm& form) {
    if (form.size() != nvars_) fail(ErrorKind::ArityMismatch, "summand has the wrong number of coordinates");
    if (weight.is_zero()) return;
    EpsPoly common(Scalar(1));
    for (const auto& c : form)
      if (!c.is_zero()) common = eps_lcm(common, c.den());
    // form = P / common with polynomial coordinates P_i
    std::vector<EpsPoly> p(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (!form[i].is_zero()) p[i] = form[i].num() * divmod(common, form[i].den()).first;
    Terms powered = expand_power(p, degree_);
    EpsPoly sden = weight.den() * power(common, degree_);
    EpsPoly new_den = eps_lcm(den_, sden);
    EpsPoly scale_old = divmod(new_den, den_).first;
    EpsPoly scale_new = divmod(new_den, sden).first * weight.num();
    if (!scale_old.is_constant() || !(scale_old[0] == Scalar(1)))
      for (auto& [m, c] : num_) c = c * scale_old;
    den_ = std::move(new_den);
    for (auto& [m, c] : powered) {
      EpsPoly term = c * scale_new;
      auto it = num_.find(m);
      if (it == num_.end()) {
        if (!term.is_zero()) num_.emplace(m, std::move(term));
        continue;
      }
      it->second = it->second + term;
      if (it->second.is_zero()) num_.erase(it);
    }
  }

  /// Lowest eps-order across all monomials; nullopt if the sum is identically zero.
  std::optional<int> valuation() const {
    if (num_.empty()) return std::nullopt;
    int best = -1;
    for (const auto& [m, c] : num_) {
      int o = c.ord();
      if (best < 0 || o < best) best = o;
    }
    return best - den_.ord();
  }

  /// Coefficient polynomial of eps^q in the Laurent expansion.
  Poly coefficient(int q) const {
    // Laurent coefficient of eps^q of N/D with D = eps^od * D0, D0(0) != 0:
    // sum_j N[od + q - j] * (1/D0)[j].
    const int od = den_.ord();
    const int v = *valuation();
    std::vector<Scalar> inv = inverse_series(den_.unshifted(static_cast<std::size_t>(od)), q - v + 1);
    Poly out(nvars_, degree_);
    for (const auto& [m, c] : num_) {
      Scalar acc(0);
      for (int j = 0; j <= q - v; ++j) {
        int k = od + q - j;
        if (k < 0) continue;
        Scalar nk = c[static_cast<std::size_t>(k)];
        if (!nk.is_zero()) acc = acc + nk * inv[static_cast<std::size_t>(j)];
      }
      out.add_term(m, acc);
    }
    return out;
  }

  /// The value at eps = 0; requires a nonnegative valuation.
  Poly limit() const {
    if (num_.empty()) return Poly(nvars_, degree_);
    if (*valuation() < 0) fail(ErrorKind::LimitDoesNotExist, "the decomposition has a pole at eps = 0");
    return coefficient(0);
  }

  /// Exact rational-function coefficient of every monomial.
  std::map<Monomial, EpsScalar, GradedLexDescending> coefficients() const {
    std::map<Monomial, EpsScalar, GradedLexDescending> out;
    for (const auto& [m, c] : num_) out.emplace(m, EpsScalar(c, den_));
    return out;
  }

 private:
  static EpsPoly power(const EpsPoly& p, int k) {
    EpsPoly r(Scalar(1));
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
  }

  static Terms expand_power(const std::vector<EpsPoly>& p, int d) {
    const std::size_t n = p.size();
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i)
      if (!p[i].is_zero()) support.push_back(i);
    Terms out;
    if (support.empty()) return out;
    std::vector<std::vector<EpsPoly>> pw(support.size());
    for (std::size_t k = 0; k < support.size(); ++k) {
      pw[k].push_back(EpsPoly(Scalar(1)));
      for (int e = 1; e <= d; ++e) pw[k].push_back(pw[k].back() * p[support[k]]);
    }
    const Rational dfact = factorial(d);
    for (const Monomial& sub : monomials_of_degree(support.size(), d)) {
      Rational multinomial = dfact;
      EpsPoly c(Scalar(1));
      Monomial m(n, 0);
      for (std::size_t k = 0; k < support.size(); ++k) {
        multinomial /= factorial(sub[k]);
        m[support[k]] = sub[k];
        if (sub[k] > 0) c = c * pw[k][static_cast<std::size_t>(sub[k])];
      }
      c = c * Scalar(multinomial);
      if (!c.is_zero()) out.emplace(std::move(m), std::move(c));
    }
    return out;
  }

  /// First `terms` coefficients of 1/p for p(0) != 0.
  static std::vector<Scalar> inverse_series(const EpsPoly& p, int terms) {
    std::vector<Scalar> inv;
    if (terms <= 0) return inv;
    Scalar c0 = p[0].inverse();
    inv.push_back(c0);
    for (int k = 1; k < terms; ++k) {
      Scalar acc(0);
      for (int j = 1; j <= k && j <= p.degree(); ++j) {
        const Scalar pj = p[static_cast<std::size_t>(j)];
        if (!pj.is_zero()) acc = acc + pj * inv[static_cast<std::size_t>(k - j)];
      }
      inv.push_back(-acc * c0);
    }
    return inv;
  }

  std::size_t nvars_;
  int degree_;
  EpsPoly den_;
  Terms num_;
};

inline EpsExpansion expand(const BorderDecomposition& b) {
  EpsExpansion e(b.nvars, b.degree);
  for (const auto& s : b.summands) e.add(s.weight, s.form);
  return e;
}

inline EpsExpansion expand(const BorderDecomposition& b, const std::vector<std::size_t>& indices) {
  EpsExpansion e(b.nvars, b.degree);
  for (auto i : indices) e.add(b.summands[i].weight, b.summands[i].form);
  return e;
}

inline Poly limit_of_decomposition(const BorderDecomposition& b) { return expand(b).limit(); }

/// Projective limit of an eps-parametric form, normalized so its first
/// nonzero coordinate is 1.
inline LinForm projective_limit(const EpsLinForm& l) {
  std::optional<int> q;
  for (const auto& c : l)
    if (!c.is_zero()) {
      int o = c.valuation().order;
      if (!q || o < *q) q = o;
    }
  if (!q) fail(ErrorKind::ZeroValuation, "projective limit of the zero form");
  Vector v(l.size(), Scalar(0));
  for (std::size_t i = 0; i < l.size(); ++i)
    if (!l[i].is_zero()) {
      Valuation val = l[i].valuation();
      if (val.order == *q) v[i] = val.lead;
    }
  return LinForm(std::move(v)).normalized();
}

/// Class ordering: smaller support first, then larger coefficients first.
inline bool base_less(const LinForm& a, const LinForm& b) {
  auto support = [](const LinForm& l) {
    return std::count_if(l.coeffs.begin(), l.coeffs.end(), [](const Scalar& s) { return !s.is_zero(); });
  };
  auto sa = support(a), sb = support(b);
  if (sa != sb) return sa < sb;
  return form_less(a, b);
}

struct LocalClass {
  std::vector<std::size_t> indices;
  LinForm base;
  bool vanishes = false;  // class sum is identically zero
  int q = 0;              // valuation of the class sum
  Poly leading;           // coefficient of eps^q in the class sum

  /// Removable without changing the limit.
  bool dropped() const { return vanishes || q > 0; }
};

inline std::vector<LocalClass> group_local_classes(const BorderDecomposition& b) {
  std::vector<LocalClass> classes;
  for (std::size_t i = 0; i < b.size(); ++i) {
    LinForm base = projective_limit(b.summands[i].form);
    auto it = std::find_if(classes.begin(), classes.end(), [&](const LocalClass& c) { return c.base == base; });
    if (it == classes.end()) {
      classes.push_back(LocalClass{{i}, std::move(base), false, 0, Poly(b.nvars, b.degree)});
    } else {
      it->indices.push_back(i);
    }
  }
  std::stable_sort(classes.begin(), classes.end(), [](const LocalClass& x, const LocalClass& y) { return base_less(x.base, y.base); });
  for (auto& c : classes) {
    EpsExpansion e = expand(b, c.indices);
    auto v = e.valuation();
    if (!v) {
      c.vanishes = true;
      continue;
    }
    c.q = *v;
    c.leading = e.coefficient(*v);
  }
  return classes;
}

/// Rewrites a local family so that its first form is exactly eps^q * gamma * base,
/// by a linear change of coordinates that tends to the identity as eps -> 0.
inline std::vector<BorderSummand> standardize_local(const std::vector<BorderSummand>& members, const LinForm& base) {
  if (members.empty()) return members;
  const LinForm b = base.normalized();
  for (const auto& m : members)
    if (m.form.size() != b.nvars() || !(projective_limit(m.form) == b))
      fail(ErrorKind::NotLocal, "member does not tend to the base direction");
  const std::size_t j = b.pivot();
  const EpsLinForm& a = members.front().form;
  Valuation lead = a[j].valuation();
  // u = a / (eps^q gamma) tends to base; delta = u - base.
  EpsScalar scale = EpsScalar(lead.lead) * EpsScalar::eps().pow(lead.order);
  EpsLinForm delta(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) delta[i] = a[i] / scale - EpsScalar(b.coeffs[i]);
  // A^T c = c - delta * c_j / (1 + delta_j) sends u to base.
  const EpsScalar denom = EpsScalar(1) + delta[j];
  std::vector<BorderSummand> out;
  out.reserve(members.size());
  for (const auto& m : members) {
    EpsScalar t = m.form[j] / denom;
    EpsLinForm c(m.form.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = m.form[i] - delta[i] * t;
    out.push_back({m.weight, std::move(c)});
  }
  return out;
}

}  // namespace waring
