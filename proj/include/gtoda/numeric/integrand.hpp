#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gtoda/numeric/log_gamma.hpp"

namespace gtoda::numeric {

/// Spectral data of one wave function: the top row g_{2n,1..n} and the coupling c.
struct SpectralParams {
  int n = 1;
  std::vector<double> gamma;
  double c = 1.0;

  void validate() const {
    if (n < 1) throw std::invalid_argument("rank n must be positive");
    if (static_cast<int>(gamma.size()) != n)
      throw std::invalid_argument("expected " + std::to_string(n) + " spectral values, got " +
                                  std::to_string(gamma.size()));
    if (!(c > 0) || !std::isfinite(c)) throw std::invalid_argument("coupling c must be positive and finite");
    for (double g : gamma)
      if (!std::isfinite(g)) throw std::invalid_argument("spectral values must be finite");
  }

  /// Coinciding |g_{2n,i}| are allowed but reported.
  std::vector<std::string> warnings() const {
    std::vector<std::string> w;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::abs(std::abs(gamma[i]) - std::abs(gamma[j])) < 1e-12)
          w.push_back("spectral values " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                      " coincide up to sign");
    return w;
  }
};

/// constant + sum coef * g_var.
struct LinearForm {
  cplx constant = 0.0;
  std::vector<std::pair<int, cplx>> terms;

  static LinearForm var(int v) { return {0.0, {{v, 1.0}}}; }
  static LinearForm value(cplx a) { return {a, {}}; }

  LinearForm& operator+=(const LinearForm& o) {
    constant += o.constant;
    for (const auto& [v, a] : o.terms) add_term(v, a);
    return *this;
  }
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator*(cplx s, LinearForm a) {
    a.constant *= s;
    for (auto& t : a.terms) t.second *= s;
    return a;
  }
  friend LinearForm operator-(const LinearForm& a, const LinearForm& b) { return a + (-1.0) * b; }
  friend LinearForm operator-(const LinearForm& a) { return (-1.0) * a; }
  friend LinearForm operator+(LinearForm a, cplx s) {
    a.constant += s;
    return a;
  }

  void add_term(int v, cplx a) {
    for (auto& t : terms)
      if (t.first == v) {
        t.second += a;
        return;
      }
    terms.emplace_back(v, a);
  }

  cplx eval(std::span<const cplx> point) const {
    cplx s = constant;
    for (const auto& [v, a] : terms) s += a * point[v];
    return s;
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (const auto& [v, a] : terms)
      if (a != 0.0) s.push_back(v);
    std::sort(s.begin(), s.end());
    return s;
  }
};

enum class FactorKind { Gamma, InverseGamma, Exp };

struct Factor {
  FactorKind kind;
  LinearForm arg;
  std::string label;
};

/// A factor given by values rather than a formula (e.g. a lower-rank wave function).
struct TabulatedFactor {
  std::vector<int> vars;
  std::function<cplx(std::span<const cplx>)> fn;
  std::string label;
};

enum class Formula { DirectG5, KernelG9, PhiG16a, PsiFromPhiG17a, GustafsonLhsG12, ExampleN1, ExampleN2 };

inline std::string formula_name(Formula f) {
  switch (f) {
    case Formula::DirectG5: return "direct_g5";
    case Formula::KernelG9: return "kernel_g9";
    case Formula::PhiG16a: return "phi_g16a";
    case Formula::PsiFromPhiG17a: return "psi_from_phi_g17a";
    case Formula::GustafsonLhsG12: return "gustafson_lhs_g12";
    case Formula::ExampleN1: return "example_n1";
    case Formula::ExampleN2: return "example_n2";
  }
  return "?";
}

struct Variable {
  std::string name;
  double offset = 0.0;  // the contour is Im g = offset
};

struct ContourError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Compiled Mellin-Barnes integrand: a product of Gamma factors, inverse Gamma factors
/// and exponentials of linear forms in the integration variables.
struct IntegrandSpec {
  Formula formula = Formula::DirectG5;
  std::vector<Variable> vars;
  std::vector<Factor> factors;
  std::vector<TabulatedFactor> tabulated;
  std::vector<int> elimination_order;
  double decay_rate = std::numbers::pi;  // per unit |g|, used for the truncation bound

  int dimension() const { return static_cast<int>(vars.size()); }

  int add_var(std::string name, double offset = 0.0) {
    vars.push_back({std::move(name), offset});
    elimination_order.push_back(dimension() - 1);
    return dimension() - 1;
  }
  void gamma(LinearForm a, std::string label) { factors.push_back({FactorKind::Gamma, std::move(a), std::move(label)}); }
  void inverse_gamma(LinearForm a, std::string label) {
    factors.push_back({FactorKind::InverseGamma, std::move(a), std::move(label)});
  }
  /// Stored one variable at a time so each piece joins the smallest table.
  void exponential(const LinearForm& a, const std::string& label) {
    factors.push_back({FactorKind::Exp, LinearForm::value(a.constant), label});
    for (const auto& [v, coef] : a.terms) factors.push_back({FactorKind::Exp, LinearForm{0.0, {{v, coef}}}, label});
  }
  /// |Gamma(k + u)|^{-2} for u purely imaginary on the real contour, continued as
  /// 1 / (Gamma(k + u) Gamma(k - u)).
  void inverse_abs_gamma_sq(double k, const LinearForm& u, const std::string& label) {
    inverse_gamma(u + k, label);
    inverse_gamma(-u + k, label + "*");
  }

  /// Point on the contour for real parameters t.
  std::vector<cplx> contour_point(std::span<const double> t) const {
    std::vector<cplx> p(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v) p[v] = cplx(t[v], vars[v].offset);
    return p;
  }

  cplx log_value(std::span<const cplx> point) const {
    cplx s = 0.0;
    for (const auto& f : factors) {
      const cplx a = f.arg.eval(point);
      switch (f.kind) {
        case FactorKind::Gamma: s += log_gamma(a); break;
        case FactorKind::InverseGamma:
          if (is_gamma_pole(a)) return {-std::numeric_limits<double>::infinity(), 0.0};
          s -= log_gamma(a);
          break;
        case FactorKind::Exp: s += a; break;
      }
    }
    return s;
  }

  cplx value(std::span<const cplx> point) const {
    cplx v = std::exp(log_value(point));
    for (const auto& t : tabulated) {
      std::vector<cplx> sub;
      for (int u : t.vars) sub.push_back(point[u]);
      v *= t.fn(sub);
    }
    return v;
  }

  /// Every Gamma factor in the numerator must stay off its poles on the whole contour.
  void check_contour() const {
    for (const auto& f : factors) {
      if (f.kind != FactorKind::Gamma) continue;
      cplx on_line = f.arg.constant;
      bool moves = false;
      for (const auto& [v, a] : f.arg.terms) {
        on_line += a * cplx(0.0, vars[v].offset);
        if (std::abs(a.real()) > 1e-15 * std::abs(a))
          throw ContourError("factor " + f.label + " has a non-imaginary direction along the contour");
        moves = moves || a != 0.0;
      }
      const double re = on_line.real();
      const double k = std::round(re);
      const bool hits = k <= 0 && std::abs(re - k) < 1e-9 && (moves || std::abs(on_line.imag()) < 1e-9);
      if (hits) {
        std::ostringstream os;
        os << "contour passes through a pole of " << f.label << " (real part of the argument is " << re << ")";
        throw ContourError(os.str());
      }
    }
  }
};

namespace detail {

inline cplx ic(double c) { return cplx(0.0, c); }

/// Row entries as linear forms: integration variables or fixed values.
using Rows = std::map<int, std::vector<LinearForm>>;

inline std::string entry_name(int row, int j) { return "g" + std::to_string(row) + "_" + std::to_string(j); }

// mu(g_{2k}) and mu(g_{2k+1}) of the measure, as inverse Gamma factors.
inline void add_measure_even(IntegrandSpec& s, const std::vector<LinearForm>& row, double c, int r) {
  const cplx inv = 1.0 / ic(c);
  const std::string tag = "mu(g" + std::to_string(r) + ")";
  for (std::size_t a = 0; a < row.size(); ++a) {
    for (std::size_t b = a + 1; b < row.size(); ++b) {
      s.inverse_abs_gamma_sq(0.0, inv * (row[a] - row[b]), tag + "|G(diff)|^2");
      s.inverse_abs_gamma_sq(0.0, inv * (row[a] + row[b]), tag + "|G(sum)|^2");
    }
    s.inverse_abs_gamma_sq(0.0, (2.0 * inv) * row[a], tag + "|G(2g)|^2");
  }
}

inline void add_measure_odd(IntegrandSpec& s, const std::vector<LinearForm>& row, double c, int r) {
  const cplx inv = 1.0 / ic(c);
  const std::string tag = "mu(g" + std::to_string(r) + ")";
  for (std::size_t a = 0; a < row.size(); ++a)
    for (std::size_t b = a + 1; b < row.size(); ++b) {
      s.inverse_abs_gamma_sq(0.0, inv * (row[a] - row[b]), tag + "|G(diff)|^2");
      s.inverse_abs_gamma_sq(1.0, inv * (row[a] + row[b]), tag + "|G(1+sum)|^2");
    }
}

// Gamma((+-even_i + sign * odd_j)/(ic) + 1/2) for all i, j.
inline void add_pm_pairs(IntegrandSpec& s, const std::vector<LinearForm>& even, const std::vector<LinearForm>& odd,
                         double sign, double c, const std::string& tag) {
  const cplx inv = 1.0 / ic(c);
  for (const auto& e : even)
    for (const auto& o : odd)
      for (double pm : {1.0, -1.0}) s.gamma(inv * (pm * e + sign * o) + 0.5, tag);
}

inline double decay_rate(int n, double c) { return (std::numbers::pi - 0.1) / (c * n); }

}  // namespace detail

/// The wave-function integral over all rows 1..2n-1 on the real axis.
inline IntegrandSpec build_direct(const SpectralParams& p, std::span<const double> x) {
  p.validate();
  const int n = p.n;
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("position must have n entries");
  const double c = p.c;
  const cplx inv = 1.0 / detail::ic(c);
  IntegrandSpec s;
  s.formula = Formula::DirectG5;
  s.decay_rate = detail::decay_rate(n, c);
  detail::Rows rows;
  for (int r = 1; r <= 2 * n - 1; ++r)
    for (int j = 1; j <= (r + 1) / 2; ++j) rows[r].push_back(LinearForm::var(s.add_var(detail::entry_name(r, j))));
  for (double g : p.gamma) rows[2 * n].push_back(LinearForm::value(g));

  for (int k = 1; k <= n - 1; ++k) {
    detail::add_measure_even(s, rows[2 * k], c, 2 * k);
    detail::add_measure_odd(s, rows[2 * k + 1], c, 2 * k + 1);
  }
  // c^{(2/ic) sum delta_odd} and the position-dependent exponential.
  LinearForm expo;
  for (int k = 1; k <= n; ++k) {
    const double xk = x[k - 1];
    const double xnext = k < n ? x[k] : 0.0;
    for (const auto& g : rows[2 * k - 1]) expo += (2.0 * std::log(c) * inv + inv * (xnext - xk)) * g;
    expo.constant += static_cast<double>(k - 1) * xk;
  }
  s.exponential(expo, "c-power and position exponential");
  for (int k = 1; k <= n - 1; ++k) {
    detail::add_pm_pairs(s, rows[2 * k], rows[2 * k - 1], 1.0, c, "G((+-g_even + g_below)/ic + 1/2)");
    detail::add_pm_pairs(s, rows[2 * k], rows[2 * k + 1], -1.0, c, "G((+-g_even - g_above)/ic + 1/2)");
  }
  detail::add_pm_pairs(s, rows[2 * n], rows[2 * n - 1], 1.0, c, "G((+-g_top + g_odd)/ic + 1/2)");
  return s;
}

/// Rank-n wave function written through the rank-(n-1) one: integrand over rows 2n-2, 2n-1,
/// with the inner wave function supplied as a tabulated factor of row 2n-2.
inline IntegrandSpec build_kernel(const SpectralParams& p, double x_n,
                                  std::function<cplx(std::span<const cplx>)> inner_wave) {
  p.validate();
  const int n = p.n;
  if (n < 2) throw std::invalid_argument("the kernel form needs n >= 2");
  const double c = p.c;
  const cplx inv = 1.0 / detail::ic(c);
  IntegrandSpec s;
  s.formula = Formula::KernelG9;
  s.decay_rate = detail::decay_rate(n, c);
  std::vector<LinearForm> lower, odd, top;
  std::vector<int> lower_vars;
  for (int j = 1; j <= n - 1; ++j) {
    lower_vars.push_back(s.add_var(detail::entry_name(2 * n - 2, j)));
    lower.push_back(LinearForm::var(lower_vars.back()));
  }
  for (int j = 1; j <= n; ++j) odd.push_back(LinearForm::var(s.add_var(detail::entry_name(2 * n - 1, j))));
  for (double g : p.gamma) top.push_back(LinearForm::value(g));
  detail::add_measure_odd(s, odd, c, 2 * n - 1);
  detail::add_measure_even(s, lower, c, 2 * n - 2);
  detail::add_pm_pairs(s, lower, odd, -1.0, c, "G((+-g_even - g_above)/ic + 1/2)");
  detail::add_pm_pairs(s, top, odd, 1.0, c, "G((+-g_top + g_odd)/ic + 1/2)");
  LinearForm expo;
  for (const auto& g : odd) expo += (2.0 * std::log(c) * inv - inv * x_n) * g;
  expo.constant += 0.5 * n * (n - 1) * x_n;
  s.exponential(expo, "c-power and kernel exponential");
  s.tabulated.push_back({lower_vars, std::move(inner_wave), "inner wave function"});
  return s;
}

/// Contour heights of the reduced route: Im g_{2k-1} = scale (n - k + 1) c / 8.
inline double reduced_offset(int n, int k, double c, double offset_scale) {
  return offset_scale * (n - k + 1) * c / 8.0;
}

namespace detail {

// GL(n) part: rows 1..2n-3 as variables on their contours, row 2n-1 given.
inline void add_phi(IntegrandSpec& s, int n, const std::vector<LinearForm>& top_odd, std::span<const double> x, double c,
                    double offset_scale, bool with_c_power = true) {
  const cplx inv = 1.0 / ic(c);
  Rows rows;
  for (int k = 1; k <= n - 1; ++k)
    for (int j = 1; j <= k; ++j)
      rows[2 * k - 1].push_back(
          LinearForm::var(s.add_var(entry_name(2 * k - 1, j), reduced_offset(n, k, c, offset_scale))));
  rows[2 * n - 1] = top_odd;
  LinearForm expo;
  for (int k = 1; k <= n; ++k) {
    expo.constant += (n - k + 0.5) * x[k - 1];
    const double xnext = k < n ? x[k] : 0.0;
    for (const auto& g : rows[2 * k - 1]) expo += (inv * (xnext - x[k - 1])) * g;
  }
  for (int k = 1; k <= n - 1; ++k) {
    for (const auto& a : rows[2 * k - 1])
      for (const auto& b : rows[2 * k + 1]) {
        if (with_c_power) expo += (std::log(c) * inv) * (a - b);
        s.gamma(inv * (a - b), "G((g_" + std::to_string(2 * k - 1) + " - g_" + std::to_string(2 * k + 1) + ")/ic)");
      }
    const auto& row = rows[2 * k - 1];
    for (std::size_t r = 0; r < row.size(); ++r)
      for (std::size_t t = r + 1; t < row.size(); ++t)
        s.inverse_abs_gamma_sq(0.0, inv * (row[r] - row[t]), "|G(diff)|^2 row " + std::to_string(2 * k - 1));
  }
  s.exponential(expo, "phi exponential and c-powers");
}

}  // namespace detail

/// GL(n) wave function with fixed odd row g_{2n-1} (possibly complex).
inline IntegrandSpec build_phi(int n, std::span<const cplx> top_odd, std::span<const double> x, double c,
                               double offset_scale = 4.0) {
  if (n < 1 || static_cast<int>(top_odd.size()) != n || static_cast<int>(x.size()) != n)
    throw std::invalid_argument("phi needs n odd-row values and n positions");
  IntegrandSpec s;
  s.formula = Formula::PhiG16a;
  s.decay_rate = detail::decay_rate(n, c);
  std::vector<LinearForm> top;
  for (cplx v : top_odd) top.push_back(LinearForm::value(v));
  detail::add_phi(s, n, top, x, c, offset_scale);
  return s;
}

/// Derived normalization of the reduced route: the shift of the odd rows by
/// -(n - k + 1/2) ic produces c^{-K} with K = sum_{k<n} k(k+1) + n(n+1)/2.
inline double reduced_route_log_constant(int n, double c) {
  double logd = 0.0;
  for (int k = 1; k <= n - 1; ++k) {
    logd += k * std::log(c) + k * std::log(2 * std::numbers::pi) + k * std::log(2.0) + std::lgamma(k + 1.0);
  }
  double K = 0.5 * n * (n + 1);
  for (int k = 1; k <= n - 1; ++k) K += k * (k + 1);
  return logd - K * std::log(c);
}

/// Wave function through the GL(n) one: rows 1..2n-1 of odd index, on shifted contours.
inline IntegrandSpec build_psi_from_phi(const SpectralParams& p, std::span<const double> x, double offset_scale = 4.0) {
  p.validate();
  const int n = p.n;
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("position must have n entries");
  const double c = p.c;
  const cplx inv = 1.0 / detail::ic(c);
  IntegrandSpec s;
  s.formula = Formula::PsiFromPhiG17a;
  s.decay_rate = detail::decay_rate(n, c);
  std::vector<LinearForm> odd;
  const double top_offset = reduced_offset(n, n, c, offset_scale);
  std::vector<int> odd_vars;
  for (int j = 1; j <= n; ++j) odd_vars.push_back(s.add_var(detail::entry_name(2 * n - 1, j), top_offset));
  for (int v : odd_vars) odd.push_back(LinearForm::var(v));
  detail::add_phi(s, n, odd, x, c, offset_scale);
  // Eliminate the inner rows first.
  std::rotate(s.elimination_order.begin(), s.elimination_order.begin() + n, s.elimination_order.end());
  for (const auto& o : odd)
    for (double g : p.gamma)
      for (double pm : {1.0, -1.0}) s.gamma(inv * (o + pm * g), "G((g_odd +- g_top)/ic)");
  for (int r = 0; r < n; ++r)
    for (int t = r + 1; t < n; ++t) {
      s.inverse_gamma(inv * (odd[r] + odd[t]), "1/G((g_r + g_s)/ic)");
      s.inverse_abs_gamma_sq(0.0, inv * (odd[r] - odd[t]), "|G(diff)|^2 top odd row");
    }
  LinearForm cp;
  for (const auto& o : odd) cp += ((n + 1.0) * std::log(c) * inv) * o;
  cp.constant += reduced_route_log_constant(n, c);
  s.exponential(cp, "c^{(n+1) delta/ic}, d_n and the contour-shift constant");
  return s;
}

/// Left side of the degenerate Gustafson integral over row 2k, with rows 2k-1 (k values)
/// and 2k+1 (k+1 values) given.
inline IntegrandSpec build_gustafson_lhs(int k, std::span<const cplx> lower, std::span<const cplx> upper, double c) {
  if (k < 1 || static_cast<int>(lower.size()) != k || static_cast<int>(upper.size()) != k + 1)
    throw std::invalid_argument("Gustafson integral of order k needs k lower and k+1 upper values");
  const cplx inv = 1.0 / detail::ic(c);
  // a_i = lower/ic + 1/2 and a_{k+i} = -upper/ic + 1/2 must have positive real part.
  for (cplx v : lower)
    if (!((inv * v + 0.5).real() > 0))
      throw std::domain_error("positivity condition violated: Re(g/ic + 1/2) <= 0 for a lower-row value");
  for (cplx v : upper)
    if (!((-inv * v + 0.5).real() > 0))
      throw std::domain_error("positivity condition violated: Re(-g/ic + 1/2) <= 0 for an upper-row value");
  IntegrandSpec s;
  s.formula = Formula::GustafsonLhsG12;
  s.decay_rate = detail::decay_rate(1, c);
  std::vector<LinearForm> even, lo, up;
  for (int j = 1; j <= k; ++j) even.push_back(LinearForm::var(s.add_var(detail::entry_name(2 * k, j))));
  for (cplx v : lower) lo.push_back(LinearForm::value(v));
  for (cplx v : upper) up.push_back(LinearForm::value(v));
  detail::add_pm_pairs(s, even, lo, 1.0, c, "G((+-g_even + g_below)/ic + 1/2)");
  detail::add_pm_pairs(s, even, up, -1.0, c, "G((+-g_even - g_above)/ic + 1/2)");
  detail::add_measure_even(s, even, c, 2 * k);
  return s;
}

/// Closed-form right side of the degenerate Gustafson integral.
inline cplx gustafson_rhs(int k, std::span<const cplx> lower, std::span<const cplx> upper, double c) {
  const cplx inv = 1.0 / detail::ic(c);
  cplx lg = k * std::log(c) + k * std::log(2 * std::numbers::pi) + k * std::log(2.0) + std::lgamma(k + 1.0);
  for (std::size_t r = 0; r < lower.size(); ++r)
    for (std::size_t t = r + 1; t < lower.size(); ++t) lg += log_gamma(inv * (lower[r] + lower[t]) + 1.0);
  for (cplx a : lower)
    for (cplx b : upper) lg += log_gamma(inv * (a - b) + 1.0);
  for (std::size_t r = 0; r < upper.size(); ++r)
    for (std::size_t t = r + 1; t < upper.size(); ++t) lg += log_gamma(-inv * (upper[r] + upper[t]) + 1.0);
  return std::exp(lg);
}

/// One-particle example, transcribed on its own.
inline IntegrandSpec build_example_n1(double gamma21, double c, double x1) {
  const cplx inv = 1.0 / detail::ic(c);
  IntegrandSpec s;
  s.formula = Formula::ExampleN1;
  s.decay_rate = detail::decay_rate(1, c);
  const LinearForm g = LinearForm::var(s.add_var("g1_1"));
  s.exponential((2.0 * std::log(c) * inv) * g + (-(x1 * inv)) * g, "c^{2g/ic} e^{-g x/ic}");
  s.gamma(inv * (g + LinearForm::value(gamma21)) + 0.5, "G((g21 + g11)/ic + 1/2)");
  s.gamma(inv * (g - LinearForm::value(gamma21)) + 0.5, "G((-g21 + g11)/ic + 1/2)");
  return s;
}

/// Four-fold B_2 example, transcribed on its own.
inline IntegrandSpec build_example_n2(double g41, double g42, double c, double x1, double x2) {
  const cplx inv = 1.0 / detail::ic(c);
  const cplx I(0.0, 1.0);
  IntegrandSpec s;
  s.formula = Formula::ExampleN2;
  s.decay_rate = detail::decay_rate(2, c);
  const LinearForm g11 = LinearForm::var(s.add_var("g1_1"));
  const LinearForm g21 = LinearForm::var(s.add_var("g2_1"));
  const LinearForm g31 = LinearForm::var(s.add_var("g3_1"));
  const LinearForm g32 = LinearForm::var(s.add_var("g3_2"));
  s.inverse_abs_gamma_sq(0.0, (2.0 * inv) * g21, "|G(2 g21/ic)|^2");
  s.inverse_abs_gamma_sq(0.0, inv * (g31 - g32), "|G((g31 - g32)/ic)|^2");
  s.inverse_abs_gamma_sq(1.0, inv * (g31 + g32), "|G(1 + (g31 + g32)/ic)|^2");
  const LinearForm sum = g11 + g31 + g32;
  LinearForm e = (2.0 * std::log(c) * inv) * sum;
  e += inv * ((-x1) * g11 + x2 * (g11 - g31 - g32) + LinearForm::value(I * c * x2));
  s.exponential(e, "c-power and exponential");
  for (double pm : {1.0, -1.0}) {
    s.gamma(inv * (pm * g21 + g11) + 0.5, "G((+-g21 + g11)/ic + 1/2)");
    s.gamma(inv * (pm * g21 - g31) + 0.5, "G((+-g21 - g31)/ic + 1/2)");
    s.gamma(inv * (pm * g21 - g32) + 0.5, "G((+-g21 - g32)/ic + 1/2)");
    for (double g4 : {g41, g42})
      for (const LinearForm* g3 : {&g31, &g32}) s.gamma(inv * (pm * LinearForm::value(g4) + *g3) + 0.5, "G((+-g4i + g3j)/ic + 1/2)");
  }
  return s;
}

struct IntegrandOptions {
  double offset_scale = 4.0;
};

/// Dispatch by formula id. The kernel form needs a tabulated inner wave and is built by build_kernel.
inline IntegrandSpec build_integrand(Formula f, const SpectralParams& p, std::span<const double> x,
                                     IntegrandOptions opt = {}) {
  IntegrandSpec s;
  switch (f) {
    case Formula::DirectG5: s = build_direct(p, x); break;
    case Formula::PsiFromPhiG17a: s = build_psi_from_phi(p, x, opt.offset_scale); break;
    case Formula::PhiG16a: {
      std::vector<cplx> top(p.gamma.begin(), p.gamma.end());
      s = build_phi(p.n, top, x, p.c, opt.offset_scale);
      break;
    }
    case Formula::ExampleN1:
      if (p.n != 1) throw std::invalid_argument("example_n1 needs n = 1");
      s = build_example_n1(p.gamma[0], p.c, x[0]);
      break;
    case Formula::ExampleN2:
      if (p.n != 2) throw std::invalid_argument("example_n2 needs n = 2");
      s = build_example_n2(p.gamma[0], p.gamma[1], p.c, x[0], x[1]);
      break;
    default: throw std::invalid_argument(formula_name(f) + " is not built from spectral data alone");
  }
  s.check_contour();
  return s;
}

}  // namespace gtoda::numeric
