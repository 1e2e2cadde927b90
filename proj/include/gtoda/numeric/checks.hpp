#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "gtoda/numeric/wave.hpp"
#include "gtoda/report.hpp"

namespace gtoda::numeric {

inline std::string format_complex(cplx z, int digits = 12) {
  std::ostringstream os;
  os.precision(digits);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

inline std::string format_real(double v, int digits = 12) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

enum class Gauge { AsPrinted, Tilde };

struct TodaCheckSpec {
  SpectralParams params;
  std::vector<double> x;
  double fd_step = 0;  // 0 selects 0.01 c
  Gauge gauge = Gauge::AsPrinted;
  Route route = Route::Direct;
  double tolerance = 0;  // 0 selects 1e-4 at n = 1 and 1e-3 otherwise
  WaveOptions wave;
};

/// Energy of the Toda problem for the given gauge.
inline double toda_energy(const SpectralParams& p, Gauge gauge) {
  double e = 0;
  for (double g : p.gamma) e += g * g;
  e /= p.c * p.c;
  if (gauge == Gauge::AsPrinted) e += p.n * (2.0 * p.n - 1) * (2.0 * p.n + 1) / 12.0;
  return e;
}

/// rho_k = n - k + 1/2.
inline double half_sum(int n, int k) { return n - k + 0.5; }

struct TodaResidual {
  cplx h_psi, psi;
  double residual;
};

namespace detail {

/// Applies the Toda operator with 4th-order central differences of spacing h, from samples
/// f(x + m h e_k) for m in {-2, -1, 1, 2}, and f(x).
template <class Sample>
TodaResidual apply_toda(const TodaCheckSpec& s, double h, Sample f) {
  const int n = s.params.n;
  const double c = s.params.c;
  const cplx f0 = f(-1, 0);
  cplx hpsi = 0.0;
  for (int k = 0; k < n; ++k) {
    const cplx p2 = f(k, 2), p1 = f(k, 1), m1 = f(k, -1), m2 = f(k, -2);
    const cplx d1 = (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12 * h);
    const cplx d2 = (-p2 + 16.0 * p1 - 30.0 * f0 + 16.0 * m1 - m2) / (12 * h * h);
    hpsi += -d2;
    if (s.gauge == Gauge::AsPrinted) hpsi += (2.0 * n - 2.0 * (k + 1) + 1) * d1;
  }
  double pot = std::exp(s.x[n - 1]) / (c * c);
  for (int k = 0; k + 1 < n; ++k) pot += 2.0 / (c * c) * std::exp(s.x[k] - s.x[k + 1]);
  hpsi += pot * f0;
  const double e = toda_energy(s.params, s.gauge);
  return {hpsi, f0, std::abs(hpsi - e * f0) / std::abs(e * f0)};
}

}  // namespace detail

/// Residual |H psi - E psi| / |E psi| at spacing h, with a Richardson companion at 2h.
inline CheckRecord check_toda_equation(const TodaCheckSpec& spec) {
  const SpectralParams& p = spec.params;
  p.validate();
  if (p.n > 2) throw std::invalid_argument("Toda check supports rank n <= 2");
  if (static_cast<int>(spec.x.size()) != p.n) throw std::invalid_argument("position must have n entries");
  const double h = spec.fd_step > 0 ? spec.fd_step : 0.01 * p.c;
  const double tol = spec.tolerance > 0 ? spec.tolerance : (p.n == 1 ? 1e-4 : 1e-3);

  // Stencil offsets m h along each axis, for m in {+-1, +-2, +-4}, plus the centre.
  std::vector<std::vector<double>> pts{spec.x};
  const int ms[] = {1, -1, 2, -2, 4, -4};
  for (int k = 0; k < p.n; ++k)
    for (int m : ms) {
      auto y = spec.x;
      y[k] += m * h;
      pts.push_back(y);
    }
  const auto samples = eval_wave_batch(p, pts, spec.route, spec.wave);
  std::vector<cplx> vals;
  double qerr = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double gauge_factor = 1.0;
    if (spec.gauge == Gauge::Tilde) {
      double dot = 0;
      for (int k = 0; k < p.n; ++k) dot += half_sum(p.n, k + 1) * pts[i][k];
      gauge_factor = std::exp(-dot);
    }
    vals.push_back(gauge_factor * samples[i].value);
    qerr = std::max(qerr, samples[i].error_estimate);
  }
  auto lookup = [&](int scale) {
    return [&, scale](int k, int m) -> cplx {
      if (k < 0) return vals[0];
      const int want = m * scale;
      for (int a = 0; a < 6; ++a)
        if (ms[a] == want) return vals[1 + 6 * k + a];
      throw std::logic_error("stencil point missing");
    };
  };
  const TodaResidual r1 = detail::apply_toda(spec, h, lookup(1));
  const TodaResidual r2 = detail::apply_toda(spec, 2 * h, lookup(2));

  CheckRecord rec;
  std::ostringstream id;
  id << "toda[n=" << p.n << ",gauge=" << (spec.gauge == Gauge::Tilde ? "tilde" : "printed")
     << ",route=" << route_name(spec.route) << "]";
  rec.id = id.str();
  rec.expected = format_real(toda_energy(p, spec.gauge));
  rec.computed = format_complex(r1.h_psi / r1.psi);
  rec.residual = r1.residual;
  rec.tolerance = tol;
  rec.pass = r1.residual < tol;
  rec.note = "fd step " + format_real(h, 4) + "; residual at 2h " + format_real(r2.residual, 4) +
             "; max quadrature error estimate " + format_real(qerr, 4);
  return rec;
}

struct GustafsonCase {
  int k = 1;
  std::vector<cplx> lower, upper;
  double c = 1.0;
};

struct GustafsonOutcome {
  cplx lhs, rhs;
  double lhs_error = 0;
  double relative_error = 0;
};

inline GustafsonOutcome evaluate_gustafson(const GustafsonCase& g, std::optional<QuadratureGrid> grid = {}) {
  if (g.k < 1 || g.k > 2) throw std::invalid_argument("Gustafson check supports k = 1, 2");
  IntegrandSpec s = build_gustafson_lhs(g.k, g.lower, g.upper, g.c);
  s.check_contour();
  double m = 0;
  for (cplx v : g.lower) m = std::max(m, std::abs(v));
  for (cplx v : g.upper) m = std::max(m, std::abs(v));
  const QuadratureGrid q = grid ? *grid : default_grid(g.c, m);
  const QuadratureResult r = integrate(s, q);
  GustafsonOutcome out;
  out.lhs = r.value;
  out.lhs_error = r.error;
  out.rhs = gustafson_rhs(g.k, g.lower, g.upper, g.c);
  out.relative_error = std::abs(out.lhs - out.rhs) / std::abs(out.rhs);
  return out;
}

inline CheckRecord check_gustafson(const GustafsonCase& g, double tolerance = 0,
                                   std::optional<QuadratureGrid> grid = {}) {
  const double tol = tolerance > 0 ? tolerance : (g.k == 1 ? 1e-6 : 1e-4);
  const GustafsonOutcome o = evaluate_gustafson(g, grid);
  CheckRecord rec;
  rec.id = "gustafson[k=" + std::to_string(g.k) + ",c=" + format_real(g.c, 6) + "]";
  rec.expected = format_complex(o.rhs);
  rec.computed = format_complex(o.lhs);
  rec.residual = o.relative_error;
  rec.tolerance = tol;
  rec.pass = o.relative_error < tol;
  rec.note = "quadrature error estimate " + format_real(o.lhs_error, 4);
  return rec;
}

struct RouteComparison {
  std::vector<WaveSample> samples;  // direct, recursive, gustafson
  Report report;
};

inline RouteComparison compare_routes(const SpectralParams& p, std::span<const double> x, const WaveOptions& opt = {},
                                      double tolerance = 1e-3) {
  RouteComparison out;
  out.report.command = "compare_routes";
  for (Route r : {Route::Direct, Route::Recursive, Route::Gustafson}) out.samples.push_back(eval_wave(p, x, r, opt));
  const auto& s = out.samples;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      CheckRecord rec;
      rec.id = "routes[" + route_name(s[a].route) + " vs " + route_name(s[b].route) + "]";
      rec.expected = format_complex(s[a].value);
      rec.computed = format_complex(s[b].value);
      const double rel = std::abs(s[a].value - s[b].value) / std::abs(s[a].value);
      rec.residual = rel;
      rec.tolerance = tolerance;
      rec.pass = rel < tolerance;
      rec.note = "error estimates " + format_real(s[a].error_estimate, 4) + ", " + format_real(s[b].error_estimate, 4);
      out.report.records.push_back(rec);
    }
  return out;
}

}  // namespace gtoda::numeric
