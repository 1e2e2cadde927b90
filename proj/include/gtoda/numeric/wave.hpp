#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gtoda/numeric/quadrature.hpp"

namespace gtoda::numeric {

enum class Route { Direct, Recursive, Gustafson };

inline std::string route_name(Route r) {
  switch (r) {
    case Route::Direct: return "direct";
    case Route::Recursive: return "recursive";
    case Route::Gustafson: return "gustafson";
  }
  return "?";
}

inline Route parse_route(const std::string& s) {
  if (s == "direct") return Route::Direct;
  if (s == "recursive") return Route::Recursive;
  if (s == "gustafson") return Route::Gustafson;
  throw std::invalid_argument("unknown route '" + s + "' (expected direct, recursive or gustafson)");
}

struct WaveOptions {
  std::optional<QuadratureGrid> grid;  // defaults from the spectral data when absent
  double offset_scale = 4.0;           // contour heights of the Gustafson route, in units of c/8
  double interpolation_step = 0.025;   // recursive route, in units of c
  double budget = 4e9;
};

struct WaveSample {
  SpectralParams params;
  std::vector<double> x;
  Route route = Route::Direct;
  cplx value;
  double error_estimate = 0;
  QuadratureGrid grid;
};

inline QuadratureGrid wave_grid(const SpectralParams& p, const WaveOptions& opt) {
  QuadratureGrid g;
  if (opt.grid) {
    g = *opt.grid;
  } else {
    double m = 0;
    for (double v : p.gamma) m = std::max(m, std::abs(v));
    g = default_grid(p.c, m);
    g.budget = opt.budget;
  }
  g.validate();
  return g;
}

/// One-particle wave function psi(gamma; y) for many y at once: the Gamma part is shared.
class RankOneWave {
 public:
  RankOneWave(double gamma, double c) : c_(c) {
    const QuadratureGrid g = default_grid(c, std::abs(gamma));
    const long N = g.fine_nodes();
    const cplx inv = 1.0 / cplx(0.0, c);
    nodes_.resize(N);
    logs_.resize(N);
    for (long j = 0; j < N; ++j) {
      nodes_[j] = g.fine_node(j);
      logs_[j] = log_gamma(inv * (nodes_[j] + gamma) + 0.5) + log_gamma(inv * (nodes_[j] - gamma) + 0.5) +
                 2.0 * std::log(c) * inv * nodes_[j];
    }
    h_ = 0.5 * g.step;
  }

  cplx operator()(double y) const {
    const cplx inv = 1.0 / cplx(0.0, c_);
    cplx s = 0.0;
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
      const double w = (j == 0 || j + 1 == nodes_.size()) ? 0.5 : 1.0;
      s += w * std::exp(logs_[j] - inv * y * nodes_[j]);
    }
    return s * h_;
  }

 private:
  double c_, h_;
  std::vector<double> nodes_;
  std::vector<cplx> logs_;
};

/// Inner wave function of the recursive route, tabulated lazily on a uniform lattice in its
/// argument y and interpolated with cubic polynomials; lattice points are returned exactly.
class InnerWaveCache {
 public:
  InnerWaveCache(double c, double anchor, double spacing) : c_(c), anchor_(anchor), dy_(spacing) {}

  cplx operator()(double gamma, double y) {
    auto& slot = per_gamma_[gamma];
    if (!slot.wave) slot.wave = std::make_unique<RankOneWave>(gamma, c_);
    const double u = (y - anchor_) / dy_;
    const double m = std::round(u);
    if (std::abs(u - m) < 1e-9) return node(slot, static_cast<long>(m));
    const long m0 = static_cast<long>(std::floor(u));
    const double t = u - m0;
    // Lagrange weights on m0-1 .. m0+2.
    const double w[4] = {-t * (t - 1) * (t - 2) / 6, (t + 1) * (t - 1) * (t - 2) / 2, -(t + 1) * t * (t - 2) / 2,
                         (t + 1) * t * (t - 1) / 6};
    cplx s = 0.0;
    for (int a = 0; a < 4; ++a) s += w[a] * node(slot, m0 - 1 + a);
    return s;
  }

  std::size_t tabulated_points() const {
    std::size_t n = 0;
    for (const auto& [g, s] : per_gamma_) n += s.values.size();
    return n;
  }

 private:
  struct Slot {
    std::unique_ptr<RankOneWave> wave;
    std::map<long, cplx> values;
  };
  cplx node(Slot& s, long m) {
    auto it = s.values.find(m);
    if (it != s.values.end()) return it->second;
    const cplx v = (*s.wave)(anchor_ + m * dy_);
    s.values.emplace(m, v);
    return v;
  }

  double c_, anchor_, dy_;
  std::map<double, Slot> per_gamma_;
};

/// Lattice for the inner argument: the spacing of the requested points when they are
/// already equally spaced and fine enough, else the configured spacing.
inline std::pair<double, double> inner_lattice(const std::vector<double>& ys, double c, double default_step) {
  std::vector<double> s = ys;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }), s.end());
  const double fallback = default_step * c;
  if (s.size() < 2) return {ys.front(), fallback};
  double gap = s[1] - s[0];
  for (std::size_t i = 2; i < s.size(); ++i) gap = std::min(gap, s[i] - s[i - 1]);
  if (gap > 2 * fallback) return {ys.front(), fallback};
  for (double y : s) {
    const double u = (y - s[0]) / gap;
    if (std::abs(u - std::round(u)) > 1e-6) return {ys.front(), fallback};
  }
  return {ys.front(), gap};
}

namespace detail {

inline WaveSample finish(const SpectralParams& p, std::span<const double> x, Route r, const QuadratureGrid& g,
                         const QuadratureResult& q) {
  return {p, std::vector<double>(x.begin(), x.end()), r, q.value, q.error, g};
}

inline void check_position(const SpectralParams& p, std::span<const double> x) {
  p.validate();
  if (static_cast<int>(x.size()) != p.n) throw std::invalid_argument("position must have n entries");
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument("positions must be finite");
}

inline WaveSample eval_recursive(const SpectralParams& p, std::span<const double> x, const QuadratureGrid& g,
                                 InnerWaveCache& cache) {
  if (p.n != 2) throw std::invalid_argument("the recursive route is implemented for n = 2 (n = 1 is the direct one)");
  const double y = x[0] - x[1];
  IntegrandSpec s = build_kernel(p, x[1], [&cache, y](std::span<const cplx> lower) {
    return cache(lower[0].real(), y);
  });
  s.check_contour();
  return finish(p, x, Route::Recursive, g, integrate(s, g));
}

}  // namespace detail

/// Wave functions at many positions; the recursive route shares one inner cache.
inline std::vector<WaveSample> eval_wave_batch(const SpectralParams& p, const std::vector<std::vector<double>>& xs,
                                               Route route, const WaveOptions& opt = {}) {
  std::vector<WaveSample> out;
  if (xs.empty()) return out;
  for (const auto& x : xs) detail::check_position(p, x);
  const QuadratureGrid g = wave_grid(p, opt);
  if (route == Route::Recursive && p.n == 1) route = Route::Direct;
  if (route == Route::Recursive) {
    std::vector<double> ys;
    for (const auto& x : xs) ys.push_back(x[0] - x[1]);
    const auto [anchor, dy] = inner_lattice(ys, p.c, opt.interpolation_step);
    InnerWaveCache cache(p.c, anchor, dy);
    for (const auto& x : xs) out.push_back(detail::eval_recursive(p, x, g, cache));
    return out;
  }
  for (const auto& x : xs) {
    IntegrandSpec s = route == Route::Direct ? build_direct(p, x) : build_psi_from_phi(p, x, opt.offset_scale);
    s.check_contour();
    out.push_back(detail::finish(p, x, route, g, integrate(s, g)));
  }
  return out;
}

inline WaveSample eval_wave(const SpectralParams& p, std::span<const double> x, Route route,
                            const WaveOptions& opt = {}) {
  auto v = eval_wave_batch(p, {std::vector<double>(x.begin(), x.end())}, route, opt);
  return v.front();
}

}  // namespace gtoda::numeric
