#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtoda/numeric/integrand.hpp"

namespace gtoda::numeric {

/// Truncated trapezoid grid: nodes -L + j*step (+ shift) on every axis.
struct QuadratureGrid {
  double L = 8.0;
  double step = 0.25;
  double shift = 0.0;  // node offset, as a fraction of the fine step
  double budget = 4e9;  // refusal threshold on the estimated work

  void validate() const {
    if (!(L > 0) || !(step > 0) || !std::isfinite(L) || !std::isfinite(step))
      throw std::invalid_argument("quadrature grid needs L > 0 and step > 0");
    const double r = L / step;
    if (std::abs(r - std::round(r)) > 1e-9 * std::max(1.0, r))
      throw std::invalid_argument("quadrature grid needs L / step to be an integer");
  }
  long intervals() const { return std::lround(L / step); }
  /// Node count of the fine (step / 2) pass.
  long fine_nodes() const { return 4 * intervals() + 1; }
  double fine_node(long j) const { return -L + (j + shift) * (0.5 * step); }
};

/// Defaults: L = 25c + 5 max|g|, step = c/4.
inline QuadratureGrid default_grid(double c, double max_abs_spectral) {
  QuadratureGrid g;
  g.step = c / 4;
  g.L = std::ceil((25 * c + 5 * max_abs_spectral) / g.step) * g.step;
  return g;
}

struct IntegrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  BudgetError(double required, double budget)
      : std::runtime_error(describe(required, budget)), required(required), budget(budget) {}
  double required, budget;

 private:
  static std::string describe(double r, double b) {
    std::ostringstream os;
    os << "dimension too large for the grid budget: required evaluations ~ " << r << " exceed the budget " << b;
    return os.str();
  }
};

struct QuadratureResult {
  cplx value;        // fine pass
  cplx coarse;       // step pass
  double truncation = 0;
  double error = 0;  // |fine - coarse| + truncation
  double work = 0;
};

namespace detail {

/// Dense table over a sorted list of variables, N nodes each, row-major.
struct Table {
  std::vector<int> vars;
  std::vector<cplx> data;
};

inline std::size_t ipow(std::size_t N, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= N;
  return r;
}

inline std::vector<std::size_t> strides_for(const std::vector<int>& vars, std::size_t N) {
  std::vector<std::size_t> s(vars.size());
  std::size_t acc = 1;
  for (std::size_t p = vars.size(); p-- > 0;) {
    s[p] = acc;
    acc *= N;
  }
  return s;
}

inline std::size_t stride_of(const Table& t, int v, std::size_t N) {
  const auto s = strides_for(t.vars, N);
  for (std::size_t p = 0; p < t.vars.size(); ++p)
    if (t.vars[p] == v) return s[p];
  return 0;
}

/// Sum over v of the product of the given tables.
inline Table eliminate(const std::vector<const Table*>& ts, int v, std::size_t N) {
  std::set<int> u;
  for (const Table* t : ts)
    for (int w : t->vars)
      if (w != v) u.insert(w);
  Table out{{u.begin(), u.end()}, {}};
  const std::size_t K = out.vars.size();
  out.data.assign(ipow(N, K), 0.0);
  const std::size_t T = ts.size();
  std::vector<std::vector<std::size_t>> su(T, std::vector<std::size_t>(K));
  std::vector<std::size_t> sv(T);
  for (std::size_t a = 0; a < T; ++a) {
    sv[a] = stride_of(*ts[a], v, N);
    for (std::size_t p = 0; p < K; ++p) su[a][p] = stride_of(*ts[a], out.vars[p], N);
  }
  std::vector<std::size_t> idx(K, 0), off(T, 0);
  std::vector<const cplx*> base(T);
  for (std::size_t pos = 0; pos < out.data.size(); ++pos) {
    for (std::size_t a = 0; a < T; ++a) base[a] = ts[a]->data.data() + off[a];
    cplx acc = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      cplx prod = base[0][i * sv[0]];
      for (std::size_t a = 1; a < T; ++a) prod *= base[a][i * sv[a]];
      acc += prod;
    }
    out.data[pos] = acc;
    // Odometer step over the remaining variables.
    for (std::size_t p = K; p-- > 0;) {
      ++idx[p];
      for (std::size_t a = 0; a < T; ++a) off[a] += su[a][p];
      if (idx[p] < N) break;
      for (std::size_t a = 0; a < T; ++a) off[a] -= N * su[a][p];
      idx[p] = 0;
    }
  }
  return out;
}

/// Every other node along every axis.
inline Table restrict_even(const Table& t, std::size_t N) {
  const std::size_t Nc = (N + 1) / 2;
  Table out{t.vars, std::vector<cplx>(ipow(Nc, t.vars.size()))};
  const auto sf = strides_for(t.vars, N);
  for (std::size_t pos = 0; pos < out.data.size(); ++pos) {
    std::size_t rem = pos, src = 0;
    for (std::size_t p = t.vars.size(); p-- > 0;) {
      src += 2 * (rem % Nc) * sf[p];
      rem /= Nc;
    }
    out.data[pos] = t.data[src];
  }
  return out;
}

inline Table trapezoid_weights(int v, std::size_t N, double h) {
  Table w{{v}, std::vector<cplx>(N, h)};
  w.data.front() = w.data.back() = 0.5 * h;
  return w;
}

inline Table boundary_indicator(int v, std::size_t N) {
  Table w{{v}, std::vector<cplx>(N, 0.0)};
  w.data.front() = w.data.back() = 1.0;
  return w;
}

/// Contract all tables in the given order; returns the scalar.
inline cplx contract(std::vector<Table> tables, const std::vector<int>& order, std::size_t N) {
  for (int v : order) {
    std::vector<Table> rest, hit;
    for (auto& t : tables) {
      bool has = false;
      for (int w : t.vars) has = has || w == v;
      (has ? hit : rest).push_back(std::move(t));
    }
    if (hit.empty()) continue;
    std::vector<const Table*> ptr;
    for (const auto& t : hit) ptr.push_back(&t);
    rest.push_back(eliminate(ptr, v, N));
    tables = std::move(rest);
  }
  cplx s = 1.0;
  for (const auto& t : tables) {
    if (!t.vars.empty()) throw std::logic_error("variable missing from the elimination order");
    s *= t.data[0];
  }
  return s;
}

/// Estimated multiply-adds of one contraction.
inline double contraction_work(std::vector<std::vector<int>> sets, const std::vector<int>& order, double N) {
  double work = 0;
  for (int v : order) {
    std::set<int> u;
    std::size_t count = 0;
    std::vector<std::vector<int>> rest;
    for (auto& s : sets) {
      bool has = false;
      for (int w : s) has = has || w == v;
      if (has) {
        ++count;
        for (int w : s)
          if (w != v) u.insert(w);
      } else {
        rest.push_back(std::move(s));
      }
    }
    if (count == 0) continue;
    work += std::pow(N, static_cast<double>(u.size() + 1)) * static_cast<double>(count);
    rest.emplace_back(u.begin(), u.end());
    sets = std::move(rest);
  }
  return work;
}

/// Groups of factors sharing a support; unary and constant factors join a larger group.
struct Group {
  std::vector<int> vars;
  std::vector<const Factor*> factors;
};

inline std::vector<Group> group_factors(const IntegrandSpec& s, cplx& log_constant) {
  std::map<std::vector<int>, Group> groups;
  for (const auto& f : s.factors) {
    const auto sup = f.arg.support();
    if (sup.size() >= 2) groups[sup].vars = sup;
  }
  for (const auto& f : s.factors) {
    auto sup = f.arg.support();
    if (sup.empty()) {
      switch (f.kind) {
        case FactorKind::Gamma: log_constant += log_gamma(f.arg.constant); break;
        case FactorKind::InverseGamma: log_constant -= log_gamma(f.arg.constant); break;
        case FactorKind::Exp: log_constant += f.arg.constant; break;
      }
      continue;
    }
    if (sup.size() == 1) {
      for (auto& [k, g] : groups)
        if (std::find(k.begin(), k.end(), sup[0]) != k.end()) {
          sup = k;
          break;
        }
    }
    auto& g = groups[sup];
    g.vars = sup;
    g.factors.push_back(&f);
  }
  std::vector<Group> out;
  for (auto& [k, g] : groups) out.push_back(std::move(g));
  return out;
}

inline std::string describe_point(const IntegrandSpec& s, const std::vector<int>& vars, const std::vector<cplx>& p) {
  std::ostringstream os;
  os.precision(10);
  for (std::size_t a = 0; a < vars.size(); ++a) {
    if (a) os << ", ";
    os << s.vars[vars[a]].name << " = " << p[vars[a]].real() << (p[vars[a]].imag() < 0 ? " - " : " + ")
       << std::abs(p[vars[a]].imag()) << "i";
  }
  return os.str();
}

/// Integrand tables on the fine grid.
inline std::vector<Table> build_tables(const IntegrandSpec& s, const QuadratureGrid& g, cplx& scalar) {
  const std::size_t N = static_cast<std::size_t>(g.fine_nodes());
  std::vector<double> nodes(N);
  for (std::size_t j = 0; j < N; ++j) nodes[j] = g.fine_node(static_cast<long>(j));
  cplx log_constant = 0.0;
  const auto groups = group_factors(s, log_constant);
  std::vector<Table> tables;
  std::vector<cplx> point(s.vars.size());
  auto fill = [&](const std::vector<int>& vars, std::size_t pos) {
    std::size_t rem = pos;
    for (std::size_t p = vars.size(); p-- > 0;) {
      point[vars[p]] = cplx(nodes[rem % N], s.vars[vars[p]].offset);
      rem /= N;
    }
  };
  for (const auto& grp : groups) {
    Table t{grp.vars, std::vector<cplx>(ipow(N, grp.vars.size()))};
    // Factor logs on their own supports, broadcast into the group.
    std::vector<cplx> logs(t.data.size(), 0.0);
    std::map<std::vector<int>, std::vector<const Factor*>> by_support;
    for (const Factor* f : grp.factors) by_support[f->arg.support()].push_back(f);
    for (const auto& [sup, fs] : by_support) {
      std::vector<cplx> sub(ipow(N, sup.size()));
      for (std::size_t pos = 0; pos < sub.size(); ++pos) {
        fill(sup, pos);
        cplx acc = 0.0;
        for (const Factor* f : fs) {
          const cplx a = f->arg.eval(point);
          try {
            switch (f->kind) {
              case FactorKind::Gamma: acc += log_gamma(a); break;
              case FactorKind::InverseGamma: acc -= log_gamma(a); break;
              case FactorKind::Exp: acc += a; break;
            }
          } catch (const GammaPoleError&) {
            if (f->kind != FactorKind::InverseGamma) throw IntegrationError(
                "Gamma function pole in factor " + f->label + " at " + describe_point(s, sup, point));
            acc = cplx(-std::numeric_limits<double>::infinity(), 0.0);
            break;
          } catch (const std::domain_error& e) {
            throw IntegrationError(std::string(e.what()) + " in factor " + f->label + " at " +
                                   describe_point(s, sup, point));
          }
        }
        sub[pos] = acc;
      }
      std::vector<std::size_t> map_stride(sup.size());
      const auto gs = strides_for(grp.vars, N);
      for (std::size_t a = 0; a < sup.size(); ++a)
        for (std::size_t b = 0; b < grp.vars.size(); ++b)
          if (grp.vars[b] == sup[a]) map_stride[a] = gs[b];
      const auto ss = strides_for(sup, N);
      for (std::size_t pos = 0; pos < logs.size(); ++pos) {
        std::size_t src = 0;
        for (std::size_t a = 0; a < sup.size(); ++a) src += ((pos / map_stride[a]) % N) * ss[a];
        logs[pos] += sub[src];
      }
    }
    for (std::size_t pos = 0; pos < logs.size(); ++pos) {
      t.data[pos] = std::exp(logs[pos]);
      if (!std::isfinite(t.data[pos].real()) || !std::isfinite(t.data[pos].imag())) {
        fill(grp.vars, pos);
        throw IntegrationError("non-finite integrand value at " + describe_point(s, grp.vars, point));
      }
    }
    tables.push_back(std::move(t));
  }
  for (const auto& tf : s.tabulated) {
    std::vector<int> vars = tf.vars;
    if (!std::is_sorted(vars.begin(), vars.end())) throw std::invalid_argument("tabulated factor needs sorted variables");
    Table t{vars, std::vector<cplx>(ipow(N, vars.size()))};
    std::vector<cplx> sub(vars.size());
    for (std::size_t pos = 0; pos < t.data.size(); ++pos) {
      fill(vars, pos);
      for (std::size_t a = 0; a < vars.size(); ++a) sub[a] = point[vars[a]];
      t.data[pos] = tf.fn(sub);
      if (!std::isfinite(t.data[pos].real()) || !std::isfinite(t.data[pos].imag()))
        throw IntegrationError("non-finite value of " + tf.label + " at " + describe_point(s, vars, point));
    }
    tables.push_back(std::move(t));
  }
  scalar = std::exp(log_constant);
  return tables;
}

}  // namespace detail

/// Work estimate (integrand evaluations plus contraction multiply-adds) for a spec and grid.
inline double estimate_work(const IntegrandSpec& s, const QuadratureGrid& g) {
  const double N = static_cast<double>(g.fine_nodes());
  cplx ignore = 0.0;
  std::vector<std::vector<int>> sets;
  double eval = 0;
  for (const auto& grp : detail::group_factors(s, ignore)) {
    sets.push_back(grp.vars);
    eval += std::pow(N, static_cast<double>(grp.vars.size())) * (1.0 + static_cast<double>(grp.factors.size()));
  }
  for (const auto& t : s.tabulated) {
    sets.push_back(t.vars);
    eval += std::pow(N, static_cast<double>(t.vars.size()));
  }
  for (int v = 0; v < s.dimension(); ++v) sets.push_back({v});
  const double fine = detail::contraction_work(sets, s.elimination_order, N);
  const double coarse = detail::contraction_work(sets, s.elimination_order, (N + 1) / 2);
  return eval + fine + (1.0 + s.dimension()) * coarse;
}

/// Truncated tensor trapezoid over the offset contour, with step halving and a tail bound.
inline QuadratureResult integrate(const IntegrandSpec& s, const QuadratureGrid& g) {
  g.validate();
  const int d = s.dimension();
  QuadratureResult r;
  r.work = estimate_work(s, g);
  if (r.work > g.budget) throw BudgetError(r.work, g.budget);
  if (d == 0) {
    r.value = r.coarse = s.value({});
    return r;
  }
  const std::size_t N = static_cast<std::size_t>(g.fine_nodes());
  const std::size_t Nc = (N + 1) / 2;
  cplx scalar = 1.0;
  std::vector<detail::Table> fine = detail::build_tables(s, g, scalar);
  std::vector<detail::Table> coarse;
  for (const auto& t : fine) coarse.push_back(detail::restrict_even(t, N));

  auto with_weights = [&](std::vector<detail::Table> ts, std::size_t n, double h, int boundary_var) {
    for (int v = 0; v < d; ++v)
      ts.push_back(v == boundary_var ? detail::boundary_indicator(v, n) : detail::trapezoid_weights(v, n, h));
    return ts;
  };
  r.value = scalar * detail::contract(with_weights(fine, N, 0.5 * g.step, -1), s.elimination_order, N);
  r.coarse = scalar * detail::contract(with_weights(coarse, Nc, g.step, -1), s.elimination_order, Nc);

  // Tail beyond |t| = L along each axis, with magnitudes decaying at s.decay_rate.
  std::vector<detail::Table> mag = coarse;
  for (auto& t : mag)
    for (auto& z : t.data) z = std::abs(z);
  for (int v = 0; v < d; ++v) {
    const cplx slab = detail::contract(with_weights(mag, Nc, g.step, v), s.elimination_order, Nc);
    r.truncation += std::abs(scalar) * slab.real() / s.decay_rate;
  }
  r.error = std::abs(r.value - r.coarse) + r.truncation;
  return r;
}

}  // namespace gtoda::numeric
