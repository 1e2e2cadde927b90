// One line per acceptance criterion. Exit status 0 iff every criterion has its pinned outcome.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gtoda/gt/verify.hpp"
#include "gtoda/numeric/checks.hpp"
#include "gtoda/whittaker/verify.hpp"

using namespace gtoda;
using namespace gtoda::numeric;
using namespace gtoda::whittaker;

namespace {

// Pinned tolerances and time limits.
constexpr double kSerreSeconds = 300;
constexpr double kGustafsonTolK1 = 1e-6;
constexpr double kGustafsonTolK2 = 1e-4;
constexpr double kGustafsonSeconds = 60;
constexpr double kTodaTolN1 = 1e-4;
constexpr double kTodaTolN2 = 1e-3;
constexpr double kTodaSeconds = 20 * 60;
constexpr double kRouteTol = 1e-3;
constexpr double kPropertySeconds = 10 * 60;
constexpr int kA8MaxM = 6;
constexpr int kA8Samples = 100;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
  bool known_deviation = false;  // expected to fail; see the README
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome all_pass(const std::vector<Report>& reps, double elapsed = -1, double limit = -1) {
  std::size_t total = 0, bad = 0;
  std::string first_bad;
  for (const auto& r : reps)
    for (const auto& rec : r.records) {
      ++total;
      if (!rec.pass) {
        ++bad;
        if (first_bad.empty()) first_bad = rec.id;
      }
    }
  bool ok = bad == 0 && total > 0;
  std::string d = std::to_string(total - bad) + "/" + std::to_string(total) + " records pass";
  if (!first_bad.empty()) d += ", first failure " + first_bad;
  if (elapsed >= 0) {
    d += ", " + fmt(elapsed) + " s";
    if (limit > 0) {
      d += " (limit " + fmt(limit) + " s)";
      ok = ok && elapsed < limit;
    }
  }
  return {ok, d};
}

Outcome serre() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Report> reps;
  for (int N = 3; N <= 7; ++N) reps.push_back(gt::verify_serre(N));
  return all_pass(reps, seconds_since(t0), kSerreSeconds);
}

Outcome tau() {
  std::vector<Report> reps;
  for (int N = 3; N <= 7; ++N) reps.push_back(gt::verify_tau(N));
  return all_pass(reps);
}

Outcome lemma_a1() {
  std::vector<Report> reps;
  for (int n = 1; n <= 3; ++n) reps.push_back(gt::verify_lemma_a1(n));
  return all_pass(reps);
}

Outcome theorem_one() {
  std::vector<Report> stated, derived;
  for (int n = 1; n <= 3; ++n)
    for (Side side : {Side::Left, Side::Right}) {
      stated.push_back(to_report("stated", verify_whittaker_eigen(n, side, Frame::Gamma)));
      derived.push_back(to_report("derived", verify_whittaker_eigen(n, side, Frame::Gamma, CocycleMutation::None,
                                                                    SimpleRootReference::Derived)));
    }
  bool mutation_detected = true;
  for (int n = 2; n <= 3; ++n) {
    bool broke = false;
    for (const auto& e : verify_whittaker_eigen(n, Side::Left, Frame::Gamma, CocycleMutation::FlipFirstExponential,
                                                SimpleRootReference::Derived))
      broke = broke || !e.pass;
    mutation_detected = mutation_detected && broke;
  }
  const Outcome s = all_pass(stated), d = all_pass(derived);
  return {s.pass && mutation_detected,
          "stated character (-1)^{k+1}/h: " + s.detail + "; derived character -1/h: " + d.detail +
              "; mutation " + (mutation_detected ? "detected" : "NOT detected")};
}

Outcome lemma_a2() {
  std::vector<Report> reps;
  for (int n = 1; n <= 3; ++n) reps.push_back(to_report("j", verify_j_action(n)));
  return all_pass(reps);
}

Outcome cartan() {
  std::vector<Report> reps;
  for (int n = 1; n <= 3; ++n)
    for (Frame f : {Frame::Gamma, Frame::Nu}) reps.push_back(to_report("cartan", verify_cartan_action(n, f)));
  return all_pass(reps);
}

Outcome partial_fraction() { return all_pass({gt::verify_partial_fraction(kA8MaxM, kA8Samples)}); }

Outcome gustafson() {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.records.push_back(check_gustafson({1, {0.4}, {-0.5, 0.9}, 1.0}, kGustafsonTolK1));
  rep.records.push_back(check_gustafson({1, {-0.2}, {0.3, 1.1}, 0.7}, kGustafsonTolK1));
  rep.records.push_back(check_gustafson({2, {0.3, -0.8}, {0.5, -0.1, 1.2}, 1.0}, kGustafsonTolK2));
  rep.records.push_back(check_gustafson({2, {0.45, 0.2}, {-0.6, 0.15, 0.9}, 1.2}, kGustafsonTolK2));
  double worst = 0;
  for (const auto& r : rep.records) worst = std::max(worst, *r.residual);
  Outcome o = all_pass({rep}, seconds_since(t0), kGustafsonSeconds);
  o.detail += ", worst relative error " + fmt(worst);
  return o;
}

Outcome toda() {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  double worst1 = 0, worst2 = 0;
  const std::vector<std::pair<double, double>> n1{{-0.3, 1.0}, {0.0, 1.0}, {0.8, 1.0}, {-1.2, 0.7}, {0.5, 1.4}};
  struct N2 {
    SpectralParams p;
    std::vector<double> x;
    Route route;
  };
  const std::vector<N2> n2{{{2, {0.6, 1.1}, 1.0}, {0.2, -0.4}, Route::Direct},
                           {{2, {0.3, 0.9}, 1.2}, {-0.1, 0.5}, Route::Gustafson}};
  for (Gauge g : {Gauge::AsPrinted, Gauge::Tilde}) {
    for (auto [x, c] : n1) {
      TodaCheckSpec t;
      t.params = {1, {0.7}, c};
      t.x = {x};
      t.gauge = g;
      t.tolerance = kTodaTolN1;
      rep.records.push_back(check_toda_equation(t));
      worst1 = std::max(worst1, *rep.records.back().residual);
    }
    for (const auto& pt : n2) {
      TodaCheckSpec t;
      t.params = pt.p;
      t.x = pt.x;
      t.route = pt.route;
      t.gauge = g;
      t.tolerance = kTodaTolN2;
      rep.records.push_back(check_toda_equation(t));
      worst2 = std::max(worst2, *rep.records.back().residual);
    }
  }
  Outcome o = all_pass({rep}, seconds_since(t0), kTodaSeconds);
  o.detail += ", worst residual n=1 " + fmt(worst1) + ", n=2 " + fmt(worst2);
  return o;
}

Outcome routes() {
  Report all;
  double worst = 0;
  const std::vector<double> x1{0.2, -0.4}, x2{0.5, 0.1};
  for (const auto& [p, x] : {std::pair{SpectralParams{2, {0.6, 1.1}, 1.0}, x1},
                             std::pair{SpectralParams{2, {0.45, 0.8}, 0.8}, x2}}) {
    const auto cmp = compare_routes(p, x, {}, kRouteTol);
    for (const auto& r : cmp.report.records) {
      all.records.push_back(r);
      worst = std::max(worst, *r.residual);
    }
  }
  Outcome o = all_pass({all});
  o.detail += ", worst pairwise relative difference " + fmt(worst);
  return o;
}

Outcome properties() {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  auto add = [&](std::string id, bool pass, std::string detail) {
    CheckRecord r;
    r.id = std::move(id);
    r.pass = pass;
    r.note = std::move(detail);
    rep.records.push_back(r);
  };
  // Reality and Weyl invariance.
  {
    const std::vector<double> x{0.25};
    const auto a = eval_wave({1, {0.7}, 1.1}, x, Route::Direct);
    const auto b = eval_wave({1, {-0.7}, 1.1}, x, Route::Direct);
    add("weyl.n1", std::abs(a.value - b.value) <= a.error_estimate + b.error_estimate, "");
    add("reality.n1", std::abs(a.value.imag()) <= a.error_estimate, "");
  }
  {
    const std::vector<double> x{0.1, -0.2};
    const auto base = eval_wave({2, {0.5, 1.0}, 1.0}, x, Route::Gustafson);
    add("reality.n2", std::abs(base.value.imag()) <= base.error_estimate, "");
    for (const auto& g : std::vector<std::vector<double>>{{1.0, 0.5}, {-0.5, 1.0}, {-1.0, -0.5}}) {
      const auto w = eval_wave({2, g, 1.0}, x, Route::Gustafson);
      add("weyl.n2", std::abs(w.value - base.value) <= w.error_estimate + base.error_estimate, "");
      add("reality.n2", std::abs(w.value.imag()) <= w.error_estimate, "");
    }
  }
  // Cocycle consistency and locality.
  for (int n = 1; n <= 3; ++n) {
    const Report c = verify_cocycle(n);
    add("cocycle.n" + std::to_string(n), c.all_pass(), "");
  }
  // Quadrature self-consistency under step halving.
  for (const auto& [p, x, route] : {std::tuple{SpectralParams{1, {0.7}, 1.0}, std::vector<double>{-0.3}, Route::Direct},
                                    std::tuple{SpectralParams{2, {0.6, 1.1}, 1.0}, std::vector<double>{0.2, -0.4},
                                               Route::Gustafson}}) {
    const auto a = eval_wave(p, x, route);
    WaveOptions opt;
    opt.grid = a.grid;
    opt.grid->step /= 2;
    opt.grid->budget = 1e11;
    const auto b = eval_wave(p, x, route, opt);
    add("halving.n" + std::to_string(p.n), std::abs(a.value - b.value) < a.error_estimate, "");
  }
  return all_pass({rep}, seconds_since(t0), kPropertySeconds);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Serre relations so(3..7)", serre},
      {2, "tau conjugation so(3..7)", tau},
      {3, "Lemma A1 closed forms n=1..3", lemma_a1},
      {4, "simple-root eigen-equations at the stated character n=1..3, mutation", theorem_one, true},
      {5, "J relations n=1..3", lemma_a2},
      {6, "Cartan action n=1..3", cartan},
      {7, "partial-fraction identity m=1..6 x 100 samples", partial_fraction},
      {8, "degenerate Gustafson identity k=1,2", gustafson},
      {9, "Toda eigen-equation n=1 (5 pts), n=2 (2 pts), both gauges", toda},
      {10, "route equivalence n=2 (2 pts)", routes},
      {11, "property suites", properties},
  };
  bool as_pinned = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const char* verdict = o.pass ? "PASS" : (c.known_deviation ? "FAIL (known deviation)" : "FAIL");
    std::printf("[%s] %2d %s: %s\n", verdict, c.id, c.title.c_str(), o.detail.c_str());
    std::fflush(stdout);
    as_pinned = as_pinned && (o.pass != c.known_deviation);
  }
  std::printf("%s\n", as_pinned ? "acceptance: all criteria at their pinned outcome"
                                : "acceptance: an outcome differs from its pinned value");
  return as_pinned ? 0 : 1;
}
