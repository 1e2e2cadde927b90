#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gtoda/algebra/polynomial.hpp"

namespace gtoda::algebra {

/// Rational function num / prod(f_k^{m_k}) over Q(i).
///
/// Denominator factors are stored separately, each normalized to leading
/// coefficient 1; any scalar lives in the numerator. Factors found to divide
/// the numerator are cancelled, but no multivariate gcd is computed, so two
/// equal functions may differ in representation. Compare with equals().
class RationalFunction {
 public:
  struct Factor {
    Polynomial poly;
    int mult = 1;
  };

  RationalFunction() = default;
  RationalFunction(Polynomial num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Scalar& c) : num_(c) {}               // NOLINT
  RationalFunction(long c) : num_(c) {}                        // NOLINT

  /// coef * prod(num_factors) / prod(den_factors).
  static RationalFunction make(const Scalar& coef, std::span<const Polynomial> num_factors,
                               std::span<const Polynomial> den_factors) {
    Polynomial n(coef);
    for (const auto& f : num_factors) n *= f;
    RationalFunction r(std::move(n));
    std::vector<Factor> den;
    for (const auto& f : den_factors) den.push_back({f, 1});
    r.attach(std::move(den));
    r.reduce();
    return r;
  }

  static RationalFunction quotient(const Polynomial& num, const Polynomial& den) {
    const Polynomial d[] = {den};
    return make(Scalar(1), std::span<const Polynomial>(&num, 1), d);
  }

  const Polynomial& num() const { return num_; }
  const std::vector<Factor>& den() const { return den_; }

  Polynomial den_poly() const {
    Polynomial d(1);
    for (const auto& f : den_) d *= f.poly.pow(f.mult);
    return d;
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  RationalFunction& operator*=(const Scalar& s) {
    num_ *= s;
    if (num_.is_zero()) den_.clear();
    return *this;
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RationalFunction r(a.num_ * b.num_);
    std::vector<Factor> den = a.den_;
    for (const auto& f : b.den_) den.push_back(f);
    r.attach(std::move(den));
    r.reduce();
    return r;
  }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  RationalFunction inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    RationalFunction r(den_poly());
    r.attach({Factor{num_, 1}});
    r.reduce();
    return r;
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }

  /// Exact sum of many terms over their common factored denominator.
  static RationalFunction sum(std::span<const RationalFunction> terms) {
    std::vector<const RationalFunction*> live;
    for (const auto& t : terms)
      if (!t.is_zero()) live.push_back(&t);
    if (live.empty()) return {};
    if (live.size() == 1) return *live[0];
    // Common denominator: maximum multiplicity of each factor.
    std::map<Polynomial, int> common;
    for (const auto* t : live)
      for (const auto& f : t->den_) {
        int& m = common[f.poly];
        m = std::max(m, f.mult);
      }
    std::vector<Polynomial::Term> acc;
    for (const auto* t : live) {
      Polynomial n = t->num_;
      for (const auto& [poly, m] : common) {
        int have = 0;
        for (const auto& f : t->den_)
          if (f.poly == poly) have = f.mult;
        for (int k = have; k < m; ++k) n *= poly;
      }
      for (const auto& term : n.terms()) acc.push_back(term);
    }
    RationalFunction r(Polynomial::from_unsorted(std::move(acc)));
    if (r.num_.is_zero()) return {};
    for (const auto& [poly, m] : common) r.den_.push_back({poly, m});
    r.reduce();
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    const RationalFunction t[] = {a, b};
    return sum(t);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }

  /// Exact equality: a - b has zero numerator.
  bool equals(const RationalFunction& o) const { return (*this - o).is_zero(); }

  /// f(..., x_slot + amount, ...).
  RationalFunction shifted(int slot, const Polynomial& amount) const {
    RationalFunction r(num_.shifted(slot, amount));
    std::vector<Factor> den;
    for (const auto& f : den_) den.push_back({f.poly.shifted(slot, amount), f.mult});
    r.attach(std::move(den));
    r.reduce();
    return r;
  }

  RationalFunction sign_flipped(std::uint32_t mask) const {
    RationalFunction r(num_.sign_flipped(mask));
    std::vector<Factor> den;
    for (const auto& f : den_) den.push_back({f.poly.sign_flipped(mask), f.mult});
    r.attach(std::move(den));
    return r;
  }

  RationalFunction substitute(const std::map<int, Polynomial>& repl) const {
    RationalFunction r(num_.substitute(repl));
    std::vector<Factor> den;
    for (const auto& f : den_) den.push_back({f.poly.substitute(repl), f.mult});
    r.attach(std::move(den));
    r.reduce();
    return r;
  }

  /// Exact evaluation; throws if the denominator vanishes at the point.
  Scalar eval(std::span<const Scalar> point) const {
    Scalar d(1);
    for (const auto& f : den_) {
      Scalar v = f.poly.eval(point);
      if (v.is_zero()) throw std::domain_error("rational function evaluated at a pole");
      for (int k = 0; k < f.mult; ++k) d *= v;
    }
    return num_.eval(point) / d;
  }

  std::complex<double> eval(std::span<const std::complex<double>> point) const {
    std::complex<double> d = 1;
    for (const auto& f : den_) {
      auto v = f.poly.eval(point);
      for (int k = 0; k < f.mult; ++k) d *= v;
    }
    return num_.eval(point) / d;
  }

  std::uint32_t support() const {
    std::uint32_t m = num_.support();
    for (const auto& f : den_) m |= f.poly.support();
    return m;
  }

  std::string str() const {
    if (den_.empty()) return num_.str();
    std::string s = "(" + num_.str() + ")/(";
    bool first = true;
    for (const auto& f : den_) {
      if (!first) s += "*";
      first = false;
      s += "(" + f.poly.str() + ")";
      if (f.mult > 1) s += "^" + std::to_string(f.mult);
    }
    return s + ")";
  }

 private:
  // Normalize incoming factors (monic, constants folded into the numerator)
  // and merge them into den_.
  void attach(std::vector<Factor> incoming) {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    std::map<Polynomial, int> merged;
    for (auto& f : den_) merged[f.poly] += f.mult;
    for (auto& f : incoming) {
      if (f.poly.is_zero()) throw std::domain_error("zero denominator factor");
      if (f.poly.is_constant()) {
        Scalar inv = f.poly.constant_value().inverse();
        for (int k = 0; k < f.mult; ++k) num_ *= inv;
        continue;
      }
      Scalar lc = f.poly.leading().coef;
      if (!lc.is_one()) {
        Scalar inv = lc.inverse();
        f.poly *= inv;
        for (int k = 0; k < f.mult; ++k) num_ *= inv;
      }
      merged[f.poly] += f.mult;
    }
    den_.clear();
    for (auto& [p, m] : merged)
      if (m > 0) den_.push_back({p, m});
  }

  // Cancel denominator factors that divide the numerator exactly.
  void reduce() {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    std::vector<Factor> kept;
    auto image = num_.modular_image();
    for (auto& f : den_) {
      while (f.mult > 0) {
        if (image && num_.refutes_linear_divisor(f.poly, *image)) break;
        auto q = num_.exact_div(f.poly);
        if (!q) break;
        num_ = std::move(*q);
        image = num_.modular_image();
        --f.mult;
      }
      if (f.mult > 0) kept.push_back(std::move(f));
    }
    den_ = std::move(kept);
  }

  Polynomial num_;
  std::vector<Factor> den_;  // sorted by Polynomial order, multiplicities > 0
};

}  // namespace gtoda::algebra
