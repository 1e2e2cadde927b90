#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gtoda/algebra/rational_function.hpp"

namespace gtoda::algebra {

/// Shift vector in units of h: exp(sum_v s_v h d/dx_v).
using Shift = std::array<std::int8_t, kMaxVars>;

inline Shift unit_shift(int slot, int amount) {
  Shift s{};
  s[slot] = static_cast<std::int8_t>(amount);
  return s;
}

/// f(x + s*h).
inline RationalFunction apply_shift(const RationalFunction& f, const Shift& s) {
  RationalFunction r = f;
  const Polynomial h = Polynomial::h();
  for (std::size_t v = 1; v < kMaxVars; ++v) {
    if (s[v] != 0) r = r.shifted(static_cast<int>(v), h * Scalar(static_cast<long>(s[v])));
  }
  return r;
}

/// Finite sum of rational coefficients times shifts, in normal form:
/// one entry per shift vector, no zero coefficients.
class ShiftOperator {
 public:
  ShiftOperator() = default;

  static ShiftOperator identity() { return multiplication(RationalFunction(1)); }

  static ShiftOperator multiplication(const RationalFunction& f) {
    ShiftOperator op;
    op.add_term(Shift{}, f);
    return op;
  }

  static ShiftOperator term(const RationalFunction& coef, const Shift& s) {
    ShiftOperator op;
    op.add_term(s, coef);
    return op;
  }

  const std::map<Shift, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Shift& s, const RationalFunction& coef) {
    if (coef.is_zero()) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
      terms_.emplace(s, coef);
      return;
    }
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }

  friend ShiftOperator operator+(const ShiftOperator& a, const ShiftOperator& b) {
    std::map<Shift, std::vector<RationalFunction>> acc;
    for (const auto& [s, c] : a.terms_) acc[s].push_back(c);
    for (const auto& [s, c] : b.terms_) acc[s].push_back(c);
    return collect(acc);
  }
  friend ShiftOperator operator-(const ShiftOperator& a, const ShiftOperator& b) { return a + (-b); }

  ShiftOperator operator-() const {
    ShiftOperator r = *this;
    for (auto& [s, c] : r.terms_) c = -c;
    return r;
  }

  friend ShiftOperator operator*(const Scalar& k, const ShiftOperator& a) {
    if (k.is_zero()) return {};
    ShiftOperator r = a;
    for (auto& [s, c] : r.terms_) c *= k;
    return r;
  }

  /// Left multiplication by a function: f * A.
  friend ShiftOperator operator*(const RationalFunction& f, const ShiftOperator& a) {
    ShiftOperator r;
    for (const auto& [s, c] : a.terms_) r.add_term(s, f * c);
    return r;
  }

  /// Composition a o b: (c_a e^{s_a}) (c_b e^{s_b}) = c_a c_b(x + s_a h) e^{s_a + s_b}.
  friend ShiftOperator compose(const ShiftOperator& a, const ShiftOperator& b) {
    std::map<Shift, std::vector<RationalFunction>> acc;
    for (const auto& [sa, ca] : a.terms_) {
      for (const auto& [sb, cb] : b.terms_) {
        Shift s;
        for (std::size_t v = 0; v < kMaxVars; ++v) s[v] = static_cast<std::int8_t>(sa[v] + sb[v]);
        acc[s].push_back(ca * apply_shift(cb, sa));
      }
    }
    return collect(acc);
  }

  friend ShiftOperator commutator(const ShiftOperator& a, const ShiftOperator& b) {
    return compose(a, b) - compose(b, a);
  }

  /// (A f)(x) = sum_terms c(x) f(x + s h).
  RationalFunction apply(const RationalFunction& f) const {
    std::vector<RationalFunction> parts;
    for (const auto& [s, c] : terms_) parts.push_back(c * apply_shift(f, s));
    return RationalFunction::sum(parts);
  }

  /// Conjugation by a sign-flip automorphism sigma (x_v -> -x_v for v in mask):
  /// sigma o A o sigma. Coefficients are substituted; a shift of a flipped
  /// variable changes sign. Flipping h itself also flips every shift.
  ShiftOperator conjugated_by_flip(std::uint32_t mask) const {
    const bool flips_h = mask & 1u;
    ShiftOperator r;
    for (const auto& [s, c] : terms_) {
      Shift t = s;
      for (std::size_t v = 1; v < kMaxVars; ++v) {
        const bool flip_v = (mask >> v) & 1u;
        if (flip_v != flips_h) t[v] = static_cast<std::int8_t>(-t[v]);
      }
      r.add_term(t, c.sign_flipped(mask));
    }
    return r;
  }

  /// Support of all coefficients and shifts, as a slot bitmask.
  std::uint32_t support() const {
    std::uint32_t m = 0;
    for (const auto& [s, c] : terms_) {
      m |= c.support();
      for (std::size_t v = 0; v < kMaxVars; ++v)
        if (s[v]) m |= (1u << v);
    }
    return m;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "[" + c.str() + "]";
      for (std::size_t v = 1; v < kMaxVars; ++v) {
        if (!s[v]) continue;
        out += "*E(" + VarIndex::from_slot(static_cast<int>(v)).name() + "," + std::to_string(s[v]) + ")";
      }
    }
    return out;
  }

 private:
  static ShiftOperator collect(std::map<Shift, std::vector<RationalFunction>>& acc) {
    ShiftOperator r;
    for (auto& [s, parts] : acc) {
      RationalFunction c = RationalFunction::sum(parts);
      if (!c.is_zero()) r.terms_.emplace(s, std::move(c));
    }
    return r;
  }

  std::map<Shift, RationalFunction> terms_;
};

}  // namespace gtoda::algebra
