#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gtoda/algebra/scalar.hpp"
#include "gtoda/algebra/variables.hpp"

namespace gtoda::algebra {

using Exponents = std::array<std::uint8_t, kMaxVars>;

namespace detail {

/// Arithmetic in F_p[i] / (i^2 + 1) with p = 2^61 - 1 (p = 3 mod 4, so this is
/// the field with p^2 elements). Used only to refute divisibility cheaply.
struct ModGauss {
  static constexpr std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  std::uint64_t re = 0, im = 0;

  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(x & p) + static_cast<std::uint64_t>(x >> 61);
    return r >= p ? r - p : r;
  }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t r = a + b;
    return r >= p ? r - p : r;
  }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + p - b; }
  static std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  static std::uint64_t inv(std::uint64_t a) { return pow(a, p - 2); }

  friend ModGauss operator+(ModGauss a, ModGauss b) { return {add(a.re, b.re), add(a.im, b.im)}; }
  friend ModGauss operator-(ModGauss a, ModGauss b) { return {sub(a.re, b.re), sub(a.im, b.im)}; }
  friend ModGauss operator*(ModGauss a, ModGauss b) {
    return {sub(mul(a.re, b.re), mul(a.im, b.im)), add(mul(a.re, b.im), mul(a.im, b.re))};
  }
  ModGauss inverse() const {
    const std::uint64_t n = add(mul(re, re), mul(im, im));
    const std::uint64_t ni = inv(n);
    return {mul(re, ni), mul(sub(0, im), ni)};
  }
  bool is_zero() const { return re == 0 && im == 0; }

  static std::uint64_t from_signed(std::int64_t v) {
    return v >= 0 ? static_cast<std::uint64_t>(v) % p : sub(0, static_cast<std::uint64_t>(-v) % p);
  }

  // Reduction of a Gaussian rational; false when p divides the denominator.
  static bool reduce(const Scalar& s, ModGauss& out) {
    std::uint64_t a, b, d;
    if (s.is_small()) {
      a = from_signed(s.small_a());
      b = from_signed(s.small_b());
      d = from_signed(s.small_d());
    } else {
      a = mpz_fdiv_ui(s.num_a().get_mpz_t(), p);
      b = mpz_fdiv_ui(s.num_b().get_mpz_t(), p);
      d = mpz_fdiv_ui(s.den().get_mpz_t(), p);
    }
    if (d == 0) return false;
    if (d != 1) {
      const std::uint64_t di = inv(d);
      a = mul(a, di);
      b = mul(b, di);
    }
    out = {a, b};
    return true;
  }

  // Fixed pseudo-random evaluation point, one value per slot.
  static ModGauss point(std::size_t slot) {
    std::uint64_t z = 0x9e3779b97f4a7c15ULL * (slot + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return {z % p, (z >> 7) % p};
  }
};

}  // namespace detail

inline int compare_exponents(const Exponents& a, const Exponents& b) {
  return std::memcmp(a.data(), b.data(), kMaxVars);
}

struct ExpGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return compare_exponents(a, b) > 0;
  }
};

/// Sparse multivariate polynomial over Q(i).
///
/// Terms are kept strictly decreasing in lexicographic exponent order with
/// no zero coefficients, so two equal polynomials have equal term vectors.
class Polynomial {
 public:
  struct Term {
    Exponents exp{};
    Scalar coef;
  };

  Polynomial() = default;
  Polynomial(const Scalar& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.push_back({Exponents{}, c});
  }
  Polynomial(long c) : Polynomial(Scalar(c)) {}  // NOLINT

  static Polynomial var(int slot, const Scalar& coef = Scalar(1)) {
    Polynomial p;
    if (coef.is_zero()) return p;
    Term t{Exponents{}, coef};
    t.exp[slot] = 1;
    p.terms_.push_back(std::move(t));
    return p;
  }
  static Polynomial var(const VarIndex& v) { return var(v.slot()); }
  static Polynomial h() { return var(0); }
  static Polynomial gamma(int row, int col) { return var(gamma_slot(row, col)); }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponents{});
  }
  Scalar constant_value() const {
    if (terms_.empty()) return Scalar(0);
    return terms_.back().exp == Exponents{} ? terms_.back().coef : Scalar(0);
  }
  const Term& leading() const { return terms_.front(); }

  int total_degree() const {
    int d = 0;
    for (const auto& t : terms_) {
      int s = 0;
      for (auto e : t.exp) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  /// Bitmask of slots that occur with positive degree.
  std::uint32_t support() const {
    std::uint32_t m = 0;
    for (const auto& t : terms_)
      for (std::size_t s = 0; s < kMaxVars; ++s)
        if (t.exp[s]) m |= (1u << s);
    return m;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = merge(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = merge(*this, o, true); }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    if (s.is_one()) return *this;
    for (auto& t : terms_) t.coef *= s;
    return *this;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_constant()) return a * b.terms_[0].coef;
    if (a.is_constant()) return b * a.terms_[0].coef;
    // Sort exponent keys of all pairwise products, then sum each run.
    std::vector<std::pair<Exponents, std::uint32_t>> keys;
    keys.reserve(a.size() * b.size());
    const auto nb = static_cast<std::uint32_t>(b.size());
    for (std::uint32_t i = 0; i < a.size(); ++i) {
      for (std::uint32_t j = 0; j < nb; ++j) {
        Exponents e;
        for (std::size_t s = 0; s < kMaxVars; ++s)
          e[s] = static_cast<std::uint8_t>(a.terms_[i].exp[s] + b.terms_[j].exp[s]);
        keys.emplace_back(e, i * nb + j);
      }
    }
    std::sort(keys.begin(), keys.end(),
              [](const auto& x, const auto& y) { return compare_exponents(x.first, y.first) > 0; });
    Polynomial r;
    for (std::size_t k = 0; k < keys.size();) {
      std::size_t end = k + 1;
      while (end < keys.size() && keys[end].first == keys[k].first) ++end;
      Scalar c = a.terms_[keys[k].second / nb].coef * b.terms_[keys[k].second % nb].coef;
      for (std::size_t m = k + 1; m < end; ++m)
        c += a.terms_[keys[m].second / nb].coef * b.terms_[keys[m].second % nb].coef;
      if (!c.is_zero()) r.terms_.push_back({keys[k].first, std::move(c)});
      k = end;
    }
    return r;
  }

  Polynomial pow(int e) const {
    Polynomial r(1);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
      if (a.terms_[k].exp != b.terms_[k].exp || a.terms_[k].coef != b.terms_[k].coef) return false;
    }
    return true;
  }

  /// Total order used to key denominator factors.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
      int c = compare_exponents(a.terms_[k].exp, b.terms_[k].exp);
      if (c != 0) return c > 0;
      const auto& x = a.terms_[k].coef;
      const auto& y = b.terms_[k].coef;
      if (x != y) return structural_less(x, y);
    }
    return a.size() < b.size();
  }

  /// p(..., x_slot + amount, ...).
  Polynomial shifted(int slot, const Polynomial& amount) const {
    if (amount.is_zero()) return *this;
    int maxdeg = 0;
    for (const auto& t : terms_) maxdeg = std::max<int>(maxdeg, t.exp[slot]);
    if (maxdeg == 0) return *this;
    // (x + a)^e = sum_k C(e,k) x^(e-k) a^k
    std::vector<Polynomial> apow(maxdeg + 1);
    apow[0] = Polynomial(1);
    for (int k = 1; k <= maxdeg; ++k) apow[k] = apow[k - 1] * amount;
    std::vector<Term> out;
    for (const auto& t : terms_) {
      const int e = t.exp[slot];
      mpz_class binom = 1;
      for (int k = 0; k <= e; ++k) {
        if (k > 0) binom = binom * (e - k + 1) / k;
        Scalar c = t.coef * Scalar(mpq_class(binom));
        for (const auto& at : apow[k].terms_) {
          Term nt;
          nt.exp = t.exp;
          nt.exp[slot] = static_cast<std::uint8_t>(e - k);
          for (std::size_t s = 0; s < kMaxVars; ++s) nt.exp[s] = static_cast<std::uint8_t>(nt.exp[s] + at.exp[s]);
          nt.coef = c * at.coef;
          out.push_back(std::move(nt));
        }
      }
    }
    return from_unsorted(std::move(out));
  }

  /// Substitution x_s -> (-1)^{bit s of mask} x_s.
  Polynomial sign_flipped(std::uint32_t mask) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) {
      int parity = 0;
      for (std::size_t s = 0; s < kMaxVars; ++s)
        if ((mask >> s) & 1u) parity += t.exp[s];
      if (parity & 1) t.coef = -t.coef;
    }
    return r;
  }

  /// General substitution; slots absent from the map stay in place.
  Polynomial substitute(const std::map<int, Polynomial>& repl) const {
    Polynomial out;
    std::map<std::pair<int, int>, Polynomial> cache;
    auto power = [&](int slot, int e) -> const Polynomial& {
      auto key = std::make_pair(slot, e);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
      return cache.emplace(key, repl.at(slot).pow(e)).first->second;
    };
    std::vector<Term> acc;
    for (const auto& t : terms_) {
      Term base{t.exp, t.coef};
      Polynomial factor(1);
      for (const auto& [slot, r] : repl) {
        if (t.exp[slot]) {
          factor *= power(slot, t.exp[slot]);
          base.exp[slot] = 0;
        }
      }
      for (const auto& ft : factor.terms_) {
        Term nt;
        for (std::size_t s = 0; s < kMaxVars; ++s) nt.exp[s] = static_cast<std::uint8_t>(base.exp[s] + ft.exp[s]);
        nt.coef = base.coef * ft.coef;
        acc.push_back(std::move(nt));
      }
    }
    return from_unsorted(std::move(acc));
  }

  /// Exact quotient this / d, or nullopt when d does not divide.
  std::optional<Polynomial> exact_div(const Polynomial& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return Polynomial();
    if (d.is_constant()) return *this * d.terms_[0].coef.inverse();
    const Term& lt = d.terms_.front();
    const Scalar lt_inv = lt.coef.inverse();
    std::map<Exponents, Scalar, ExpGreater> rem;
    for (const auto& t : terms_) rem.emplace(t.exp, t.coef);
    std::vector<Term> quot;
    while (!rem.empty()) {
      auto it = rem.begin();
      Term q;
      for (std::size_t s = 0; s < kMaxVars; ++s) {
        if (it->first[s] < lt.exp[s]) return std::nullopt;
        q.exp[s] = static_cast<std::uint8_t>(it->first[s] - lt.exp[s]);
      }
      q.coef = it->second * lt_inv;
      for (const auto& dt : d.terms_) {
        Exponents e;
        for (std::size_t s = 0; s < kMaxVars; ++s) e[s] = static_cast<std::uint8_t>(q.exp[s] + dt.exp[s]);
        Scalar c = q.coef * dt.coef;
        auto [pos, inserted] = rem.emplace(e, -c);
        if (!inserted) {
          pos->second -= c;
          if (pos->second.is_zero()) rem.erase(pos);
        }
      }
      quot.push_back(std::move(q));
    }
    Polynomial r;
    r.terms_ = std::move(quot);  // generated in decreasing order
    return r;
  }

  /// True when d is linear and provably does not divide *this: d = a x_v + l
  /// divides iff the polynomial vanishes on x_v = -l / a, which is tested at a
  /// point of that hyperplane over a finite field. A nonzero value is a proof;
  /// zero is inconclusive.
  bool refutes_linear_divisor(const Polynomial& d) const {
    auto image = modular_image();
    return image && refutes_linear_divisor(d, *image);
  }

  /// Coefficients reduced into the finite field, or nullopt if some
  /// denominator vanishes there.
  std::optional<std::vector<detail::ModGauss>> modular_image() const {
    std::vector<detail::ModGauss> out(terms_.size());
    for (std::size_t k = 0; k < terms_.size(); ++k)
      if (!detail::ModGauss::reduce(terms_[k].coef, out[k])) return std::nullopt;
    return out;
  }

  bool refutes_linear_divisor(const Polynomial& d, const std::vector<detail::ModGauss>& image) const {
    if (d.total_degree() != 1) return false;
    std::size_t v = kMaxVars;
    for (std::size_t s = 0; s < kMaxVars && v == kMaxVars; ++s)
      if (d.terms_.front().exp[s]) v = s;
    std::array<detail::ModGauss, kMaxVars> pt;
    for (std::size_t s = 0; s < kMaxVars; ++s) pt[s] = detail::ModGauss::point(s);
    detail::ModGauss lead, rest;
    for (const auto& t : d.terms_) {
      detail::ModGauss c;
      if (!detail::ModGauss::reduce(t.coef, c)) return false;
      std::size_t var = kMaxVars;
      for (std::size_t s = 0; s < kMaxVars; ++s)
        if (t.exp[s]) var = s;
      if (var == v) lead = c;
      else rest = rest + (var == kMaxVars ? c : c * pt[var]);
    }
    if (lead.is_zero()) return false;
    pt[v] = detail::ModGauss{} - rest * lead.inverse();
    std::array<std::vector<detail::ModGauss>, kMaxVars> powers;
    detail::ModGauss acc;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      detail::ModGauss m = image[k];
      for (std::size_t s = 0; s < kMaxVars; ++s) {
        const int e = terms_[k].exp[s];
        if (!e) continue;
        auto& pw = powers[s];
        if (pw.empty()) pw.push_back(detail::ModGauss{1, 0});
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * pt[s]);
        m = m * pw[e];
      }
      acc = acc + m;
    }
    return !acc.is_zero();
  }

  Scalar eval(std::span<const Scalar> point) const {
    Scalar acc(0);
    for (const auto& t : terms_) {
      Scalar m = t.coef;
      for (std::size_t s = 0; s < kMaxVars; ++s)
        for (int k = 0; k < t.exp[s]; ++k) m *= point[s];
      acc += m;
    }
    return acc;
  }

  std::complex<double> eval(std::span<const std::complex<double>> point) const {
    std::complex<double> acc = 0;
    for (const auto& t : terms_) {
      std::complex<double> m = t.coef.to_complex();
      for (std::size_t s = 0; s < kMaxVars; ++s)
        for (int k = 0; k < t.exp[s]; ++k) m *= point[s];
      acc += m;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      if (!first) os << " + ";
      first = false;
      bool mono = false;
      std::ostringstream m;
      for (std::size_t s = 0; s < kMaxVars; ++s) {
        if (!t.exp[s]) continue;
        if (mono) m << "*";
        m << VarIndex::from_slot(static_cast<int>(s)).name();
        if (t.exp[s] > 1) m << "^" << int(t.exp[s]);
        mono = true;
      }
      if (!mono) {
        os << t.coef;
      } else if (t.coef.is_one()) {
        os << m.str();
      } else {
        os << t.coef << "*" << m.str();
      }
    }
    return os.str();
  }

  static Polynomial from_unsorted(std::vector<Term> v) {
    std::vector<std::uint32_t> order(v.size());
    for (std::uint32_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&v](std::uint32_t a, std::uint32_t b) { return compare_exponents(v[a].exp, v[b].exp) > 0; });
    Polynomial r;
    for (std::size_t k = 0; k < order.size();) {
      std::size_t end = k + 1;
      while (end < order.size() && v[order[end]].exp == v[order[k]].exp) ++end;
      Term t = std::move(v[order[k]]);
      for (std::size_t m = k + 1; m < end; ++m) t.coef += v[order[m]].coef;
      if (!t.coef.is_zero()) r.terms_.push_back(std::move(t));
      k = end;
    }
    return r;
  }

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c;
      if (i == a.size()) c = -1;
      else if (j == b.size()) c = 1;
      else c = compare_exponents(a.terms_[i].exp, b.terms_[j].exp);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        Term t = b.terms_[j++];
        if (subtract) t.coef = -t.coef;
        r.terms_.push_back(std::move(t));
      } else {
        Scalar s = subtract ? a.terms_[i].coef - b.terms_[j].coef : a.terms_[i].coef + b.terms_[j].coef;
        if (!s.is_zero()) r.terms_.push_back({a.terms_[i].exp, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

}  // namespace gtoda::algebra
