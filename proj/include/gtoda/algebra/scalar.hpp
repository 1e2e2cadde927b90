#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gtoda::algebra {

/// Gaussian rational (a + b i) / d over a common denominator d > 0 with
/// gcd(a, b, d) = 1.
///
/// Values whose parts fit in 62 bits live inline; larger ones spill into a
/// shared GMP block. A value that fits is always stored inline, so equality
/// is structural.
class Scalar {
  using i128 = __int128;
  using u128 = unsigned __int128;
  static constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

  struct Big {
    mpz_class a, b, d;
  };

 public:
  Scalar() = default;
  Scalar(long v) {  // NOLINT(google-explicit-constructor)
    if (v > -kSmallLimit && v < kSmallLimit) a_ = v;
    else set_big(mpz_class(v), mpz_class(0), mpz_class(1));
  }
  Scalar(const mpq_class& re) : Scalar(re, mpq_class(0)) {}  // NOLINT
  Scalar(const mpq_class& re, const mpq_class& im) {
    mpq_class r = re, m = im;
    r.canonicalize();
    m.canonicalize();
    const mpz_class d = lcm(mpz_class(r.get_den()), mpz_class(m.get_den()));
    set_big(r.get_num() * (d / r.get_den()), m.get_num() * (d / m.get_den()), d);
  }

  static Scalar frac(long num, long den) { return Scalar(mpq_class(num, den)); }
  static Scalar i() {
    Scalar s;
    s.b_ = 1;
    return s;
  }

  mpq_class re() const {
    mpq_class q(num_a(), den());
    q.canonicalize();
    return q;
  }
  mpq_class im() const {
    mpq_class q(num_b(), den());
    q.canonicalize();
    return q;
  }
  mpz_class num_a() const { return big_ ? big_->a : mpz_class(static_cast<long>(a_)); }
  mpz_class num_b() const { return big_ ? big_->b : mpz_class(static_cast<long>(b_)); }
  mpz_class den() const { return big_ ? big_->d : mpz_class(static_cast<long>(d_)); }

  bool is_small() const { return !big_; }
  std::int64_t small_a() const { return a_; }
  std::int64_t small_b() const { return b_; }
  std::int64_t small_d() const { return d_; }

  bool is_zero() const { return !big_ && a_ == 0 && b_ == 0; }
  bool is_one() const { return !big_ && a_ == 1 && b_ == 0 && d_ == 1; }
  bool is_real() const { return big_ ? sgn(big_->b) == 0 : b_ == 0; }

  Scalar conj() const {
    Scalar r = *this;
    if (big_) r.set_big(big_->a, -big_->b, big_->d);
    else r.b_ = -b_;
    return r;
  }

  Scalar operator-() const {
    Scalar r = *this;
    if (big_) {
      r.set_big(-big_->a, -big_->b, big_->d);
    } else {
      r.a_ = -a_;
      r.b_ = -b_;
    }
    return r;
  }

  Scalar& operator+=(const Scalar& o) { return add(o, false); }
  Scalar& operator-=(const Scalar& o) { return add(o, true); }

  Scalar& operator*=(const Scalar& o) {
    if (!big_ && !o.big_) {
      if (b_ == 0 && o.b_ == 0) {
        set_small(static_cast<i128>(a_) * o.a_, 0, static_cast<i128>(d_) * o.d_);
      } else {
        const i128 ra = static_cast<i128>(a_) * o.a_ - static_cast<i128>(b_) * o.b_;
        const i128 rb = static_cast<i128>(a_) * o.b_ + static_cast<i128>(b_) * o.a_;
        set_small(ra, rb, static_cast<i128>(d_) * o.d_);
      }
      return *this;
    }
    const mpz_class a1 = num_a(), b1 = num_b(), d1 = den();
    const mpz_class a2 = o.num_a(), b2 = o.num_b(), d2 = o.den();
    set_big(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, d1 * d2);
    return *this;
  }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    Scalar r;
    if (!big_) {
      const i128 norm = static_cast<i128>(a_) * a_ + static_cast<i128>(b_) * b_;
      r.set_small(static_cast<i128>(d_) * a_, -static_cast<i128>(d_) * b_, norm);
      return r;
    }
    const mpz_class norm = big_->a * big_->a + big_->b * big_->b;
    r.set_big(big_->d * big_->a, -big_->d * big_->b, norm);
    return r;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    if (!x.big_ && !y.big_) return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    if (!x.big_ || !y.big_) return false;
    return x.big_->a == y.big_->a && x.big_->b == y.big_->b && x.big_->d == y.big_->d;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// A total order consistent with equality (not the numeric order).
  friend bool structural_less(const Scalar& x, const Scalar& y) {
    if (!x.big_ && !y.big_) {
      if (x.a_ != y.a_) return x.a_ < y.a_;
      if (x.b_ != y.b_) return x.b_ < y.b_;
      return x.d_ < y.d_;
    }
    if (!x.big_ || !y.big_) return !x.big_;
    if (x.big_->a != y.big_->a) return x.big_->a < y.big_->a;
    if (x.big_->b != y.big_->b) return x.big_->b < y.big_->b;
    return x.big_->d < y.big_->d;
  }

  std::complex<double> to_complex() const {
    if (!big_) {
      const double d = static_cast<double>(d_);
      return {static_cast<double>(a_) / d, static_cast<double>(b_) / d};
    }
    return {re().get_d(), im().get_d()};
  }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    const mpq_class re = s.re(), im = s.im();
    const bool has_re = sgn(re) != 0;
    const bool has_im = sgn(im) != 0;
    if (!has_im) return os << re;
    if (!has_re) {
      if (im == 1) return os << "i";
      if (im == -1) return os << "-i";
      return os << im << "*i";
    }
    os << "(" << re << (sgn(im) > 0 ? "+" : "-");
    mpq_class a = abs(im);
    if (a != 1) os << a << "*";
    return os << "i)";
  }

 private:
  static u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

  static u128 gcd128(u128 x, u128 y) {
    while (y != 0) {
      if ((x >> 64) == 0 && (y >> 64) == 0)
        return std::gcd(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y));
      const u128 t = x % y;
      x = y;
      y = t;
    }
    return x;
  }

  static mpz_class to_mpz(i128 v) {
    const u128 u = uabs(v);
    mpz_class r(static_cast<unsigned long>(u >> 64));
    r <<= 64;
    r += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    if (v < 0) r = -r;
    return r;
  }

  // (a + b i) / d with d != 0.
  void set_small(i128 a, i128 b, i128 d) {
    if (d < 0) {
      a = -a;
      b = -b;
      d = -d;
    }
    big_.reset();
    if (a == 0 && b == 0) {
      a_ = b_ = 0;
      d_ = 1;
      return;
    }
    const u128 g = gcd128(gcd128(uabs(a), uabs(b)), static_cast<u128>(d));
    if (g > 1) {
      a /= static_cast<i128>(g);
      b /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (a > -kSmallLimit && a < kSmallLimit && b > -kSmallLimit && b < kSmallLimit && d < kSmallLimit) {
      a_ = static_cast<std::int64_t>(a);
      b_ = static_cast<std::int64_t>(b);
      d_ = static_cast<std::int64_t>(d);
      return;
    }
    set_big(to_mpz(a), to_mpz(b), to_mpz(d));
  }

  void set_big(mpz_class a, mpz_class b, mpz_class d) {
    if (sgn(d) < 0) {
      a = -a;
      b = -b;
      d = -d;
    }
    const mpz_class g = gcd(gcd(a, b), d);
    if (g != 1 && g != 0) {
      mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
    }
    if (sgn(a) == 0 && sgn(b) == 0) d = 1;
    auto fits = [](const mpz_class& v) { return v > -kSmallLimit && v < kSmallLimit; };
    if (fits(a) && fits(b) && fits(d)) {
      big_.reset();
      a_ = a.get_si();
      b_ = b.get_si();
      d_ = d.get_si();
      return;
    }
    big_ = std::make_shared<const Big>(Big{std::move(a), std::move(b), std::move(d)});
  }

  Scalar& add(const Scalar& o, bool subtract) {
    if (!big_ && !o.big_) {
      const i128 oa = subtract ? -static_cast<i128>(o.a_) : static_cast<i128>(o.a_);
      const i128 ob = subtract ? -static_cast<i128>(o.b_) : static_cast<i128>(o.b_);
      if (d_ == o.d_) {
        set_small(a_ + oa, b_ + ob, d_);
      } else {
        set_small(static_cast<i128>(a_) * o.d_ + oa * d_, static_cast<i128>(b_) * o.d_ + ob * d_,
                  static_cast<i128>(d_) * o.d_);
      }
      return *this;
    }
    const mpz_class a1 = num_a(), b1 = num_b(), d1 = den();
    mpz_class a2 = o.num_a(), b2 = o.num_b();
    const mpz_class d2 = o.den();
    if (subtract) {
      a2 = -a2;
      b2 = -b2;
    }
    set_big(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2);
    return *this;
  }

  std::int64_t a_ = 0, b_ = 0, d_ = 1;
  std::shared_ptr<const Big> big_;
};

/// i^p for integer p.
inline Scalar i_pow(int p) {
  switch (((p % 4) + 4) % 4) {
    case 0: return Scalar(1);
    case 1: return Scalar::i();
    case 2: return Scalar(-1);
    default: return -Scalar::i();
  }
}

}  // namespace gtoda::algebra
