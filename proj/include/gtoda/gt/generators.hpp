#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gtoda/algebra/shift_operator.hpp"

namespace gtoda::gt {

using algebra::Polynomial;
using algebra::RationalFunction;
using algebra::Scalar;
using algebra::ShiftOperator;

/// Raised when a generator index falls outside its admissible range.
class IndexRangeError : public std::invalid_argument {
 public:
  IndexRangeError(std::string what_bound, const std::string& detail)
      : std::invalid_argument(detail + " (violated bound: " + what_bound + ")"),
        bound_(std::move(what_bound)) {}
  const std::string& bound() const { return bound_; }

 private:
  std::string bound_;
};

inline void require(bool ok, const std::string& bound, const std::string& detail) {
  if (!ok) throw IndexRangeError(bound, detail);
}

/// Deliberate corruptions used by mutation-sensitivity tests.
enum class Mutation {
  None,
  FlipOddRaiseSign,  // sign of the e^{+h d} sum in I_{2k+1,2k}
};

namespace detail {

inline Polynomial g(int row, int col) { return Polynomial::gamma(row, col); }
inline Polynomial hh() { return Polynomial::h(); }
inline Polynomial half_h() { return Polynomial::h() * Scalar::frac(1, 2); }

inline void check_rows(int max_row, const std::string& what) {
  require(max_row <= algebra::kMaxRow, "row <= " + std::to_string(algebra::kMaxRow),
          what + " needs Gelfand-Tsetlin row " + std::to_string(max_row));
}

}  // namespace detail

/// P^eps_{k,j}: the eps-shift of gamma_{2k-1,j} in I_{2k+1,2k}.
inline ShiftOperator P(int k, int j, int eps, Mutation mutation = Mutation::None) {
  using namespace detail;
  require(k >= 1, "k >= 1", "P_{k,j}: k = " + std::to_string(k));
  require(j >= 1 && j <= k, "1 <= j <= k", "P_{k,j}: j = " + std::to_string(j));
  require(eps == 1 || eps == -1, "eps = +-1", "P_{k,j}");
  check_rows(2 * k, "P_{k,j}");
  const Polynomial x = g(2 * k - 1, j);
  const Scalar e(eps);
  std::vector<Polynomial> num;
  std::vector<Polynomial> den{hh()};
  for (int r = 1; r <= k - 1; ++r) num.push_back(x + e * (g(2 * k - 2, r) + half_h()));
  for (int r = 1; r <= k; ++r) num.push_back(x - e * (g(2 * k, r) - half_h()));
  for (int r = 1; r <= k; ++r) {
    if (r == j) continue;
    den.push_back(x - g(2 * k - 1, r));
    den.push_back(x + g(2 * k - 1, r) + e * hh());
  }
  Scalar coef = Scalar::frac(-1, 2);
  if (mutation == Mutation::FlipOddRaiseSign && eps == 1) coef = -coef;
  auto c = RationalFunction::make(coef, num, den);
  return ShiftOperator::term(c, algebra::unit_shift(algebra::gamma_slot(2 * k - 1, j), eps));
}

/// Q_{k,j}: the raising shift of gamma_{2k,j} in I_{2k+2,2k+1}.
inline ShiftOperator Q(int k, int j) {
  using namespace detail;
  require(k >= 1, "k >= 1", "Q_{k,j}: k = " + std::to_string(k));
  require(j >= 1 && j <= k, "1 <= j <= k", "Q_{k,j}: j = " + std::to_string(j));
  check_rows(2 * k + 1, "Q_{k,j}");
  const Polynomial y = g(2 * k, j);
  std::vector<Polynomial> num;
  std::vector<Polynomial> den{hh(), y, y + half_h()};
  for (int r = 1; r <= k + 1; ++r) {
    num.push_back(y + half_h() - g(2 * k + 1, r));
    num.push_back(y + half_h() + g(2 * k + 1, r));
  }
  for (int r = 1; r <= k; ++r) {
    if (r == j) continue;
    den.push_back(y - g(2 * k, r));
    den.push_back(y + g(2 * k, r));
  }
  auto c = RationalFunction::make(Scalar::frac(1, 2), num, den);
  return ShiftOperator::term(c, algebra::unit_shift(algebra::gamma_slot(2 * k, j), 1));
}

/// R_{k,j}: the lowering shift of gamma_{2k,j} in I_{2k+2,2k+1}.
inline ShiftOperator R(int k, int j) {
  using namespace detail;
  require(k >= 1, "k >= 1", "R_{k,j}: k = " + std::to_string(k));
  require(j >= 1 && j <= k, "1 <= j <= k", "R_{k,j}: j = " + std::to_string(j));
  check_rows(2 * k + 1, "R_{k,j}");
  const Polynomial y = g(2 * k, j);
  std::vector<Polynomial> num;
  std::vector<Polynomial> den{hh(), y, y - half_h()};
  for (int r = 1; r <= k; ++r) {
    num.push_back(y - half_h() - g(2 * k - 1, r));
    num.push_back(y - half_h() + g(2 * k - 1, r));
  }
  for (int r = 1; r <= k; ++r) {
    if (r == j) continue;
    den.push_back(y - g(2 * k, r));
    den.push_back(y + g(2 * k, r));
  }
  auto c = RationalFunction::make(Scalar::frac(1, 2), num, den);
  return ShiftOperator::term(c, algebra::unit_shift(algebra::gamma_slot(2 * k, j), -1));
}

/// T_k: the shift-free part of I_{2k+2,2k+1}; 1/c = i/h, c^2/4 = -h^2/4.
inline ShiftOperator T(int k) {
  using namespace detail;
  require(k >= 0, "k >= 0", "T_k: k = " + std::to_string(k));
  check_rows(2 * k + 1, "T_k");
  std::vector<Polynomial> num;
  std::vector<Polynomial> den{hh()};
  for (int r = 1; r <= k; ++r) num.push_back(g(2 * k - 1, r));
  for (int r = 1; r <= k + 1; ++r) num.push_back(g(2 * k + 1, r));
  for (int r = 1; r <= k; ++r) {
    den.push_back(g(2 * k, r) - half_h());
    den.push_back(g(2 * k, r) + half_h());
  }
  return ShiftOperator::multiplication(RationalFunction::make(Scalar::i(), num, den));
}

/// J^eps_{k,delta,j}: rational combination of Q, R, T attached to gamma_{2k+delta,j}.
inline ShiftOperator J(int k, int delta, int j, int eps) {
  using namespace detail;
  require(k >= 0, "k >= 0", "J_{k,delta,j}: k = " + std::to_string(k));
  require(delta == 1 || delta == -1, "delta = +-1", "J_{k,delta,j}");
  require(k > 0 || delta == 1, "delta = +1 when k = 0", "J_{0,delta,j}");
  require(eps == 1 || eps == -1, "eps = +-1", "J_{k,delta,j}");
  const int row = 2 * k + delta;
  require(j >= 1 && j <= algebra::row_size(row), "1 <= j <= |row 2k+delta|",
          "J_{k,delta,j}: j = " + std::to_string(j));
  check_rows(2 * k + 1, "J_{k,delta,j}");
  const Polynomial x = g(row, j);
  const Scalar e(eps);
  const Polynomial eh = hh() * e;
  ShiftOperator out;
  for (int s = 1; s <= k; ++s) {
    const Polynomial ys = g(2 * k, s);
    out = out + RationalFunction::quotient(eh, x - e * (ys + half_h())) * Q(k, s);
    out = out + RationalFunction::quotient(eh, x + e * (ys - half_h())) * R(k, s);
  }
  out = out + RationalFunction::quotient(eh, x) * T(k);
  return out;
}

/// I_{2k+1,2k} = sum_{eps,j} P^eps_{k,j}.
inline ShiftOperator I_odd(int k, Mutation mutation = Mutation::None) {
  ShiftOperator out;
  for (int j = 1; j <= k; ++j)
    for (int eps : {1, -1}) out = out + P(k, j, eps, mutation);
  return out;
}

/// I_{2k+2,2k+1} = sum_j Q_{k,j} + sum_j R_{k,j} + T_k.
inline ShiftOperator I_even(int k) {
  ShiftOperator out = T(k);
  for (int j = 1; j <= k; ++j) out = out + Q(k, j) + R(k, j);
  return out;
}

/// i I_{2k+2,2k+1}, the operator written out in the renormalized even-generator formula.
inline ShiftOperator iI_even(int k) { return Scalar::i() * I_even(k); }

/// Simple generator I_{m+1,m}.
inline ShiftOperator I_simple(int m, Mutation mutation = Mutation::None) {
  require(m >= 1, "m >= 1", "I_{m+1,m}: m = " + std::to_string(m));
  return (m % 2 == 1) ? I_even((m - 1) / 2) : I_odd(m / 2, mutation);
}

/// Lazily built generators I_{a,b} (a > b) of so(N); non-simple ones come
/// from nested commutators I_{a,b} = [I_{a,a-1}, I_{a-1,b}].
class GeneratorTable {
 public:
  explicit GeneratorTable(int N, Mutation mutation = Mutation::None) : N_(N), mutation_(mutation) {
    require(N >= 2 && N <= algebra::kMaxRow + 1, "2 <= N <= " + std::to_string(algebra::kMaxRow + 1),
            "so(N) with N = " + std::to_string(N));
  }

  int N() const { return N_; }

  const ShiftOperator& I(int a, int b) {
    require(a > b && b >= 1 && a <= N_, "1 <= b < a <= N",
            "I_{" + std::to_string(a) + "," + std::to_string(b) + "} in so(" + std::to_string(N_) + ")");
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    ShiftOperator op = (a == b + 1) ? I_simple(b, mutation_) : commutator(I(a, a - 1), I(a - 1, b));
    return cache_.emplace(key, std::move(op)).first->second;
  }

 private:
  int N_;
  Mutation mutation_;
  std::map<std::pair<int, int>, ShiftOperator> cache_;
};

/// F_{j,j+1} (raise) and F_{j+1,j} (lower) of so(2n, J), j = 1..n-1.
inline ShiftOperator F_raise(GeneratorTable& t, int j) {
  const Scalar half = Scalar::frac(1, 2);
  const Scalar ihalf = Scalar::i() * half;
  return half * (t.I(2 * j + 1, 2 * j) - t.I(2 * j + 2, 2 * j - 1)) +
         ihalf * (t.I(2 * j + 2, 2 * j) + t.I(2 * j + 1, 2 * j - 1));
}

inline ShiftOperator F_lower(GeneratorTable& t, int j) {
  const Scalar half = Scalar::frac(1, 2);
  const Scalar ihalf = Scalar::i() * half;
  return half * (t.I(2 * j + 2, 2 * j - 1) - t.I(2 * j + 1, 2 * j)) +
         ihalf * (t.I(2 * j + 2, 2 * j) + t.I(2 * j + 1, 2 * j - 1));
}

/// F_{j,2n-j} and F_{2n-j,j}.
inline ShiftOperator F_far_raise(GeneratorTable& t, int j) {
  const Scalar sign((j % 2 == 0) ? 1 : -1);
  const Scalar half = Scalar::frac(1, 2);
  const Scalar ihalf = Scalar::i() * half;
  return sign * (half * (-t.I(2 * j + 1, 2 * j) - t.I(2 * j + 2, 2 * j - 1)) +
                 ihalf * (t.I(2 * j + 2, 2 * j) - t.I(2 * j + 1, 2 * j - 1)));
}

inline ShiftOperator F_far_lower(GeneratorTable& t, int j) {
  const Scalar sign((j % 2 == 0) ? 1 : -1);
  const Scalar half = Scalar::frac(1, 2);
  const Scalar ihalf = Scalar::i() * half;
  return sign * (half * (t.I(2 * j + 2, 2 * j - 1) + t.I(2 * j + 1, 2 * j)) +
                 ihalf * (t.I(2 * j + 2, 2 * j) - t.I(2 * j + 1, 2 * j - 1)));
}

/// Cartan generator F_{jj} = -i I_{2j,2j-1}.
inline ShiftOperator F_cartan(GeneratorTable& t, int j) { return (-Scalar::i()) * t.I(2 * j, 2 * j - 1); }

/// sqrt(2) F_{n,n+1} of so(2n+1): I_{2n+1,2n} + i I_{2n+1,2n-1}.
inline ShiftOperator F_last_raise_unnormalized(GeneratorTable& t, int n) {
  return t.I(2 * n + 1, 2 * n) + Scalar::i() * t.I(2 * n + 1, 2 * n - 1);
}

/// sqrt(2) F_{n+1,n} of so(2n+1): -I_{2n+1,2n} + i I_{2n+1,2n-1}.
inline ShiftOperator F_last_lower_unnormalized(GeneratorTable& t, int n) {
  return Scalar::i() * t.I(2 * n + 1, 2 * n - 1) - t.I(2 * n + 1, 2 * n);
}

/// sqrt(2) j_{2n-1}(F^{2n-1}_{n-1,n}) = F^{2n}_{n-1,n} - (-1)^{n-1} F^{2n}_{n-1,n+1}.
inline ShiftOperator F_embedded_last_unnormalized(GeneratorTable& t, int n) {
  const Scalar sign(((n - 1) % 2 == 0) ? 1 : -1);
  return F_raise(t, n - 1) - sign * F_far_raise(t, n - 1);
}

// ---------------------------------------------------------------------------

enum class GeneratorKind {
  IOdd,         // I_{2k+1,2k}
  IEvenTimesI,  // i I_{2k+2,2k+1}
  P,
  Q,
  R,
  T,
  J,
  FSimple,      // j-th simple raising root generator of so(N, J)
  FCartan,      // F_{jj}
  INonsimple,   // I_{a,b}
};

struct GeneratorTag {
  GeneratorKind kind = GeneratorKind::IOdd;
  int N = 3;  // rank context so(N)
  int k = 0;
  int j = 0;
  int eps = 1;
  int delta = 1;
  int a = 0;
  int b = 0;
};

struct GeneratorResult {
  ShiftOperator op;
  std::string formula;
  /// True when the operator equals sqrt(2) times the named generator.
  bool sqrt2_omitted = false;
};

inline GeneratorResult build_generator(const GeneratorTag& tag, Mutation mutation = Mutation::None) {
  require(tag.N >= 2 && tag.N <= algebra::kMaxRow + 1, "2 <= N <= " + std::to_string(algebra::kMaxRow + 1),
          "rank context so(" + std::to_string(tag.N) + ")");
  const int N = tag.N;
  auto need = [&](int top, const std::string& what) {
    require(top <= N, "generator index <= N", what + " does not exist in so(" + std::to_string(N) + ")");
  };
  GeneratorResult out;
  switch (tag.kind) {
    case GeneratorKind::IOdd:
      require(tag.k >= 1, "k >= 1", "I_{2k+1,2k}");
      need(2 * tag.k + 1, "I_{2k+1,2k}");
      out.op = I_odd(tag.k, mutation);
      out.formula = "I_{" + std::to_string(2 * tag.k + 1) + "," + std::to_string(2 * tag.k) + "}";
      break;
    case GeneratorKind::IEvenTimesI:
      require(tag.k >= 0, "k >= 0", "iI_{2k+2,2k+1}");
      need(2 * tag.k + 2, "I_{2k+2,2k+1}");
      out.op = iI_even(tag.k);
      out.formula = "i*I_{" + std::to_string(2 * tag.k + 2) + "," + std::to_string(2 * tag.k + 1) + "}";
      break;
    case GeneratorKind::P:
      need(2 * tag.k + 1, "P_{k,j}");
      out.op = P(tag.k, tag.j, tag.eps, mutation);
      out.formula = "P^{" + std::to_string(tag.eps) + "}_{" + std::to_string(tag.k) + "," + std::to_string(tag.j) + "}";
      break;
    case GeneratorKind::Q:
      need(2 * tag.k + 2, "Q_{k,j}");
      out.op = Q(tag.k, tag.j);
      out.formula = "Q_{" + std::to_string(tag.k) + "," + std::to_string(tag.j) + "}";
      break;
    case GeneratorKind::R:
      need(2 * tag.k + 2, "R_{k,j}");
      out.op = R(tag.k, tag.j);
      out.formula = "R_{" + std::to_string(tag.k) + "," + std::to_string(tag.j) + "}";
      break;
    case GeneratorKind::T:
      need(2 * tag.k + 2, "T_k");
      out.op = T(tag.k);
      out.formula = "T_" + std::to_string(tag.k);
      break;
    case GeneratorKind::J:
      need(2 * tag.k + 2, "J_{k,delta,j}");
      out.op = J(tag.k, tag.delta, tag.j, tag.eps);
      out.formula = "J^{" + std::to_string(tag.eps) + "}_{" + std::to_string(tag.k) + "," +
                    std::to_string(tag.delta) + "," + std::to_string(tag.j) + "}";
      break;
    case GeneratorKind::FSimple: {
      const int n = N / 2;
      require(tag.j >= 1 && tag.j <= n, "1 <= j <= [N/2]", "F_simple(" + std::to_string(tag.j) + ")");
      GeneratorTable t(N, mutation);
      if (tag.j < n) {
        out.op = F_raise(t, tag.j);
        out.formula = "F_{" + std::to_string(tag.j) + "," + std::to_string(tag.j + 1) + "}";
      } else if (N % 2 == 1) {
        out.op = F_last_raise_unnormalized(t, n);
        out.formula = "sqrt2*F_{" + std::to_string(n) + "," + std::to_string(n + 1) + "}";
        out.sqrt2_omitted = true;
      } else {
        require(n >= 2, "N >= 4", "last simple root of so(2n)");
        out.op = F_far_raise(t, n - 1);
        out.formula = "F_{" + std::to_string(n - 1) + "," + std::to_string(n + 1) + "}";
      }
      break;
    }
    case GeneratorKind::FCartan: {
      require(tag.j >= 1 && 2 * tag.j <= N, "1 <= j <= [N/2]", "F_{jj}");
      GeneratorTable t(N, mutation);
      out.op = F_cartan(t, tag.j);
      out.formula = "F_{" + std::to_string(tag.j) + "," + std::to_string(tag.j) + "}";
      break;
    }
    case GeneratorKind::INonsimple: {
      GeneratorTable t(N, mutation);
      out.op = t.I(tag.a, tag.b);
      out.formula = "I_{" + std::to_string(tag.a) + "," + std::to_string(tag.b) + "}";
      break;
    }
  }
  return out;
}

}  // namespace gtoda::gt
