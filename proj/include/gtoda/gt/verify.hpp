#pragma once

#include <algorithm>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gtoda/gt/generators.hpp"
#include "gtoda/report.hpp"

namespace gtoda::gt {

/// Bitmask of the sign-flip automorphism tau: h and every even-row entry.
inline std::uint32_t tau_mask() {
  std::uint32_t m = 1u;
  for (int row = 2; row <= algebra::kMaxRow; row += 2)
    for (int col = 1; col <= algebra::row_size(row); ++col) m |= 1u << algebra::gamma_slot(row, col);
  return m;
}

inline ShiftOperator tau_conjugate(const ShiftOperator& op) { return op.conjugated_by_flip(tau_mask()); }

inline CheckRecord operator_identity(std::string id, const ShiftOperator& lhs, const ShiftOperator& rhs,
                                     std::string expected_label) {
  CheckRecord r;
  r.id = std::move(id);
  r.expected = std::move(expected_label);
  const ShiftOperator diff = lhs - rhs;
  r.pass = diff.is_zero();
  r.computed = r.pass ? "0 remainder" : "remainder with " + std::to_string(diff.size()) + " shift terms";
  return r;
}

inline void require_rank(int N, int lo, int hi, const std::string& what) {
  require(N >= lo && N <= hi, std::to_string(lo) + " <= N <= " + std::to_string(hi),
          what + " with N = " + std::to_string(N));
}

/// Defining relations among the simple generators of so(N).
inline Report verify_serre(int N, Mutation mutation = Mutation::None) {
  require_rank(N, 3, algebra::kMaxRow + 1, "verify_serre");
  GeneratorTable t(N, mutation);
  Report rep;
  rep.command = "verify serre N=" + std::to_string(N);
  for (int i = 1; i + 2 <= N; ++i) {
    const ShiftOperator& a = t.I(i + 1, i);
    const ShiftOperator& b = t.I(i + 2, i + 1);
    const std::string tag = "[" + std::to_string(i) + "]";
    rep.records.push_back(operator_identity("serre.lower" + tag, commutator(a, commutator(b, a)), b,
                                            "[I(i+1,i),[I(i+2,i+1),I(i+1,i)]] = I(i+2,i+1)"));
    rep.records.push_back(operator_identity("serre.upper" + tag, commutator(b, commutator(a, b)), a,
                                            "[I(i+2,i+1),[I(i+1,i),I(i+2,i+1)]] = I(i+1,i)"));
  }
  for (int i = 1; i < N; ++i)
    for (int j = i + 2; j < N; ++j) {
      rep.records.push_back(operator_identity(
          "serre.commute[" + std::to_string(i) + "," + std::to_string(j) + "]",
          commutator(t.I(i + 1, i), t.I(j + 1, j)), ShiftOperator{}, "[I(i+1,i),I(j+1,j)] = 0"));
    }
  return rep;
}

/// tau I tau = -I on simple generators, and tau F_{j,j+1} tau = F_{j+1,j}.
inline Report verify_tau(int N) {
  require_rank(N, 3, algebra::kMaxRow + 1, "verify_tau");
  GeneratorTable t(N);
  Report rep;
  rep.command = "verify tau N=" + std::to_string(N);
  for (int m = 1; m < N; ++m) {
    const ShiftOperator& op = t.I(m + 1, m);
    rep.records.push_back(operator_identity("tau.simple[" + std::to_string(m) + "]", tau_conjugate(op), -op,
                                            "tau I(m+1,m) tau = -I(m+1,m)"));
  }
  const int n = N / 2;
  for (int j = 1; j < n; ++j) {
    rep.records.push_back(operator_identity("tau.F[" + std::to_string(j) + "]", tau_conjugate(F_raise(t, j)),
                                            F_lower(t, j), "tau F(j,j+1) tau = F(j+1,j)"));
  }
  if (N % 2 == 1) {
    rep.records.push_back(operator_identity("tau.F[" + std::to_string(n) + "]",
                                            tau_conjugate(F_last_raise_unnormalized(t, n)),
                                            F_last_lower_unnormalized(t, n), "tau F(n,n+1) tau = F(n+1,n)"));
  } else if (n >= 2) {
    rep.records.push_back(operator_identity("tau.Ffar[" + std::to_string(n - 1) + "]",
                                            tau_conjugate(F_far_raise(t, n - 1)), F_far_lower(t, n - 1),
                                            "tau F(n-1,n+1) tau = F(n+1,n-1)"));
  }
  return rep;
}

/// Closed forms of the non-simple generators through P and J, against commutators.
inline Report verify_lemma_a1(int n) {
  require(n >= 1 && n <= 3, "1 <= n <= 3", "verify_lemma_a1 with n = " + std::to_string(n));
  GeneratorTable t(2 * n + 1);
  Report rep;
  rep.command = "verify lemma-a1 n=" + std::to_string(n);
  for (int k = 1; k <= n; ++k) {
    ShiftOperator sum;
    for (int j = 1; j <= k; ++j)
      for (int eps : {1, -1}) sum = sum + compose(P(k, j, eps), J(k - 1, 1, j, eps));
    rep.records.push_back(operator_identity("a1.odd[" + std::to_string(k) + "]", sum, t.I(2 * k + 1, 2 * k - 1),
                                            "I(2k+1,2k-1) = sum P J(k-1,+1)"));
  }
  for (int k = 1; k <= n - 1; ++k) {
    ShiftOperator even, cross;
    for (int j = 1; j <= k; ++j)
      for (int eps : {1, -1}) {
        const ShiftOperator pj = compose(P(k, j, eps), J(k, -1, j, eps));
        even = even - pj;
        cross = cross - compose(pj, J(k - 1, 1, j, eps));
      }
    rep.records.push_back(operator_identity("a1.even[" + std::to_string(k) + "]", even, t.I(2 * k + 2, 2 * k),
                                            "I(2k+2,2k) = -sum P J(k,-1)"));
    rep.records.push_back(operator_identity("a1.cross[" + std::to_string(k) + "]", cross,
                                            t.I(2 * k + 2, 2 * k - 1), "I(2k+2,2k-1) = -sum P J(k,-1) J(k-1,+1)"));
  }
  // tau parity of the commutator-built generators up to span 3: tau I(a,b) tau = (-1)^{a-b} I(a,b).
  // Longer spans grow factorially in shift terms (I(7,2) of so(7) does not fit in memory).
  for (int a = 2; a <= 2 * n + 1; ++a)
    for (int b = std::max(1, a - 3); b < a; ++b) {
      const ShiftOperator& op = t.I(a, b);
      const ShiftOperator expect = ((a - b) % 2 == 0) ? op : -op;
      rep.records.push_back(operator_identity("a1.parity[" + std::to_string(a) + "," + std::to_string(b) + "]",
                                              tau_conjugate(op), expect, "tau I(a,b) tau = (-1)^(a-b) I(a,b)"));
    }
  return rep;
}

/// sum_i prod_j (x_i - y_j) / prod_{r != i} (x_i - x_r) == 1, exactly.
inline bool check_partial_fraction_identity(int m, std::span<const Scalar> xs, std::span<const Scalar> ys) {
  require(m >= 1, "m >= 1", "partial fraction identity with m = " + std::to_string(m));
  require(static_cast<int>(xs.size()) == m && static_cast<int>(ys.size()) == m - 1, "|xs| = m, |ys| = m - 1",
          "partial fraction identity sizes");
  Scalar total(0);
  for (int i = 0; i < m; ++i) {
    Scalar num(1), den(1);
    for (int j = 0; j < m - 1; ++j) num *= xs[i] - ys[j];
    for (int r = 0; r < m; ++r) {
      if (r == i) continue;
      const Scalar d = xs[i] - xs[r];
      if (d.is_zero())
        throw IndexRangeError("x values pairwise distinct",
                              "repeated x value at positions " + std::to_string(r) + " and " + std::to_string(i));
      den *= d;
    }
    total += num / den;
  }
  return total == Scalar(1);
}

/// Random Gaussian rational p/q + i r/s with small numerators.
inline Scalar random_gaussian_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  return Scalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

inline Report verify_partial_fraction(int max_m, int samples, std::uint64_t seed = 20240611) {
  Report rep;
  rep.command = "check a8";
  std::mt19937_64 rng(seed);
  for (int m = 1; m <= max_m; ++m) {
    int ok = 0;
    for (int s = 0; s < samples; ++s) {
      std::vector<Scalar> xs, ys;
      while (static_cast<int>(xs.size()) < m) {
        Scalar x = random_gaussian_rational(rng);
        bool fresh = true;
        for (const auto& y : xs) fresh = fresh && !(y == x);
        if (fresh) xs.push_back(x);
      }
      for (int j = 0; j + 1 < m; ++j) ys.push_back(random_gaussian_rational(rng));
      ok += check_partial_fraction_identity(m, xs, ys) ? 1 : 0;
    }
    CheckRecord r;
    r.id = "a8[m=" + std::to_string(m) + "]";
    r.expected = std::to_string(samples) + "/" + std::to_string(samples) + " samples equal 1";
    r.computed = std::to_string(ok) + "/" + std::to_string(samples);
    r.pass = ok == samples;
    rep.records.push_back(r);
  }
  return rep;
}

}  // namespace gtoda::gt
