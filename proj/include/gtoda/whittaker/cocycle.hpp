#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtoda/algebra/shift_operator.hpp"

namespace gtoda::whittaker {

using algebra::Polynomial;
using algebra::RationalFunction;
using algebra::Scalar;
using algebra::Shift;
using algebra::ShiftOperator;

enum class Side { Left, Right };     // w_n, w'_n
enum class Frame { Gamma, Nu };      // original entries, or odd rows re-signed

enum class CocycleMutation {
  None,
  FlipFirstExponential,  // sign of the exponential prefactor attached to row 2
};

struct ShiftRatio {
  RationalFunction up;    // w(x + h e_v) / w(x)
  RationalFunction down;  // w(x - h e_v) / w(x)
};

/// One Gamma factor (ic)^{z/ic} Gamma(z/ic + 1/2) with z = sa x_a + sb x_b.
struct PairFactor {
  int sa, slot_a, sb, slot_b;
};

/// exp(quarter_turns * pi/(2c) * sum of the row's entries).
struct ExpFactor {
  int quarter_turns;
  int row;
};

/// Factorized description of a Whittaker vector.
struct WhittakerProduct {
  int n = 1;
  Side side = Side::Left;
  Frame frame = Frame::Gamma;
  std::vector<PairFactor> pairs;
  std::vector<ExpFactor> exps;
  bool extra_units = false;  // one auxiliary symbol u_j per odd row 2j-1
};

/// Sign sigma with gamma_{2k-1} = sigma * nu_{2k-1}.
inline int odd_row_sign(int row) { return (((row + 1) / 2) % 2 == 1) ? 1 : -1; }

/// Mask of the sign flips relating the two frames (odd rows with sigma = -1).
inline std::uint32_t frame_mask(int n) {
  std::uint32_t m = 0;
  for (int row = 1; row <= 2 * n; row += 2)
    if (odd_row_sign(row) < 0)
      for (int j = 1; j <= algebra::row_size(row); ++j) m |= 1u << algebra::gamma_slot(row, j);
  return m;
}

namespace detail {

inline void add_s(WhittakerProduct& w, int row_x, int sx, int row_y, int sy) {
  for (int a = 1; a <= algebra::row_size(row_x); ++a)
    for (int b = 1; b <= algebra::row_size(row_y); ++b)
      w.pairs.push_back({sx, algebra::gamma_slot(row_x, a), sy, algebra::gamma_slot(row_y, b)});
}

}  // namespace detail

/// Factor list of w_n / w'_n in the chosen frame.
inline WhittakerProduct whittaker_product(int n, Side side, Frame frame,
                                          CocycleMutation mutation = CocycleMutation::None) {
  if (n < 1 || 2 * n > algebra::kMaxRow)
    throw std::invalid_argument("Whittaker vector rank n = " + std::to_string(n) + " outside 1.." +
                                std::to_string(algebra::kMaxRow / 2));
  WhittakerProduct w;
  w.n = n;
  w.side = side;
  w.frame = frame;
  const int flip = side == Side::Left ? 1 : -1;
  w.exps.push_back({-n, 2 * n});
  for (int k = 1; k <= n; ++k) {
    const int sigma = flip * ((k % 2 == 1) ? 1 : -1);  // sign of W_k / V_n
    if (frame == Frame::Gamma) {
      w.exps.push_back({-sigma, 2 * k});
      detail::add_s(w, 2 * k - 1, sigma, 2 * k, 1);
      if (k < n) detail::add_s(w, 2 * k, -1, 2 * k + 1, sigma);
    } else {
      // Written directly in nu: s(nu_{2k-1}, g_{2k}) s(-g_{2k}, -nu_{2k+1}) on the left,
      // s(-nu_{2k-1}, g_{2k}) s(-g_{2k}, nu_{2k+1}) on the right.
      const int parity = (k % 2 == 0) ? 1 : -1;
      w.exps.push_back({flip * parity, 2 * k});
      detail::add_s(w, 2 * k - 1, flip, 2 * k, 1);
      if (k < n) detail::add_s(w, 2 * k, -1, 2 * k + 1, -flip);
    }
  }
  if (mutation == CocycleMutation::FlipFirstExponential) {
    for (auto& e : w.exps)
      if (e.row == 2) {
        e.quarter_turns = -e.quarter_turns;
        break;
      }
  }
  return w;
}

/// Exact shift ratios of a Whittaker vector, one pair per variable.
class WhittakerCocycle {
 public:
  WhittakerCocycle() = default;

  explicit WhittakerCocycle(const WhittakerProduct& prod) : n_(prod.n), side_(prod.side), frame_(prod.frame) {
    const Polynomial h = Polynomial::h();
    const Scalar half = Scalar::frac(1, 2);
    for (int row = 1; row <= 2 * n_; ++row) {
      for (int col = 1; col <= algebra::row_size(row); ++col) {
        const int v = algebra::gamma_slot(row, col);
        std::vector<Polynomial> up_num, up_den, dn_num, dn_den;
        for (const auto& p : prod.pairs) {
          int sv = 0;
          if (p.slot_a == v) sv = p.sa;
          if (p.slot_b == v) sv = p.sb;
          if (sv == 0) continue;
          const Polynomial z = Polynomial::var(p.slot_a, Scalar(p.sa)) + Polynomial::var(p.slot_b, Scalar(p.sb));
          if (sv > 0) {
            up_num.push_back(z + h * half);
            dn_den.push_back(z - h * half);
          } else {
            up_den.push_back(z - h * half);
            dn_num.push_back(z + h * half);
          }
        }
        int turns = 0;
        for (const auto& e : prod.exps)
          if (e.row == row) turns += e.quarter_turns;
        ShiftRatio r{RationalFunction::make(algebra::i_pow(turns), up_num, up_den),
                     RationalFunction::make(algebra::i_pow(-turns), dn_num, dn_den)};
        if (prod.extra_units && row % 2 == 1) {
          const Polynomial u = Polynomial::var(algebra::VarIndex::aux((row + 1) / 2));
          r.up = r.up * RationalFunction(u);
          r.down = r.down / RationalFunction(u);
        }
        ratios_.emplace(v, std::move(r));
      }
    }
  }

  int n() const { return n_; }
  Side side() const { return side_; }
  Frame frame() const { return frame_; }
  const std::map<int, ShiftRatio>& ratios() const { return ratios_; }

  const ShiftRatio& ratio(int slot) const {
    auto it = ratios_.find(slot);
    if (it == ratios_.end())
      throw std::invalid_argument("shift of " + algebra::VarIndex::from_slot(slot).name() +
                                  " is outside the Whittaker vector's variables");
    return it->second;
  }

  /// w(x + s h) / w(x) as a product of unit steps, each evaluated at the
  /// point reached so far.
  RationalFunction multiplier(const Shift& s) const {
    RationalFunction acc(1);
    Shift reached{};
    for (std::size_t v = 1; v < algebra::kMaxVars; ++v) {
      const int steps = s[v];
      if (steps == 0) continue;
      const ShiftRatio& r = ratio(static_cast<int>(v));
      const int dir = steps > 0 ? 1 : -1;
      for (int k = 0; k < steps * dir; ++k) {
        acc = acc * algebra::apply_shift(dir > 0 ? r.up : r.down, reached);
        reached[v] = static_cast<std::int8_t>(reached[v] + dir);
      }
    }
    return acc;
  }

 private:
  int n_ = 0;
  Side side_ = Side::Left;
  Frame frame_ = Frame::Gamma;
  std::map<int, ShiftRatio> ratios_;
};

inline WhittakerCocycle build_whittaker_cocycle(int n, Side side, Frame frame,
                                                CocycleMutation mutation = CocycleMutation::None,
                                                bool extra_units = false) {
  WhittakerProduct p = whittaker_product(n, side, frame, mutation);
  p.extra_units = extra_units;
  return WhittakerCocycle(p);
}

/// M with op(w) = M w.
inline RationalFunction act_on_whittaker(const ShiftOperator& op, const WhittakerCocycle& w) {
  std::vector<RationalFunction> parts;
  for (const auto& [s, c] : op.terms()) parts.push_back(c * w.multiplier(s));
  return RationalFunction::sum(parts);
}

}  // namespace gtoda::whittaker
