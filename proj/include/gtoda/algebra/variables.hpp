#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gtoda::algebra {

/// Dense variable slots shared by every polynomial.
///
/// Slot 0 is the formal step h (= ic). Gelfand-Tsetlin entries gamma_{row,col}
/// follow row by row; row r holds (r + 1) / 2 entries. Auxiliary symbols
/// (extra unit-modulus constants attached to Whittaker vectors) come last.
inline constexpr std::size_t kMaxVars = 24;
inline constexpr int kMaxRow = 7;
inline constexpr int kMaxAux = 3;

constexpr int row_size(int row) { return (row + 1) / 2; }

constexpr int row_offset(int row) {
  int off = 1;
  for (int r = 1; r < row; ++r) off += row_size(r);
  return off;
}

inline constexpr int kAuxOffset = row_offset(kMaxRow + 1);
static_assert(kAuxOffset + kMaxAux <= static_cast<int>(kMaxVars));

struct VarIndex {
  enum class Kind : std::uint8_t { H, Gamma, Aux };
  Kind kind = Kind::H;
  int row = 0;
  int col = 0;

  static VarIndex h() { return {Kind::H, 0, 0}; }
  static VarIndex gamma(int row, int col) {
    if (row < 1 || row > kMaxRow)
      throw std::out_of_range("gamma row " + std::to_string(row) + " outside 1.." +
                              std::to_string(kMaxRow));
    if (col < 1 || col > row_size(row))
      throw std::out_of_range("gamma(" + std::to_string(row) + "," + std::to_string(col) +
                              "): column exceeds row length " + std::to_string(row_size(row)));
    return {Kind::Gamma, row, col};
  }
  static VarIndex aux(int j) {
    if (j < 1 || j > kMaxAux) throw std::out_of_range("aux symbol index out of range");
    return {Kind::Aux, 0, j};
  }

  int slot() const {
    switch (kind) {
      case Kind::H: return 0;
      case Kind::Gamma: return row_offset(row) + col - 1;
      case Kind::Aux: return kAuxOffset + col - 1;
    }
    return 0;
  }

  static VarIndex from_slot(int slot) {
    if (slot == 0) return h();
    if (slot >= kAuxOffset) return aux(slot - kAuxOffset + 1);
    for (int r = 1; r <= kMaxRow; ++r) {
      if (slot < row_offset(r + 1)) return gamma(r, slot - row_offset(r) + 1);
    }
    throw std::out_of_range("invalid variable slot");
  }

  std::string name() const {
    switch (kind) {
      case Kind::H: return "h";
      case Kind::Gamma: return "g" + std::to_string(row) + "_" + std::to_string(col);
      case Kind::Aux: return "u" + std::to_string(col);
    }
    return "?";
  }

  friend bool operator==(const VarIndex&, const VarIndex&) = default;
};

inline int gamma_slot(int row, int col) { return VarIndex::gamma(row, col).slot(); }

/// Row of a slot, or 0 for h / auxiliary symbols.
inline int slot_row(int slot) {
  const VarIndex v = VarIndex::from_slot(slot);
  return v.kind == VarIndex::Kind::Gamma ? v.row : 0;
}

}  // namespace gtoda::algebra
