#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace trilie {

/// Variable families, declared in canonical order.
///
/// X0 and X(i,j) (j < i) are dual coordinates: x_{ij} pairs with e_{ji}.
/// E(i,j) (i < j) and F are their algebra-side counterparts. B(i,j) are
/// off-diagonal group parameters; BH(i,j) are formal entries of the inverse
/// group element; Y0 and Y(i,j) are algebra coordinates; Aux(i) are fresh
/// symbols (e.g. the free scalar in the Schur-complement identities).
enum class VarKind : std::uint8_t { X0, X, E, F, B, BH, Y0, Y, Aux };

class VarId {
 public:
  constexpr VarId() = default;

  static VarId x0() { return VarId(VarKind::X0, 0, 0); }
  static VarId x(int i, int j);
  static VarId e(int i, int j);
  static VarId f() { return VarId(VarKind::F, 0, 0); }
  static VarId b(int i, int j);
  static VarId bh(int i, int j);
  static VarId y0() { return VarId(VarKind::Y0, 0, 0); }
  static VarId y(int i, int j);
  static VarId aux(int i);

  /// Inverse of name(); throws Error(ParseError).
  static VarId parse(std::string_view name);

  constexpr VarKind kind() const { return kind_; }
  constexpr int i() const { return i_; }
  constexpr int j() const { return j_; }

  /// Packed key; its natural order is the canonical variable order.
  constexpr std::uint32_t code() const {
    return (static_cast<std::uint32_t>(kind_) << 16) | (static_cast<std::uint32_t>(i_) << 8) | j_;
  }

  /// "x_3_1", "x_0", "e_1_2", "f", "b_1_2", "bh_1_2", "y_0", "y_1_2", "t_1".
  std::string name() const;
  /// "x_{31}", "x_{0}", "e_{12}", "f", ... (comma-separated indices when n > 9).
  std::string latex() const;

  friend constexpr bool operator==(VarId a, VarId b) { return a.code() == b.code(); }
  friend constexpr auto operator<=>(VarId a, VarId b) { return a.code() <=> b.code(); }

 private:
  constexpr VarId(VarKind kind, int i, int j)
      : kind_(kind), i_(static_cast<std::uint8_t>(i)), j_(static_cast<std::uint8_t>(j)) {}

  VarKind kind_ = VarKind::X0;
  std::uint8_t i_ = 0;
  std::uint8_t j_ = 0;
};

}  // namespace trilie
