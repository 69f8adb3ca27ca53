#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace altzeta {

enum class SymbolKind : std::uint8_t {
  X = 1,       // formal series variable
  Y,           // Laplace integration variable
  S,           // Laplace dual variable (also the Laurent variable after L1)
  A,           // first function argument
  B,           // second function argument
  U,           // jet displacement in a
  V,           // jet displacement in b
  Da,          // derivative in a
  Db,          // derivative in b
  Zeta,        // single zeta value zeta(i), i >= 2
  EulerGamma,  // Euler-Mascheroni constant
  FreeCoeff,   // c_{i,j}, free coefficient of a^i b^j in a generic function
  MzvSymbol,   // Z_{i,j}, stands for zeta({1}^{i-1}, bar(j+1))
  Ds,          // derivative in s (only in the printed form of L1)
};

/// A generator of a polynomial ring. The vocabulary is closed: every symbol is
/// one of the kinds above, optionally indexed by up to two small integers.
class Symbol {
 public:
  constexpr Symbol() = default;
  constexpr Symbol(SymbolKind kind, int i = 0, int j = 0)
      : code_((static_cast<std::uint32_t>(kind) << 24) |
              ((static_cast<std::uint32_t>(i) & 0xFFFu) << 12) |
              (static_cast<std::uint32_t>(j) & 0xFFFu)) {}

  constexpr SymbolKind kind() const { return static_cast<SymbolKind>(code_ >> 24); }
  constexpr int index() const { return static_cast<int>((code_ >> 12) & 0xFFFu); }
  constexpr int index2() const { return static_cast<int>(code_ & 0xFFFu); }
  constexpr std::uint32_t code() const { return code_; }

  std::string name() const;
  /// Inverse of name(); throws UnknownGenerator for anything else.
  static Symbol parse(std::string_view name);

  friend constexpr bool operator==(Symbol a, Symbol b) { return a.code_ == b.code_; }
  friend constexpr auto operator<=>(Symbol a, Symbol b) { return a.code_ <=> b.code_; }

 private:
  std::uint32_t code_ = 0;
};

namespace sym {
inline constexpr Symbol x{SymbolKind::X};
inline constexpr Symbol y{SymbolKind::Y};
inline constexpr Symbol s{SymbolKind::S};
inline constexpr Symbol a{SymbolKind::A};
inline constexpr Symbol b{SymbolKind::B};
inline constexpr Symbol u{SymbolKind::U};
inline constexpr Symbol v{SymbolKind::V};
inline constexpr Symbol da{SymbolKind::Da};
inline constexpr Symbol db{SymbolKind::Db};
inline constexpr Symbol ds{SymbolKind::Ds};
inline constexpr Symbol euler_gamma{SymbolKind::EulerGamma};
constexpr Symbol zeta(int n) { return Symbol(SymbolKind::Zeta, n); }
constexpr Symbol coeff(int i, int j) { return Symbol(SymbolKind::FreeCoeff, i, j); }
constexpr Symbol mzv(int k, int n) { return Symbol(SymbolKind::MzvSymbol, k, n); }
}  // namespace sym

}  // namespace altzeta
