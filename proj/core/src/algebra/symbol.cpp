#include "altzeta/algebra/symbol.hpp"

#include <charconv>

#include "altzeta/algebra/errors.hpp"

namespace altzeta {

std::string Symbol::name() const {
  switch (kind()) {
    case SymbolKind::X: return "x";
    case SymbolKind::Y: return "y";
    case SymbolKind::S: return "s";
    case SymbolKind::A: return "a";
    case SymbolKind::B: return "b";
    case SymbolKind::U: return "u";
    case SymbolKind::V: return "v";
    case SymbolKind::Da: return "da";
    case SymbolKind::Db: return "db";
    case SymbolKind::Ds: return "ds";
    case SymbolKind::Zeta: return "zeta" + std::to_string(index());
    case SymbolKind::EulerGamma: return "gamma";
    case SymbolKind::FreeCoeff:
      return "c" + std::to_string(index()) + "_" + std::to_string(index2());
    case SymbolKind::MzvSymbol:
      return "Z" + std::to_string(index()) + "_" + std::to_string(index2());
  }
  return "?";
}

namespace {

bool parse_int(std::string_view t, int& out) {
  if (t.empty()) return false;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  return ec == std::errc() && p == t.data() + t.size() && out >= 0 && out < 4096;
}

bool parse_pair(std::string_view t, int& i, int& j) {
  auto us = t.find('_');
  if (us == std::string_view::npos) return false;
  return parse_int(t.substr(0, us), i) && parse_int(t.substr(us + 1), j);
}

}  // namespace

Symbol Symbol::parse(std::string_view n) {
  if (n == "x") return sym::x;
  if (n == "y") return sym::y;
  if (n == "s") return sym::s;
  if (n == "a") return sym::a;
  if (n == "b") return sym::b;
  if (n == "u") return sym::u;
  if (n == "v") return sym::v;
  if (n == "da") return sym::da;
  if (n == "db") return sym::db;
  if (n == "ds") return sym::ds;
  if (n == "gamma") return sym::euler_gamma;
  int i = 0, j = 0;
  if (n.starts_with("zeta") && parse_int(n.substr(4), i) && i >= 2) return sym::zeta(i);
  if (n.starts_with("c") && parse_pair(n.substr(1), i, j)) return sym::coeff(i, j);
  if (n.starts_with("Z") && parse_pair(n.substr(1), i, j)) return sym::mzv(i, j);
  throw UnknownGenerator("unknown generator '" + std::string(n) + "'");
}

}  // namespace altzeta
