#include "langgames/pregroup.hpp"

#include <algorithm>
#include <sstream>

#include "langgames/error.hpp"

namespace langgames {

PregroupType& PregroupType::operator+=(const PregroupType& other) {
  factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
  return *this;
}

namespace {

SimpleType parse_token(const std::string& token) {
  const auto caret = token.find('^');
  std::string name = token.substr(0, caret);
  if (name.empty()) {
    throw InputError("malformed type token '" + token + "': empty name");
  }
  int winding = 0;
  if (caret != std::string::npos) {
    const std::string adjoints = token.substr(caret + 1);
    if (adjoints.empty()) {
      throw InputError("malformed type token '" + token + "': nothing after '^'");
    }
    for (char c : adjoints) {
      if (c == 'l') {
        --winding;
      } else if (c == 'r') {
        ++winding;
      } else {
        throw InputError("malformed type token '" + token + "': adjoint marker '" +
                         std::string(1, c) + "' is not l or r");
      }
    }
  }
  return {std::move(name), winding};
}

}  // namespace

PregroupType parse_type(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<SimpleType> factors;
  std::string token;
  while (in >> token) factors.push_back(parse_token(token));
  return PregroupType(std::move(factors));
}

std::string format_simple(const SimpleType& t) {
  if (t.winding == 0) return t.name;
  const char marker = t.winding > 0 ? 'r' : 'l';
  return t.name + "^" + std::string(static_cast<std::size_t>(std::abs(t.winding)), marker);
}

std::string format_type(const PregroupType& t) {
  std::string out;
  for (const auto& f : t) {
    if (!out.empty()) out += ' ';
    out += format_simple(f);
  }
  return out;
}

PregroupType type_adjoint(const PregroupType& t, AdjointSide side) {
  std::vector<SimpleType> out(t.factors().rbegin(), t.factors().rend());
  for (auto& f : out) f = side == AdjointSide::left ? f.left() : f.right();
  return PregroupType(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const SimpleType& t) {
  return os << format_simple(t);
}

std::ostream& operator<<(std::ostream& os, const PregroupType& t) {
  return os << format_type(t);
}

namespace {

std::optional<FunctionalShape> first_order_shape(const PregroupType& t) {
  const auto& f = t.factors();
  std::size_t i = 0;
  FunctionalShape shape;
  while (i < f.size() && f[i].winding == 1) shape.left_args.push_back(f[i++].name);
  if (i == f.size() || f[i].winding != 0) return std::nullopt;
  shape.head = f[i++].name;
  while (i < f.size() && f[i].winding == -1) shape.right_args.push_back(f[i++].name);
  if (i != f.size()) return std::nullopt;
  return shape;
}

// derivable[k][i][j]: the substring [i, j) after k left adjoints (windings
// shifted by -k, reversed when k is odd) is generated by b | T^r T | T T^l.
// X Y with X = T^r needs X^l derivable, which is one level up; Y = T^l needs
// Y^r derivable, one level down.
bool derivable(const PregroupType& t) {
  const auto& f = t.factors();
  const int n = static_cast<int>(f.size());
  if (n == 0) return false;
  int lo = f[0].winding, hi = f[0].winding;
  for (const auto& s : f) {
    lo = std::min(lo, s.winding);
    hi = std::max(hi, s.winding);
  }
  const int levels = hi - lo + 1;
  // table[(k - lo)][i][len]
  std::vector<std::vector<std::vector<char>>> table(
      levels, std::vector<std::vector<char>>(n, std::vector<char>(n + 1, 0)));
  auto at = [&](int k, int i, int j) -> bool {
    if (k < lo || k > hi) return false;
    return table[k - lo][i][j - i] != 0;
  };
  for (int i = 0; i < n; ++i) {
    table[f[i].winding - lo][i][1] = 1;
  }
  for (int len = 2; len <= n; ++len) {
    for (int i = 0; i + len <= n; ++i) {
      const int j = i + len;
      for (int k = lo; k <= hi; ++k) {
        bool ok = false;
        for (int p = i + 1; p < j && !ok; ++p) {
          // X is the first part of the adjoint-transformed string, Y the rest.
          const bool odd = ((k % 2) + 2) % 2 == 1;
          const int xi = odd ? p : i, xj = odd ? j : p;
          const int yi = odd ? i : p, yj = odd ? p : j;
          ok = (at(k + 1, xi, xj) && at(k, yi, yj)) || (at(k, xi, xj) && at(k - 1, yi, yj));
        }
        table[k - lo][i][len] = ok ? 1 : 0;
      }
    }
  }
  return at(0, 0, n);
}

}  // namespace

Functionality is_functional(const PregroupType& t) {
  if (auto shape = first_order_shape(t)) {
    return {FunctionalKind::first_order, std::move(shape)};
  }
  if (derivable(t)) return {FunctionalKind::higher_order, std::nullopt};
  return {};
}

}  // namespace langgames
