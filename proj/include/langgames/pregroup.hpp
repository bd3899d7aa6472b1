#pragma once

// Free pregroup types: simple types with an adjoint winding, lists of simple
// types in normal form, adjoints, the textual syntax, and the functional-type
// decision procedure.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace langgames {

/// A basic type decorated with its adjoint winding.
///
/// winding 0 is the plain type, -1 its left adjoint, +1 its right adjoint,
/// and so on. (t^r)^l = t makes the winding additive.
struct SimpleType {
  std::string name;
  int winding = 0;

  SimpleType() = default;
  SimpleType(std::string n, int w = 0) : name(std::move(n)), winding(w) {}

  SimpleType left() const { return {name, winding - 1}; }
  SimpleType right() const { return {name, winding + 1}; }
  bool is_plain() const { return winding == 0; }

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// x^(z) x^(z+1) -> 1, which covers both t^l t <= 1 and t t^r <= 1.
inline bool contracts(const SimpleType& a, const SimpleType& b) {
  return a.name == b.name && b.winding == a.winding + 1;
}

/// An element of the free pregroup, as its list of simple types. The empty
/// list is the monoidal unit.
class PregroupType {
 public:
  PregroupType() = default;
  PregroupType(std::vector<SimpleType> factors) : factors_(std::move(factors)) {}
  PregroupType(std::initializer_list<SimpleType> factors) : factors_(factors) {}

  const std::vector<SimpleType>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  const SimpleType& operator[](std::size_t i) const { return factors_[i]; }
  auto begin() const { return factors_.begin(); }
  auto end() const { return factors_.end(); }

  PregroupType& operator+=(const PregroupType& other);
  friend PregroupType operator+(PregroupType a, const PregroupType& b) { return a += b; }

  friend auto operator<=>(const PregroupType&, const PregroupType&) = default;
  friend bool operator==(const PregroupType&, const PregroupType&) = default;

 private:
  std::vector<SimpleType> factors_;
};

enum class AdjointSide { left, right };

/// Parses whitespace separated tokens `name` or `name^w`, w over {l, r}.
/// Throws InputError naming the offending token.
PregroupType parse_type(std::string_view text);

/// Inverse of parse_type: windings are written as runs of l or r.
std::string format_type(const PregroupType& t);
std::string format_simple(const SimpleType& t);

/// (ab)^l = b^l a^l and likewise on the right.
PregroupType type_adjoint(const PregroupType& t, AdjointSide side);

std::ostream& operator<<(std::ostream& os, const SimpleType& t);
std::ostream& operator<<(std::ostream& os, const PregroupType& t);

/// a_1^r ... a_k^r b c_1^l ... c_m^l with every argument basic.
struct FunctionalShape {
  std::vector<std::string> left_args;   // a_1 .. a_k, read left to right
  std::string head;
  std::vector<std::string> right_args;  // c_1 .. c_m, read left to right

  friend bool operator==(const FunctionalShape&, const FunctionalShape&) = default;
};

enum class FunctionalKind { not_functional, first_order, higher_order };

struct Functionality {
  FunctionalKind kind = FunctionalKind::not_functional;
  std::optional<FunctionalShape> shape;  // set iff kind == first_order

  bool functional() const { return kind != FunctionalKind::not_functional; }
};

/// Decides membership in the grammar  T ::= b | T^r T | T T^l  over the
/// flattened type, and extracts the first-order shape when there is one.
Functionality is_functional(const PregroupType& t);

}  // namespace langgames
