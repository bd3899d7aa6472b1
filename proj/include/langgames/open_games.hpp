#pragma once

// Finite open games (strategies, play, coplay, equilibrium predicate) with
// sequential and parallel composition.
//
// Values crossing an interface are flat tuples: an interface lists the
// factor names of its move and utility sets, a value of arity 0 is Unit, of
// arity 1 the bare component, and otherwise a list with one entry per
// factor. Tensoring interfaces concatenates factor lists, so composite
// values never nest. Strategy profiles follow the same convention, with
// strategically trivial games contributing no component.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace langgames {

struct Unit {
  friend bool operator==(Unit, Unit) { return true; }
  friend std::strong_ordering operator<=>(Unit, Unit) { return std::strong_ordering::equal; }
};

class Value;
using ValueList = std::vector<Value>;

class Value {
 public:
  using Storage = std::variant<Unit, bool, std::int64_t, double, std::string, ValueList>;

  Value() = default;
  Value(Unit) {}
  Value(bool b) : v_(b) {}
  Value(int i) : v_(static_cast<std::int64_t>(i)) {}
  Value(std::int64_t i) : v_(i) {}
  Value(std::size_t i) : v_(static_cast<std::int64_t>(i)) {}
  Value(double d) : v_(d) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(const char* s) : v_(std::string(s)) {}
  Value(ValueList l) : v_(std::move(l)) {}

  static Value list(std::initializer_list<Value> xs) { return Value(ValueList(xs)); }

  bool is_unit() const { return std::holds_alternative<Unit>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_double() const { return std::holds_alternative<double>(v_); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_list() const { return std::holds_alternative<ValueList>(v_); }

  bool as_bool() const;
  std::int64_t as_int() const;
  double as_double() const;  // ints convert
  const std::string& as_string() const;
  const ValueList& as_list() const;

  const Storage& storage() const { return v_; }

  /// Total order: by alternative, then by value (false < true, numbers
  /// compared across int and double).
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  Storage v_;
};

/// "()", "true", "3", "slabs", "(a, b)".
std::string to_string(const Value& v);
std::ostream& operator<<(std::ostream& os, const Value& v);

/// Flat-tuple helpers for a value made of `arity` components.
Value pack(ValueList parts);
ValueList unpack(const Value& v, std::size_t arity);
/// First `left` components and the rest.
std::pair<Value, Value> split(const Value& v, std::size_t left, std::size_t right);
Value join(const Value& a, std::size_t left, const Value& b, std::size_t right);

struct Interface {
  std::vector<std::string> moves;      // factor names of the move set
  std::vector<std::string> utilities;  // factor names of the utility set

  static Interface unit() { return {}; }
  bool is_unit() const { return moves.empty() && utilities.empty(); }
  friend bool operator==(const Interface&, const Interface&) = default;
};

Interface tensor(const Interface& a, const Interface& b);
std::string to_string(const Interface& i);

using Continuation = std::function<Value(const Value&)>;

struct OpenGame {
  Interface dom;  // observations X, coutilities S
  Interface cod;  // moves Y, utilities R
  std::vector<Value> strategies;
  std::size_t strategy_arity = 0;

  std::function<Value(const Value& sigma, const Value& x)> play;
  std::function<Value(const Value& sigma, const Value& x, const Value& r)> coplay;
  std::function<bool(const Value& sigma, const Value& x, const Continuation& k)> best;

  bool closed() const { return dom.is_unit() && cod.is_unit(); }
};

/// Strategically trivial game: one Unit strategy, always in equilibrium.
OpenGame lift(Interface dom, Interface cod, std::function<Value(const Value&)> playf,
              std::function<Value(const Value&, const Value&)> coplayf);
OpenGame identity_game(const Interface& i);

struct PlayerStrategy {
  Value label;
  std::function<Value(const Value&)> choose;  // X -> Y
};

/// Argmax player: best iff no strategy does strictly better against k.
/// dom = (X, unit). Throws GameError for an empty strategy list.
OpenGame utility_player(std::vector<std::string> observation, std::vector<std::string> moves,
                        std::vector<std::string> utility, std::vector<PlayerStrategy> strategies);

/// State picking a question q, in equilibrium iff (q, f(q)) is in T.
OpenGame question_agent(const std::vector<Value>& questions,
                        const std::vector<std::pair<Value, Value>>& satisfactory);

/// g then h. Throws GameError unless g.cod == h.dom.
OpenGame seq(const OpenGame& g, const OpenGame& h);
/// g beside h.
OpenGame par(const OpenGame& g, const OpenGame& h);

/// Strategies of a closed game that are best against the trivial
/// continuation, in strategy order. Throws GameError for an open game.
std::vector<Value> equilibria(const OpenGame& g);

/// Two utility players choosing a row and a column, then an effect paying
/// out the matrices. Equilibria are the pure Nash equilibria (i, j).
OpenGame bimatrix_to_game(const std::vector<std::vector<Value>>& payoffs1,
                          const std::vector<std::vector<Value>>& payoffs2);

}  // namespace langgames
