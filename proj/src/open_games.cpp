#include "langgames/open_games.hpp"

#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "langgames/error.hpp"

namespace langgames {

namespace {

const char* kind_name(const Value& v) {
  static const char* names[] = {"unit", "bool", "int", "double", "string", "tuple"};
  return names[v.storage().index()];
}

[[noreturn]] void bad_kind(const Value& v, const char* want) {
  throw GameError(std::string("expected a ") + want + " value, got " + kind_name(v) + " " +
                  to_string(v));
}

bool is_number(const Value& v) { return v.is_int() || v.is_double(); }

}  // namespace

bool Value::as_bool() const {
  if (!is_bool()) bad_kind(*this, "bool");
  return std::get<bool>(v_);
}

std::int64_t Value::as_int() const {
  if (!is_int()) bad_kind(*this, "int");
  return std::get<std::int64_t>(v_);
}

double Value::as_double() const {
  if (is_int()) return static_cast<double>(std::get<std::int64_t>(v_));
  if (!is_double()) bad_kind(*this, "number");
  return std::get<double>(v_);
}

const std::string& Value::as_string() const {
  if (!is_string()) bad_kind(*this, "string");
  return std::get<std::string>(v_);
}

const ValueList& Value::as_list() const {
  if (!is_list()) bad_kind(*this, "tuple");
  return std::get<ValueList>(v_);
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (is_number(a) && is_number(b)) {
    if (a.is_int() && b.is_int()) return a.as_int() <=> b.as_int();
    const double x = a.as_double();
    const double y = b.as_double();
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  const auto ia = a.storage().index();
  const auto ib = b.storage().index();
  if (ia != ib) return ia <=> ib;
  if (a.is_unit()) return std::strong_ordering::equal;
  if (a.is_bool()) return a.as_bool() <=> b.as_bool();
  if (a.is_string()) return a.as_string().compare(b.as_string()) <=> 0;
  const auto& x = a.as_list();
  const auto& y = b.as_list();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    const auto c = x[i] <=> y[i];
    if (c != 0) return c;
  }
  return x.size() <=> y.size();
}

std::string to_string(const Value& v) {
  if (v.is_unit()) return "()";
  if (v.is_bool()) return v.as_bool() ? "true" : "false";
  if (v.is_int()) return std::to_string(v.as_int());
  if (v.is_double()) {
    std::ostringstream os;
    os << v.as_double();
    return os.str();
  }
  if (v.is_string()) return v.as_string();
  std::string out = "(";
  const auto& l = v.as_list();
  for (std::size_t i = 0; i < l.size(); ++i) out += (i ? ", " : "") + to_string(l[i]);
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << to_string(v); }

Value pack(ValueList parts) {
  if (parts.empty()) return Value();
  if (parts.size() == 1) return parts[0];
  return Value(std::move(parts));
}

ValueList unpack(const Value& v, std::size_t arity) {
  if (arity == 0) return {};
  if (arity == 1) return {v};
  const auto& l = v.as_list();
  if (l.size() != arity) {
    throw GameError("expected a " + std::to_string(arity) + "-tuple, got " + to_string(v));
  }
  return l;
}

std::pair<Value, Value> split(const Value& v, std::size_t left, std::size_t right) {
  ValueList all = unpack(v, left + right);
  ValueList a(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(left));
  ValueList b(all.begin() + static_cast<std::ptrdiff_t>(left), all.end());
  return {pack(std::move(a)), pack(std::move(b))};
}

Value join(const Value& a, std::size_t left, const Value& b, std::size_t right) {
  ValueList all = unpack(a, left);
  ValueList rest = unpack(b, right);
  all.insert(all.end(), rest.begin(), rest.end());
  return pack(std::move(all));
}

Interface tensor(const Interface& a, const Interface& b) {
  Interface out = a;
  out.moves.insert(out.moves.end(), b.moves.begin(), b.moves.end());
  out.utilities.insert(out.utilities.end(), b.utilities.begin(), b.utilities.end());
  return out;
}

std::string to_string(const Interface& i) {
  auto side = [](const std::vector<std::string>& f) {
    if (f.empty()) return std::string("1");
    std::string out;
    for (const auto& x : f) out += (out.empty() ? "" : " x ") + x;
    return out;
  };
  return "(" + side(i.moves) + " // " + side(i.utilities) + ")";
}

OpenGame lift(Interface dom, Interface cod, std::function<Value(const Value&)> playf,
              std::function<Value(const Value&, const Value&)> coplayf) {
  OpenGame g;
  g.dom = std::move(dom);
  g.cod = std::move(cod);
  g.strategies = {Value()};
  g.strategy_arity = 0;
  g.play = [playf](const Value&, const Value& x) { return playf(x); };
  g.coplay = [coplayf](const Value&, const Value& x, const Value& r) { return coplayf(x, r); };
  g.best = [](const Value&, const Value&, const Continuation&) { return true; };
  return g;
}

OpenGame identity_game(const Interface& i) {
  return lift(i, i, [](const Value& x) { return x; },
              [](const Value&, const Value& r) { return r; });
}

OpenGame utility_player(std::vector<std::string> observation, std::vector<std::string> moves,
                        std::vector<std::string> utility, std::vector<PlayerStrategy> strategies) {
  if (strategies.empty()) throw GameError("utility player needs at least one strategy");
  auto table = std::make_shared<std::map<Value, std::function<Value(const Value&)>>>();
  OpenGame g;
  for (auto& s : strategies) {
    if (!table->emplace(s.label, s.choose).second) {
      throw GameError("duplicate strategy label " + to_string(s.label));
    }
    g.strategies.push_back(s.label);
  }
  g.dom = {std::move(observation), {}};
  g.cod = {std::move(moves), std::move(utility)};
  g.strategy_arity = 1;
  auto choose = [table](const Value& sigma, const Value& x) {
    auto it = table->find(sigma);
    if (it == table->end()) throw GameError("unknown strategy " + to_string(sigma));
    return it->second(x);
  };
  g.play = choose;
  g.coplay = [](const Value&, const Value&, const Value&) { return Value(); };
  g.best = [table, choose](const Value& sigma, const Value& x, const Continuation& k) {
    const Value mine = k(choose(sigma, x));
    for (const auto& [label, f] : *table) {
      if (k(f(x)) > mine) return false;
    }
    return true;
  };
  return g;
}

OpenGame question_agent(const std::vector<Value>& questions,
                        const std::vector<std::pair<Value, Value>>& satisfactory) {
  auto t = std::make_shared<std::set<std::pair<Value, Value>>>(satisfactory.begin(),
                                                                satisfactory.end());
  OpenGame g;
  g.dom = Interface::unit();
  g.cod = {{"Q"}, {"U"}};
  g.strategies = questions;
  g.strategy_arity = 1;
  g.play = [](const Value& q, const Value&) { return q; };
  g.coplay = [](const Value&, const Value&, const Value&) { return Value(); };
  g.best = [t](const Value& q, const Value&, const Continuation& f) {
    return t->count({q, f(q)}) > 0;
  };
  return g;
}

namespace {

std::vector<Value> profile_product(const OpenGame& g, const OpenGame& h) {
  std::vector<Value> out;
  out.reserve(g.strategies.size() * h.strategies.size());
  for (const auto& s : g.strategies) {
    for (const auto& t : h.strategies) out.push_back(join(s, g.strategy_arity, t, h.strategy_arity));
  }
  return out;
}

}  // namespace

OpenGame seq(const OpenGame& g0, const OpenGame& h0) {
  if (!(g0.cod == h0.dom)) {
    throw GameError("cannot compose games: " + to_string(g0.cod) + " vs " + to_string(h0.dom));
  }
  auto g = std::make_shared<const OpenGame>(g0);
  auto h = std::make_shared<const OpenGame>(h0);
  const std::size_t ga = g->strategy_arity;
  const std::size_t ha = h->strategy_arity;

  OpenGame out;
  out.dom = g->dom;
  out.cod = h->cod;
  out.strategies = profile_product(*g, *h);
  out.strategy_arity = ga + ha;
  out.play = [g, h, ga, ha](const Value& p, const Value& x) {
    const auto [s, t] = split(p, ga, ha);
    return h->play(t, g->play(s, x));
  };
  out.coplay = [g, h, ga, ha](const Value& p, const Value& x, const Value& r) {
    const auto [s, t] = split(p, ga, ha);
    return g->coplay(s, x, h->coplay(t, g->play(s, x), r));
  };
  out.best = [g, h, ga, ha](const Value& p, const Value& x, const Continuation& k) {
    const auto [s, t] = split(p, ga, ha);
    const Continuation inner = [&h, t = t, &k](const Value& y) {
      return h->coplay(t, y, k(h->play(t, y)));
    };
    return g->best(s, x, inner) && h->best(t, g->play(s, x), k);
  };
  return out;
}

OpenGame par(const OpenGame& g0, const OpenGame& h0) {
  auto g = std::make_shared<const OpenGame>(g0);
  auto h = std::make_shared<const OpenGame>(h0);
  const std::size_t ga = g->strategy_arity;
  const std::size_t ha = h->strategy_arity;
  const std::size_t gx = g->dom.moves.size(), hx = h->dom.moves.size();
  const std::size_t gy = g->cod.moves.size(), hy = h->cod.moves.size();
  const std::size_t gr = g->cod.utilities.size(), hr = h->cod.utilities.size();
  const std::size_t gs = g->dom.utilities.size(), hs = h->dom.utilities.size();

  OpenGame out;
  out.dom = tensor(g->dom, h->dom);
  out.cod = tensor(g->cod, h->cod);
  out.strategies = profile_product(*g, *h);
  out.strategy_arity = ga + ha;
  out.play = [=](const Value& p, const Value& x) {
    const auto [s, t] = split(p, ga, ha);
    const auto [x1, x2] = split(x, gx, hx);
    return join(g->play(s, x1), gy, h->play(t, x2), hy);
  };
  out.coplay = [=](const Value& p, const Value& x, const Value& r) {
    const auto [s, t] = split(p, ga, ha);
    const auto [x1, x2] = split(x, gx, hx);
    const auto [r1, r2] = split(r, gr, hr);
    return join(g->coplay(s, x1, r1), gs, h->coplay(t, x2, r2), hs);
  };
  out.best = [=](const Value& p, const Value& x, const Continuation& k) {
    const auto [s, t] = split(p, ga, ha);
    const auto [x1, x2] = split(x, gx, hx);
    const Value y2 = h->play(t, x2);
    const Continuation left = [&](const Value& y1) {
      return split(k(join(y1, gy, y2, hy)), gr, hr).first;
    };
    if (!g->best(s, x1, left)) return false;
    const Value y1 = g->play(s, x1);
    const Continuation right = [&](const Value& y2b) {
      return split(k(join(y1, gy, y2b, hy)), gr, hr).second;
    };
    return h->best(t, x2, right);
  };
  return out;
}

std::vector<Value> equilibria(const OpenGame& g) {
  if (!g.closed()) {
    throw GameError("equilibria need a closed game, got " + to_string(g.dom) + " -> " +
                    to_string(g.cod));
  }
  const Continuation trivial = [](const Value&) { return Value(); };
  std::vector<Value> out;
  for (const auto& s : g.strategies) {
    if (g.best(s, Value(), trivial)) out.push_back(s);
  }
  return out;
}

OpenGame bimatrix_to_game(const std::vector<std::vector<Value>>& payoffs1,
                          const std::vector<std::vector<Value>>& payoffs2) {
  const std::size_t rows = payoffs1.size();
  if (rows == 0 || payoffs2.size() != rows) throw GameError("payoff matrices differ in shape");
  const std::size_t cols = payoffs1[0].size();
  if (cols == 0) throw GameError("payoff matrices have no columns");
  for (std::size_t i = 0; i < rows; ++i) {
    if (payoffs1[i].size() != cols || payoffs2[i].size() != cols) {
      throw GameError("payoff matrices differ in shape");
    }
  }
  auto constant = [](std::size_t n) {
    std::vector<PlayerStrategy> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back({Value(i), [i](const Value&) { return Value(i); }});
    }
    return out;
  };
  const OpenGame p1 = utility_player({}, {"row"}, {"u1"}, constant(rows));
  const OpenGame p2 = utility_player({}, {"col"}, {"u2"}, constant(cols));
  const OpenGame payout = lift(
      {{"row", "col"}, {"u1", "u2"}}, Interface::unit(), [](const Value&) { return Value(); },
      [payoffs1, payoffs2](const Value& x, const Value&) {
        const auto i = static_cast<std::size_t>(x.as_list().at(0).as_int());
        const auto j = static_cast<std::size_t>(x.as_list().at(1).as_int());
        return Value::list({payoffs1.at(i).at(j), payoffs2.at(i).at(j)});
      });
  return seq(par(p1, p2), payout);
}

}  // namespace langgames
