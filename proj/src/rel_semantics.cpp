#include "langgames/rel_semantics.hpp"

#include <algorithm>

#include "langgames/error.hpp"

namespace langgames {

bool FiniteSet::contains(const std::string& x) const {
  return std::find(elements.begin(), elements.end(), x) != elements.end();
}

const FiniteSet& RelModel::set_of(const std::string& object) const {
  auto it = objects.find(object);
  if (it == objects.end()) throw InputError("model has no set for object '" + object + "'");
  return it->second;
}

namespace {

std::string sets_text(const std::vector<FiniteSet>& sets) {
  std::string out;
  for (const auto& s : sets) out += (out.empty() ? "" : " @ ") + s.name;
  return out.empty() ? "1" : out;
}

Tuple slice(const Tuple& t, std::size_t from, std::size_t count) {
  return Tuple(t.begin() + static_cast<std::ptrdiff_t>(from),
               t.begin() + static_cast<std::ptrdiff_t>(from + count));
}

Tuple join(Tuple a, const Tuple& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Tuple> product(const std::vector<FiniteSet>& sets) {
  std::vector<Tuple> out{Tuple{}};
  for (const auto& s : sets) {
    std::vector<Tuple> next;
    for (const auto& prefix : out) {
      for (const auto& x : s.elements) {
        Tuple t = prefix;
        t.push_back(x);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<FiniteSet> sets_for(const RelModel& m, const ObjectList& objects) {
  std::vector<FiniteSet> out;
  out.reserve(objects.size());
  for (const auto& o : objects) out.push_back(m.set_of(o.name));
  return out;
}

std::string relation_key(const Box& box, const Grammar* g) {
  if (box.kind != BoxKind::word || !g || !g->knows(box.name)) return box.name;
  const auto& types = g->types_of(box.name);
  if (types.size() == 1) return box.name;
  const PregroupType t(box.cod);
  auto it = std::find(types.begin(), types.end(), t);
  if (it == types.end()) return box.name;
  return entry_name(*g, box.name, static_cast<std::size_t>(it - types.begin()));
}

// dom part -> cod parts
using Rows = std::map<Tuple, std::vector<Tuple>>;

Rows box_rows(const RelModel& m, const Box& box, const Grammar* g) {
  Rows rows;
  switch (box.kind) {
    case BoxKind::cup:
      for (const auto& v : m.set_of(box.dom[0].name).elements) rows[{v, v}].push_back({});
      return rows;
    case BoxKind::cap:
      for (const auto& v : m.set_of(box.cod[0].name).elements) rows[{}].push_back({v, v});
      return rows;
    default:
      break;
  }
  const std::string key = relation_key(box, g);
  auto it = m.relations.find(key);
  if (it == m.relations.end()) throw InputError("model has no relation for '" + key + "'");
  const std::size_t k = box.dom.size();
  for (const auto& row : it->second) {
    if (row.size() != k + box.cod.size()) {
      throw InputError("relation '" + key + "' has a row of length " + std::to_string(row.size()) +
                       ", expected " + std::to_string(k + box.cod.size()));
    }
    rows[slice(row, 0, k)].push_back(slice(row, k, box.cod.size()));
  }
  return rows;
}

}  // namespace

Relation compose(const Relation& r, const Relation& s) {
  if (r.cod_sets != s.dom_sets) {
    throw DiagramError("cannot compose relations: " + sets_text(r.cod_sets) + " vs " +
                       sets_text(s.dom_sets));
  }
  std::map<Tuple, std::vector<Tuple>> index;
  for (const auto& [x, y] : s.tuples) index[x].push_back(y);
  Relation out{r.dom_sets, s.cod_sets, {}};
  for (const auto& [x, y] : r.tuples) {
    auto it = index.find(y);
    if (it == index.end()) continue;
    for (const auto& z : it->second) out.tuples.emplace(x, z);
  }
  return out;
}

Relation tensor(const Relation& r, const Relation& s) {
  Relation out;
  out.dom_sets = r.dom_sets;
  out.dom_sets.insert(out.dom_sets.end(), s.dom_sets.begin(), s.dom_sets.end());
  out.cod_sets = r.cod_sets;
  out.cod_sets.insert(out.cod_sets.end(), s.cod_sets.begin(), s.cod_sets.end());
  for (const auto& [x1, y1] : r.tuples) {
    for (const auto& [x2, y2] : s.tuples) out.tuples.emplace(join(x1, x2), join(y1, y2));
  }
  return out;
}

std::vector<Violation> validate_model(const RelModel& m, const Grammar& g) {
  std::vector<Violation> out;
  for (const auto& b : g.basic_types) {
    if (!m.objects.count(b)) {
      out.push_back({Violation::Kind::missing_object, b, "no set for basic type '" + b + "'"});
    }
  }
  for (const auto& [name, set] : m.objects) {
    std::set<std::string> seen;
    for (const auto& x : set.elements) {
      if (!seen.insert(x).second) {
        out.push_back({Violation::Kind::duplicate_element, name,
                       "set '" + name + "' lists '" + x + "' twice"});
      }
    }
  }

  // expected coordinate objects per relation name
  std::map<std::string, std::vector<std::string>> shapes;
  for (const auto& [word, types] : g.dictionary) {
    for (std::size_t k = 0; k < types.size(); ++k) {
      auto& shape = shapes[entry_name(g, word, k)];
      for (const auto& f : types[k]) shape.push_back(f.name);
    }
  }
  for (const auto& c : g.combs) {
    for (const auto& b : c.boxes) {
      auto& shape = shapes[b.name];
      shape.clear();
      for (const auto& o : b.dom) shape.push_back(o.name);
      for (const auto& o : b.cod) shape.push_back(o.name);
    }
  }

  for (const auto& [name, rows] : m.relations) {
    auto it = shapes.find(name);
    if (it == shapes.end()) {
      out.push_back({Violation::Kind::unknown_relation, name,
                     "relation '" + name + "' names no dictionary entry or comb box"});
      continue;
    }
    const auto& shape = it->second;
    for (const auto& row : rows) {
      if (row.size() != shape.size()) {
        out.push_back({Violation::Kind::arity, name,
                       "relation '" + name + "' has a row of length " +
                           std::to_string(row.size()) + ", expected " +
                           std::to_string(shape.size())});
        continue;
      }
      for (std::size_t i = 0; i < row.size(); ++i) {
        auto set = m.objects.find(shape[i]);
        if (set == m.objects.end() || !set->second.contains(row[i])) {
          out.push_back({Violation::Kind::membership, name,
                         "relation '" + name + "': '" + row[i] + "' is not in the set of '" +
                             shape[i] + "'"});
        }
      }
    }
  }
  return out;
}

RelModel generator_model(const RelModel& m, const Grammar& g, const MonoidalSignature& sig) {
  RelModel out;
  out.objects = m.objects;
  for (const auto& [word, types] : g.dictionary) {
    for (std::size_t k = 0; k < types.size(); ++k) {
      if (g.comb_for(word, types[k])) continue;
      const std::string name = entry_name(g, word, k);
      auto rel = m.relations.find(name);
      if (rel == m.relations.end() || !sig.find(name)) continue;
      const Functionality f = is_functional(types[k]);
      if (!f.shape) continue;
      const std::size_t left = f.shape->left_args.size();
      const std::size_t right = f.shape->right_args.size();
      // type order a_1..a_k b c_1..c_m, box order a_k..a_1 c_m..c_1 b
      std::vector<std::size_t> order;
      for (std::size_t i = left; i > 0; --i) order.push_back(i - 1);
      for (std::size_t j = right; j > 0; --j) order.push_back(left + j);
      order.push_back(left);
      auto& rows = out.relations[name];
      for (const auto& row : rel->second) {
        if (row.size() != order.size()) {
          throw InputError("relation '" + name + "' has a row of length " +
                           std::to_string(row.size()) + ", expected " +
                           std::to_string(order.size()));
        }
        Tuple permuted;
        for (auto i : order) permuted.push_back(row[i]);
        rows.insert(std::move(permuted));
      }
    }
  }
  for (const auto& c : g.combs) {
    for (const auto& b : c.boxes) {
      auto rel = m.relations.find(b.name);
      if (rel != m.relations.end()) out.relations[b.name] = rel->second;
    }
  }
  return out;
}

Relation eval_diagram(const RelModel& m, const Diagram& d, const Grammar* g) {
  Relation out{sets_for(m, d.dom()), sets_for(m, d.cod()), {}};
  std::set<std::pair<Tuple, Tuple>> state;
  for (const auto& t : product(out.dom_sets)) state.emplace(t, t);
  for (const auto& layer : d.layers()) {
    const Rows rows = box_rows(m, layer.box, g);
    const std::size_t off = layer.offset();
    const std::size_t k = layer.box.dom.size();
    std::set<std::pair<Tuple, Tuple>> next;
    for (const auto& [x, w] : state) {
      auto it = rows.find(slice(w, off, k));
      if (it == rows.end()) continue;
      for (const auto& c : it->second) {
        Tuple v = slice(w, 0, off);
        v.insert(v.end(), c.begin(), c.end());
        v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(off + k), w.end());
        next.emplace(x, std::move(v));
      }
    }
    state = std::move(next);
  }
  out.tuples = std::move(state);
  return out;
}

namespace {

Reduction first_parse(const Grammar& g, const Words& words, const std::string& target) {
  const auto parses = parse_sentence(g, words, target);
  if (parses.empty()) {
    throw UngrammaticalError("'" + join_words(words) + "' does not reduce to " + target);
  }
  return parses.front();
}

}  // namespace

bool sentence_truth(const RelModel& m, const Grammar& g, const Words& words,
                    const std::string& target) {
  const std::string& b = target.empty() ? g.sentence_type : target;
  const Reduction r = first_parse(g, words, b);
  if (m.set_of(b).size() != 1) {
    throw InputError("the set of '" + b + "' must be a singleton to read off truth values");
  }
  return !eval_diagram(m, parse_diagram(words, r), &g).empty();
}

FiniteSet answers(const RelModel& m, const Grammar& g, const Words& question) {
  if (!g.question_type) throw InputError("grammar declares no question type");
  const std::string& q = *g.question_type;
  const Reduction r = first_parse(g, question, q);
  const Relation rel = eval_diagram(m, parse_diagram(question, r), &g);
  std::set<std::string> hit;
  for (const auto& [x, y] : rel.tuples) hit.insert(y.at(0));
  FiniteSet out{q, {}};
  for (const auto& e : m.set_of(q).elements) {
    if (hit.count(e)) out.elements.push_back(e);
  }
  return out;
}

}  // namespace langgames
