#include "langgames/factorize.hpp"

#include <algorithm>
#include <sstream>

#include "langgames/error.hpp"

namespace langgames {

const SignatureBox* MonoidalSignature::find(const std::string& name) const {
  for (const auto& b : boxes) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

bool MonoidalSignature::covers(const Box& box) const {
  if (box.kind != BoxKind::generator) return false;
  const auto* b = find(box.name);
  return b && b->dom == box.dom && b->cod == box.cod;
}

namespace {

std::string describe(const std::string& word, const PregroupType& t) {
  return "'" + word + " : " + format_type(t) + "'";
}

SignatureBox first_order_box(const std::string& name, const FunctionalShape& shape) {
  SignatureBox box{name, {}, {SimpleType{shape.head}}};
  for (auto it = shape.left_args.rbegin(); it != shape.left_args.rend(); ++it) {
    box.dom.emplace_back(*it);
  }
  for (auto it = shape.right_args.rbegin(); it != shape.right_args.rend(); ++it) {
    box.dom.emplace_back(*it);
  }
  return box;
}

std::size_t type_index(const Grammar& g, const std::string& word, const PregroupType& t) {
  const auto& types = g.types_of(word);
  auto it = std::find(types.begin(), types.end(), t);
  if (it == types.end()) {
    throw InputError("no dictionary entry " + describe(word, t));
  }
  return static_cast<std::size_t>(it - types.begin());
}

}  // namespace

MonoidalSignature build_signature(const Grammar& g) {
  MonoidalSignature sig;
  sig.objects = g.basic_types;
  for (const auto& [word, types] : g.dictionary) {
    for (std::size_t k = 0; k < types.size(); ++k) {
      const PregroupType& t = types[k];
      if (const CombEntry* comb = g.comb_for(word, t)) {
        sig.objects.insert(comb->aux);
        for (const auto& b : comb->boxes) {
          if (sig.find(b.name)) throw InputError("duplicate signature box '" + b.name + "'");
          sig.boxes.push_back(b);
        }
        continue;
      }
      const Functionality f = is_functional(t);
      if (f.kind == FunctionalKind::higher_order) {
        throw InputError("entry " + describe(word, t) +
                         " is higher-order functional; only first-order entries and combs "
                         "can be factored");
      }
      if (f.kind == FunctionalKind::not_functional) {
        throw InputError("entry " + describe(word, t) +
                         " is not functional and has no comb factorization");
      }
      const std::string name = entry_name(g, word, k);
      if (sig.find(name)) throw InputError("duplicate signature box '" + name + "'");
      sig.boxes.push_back(first_order_box(name, *f.shape));
    }
  }
  return sig;
}

Diagram factor_entry(const Grammar& g, const MonoidalSignature& sig, const std::string& word,
                     const PregroupType& t) {
  const std::size_t index = type_index(g, word, t);
  if (const CombEntry* comb = g.comb_for(word, t)) {
    for (const auto& b : comb->boxes) {
      if (!sig.covers(b.box())) {
        throw InputError("signature does not cover comb box '" + b.name + "'");
      }
    }
    return comb->recipe;
  }
  const std::string name = entry_name(g, word, index);
  const SignatureBox* box = sig.find(name);
  const Functionality f = is_functional(t);
  if (!box || !f.shape || *box != first_order_box(name, *f.shape)) {
    throw InputError("signature does not cover entry " + describe(word, t));
  }
  const auto& left = f.shape->left_args;
  const auto& right = f.shape->right_args;
  const std::size_t k = left.size();
  const std::size_t m = right.size();

  // a_1^r .. a_k^r a_k .. a_1 c_m .. c_1 c_1^l .. c_m^l, then the box on
  // the k + m middle wires.
  std::vector<std::pair<Box, std::size_t>> steps;
  for (std::size_t i = 0; i < k; ++i) steps.emplace_back(Box::cap(SimpleType{left[i], 1}), i);
  for (std::size_t j = m; j > 0; --j) {
    steps.emplace_back(Box::cap(SimpleType{right[j - 1]}), 2 * k + (m - j));
  }
  steps.emplace_back(box->box(), k);
  Diagram d = Diagram::from_offsets({}, steps);
  if (d.cod() != t.factors()) {
    throw InvariantError("factorization of " + describe(word, t) + " has codomain " +
                         format_objects(d.cod()));
  }
  return d;
}

Diagram apply_FG(const Grammar& g, const MonoidalSignature& sig, const Words& words,
                 const Reduction& r) {
  const Diagram parsed = parse_diagram(words, r);
  const Diagram factored = substitute(parsed, [&](const Box& b) -> std::optional<Diagram> {
    if (b.kind != BoxKind::word) return std::nullopt;
    return factor_entry(g, sig, b.name, PregroupType(b.cod));
  });
  Diagram out = snake_remove(factored);
  if (out.has_cups_or_caps() || !out.dom().empty() || out.cod() != parsed.cod()) {
    throw InvariantError("factored parse of '" + join_words(words) +
                         "' did not normalise to a cup-free state");
  }
  for (const auto& layer : out.layers()) {
    if (!sig.covers(layer.box)) {
      throw InvariantError("factored parse uses a box outside the signature: " +
                           layer.box.label());
    }
  }
  return out;
}

std::string format_signature(const MonoidalSignature& sig) {
  std::ostringstream os;
  for (const auto& b : sig.boxes) {
    os << b.name << " : " << format_objects(b.dom) << " -> " << format_objects(b.cod) << '\n';
  }
  return os.str();
}

}  // namespace langgames
