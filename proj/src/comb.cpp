#include "langgames/comb.hpp"

#include <algorithm>

#include "langgames/error.hpp"

namespace langgames {

void CombEntry::validate() const {
  if (aux.empty()) throw InputError("comb for '" + word + "' has no auxiliary object");
  if (!recipe.dom().empty()) {
    throw InputError("comb recipe for '" + word + "' must start from the unit");
  }
  if (recipe.cod() != type.factors()) {
    throw InputError("comb recipe for '" + word + "' produces " + format_objects(recipe.cod()) +
                     " instead of " + format_type(type));
  }
  for (const auto& layer : recipe.layers()) {
    const Box& b = layer.box;
    if (b.kind == BoxKind::cap) continue;
    if (b.kind != BoxKind::generator) {
      throw InputError("comb recipe for '" + word + "' may only use its boxes and caps, found " +
                       b.label());
    }
    const bool declared = std::any_of(boxes.begin(), boxes.end(), [&b](const SignatureBox& s) {
      return s.name == b.name && s.dom == b.dom && s.cod == b.cod;
    });
    if (!declared) {
      throw InputError("comb recipe for '" + word + "' uses undeclared box " + b.name + " : " +
                       format_objects(b.dom) + " -> " + format_objects(b.cod));
    }
  }
}

CombEntry relative_pronoun_comb(const std::string& word, const std::string& noun,
                                const std::string& sentence, const std::string& aux) {
  const SimpleType n{noun}, s{sentence}, a{aux};
  CombEntry c;
  c.word = word;
  c.type = PregroupType{n.right(), n, s.left(), n};
  c.aux = aux;
  c.boxes = {{word + "_1", {n}, {a, n}}, {word + "_2", {a, s}, {n}}};
  c.recipe = Diagram::from_offsets({}, {{Box::cap(n.right()), 0},
                                        {c.boxes[0].box(), 1},
                                        {Box::cap(s), 2},
                                        {c.boxes[1].box(), 1}});
  return c;
}

CombEntry question_word_comb(const std::string& word, const std::string& question,
                             const std::string& sentence, const std::string& noun,
                             const std::string& aux) {
  const SimpleType q{question}, s{sentence}, n{noun}, a{aux};
  CombEntry c;
  c.word = word;
  c.type = PregroupType{q, s.left(), n};
  c.aux = aux;
  c.boxes = {{word + "_1", {}, {a, n}}, {word + "_2", {a, s}, {q}}};
  c.recipe = Diagram::from_offsets(
      {}, {{c.boxes[0].box(), 0}, {Box::cap(s), 1}, {c.boxes[1].box(), 0}});
  return c;
}

}  // namespace langgames
