#pragma once

// Multi-box factorizations of dictionary entries that are not first-order
// functional, such as the two "who" entries. Each comb carries its own
// auxiliary object threading the boxes together.

#include <string>
#include <vector>

#include "langgames/diagram.hpp"
#include "langgames/pregroup.hpp"

namespace langgames {

struct SignatureBox {
  std::string name;
  ObjectList dom;
  ObjectList cod;

  Box box() const { return Box::generator(name, dom, cod); }
  friend bool operator==(const SignatureBox&, const SignatureBox&) = default;
};

struct CombEntry {
  std::string word;
  PregroupType type;
  std::string aux;
  std::vector<SignatureBox> boxes;
  // 1 -> type, built from `boxes`, caps and identities only.
  Diagram recipe;

  /// Throws InputError when the recipe does not assemble `type` from the
  /// declared boxes.
  void validate() const;
};

/// who : n^r n s^l n, factored as who_1 : n -> a @ n and who_2 : a @ s -> n.
CombEntry relative_pronoun_comb(const std::string& word, const std::string& noun = "n",
                                const std::string& sentence = "s", const std::string& aux = "a");

/// who : q s^l n, factored as who_1 : 1 -> a @ n and who_2 : a @ s -> q.
CombEntry question_word_comb(const std::string& word, const std::string& question = "q",
                             const std::string& sentence = "s", const std::string& noun = "n",
                             const std::string& aux = "a");

}  // namespace langgames
