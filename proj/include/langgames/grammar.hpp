#pragma once

// Pregroup grammars and the chart parser computing every reduction
// t_1 ... t_n <= b by non-crossing contractions.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "langgames/comb.hpp"
#include "langgames/diagram.hpp"
#include "langgames/pregroup.hpp"

namespace langgames {

using Words = std::vector<std::string>;

struct Grammar {
  std::set<std::string> basic_types;
  std::string sentence_type;
  std::optional<std::string> question_type;
  // A word may carry several types; order is the dictionary order.
  std::map<std::string, std::vector<PregroupType>> dictionary;
  std::vector<CombEntry> combs;

  void add_entry(const std::string& word, PregroupType type);
  void add_comb(CombEntry comb);

  /// Sorted vocabulary.
  Words vocabulary() const;
  bool knows(const std::string& word) const { return dictionary.count(word) != 0; }
  /// Throws UngrammaticalError for a word outside the vocabulary.
  const std::vector<PregroupType>& types_of(const std::string& word) const;
  const CombEntry* comb_for(const std::string& word, const PregroupType& type) const;
  /// The question type when declared, the sentence type otherwise.
  const std::string& yes_no_type() const;

  /// Checks every grammar invariant; throws InputError on the first failure.
  void validate() const;
};

/// Box and relation name of the `index`-th type of a word: the word itself
/// when it has a single type, `word#index` otherwise.
std::string entry_name(const Grammar& g, const std::string& word, std::size_t index);

using Link = std::pair<std::size_t, std::size_t>;

/// A witness of t_1 ... t_n <= target. Positions index the flattened
/// sequence of simple types and count from 0.
struct Reduction {
  std::vector<std::size_t> choices;  // dictionary type index per word
  std::vector<PregroupType> word_types;
  std::vector<Link> links;            // sorted, i < j
  std::vector<std::size_t> remainder;  // unlinked positions, ascending

  PregroupType flattened() const;
  friend bool operator==(const Reduction&, const Reduction&) = default;
};

/// Every reduction of `words` to the plain `target`, ordered by dictionary
/// choices and then by link list. Empty iff the word list is ungrammatical.
/// Throws UngrammaticalError naming an unknown word and its position.
std::vector<Reduction> parse_sentence(const Grammar& g, const Words& words,
                                      const std::string& target);

/// True iff parse_sentence would return a non-empty list.
bool recognizes(const Grammar& g, const Words& words, const std::string& target);

/// All word lists of length <= max_words reducing to target, shortest first
/// and lexicographic within a length.
std::vector<Words> enumerate_language(const Grammar& g, const std::string& target,
                                      std::size_t max_words);

/// Word triangles side by side followed by one cup per link, innermost first.
Diagram parse_diagram(const Words& words, const Reduction& r);

Words split_words(const std::string& sentence);
std::string join_words(const Words& words);

}  // namespace langgames
