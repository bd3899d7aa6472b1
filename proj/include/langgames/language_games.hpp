#pragma once

// Language games: functors from a grammar's monoidal signature into open
// games, the master/apprentice order game, the who-question game and the
// teacher/student/marker question-answering game.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "langgames/diagram.hpp"
#include "langgames/grammar.hpp"
#include "langgames/open_games.hpp"
#include "langgames/rel_semantics.hpp"

namespace langgames {

/// Noun variable filled in by question words. Never part of a vocabulary.
inline const std::string kPlaceholder = "?x";

struct GameFunctor {
  std::map<std::string, Interface> object_map;
  std::map<std::string, OpenGame> box_map;

  /// Tensor of the object images; throws GameError for an unmapped object.
  Interface image(const ObjectList& objects) const;
};

/// Folds the layers of a cup-free diagram: each box image tensored with
/// identities on the spectator wires, then composed in sequence. Throws
/// GameError for cups, caps, unmapped boxes or inconsistent interfaces.
OpenGame apply_game_functor(const GameFunctor& j, const Diagram& d);

/// Surface word of an entry box name ("word" or "word#k").
std::string surface_word(const std::string& box_name);

/// Strategically trivial box whose play splices its input phrases around
/// `word`: the first `left` inputs, the word, then the rest. The result must
/// lie in `allowed`, else GameError.
OpenGame syntactic_box(const std::string& word, std::size_t left, Interface dom, Interface cod,
                       std::shared_ptr<const std::set<std::string>> allowed);

// verb -> noun phrase -> action
using ActionMap = std::map<std::string, std::map<std::string, std::string>>;

struct OrderGame {
  OpenGame game;                      // (1 // 1) -> (O // A)
  std::vector<std::string> phrases;   // N
  std::vector<std::string> orders;    // O
  std::vector<std::string> actions;   // A, sorted
};

/// Nouns and adjectives play syntactically; every box producing the
/// sentence type is an order whose verb must have an action map, in
/// equilibrium iff k(order) is the action for its argument phrase.
/// N = L(G, n) and O = L(G, s) truncated at max_phrase_len and
/// max_phrase_len + 1 words.
OrderGame build_order_game(const Grammar& g, const Words& sentence, const ActionMap& actions,
                           std::size_t max_phrase_len);

/// best of the single trivial strategy. Throws GameError unless the game
/// goes from the unit to one move set and one utility set.
bool order_equilibrium(const OpenGame& game, const Continuation& k);

struct QuestionGame {
  OpenGame game;                        // (1 // 1) -> (Q // A)
  std::vector<std::string> questions;   // Q
  std::vector<std::string> answer_set;  // A
};

/// Question word comb: the first box plays the placeholder twice, interior
/// boxes splice, the second box substitutes the question word for the
/// placeholder and is in equilibrium iff k(q) is a correct answer to q in
/// `teacher`. Move sets are truncated at max_len words.
QuestionGame build_question_game(const Grammar& g, const RelModel& teacher, const Words& question,
                                 std::size_t max_len);

struct CorpusItem {
  Words question;
  bool answer = false;
};

struct QAInstance {
  Grammar grammar;
  std::vector<CorpusItem> corpus;
  std::vector<RelModel> student_models;
  std::vector<std::string> model_names;  // for reporting; may be empty

  /// Throws InputError (or UngrammaticalError for a question that does not
  /// parse to the yes/no type).
  void validate() const;
  std::string model_name(std::size_t i) const;
};

/// answers[model][item] = the model's truth value for the item's question.
std::vector<std::vector<bool>> student_answers(const QAInstance& inst);

/// corpus ; teacher ; (student @ id) ; marker. Strategy profiles are
/// (teacher index, model index).
OpenGame build_qa_game(const QAInstance& inst);
/// The same game over answer tables: corpus_answers[item], question text
/// per item, model_answers[model][item].
OpenGame build_qa_game(const std::vector<bool>& corpus_answers,
                       const std::vector<std::string>& questions,
                       const std::vector<std::vector<bool>>& model_answers);
/// Everything before the marker: (1 // 1) -> (A x A // U x U), moves
/// (student answer, teacher answer).
OpenGame qa_arena(const std::vector<bool>& corpus_answers, const std::vector<std::string>& questions,
                  const std::vector<std::vector<bool>>& model_answers);
/// Pays (u_S, u_T) = (a_S = a_T, a_S != a_T).
OpenGame qa_marker();

using Profile = std::pair<std::size_t, std::size_t>;

/// Equilibria of the composite game as (teacher index, model index).
std::vector<Profile> qa_equilibria(const QAInstance& inst);
std::vector<Profile> qa_equilibria(const OpenGame& qa);

/// The displayed formula computed by double enumeration, sorted.
std::vector<Profile> qa_equilibria_direct(const QAInstance& inst);
std::vector<Profile> qa_equilibria_direct(const std::vector<bool>& corpus_answers,
                                          const std::vector<std::vector<bool>>& model_answers);

struct QAOutcome {
  enum class Case { unanswerable_question, perfect_student, no_equilibrium };
  Case kind = Case::no_equilibrium;
  std::optional<std::size_t> question;  // smallest unanswerable item
  std::optional<std::size_t> model;     // smallest perfect model
  std::vector<Profile> equilibria;
};

QAOutcome classify_qa(const QAInstance& inst);
QAOutcome classify_qa(const std::vector<bool>& corpus_answers,
                      const std::vector<std::vector<bool>>& model_answers);

std::string case_name(QAOutcome::Case c);

}  // namespace langgames
