#pragma once

// File formats. Structured files are JSON; bimatrix games are plain text.
// Words, relation names and action keys are lowercased on the way in. Every
// loader throws InputError on malformed input.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "langgames/diagram.hpp"
#include "langgames/grammar.hpp"
#include "langgames/language_games.hpp"
#include "langgames/open_games.hpp"
#include "langgames/rel_semantics.hpp"

namespace langgames {

using nlohmann::json;

std::string lowercase(std::string s);
/// Splits on whitespace and lowercases every word.
Words sentence_words(const std::string& sentence);

std::string read_file(const std::filesystem::path& path);
json read_json(const std::filesystem::path& path);

// {"basic_types": [...], "sentence_type": "s", "question_type": "q"?,
//  "dictionary": [{"word": ..., "type": ...}],
//  "combs": [{"word": ..., "preset": "relative_who" | "question_who", "aux": ...}
//          | {"word", "type", "aux", "boxes": [{"name","dom","cod"}], "recipe": <diagram>}]}
Grammar grammar_from_json(const json& j);
json grammar_to_json(const Grammar& g);
Grammar load_grammar(const std::filesystem::path& path);

// {"dom": "n s", "layers": [{"box": <box>, "offset": 0}, ...]}
// box: {"kind": "generator", "name", "dom", "cod"} | {"kind": "cap" | "cup", "object": "n^r"}
//    | {"kind": "word", "name", "type"}
Diagram diagram_from_json(const json& j);
json diagram_to_json(const Diagram& d);

/// Positions count from 1 in JSON.
json reduction_to_json(const Reduction& r);
Reduction reduction_from_json(const json& j);

// {"objects": {"n": ["x1", ...]}, "relations": {"makes": [["x1", "*", "x2"]]}}
RelModel model_from_json(const json& j);
json model_to_json(const RelModel& m);
RelModel load_model(const std::filesystem::path& path);

struct NamedModel {
  std::string name;  // file stem
  RelModel model;
};
/// Every *.json file in the directory, by file name.
std::vector<NamedModel> load_model_dir(const std::filesystem::path& dir);

// {"items": [{"question": "...", "answer": true}]}
std::vector<CorpusItem> corpus_from_json(const json& j);
std::vector<CorpusItem> load_corpus(const std::filesystem::path& path);

// {"bring": {"slabs": "act1", ...}}
ActionMap actions_from_json(const json& j);
// {"orders": {"bring large slabs": "act2"}}
std::map<std::string, std::string> continuation_from_json(const json& j);

struct Bimatrix {
  std::vector<std::vector<Value>> p1;
  std::vector<std::vector<Value>> p2;
};
/// "R C" then R rows of C entries "p1,p2". Integers stay integers.
Bimatrix bimatrix_from_text(const std::string& text);
Bimatrix load_bimatrix(const std::filesystem::path& path);

}  // namespace langgames
