#include "langgames/grammar.hpp"

#include <algorithm>
#include <sstream>

#include "langgames/error.hpp"

namespace langgames {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == '^' || std::isspace(static_cast<unsigned char>(c));
  });
}

}  // namespace

void Grammar::add_entry(const std::string& word, PregroupType type) {
  auto& types = dictionary[word];
  if (std::find(types.begin(), types.end(), type) == types.end()) types.push_back(std::move(type));
}

void Grammar::add_comb(CombEntry comb) { combs.push_back(std::move(comb)); }

Words Grammar::vocabulary() const {
  Words out;
  out.reserve(dictionary.size());
  for (const auto& [word, types] : dictionary) out.push_back(word);
  return out;
}

const std::vector<PregroupType>& Grammar::types_of(const std::string& word) const {
  auto it = dictionary.find(word);
  if (it == dictionary.end()) throw UngrammaticalError("unknown word '" + word + "'");
  return it->second;
}

const CombEntry* Grammar::comb_for(const std::string& word, const PregroupType& type) const {
  for (const auto& c : combs) {
    if (c.word == word && c.type == type) return &c;
  }
  return nullptr;
}

const std::string& Grammar::yes_no_type() const {
  return question_type ? *question_type : sentence_type;
}

void Grammar::validate() const {
  for (const auto& b : basic_types) {
    if (!valid_name(b)) throw InputError("invalid basic type name '" + b + "'");
  }
  if (!basic_types.count(sentence_type)) {
    throw InputError("sentence type '" + sentence_type + "' is not a basic type");
  }
  if (question_type && !basic_types.count(*question_type)) {
    throw InputError("question type '" + *question_type + "' is not a basic type");
  }
  for (const auto& [word, types] : dictionary) {
    if (!valid_name(word)) throw InputError("invalid word '" + word + "'");
    for (const auto& t : types) {
      if (t.empty()) throw InputError("word '" + word + "' has the empty type");
      for (const auto& f : t) {
        if (!basic_types.count(f.name)) {
          throw InputError("type of '" + word + "' uses undeclared basic type '" + f.name + "'");
        }
      }
    }
  }
  std::set<std::string> aux_seen;
  for (const auto& c : combs) {
    auto it = dictionary.find(c.word);
    if (it == dictionary.end() ||
        std::find(it->second.begin(), it->second.end(), c.type) == it->second.end()) {
      throw InputError("comb for '" + c.word + " : " + format_type(c.type) +
                       "' has no matching dictionary entry");
    }
    if (basic_types.count(c.aux)) {
      throw InputError("auxiliary object '" + c.aux + "' of '" + c.word +
                       "' collides with a basic type");
    }
    if (!aux_seen.insert(c.aux).second) {
      throw InputError("auxiliary object '" + c.aux + "' is shared by two comb entries");
    }
    for (const auto& box : c.boxes) {
      for (const auto* objs : {&box.dom, &box.cod}) {
        for (const auto& o : *objs) {
          if (!basic_types.count(o.name) && o.name != c.aux) {
            throw InputError("comb box '" + box.name + "' uses unknown object '" + o.name + "'");
          }
        }
      }
    }
    c.validate();
  }
}

std::string entry_name(const Grammar& g, const std::string& word, std::size_t index) {
  if (g.types_of(word).size() == 1) return word;
  return word + "#" + std::to_string(index);
}

PregroupType Reduction::flattened() const {
  PregroupType out;
  for (const auto& t : word_types) out += t;
  return out;
}

namespace {

// contractible[i][j]: [i, j) admits a non-crossing perfect matching of
// contractions.
class Chart {
 public:
  explicit Chart(const PregroupType& flat) : flat_(flat), n_(flat.size()) {
    table_.assign(n_ + 1, std::vector<char>(n_ + 1, 0));
    for (std::size_t i = 0; i <= n_; ++i) table_[i][i] = 1;
    for (std::size_t len = 2; len <= n_; len += 2) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        const std::size_t j = i + len;
        for (std::size_t m = i + 1; m < j; m += 2) {
          if (contracts(flat_[i], flat_[m]) && table_[i + 1][m] && table_[m + 1][j]) {
            table_[i][j] = 1;
            break;
          }
        }
      }
    }
  }

  bool contractible(std::size_t i, std::size_t j) const { return table_[i][j] != 0; }

  /// Positions r where the whole sequence reduces to (target, 0) with r left.
  std::vector<std::size_t> roots(const std::string& target) const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < n_; ++r) {
      if (flat_[r] == SimpleType{target, 0} && contractible(0, r) && contractible(r + 1, n_)) {
        out.push_back(r);
      }
    }
    return out;
  }

  std::vector<std::vector<Link>> matchings(std::size_t i, std::size_t j) const {
    if (i == j) return {{}};
    std::vector<std::vector<Link>> out;
    for (std::size_t m = i + 1; m < j; m += 2) {
      if (!contracts(flat_[i], flat_[m]) || !table_[i + 1][m] || !table_[m + 1][j]) continue;
      const auto inner = matchings(i + 1, m);
      const auto rest = matchings(m + 1, j);
      for (const auto& a : inner) {
        for (const auto& b : rest) {
          std::vector<Link> links{{i, m}};
          links.insert(links.end(), a.begin(), a.end());
          links.insert(links.end(), b.begin(), b.end());
          out.push_back(std::move(links));
        }
      }
    }
    return out;
  }

 private:
  const PregroupType& flat_;
  std::size_t n_;
  std::vector<std::vector<char>> table_;
};

std::vector<const std::vector<PregroupType>*> lookup(const Grammar& g, const Words& words) {
  std::vector<const std::vector<PregroupType>*> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto it = g.dictionary.find(words[i]);
    if (it == g.dictionary.end()) {
      throw UngrammaticalError("unknown word '" + words[i] + "' at position " +
                               std::to_string(i + 1));
    }
    out.push_back(&it->second);
  }
  return out;
}

// Visits every dictionary choice vector in lexicographic order; stops early
// when `visit` returns false.
template <typename Visit>
void for_each_choice(const std::vector<const std::vector<PregroupType>*>& options, Visit visit) {
  std::vector<std::size_t> choice(options.size(), 0);
  while (true) {
    if (!visit(choice)) return;
    std::size_t k = choice.size();
    while (k > 0) {
      --k;
      if (++choice[k] < options[k]->size()) break;
      choice[k] = 0;
      if (k == 0) return;
    }
    if (choice.empty()) return;
  }
}

PregroupType flatten(const std::vector<const std::vector<PregroupType>*>& options,
                     const std::vector<std::size_t>& choice) {
  PregroupType flat;
  for (std::size_t i = 0; i < choice.size(); ++i) flat += (*options[i])[choice[i]];
  return flat;
}

}  // namespace

std::vector<Reduction> parse_sentence(const Grammar& g, const Words& words,
                                      const std::string& target) {
  const auto options = lookup(g, words);
  std::vector<Reduction> out;
  if (words.empty()) return out;
  for_each_choice(options, [&](const std::vector<std::size_t>& choice) {
    const PregroupType flat = flatten(options, choice);
    const Chart chart(flat);
    std::vector<Reduction> found;
    for (std::size_t r : chart.roots(target)) {
      const auto left = chart.matchings(0, r);
      const auto right = chart.matchings(r + 1, flat.size());
      for (const auto& a : left) {
        for (const auto& b : right) {
          Reduction red;
          red.choices = choice;
          for (std::size_t i = 0; i < choice.size(); ++i) {
            red.word_types.push_back((*options[i])[choice[i]]);
          }
          red.links = a;
          red.links.insert(red.links.end(), b.begin(), b.end());
          std::sort(red.links.begin(), red.links.end());
          red.remainder = {r};
          found.push_back(std::move(red));
        }
      }
    }
    std::sort(found.begin(), found.end(), [](const Reduction& x, const Reduction& y) {
      return std::tie(x.links, x.remainder) < std::tie(y.links, y.remainder);
    });
    out.insert(out.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
    return true;
  });
  return out;
}

bool recognizes(const Grammar& g, const Words& words, const std::string& target) {
  const auto options = lookup(g, words);
  if (words.empty()) return false;
  bool found = false;
  for_each_choice(options, [&](const std::vector<std::size_t>& choice) {
    found = !Chart(flatten(options, choice)).roots(target).empty();
    return !found;
  });
  return found;
}

std::vector<Words> enumerate_language(const Grammar& g, const std::string& target,
                                      std::size_t max_words) {
  const Words vocab = g.vocabulary();
  std::vector<Words> out;
  if (vocab.empty()) return out;
  for (std::size_t len = 1; len <= max_words; ++len) {
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      Words candidate;
      candidate.reserve(len);
      for (auto i : idx) candidate.push_back(vocab[i]);
      if (recognizes(g, candidate, target)) out.push_back(std::move(candidate));
      std::size_t k = len;
      bool done = true;
      while (k > 0) {
        --k;
        if (++idx[k] < vocab.size()) {
          done = false;
          break;
        }
        idx[k] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

Diagram parse_diagram(const Words& words, const Reduction& r) {
  if (words.size() != r.word_types.size()) {
    throw InvariantError("reduction does not match the word list");
  }
  std::vector<std::pair<Box, std::size_t>> boxes;
  std::size_t width = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    boxes.emplace_back(Box::word(words[i], r.word_types[i]), width);
    width += r.word_types[i].size();
  }
  const PregroupType flat = r.flattened();
  std::vector<Link> order = r.links;
  std::sort(order.begin(), order.end(), [](const Link& a, const Link& b) {
    return std::make_pair(a.second - a.first, a.first) <
           std::make_pair(b.second - b.first, b.first);
  });
  std::vector<char> removed(flat.size(), 0);
  for (const auto& [i, j] : order) {
    const auto offset =
        static_cast<std::size_t>(i - std::count(removed.begin(), removed.begin() + i, 1));
    boxes.emplace_back(Box::cup(flat[i]), offset);
    removed[i] = removed[j] = 1;
  }
  return Diagram::from_offsets({}, boxes);
}

Words split_words(const std::string& sentence) {
  std::istringstream in(sentence);
  Words out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string join_words(const Words& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace langgames
