#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "dsg/corpus.hpp"

namespace dsg {

/// Penn Treebank tag -> coarse tag table. Shipped as data so a retagged
/// corpus using a different tagset only needs a new table, not a rebuild.
class PennTagMap {
 public:
  static PennTagMap defaults();
  static PennTagMap load(const std::filesystem::path& path);

  /// Throws InputError for tags missing from the table.
  PosTag map(std::string_view penn_tag) const;
  bool contains(std::string_view penn_tag) const;
  void insert(std::string penn_tag, PosTag tag);

 private:
  std::map<std::string, PosTag, std::less<>> table_;
};

/// Heuristic tagger for raw text. Order of precedence: closed-class word
/// lists, then derivational suffixes, then a seed adjective list, then OTHER.
/// Deliberately shallow; the pipeline only needs ADJ/ADV/CONJ/NEG to be
/// usable, everything else may collapse into OTHER.
class Tagger {
 public:
  Tagger();

  PosTag tag(std::string_view form) const;
  void tag_sentence(Sentence& sentence) const;

  const std::set<std::string, std::less<>>& seed_adjectives() const { return seed_adjectives_; }

  /// Shared immutable instance.
  static const Tagger& instance();

 private:
  std::set<std::string, std::less<>> conjunctions_;
  std::set<std::string, std::less<>> negators_;
  std::set<std::string, std::less<>> function_words_;
  std::set<std::string, std::less<>> common_verbs_;
  std::set<std::string, std::less<>> seed_adjectives_;
};

}  // namespace dsg
