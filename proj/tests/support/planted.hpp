#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dsg/polarity.hpp"

// Synthetic review corpus with known polarity flips: five lexicon words are
// wired into the opposite sentiment camp, the way "crush" behaves in blender
// reviews. Ground truth for the detection and before/after criteria.

namespace testsupport {

struct PlantedFixture {
  std::vector<std::string> positive_words;  ///< 30 lexicon entries
  std::vector<std::string> negative_words;  ///< 30 lexicon entries
  std::vector<std::string> planted;         ///< 5 forms whose domain polarity flips
  std::map<std::string, dsg::Polarity> domain;  ///< form -> in-domain polarity
  std::string corpus_text;                  ///< raw one-sentence-per-line corpus
  std::vector<std::pair<std::string, dsg::Polarity>> labeled;  ///< sentence, domain label
};

PlantedFixture make_planted_fixture(std::uint32_t seed, std::size_t sentence_count = 2200);

}  // namespace testsupport
