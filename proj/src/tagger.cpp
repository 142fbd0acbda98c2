#include "dsg/tagger.hpp"

#include <cctype>

#include "dsg/errors.hpp"
#include "dsg/text_util.hpp"

namespace dsg {

namespace {

// Mirrors data/penn_map.tsv; embedded so the binary works without data files.
constexpr std::string_view kDefaultPennMap =
    "JJ\tADJ\n"
    "JJR\tADJ\n"
    "JJS\tADJ\n"
    "RB\tADV\n"
    "RBR\tADV\n"
    "RBS\tADV\n"
    "WRB\tOTHER\n"
    "NN\tNOUN\n"
    "NNS\tNOUN\n"
    "NNP\tNOUN\n"
    "NNPS\tNOUN\n"
    "VB\tVERB\n"
    "VBD\tVERB\n"
    "VBG\tVERB\n"
    "VBN\tVERB\n"
    "VBP\tVERB\n"
    "VBZ\tVERB\n"
    "MD\tVERB\n"
    "CC\tCONJ\n"
    "DT\tOTHER\n"
    "PDT\tOTHER\n"
    "WDT\tOTHER\n"
    "PRP\tOTHER\n"
    "PRP$\tOTHER\n"
    "WP\tOTHER\n"
    "WP$\tOTHER\n"
    "IN\tOTHER\n"
    "TO\tOTHER\n"
    "CD\tOTHER\n"
    "EX\tOTHER\n"
    "FW\tOTHER\n"
    "LS\tOTHER\n"
    "POS\tOTHER\n"
    "RP\tOTHER\n"
    "SYM\tOTHER\n"
    "UH\tOTHER\n"
    ".\tOTHER\n"
    ",\tOTHER\n"
    ":\tOTHER\n"
    "(\tOTHER\n"
    ")\tOTHER\n"
    "``\tOTHER\n"
    "''\tOTHER\n"
    "#\tOTHER\n"
    "$\tOTHER\n"
    "-LRB-\tOTHER\n"
    "-RRB-\tOTHER\n";

PennTagMap parse_penn_map(std::string_view text, const std::string& origin) {
  PennTagMap map;
  std::size_t lineno = 0;
  std::size_t start = 0;
  // Walk lines manually; the table is small and the file format is strict.
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos
                                                                            : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || trim(line).front() == ';') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 2) {
      throw InputError(origin + ":" + std::to_string(lineno) + ": expected TAG<TAB>COARSE");
    }
    auto coarse = parse_coarse_tag(fields[1]);
    if (!coarse) {
      throw InputError(origin + ":" + std::to_string(lineno) +
                       ": unknown coarse tag: " + std::string(fields[1]));
    }
    map.insert(std::string(fields[0]), *coarse);
  }
  return map;
}

constexpr std::string_view kConjunctions[] = {
    "and", "or", "but", "nor", "however", "although", "though",
    "while", "whereas", "because", "unless", "until", "yet",
};

constexpr std::string_view kNegatorWords[] = {
    "not", "no", "never", "hardly", "barely", "n't", "cannot", "without", "neither",
};

constexpr std::string_view kFunctionWords[] = {
    "a", "an", "the", "this", "that", "these", "those", "i", "you", "he", "she",
    "it", "we", "they", "me", "him", "her", "us", "them", "my", "your", "his",
    "its", "our", "their", "mine", "yours", "theirs", "of", "in", "on", "at",
    "by", "for", "with", "from", "to", "into", "onto", "over", "under", "about",
    "after", "before", "between", "during", "through", "up", "down", "off",
    "out", "again", "once", "here", "there", "when", "where", "what", "who",
    "whom", "which", "why", "how", "if", "then", "than", "all", "some", "any",
    "each", "every", "both", "other", "another", "such", "own", "same", "few",
    "more", "most", "much", "many", "little", "less", "least", "now", "also",
    "even", "still", "ever", "just", "only", "very", "too", "so", "as", "quite",
    "really", "extremely", "slightly", "somewhat", "everything", "something",
    "anything", "nothing", "everyone", "someone", "anyone", "nobody", "one",
    "two", "three", "first", "second", "last", "next",
};

constexpr std::string_view kCommonVerbs[] = {
    "is", "are", "was", "were", "be", "been", "being", "am", "do", "does",
    "did", "done", "have", "has", "had", "can", "could", "will", "would",
    "should", "may", "might", "must", "get", "gets", "got", "make", "makes",
    "made", "work", "works", "worked", "working", "run", "runs", "ran",
    "running", "look", "looks", "looked", "seem", "seems", "seemed", "feel",
    "feels", "felt", "go", "goes", "went", "gone", "come", "comes", "came",
    "use", "uses", "used", "buy", "buys", "bought", "keep", "keeps", "kept",
    "know", "knows", "knew", "think", "thinks", "thought", "want", "wants",
    "wanted", "need", "needs", "needed", "say", "says", "said", "see", "sees",
    "saw", "seen", "take", "takes", "took", "taken", "give", "gives", "gave",
    "given", "find", "finds", "found", "like", "likes", "liked", "love",
    "loves", "loved", "hate", "hates", "hated",
};

constexpr std::string_view kSeedAdjectives[] = {
    "good",   "bad",    "great",  "nice",    "quiet",   "noisy",    "quick",
    "slow",   "fast",   "cheap",  "small",   "big",     "large",    "tiny",
    "huge",   "light",  "heavy",  "bright",  "dark",    "clean",    "dirty",
    "new",    "old",    "young",  "fresh",   "stale",   "warm",     "cool",
    "cold",   "hot",    "soft",   "hard",    "smooth",  "rough",    "strong",
    "weak",   "solid",  "flimsy", "sturdy",  "sleek",   "slim",     "thick",
    "thin",   "wide",   "narrow", "deep",    "shallow", "long",     "short",
    "tall",   "low",    "high",   "loud",    "silent",  "calm",     "busy",
    "easy",   "tough",  "simple", "fancy",   "plain",   "pretty",   "ugly",
    "happy",  "sad",    "angry",  "glad",    "eager",   "proud",    "shy",
    "smart",  "clever", "dumb",   "wise",    "fair",    "poor",     "rich",
    "safe",   "risky",  "sloppy", "tidy",    "neat",    "messy",    "crisp",
    "blurry", "sharp",  "dull",   "shiny",   "sweet",   "sour",     "bitter",
    "salty",  "tasty",  "bland",  "tender",  "crunchy", "chewy",    "juicy",
    "dry",    "wet",    "damp",   "steady",  "shaky",   "wobbly",   "firm",
    "loose",  "tight",  "snug",   "roomy",   "cozy",    "comfy",    "handy",
    "clumsy", "bulky",  "early",  "late",    "ready",   "broken",
    "grim",   "bleak",  "crude",  "classy",  "cheesy",  "flashy",   "glossy",
    "grainy", "lumpy",  "mushy",  "patchy",  "pricey",  "reasonable",
};

std::set<std::string, std::less<>> make_set(const std::string_view* begin,
                                            const std::string_view* end) {
  std::set<std::string, std::less<>> out;
  for (const std::string_view* it = begin; it != end; ++it) out.emplace(*it);
  return out;
}

template <std::size_t N>
std::set<std::string, std::less<>> make_set(const std::string_view (&words)[N]) {
  return make_set(words, words + N);
}

bool ends_with(std::string_view word, std::string_view suffix) {
  return word.size() >= suffix.size() &&
         word.substr(word.size() - suffix.size()) == suffix;
}

constexpr std::string_view kAdjectiveSuffixes[] = {
    "ous", "ful", "ive", "able", "ible", "ant", "ent", "al", "ic", "less",
};

}  // namespace

void PennTagMap::insert(std::string penn_tag, PosTag tag) {
  table_[std::move(penn_tag)] = tag;
}

PennTagMap PennTagMap::defaults() {
  return parse_penn_map(kDefaultPennMap, "<builtin penn map>");
}

PennTagMap PennTagMap::load(const std::filesystem::path& path) {
  return parse_penn_map(read_file(path), path.string());
}

PosTag PennTagMap::map(std::string_view penn_tag) const {
  auto it = table_.find(penn_tag);
  if (it == table_.end()) throw InputError("unknown POS tag: " + std::string(penn_tag));
  return it->second;
}

bool PennTagMap::contains(std::string_view penn_tag) const {
  return table_.count(penn_tag) != 0;
}

Tagger::Tagger()
    : conjunctions_(make_set(kConjunctions)),
      negators_(make_set(kNegatorWords)),
      function_words_(make_set(kFunctionWords)),
      common_verbs_(make_set(kCommonVerbs)),
      seed_adjectives_(make_set(kSeedAdjectives)) {}

PosTag Tagger::tag(std::string_view form) const {
  if (conjunctions_.count(form)) return PosTag::Conj;
  if (negators_.count(form)) return PosTag::Neg;
  if (function_words_.count(form)) return PosTag::Other;
  if (common_verbs_.count(form)) return PosTag::Verb;
  if (ends_with(form, "ly") && form.size() >= 4) return PosTag::Adv;
  for (std::string_view suffix : kAdjectiveSuffixes) {
    if (ends_with(form, suffix) && form.size() >= suffix.size() + 2) return PosTag::Adj;
  }
  if (seed_adjectives_.count(form)) return PosTag::Adj;
  return PosTag::Other;
}

void Tagger::tag_sentence(Sentence& sentence) const {
  for (Token& token : sentence.tokens) {
    bool is_word = !token.form.empty() &&
                   (std::isalnum(static_cast<unsigned char>(token.form.front())) ||
                    static_cast<unsigned char>(token.form.front()) >= 0x80);
    token.tag = is_word ? tag(token.form) : PosTag::Other;
  }
}

const Tagger& Tagger::instance() {
  static const Tagger tagger;
  return tagger;
}

}  // namespace dsg
