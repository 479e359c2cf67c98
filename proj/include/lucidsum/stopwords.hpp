#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <unordered_set>

#include "lucidsum/errors.hpp"

namespace lucidsum {

// Lowercase function words excluded from term statistics.
struct StopwordSet {
  std::unordered_set<std::string> words;

  bool contains(std::string_view token) const {
    return words.find(std::string(token)) != words.end();
  }

  bool empty() const { return words.empty(); }
};

namespace detail {

// 127 common English function words.
inline constexpr std::string_view kDefaultStopwords[] = {
    "a",       "about",   "above",    "after",  "again",     "against", "all",
    "am",      "an",      "and",      "any",    "are",       "as",      "at",
    "be",      "because", "been",     "before", "being",     "below",   "between",
    "both",    "but",     "by",       "can",    "cannot",    "could",   "did",
    "do",      "does",    "doing",    "down",   "during",    "each",    "few",
    "for",     "from",    "further",  "had",    "has",       "have",    "having",
    "he",      "her",     "here",     "hers",   "herself",   "him",     "himself",
    "his",     "how",     "i",        "if",     "in",        "into",    "is",
    "it",      "its",     "itself",   "just",   "me",        "more",    "most",
    "my",      "myself",  "no",       "nor",    "not",       "now",     "of",
    "off",     "on",      "once",     "only",   "or",        "other",   "our",
    "ours",    "ourselves", "out",    "over",   "own",       "same",    "she",
    "should",  "so",      "some",     "such",   "than",      "that",    "the",
    "their",   "theirs",  "them",     "themselves", "then",  "there",   "these",
    "they",    "this",    "those",    "through", "to",       "too",     "under",
    "until",   "up",      "very",     "was",    "we",        "were",    "what",
    "when",    "where",   "which",    "while",  "who",       "whom",    "why",
    "will",    "with",    "would",    "you",    "your",      "yours",   "yourself",
    "yourselves",
};

}  // namespace detail

// The bundled English stopword list.
inline StopwordSet default_stopwords() {
  StopwordSet set;
  set.words.reserve(std::size(detail::kDefaultStopwords));
  for (std::string_view word : detail::kDefaultStopwords) {
    set.words.emplace(word);
  }
  return set;
}

// Loads a stopword file: one lowercase word per line, '#' starts a comment,
// blank lines ignored.
inline StopwordSet load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open stopword file: " + path.string());
  }
  StopwordSet set;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::string word;
    for (char c : line) {
      if (c != ' ' && c != '\t' && c != '\r') {
        word += c;
      }
    }
    if (!word.empty()) {
      set.words.insert(std::move(word));
    }
  }
  return set;
}

}  // namespace lucidsum
