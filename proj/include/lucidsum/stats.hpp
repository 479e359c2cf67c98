#pragma once

#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lucidsum/errors.hpp"
#include "lucidsum/stopwords.hpp"
#include "lucidsum/text.hpp"

namespace lucidsum {

struct CompressionStats {
  std::size_t original_words = 0;
  std::size_t summary_words = 0;
  double reduction_percent = 0.0;  // (1 - summary/original) * 100, truncated to 3 decimals
};

// A word is a maximal whitespace-separated field of raw text.
inline std::size_t count_words(std::string_view text) {
  std::size_t count = 0;
  bool in_word = false;
  for (char c : text) {
    const bool space = detail::ascii_space(c);
    if (!space && !in_word) ++count;
    in_word = !space;
  }
  return count;
}

/**
 * Word-count reduction between a text and its summary. The percentage is
 * truncated, not rounded, to 3 decimals (155 of 4445 words -> 96.512).
 */
inline CompressionStats compression_stats(std::string_view original_text,
                                          std::string_view summary_text) {
  CompressionStats stats;
  stats.original_words = count_words(original_text);
  stats.summary_words = count_words(summary_text);
  if (stats.original_words == 0) {
    throw DegenerateInput("compression_stats: original text has no words");
  }
  const double ratio = static_cast<double>(stats.summary_words) /
                       static_cast<double>(stats.original_words);
  stats.reduction_percent = std::trunc((1.0 - ratio) * 100.0 * 1000.0) / 1000.0;
  return stats;
}

/**
 * Fraction of keywords whose token occurs in the tokenized summary.
 * Stopwords never count as summary content.
 */
inline double keyword_coverage(std::string_view summary_text,
                               const std::vector<std::string>& keywords,
                               const StopwordSet& stop) {
  if (keywords.empty()) {
    throw DegenerateInput("keyword_coverage: keyword list is empty");
  }
  std::set<std::string> present;
  for (std::string& token : tokenize(summary_text)) {
    if (!stop.contains(token)) present.insert(std::move(token));
  }
  std::size_t covered = 0;
  for (const std::string& keyword : keywords) {
    const auto tokens = tokenize(keyword);
    if (tokens.empty()) continue;
    bool all = true;
    for (const std::string& t : tokens) {
      if (present.find(t) == present.end()) {
        all = false;
        break;
      }
    }
    if (all) ++covered;
  }
  return static_cast<double>(covered) / static_cast<double>(keywords.size());
}

}  // namespace lucidsum
