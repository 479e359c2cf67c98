#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lucidsum/errors.hpp"
#include "lucidsum/text.hpp"

namespace lucidsum {

struct TermWeighting {
  std::map<std::string, double> weights;
  std::string scheme_label;  // "tf" | "tfidf"
};

// High-frequency content terms. threshold_used is the smallest document
// frequency among the selected terms (0 when none were selected).
struct SignificantTerms {
  std::set<std::string> terms;
  std::size_t threshold_used = 0;

  bool contains(const std::string& term) const { return terms.find(term) != terms.end(); }
};

/**
 * TF-IDF at sentence granularity: weight(term) = tf * ln(N / sf) where N is
 * the sentence count. A term present in every sentence weighs exactly 0.
 */
inline TermWeighting tf_idf(const TermStats& stats) {
  if (stats.n_sentences == 0) {
    throw DegenerateInput("tf_idf requires at least one sentence");
  }
  TermWeighting weighting;
  weighting.scheme_label = "tfidf";
  const auto n = static_cast<double>(stats.n_sentences);
  for (const auto& [term, tf] : stats.tf) {
    const auto sf = static_cast<double>(stats.sf.at(term));
    weighting.weights[term] = static_cast<double>(tf) * std::log(n / sf);
  }
  return weighting;
}

/**
 * Selects the top ceil(top_fraction * V) terms by document frequency, where V
 * is the vocabulary size, then drops terms occurring fewer than min_count
 * times. Frequency ties are broken lexicographically (smaller term first).
 */
inline SignificantTerms significant_terms(const TermStats& stats, double top_fraction = 0.05,
                                          std::size_t min_count = 2) {
  SignificantTerms result;
  const std::size_t vocab = stats.tf.size();
  if (vocab == 0) {
    return result;
  }

  std::vector<std::pair<std::string, std::size_t>> ranked(stats.tf.begin(), stats.tf.end());
  // Map iteration is lexicographic, so a stable sort keeps that order as the
  // tie-break within equal frequencies.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });

  // Tiny slack so binary rounding in the product cannot bump an exact
  // integer across the ceiling.
  const auto take = static_cast<std::size_t>(
      std::ceil(top_fraction * static_cast<double>(vocab) - 1e-9));

  for (std::size_t i = 0; i < ranked.size() && i < take; ++i) {
    if (ranked[i].second < min_count) break;  // sorted, so the rest are smaller
    result.terms.insert(ranked[i].first);
    result.threshold_used =
        result.threshold_used == 0 ? ranked[i].second : std::min(result.threshold_used, ranked[i].second);
  }
  return result;
}

}  // namespace lucidsum
