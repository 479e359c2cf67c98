#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lucidsum/errors.hpp"
#include "lucidsum/stopwords.hpp"

namespace lucidsum {

// ----------------------------------------------------------------------------
// Domain types
// ----------------------------------------------------------------------------

// Half-open character range [begin, end) into a document's text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

struct Sentence {
  std::size_t index = 0;                // 0-based position in the document
  Span span;                            // character offsets into Document::text
  std::string raw;                      // verbatim substring text[span]
  std::vector<std::string> tokens;      // normalized lowercase tokens
};

struct Document {
  std::string text;                     // full text, line endings unified to "\n"
  std::vector<Sentence> sentences;
  std::string source_label;             // file path, "stdin" or "ocr"

  bool empty() const { return sentences.empty(); }
};

// Document-level frequency tables. tf and sf exclude stopwords; total_tokens
// counts every token so frequency ratios stay stable under stopword changes.
struct TermStats {
  std::map<std::string, std::size_t> tf;   // term -> occurrences in the document
  std::map<std::string, std::size_t> sf;   // term -> sentences containing it
  std::size_t total_tokens = 0;
  std::size_t n_sentences = 0;
};

// ----------------------------------------------------------------------------
// ASCII / UTF-8 helpers
// ----------------------------------------------------------------------------

namespace detail {

inline constexpr bool ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline constexpr bool ascii_digit(char c) { return c >= '0' && c <= '9'; }

inline constexpr bool ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }

inline constexpr bool ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || ascii_digit(c);
}

inline constexpr char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

// Token characters: ASCII alphanumerics plus any byte outside ASCII, so
// multi-byte UTF-8 sequences pass through tokenization untouched.
inline constexpr bool token_char(unsigned char c) { return c >= 0x80 || ascii_alnum(static_cast<char>(c)); }

// Strict UTF-8 validation (rejects overlong forms, surrogates, > U+10FFFF).
inline bool valid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(bytes[i]);
    std::size_t len;
    std::uint32_t cp;
    if (b0 < 0x80) {
      ++i;
      continue;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1Fu;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0Fu;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07u;
    } else {
      return false;
    }
    if (i + len > n) return false;
    for (std::size_t k = 1; k < len; ++k) {
      const auto bk = static_cast<unsigned char>(bytes[i + k]);
      if ((bk & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (bk & 0x3Fu);
    }
    if (len == 2 && cp < 0x80) return false;
    if (len == 3 && cp < 0x800) return false;
    if (len == 4 && cp < 0x10000) return false;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += len;
  }
  return true;
}

// "\r\n" and bare "\r" both become "\n".
inline std::string unify_line_endings(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      out += '\n';
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      out += text[i];
    }
  }
  return out;
}

// Abbreviations whose trailing '.' never ends a sentence.
inline constexpr std::array<std::string_view, 11> kAbbreviations = {
    "mr", "mrs", "dr", "prof", "st", "vs", "etc", "e.g", "i.e", "fig", "no",
};

// True when text[0, dot_pos) ends with a listed abbreviation, matched
// case-insensitively and preceded by a non-token character or text start.
inline bool abbreviation_before(std::string_view text, std::size_t dot_pos) {
  for (std::string_view abbr : kAbbreviations) {
    const std::size_t len = abbr.size();
    if (dot_pos < len) continue;
    const std::size_t start = dot_pos - len;
    bool match = true;
    for (std::size_t k = 0; k < len; ++k) {
      if (ascii_lower(text[start + k]) != abbr[k]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    if (start == 0 || !token_char(static_cast<unsigned char>(text[start - 1]))) {
      return true;
    }
  }
  return false;
}

inline bool opening_quote(char c) { return c == '"' || c == '\''; }

}  // namespace detail

// ----------------------------------------------------------------------------
// Operations
// ----------------------------------------------------------------------------

/**
 * Splits normalized text into sentence spans.
 *
 * A boundary occurs after '.', '!' or '?' when the terminator is followed by
 * whitespace and then an uppercase letter, a digit, an opening quote or the
 * end of the text. A blank line always ends a sentence. A '.' immediately
 * preceded by a listed abbreviation never ends one. Spans are trimmed of
 * surrounding whitespace; together they cover every non-whitespace character
 * exactly once.
 */
inline std::vector<Span> segment_sentences(std::string_view text) {
  std::vector<std::size_t> breaks;  // positions where a new region starts
  const std::size_t n = text.size();

  for (std::size_t i = 0; i < n; ++i) {
    const char c = text[i];
    if (c == '.' || c == '!' || c == '?') {
      if (i + 1 < n && !detail::ascii_space(text[i + 1])) continue;
      if (c == '.' && detail::abbreviation_before(text, i)) continue;
      std::size_t j = i + 1;
      while (j < n && detail::ascii_space(text[j])) ++j;
      const bool starts_sentence =
          j == n || detail::ascii_upper(text[j]) || detail::ascii_digit(text[j]) ||
          detail::opening_quote(text[j]);
      if (starts_sentence && i + 1 < n) {
        breaks.push_back(i + 1);
      }
    } else if (c == '\n') {
      // Blank line: another '\n' before any non-whitespace character.
      std::size_t j = i + 1;
      while (j < n && detail::ascii_space(text[j]) && text[j] != '\n') ++j;
      if (j < n && text[j] == '\n') {
        breaks.push_back(i);
      }
    }
  }
  breaks.push_back(n);

  std::vector<Span> spans;
  std::size_t region_start = 0;
  for (std::size_t region_end : breaks) {
    std::size_t b = region_start;
    std::size_t e = region_end;
    while (b < e && detail::ascii_space(text[b])) ++b;
    while (e > b && detail::ascii_space(text[e - 1])) --e;
    if (b < e) {
      spans.push_back({b, e});
    }
    region_start = region_end;
  }
  return spans;
}

/**
 * Splits a sentence into lowercase tokens. Any character that is not an
 * ASCII alphanumeric (or part of a multi-byte UTF-8 sequence) separates
 * tokens, except apostrophes and hyphens between two token characters, which
 * stay inside the word ("cat's", "hat-box").
 */
inline std::vector<std::string> tokenize(std::string_view raw_sentence) {
  std::vector<std::string> tokens;
  std::string current;
  const std::size_t n = raw_sentence.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<unsigned char>(raw_sentence[i]);
    if (detail::token_char(c)) {
      current += detail::ascii_lower(static_cast<char>(c));
    } else if ((c == '\'' || c == '-') && !current.empty() && i + 1 < n &&
               detail::token_char(static_cast<unsigned char>(raw_sentence[i + 1]))) {
      current += static_cast<char>(c);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) {
    tokens.push_back(std::move(current));
  }
  return tokens;
}

/**
 * Builds a Document from raw bytes: strips an optional UTF-8 BOM, validates
 * the encoding, unifies line endings and populates sentences.
 */
inline Document load_document(std::string_view bytes, std::string source_label) {
  if (bytes.size() >= 3 && static_cast<unsigned char>(bytes[0]) == 0xEF &&
      static_cast<unsigned char>(bytes[1]) == 0xBB &&
      static_cast<unsigned char>(bytes[2]) == 0xBF) {
    bytes.remove_prefix(3);
  }
  if (!detail::valid_utf8(bytes)) {
    throw InvalidEncoding("input is not valid UTF-8 (source: " + source_label + ")");
  }

  Document doc;
  doc.text = detail::unify_line_endings(bytes);
  doc.source_label = std::move(source_label);

  const auto spans = segment_sentences(doc.text);
  doc.sentences.reserve(spans.size());
  for (std::size_t i = 0; i < spans.size(); ++i) {
    Sentence s;
    s.index = i;
    s.span = spans[i];
    s.raw = doc.text.substr(spans[i].begin, spans[i].end - spans[i].begin);
    s.tokens = tokenize(s.raw);
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

/**
 * Counts term and sentence frequencies over a document. Stopwords are
 * excluded from tf/sf; total_tokens counts every token.
 */
inline TermStats term_stats(const Document& doc, const StopwordSet& stop) {
  TermStats stats;
  stats.n_sentences = doc.sentences.size();
  for (const Sentence& sentence : doc.sentences) {
    std::set<std::string> seen;
    for (const std::string& token : sentence.tokens) {
      ++stats.total_tokens;
      if (stop.contains(token)) continue;
      ++stats.tf[token];
      seen.insert(token);
    }
    for (const std::string& term : seen) {
      ++stats.sf[term];
    }
  }
  return stats;
}

}  // namespace lucidsum
