#pragma once

// The standard-Vietnamese -> Tieq Viet rewrite engine. Rules are plain
// data: a longest-pattern-first table of consonant replacements. Conversion
// is one left-to-right pass whose output is never rescanned, and it records
// a per-character supervision signal (which source string each output
// character stands for) along the way.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "tieq/errors.hpp"
#include "tieq/text.hpp"
#include "tieq/unicode.hpp"

namespace tieq {

struct RewriteRule {
  std::u32string pattern;      // lowercase, 1-3 characters
  std::u32string replacement;  // lowercase, 1-2 characters

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

// Replacement table ordered by descending pattern length (ties broken by
// code point), so "ngh" wins over "ng" and "ch" over "c".
class RuleTable {
 public:
  explicit RuleTable(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {
    for (const auto& r : rules_) {
      if (r.pattern.empty() || r.pattern.size() > 3) {
        throw ConfigError("rewrite pattern must have 1-3 characters");
      }
      if (r.replacement.empty() || r.replacement.size() > 2) {
        throw ConfigError("rewrite replacement must have 1-2 characters");
      }
      if (r.replacement.size() > r.pattern.size()) {
        throw ConfigError("rewrite replacement may not be longer than its pattern");
      }
    }
    std::sort(rules_.begin(), rules_.end(), [](const auto& a, const auto& b) {
      if (a.pattern.size() != b.pattern.size()) {
        return a.pattern.size() > b.pattern.size();
      }
      return a.pattern < b.pattern;
    });
  }

  std::span<const RewriteRule> rules() const { return rules_; }

  // Replacement for an exact lowercase pattern, or nullptr.
  const std::u32string* lookup(std::u32string_view pattern) const {
    for (const auto& r : rules_) {
      if (r.pattern == pattern) return &r.replacement;
    }
    return nullptr;
  }

  // Longest rule matching case-insensitively at `pos`, or nullptr.
  const RewriteRule* match_at(std::u32string_view text, std::size_t pos) const {
    for (const auto& r : rules_) {
      const std::size_t n = r.pattern.size();
      if (pos + n > text.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (to_lower(text[pos + k]) != r.pattern[k]) {
          ok = false;
          break;
        }
      }
      if (ok) return &r;
    }
    return nullptr;
  }

 private:
  std::vector<RewriteRule> rules_;
};

// The consonant replacement list of the reform proposal.
inline RuleTable default_rule_table() {
  const auto rule = [](const char* p, const char* r) {
    return RewriteRule{u32(p), u32(r)};
  };
  return RuleTable({
      rule("ngh", "q"),
      rule("ch", "c"),
      rule("tr", "c"),
      rule("gh", "g"),
      rule("ph", "f"),
      rule("ng", "q"),
      rule("kh", "x"),
      rule("th", "w"),
      rule("gi", "z"),
      rule("nh", "n'"),
      rule("đ", "d"),
      rule("c", "k"),
      rule("q", "k"),
      rule("d", "z"),
      rule("r", "z"),
  });
}

// One conversion step: source span [std_begin, std_begin+std_len) produced
// target span [tieq_begin, tieq_begin+tieq_len).
struct AlignedSpan {
  std::size_t std_begin = 0;
  std::size_t std_len = 0;
  std::size_t tieq_begin = 0;
  std::size_t tieq_len = 0;

  friend bool operator==(const AlignedSpan&, const AlignedSpan&) = default;
};

// A sentence pair with per-character supervision. labels[i] is the
// lowercase source string behind tieq character i ("ch" behind a "c",
// the character itself for pass-through positions, empty for the
// apostrophe of "n'"). Casing is not stored in labels; apply_labels
// restores it from the tieq character.
struct AlignedPair {
  StandardText standard;
  TieqText tieq;
  std::vector<AlignedSpan> alignment;
  std::vector<std::u32string> labels;  // one per tieq character
};

// Rebuilds a source string from tieq characters plus labels. An uppercase
// tieq character capitalizes the first letter of its label; this is the one
// lossy corner of the scheme (an all-caps "NGH" comes back as "Ngh").
inline std::u32string apply_labels(std::u32string_view tieq_chars,
                                   std::span<const std::u32string> labels) {
  if (tieq_chars.size() != labels.size()) {
    throw DataError("label count " + std::to_string(labels.size()) +
                    " does not match text length " +
                    std::to_string(tieq_chars.size()));
  }
  std::u32string out;
  out.reserve(tieq_chars.size() * 2);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) continue;
    std::u32string piece = labels[i];
    if (is_upper(tieq_chars[i])) piece[0] = to_upper(piece[0]);
    out += piece;
  }
  return out;
}

namespace detail {

// Case transfer for a replacement: first source letter uppercase
// capitalizes the replacement's first letter; an all-caps source uppercases
// a multi-letter replacement entirely.
inline std::u32string transfer_case(std::u32string_view source,
                                    std::u32string replacement) {
  bool all_upper = true;
  for (char32_t c : source) all_upper = all_upper && is_upper(c);
  if (all_upper && replacement.size() > 1) {
    for (auto& c : replacement) c = to_upper(c);
    return replacement;
  }
  if (is_upper(source[0])) replacement[0] = to_upper(replacement[0]);
  return replacement;
}

}  // namespace detail

// Single-pass conversion. At each position the longest case-insensitive
// pattern wins; replacement output is final and never rescanned, so the "c"
// produced from "ch" is not re-matched by c -> k. Unmatched characters copy
// through with an identity label.
inline AlignedPair convert(const StandardText& s, const RuleTable& table) {
  AlignedPair pair;
  pair.standard = s;
  const std::u32string& in = s.chars;
  std::u32string out;
  out.reserve(in.size());
  std::size_t pos = 0;
  while (pos < in.size()) {
    if (const RewriteRule* r = table.match_at(in, pos)) {
      const std::u32string rendered = detail::transfer_case(
          std::u32string_view(in).substr(pos, r->pattern.size()),
          r->replacement);
      pair.alignment.push_back(
          {pos, r->pattern.size(), out.size(), rendered.size()});
      pair.labels.push_back(r->pattern);
      for (std::size_t k = 1; k < rendered.size(); ++k) {
        pair.labels.emplace_back();  // trailing characters carry no source
      }
      out += rendered;
      pos += r->pattern.size();
    } else {
      pair.alignment.push_back({pos, 1, out.size(), 1});
      pair.labels.push_back(std::u32string(1, to_lower(in[pos])));
      out.push_back(in[pos]);
      ++pos;
    }
  }
  pair.tieq = TieqText(std::move(out));
  return pair;
}

inline std::vector<AlignedPair> convert_corpus(
    std::span<const StandardText> lines, const RuleTable& table) {
  std::vector<AlignedPair> pairs;
  pairs.reserve(lines.size());
  for (const auto& line : lines) pairs.push_back(convert(line, table));
  return pairs;
}

// ---------------------------------------------------------------------------
// Pair file format: one pair per line, "standard<TAB>tieq<TAB>labels" with
// labels space-separated. Two label spellings are reserved: "ε" for the
// empty label and "␣" for the space character's identity label.

inline std::string encode_label(std::u32string_view label) {
  if (label.empty()) return "ε";
  if (label == U" ") return "␣";
  return encode_utf8(label);
}

inline std::u32string decode_label(std::string_view text) {
  if (text == "ε") return std::u32string();
  if (text == "␣") return std::u32string(U" ");
  return decode_utf8(text);
}

inline std::string format_pair_tsv(const AlignedPair& pair) {
  std::string line = pair.standard.utf8();
  line += '\t';
  line += pair.tieq.utf8();
  line += '\t';
  for (std::size_t i = 0; i < pair.labels.size(); ++i) {
    if (i > 0) line += ' ';
    line += encode_label(pair.labels[i]);
  }
  return line;
}

inline void write_pairs_tsv(const std::filesystem::path& path,
                            std::span<const AlignedPair> pairs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write pair file: " + path.string());
  for (const auto& pair : pairs) out << format_pair_tsv(pair) << '\n';
  if (!out) throw DataError("failed writing pair file: " + path.string());
}

inline std::vector<AlignedPair> read_pairs_tsv(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open pair file: " + path.string());
  std::vector<AlignedPair> pairs;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (raw.empty()) continue;
    const auto bad = [&](const std::string& why) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": " + why);
    };
    const std::size_t t1 = raw.find('\t');
    const std::size_t t2 = t1 == std::string::npos ? t1 : raw.find('\t', t1 + 1);
    if (t2 == std::string::npos) bad("expected three tab-separated fields");
    AlignedPair pair;
    pair.standard = StandardText(decode_utf8(std::string_view(raw).substr(0, t1)));
    pair.tieq = TieqText(decode_utf8(std::string_view(raw).substr(t1 + 1, t2 - t1 - 1)));
    std::string_view labels_field = std::string_view(raw).substr(t2 + 1);
    while (!labels_field.empty()) {
      const std::size_t sp = labels_field.find(' ');
      pair.labels.push_back(decode_label(labels_field.substr(0, sp)));
      if (sp == std::string_view::npos) break;
      labels_field.remove_prefix(sp + 1);
    }
    if (pair.labels.size() != pair.tieq.size()) {
      bad("label count does not match tieq length");
    }
    if (apply_labels(pair.tieq.chars, pair.labels) != pair.standard.chars) {
      bad("labels do not reproduce the standard sentence");
    }
    // Spans grouped as one non-empty label plus any following empty ones.
    std::size_t std_pos = 0, i = 0;
    while (i < pair.labels.size()) {
      std::size_t j = i + 1;
      while (j < pair.labels.size() && pair.labels[j].empty()) ++j;
      pair.alignment.push_back({std_pos, pair.labels[i].size(), i, j - i});
      std_pos += pair.labels[i].size();
      i = j;
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace tieq
