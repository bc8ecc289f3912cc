#pragma once

// Text normalization and the character alphabets shared by the whole
// pipeline. Sentences are held as sequences of Unicode scalars in composed
// form, so one array element is one Vietnamese letter.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tieq/errors.hpp"
#include "tieq/unicode.hpp"

namespace tieq {

// Conventional-orthography text. Distinct from TieqText so conversion
// direction is visible in signatures even though both wrap the same
// representation.
struct StandardText {
  std::u32string chars;

  StandardText() = default;
  explicit StandardText(std::u32string c) : chars(std::move(c)) {}

  bool empty() const { return chars.empty(); }
  std::size_t size() const { return chars.size(); }
  std::string utf8() const { return encode_utf8(chars); }
  friend bool operator==(const StandardText&, const StandardText&) = default;
  friend auto operator<=>(const StandardText&, const StandardText&) = default;
};

// Reformed-orthography ("Tieq Viet") text.
struct TieqText {
  std::u32string chars;

  TieqText() = default;
  explicit TieqText(std::u32string c) : chars(std::move(c)) {}

  bool empty() const { return chars.empty(); }
  std::size_t size() const { return chars.size(); }
  std::string utf8() const { return encode_utf8(chars); }
  friend bool operator==(const TieqText&, const TieqText&) = default;
};

namespace detail {

inline bool is_ascii_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r';
}

inline std::u32string canonicalize(std::u32string s) {
  s = compose_vietnamese(s);
  // CRLF / lone CR -> LF, tabs -> spaces, drop other control characters.
  std::u32string cleaned;
  cleaned.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    char32_t c = s[i];
    if (c == U'\r') {
      if (i + 1 < s.size() && s[i + 1] == U'\n') continue;
      c = U'\n';
    }
    if (c == U'\t') c = U' ';
    if (c < 0x20 && c != U'\n') continue;
    cleaned.push_back(c);
  }
  std::size_t b = 0, e = cleaned.size();
  while (b < e && is_ascii_space(cleaned[b])) ++b;
  while (e > b && is_ascii_space(cleaned[e - 1])) --e;
  return cleaned.substr(b, e - b);
}

}  // namespace detail

// Decodes raw bytes and canonicalizes: composed form, LF line ends, outer
// whitespace trimmed. Throws DecodeError (with byte offset) on bad UTF-8.
inline StandardText normalize(std::string_view raw) {
  return StandardText(detail::canonicalize(decode_utf8(raw)));
}

inline TieqText normalize_tieq(std::string_view raw) {
  return TieqText(detail::canonicalize(decode_utf8(raw)));
}

// An ordered character inventory. Index 0 is PAD and index 1 is UNK in
// every build; real symbols follow sorted by code point, so identical
// corpora always produce identical alphabets.
class Alphabet {
 public:
  static constexpr std::size_t kPadIndex = 0;
  static constexpr std::size_t kUnkIndex = 1;

  Alphabet() = default;
  Alphabet(std::string name, const std::set<char32_t>& symbols)
      : name_(std::move(name)), chars_(symbols.begin(), symbols.end()) {
    for (std::size_t i = 0; i < chars_.size(); ++i) {
      index_[chars_[i]] = i + 2;
    }
  }

  const std::string& name() const { return name_; }
  std::size_t size() const { return chars_.size() + 2; }

  // Index for a character; unseen characters get the UNK index.
  std::size_t index_of(char32_t c) const {
    const auto it = index_.find(c);
    return it == index_.end() ? kUnkIndex : it->second;
  }

  bool contains(char32_t c) const { return index_.count(c) > 0; }

  // Character at an index; PAD/UNK have no character and throw.
  char32_t char_at(std::size_t i) const {
    if (i < 2 || i >= size()) {
      throw DataError("alphabet index " + std::to_string(i) +
                      " has no character (size " + std::to_string(size()) +
                      ")");
    }
    return chars_[i - 2];
  }

  std::span<const char32_t> characters() const { return chars_; }

 private:
  std::string name_;
  std::vector<char32_t> chars_;
  std::unordered_map<char32_t, std::size_t> index_;
};

// Union alphabet over both orthographies plus PAD and UNK.
inline Alphabet build_alphabets(std::span<const StandardText> corpus,
                                std::span<const TieqText> tieq) {
  if (corpus.empty() && tieq.empty()) {
    throw DataError("cannot build an alphabet from empty corpora");
  }
  std::set<char32_t> symbols;
  for (const auto& s : corpus) symbols.insert(s.chars.begin(), s.chars.end());
  for (const auto& t : tieq) symbols.insert(t.chars.begin(), t.chars.end());
  return Alphabet("union", symbols);
}

// Reads a corpus file: UTF-8 plain text, one sentence per line. Lines are
// normalized; empty lines are dropped.
inline std::vector<StandardText> read_corpus(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open corpus file: " + path.string());
  std::vector<StandardText> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    StandardText norm = normalize(raw);
    if (!norm.empty()) lines.push_back(std::move(norm));
  }
  return lines;
}

}  // namespace tieq
