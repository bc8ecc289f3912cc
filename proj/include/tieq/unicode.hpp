#pragma once

// UTF-8 transcoding plus the small slice of Unicode this toolkit needs:
// the Vietnamese letter inventory, case mapping for it, and composition of
// base-letter + combining-mark sequences into precomposed characters.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>

#include "tieq/errors.hpp"

namespace tieq {

inline std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  const auto fail = [&](const char* what) -> char32_t {
    throw DecodeError(what, i);
  };
  while (i < bytes.size()) {
    const unsigned char b0 = static_cast<unsigned char>(bytes[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      fail("invalid UTF-8 lead byte");
    }
    if (i + len > bytes.size()) fail("truncated UTF-8 sequence");
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char bk = static_cast<unsigned char>(bytes[i + k]);
      if ((bk & 0xC0) != 0x80) fail("invalid UTF-8 continuation byte");
      cp = (cp << 6) | (bk & 0x3F);
    }
    // Reject overlong encodings and surrogate range.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      fail("invalid UTF-8 encoding");
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 2);
  for (char32_t cp : text) append_utf8(out, cp);
  return out;
}

inline std::u32string u32(std::string_view utf8) { return decode_utf8(utf8); }

namespace detail {

// The Vietnamese vowel grid: 12 letter families x 6 tones.
// Tone order: level, acute, grave, hook above, tilde, dot below.
inline constexpr const char* kVowelRowsLower[12] = {
    "aáàảãạ", "ăắằẳẵặ", "âấầẩẫậ", "eéèẻẽẹ", "êếềểễệ", "iíìỉĩị",
    "oóòỏõọ", "ôốồổỗộ", "ơớờởỡợ", "uúùủũụ", "ưứừửữự", "yýỳỷỹỵ"};
inline constexpr const char* kVowelRowsUpper[12] = {
    "AÁÀẢÃẠ", "ĂẮẰẲẴẶ", "ÂẤẦẨẪẬ", "EÉÈẺẼẸ", "ÊẾỀỂỄỆ", "IÍÌỈĨỊ",
    "OÓÒỎÕỌ", "ÔỐỒỔỖỘ", "ƠỚỜỞỠỢ", "UÚÙỦŨỤ", "ƯỨỪỬỮỰ", "YÝỲỶỸỴ"};

struct VowelInfo {
  std::uint8_t family;  // 0..11, row index
  std::uint8_t tone;    // 0..5, column index
  bool upper;
};

struct VietnameseTables {
  std::array<std::array<char32_t, 6>, 12> lower{};
  std::array<std::array<char32_t, 6>, 12> upper{};
  std::unordered_map<char32_t, VowelInfo> vowel_info;
  std::unordered_map<char32_t, char32_t> to_lower_map;
  std::unordered_map<char32_t, char32_t> to_upper_map;

  VietnameseTables() {
    for (int f = 0; f < 12; ++f) {
      const std::u32string lo = decode_utf8(kVowelRowsLower[f]);
      const std::u32string up = decode_utf8(kVowelRowsUpper[f]);
      for (int t = 0; t < 6; ++t) {
        lower[f][t] = lo[t];
        upper[f][t] = up[t];
        vowel_info[lo[t]] = {static_cast<std::uint8_t>(f),
                             static_cast<std::uint8_t>(t), false};
        vowel_info[up[t]] = {static_cast<std::uint8_t>(f),
                             static_cast<std::uint8_t>(t), true};
        to_lower_map[up[t]] = lo[t];
        to_upper_map[lo[t]] = up[t];
      }
    }
    const char32_t d_bar_lower = decode_utf8("đ")[0];
    const char32_t d_bar_upper = decode_utf8("Đ")[0];
    to_lower_map[d_bar_upper] = d_bar_lower;
    to_upper_map[d_bar_lower] = d_bar_upper;
  }
};

inline const VietnameseTables& viet_tables() {
  static const VietnameseTables tables;
  return tables;
}

}  // namespace detail

inline constexpr char32_t kDLower = U'đ';  // đ
inline constexpr char32_t kDUpper = U'Đ';  // Đ

inline char32_t to_lower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  const auto& m = detail::viet_tables().to_lower_map;
  const auto it = m.find(c);
  return it == m.end() ? c : it->second;
}

inline char32_t to_upper(char32_t c) {
  if (c >= U'a' && c <= U'z') return c - 32;
  const auto& m = detail::viet_tables().to_upper_map;
  const auto it = m.find(c);
  return it == m.end() ? c : it->second;
}

inline bool is_upper(char32_t c) {
  if (c >= U'A' && c <= U'Z') return true;
  if (c == kDUpper) return true;
  const auto& info = detail::viet_tables().vowel_info;
  const auto it = info.find(c);
  return it != info.end() && it->second.upper;
}

inline bool is_ascii_alpha(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
}

// Letters of the standard/reformed Vietnamese inventories (both cases).
inline bool is_letter(char32_t c) {
  if (is_ascii_alpha(c)) return true;
  if (c == kDLower || c == kDUpper) return true;
  return detail::viet_tables().vowel_info.count(c) > 0;
}

// Strips tone and case, keeping the vowel quality: "ế" -> "ê", "Ớ" -> "ơ".
// Non-vowel letters just lowercase.
inline char32_t base_letter(char32_t c) {
  const auto& info = detail::viet_tables().vowel_info;
  const auto it = info.find(c);
  if (it == info.end()) return to_lower(c);
  return detail::viet_tables().lower[it->second.family][0];
}

inline std::u32string to_lower(std::u32string_view s) {
  std::u32string out(s);
  for (auto& c : out) c = to_lower(c);
  return out;
}

namespace detail {

inline constexpr char32_t kCombAcute = U'́';
inline constexpr char32_t kCombGrave = U'̀';
inline constexpr char32_t kCombHook = U'̉';
inline constexpr char32_t kCombTilde = U'̃';
inline constexpr char32_t kCombDot = U'̣';
inline constexpr char32_t kCombCircumflex = U'̂';
inline constexpr char32_t kCombBreve = U'̆';
inline constexpr char32_t kCombHorn = U'̛';

inline int tone_of_mark(char32_t mark) {
  switch (mark) {
    case kCombAcute: return 1;
    case kCombGrave: return 2;
    case kCombHook: return 3;
    case kCombTilde: return 4;
    case kCombDot: return 5;
    default: return -1;
  }
}

// Family switch on modifier marks: a->â/ă, e->ê, o->ô/ơ, u->ư.
inline int modified_family(int family, char32_t mark) {
  static const auto& t = viet_tables();
  const char32_t base = t.lower[family][0];
  if (mark == kCombCircumflex) {
    if (base == U'a') return 2;
    if (base == U'e') return 4;
    if (base == U'o') return 7;
  } else if (mark == kCombBreve) {
    if (base == U'a') return 1;
  } else if (mark == kCombHorn) {
    if (base == U'o') return 8;
    if (base == U'u') return 10;
  }
  return -1;
}

}  // namespace detail

// Composes Vietnamese base + combining-mark sequences into precomposed
// characters; both mark orders (quality first or tone first) are accepted.
// Marks that do not form a Vietnamese letter are left in place.
inline std::u32string compose_vietnamese(std::u32string_view text) {
  const auto& tables = detail::viet_tables();
  std::u32string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    if (!out.empty()) {
      const auto it = tables.vowel_info.find(out.back());
      if (it != tables.vowel_info.end()) {
        const detail::VowelInfo v = it->second;
        const int tone = detail::tone_of_mark(c);
        if (tone > 0 && v.tone == 0) {
          out.back() = v.upper ? tables.upper[v.family][tone]
                               : tables.lower[v.family][tone];
          continue;
        }
        const int fam = detail::modified_family(v.family, c);
        if (fam >= 0) {
          out.back() =
              v.upper ? tables.upper[fam][v.tone] : tables.lower[fam][v.tone];
          continue;
        }
      }
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace tieq
