#include "pntag/textutil.hpp"

namespace pntag::text {

decoded_cp decode_cp(std::string_view s, std::size_t pos) {
  const auto byte = [&](std::size_t i) -> unsigned char {
    return static_cast<unsigned char>(s[i]);
  };
  unsigned char b0 = byte(pos);
  if (b0 < 0x80) return {b0, 1};

  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {b0, 1};  // stray continuation byte: pass through
  }
  if (pos + len > s.size()) return {b0, 1};
  for (int i = 1; i < len; ++i) {
    unsigned char bi = byte(pos + i);
    if ((bi & 0xC0) != 0x80) return {b0, 1};
    cp = (cp << 6) | (bi & 0x3F);
  }
  return {cp, len};
}

void append_cp(std::string& out, char32_t cp) {
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

std::size_t cp_length(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size();) {
    i += decode_cp(s, i).length;
    ++n;
  }
  return n;
}

bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool is_letter(char32_t cp) {
  if ((cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z')) return true;
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
  if (cp >= 0x1E00 && cp <= 0x1EFF) return true;
  // Treat other scripts as letters rather than punctuation; the tagger
  // itself only targets Latin-script German.
  if (cp >= 0x370 && !(cp >= 0x2000 && cp <= 0x206F) &&
      !(cp >= 0x2E00 && cp <= 0x2E7F) && !(cp >= 0x3000 && cp <= 0x303F))
    return true;
  return false;
}

bool is_upper(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return true;
  if (cp >= 0xC0 && cp <= 0xDE) return cp != 0xD7;  // ß (0xDF) stays lower
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2) == 0;
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2) == 1;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2) == 0;
  if (cp == 0x178 || cp == 0x179 || cp == 0x17B || cp == 0x17D) return true;
  return false;
}

bool is_lower(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return true;
  if (cp >= 0xDF && cp <= 0xFF) return cp != 0xF7;
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2) == 1;
  if (cp == 0x138) return true;
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2) == 0;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2) == 1;
  if (cp == 0x17A || cp == 0x17C || cp == 0x17E || cp == 0x17F) return true;
  return false;
}

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x100 && cp <= 0x137 && (cp % 2) == 0) return cp + 1;
  if (cp >= 0x139 && cp <= 0x148 && (cp % 2) == 1) return cp + 1;
  if (cp >= 0x14A && cp <= 0x177 && (cp % 2) == 0) return cp + 1;
  if (cp == 0x178) return 0xFF;
  if (cp == 0x179 || cp == 0x17B || cp == 0x17D) return cp + 1;
  return cp;
}

bool starts_upper(std::string_view word) {
  if (word.empty()) return false;
  return is_upper(decode_cp(word, 0).cp);
}

bool starts_lower(std::string_view word) {
  if (word.empty()) return false;
  return is_lower(decode_cp(word, 0).cp);
}

std::string lower_first(std::string_view word) {
  if (word.empty()) return {};
  auto [cp, len] = decode_cp(word, 0);
  std::string out;
  append_cp(out, to_lower(cp));
  out.append(word.substr(len));
  return out;
}

std::string to_lower_all(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size();) {
    auto [cp, len] = decode_cp(word, i);
    append_cp(out, to_lower(cp));
    i += len;
  }
  return out;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t i = 0;
  const auto is_ws = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  while (i < s.size()) {
    while (i < s.size() && is_ws(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_ws(s[i])) ++i;
    if (i > start) parts.push_back(s.substr(start, i - start));
  }
  return parts;
}

}  // namespace pntag::text
