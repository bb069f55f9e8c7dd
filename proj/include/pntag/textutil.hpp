#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Small UTF-8 helpers covering the Latin ranges needed for German
// newspaper text (ASCII, Latin-1 supplement, Latin Extended-A).
// Characters outside these ranges are passed through unchanged.

namespace pntag::text {

struct decoded_cp {
  char32_t cp;
  int length;  // bytes consumed; 1 on invalid input (byte passed through)
};

decoded_cp decode_cp(std::string_view s, std::size_t pos);
void append_cp(std::string& out, char32_t cp);

std::size_t cp_length(std::string_view s);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
char32_t to_lower(char32_t cp);

// First code point tests / transforms on whole words.
bool starts_upper(std::string_view word);
bool starts_lower(std::string_view word);
std::string lower_first(std::string_view word);
std::string to_lower_all(std::string_view word);

std::vector<std::string_view> split_whitespace(std::string_view s);

}  // namespace pntag::text
