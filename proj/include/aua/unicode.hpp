#pragma once

#include <cstdint>
#include <string>
#include <string_view>

// Minimal Unicode support for bibliographic text: UTF-8 transcoding,
// alphabetic classification, simple case folding, and canonical
// composition of base letter + combining mark. Covers the Latin ranges
// (plus Greek and Cyrillic letters) that occur in author and institution
// names; everything else passes through unchanged.
namespace aua::uni {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes one code point starting at `pos`. Invalid sequences yield
// U+FFFD and consume one byte.
struct Decoded {
    char32_t cp;
    std::size_t length;
};
Decoded decode_one(std::string_view text, std::size_t pos) noexcept;

std::u32string decode_utf8(std::string_view text);
void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view text);

std::size_t count_code_points(std::string_view text) noexcept;

bool is_alpha(char32_t cp) noexcept;
bool is_space(char32_t cp) noexcept;
bool is_combining_mark(char32_t cp) noexcept;

// Simple (one-to-one) case folding: letters map to their lowercase
// counterpart, ß and other caseless letters stay put.
char32_t fold_case(char32_t cp) noexcept;

// Canonical composition of a base letter with one combining mark
// (U+0300 grave, U+0301 acute, U+0302 circumflex, U+0303 tilde,
// U+0304 macron, U+0306 breve, U+0307 dot above, U+0308 diaeresis,
// U+030A ring, U+030B double acute, U+030C caron, U+0327 cedilla,
// U+0328 ogonek). Returns 0 when no precomposed form exists.
char32_t compose(char32_t base, char32_t mark) noexcept;

} // namespace aua::uni
