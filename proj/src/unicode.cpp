#include "aua/unicode.hpp"

#include <algorithm>
#include <array>
#include <iterator>

namespace aua::uni {

namespace {

struct Range {
    char32_t lo;
    char32_t hi;
};

// Alphabetic code point ranges. Letter blocks are taken wholesale where
// the block is (nearly) all letters; the few symbol gaps that matter for
// bibliographic text are excluded explicitly below.
constexpr Range kAlphaRanges[] = {
    {0x0041, 0x005A}, // A-Z
    {0x0061, 0x007A}, // a-z
    {0x00AA, 0x00AA}, // feminine ordinal
    {0x00B5, 0x00B5}, // micro sign (letter category)
    {0x00BA, 0x00BA}, // masculine ordinal
    {0x00C0, 0x00D6}, // Latin-1 letters, skipping U+00D7 multiplication
    {0x00D8, 0x00F6}, // skipping U+00F7 division
    {0x00F8, 0x02AF}, // Latin Extended-A/B, IPA extensions
    {0x0370, 0x0373}, {0x0376, 0x0377}, {0x037B, 0x037D}, {0x037F, 0x037F},
    {0x0386, 0x0386}, {0x0388, 0x038A}, {0x038C, 0x038C},
    {0x038E, 0x03A1}, {0x03A3, 0x03FF}, // Greek
    {0x0400, 0x0481}, {0x048A, 0x052F}, // Cyrillic
    {0x0531, 0x0556}, {0x0561, 0x0587}, // Armenian
    {0x05D0, 0x05EA}, // Hebrew
    {0x0620, 0x064A}, // Arabic
    {0x1E00, 0x1FBC}, {0x1FC2, 0x1FCC}, {0x1FD0, 0x1FDB},
    {0x1FE0, 0x1FEC}, {0x1FF2, 0x1FFC}, // Latin Ext. Additional, Greek Ext.
    {0x3041, 0x3096}, // Hiragana
    {0x30A1, 0x30FA}, // Katakana
    {0x4E00, 0x9FFF}, // CJK unified ideographs
    {0xAC00, 0xD7A3}, // Hangul syllables
};

// (base << 8 | mark index) -> composed. Marks are indexed to keep the
// key space small; see mark_index().
struct Composition {
    char32_t base;
    char32_t mark;
    char32_t composed;
};

constexpr Composition kCompositions[] = {
    // grave U+0300
    {U'A', 0x0300, 0x00C0}, {U'E', 0x0300, 0x00C8}, {U'I', 0x0300, 0x00CC},
    {U'O', 0x0300, 0x00D2}, {U'U', 0x0300, 0x00D9}, {U'N', 0x0300, 0x01F8},
    {U'a', 0x0300, 0x00E0}, {U'e', 0x0300, 0x00E8}, {U'i', 0x0300, 0x00EC},
    {U'o', 0x0300, 0x00F2}, {U'u', 0x0300, 0x00F9}, {U'n', 0x0300, 0x01F9},
    {U'Y', 0x0300, 0x1EF2}, {U'y', 0x0300, 0x1EF3},
    // acute U+0301
    {U'A', 0x0301, 0x00C1}, {U'E', 0x0301, 0x00C9}, {U'I', 0x0301, 0x00CD},
    {U'O', 0x0301, 0x00D3}, {U'U', 0x0301, 0x00DA}, {U'Y', 0x0301, 0x00DD},
    {U'a', 0x0301, 0x00E1}, {U'e', 0x0301, 0x00E9}, {U'i', 0x0301, 0x00ED},
    {U'o', 0x0301, 0x00F3}, {U'u', 0x0301, 0x00FA}, {U'y', 0x0301, 0x00FD},
    {U'C', 0x0301, 0x0106}, {U'c', 0x0301, 0x0107}, {U'L', 0x0301, 0x0139},
    {U'l', 0x0301, 0x013A}, {U'N', 0x0301, 0x0143}, {U'n', 0x0301, 0x0144},
    {U'R', 0x0301, 0x0154}, {U'r', 0x0301, 0x0155}, {U'S', 0x0301, 0x015A},
    {U's', 0x0301, 0x015B}, {U'Z', 0x0301, 0x0179}, {U'z', 0x0301, 0x017A},
    {U'G', 0x0301, 0x01F4}, {U'g', 0x0301, 0x01F5},
    // circumflex U+0302
    {U'A', 0x0302, 0x00C2}, {U'E', 0x0302, 0x00CA}, {U'I', 0x0302, 0x00CE},
    {U'O', 0x0302, 0x00D4}, {U'U', 0x0302, 0x00DB},
    {U'a', 0x0302, 0x00E2}, {U'e', 0x0302, 0x00EA}, {U'i', 0x0302, 0x00EE},
    {U'o', 0x0302, 0x00F4}, {U'u', 0x0302, 0x00FB},
    {U'C', 0x0302, 0x0108}, {U'c', 0x0302, 0x0109}, {U'G', 0x0302, 0x011C},
    {U'g', 0x0302, 0x011D}, {U'H', 0x0302, 0x0124}, {U'h', 0x0302, 0x0125},
    {U'J', 0x0302, 0x0134}, {U'j', 0x0302, 0x0135}, {U'S', 0x0302, 0x015C},
    {U's', 0x0302, 0x015D}, {U'W', 0x0302, 0x0174}, {U'w', 0x0302, 0x0175},
    {U'Y', 0x0302, 0x0176}, {U'y', 0x0302, 0x0177},
    // tilde U+0303
    {U'A', 0x0303, 0x00C3}, {U'N', 0x0303, 0x00D1}, {U'O', 0x0303, 0x00D5},
    {U'a', 0x0303, 0x00E3}, {U'n', 0x0303, 0x00F1}, {U'o', 0x0303, 0x00F5},
    {U'I', 0x0303, 0x0128}, {U'i', 0x0303, 0x0129}, {U'U', 0x0303, 0x0168},
    {U'u', 0x0303, 0x0169},
    // macron U+0304
    {U'A', 0x0304, 0x0100}, {U'a', 0x0304, 0x0101}, {U'E', 0x0304, 0x0112},
    {U'e', 0x0304, 0x0113}, {U'I', 0x0304, 0x012A}, {U'i', 0x0304, 0x012B},
    {U'O', 0x0304, 0x014C}, {U'o', 0x0304, 0x014D}, {U'U', 0x0304, 0x016A},
    {U'u', 0x0304, 0x016B},
    // breve U+0306
    {U'A', 0x0306, 0x0102}, {U'a', 0x0306, 0x0103}, {U'E', 0x0306, 0x0114},
    {U'e', 0x0306, 0x0115}, {U'G', 0x0306, 0x011E}, {U'g', 0x0306, 0x011F},
    {U'I', 0x0306, 0x012C}, {U'i', 0x0306, 0x012D}, {U'O', 0x0306, 0x014E},
    {U'o', 0x0306, 0x014F}, {U'U', 0x0306, 0x016C}, {U'u', 0x0306, 0x016D},
    // dot above U+0307
    {U'C', 0x0307, 0x010A}, {U'c', 0x0307, 0x010B}, {U'E', 0x0307, 0x0116},
    {U'e', 0x0307, 0x0117}, {U'G', 0x0307, 0x0120}, {U'g', 0x0307, 0x0121},
    {U'I', 0x0307, 0x0130}, {U'Z', 0x0307, 0x017B}, {U'z', 0x0307, 0x017C},
    // diaeresis U+0308
    {U'A', 0x0308, 0x00C4}, {U'E', 0x0308, 0x00CB}, {U'I', 0x0308, 0x00CF},
    {U'O', 0x0308, 0x00D6}, {U'U', 0x0308, 0x00DC},
    {U'a', 0x0308, 0x00E4}, {U'e', 0x0308, 0x00EB}, {U'i', 0x0308, 0x00EF},
    {U'o', 0x0308, 0x00F6}, {U'u', 0x0308, 0x00FC}, {U'y', 0x0308, 0x00FF},
    {U'Y', 0x0308, 0x0178},
    // ring above U+030A
    {U'A', 0x030A, 0x00C5}, {U'a', 0x030A, 0x00E5}, {U'U', 0x030A, 0x016E},
    {U'u', 0x030A, 0x016F},
    // double acute U+030B
    {U'O', 0x030B, 0x0150}, {U'o', 0x030B, 0x0151}, {U'U', 0x030B, 0x0170},
    {U'u', 0x030B, 0x0171},
    // caron U+030C
    {U'C', 0x030C, 0x010C}, {U'c', 0x030C, 0x010D}, {U'D', 0x030C, 0x010E},
    {U'd', 0x030C, 0x010F}, {U'E', 0x030C, 0x011A}, {U'e', 0x030C, 0x011B},
    {U'L', 0x030C, 0x013D}, {U'l', 0x030C, 0x013E}, {U'N', 0x030C, 0x0147},
    {U'n', 0x030C, 0x0148}, {U'R', 0x030C, 0x0158}, {U'r', 0x030C, 0x0159},
    {U'S', 0x030C, 0x0160}, {U's', 0x030C, 0x0161}, {U'T', 0x030C, 0x0164},
    {U't', 0x030C, 0x0165}, {U'Z', 0x030C, 0x017D}, {U'z', 0x030C, 0x017E},
    {U'A', 0x030C, 0x01CD}, {U'a', 0x030C, 0x01CE}, {U'I', 0x030C, 0x01CF},
    {U'i', 0x030C, 0x01D0}, {U'O', 0x030C, 0x01D1}, {U'o', 0x030C, 0x01D2},
    {U'U', 0x030C, 0x01D3}, {U'u', 0x030C, 0x01D4}, {U'G', 0x030C, 0x01E6},
    {U'g', 0x030C, 0x01E7},
    // cedilla U+0327
    {U'C', 0x0327, 0x00C7}, {U'c', 0x0327, 0x00E7}, {U'G', 0x0327, 0x0122},
    {U'g', 0x0327, 0x0123}, {U'K', 0x0327, 0x0136}, {U'k', 0x0327, 0x0137},
    {U'L', 0x0327, 0x013B}, {U'l', 0x0327, 0x013C}, {U'N', 0x0327, 0x0145},
    {U'n', 0x0327, 0x0146}, {U'R', 0x0327, 0x0156}, {U'r', 0x0327, 0x0157},
    {U'S', 0x0327, 0x015E}, {U's', 0x0327, 0x015F}, {U'T', 0x0327, 0x0162},
    {U't', 0x0327, 0x0163},
    // ogonek U+0328
    {U'A', 0x0328, 0x0104}, {U'a', 0x0328, 0x0105}, {U'E', 0x0328, 0x0118},
    {U'e', 0x0328, 0x0119}, {U'I', 0x0328, 0x012E}, {U'i', 0x0328, 0x012F},
    {U'U', 0x0328, 0x0172}, {U'u', 0x0328, 0x0173}, {U'O', 0x0328, 0x01EA},
    {U'o', 0x0328, 0x01EB},
};

bool is_continuation(unsigned char b) noexcept { return (b & 0xC0) == 0x80; }

} // namespace

Decoded decode_one(std::string_view text, std::size_t pos) noexcept {
    const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
    const std::size_t n = text.size();
    if (pos >= n) return {kReplacementChar, 0};

    const unsigned char b0 = bytes[pos];
    if (b0 < 0x80) return {b0, 1};
    if ((b0 & 0xE0) == 0xC0) {
        if (pos + 1 < n && is_continuation(bytes[pos + 1])) {
            char32_t cp = ((b0 & 0x1Fu) << 6) | (bytes[pos + 1] & 0x3Fu);
            if (cp >= 0x80) return {cp, 2};
        }
        return {kReplacementChar, 1};
    }
    if ((b0 & 0xF0) == 0xE0) {
        if (pos + 2 < n && is_continuation(bytes[pos + 1]) && is_continuation(bytes[pos + 2])) {
            char32_t cp = ((b0 & 0x0Fu) << 12) | ((bytes[pos + 1] & 0x3Fu) << 6) |
                          (bytes[pos + 2] & 0x3Fu);
            if (cp >= 0x800 && !(cp >= 0xD800 && cp <= 0xDFFF)) return {cp, 3};
        }
        return {kReplacementChar, 1};
    }
    if ((b0 & 0xF8) == 0xF0) {
        if (pos + 3 < n && is_continuation(bytes[pos + 1]) && is_continuation(bytes[pos + 2]) &&
            is_continuation(bytes[pos + 3])) {
            char32_t cp = ((b0 & 0x07u) << 18) | ((bytes[pos + 1] & 0x3Fu) << 12) |
                          ((bytes[pos + 2] & 0x3Fu) << 6) | (bytes[pos + 3] & 0x3Fu);
            if (cp >= 0x10000 && cp <= 0x10FFFF) return {cp, 4};
        }
        return {kReplacementChar, 1};
    }
    return {kReplacementChar, 1};
}

std::u32string decode_utf8(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        Decoded d = decode_one(text, pos);
        out.push_back(d.cp);
        pos += d.length;
    }
    return out;
}

void append_utf8(std::string& out, char32_t cp) {
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

std::string encode_utf8(std::u32string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : text) append_utf8(out, cp);
    return out;
}

std::size_t count_code_points(std::string_view text) noexcept {
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        pos += decode_one(text, pos).length;
        ++count;
    }
    return count;
}

bool is_alpha(char32_t cp) noexcept {
    for (const Range& r : kAlphaRanges) {
        if (cp < r.lo) return false;
        if (cp <= r.hi) return true;
    }
    return false;
}

bool is_space(char32_t cp) noexcept {
    switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\f': case U'\v':
    case 0x0085: case 0x00A0: case 0x202F: case 0x205F: case 0x3000:
        return true;
    default:
        return cp >= 0x2000 && cp <= 0x200B;
    }
}

bool is_combining_mark(char32_t cp) noexcept { return cp >= 0x0300 && cp <= 0x036F; }

char32_t fold_case(char32_t cp) noexcept {
    if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
    if (cp < 0x80) return cp;
    // Latin-1 supplement: uppercase block maps +0x20, except multiplication sign.
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
    // Latin Extended-A: alternating upper/lower pairs.
    if (cp == 0x0130) return U'i'; // I with dot above
    if (cp >= 0x0100 && cp <= 0x0137) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x0139 && cp <= 0x0148) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x014A && cp <= 0x0177) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x0178) return 0x00FF; // Y diaeresis
    if (cp >= 0x0179 && cp <= 0x017E) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp == 0x017F) return U's'; // long s
    // Latin Extended-B paired stretches.
    if (cp >= 0x01CD && cp <= 0x01DC) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x01DE && cp <= 0x01EF) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x01F4 && cp <= 0x01F5) return (cp == 0x01F4) ? 0x01F5 : cp;
    if (cp >= 0x01F8 && cp <= 0x021F) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x0222 && cp <= 0x0233) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x0246 && cp <= 0x024F) return (cp % 2 == 0) ? cp + 1 : cp;
    // Greek.
    if (cp == 0x0386) return 0x03AC;
    if (cp >= 0x0388 && cp <= 0x038A) return cp + 0x25;
    if (cp == 0x038C) return 0x03CC;
    if (cp >= 0x038E && cp <= 0x038F) return cp + 0x3F;
    if (cp >= 0x0391 && cp <= 0x03A1) return cp + 0x20;
    if (cp >= 0x03A3 && cp <= 0x03AB) return cp + 0x20;
    if (cp == 0x03C2) return 0x03C3; // final sigma folds to sigma
    // Cyrillic.
    if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
    if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;
    if (cp >= 0x0460 && cp <= 0x0481) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x048A && cp <= 0x04BF) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x04C0) return 0x04CF;
    if (cp >= 0x04C1 && cp <= 0x04CE) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x04D0 && cp <= 0x04FF) return (cp % 2 == 0) ? cp + 1 : cp;
    // Latin Extended Additional.
    if (cp == 0x1E9E) return 0x00DF; // capital sharp s
    if (cp >= 0x1E00 && cp <= 0x1EFF) return (cp % 2 == 0) ? cp + 1 : cp;
    // Fullwidth Latin.
    if (cp >= 0xFF21 && cp <= 0xFF3A) return cp + 0x20;
    return cp;
}

char32_t compose(char32_t base, char32_t mark) noexcept {
    for (const Composition& c : kCompositions) {
        if (c.base == base && c.mark == mark) return c.composed;
    }
    return 0;
}

} // namespace aua::uni
