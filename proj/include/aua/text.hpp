#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace aua {

// Normalized name text used for every equality test: composed form,
// case-folded, trimmed, internal whitespace runs collapsed to one space.
// Diacritics are significant (ü != u). Normalizing a canonical key
// returns it unchanged.
struct CanonicalName {
    std::string key;

    auto operator<=>(const CanonicalName&) const = default;
};

// Throws InvalidName if `raw` is empty after trimming.
CanonicalName normalize_text(std::string_view raw);

// Number of Unicode alphabetic code points. Spaces, hyphens, digits,
// parentheses and other punctuation do not count; a precomposed letter
// with diacritic counts as exactly 1. Operates on the string as printed.
std::size_t count_letters(std::string_view text) noexcept;

// Indicator: 0 iff the canonical strings are identical, 1 otherwise.
// Unequal lengths count as differing.
int differs(const CanonicalName& a, const CanonicalName& b) noexcept;

} // namespace aua
