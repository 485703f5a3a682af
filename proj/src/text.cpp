#include "aua/text.hpp"

#include "aua/errors.hpp"
#include "aua/unicode.hpp"

namespace aua {

CanonicalName normalize_text(std::string_view raw) {
    std::u32string cps = uni::decode_utf8(raw);

    // Compose base letter + combining mark into the precomposed form,
    // then fold case.
    std::u32string composed;
    composed.reserve(cps.size());
    for (char32_t cp : cps) {
        if (uni::is_combining_mark(cp) && !composed.empty()) {
            if (char32_t c = uni::compose(composed.back(), cp); c != 0) {
                composed.back() = c;
                continue;
            }
        }
        composed.push_back(cp);
    }
    for (char32_t& cp : composed) cp = uni::fold_case(cp);

    // Trim and collapse whitespace runs.
    std::u32string collapsed;
    collapsed.reserve(composed.size());
    bool pending_space = false;
    for (char32_t cp : composed) {
        if (uni::is_space(cp)) {
            pending_space = !collapsed.empty();
            continue;
        }
        if (pending_space) {
            collapsed.push_back(U' ');
            pending_space = false;
        }
        collapsed.push_back(cp);
    }

    if (collapsed.empty()) {
        throw InvalidName("name is empty after trimming: \"" + std::string(raw) + "\"");
    }
    return CanonicalName{uni::encode_utf8(collapsed)};
}

std::size_t count_letters(std::string_view text) noexcept {
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto [cp, length] = uni::decode_one(text, pos);
        if (uni::is_alpha(cp)) ++count;
        pos += length;
    }
    return count;
}

int differs(const CanonicalName& a, const CanonicalName& b) noexcept {
    return a.key == b.key ? 0 : 1;
}

} // namespace aua
