#include "aua/latex.hpp"

#include "aua/errors.hpp"
#include "aua/unicode.hpp"

#include <cctype>
#include <optional>

namespace aua {

namespace {

bool is_ascii_letter(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Accent commands mapped to the combining mark they apply.
char32_t accent_mark(std::string_view command) noexcept {
    if (command.size() != 1) return 0;
    switch (command[0]) {
    case '`': return 0x0300;
    case '\'': return 0x0301;
    case '^': return 0x0302;
    case '~': return 0x0303;
    case '=': return 0x0304;
    case 'u': return 0x0306;
    case '.': return 0x0307;
    case '"': return 0x0308;
    case 'r': return 0x030A;
    case 'H': return 0x030B;
    case 'v': return 0x030C;
    case 'c': return 0x0327;
    case 'k': return 0x0328;
    default: return 0;
    }
}

// Character-producing macros (\ss, \ae, \o, ...).
char32_t macro_char(std::string_view word) noexcept {
    struct Entry {
        std::string_view word;
        char32_t cp;
    };
    static constexpr Entry kMacros[] = {
        {"ss", 0x00DF}, {"ae", 0x00E6}, {"AE", 0x00C6}, {"oe", 0x0153},
        {"OE", 0x0152}, {"aa", 0x00E5}, {"AA", 0x00C5}, {"o", 0x00F8},
        {"O", 0x00D8},  {"l", 0x0142},  {"L", 0x0141},  {"i", 0x0131},
        {"j", 0x0237},  {"dh", 0x00F0}, {"DH", 0x00D0}, {"th", 0x00FE},
        {"TH", 0x00DE}, {"dj", 0x0111}, {"DJ", 0x0110}, {"ng", 0x014B},
        {"NG", 0x014A},
    };
    for (const Entry& e : kMacros) {
        if (e.word == word) return e.cp;
    }
    return 0;
}

struct EscapeResult {
    bool ok = false;
    std::string out;               // decoded UTF-8 on success
    std::size_t next = 0;          // position after the escape
    std::string warning;           // set when !ok and the input should pass through
};

// Parses an escape starting at the backslash in text[pos]. On failure the
// caller emits the escape text verbatim.
EscapeResult parse_escape(std::string_view text, std::size_t pos) {
    EscapeResult res;
    std::size_t i = pos + 1; // past the backslash
    if (i >= text.size()) {
        res.warning = "dangling backslash";
        res.next = i;
        return res;
    }

    const char c = text[i];

    // Escaped special characters.
    if (c == '&' || c == '%' || c == '$' || c == '#' || c == '_' || c == '{' || c == '}') {
        res.ok = true;
        res.out.push_back(c);
        res.next = i + 1;
        return res;
    }

    std::string command;
    if (is_ascii_letter(c)) {
        while (i < text.size() && is_ascii_letter(text[i])) command.push_back(text[i++]);
    } else {
        command.push_back(c);
        ++i;
    }

    if (char32_t cp = macro_char(command); cp != 0) {
        // Swallow a trailing empty group (\ss{}).
        if (i + 1 < text.size() && text[i] == '{' && text[i + 1] == '}') i += 2;
        res.ok = true;
        uni::append_utf8(res.out, cp);
        res.next = i;
        return res;
    }

    char32_t mark = accent_mark(command);
    if (mark == 0) {
        res.warning = "unknown escape \"\\" + command + "\"";
        res.next = i;
        return res;
    }

    // Accent base: optional spaces, then a letter or a braced letter.
    while (i < text.size() && text[i] == ' ') ++i;
    char base = 0;
    if (i < text.size() && text[i] == '{') {
        if (i + 2 < text.size() && is_ascii_letter(text[i + 1]) && text[i + 2] == '}') {
            base = text[i + 1];
            i += 3;
        }
    } else if (i < text.size() && is_ascii_letter(text[i])) {
        base = text[i];
        ++i;
    }
    if (base == 0) {
        res.warning = "accent \"\\" + command + "\" without a base letter";
        res.next = pos + 1 + command.size();
        return res;
    }

    char32_t composed = uni::compose(static_cast<char32_t>(base), mark);
    if (composed == 0) {
        res.warning = "no composed form for \"\\" + command + base + "\"";
        res.next = i;
        return res;
    }
    res.ok = true;
    uni::append_utf8(res.out, composed);
    res.next = i;
    return res;
}

} // namespace

DecodedText decode_latex_escapes(std::string_view raw) {
    DecodedText result;
    result.text.reserve(raw.size());
    std::vector<std::size_t> open_braces;

    std::size_t pos = 0;
    while (pos < raw.size()) {
        const char c = raw[pos];
        if (c == '{') {
            // A brace group wrapping exactly one escape ({\"u}, {\ss}) is
            // consumed as a unit; other braces are grouping and kept.
            if (pos + 1 < raw.size() && raw[pos + 1] == '\\') {
                EscapeResult esc = parse_escape(raw, pos + 1);
                if (esc.ok && esc.next < raw.size() && raw[esc.next] == '}') {
                    result.text += esc.out;
                    pos = esc.next + 1;
                    continue;
                }
            }
            open_braces.push_back(pos);
            result.text.push_back(c);
            ++pos;
        } else if (c == '}') {
            if (open_braces.empty()) {
                throw ParseError("offset " + std::to_string(pos), "unbalanced closing brace");
            }
            open_braces.pop_back();
            result.text.push_back(c);
            ++pos;
        } else if (c == '\\') {
            EscapeResult esc = parse_escape(raw, pos);
            if (esc.ok) {
                result.text += esc.out;
            } else {
                result.warnings.push_back("offset " + std::to_string(pos) + ": " + esc.warning);
                result.text += raw.substr(pos, esc.next - pos);
            }
            pos = esc.next;
        } else if (c == '~') {
            result.text.push_back(' ');
            ++pos;
        } else {
            result.text.push_back(c);
            ++pos;
        }
    }

    if (!open_braces.empty()) {
        throw ParseError("offset " + std::to_string(open_braces.front()),
                         "unbalanced opening brace");
    }
    return result;
}

} // namespace aua
