#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace aua {

struct DecodedText {
    std::string text;
    std::vector<std::string> warnings; // unknown escapes, malformed accents
};

// Decodes LaTeX accent escapes ({\"x}, \"x, \'{x}, {\ss}, \c{c}, ...)
// into single composed code points. A tie (~) becomes a space, escaped
// specials (\&, \%, \_, \{, ...) become the literal character. Unknown
// escapes pass through verbatim with a warning. Grouping braces that are
// not part of an escape are preserved.
//
// Throws ParseError with a byte offset on unbalanced braces.
DecodedText decode_latex_escapes(std::string_view raw);

} // namespace aua
