#include "aua/bibtex.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

#include "aua/latex.hpp"
#include "aua/text.hpp"

namespace aua {
namespace {

using json = nlohmann::json;

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string trim_collapse(std::string_view s) {
    std::string out;
    bool pending = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!out.empty()) pending = true;
        } else {
            if (pending) out.push_back(' ');
            pending = false;
            out.push_back(c);
        }
    }
    return out;
}

std::string strip_braces(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c != '{' && c != '}') out.push_back(c);
    }
    return out;
}

// Decoded escape sequences, grouping braces removed, whitespace collapsed.
std::string clean_value(std::string_view raw, const std::string& location,
                        Diagnostics* diags) {
    DecodedText decoded;
    try {
        decoded = decode_latex_escapes(raw);
    } catch (const ParseError& e) {
        throw ParseError(location, e.what());
    }
    if (diags != nullptr) {
        for (const auto& w : decoded.warnings) diags->warn(location, w);
    }
    return trim_collapse(strip_braces(decoded.text));
}

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }
    std::size_t pos() const { return pos_; }

    std::size_t line() const {
        return 1 + static_cast<std::size_t>(
                       std::count(text_.begin(), text_.begin() + static_cast<long>(pos_), '\n'));
    }

    std::string location() const { return "line " + std::to_string(line()); }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    // Advances to the next '@' that starts an entry; everything between
    // entries is ignored, as in BibTeX.
    bool seek_entry() {
        while (!eof() && peek() != '@') ++pos_;
        return !eof();
    }

    std::string take_word() {
        std::size_t start = pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-' ||
                          peek() == '_')) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    // Consumes a {...} group, returning its inner text. Assumes the caller
    // positioned the cursor on the opening brace.
    std::string take_group(const std::string& entry_location) {
        ++pos_; // '{'
        std::size_t start = pos_;
        int depth = 1;
        while (!eof()) {
            char c = take();
            if (c == '{') {
                ++depth;
            } else if (c == '}') {
                if (--depth == 0) return std::string(text_.substr(start, pos_ - start - 1));
            }
        }
        throw ParseError(entry_location, "unbalanced braces: group opened but never closed");
    }

    std::string take_quoted(const std::string& entry_location) {
        ++pos_; // '"'
        std::size_t start = pos_;
        int depth = 0;
        while (!eof()) {
            char c = take();
            if (c == '{') {
                ++depth;
            } else if (c == '}') {
                --depth;
            } else if (c == '"' && depth == 0) {
                return std::string(text_.substr(start, pos_ - start - 1));
            }
        }
        throw ParseError(entry_location, "unterminated quoted value");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// Splits a decoded author field on the word "and" at brace depth zero.
std::vector<std::string> split_authors(std::string_view value) {
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    std::size_t i = 0;
    while (i < value.size()) {
        char c = value[i];
        if (c == '{') ++depth;
        if (c == '}') --depth;
        if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) {
            // Look ahead for the separator word.
            std::size_t j = i;
            while (j < value.size() && std::isspace(static_cast<unsigned char>(value[j]))) ++j;
            if (j + 3 <= value.size() &&
                to_lower_ascii(value.substr(j, 3)) == "and" &&
                (j + 3 == value.size() ||
                 std::isspace(static_cast<unsigned char>(value[j + 3])))) {
                parts.push_back(current);
                current.clear();
                i = j + 3;
                continue;
            }
        }
        current.push_back(c);
        ++i;
    }
    parts.push_back(current);
    return parts;
}

AuthorMention parse_author_name(std::string_view part, const std::string& location,
                                std::size_t index) {
    std::string cleaned = trim_collapse(strip_braces(part));
    std::string field = "author[" + std::to_string(index) + "]";
    AuthorMention mention;
    auto comma = cleaned.find(',');
    if (comma != std::string::npos) {
        mention.surname = trim_collapse(cleaned.substr(0, comma));
        mention.forename = trim_collapse(cleaned.substr(comma + 1));
    } else {
        auto last_space = cleaned.rfind(' ');
        if (last_space == std::string::npos) {
            throw ValidationError(location, field,
                                  "cannot split \"" + cleaned + "\" into forename and surname");
        }
        mention.forename = cleaned.substr(0, last_space);
        mention.surname = cleaned.substr(last_space + 1);
    }
    if (mention.forename.empty() || mention.surname.empty()) {
        throw ValidationError(location, field,
                              "forename and surname must both be non-empty");
    }
    return mention;
}

std::optional<CareerStart> parse_sidecar_career(const json& value, const std::string& key) {
    if (!value.is_object()) {
        throw ValidationError("sidecar \"" + key + "\"", "career_start",
                              "must be an object with day and month");
    }
    if (!value.contains("day") || !value.contains("month") ||
        !value["day"].is_number_integer() || !value["month"].is_number_integer()) {
        throw ValidationError("sidecar \"" + key + "\"", "career_start",
                              "day and month must be integers");
    }
    CareerStart cs{value["day"].get<int>(), value["month"].get<int>()};
    validate_career_start(cs, "sidecar \"" + key + "\"", "career_start");
    return cs;
}

} // namespace

std::string sidecar_key(const AuthorMention& mention) {
    return mention.canonical_forename().key + "|" + mention.canonical_surname().key + "|" +
           mention.institution;
}

Sidecar load_sidecar(std::istream& input) {
    std::ostringstream buf;
    buf << input.rdbuf();
    return load_sidecar(buf.str());
}

Sidecar load_sidecar(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("sidecar", e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError("sidecar", "root", "must be a JSON object");
    }
    Sidecar sidecar;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_object()) {
            throw ValidationError("sidecar \"" + key + "\"", "entry", "must be an object");
        }
        SidecarEntry entry;
        if (value.contains("gender")) {
            if (!value["gender"].is_string()) {
                throw ValidationError("sidecar \"" + key + "\"", "gender", "must be a string");
            }
            auto gender = gender_from_string(value["gender"].get<std::string>());
            if (!gender) {
                throw ValidationError("sidecar \"" + key + "\"", "gender",
                                      "unknown value \"" + value["gender"].get<std::string>() +
                                          "\"");
            }
            entry.gender = *gender;
        }
        if (value.contains("career_start") && !value["career_start"].is_null()) {
            entry.career_start = parse_sidecar_career(value["career_start"], key);
        }
        sidecar.emplace(key, entry);
    }
    return sidecar;
}

Corpus parse_bibtex_subset(std::istream& input, const Sidecar& sidecar, Diagnostics* diags) {
    std::ostringstream buf;
    buf << input.rdbuf();
    return parse_bibtex_subset(buf.str(), sidecar, diags);
}

Corpus parse_bibtex_subset(const std::string& text, const Sidecar& sidecar,
                           Diagnostics* diags) {
    Corpus corpus;
    Cursor cur(text);

    while (cur.seek_entry()) {
        std::string at_location = cur.location();
        cur.take(); // '@'
        std::string type = to_lower_ascii(cur.take_word());
        if (type.empty()) {
            throw ParseError(at_location, "expected an entry type after '@'");
        }
        cur.skip_ws();

        if (type == "comment" || type == "preamble" || type == "string") {
            if (!cur.eof() && cur.peek() == '{') cur.take_group(at_location);
            if (diags != nullptr) {
                diags->warn(at_location, "@" + type + " is not supported; skipped");
            }
            continue;
        }

        if (cur.eof() || cur.peek() != '{') {
            throw ParseError(at_location, "expected '{' after entry type");
        }
        cur.take(); // '{'
        cur.skip_ws();

        std::string key;
        while (!cur.eof() && cur.peek() != ',' && cur.peek() != '}' &&
               !std::isspace(static_cast<unsigned char>(cur.peek()))) {
            key.push_back(cur.take());
        }
        if (key.empty()) {
            throw ParseError(at_location, "entry has no citation key");
        }
        std::string location = "entry \"" + key + "\"";
        if (corpus.find_record(key) != nullptr) {
            throw ValidationError(location, "id", "duplicate entry key");
        }

        std::map<std::string, std::string> fields;
        for (;;) {
            cur.skip_ws();
            if (cur.eof()) {
                throw ParseError(location, "unbalanced braces: entry never closed");
            }
            if (cur.peek() == ',') {
                cur.take();
                continue;
            }
            if (cur.peek() == '}') {
                cur.take();
                break;
            }
            std::string name = to_lower_ascii(cur.take_word());
            if (name.empty()) {
                throw ParseError(cur.location(), "expected a field name in " + location);
            }
            cur.skip_ws();
            if (cur.eof() || cur.peek() != '=') {
                throw ParseError(location, "expected '=' after field \"" + name + "\"");
            }
            cur.take();
            cur.skip_ws();
            std::string value;
            if (!cur.eof() && cur.peek() == '{') {
                value = cur.take_group(location);
            } else if (!cur.eof() && cur.peek() == '"') {
                value = cur.take_quoted(location);
            } else {
                while (!cur.eof() && cur.peek() != ',' && cur.peek() != '}' &&
                       !std::isspace(static_cast<unsigned char>(cur.peek()))) {
                    value.push_back(cur.take());
                }
            }
            if (fields.contains(name)) {
                if (diags != nullptr) {
                    diags->warn(location, "duplicate field \"" + name + "\"; keeping the first");
                }
            } else {
                fields.emplace(name, value);
            }
        }

        PaperRecord record;
        record.id = key;

        if (auto it = fields.find("title"); it != fields.end()) {
            record.title = clean_value(it->second, location, diags);
        }
        if (record.title.empty()) {
            throw ValidationError(location, "title", "required field is missing or empty");
        }

        auto year_it = fields.find("year");
        if (year_it == fields.end()) {
            throw ValidationError(location, "year", "required field is missing");
        }
        std::string year_text = clean_value(year_it->second, location, diags);
        auto [ptr, ec] = std::from_chars(year_text.data(), year_text.data() + year_text.size(),
                                         record.year);
        if (ec != std::errc() || ptr != year_text.data() + year_text.size()) {
            throw ValidationError(location, "year", "\"" + year_text + "\" is not an integer");
        }

        if (auto it = fields.find("journal"); it != fields.end()) {
            record.venue = clean_value(it->second, location, diags);
        } else if (auto bt = fields.find("booktitle"); bt != fields.end()) {
            record.venue = clean_value(bt->second, location, diags);
        }

        std::string institution;
        if (auto it = fields.find("institution"); it != fields.end()) {
            institution = clean_value(it->second, location, diags);
        } else if (auto sc = fields.find("school"); sc != fields.end()) {
            institution = clean_value(sc->second, location, diags);
        }
        if (institution.empty()) {
            throw ValidationError(location, "institution",
                                  "an institution or school field is required");
        }
        corpus.institutions.emplace(institution, Institution{institution, institution});

        auto author_it = fields.find("author");
        if (author_it == fields.end()) {
            throw ParseError(location, "entry has no author field");
        }
        DecodedText decoded_authors;
        try {
            decoded_authors = decode_latex_escapes(author_it->second);
        } catch (const ParseError& e) {
            throw ParseError(location, e.what());
        }
        if (diags != nullptr) {
            for (const auto& w : decoded_authors.warnings) diags->warn(location, w);
        }

        std::size_t index = 0;
        for (const auto& part : split_authors(decoded_authors.text)) {
            std::string cleaned = trim_collapse(strip_braces(part));
            if (cleaned.empty()) continue;
            if (to_lower_ascii(cleaned) == "others") {
                if (diags != nullptr) {
                    diags->warn(location, "\"others\" author placeholder skipped");
                }
                continue;
            }
            AuthorMention mention = parse_author_name(part, location, index);
            mention.institution = institution;
            if (auto it = sidecar.find(sidecar_key(mention)); it != sidecar.end()) {
                mention.gender = it->second.gender;
                mention.career_start = it->second.career_start;
            }
            validate_mention(mention, location);
            record.authors.push_back(std::move(mention));
            ++index;
        }
        if (record.authors.empty()) {
            throw ParseError(location, "author field names no authors");
        }

        corpus.records.push_back(std::move(record));
    }

    return corpus;
}

} // namespace aua
