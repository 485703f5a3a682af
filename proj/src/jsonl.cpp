#include "aua/jsonl.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace aua {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string line_label(std::size_t line) { return "line " + std::to_string(line); }

std::string trimmed(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r\n\f\v");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r\n\f\v");
    return s.substr(begin, end - begin + 1);
}

const json& require_field(const json& obj, const char* name, const std::string& location) {
    auto it = obj.find(name);
    if (it == obj.end()) {
        throw ValidationError(location, name, "required field is missing");
    }
    return *it;
}

std::string require_string(const json& obj, const char* name, const std::string& location) {
    const json& v = require_field(obj, name, location);
    if (!v.is_string()) throw ValidationError(location, name, "expected a string");
    return v.get<std::string>();
}

int require_int(const json& obj, const char* name, const std::string& location) {
    const json& v = require_field(obj, name, location);
    if (!v.is_number_integer()) throw ValidationError(location, name, "expected an integer");
    return v.get<int>();
}

void warn_unknown_fields(const json& obj, std::initializer_list<std::string_view> known,
                         const std::string& location, Diagnostics* diags) {
    if (diags == nullptr) return;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool found = false;
        for (std::string_view k : known) {
            if (it.key() == k) {
                found = true;
                break;
            }
        }
        if (!found) diags->warn(location, "unknown field \"" + it.key() + "\" ignored");
    }
}

AuthorMention parse_author(const json& obj, const std::string& location, Diagnostics* diags) {
    if (!obj.is_object()) throw ValidationError(location, "", "expected an author object");
    warn_unknown_fields(obj, {"forename", "surname", "gender", "institution", "career_start"},
                        location, diags);

    AuthorMention mention;
    mention.forename = trimmed(require_string(obj, "forename", location));
    mention.surname = trimmed(require_string(obj, "surname", location));
    const std::string gender = require_string(obj, "gender", location);
    auto g = gender_from_string(gender);
    if (!g) throw ValidationError(location, "gender", "unrecognized gender \"" + gender + "\"");
    mention.gender = *g;
    mention.institution = require_string(obj, "institution", location);

    if (auto it = obj.find("career_start"); it != obj.end() && !it->is_null()) {
        if (!it->is_object()) throw ValidationError(location, "career_start", "expected an object");
        CareerStart cs;
        cs.day = require_int(*it, "day", location + ": career_start");
        cs.month = require_int(*it, "month", location + ": career_start");
        mention.career_start = cs;
    }
    validate_mention(mention, location);
    return mention;
}

} // namespace

Corpus parse_jsonl(std::istream& input, Diagnostics* diags) {
    Corpus corpus;
    bool institutions_from_header = false;
    bool saw_content = false;
    std::set<std::string> record_ids;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        if (trimmed(line).empty()) continue;
        const std::string location = line_label(line_no);

        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(location, e.what());
        }
        if (!obj.is_object()) throw ParseError(location, "expected a JSON object");

        // Institution table header, only valid as the first content line.
        if (obj.contains("institutions")) {
            if (saw_content) {
                throw ValidationError(location, "institutions",
                                      "institution header must be the first line");
            }
            if (obj.size() != 1 || !obj["institutions"].is_object()) {
                throw ValidationError(location, "institutions", "expected {\"institutions\": {...}}");
            }
            for (auto it = obj["institutions"].begin(); it != obj["institutions"].end(); ++it) {
                if (!it.value().is_string()) {
                    throw ValidationError(location, "institutions." + it.key(),
                                          "expected a display-name string");
                }
                const std::string name = it.value().get<std::string>();
                if (name.empty()) {
                    throw ValidationError(location, "institutions." + it.key(),
                                          "display name must be non-empty");
                }
                corpus.institutions[it.key()] = Institution{it.key(), name};
            }
            institutions_from_header = true;
            saw_content = true;
            continue;
        }
        saw_content = true;

        warn_unknown_fields(obj, {"id", "title", "year", "venue", "authors", "citations_per_year"},
                            location, diags);

        PaperRecord record;
        record.id = require_string(obj, "id", location);
        if (!record_ids.insert(record.id).second) {
            throw ValidationError(location, "id", "duplicate record id \"" + record.id + "\"");
        }
        record.title = require_string(obj, "title", location);
        record.year = require_int(obj, "year", location);
        if (auto it = obj.find("venue"); it != obj.end() && !it->is_null()) {
            if (!it->is_string()) throw ValidationError(location, "venue", "expected a string");
            record.venue = it->get<std::string>();
        }

        const json& authors = require_field(obj, "authors", location);
        if (!authors.is_array() || authors.empty()) {
            throw ValidationError(location, "authors", "expected a non-empty array");
        }
        for (std::size_t i = 0; i < authors.size(); ++i) {
            AuthorMention mention =
                parse_author(authors[i], location + ": authors[" + std::to_string(i) + "]", diags);
            if (institutions_from_header) {
                if (corpus.institutions.find(mention.institution) == corpus.institutions.end()) {
                    throw ValidationError(location, "authors[" + std::to_string(i) + "].institution",
                                          "id \"" + mention.institution +
                                              "\" not in the institution table");
                }
            } else {
                if (mention.institution.empty()) {
                    throw ValidationError(location, "authors[" + std::to_string(i) + "].institution",
                                          "institution must be non-empty");
                }
                // Auto-register by display name; the name doubles as the id.
                corpus.institutions.emplace(mention.institution,
                                            Institution{mention.institution, mention.institution});
            }
            record.authors.push_back(std::move(mention));
        }

        if (auto it = obj.find("citations_per_year"); it != obj.end() && !it->is_null()) {
            if (!it->is_object()) {
                throw ValidationError(location, "citations_per_year", "expected an object");
            }
            for (auto cit = it->begin(); cit != it->end(); ++cit) {
                int year = 0;
                const std::string& key = cit.key();
                auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), year);
                if (ec != std::errc{} || ptr != key.data() + key.size()) {
                    throw ValidationError(location, "citations_per_year",
                                          "key \"" + key + "\" is not a year");
                }
                if (!cit.value().is_number_integer() || cit.value().get<std::int64_t>() < 0) {
                    throw ValidationError(location, "citations_per_year." + key,
                                          "expected a non-negative integer");
                }
                record.citations_per_year[year] = cit.value().get<std::int64_t>();
            }
        }

        corpus.records.push_back(std::move(record));
    }

    return corpus;
}

Corpus parse_jsonl(const std::string& text, Diagnostics* diags) {
    std::istringstream stream(text);
    return parse_jsonl(stream, diags);
}

std::string serialize_jsonl(const Corpus& corpus) {
    std::string out;
    if (!corpus.institutions.empty()) {
        ordered_json header;
        ordered_json table = ordered_json::object();
        for (const auto& [id, inst] : corpus.institutions) table[id] = inst.display_name;
        header["institutions"] = table;
        out += header.dump();
        out += '\n';
    }
    for (const PaperRecord& record : corpus.records) {
        ordered_json obj;
        obj["id"] = record.id;
        obj["title"] = record.title;
        obj["year"] = record.year;
        if (record.venue) obj["venue"] = *record.venue;
        ordered_json authors = ordered_json::array();
        for (const AuthorMention& mention : record.authors) {
            ordered_json a;
            a["forename"] = mention.forename;
            a["surname"] = mention.surname;
            a["gender"] = std::string(to_string(mention.gender));
            a["institution"] = mention.institution;
            if (mention.career_start) {
                a["career_start"] = {{"day", mention.career_start->day},
                                     {"month", mention.career_start->month}};
            }
            authors.push_back(std::move(a));
        }
        obj["authors"] = std::move(authors);
        if (!record.citations_per_year.empty()) {
            ordered_json cites = ordered_json::object();
            for (const auto& [year, count] : record.citations_per_year) {
                cites[std::to_string(year)] = count;
            }
            obj["citations_per_year"] = std::move(cites);
        }
        out += obj.dump();
        out += '\n';
    }
    return out;
}

} // namespace aua
