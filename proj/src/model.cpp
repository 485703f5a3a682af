#include "aua/model.hpp"

#include "aua/errors.hpp"

#include <set>

namespace aua {

std::string_view to_string(Gender g) noexcept {
    switch (g) {
    case Gender::female: return "female";
    case Gender::male: return "male";
    case Gender::diverse: return "diverse";
    case Gender::unknown: return "unknown";
    }
    return "unknown";
}

std::optional<Gender> gender_from_string(std::string_view s) noexcept {
    if (s == "female") return Gender::female;
    if (s == "male") return Gender::male;
    if (s == "diverse") return Gender::diverse;
    if (s == "unknown") return Gender::unknown;
    return std::nullopt;
}

CanonicalName AuthorMention::canonical_full_name() const {
    return CanonicalName{canonical_forename().key + " " + canonical_surname().key};
}

const Institution* Corpus::find_institution(const std::string& id) const {
    auto it = institutions.find(id);
    return it == institutions.end() ? nullptr : &it->second;
}

const Institution& Corpus::institution_of(const AuthorMention& mention) const {
    const Institution* inst = find_institution(mention.institution);
    if (inst == nullptr) {
        throw ValidationError("", "institution",
                              "unresolvable institution reference \"" + mention.institution + "\"");
    }
    return *inst;
}

const PaperRecord* Corpus::find_record(const std::string& id) const {
    for (const PaperRecord& record : records) {
        if (record.id == id) return &record;
    }
    return nullptr;
}

std::size_t Corpus::mention_count() const noexcept {
    std::size_t n = 0;
    for (const PaperRecord& record : records) n += record.authors.size();
    return n;
}

void validate_career_start(const CareerStart& cs, const std::string& location,
                           const std::string& field) {
    if (cs.day < 1 || cs.day > 31) {
        throw ValidationError(location, field + ".day",
                              "day " + std::to_string(cs.day) + " out of range [1,31]");
    }
    if (cs.month < 1 || cs.month > 12) {
        throw ValidationError(location, field + ".month",
                              "month " + std::to_string(cs.month) + " out of range [1,12]");
    }
}

void validate_mention(const AuthorMention& mention, const std::string& location) {
    if (count_letters(mention.forename) == 0) {
        throw ValidationError(location, "forename",
                              "must contain at least one alphabetic character");
    }
    if (count_letters(mention.surname) == 0) {
        throw ValidationError(location, "surname",
                              "must contain at least one alphabetic character");
    }
    if (mention.career_start) {
        validate_career_start(*mention.career_start, location, "career_start");
    }
}

void Corpus::validate() const {
    for (const auto& [id, inst] : institutions) {
        if (inst.display_name.empty()) {
            throw ValidationError("institution \"" + id + "\"", "display_name", "must be non-empty");
        }
        if (inst.id != id) {
            throw ValidationError("institution \"" + id + "\"", "id", "table key mismatch");
        }
    }
    std::set<std::string> seen_ids;
    for (const PaperRecord& record : records) {
        const std::string location = "record \"" + record.id + "\"";
        if (!seen_ids.insert(record.id).second) {
            throw ValidationError(location, "id", "duplicate record id");
        }
        if (record.authors.empty()) {
            throw ValidationError(location, "authors", "must be non-empty");
        }
        for (const AuthorMention& mention : record.authors) {
            validate_mention(mention, location);
            if (find_institution(mention.institution) == nullptr) {
                throw ValidationError(location, "institution",
                                      "unresolvable institution reference \"" +
                                          mention.institution + "\"");
            }
        }
        for (const auto& [year, count] : record.citations_per_year) {
            if (count < 0) {
                throw ValidationError(location, "citations_per_year",
                                      "negative count for year " + std::to_string(year));
            }
        }
    }
}

} // namespace aua
