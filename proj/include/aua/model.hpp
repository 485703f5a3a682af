#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aua/text.hpp"

namespace aua {

enum class Gender { female, male, diverse, unknown };

std::string_view to_string(Gender g) noexcept;
std::optional<Gender> gender_from_string(std::string_view s) noexcept;

// Day and month of the first university-contract day. The year is
// deliberately not modeled.
struct CareerStart {
    int day = 0;   // 1..31
    int month = 0; // 1..12

    bool operator==(const CareerStart&) const = default;
};

// One author occurrence on one record.
struct AuthorMention {
    std::string forename;
    std::string surname;
    Gender gender = Gender::unknown;
    std::string institution; // id into the corpus institution table
    std::optional<CareerStart> career_start;

    bool operator==(const AuthorMention&) const = default;

    CanonicalName canonical_forename() const { return normalize_text(forename); }
    CanonicalName canonical_surname() const { return normalize_text(surname); }
    // "forename surname", normalized.
    CanonicalName canonical_full_name() const;
};

struct Institution {
    std::string id;
    std::string display_name; // as printed, may carry diacritics and punctuation

    bool operator==(const Institution&) const = default;
};

struct PaperRecord {
    std::string id;
    std::string title;
    int year = 0;
    std::vector<AuthorMention> authors; // ordered, non-empty
    std::optional<std::string> venue;
    std::map<int, std::int64_t> citations_per_year;

    bool operator==(const PaperRecord&) const = default;
};

// A validated collection of records plus the institution table. Treated
// as immutable once a parser returns it; safe to share across readers.
struct Corpus {
    std::vector<PaperRecord> records;
    std::map<std::string, Institution> institutions; // keyed by id

    bool operator==(const Corpus&) const = default;

    const Institution* find_institution(const std::string& id) const;
    // Throws ValidationError when the mention's reference is dangling.
    const Institution& institution_of(const AuthorMention& mention) const;
    const PaperRecord* find_record(const std::string& id) const;

    std::size_t mention_count() const noexcept;

    // Re-checks every invariant (used for programmatically built corpora;
    // the parsers validate inline with input locations).
    void validate() const;
};

// Shared invariant checks. `location` prefixes error messages
// ("line 3", "entry 'key'").
void validate_mention(const AuthorMention& mention, const std::string& location);
void validate_career_start(const CareerStart& cs, const std::string& location,
                           const std::string& field);

} // namespace aua
