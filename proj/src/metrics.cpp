#include "aua/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "aua/errors.hpp"
#include "aua/text.hpp"

namespace aua {
namespace {

std::string author_field(std::size_t i, const char* name) {
    return "authors[" + std::to_string(i) + "]." + name;
}

// One literal correlation term: numerator over denominator, both built from
// deviations of `values` around their mean. The deviations are scaled by
// n (e_i = n*v_i - sum) so both sums stay in integer arithmetic; the scale
// cancels in the quotient (numerator carries n^2, denominator carries n^1,
// so the true ratio is scaled_num / (n * scaled_den)).
ExtendedReal correlation_term(const std::vector<long long>& values, const char* label,
                              std::vector<std::string>* notes) {
    const long long n = static_cast<long long>(values.size());
    long long total = 0;
    for (long long v : values) total += v;

    long long scaled_den = 0;
    for (long long v : values) scaled_den += n * v - total;

    if (scaled_den == 0) {
        if (notes != nullptr) {
            notes->push_back(std::string("acdc: ") + label +
                             "-term denominator sum(" + label + "_i - mean(" + label +
                             ")) vanished; term is infinite");
        }
        return ExtendedReal::infinity();
    }
    long long scaled_num = 0;
    for (long long vi : values) {
        for (long long vj : values) {
            scaled_num += (n * vi - total) * (n * vj - total);
        }
    }
    double ratio = static_cast<double>(scaled_num) /
                   (static_cast<double>(n) * static_cast<double>(scaled_den));
    return ExtendedReal::finite(ratio);
}

} // namespace

const std::vector<Gender>& default_gender_categories() {
    static const std::vector<Gender> categories{Gender::female, Gender::male, Gender::diverse};
    return categories;
}

GenderCensus gender_census(const std::vector<AuthorMention>& authors,
                           const std::vector<Gender>& categories) {
    for (std::size_t i = 0; i < categories.size(); ++i) {
        if (categories[i] == Gender::unknown) {
            throw InvalidConfig("gender categories", "categories",
                                "\"unknown\" cannot be a census category");
        }
        for (std::size_t j = i + 1; j < categories.size(); ++j) {
            if (categories[i] == categories[j]) {
                throw InvalidConfig("gender categories", "categories",
                                    "duplicate category \"" +
                                        std::string(to_string(categories[i])) + "\"");
            }
        }
    }
    if (categories.size() < 2) {
        throw DegenerateCensus("gender categories", "categories",
                               "at least two categories are required");
    }

    GenderCensus census;
    for (Gender g : categories) census.counts.emplace_back(g, 1);
    for (std::size_t i = 0; i < authors.size(); ++i) {
        auto it = std::find_if(census.counts.begin(), census.counts.end(),
                               [&](const auto& entry) { return entry.first == authors[i].gender; });
        if (it == census.counts.end()) {
            throw UnknownGender(author_field(i, "gender"),
                                "gender \"" + std::string(to_string(authors[i].gender)) +
                                    "\" is outside the configured categories");
        }
        ++it->second;
    }
    return census;
}

long long nsa(const std::vector<AuthorMention>& authors) {
    if (authors.empty()) {
        throw EmptyAuthorSet("authors", "at least one author is required");
    }
    std::map<std::string, long long> occurrences;
    for (const auto& a : authors) {
        ++occurrences[a.canonical_full_name().key];
    }
    long long shared = 0;
    for (const auto& a : authors) {
        if (occurrences[a.canonical_full_name().key] >= 2) ++shared;
    }
    return shared;
}

double geil(const std::vector<AuthorMention>& authors, const std::vector<Gender>& categories) {
    GenderCensus census = gender_census(authors, categories);
    long long sum = 0;
    for (std::size_t i = 0; i < census.counts.size(); ++i) {
        for (std::size_t j = i + 1; j < census.counts.size(); ++j) {
            sum += std::llabs(census.counts[i].second - census.counts[j].second);
        }
    }
    return static_cast<double>(sum) /
           (2.0 * static_cast<double>(categories.size() - 1));
}

double ssim(const std::vector<AuthorMention>& authors,
            const std::vector<std::string>& institution_names) {
    if (authors.empty()) {
        throw EmptyAuthorSet("authors", "at least one author is required");
    }
    if (institution_names.size() != authors.size()) {
        throw InvalidInput("authors", "institution_names",
                           "one institution name per author is required");
    }

    std::vector<CanonicalName> forenames;
    std::vector<CanonicalName> surnames;
    std::vector<CanonicalName> institutions;
    std::size_t max_letters = 0;
    for (std::size_t i = 0; i < authors.size(); ++i) {
        if (institution_names[i].empty()) {
            throw ValidationError(author_field(i, "institution"),
                                  "institution display name must not be empty");
        }
        forenames.push_back(authors[i].canonical_forename());
        surnames.push_back(authors[i].canonical_surname());
        institutions.push_back(normalize_text(institution_names[i]));
        max_letters = std::max(max_letters, count_letters(institution_names[i]));
    }

    const std::size_t n = authors.size();
    long long name_diffs = 0;
    long long institution_diffs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            name_diffs += differs(forenames[i], forenames[j]) + differs(surnames[i], surnames[j]);
            institution_diffs += differs(institutions[i], institutions[j]);
        }
    }

    double a = 0.0;
    double u = 0.0;
    if (n > 1) {
        a = -static_cast<double>(name_diffs) / static_cast<double>(n - 1);
        u = -static_cast<double>(institution_diffs) / static_cast<double>(n - 1);
    }
    return (std::exp(a) + std::exp(u)) * static_cast<double>(max_letters);
}

double ssim(const PaperRecord& record, const Corpus& corpus) {
    std::vector<std::string> names;
    names.reserve(record.authors.size());
    for (const auto& author : record.authors) {
        names.push_back(corpus.institution_of(author).display_name);
    }
    return ssim(record.authors, names);
}

ExtendedReal acdc(const std::vector<AuthorMention>& authors, std::vector<std::string>* notes) {
    if (authors.empty()) {
        throw EmptyAuthorSet("authors", "at least one author is required");
    }
    std::vector<long long> days;
    std::vector<long long> months;
    for (std::size_t i = 0; i < authors.size(); ++i) {
        if (!authors[i].career_start) {
            throw MissingCareerData(author_field(i, "career_start"),
                                    "career start date is required");
        }
        days.push_back(authors[i].career_start->day);
        months.push_back(authors[i].career_start->month);
    }
    ExtendedReal day_term = correlation_term(days, "day", notes);
    ExtendedReal month_term = correlation_term(months, "month", notes);
    return day_term + month_term;
}

MetricReport compute_report(const PaperRecord& record, const Corpus& corpus,
                            const std::vector<Gender>& categories) {
    MetricReport report;
    report.record_id = record.id;

    report.nsa = ExtendedReal::finite(static_cast<double>(nsa(record.authors)));

    try {
        report.geil = ExtendedReal::finite(geil(record.authors, categories));
    } catch (const UnknownGender& e) {
        report.geil = ExtendedReal::undefined();
        report.notes.push_back(std::string("geil: ") + e.what());
    } catch (const DegenerateCensus& e) {
        report.geil = ExtendedReal::undefined();
        report.notes.push_back(std::string("geil: ") + e.what());
    }

    report.ssim = ExtendedReal::finite(ssim(record, corpus));

    try {
        std::vector<std::string> acdc_notes;
        report.acdc = acdc(record.authors, &acdc_notes);
        report.notes.insert(report.notes.end(), acdc_notes.begin(), acdc_notes.end());
    } catch (const MissingCareerData& e) {
        report.acdc = ExtendedReal::undefined();
        report.notes.push_back(std::string("acdc: ") + e.what());
    }

    return report;
}

} // namespace aua
