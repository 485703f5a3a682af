#pragma once

#include <string>
#include <vector>

#include "aua/extended_real.hpp"
#include "aua/model.hpp"

namespace aua {

// Census used by geil(): per configured category, the number of authors of
// that gender plus one. Every count is therefore >= 1.
struct GenderCensus {
    std::vector<std::pair<Gender, long long>> counts;
};

const std::vector<Gender>& default_gender_categories();

// Throws InvalidConfig on duplicate categories or an "unknown" category,
// DegenerateCensus when fewer than two categories are configured, and
// UnknownGender when an author's gender is outside the categories.
GenderCensus gender_census(const std::vector<AuthorMention>& authors,
                           const std::vector<Gender>& categories);

// Count of mentions whose canonical (forename, surname) pair also appears on
// at least one other mention. Never 1. Throws EmptyAuthorSet.
long long nsa(const std::vector<AuthorMention>& authors);

// Mean absolute census difference over unordered category pairs, scaled by
// 1 / (2 * (|categories| - 1)). Zero means a perfectly balanced census.
double geil(const std::vector<AuthorMention>& authors,
            const std::vector<Gender>& categories = default_gender_categories());

// (exp(A) + exp(U)) * max letter count over the institutions, where A and U
// are the negated mean pairwise name and institution differences.
// institution_names holds one display name per author, order-aligned.
double ssim(const std::vector<AuthorMention>& authors,
            const std::vector<std::string>& institution_names);
double ssim(const PaperRecord& record, const Corpus& corpus);

// Career start-date correlation, evaluated literally: per variable (day,
// month), numerator sum_i sum_j (v_i - mean)(v_j - mean) over a denominator
// sum_i (v_i - mean). The denominator telescopes to zero for every input, so
// each term (and their extended-real sum) is positive infinity; `notes`
// records which denominators vanished. Deviations are kept in exact integer
// arithmetic (scaled by the author count) so the zero test is never subject
// to rounding. Throws MissingCareerData or EmptyAuthorSet.
ExtendedReal acdc(const std::vector<AuthorMention>& authors,
                  std::vector<std::string>* notes = nullptr);

struct MetricReport {
    std::string record_id;
    ExtendedReal nsa = ExtendedReal::undefined();
    ExtendedReal geil = ExtendedReal::undefined();
    ExtendedReal ssim = ExtendedReal::undefined();
    ExtendedReal acdc = ExtendedReal::undefined();
    std::vector<std::string> notes;
};

// All four metrics for one record. A metric whose precondition fails (an
// unknown gender, missing career data) comes back undefined with a note;
// the other slots are still computed. Unresolvable institution references
// throw ValidationError.
MetricReport compute_report(const PaperRecord& record, const Corpus& corpus,
                            const std::vector<Gender>& categories = default_gender_categories());

} // namespace aua
