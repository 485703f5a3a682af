#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "aua/errors.hpp"
#include "aua/jsonl.hpp"
#include "aua/metrics.hpp"
#include "aua/text.hpp"

using namespace aua;

namespace {

AuthorMention mention(std::string forename, std::string surname,
                      Gender gender = Gender::unknown, std::string institution = "X",
                      std::optional<CareerStart> career = {}) {
    AuthorMention m;
    m.forename = std::move(forename);
    m.surname = std::move(surname);
    m.gender = gender;
    m.institution = std::move(institution);
    m.career_start = career;
    return m;
}

// Census + ordered-pair enumeration, written independently of the library
// (ordered pairs halved instead of unordered pairs summed directly).
double geil_oracle(const std::vector<Gender>& genders) {
    long long counts[3] = {1, 1, 1};
    for (Gender g : genders) {
        switch (g) {
        case Gender::female: ++counts[0]; break;
        case Gender::male: ++counts[1]; break;
        case Gender::diverse: ++counts[2]; break;
        case Gender::unknown: REQUIRE(false);
        }
    }
    double ordered_sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i != j) ordered_sum += std::llabs(counts[i] - counts[j]);
        }
    }
    return (ordered_sum / 2.0) / (2.0 * (3 - 1));
}

std::vector<AuthorMention> with_genders(const std::vector<Gender>& genders) {
    std::vector<AuthorMention> authors;
    for (std::size_t i = 0; i < genders.size(); ++i) {
        authors.push_back(mention("F" + std::to_string(i), "S", genders[i]));
    }
    return authors;
}

bool same_value(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.is_undefined() || b.is_undefined()) return a.is_undefined() && b.is_undefined();
    return a == b;
}

} // namespace

TEST_CASE("nsa counts mentions whose full name recurs") {
    CHECK(nsa({mention("Vanessa", "Wirth"), mention("Vanessa", "Wirth")}) == 2);
    CHECK(nsa({mention("Allen", "Goodman"), mention("Joshua", "Goodman"),
               mention("Lucia", "Goodman")}) == 0);
    CHECK(nsa({mention("X", "Y"), mention("X", "Y"), mention("X", "Y")}) == 3);
    CHECK(nsa({mention("A", "B")}) == 0);
    CHECK_THROWS_AS(nsa({}), EmptyAuthorSet);
}

TEST_CASE("nsa matches names after normalization") {
    CHECK(nsa({mention("Vanessa", "WIRTH"), mention(" vanessa ", "Wirth")}) == 2);
    CHECK(nsa({mention("Jürgen", "Müller"), mention("Jurgen", "Muller")}) == 0);
}

TEST_CASE("nsa is never exactly one") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> name(0, 3);
    std::uniform_int_distribution<int> size(1, 6);
    for (int round = 0; round < 500; ++round) {
        std::vector<AuthorMention> authors;
        int n = size(rng);
        for (int i = 0; i < n; ++i) {
            authors.push_back(mention("F" + std::to_string(name(rng)), "S"));
        }
        CHECK(nsa(authors) != 1);
    }
}

TEST_CASE("geil reproduces the pinned census values") {
    CHECK(geil(with_genders({Gender::female, Gender::female})) == 1.0);
    CHECK(geil(with_genders({Gender::female, Gender::male, Gender::diverse})) == 0.0);
    CHECK(geil(with_genders({Gender::male, Gender::male, Gender::male})) == 1.5);
}

TEST_CASE("geil equals the oracle over all 81 four-author assignments") {
    const Gender cats[3] = {Gender::female, Gender::male, Gender::diverse};
    for (int code = 0; code < 81; ++code) {
        int c = code;
        std::vector<Gender> genders;
        for (int i = 0; i < 4; ++i) {
            genders.push_back(cats[c % 3]);
            c /= 3;
        }
        CAPTURE(code);
        CHECK(geil(with_genders(genders)) == geil_oracle(genders));
    }
}

TEST_CASE("geil is invariant under category relabeling") {
    std::vector<Gender> genders{Gender::female, Gender::female, Gender::male};
    double base = geil(with_genders(genders));
    CHECK(geil(with_genders(genders),
               {Gender::diverse, Gender::male, Gender::female}) == base);
}

TEST_CASE("geil guards its configuration") {
    CHECK_THROWS_AS(geil(with_genders({Gender::female, Gender::unknown})), UnknownGender);
    CHECK_THROWS_AS(geil(with_genders({Gender::female}), {Gender::female}),
                    DegenerateCensus);
    CHECK_THROWS_AS(geil(with_genders({Gender::female}),
                         {Gender::female, Gender::unknown}),
                    InvalidConfig);
    CHECK_THROWS_AS(geil(with_genders({Gender::female}),
                         {Gender::female, Gender::female}),
                    InvalidConfig);
    CHECK_THROWS_AS(
        geil(with_genders({Gender::diverse}), {Gender::female, Gender::male}),
        UnknownGender);
}

TEST_CASE("ssim reproduces the pinned examples") {
    const std::string fau = "Friedrich-Alexander-Universität Erlangen-Nürnberg (FAU)";
    std::vector<AuthorMention> ours{mention("Vanessa", "Wirth"), mention("Vanessa", "Wirth")};
    CHECK(ssim(ours, {fau, fau}) == doctest::Approx(96.0).epsilon(1e-12));

    const std::string viadrina = "European University Viadrina";
    std::vector<AuthorMention> otto{mention("Philipp", "Otto"), mention("Philipp", "Otto")};
    CHECK(ssim(otto, {viadrina, viadrina}) == doctest::Approx(52.0).epsilon(1e-12));

    std::vector<AuthorMention> brothers{mention("Allen", "Goodman"), mention("Joshua", "Goodman")};
    double expected = (std::exp(-1.0) + 1.0) * 10.0;
    CHECK(ssim(brothers, {"Tenletters", "Tenletters"}) ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("ssim guards its inputs") {
    CHECK_THROWS_AS(ssim(std::vector<AuthorMention>{}, std::vector<std::string>{}), EmptyAuthorSet);
    CHECK_THROWS_AS(ssim({mention("A", "B")}, {""}), ValidationError);
    CHECK_THROWS_AS(ssim({mention("A", "B")}, {"X", "Y"}), InvalidInput);
}

TEST_CASE("ssim bound and extremum over randomized author sets") {
    const std::vector<std::string> forenames{"Vanessa", "Jürgen", "Ana", "Jörg"};
    const std::vector<std::string> surnames{"Wirth", "Müller", "Groß", "Weber"};
    const std::vector<std::string> institutions{
        "Über-Institut", "FAU (X)", "Institute of Letters", "Ümlaut Academy (ÜA)"};

    std::mt19937 rng(42);
    std::uniform_int_distribution<std::size_t> pick(0, 3);
    std::uniform_int_distribution<int> size(1, 6);

    for (int round = 0; round < 1200; ++round) {
        int n = size(rng);
        std::vector<AuthorMention> authors;
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) {
            authors.push_back(mention(forenames[pick(rng)], surnames[pick(rng)]));
            names.push_back(institutions[pick(rng)]);
        }

        std::size_t max_letters = 0;
        for (const auto& name : names) {
            max_letters = std::max(max_letters, count_letters(name));
        }
        double bound = 2.0 * static_cast<double>(max_letters);
        double value = ssim(authors, names);

        CAPTURE(round);
        CHECK(value > 0.0);
        CHECK(value <= bound + 1e-9);

        bool homogeneous = true;
        for (int i = 1; i < n && homogeneous; ++i) {
            homogeneous = authors[i].canonical_forename() == authors[0].canonical_forename() &&
                          authors[i].canonical_surname() == authors[0].canonical_surname() &&
                          normalize_text(names[i]) == normalize_text(names[0]);
        }
        if (homogeneous) {
            CHECK(value == doctest::Approx(bound).epsilon(1e-12));
        } else {
            CHECK(value < bound - 1e-9);
        }
    }
}

TEST_CASE("ssim decreases with each additional differing pair") {
    const std::string inst = "Institute of Letters";
    double base = ssim({mention("A", "B"), mention("A", "B")}, {inst, inst});
    double one = ssim({mention("A", "B"), mention("C", "B")}, {inst, inst});
    double two = ssim({mention("A", "B"), mention("C", "D")}, {inst, inst});
    CHECK(base > one);
    CHECK(one > two);
}

TEST_CASE("acdc is positive infinity for every valid input") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> day(1, 31);
    std::uniform_int_distribution<int> month(1, 12);
    std::uniform_int_distribution<int> size(1, 8);

    for (int round = 0; round < 1200; ++round) {
        int n = size(rng);
        std::vector<AuthorMention> authors;
        for (int i = 0; i < n; ++i) {
            authors.push_back(mention("F" + std::to_string(i), "S", Gender::unknown, "X",
                                      CareerStart{day(rng), month(rng)}));
        }
        std::vector<std::string> notes;
        ExtendedReal result = acdc(authors, &notes);
        CAPTURE(round);
        REQUIRE(result.is_infinite());
        REQUIRE(notes.size() == 2);
        CHECK(notes[0].find("day") != std::string::npos);
        CHECK(notes[1].find("month") != std::string::npos);
    }
}

TEST_CASE("acdc pinned examples") {
    std::vector<AuthorMention> same{
        mention("V", "W", Gender::female, "X", CareerStart{1, 4}),
        mention("V", "W", Gender::female, "X", CareerStart{1, 4})};
    CHECK(acdc(same).is_infinite());

    std::vector<AuthorMention> different{
        mention("V", "W", Gender::female, "X", CareerStart{1, 4}),
        mention("P", "O", Gender::male, "X", CareerStart{15, 9})};
    CHECK(acdc(different).is_infinite());

    std::vector<AuthorMention> single{mention("V", "W", Gender::female, "X", CareerStart{7, 7})};
    CHECK(acdc(single).is_infinite());
}

TEST_CASE("acdc requires complete career data") {
    std::vector<AuthorMention> authors{
        mention("V", "W", Gender::female, "X", CareerStart{1, 4}), mention("P", "O")};
    CHECK_THROWS_AS(acdc(authors), MissingCareerData);
    CHECK_THROWS_AS(acdc({}), EmptyAuthorSet);
}

TEST_CASE("compute_report bundles all four metrics") {
    std::string doc =
        R"x({"institutions": {"fau": "Friedrich-Alexander-Universität Erlangen-Nürnberg (FAU)"}})x"
        "\n"
        R"x({"id": "ours", "title": "T", "year": 2024, "authors": [)x"
        R"x({"forename": "Vanessa", "surname": "Wirth", "gender": "female", "institution": "fau", "career_start": {"day": 1, "month": 4}},)x"
        R"x({"forename": "Vanessa", "surname": "Wirth", "gender": "female", "institution": "fau", "career_start": {"day": 1, "month": 4}}]})x"
        "\n";
    Corpus corpus = parse_jsonl(doc);
    MetricReport report = compute_report(corpus.records[0], corpus);

    CHECK(report.record_id == "ours");
    CHECK(report.nsa.value() == 2.0);
    CHECK(report.geil.value() == 1.0);
    CHECK(report.ssim.value() == doctest::Approx(96.0).epsilon(1e-12));
    CHECK(report.acdc.is_infinite());
    REQUIRE(report.notes.size() == 2);
}

TEST_CASE("compute_report degrades failed metrics to undefined") {
    std::string doc =
        R"x({"id": "r1", "title": "T", "year": 2020, "authors": [)x"
        R"x({"forename": "Solo", "surname": "Author", "gender": "unknown", "institution": "Tenletters"}]})x"
        "\n";
    Corpus corpus = parse_jsonl(doc);
    MetricReport report = compute_report(corpus.records[0], corpus);

    CHECK(report.nsa.value() == 0.0);
    CHECK(report.geil.is_undefined());
    CHECK(report.ssim.value() == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(report.acdc.is_undefined());
    CHECK(report.notes.size() == 2);
}

TEST_CASE("metrics are permutation invariant") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> size(2, 6);
    const Gender genders[3] = {Gender::female, Gender::male, Gender::diverse};

    for (int round = 0; round < 200; ++round) {
        int n = size(rng);
        std::vector<AuthorMention> authors;
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) {
            authors.push_back(mention("F" + std::to_string(pick(rng)), "S",
                                      genders[pick(rng)], "X",
                                      CareerStart{pick(rng) + 1, pick(rng) + 1}));
            names.push_back("Institute " + std::to_string(pick(rng)));
        }

        long long nsa_before = nsa(authors);
        double geil_before = geil(authors);
        double ssim_before = ssim(authors, names);
        ExtendedReal acdc_before = acdc(authors);

        std::vector<std::size_t> order(authors.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<AuthorMention> shuffled;
        std::vector<std::string> shuffled_names;
        for (std::size_t i : order) {
            shuffled.push_back(authors[i]);
            shuffled_names.push_back(names[i]);
        }

        CAPTURE(round);
        CHECK(nsa(shuffled) == nsa_before);
        CHECK(geil(shuffled) == geil_before);
        CHECK(ssim(shuffled, shuffled_names) == doctest::Approx(ssim_before).epsilon(1e-12));
        CHECK(same_value(acdc(shuffled), acdc_before));
    }
}
