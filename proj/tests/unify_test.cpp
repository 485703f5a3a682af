#include "doctest.h"

#include <algorithm>
#include <random>

#include "aua/errors.hpp"
#include "aua/jsonl.hpp"
#include "aua/unify.hpp"

using namespace aua;

namespace {

Corpus corpus_from(const std::string& doc) {
    return parse_jsonl(doc);
}

const char kFullAua[] =
    R"x({"id": "ours", "title": "T", "year": 2024, "authors": [)x"
    R"x({"forename": "Vanessa", "surname": "Wirth", "gender": "female", "institution": "FAU", "career_start": {"day": 1, "month": 4}},)x"
    R"x({"forename": "Vanessa", "surname": "Wirth", "gender": "female", "institution": "FAU", "career_start": {"day": 1, "month": 4}}]})x"
    "\n";

} // namespace

TEST_CASE("career_sharing compares day and month only when both present") {
    AuthorMention a;
    a.career_start = CareerStart{1, 4};
    AuthorMention b;
    b.career_start = CareerStart{1, 4};
    CHECK(career_sharing(a, b));

    b.career_start = CareerStart{1, 5};
    CHECK_FALSE(career_sharing(a, b));

    b.career_start.reset();
    CHECK_FALSE(career_sharing(a, b));
    CHECK_FALSE(career_sharing(b, b));
}

TEST_CASE("full sharing is detected") {
    auto clusters = detect_clusters(corpus_from(kFullAua));
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].canonical_name == "vanessa wirth");
    CHECK(clusters[0].level == SharingLevel::full_aua);
    REQUIRE(clusters[0].members.size() == 2);
    CHECK(clusters[0].members[0].record_id == "ours");
    CHECK(clusters[0].members[0].author_index == 0);
    CHECK(clusters[0].members[1].author_index == 1);
}

TEST_CASE("the sharing ladder demotes on failed conditions") {
    SUBCASE("different institutions stop at name sharing") {
        std::string doc =
            R"x({"id": "r1", "title": "T", "year": 2020, "authors": [{"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "University A"}]})x"
            "\n"
            R"x({"id": "r2", "title": "T", "year": 2021, "authors": [{"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "University B"}]})x"
            "\n";
        auto clusters = detect_clusters(corpus_from(doc));
        REQUIRE(clusters.size() == 1);
        CHECK(clusters[0].level == SharingLevel::name_sharing);
    }
    SUBCASE("different careers stop at name and institution") {
        std::string doc =
            R"x({"id": "r1", "title": "T", "year": 2020, "authors": [{"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "University A", "career_start": {"day": 2, "month": 9}}]})x"
            "\n"
            R"x({"id": "r2", "title": "T", "year": 2021, "authors": [{"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "University A", "career_start": {"day": 3, "month": 9}}]})x"
            "\n";
        auto clusters = detect_clusters(corpus_from(doc));
        REQUIRE(clusters.size() == 1);
        CHECK(clusters[0].level == SharingLevel::name_and_institution);
    }
    SUBCASE("missing careers stop at name and institution") {
        std::string doc =
            R"x({"id": "r1", "title": "T", "year": 2020, "authors": [{"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "University A"}]})x"
            "\n"
            R"x({"id": "r2", "title": "T", "year": 2021, "authors": [{"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "University A"}]})x"
            "\n";
        auto clusters = detect_clusters(corpus_from(doc));
        REQUIRE(clusters.size() == 1);
        CHECK(clusters[0].level == SharingLevel::name_and_institution);
    }
}

TEST_CASE("distinct names produce no clusters") {
    std::string doc =
        R"x({"id": "r1", "title": "T", "year": 2020, "authors": [{"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "University A"}]})x"
        "\n"
        R"x({"id": "r2", "title": "T", "year": 2021, "authors": [{"forename": "Jonas", "surname": "Weber", "gender": "male", "institution": "University B"}]})x"
        "\n";
    CHECK(detect_clusters(corpus_from(doc)).empty());
    CHECK(detect_clusters(Corpus{}).empty());
}

TEST_CASE("clusters are ordered by canonical name, members by record") {
    std::string doc =
        R"x({"id": "z", "title": "T", "year": 2020, "authors": [{"forename": "Zoe", "surname": "Zimmer", "gender": "female", "institution": "A"}, {"forename": "Anna", "surname": "Arnold", "gender": "female", "institution": "A"}]})x"
        "\n"
        R"x({"id": "a", "title": "T", "year": 2021, "authors": [{"forename": "Zoe", "surname": "Zimmer", "gender": "female", "institution": "A"}, {"forename": "Anna", "surname": "Arnold", "gender": "female", "institution": "A"}]})x"
        "\n";
    auto clusters = detect_clusters(corpus_from(doc));
    REQUIRE(clusters.size() == 2);
    CHECK(clusters[0].canonical_name == "anna arnold");
    CHECK(clusters[1].canonical_name == "zoe zimmer");
    CHECK(clusters[0].members[0].record_id == "a");
    CHECK(clusters[0].members[1].record_id == "z");
}

TEST_CASE("cluster output is independent of record order") {
    std::string forward =
        R"x({"id": "r1", "title": "T", "year": 2020, "authors": [{"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "A"}]})x"
        "\n"
        R"x({"id": "r2", "title": "T", "year": 2021, "authors": [{"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "A"}]})x"
        "\n";
    std::string backward =
        R"x({"id": "r2", "title": "T", "year": 2021, "authors": [{"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "A"}]})x"
        "\n"
        R"x({"id": "r1", "title": "T", "year": 2020, "authors": [{"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "A"}]})x"
        "\n";
    auto a = detect_clusters(corpus_from(forward));
    auto b = detect_clusters(corpus_from(backward));
    REQUIRE(a.size() == b.size());
    CHECK(a[0].canonical_name == b[0].canonical_name);
    CHECK(a[0].level == b[0].level);
    CHECK(a[0].members == b[0].members);
}

TEST_CASE("merge_profiles counts each record once") {
    std::string doc =
        R"x({"id": "r1", "title": "T", "year": 2019, "authors": [{"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "A"}], "citations_per_year": {"2020": 2}})x"
        "\n"
        R"x({"id": "r2", "title": "T", "year": 2019, "authors": [{"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "A"}], "citations_per_year": {"2020": 3, "2021": 1}})x"
        "\n";
    Corpus corpus = corpus_from(doc);
    auto clusters = detect_clusters(corpus);
    REQUIRE(clusters.size() == 1);
    MergedProfile profile = merge_profiles(clusters[0], corpus);
    CHECK(profile.publications_per_year == std::map<int, long long>{{2019, 2}});
    CHECK(profile.citations_per_year == std::map<int, long long>{{2020, 5}, {2021, 1}});
}

TEST_CASE("merge_profiles deduplicates members on one record") {
    Corpus corpus = corpus_from(kFullAua);
    auto clusters = detect_clusters(corpus);
    REQUIRE(clusters.size() == 1);
    REQUIRE(clusters[0].members.size() == 2);
    MergedProfile profile = merge_profiles(clusters[0], corpus);
    CHECK(profile.publications_per_year == std::map<int, long long>{{2024, 1}});
}

TEST_CASE("merge_profiles rejects dangling members") {
    Corpus corpus = corpus_from(kFullAua);
    AuaCluster cluster;
    cluster.canonical_name = "ghost writer";
    cluster.members = {{"nope", 0}, {"nada", 1}};
    CHECK_THROWS_AS(merge_profiles(cluster, corpus), ValidationError);
}

TEST_CASE("page_savings collapses runs of identical names") {
    Corpus corpus = corpus_from(kFullAua);
    // "Vanessa Wirth, Vanessa Wirth" (28) collapses to "Vanessa Wirth" (13)
    CHECK(page_savings(corpus.records[0]) == doctest::Approx(15.0 / 3000.0).epsilon(1e-12));
    CHECK(page_savings(corpus.records[0], 1500) == doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("page_savings is zero without duplicates and capped at a half page") {
    std::string doc =
        R"x({"id": "r1", "title": "T", "year": 2020, "authors": [{"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "A"}, {"forename": "Jonas", "surname": "Weber", "gender": "male", "institution": "A"}]})x"
        "\n";
    Corpus corpus = corpus_from(doc);
    CHECK(page_savings(corpus.records[0]) == 0.0);

    Corpus dup = corpus_from(kFullAua);
    CHECK(page_savings(dup.records[0], 10) == 0.5);
}

TEST_CASE("page_savings counts code points, not bytes") {
    std::string doc =
        R"x({"id": "r1", "title": "T", "year": 2020, "authors": [)x"
        R"x({"forename": "Jürgen", "surname": "Müller", "gender": "male", "institution": "A"},)x"
        R"x({"forename": "Jürgen", "surname": "Müller", "gender": "male", "institution": "A"}]})x"
        "\n";
    Corpus corpus = corpus_from(doc);
    // "Jürgen Müller" is 13 code points; ", " adds 2
    CHECK(page_savings(corpus.records[0]) == doctest::Approx(15.0 / 3000.0).epsilon(1e-12));
}

TEST_CASE("page_savings validates its configuration") {
    Corpus corpus = corpus_from(kFullAua);
    CHECK_THROWS_AS(page_savings(corpus.records[0], 0), InvalidConfig);
    CHECK_THROWS_AS(page_savings(corpus.records[0], -5), InvalidConfig);
}

TEST_CASE("non-adjacent duplicates do not collapse") {
    std::string doc =
        R"x({"id": "r1", "title": "T", "year": 2020, "authors": [)x"
        R"x({"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "A"},)x"
        R"x({"forename": "Jonas", "surname": "Weber", "gender": "male", "institution": "A"},)x"
        R"x({"forename": "Anna", "surname": "Schmidt", "gender": "female", "institution": "A"}]})x"
        "\n";
    Corpus corpus = corpus_from(doc);
    CHECK(page_savings(corpus.records[0]) == 0.0);
}
