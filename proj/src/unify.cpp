#include "aua/unify.hpp"

#include <algorithm>
#include <set>

#include "aua/errors.hpp"
#include "aua/unicode.hpp"

namespace aua {
namespace {

// Grouping key for one mention. The unit separator keeps ("a b", "c")
// distinct from ("a", "b c"); plain map ordering then yields the canonical
// name order.
std::string group_key(const AuthorMention& mention) {
    return mention.canonical_forename().key + '\x1f' + mention.canonical_surname().key;
}

struct MentionRef {
    ClusterMember member;
    const AuthorMention* mention;
};

SharingLevel classify(const std::vector<MentionRef>& group) {
    const AuthorMention& first = *group.front().mention;
    bool same_institution = std::all_of(group.begin(), group.end(), [&](const MentionRef& r) {
        return r.mention->institution == first.institution;
    });
    if (!same_institution) return SharingLevel::name_sharing;

    bool same_career = first.career_start.has_value() &&
                       std::all_of(group.begin(), group.end(), [&](const MentionRef& r) {
                           return career_sharing(first, *r.mention);
                       });
    return same_career ? SharingLevel::full_aua : SharingLevel::name_and_institution;
}

} // namespace

std::string to_string(SharingLevel level) {
    switch (level) {
    case SharingLevel::name_sharing: return "name";
    case SharingLevel::name_and_institution: return "name+institution";
    case SharingLevel::full_aua: return "full_aua";
    }
    return "name";
}

bool career_sharing(const AuthorMention& a, const AuthorMention& b) {
    return a.career_start.has_value() && b.career_start.has_value() &&
           a.career_start->day == b.career_start->day &&
           a.career_start->month == b.career_start->month;
}

std::vector<AuaCluster> detect_clusters(const Corpus& corpus) {
    std::map<std::string, std::vector<MentionRef>> groups;
    for (const auto& record : corpus.records) {
        for (std::size_t i = 0; i < record.authors.size(); ++i) {
            groups[group_key(record.authors[i])].push_back(
                MentionRef{ClusterMember{record.id, i}, &record.authors[i]});
        }
    }

    std::vector<AuaCluster> clusters;
    for (auto& [key, group] : groups) {
        if (group.size() < 2) continue;
        std::sort(group.begin(), group.end(),
                  [](const MentionRef& a, const MentionRef& b) { return a.member < b.member; });

        AuaCluster cluster;
        cluster.canonical_name = group.front().mention->canonical_full_name().key;
        cluster.level = classify(group);
        for (const MentionRef& r : group) cluster.members.push_back(r.member);
        clusters.push_back(std::move(cluster));
    }
    return clusters;
}

MergedProfile merge_profiles(const AuaCluster& cluster, const Corpus& corpus) {
    MergedProfile profile;
    profile.cluster = cluster;

    std::set<std::string> seen;
    for (const auto& member : cluster.members) {
        if (!seen.insert(member.record_id).second) continue;
        const PaperRecord* record = corpus.find_record(member.record_id);
        if (record == nullptr) {
            throw ValidationError("cluster \"" + cluster.canonical_name + "\"", "members",
                                  "record \"" + member.record_id + "\" is not in the corpus");
        }
        profile.publications_per_year[record->year] += 1;
        for (const auto& [year, count] : record->citations_per_year) {
            profile.citations_per_year[year] += count;
        }
    }
    return profile;
}

double page_savings(const PaperRecord& record, long long chars_per_page) {
    if (chars_per_page <= 0) {
        throw InvalidConfig("page_savings", "chars_per_page", "must be a positive integer");
    }
    if (record.authors.empty()) {
        throw EmptyAuthorSet("record \"" + record.id + "\"", "record has no authors");
    }

    auto rendered = [](const AuthorMention& a) { return a.forename + " " + a.surname; };

    std::size_t original = 0;
    std::size_t unified = 0;
    std::string previous_key;
    for (std::size_t i = 0; i < record.authors.size(); ++i) {
        const AuthorMention& author = record.authors[i];
        std::size_t length = uni::count_code_points(rendered(author));
        if (i > 0) original += 2; // ", "
        original += length;

        std::string key = author.canonical_full_name().key;
        if (i == 0 || key != previous_key) {
            if (unified > 0) unified += 2;
            unified += length;
        }
        previous_key = std::move(key);
    }

    double savings = static_cast<double>(original - unified) / static_cast<double>(chars_per_page);
    return std::min(0.5, savings);
}

} // namespace aua
