#pragma once

#include <map>
#include <string>
#include <vector>

#include "aua/model.hpp"
#include "aua/text.hpp"

namespace aua {

// Ladder of sharing conditions: every level implies the ones below it.
enum class SharingLevel { name_sharing, name_and_institution, full_aua };

// "name", "name+institution" or "full_aua" (the report vocabulary).
std::string to_string(SharingLevel level);

struct ClusterMember {
    std::string record_id;
    std::size_t author_index = 0;

    auto operator<=>(const ClusterMember&) const = default;
};

struct AuaCluster {
    std::vector<ClusterMember> members; // sorted by (record id, author index)
    std::string canonical_name;         // canonical "forename surname"
    SharingLevel level = SharingLevel::name_sharing;
};

struct MergedProfile {
    AuaCluster cluster;
    std::map<int, long long> publications_per_year;
    std::map<int, long long> citations_per_year;
};

// True iff both career starts are present and agree on day and month.
// Contract years are not modeled, so they never enter the comparison.
bool career_sharing(const AuthorMention& a, const AuthorMention& b);

// Groups every author mention by canonical full name and emits one cluster
// per group of two or more mentions, at the highest level whose conditions
// hold for all members (one institution id for name_and_institution; all
// career starts present and identical on day and month for full_aua).
// Clusters come out ordered by canonical name, so the result does not
// depend on record order.
std::vector<AuaCluster> detect_clusters(const Corpus& corpus);

// Publication and citation counts of the unified profile. Each record
// contributes once even when several cluster members co-author it.
MergedProfile merge_profiles(const AuaCluster& cluster, const Corpus& corpus);

// Bibliography space reclaimed by collapsing maximal runs of identical
// canonical names in the rendered author list "F1 S1, F2 S2, ...", as a
// fraction of a page, capped at half a page.
double page_savings(const PaperRecord& record, long long chars_per_page = 3000);

} // namespace aua
