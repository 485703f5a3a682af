#include "aua/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "aua/errors.hpp"

namespace aua {
namespace {

using ordered_json = nlohmann::ordered_json;

double round6(double v) {
    return std::round(v * 1e6) / 1e6;
}

void sort_by_record(std::vector<MetricReport>& reports) {
    std::sort(reports.begin(), reports.end(),
              [](const MetricReport& a, const MetricReport& b) {
                  return a.record_id < b.record_id;
              });
}

// Notes are prefixed with the metric they belong to ("geil: ...") so a
// filtered report can drop notes about metrics it does not show.
bool note_selected(const std::string& note, const MetricSelection& s) {
    if (note.rfind("nsa:", 0) == 0) return s.nsa;
    if (note.rfind("geil:", 0) == 0) return s.geil;
    if (note.rfind("ssim:", 0) == 0) return s.ssim;
    if (note.rfind("acdc:", 0) == 0) return s.acdc;
    return true;
}

std::string csv_value(const ExtendedReal& value, bool as_integer) {
    if (value.is_infinite()) return "inf";
    if (value.is_undefined()) return "undefined";
    return extended_real_to_json(value, as_integer).dump();
}

struct Column {
    const char* name;
    bool MetricSelection::* selected;
    ExtendedReal MetricReport::* slot;
    bool as_integer;
};

constexpr Column kColumns[] = {
    {"nsa", &MetricSelection::nsa, &MetricReport::nsa, true},
    {"geil", &MetricSelection::geil, &MetricReport::geil, false},
    {"ssim", &MetricSelection::ssim, &MetricReport::ssim, false},
    {"acdc", &MetricSelection::acdc, &MetricReport::acdc, false},
};

} // namespace

ordered_json extended_real_to_json(const ExtendedReal& value, bool as_integer) {
    if (value.is_infinite()) return "inf";
    if (value.is_undefined()) return "undefined";
    if (as_integer) return static_cast<long long>(std::llround(value.value()));
    return round6(value.value());
}

ExtendedReal extended_real_from_json(const nlohmann::json& value) {
    if (value.is_string()) {
        const auto& s = value.get_ref<const std::string&>();
        if (s == "inf") return ExtendedReal::infinity();
        if (s == "undefined") return ExtendedReal::undefined();
        throw ValidationError("metric value", "\"" + s + "\" is not a metric value");
    }
    if (value.is_number()) return ExtendedReal::finite(value.get<double>());
    throw ValidationError("metric value", "expected a number, \"inf\" or \"undefined\"");
}

std::string format_cell(const ExtendedReal& value) {
    if (value.is_infinite()) return "inf";
    if (value.is_undefined()) return "undefined";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", value.value());
    return buf;
}

std::string render_metrics_json(std::vector<MetricReport> reports,
                                const MetricSelection& selection) {
    sort_by_record(reports);
    ordered_json doc = ordered_json::array();
    for (const auto& report : reports) {
        ordered_json item;
        item["record"] = report.record_id;
        for (const Column& col : kColumns) {
            if (selection.*(col.selected)) {
                item[col.name] = extended_real_to_json(report.*(col.slot), col.as_integer);
            }
        }
        ordered_json notes = ordered_json::array();
        for (const auto& note : report.notes) {
            if (note_selected(note, selection)) notes.push_back(note);
        }
        item["notes"] = std::move(notes);
        doc.push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

std::string render_metrics_csv(std::vector<MetricReport> reports,
                               const MetricSelection& selection) {
    sort_by_record(reports);
    std::string out = "record";
    for (const Column& col : kColumns) {
        if (selection.*(col.selected)) {
            out += ",";
            out += col.name;
        }
    }
    out += "\n";
    for (const auto& report : reports) {
        out += report.record_id;
        for (const Column& col : kColumns) {
            if (selection.*(col.selected)) {
                out += "," + csv_value(report.*(col.slot), col.as_integer);
            }
        }
        out += "\n";
    }
    return out;
}

std::string render_metrics_markdown(std::vector<MetricReport> reports,
                                    const MetricSelection& selection) {
    sort_by_record(reports);
    std::string header = "| record |";
    std::string rule = "| --- |";
    for (const Column& col : kColumns) {
        if (selection.*(col.selected)) {
            header += " ";
            header += col.name;
            header += " |";
            rule += " --- |";
        }
    }
    std::string out = header + "\n" + rule + "\n";
    for (const auto& report : reports) {
        out += "| " + report.record_id + " |";
        for (const Column& col : kColumns) {
            if (selection.*(col.selected)) {
                out += " " + format_cell(report.*(col.slot)) + " |";
            }
        }
        out += "\n";
    }
    return out;
}

std::string render_clusters_json(const std::vector<AuaCluster>& clusters, const Corpus& corpus,
                                 bool with_savings, long long chars_per_page) {
    ordered_json cluster_array = ordered_json::array();
    for (const auto& cluster : clusters) {
        MergedProfile profile = merge_profiles(cluster, corpus);
        ordered_json item;
        item["canonical_name"] = cluster.canonical_name;
        item["level"] = to_string(cluster.level);
        ordered_json members = ordered_json::array();
        for (const auto& member : cluster.members) {
            members.push_back(ordered_json{{"record", member.record_id},
                                           {"author_index", member.author_index}});
        }
        item["members"] = std::move(members);
        ordered_json merged;
        ordered_json publications = ordered_json::object();
        for (const auto& [year, count] : profile.publications_per_year) {
            publications[std::to_string(year)] = count;
        }
        ordered_json citations = ordered_json::object();
        for (const auto& [year, count] : profile.citations_per_year) {
            citations[std::to_string(year)] = count;
        }
        merged["publications_per_year"] = std::move(publications);
        merged["citations_per_year"] = std::move(citations);
        item["merged_profile"] = std::move(merged);
        cluster_array.push_back(std::move(item));
    }

    ordered_json doc;
    if (with_savings) {
        std::map<std::string, double> savings;
        for (const auto& record : corpus.records) {
            savings[record.id] = round6(page_savings(record, chars_per_page));
        }
        ordered_json savings_obj = ordered_json::object();
        for (const auto& [id, value] : savings) savings_obj[id] = value;
        doc = ordered_json{{"clusters", std::move(cluster_array)},
                           {"page_savings", std::move(savings_obj)}};
    } else {
        doc = std::move(cluster_array);
    }
    return doc.dump(2) + "\n";
}

} // namespace aua
