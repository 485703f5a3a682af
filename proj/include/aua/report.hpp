#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aua/extended_real.hpp"
#include "aua/metrics.hpp"
#include "aua/model.hpp"
#include "aua/unify.hpp"

namespace aua {

// Serialization contract for metric values: finite numbers are rounded to
// six decimal places (integers when as_integer is set), positive infinity
// becomes the string "inf" and undefined becomes the string "undefined".
nlohmann::ordered_json extended_real_to_json(const ExtendedReal& value, bool as_integer = false);
ExtendedReal extended_real_from_json(const nlohmann::json& value);

// Fixed two-decimal rendering for markdown tables ("96.00", "inf").
std::string format_cell(const ExtendedReal& value);

struct MetricSelection {
    bool nsa = true;
    bool geil = true;
    bool ssim = true;
    bool acdc = true;
};

// Reports are rendered in record-id order regardless of corpus order; all
// three renderers are byte-deterministic for a fixed input.
std::string render_metrics_json(std::vector<MetricReport> reports,
                                const MetricSelection& selection = {});
std::string render_metrics_csv(std::vector<MetricReport> reports,
                               const MetricSelection& selection = {});
std::string render_metrics_markdown(std::vector<MetricReport> reports,
                                    const MetricSelection& selection = {});

// Cluster report: every cluster with its merged profile; when with_savings
// is set the document gains a per-record page_savings map.
std::string render_clusters_json(const std::vector<AuaCluster>& clusters, const Corpus& corpus,
                                 bool with_savings = false, long long chars_per_page = 3000);

} // namespace aua
