#include "aua/benchmark.hpp"

#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "aua/errors.hpp"
#include "aua/jsonl.hpp"
#include "aua/metrics.hpp"
#include "aua/report.hpp"

namespace aua {
namespace {

using json = nlohmann::json;

const char kBundledFixture[] = R"FIXTURE({
  "rows": [
    {
      "label": "Otto",
      "institutions": {"viadrina": "European University Viadrina"},
      "record": {
        "id": "otto",
        "title": "Two-author statistics collaboration",
        "year": 2022,
        "authors": [
          {"forename": "Philipp", "surname": "Otto", "gender": "male",
           "institution": "viadrina", "career_start": {"day": 5, "month": 10}},
          {"forename": "Philipp", "surname": "Otto", "gender": "male",
           "institution": "viadrina", "career_start": {"day": 17, "month": 3}}
        ]
      },
      "fixed": {"acdc": 2.0}
    },
    {
      "label": "Chen",
      "institutions": {"campus": "Shared Campus University"},
      "record": {
        "id": "chen",
        "title": "Same-campus collaboration",
        "year": 2013,
        "authors": [
          {"forename": "Wei", "surname": "Chen", "gender": "female", "institution": "campus"},
          {"forename": "Lin", "surname": "Chen", "gender": "male", "institution": "campus"}
        ]
      },
      "fixed": {"nsa": 0.0, "geil": 1.0, "ssim": 2.71, "acdc": 1.67}
    },
    {
      "label": "Goodman",
      "institutions": {"econ": "Department of Economics"},
      "record": {
        "id": "goodman",
        "title": "Surname-sharing collaboration",
        "year": 2015,
        "authors": [
          {"forename": "Allen", "surname": "Goodman", "gender": "male", "institution": "econ"},
          {"forename": "Joshua", "surname": "Goodman", "gender": "male", "institution": "econ"},
          {"forename": "Lucia", "surname": "Goodman", "gender": "male", "institution": "econ"}
        ]
      },
      "fixed": {"ssim": 0.73, "acdc": 8.54}
    },
    {
      "label": "Ours",
      "institutions": {"fau": "Friedrich-Alexander-Universität Erlangen-Nürnberg (FAU)"},
      "record": {
        "id": "ours",
        "title": "Name, institution and career sharing study",
        "year": 2024,
        "authors": [
          {"forename": "Vanessa", "surname": "Wirth", "gender": "female",
           "institution": "fau", "career_start": {"day": 1, "month": 4}},
          {"forename": "Vanessa", "surname": "Wirth", "gender": "female",
           "institution": "fau", "career_start": {"day": 1, "month": 4}}
        ]
      }
    }
  ]
}
)FIXTURE";

struct ColumnSpec {
    const char* short_name;
    const char* header;
    BenchmarkCell BenchmarkRow::* cell;
    bool maximize;
};

constexpr ColumnSpec kColumns[] = {
    {"NSA", "NSA ↑", &BenchmarkRow::nsa, true},
    {"GEIL", "GEIL ↓", &BenchmarkRow::geil, false},
    {"SSIM", "SSIM ↑", &BenchmarkRow::ssim, true},
    {"ACDC", "ACDC ↑", &BenchmarkRow::acdc, true},
};

BenchmarkRow build_row(const json& row_json) {
    if (!row_json.is_object() || !row_json.contains("label") || !row_json["label"].is_string()) {
        throw ValidationError("benchmark fixtures", "label", "every row needs a string label");
    }
    BenchmarkRow row;
    row.label = row_json["label"].get<std::string>();
    std::string location = "benchmark row \"" + row.label + "\"";

    if (!row_json.contains("record") || !row_json["record"].is_object()) {
        throw ValidationError(location, "record", "a record object is required");
    }

    // Reuse the line-oriented parser so fixture records obey the same
    // schema and validation as regular input.
    std::string doc;
    if (row_json.contains("institutions")) {
        if (!row_json["institutions"].is_object()) {
            throw ValidationError(location, "institutions", "must be an object");
        }
        doc += json{{"institutions", row_json["institutions"]}}.dump() + "\n";
    }
    doc += row_json["record"].dump() + "\n";

    Corpus corpus;
    try {
        corpus = parse_jsonl(doc);
    } catch (const Error& e) {
        throw ValidationError(location, "record", e.what());
    }
    if (corpus.records.size() != 1) {
        throw ValidationError(location, "record", "exactly one record is required");
    }

    MetricReport report = compute_report(corpus.records.front(), corpus);
    row.nsa = {report.nsa, true};
    row.geil = {report.geil, true};
    row.ssim = {report.ssim, true};
    row.acdc = {report.acdc, true};

    if (row_json.contains("fixed")) {
        if (!row_json["fixed"].is_object()) {
            throw ValidationError(location, "fixed", "must be an object");
        }
        for (const auto& [key, value] : row_json["fixed"].items()) {
            BenchmarkCell cell{extended_real_from_json(value), false};
            if (key == "nsa") {
                row.nsa = cell;
            } else if (key == "geil") {
                row.geil = cell;
            } else if (key == "ssim") {
                row.ssim = cell;
            } else if (key == "acdc") {
                row.acdc = cell;
            } else {
                throw ValidationError(location, "fixed",
                                      "\"" + key + "\" is not a metric cell");
            }
        }
    }
    return row;
}

} // namespace

std::vector<BenchmarkRow> load_benchmark_rows(const std::string& fixture_json) {
    json doc;
    try {
        doc = json::parse(fixture_json);
    } catch (const json::parse_error& e) {
        throw ParseError("benchmark fixtures", e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
        throw ValidationError("benchmark fixtures", "rows", "a rows array is required");
    }
    std::vector<BenchmarkRow> rows;
    for (const auto& row_json : doc["rows"]) {
        rows.push_back(build_row(row_json));
    }
    if (rows.empty()) {
        throw ValidationError("benchmark fixtures", "rows", "at least one row is required");
    }
    return rows;
}

std::vector<BenchmarkRow> load_benchmark_rows(std::istream& input) {
    std::ostringstream buf;
    buf << input.rdbuf();
    return load_benchmark_rows(buf.str());
}

const std::string& bundled_benchmark_fixture() {
    static const std::string fixture = kBundledFixture;
    return fixture;
}

std::vector<BenchmarkRow> bundled_benchmark_rows() {
    return load_benchmark_rows(bundled_benchmark_fixture());
}

std::string render_benchmark(const std::vector<BenchmarkRow>& rows) {
    if (rows.empty()) {
        throw InvalidInput("render_benchmark", "rows", "at least one row is required");
    }

    // Best defined value per column; undefined cells never compete.
    std::optional<ExtendedReal> best[4];
    for (std::size_t c = 0; c < 4; ++c) {
        for (const auto& row : rows) {
            const ExtendedReal& value = (row.*(kColumns[c].cell)).value;
            if (value.is_undefined()) continue;
            if (!best[c] ||
                (kColumns[c].maximize ? *best[c] < value : value < *best[c])) {
                best[c] = value;
            }
        }
    }

    std::string out = "|  |";
    for (const auto& col : kColumns) {
        out += " ";
        out += col.header;
        out += " |";
    }
    out += "\n| --- | --- | --- | --- | --- |\n";

    std::string footnote;
    for (const auto& row : rows) {
        out += "| " + row.label + " |";
        std::string fixed_cols;
        for (std::size_t c = 0; c < 4; ++c) {
            const BenchmarkCell& cell = row.*(kColumns[c].cell);
            std::string text = format_cell(cell.value);
            if (best[c] && cell.value == *best[c]) {
                text = "**" + text + "**";
            }
            if (!cell.computed) {
                text += "†";
                if (!fixed_cols.empty()) fixed_cols += ", ";
                fixed_cols += kColumns[c].short_name;
            }
            out += " " + text + " |";
        }
        out += "\n";
        if (!fixed_cols.empty()) {
            if (!footnote.empty()) footnote += "; ";
            footnote += row.label + " " + fixed_cols;
        }
    }

    if (!footnote.empty()) {
        out += "\n† fixed reference value, not computed: " + footnote + "\n";
    }
    return out;
}

} // namespace aua
