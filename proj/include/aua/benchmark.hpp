#pragma once

#include <istream>
#include <string>
#include <vector>

#include "aua/extended_real.hpp"

namespace aua {

// One table cell. `computed` distinguishes values derived from the fixture
// record from constants recorded verbatim because the inputs behind them
// are not published.
struct BenchmarkCell {
    ExtendedReal value = ExtendedReal::undefined();
    bool computed = true;
};

struct BenchmarkRow {
    std::string label;
    BenchmarkCell nsa;
    BenchmarkCell geil;
    BenchmarkCell ssim;
    BenchmarkCell acdc;
};

// Fixture schema: {"rows": [{"label": str, "institutions": {id: name}?,
// "record": <record object>, "fixed": {"nsa"|"geil"|"ssim"|"acdc": value}?}]}.
// Every metric is computed from the record, then cells listed under "fixed"
// are replaced by the given constants and flagged computed=false.
std::vector<BenchmarkRow> load_benchmark_rows(const std::string& fixture_json);
std::vector<BenchmarkRow> load_benchmark_rows(std::istream& input);

// The benchmark rows shipped with the tool.
const std::string& bundled_benchmark_fixture();
std::vector<BenchmarkRow> bundled_benchmark_rows();

// Markdown table with columns NSA ↑, GEIL ↓, SSIM ↑ and ACDC ↑. The best
// defined value per column is bold (maximum for ↑ columns, minimum for ↓,
// infinity above every finite value); ties are all bold, undefined never.
// Non-computed cells carry a dagger and a footnote lists them.
std::string render_benchmark(const std::vector<BenchmarkRow>& rows);

} // namespace aua
