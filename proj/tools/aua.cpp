#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "aua/benchmark.hpp"
#include "aua/bibtex.hpp"
#include "aua/errors.hpp"
#include "aua/jsonl.hpp"
#include "aua/metrics.hpp"
#include "aua/report.hpp"
#include "aua/unify.hpp"

namespace {

using aua::Corpus;
using aua::Diagnostics;
using aua::InvalidConfig;
using aua::InvalidInput;

// Flat key=value file named by AUA_CONFIG. Values act as defaults; flags
// given on the command line win.
std::map<std::string, std::string> load_config() {
    std::map<std::string, std::string> config;
    const char* path = std::getenv("AUA_CONFIG");
    if (path == nullptr || *path == '\0') return config;

    std::ifstream in(path);
    if (!in) {
        throw InvalidConfig(std::string("config \"") + path + "\"", "cannot open file");
    }
    static const std::set<std::string> known{
        "format", "sidecar", "output", "metric", "savings",
        "chars-per-page", "fixtures", "categories"};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string location = std::string("config \"") + path + "\" line " +
                               std::to_string(lineno);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidConfig(location, "expected key=value");
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!known.contains(key)) {
            throw InvalidConfig(location, "key", "unknown key \"" + key + "\"");
        }
        config[key] = value;
    }
    return config;
}

// Flag if given, else config value, else fallback.
std::string pick(const CLI::Option* opt, const std::string& flag_value,
                 const std::map<std::string, std::string>& config, const char* key,
                 const std::string& fallback) {
    if (opt != nullptr && opt->count() > 0) return flag_value;
    if (auto it = config.find(key); it != config.end()) return it->second;
    return fallback;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

std::vector<aua::Gender> parse_categories(const std::string& text) {
    std::vector<aua::Gender> categories;
    for (const auto& part : split_list(text)) {
        auto gender = aua::gender_from_string(part);
        if (!gender) {
            throw InvalidConfig("categories", "\"" + part + "\" is not a gender category");
        }
        categories.push_back(*gender);
    }
    return categories;
}

aua::MetricSelection parse_metric_filter(const std::string& text) {
    aua::MetricSelection selection{false, false, false, false};
    for (const auto& part : split_list(text)) {
        if (part == "nsa") {
            selection.nsa = true;
        } else if (part == "geil") {
            selection.geil = true;
        } else if (part == "ssim") {
            selection.ssim = true;
        } else if (part == "acdc") {
            selection.acdc = true;
        } else {
            throw InvalidConfig("metric filter", "\"" + part + "\" is not a metric");
        }
    }
    return selection;
}

long long parse_positive(const std::string& text, const char* key) {
    try {
        std::size_t used = 0;
        long long value = std::stoll(text, &used);
        if (used != text.size() || value <= 0) {
            throw std::invalid_argument(text);
        }
        return value;
    } catch (const std::exception&) {
        throw InvalidConfig(key, "\"" + text + "\" is not a positive integer");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidInput("input \"" + path + "\"", "cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool has_bib_extension(const std::string& path) {
    auto dot = path.rfind('.');
    if (dot == std::string::npos) return false;
    std::string ext = path.substr(dot + 1);
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext == "bib";
}

Corpus load_corpus(const std::string& path, const std::string& format,
                   const std::string& sidecar_path, Diagnostics& diags) {
    std::string format_resolved = format;
    if (format_resolved == "auto") {
        format_resolved = has_bib_extension(path) ? "bibtex" : "jsonl";
    }
    if (format_resolved != "jsonl" && format_resolved != "bibtex") {
        throw InvalidConfig("format", "\"" + format + "\" is not jsonl or bibtex");
    }

    std::string text = read_file(path);
    if (format_resolved == "bibtex") {
        aua::Sidecar sidecar;
        if (!sidecar_path.empty()) {
            sidecar = aua::load_sidecar(read_file(sidecar_path));
        }
        return aua::parse_bibtex_subset(text, sidecar, &diags);
    }
    if (!sidecar_path.empty()) {
        diags.warn("input \"" + path + "\"", "sidecar is only used with bibtex input; ignored");
    }
    return aua::parse_jsonl(text, &diags);
}

void flush_diagnostics(const Diagnostics& diags) {
    for (const auto& entry : diags.entries()) {
        std::cerr << "warning: " << entry.location << ": " << entry.message << "\n";
    }
}

std::string count_phrase(std::size_t n, const char* noun) {
    return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

struct InputArgs {
    std::string path;
    std::string format;
    std::string sidecar;
    CLI::Option* format_opt = nullptr;
    CLI::Option* sidecar_opt = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("path", path, "input corpus (JSONL, or a BibTeX subset)")->required();
        format_opt = cmd->add_option("--format", format, "input format: jsonl or bibtex")
                         ->check(CLI::IsMember({"jsonl", "bibtex"}));
        sidecar_opt = cmd->add_option("--sidecar", sidecar,
                                      "author metadata sidecar for bibtex input");
    }

    Corpus load(const std::map<std::string, std::string>& config, Diagnostics& diags) const {
        std::string fmt = pick(format_opt, format, config, "format", "auto");
        std::string sc = pick(sidecar_opt, sidecar, config, "sidecar", "");
        return load_corpus(path, fmt, sc, diags);
    }
};

int run(int argc, char** argv) {
    CLI::App app{"author record analysis and unification detection"};
    app.require_subcommand(1);

    auto* cmd_parse = app.add_subcommand("parse", "validate input and print corpus counts");
    InputArgs parse_input;
    parse_input.attach(cmd_parse);

    auto* cmd_metrics = app.add_subcommand("metrics", "per-record metric report");
    InputArgs metrics_input;
    metrics_input.attach(cmd_metrics);
    std::string metric_filter;
    std::string output_format;
    std::string categories_text;
    CLI::Option* metric_opt =
        cmd_metrics->add_option("--metric", metric_filter,
                                "comma-separated subset of nsa,geil,ssim,acdc");
    CLI::Option* output_opt =
        cmd_metrics->add_option("--output", output_format, "output format: json, csv or markdown")
            ->check(CLI::IsMember({"json", "csv", "markdown"}));
    CLI::Option* categories_opt =
        cmd_metrics->add_option("--categories", categories_text,
                                "comma-separated gender census categories");

    auto* cmd_detect = app.add_subcommand("detect", "author-unification cluster report");
    InputArgs detect_input;
    detect_input.attach(cmd_detect);
    bool savings_flag = false;
    long long chars_per_page = 3000;
    CLI::Option* savings_opt =
        cmd_detect->add_flag("--savings", savings_flag, "include per-record page savings");
    CLI::Option* chars_opt = cmd_detect->add_option("--chars-per-page", chars_per_page,
                                                    "page size used for savings estimates");

    auto* cmd_table = app.add_subcommand("table", "render the benchmark table");
    std::string fixtures_path;
    CLI::Option* fixtures_opt =
        cmd_table->add_option("--fixtures", fixtures_path, "benchmark fixture file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // app.exit prints help or the usage error; we own the exit code.
        return app.exit(e) == 0 ? 0 : 2;
    }
    auto config = load_config();

    if (cmd_parse->parsed()) {
        Diagnostics diags;
        Corpus corpus = parse_input.load(config, diags);
        corpus.validate();
        flush_diagnostics(diags);
        std::cout << count_phrase(corpus.records.size(), "record") << ", "
                  << count_phrase(corpus.mention_count(), "author") << ", "
                  << count_phrase(corpus.institutions.size(), "institution") << "\n";
        return 0;
    }

    if (cmd_metrics->parsed()) {
        Diagnostics diags;
        Corpus corpus = metrics_input.load(config, diags);
        flush_diagnostics(diags);

        aua::MetricSelection selection;
        std::string filter = pick(metric_opt, metric_filter, config, "metric", "");
        if (!filter.empty()) selection = parse_metric_filter(filter);

        std::vector<aua::Gender> categories = aua::default_gender_categories();
        std::string cats = pick(categories_opt, categories_text, config, "categories", "");
        if (!cats.empty()) categories = parse_categories(cats);

        std::vector<aua::MetricReport> reports;
        reports.reserve(corpus.records.size());
        for (const auto& record : corpus.records) {
            reports.push_back(aua::compute_report(record, corpus, categories));
        }

        std::string output = pick(output_opt, output_format, config, "output", "json");
        if (output == "csv") {
            std::cout << aua::render_metrics_csv(std::move(reports), selection);
        } else if (output == "markdown") {
            std::cout << aua::render_metrics_markdown(std::move(reports), selection);
        } else if (output == "json") {
            std::cout << aua::render_metrics_json(std::move(reports), selection);
        } else {
            throw InvalidConfig("output", "\"" + output + "\" is not json, csv or markdown");
        }
        return 0;
    }

    if (cmd_detect->parsed()) {
        Diagnostics diags;
        Corpus corpus = detect_input.load(config, diags);
        flush_diagnostics(diags);

        bool savings = savings_opt->count() > 0
                           ? savings_flag
                           : pick(nullptr, "", config, "savings", "false") == "true";
        long long page_chars =
            chars_opt->count() > 0
                ? chars_per_page
                : parse_positive(pick(nullptr, "", config, "chars-per-page", "3000"),
                                 "chars-per-page");
        if (page_chars <= 0) {
            throw InvalidConfig("chars-per-page", "must be a positive integer");
        }

        auto clusters = aua::detect_clusters(corpus);
        std::cout << aua::render_clusters_json(clusters, corpus, savings, page_chars);
        return 0;
    }

    // table
    std::vector<aua::BenchmarkRow> rows;
    std::string fixtures = pick(fixtures_opt, fixtures_path, config, "fixtures", "");
    if (fixtures.empty()) {
        rows = aua::bundled_benchmark_rows();
    } else {
        rows = aua::load_benchmark_rows(read_file(fixtures));
    }
    std::cout << aua::render_benchmark(rows);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const aua::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == aua::ErrorKind::parse ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
