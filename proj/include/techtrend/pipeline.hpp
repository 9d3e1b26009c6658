#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "techtrend/ets.hpp"
#include "techtrend/ingest.hpp"
#include "techtrend/period.hpp"
#include "techtrend/taxonomy.hpp"

namespace techtrend {

enum class ForecastMode { fixed, rolling };

/// Everything a run needs, loadable from a JSON file; CLI flags override
/// individual fields.
struct Config {
    std::filesystem::path posts_store;   // empty = source absent
    std::filesystem::path events_store;
    std::filesystem::path taxonomy_path = "data/taxonomy.json";
    std::filesystem::path stop_list_path = "data/stopwords_en.txt";
    std::vector<Granularity> granularities = {Granularity::monthly, Granularity::quarterly};
    Period train_end{Granularity::monthly, 2013, 12};
    Period test_start{Granularity::monthly, 2014, 1};
    Period test_end{Granularity::monthly, 2015, 2};
    ForecastMode mode = ForecastMode::fixed;
    bool auto_spec = true;               // spec policy: auto | explicit
    ModelSpec explicit_spec;             // used when auto_spec is false
    std::filesystem::path out_dir = "out";
    bool use_body = false;
    std::string graph_area = "programming-languages";

    static Config load(const std::filesystem::path& path);
};

/// Pipeline stages `run` executes; subcommands run a single stage.
enum StageMask : unsigned {
    kStageClassify = 1u << 0,
    kStageSeries = 1u << 1,
    kStageForecast = 1u << 2,
    kStageEvaluate = 1u << 3,
    kStageGraph = 1u << 4,
    kStageAll = 0x1F,
};

struct RunResult {
    std::vector<std::string> skipped;       // skipped.txt lines
    std::vector<std::string> files_written; // relative to out_dir
    bool had_skips() const { return !skipped.empty(); }
};

/// classify -> series -> forecast -> evaluate -> graph over the configured
/// stores. Deterministic: identical inputs produce byte-identical outputs.
/// Technologies without enough data land in skipped.txt, never abort the
/// run.
RunResult run_pipeline(const Config& config, unsigned stages = kStageAll);

struct IngestSummary {
    std::filesystem::path source;
    ParseStats stats;
};

/// Parses the given dump files into the store for `source_kind`, appending
/// in batches. Returns per-file stats.
std::vector<IngestSummary> ingest_files(const Config& config, RecordStore::Kind kind,
                                        const std::vector<std::filesystem::path>& files);

/// Re-evaluates transcription CSVs of (period,actual,predicted) rows, one
/// file per technology/source/granularity as described by meta.json, and
/// writes per-technology reports plus the summary artifacts.
RunResult evaluate_pairs_dir(const std::filesystem::path& pairs_dir,
                             const std::filesystem::path& taxonomy_path,
                             const std::filesystem::path& out_dir);

/// Filesystem-safe slug used in artifact filenames (c# -> csharp,
/// c++ -> cpp, vb.net -> vbnet).
std::string fs_slug(std::string_view technology_id);

}  // namespace techtrend
