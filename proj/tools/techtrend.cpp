#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "techtrend/errors.hpp"
#include "techtrend/pipeline.hpp"

using namespace techtrend;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitFatal = 2;

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    std::string granularity;
    std::string mode;
    std::string area;
    bool use_body = false;
};

Config load_config(const CommonOpts& opts) {
    std::string path = opts.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv("TECHTREND_CONFIG")) path = env;
    }
    Config config = path.empty() ? Config{} : Config::load(path);
    if (!opts.out_dir.empty()) config.out_dir = opts.out_dir;
    if (!opts.granularity.empty()) {
        auto g = granularity_from_string(opts.granularity);
        if (!g) throw std::runtime_error("unknown granularity: " + opts.granularity);
        config.granularities = {*g};
    }
    if (!opts.mode.empty()) {
        if (opts.mode == "fixed") config.mode = ForecastMode::fixed;
        else if (opts.mode == "rolling") config.mode = ForecastMode::rolling;
        else throw std::runtime_error("mode must be fixed or rolling");
    }
    if (!opts.area.empty()) config.graph_area = opts.area;
    if (opts.use_body) config.use_body = true;
    return config;
}

int report_run(const RunResult& result) {
    for (const std::string& line : result.skipped) std::cerr << "skipped: " << line << "\n";
    std::cout << result.files_written.size() << " file(s) written, " << result.skipped.size()
              << " technology/granularity combination(s) skipped\n";
    return result.had_skips() ? kExitPartial : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"technology trend mining and forecasting pipeline"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--config", opts.config_path, "configuration file (JSON)")
        ->envname("TECHTREND_CONFIG");

    std::string source = "posts";
    std::vector<std::string> input_files;
    std::string pairs_dir;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", opts.out_dir, "output directory override");
        cmd->add_option("--granularity", opts.granularity, "monthly|quarterly");
        cmd->add_option("--mode", opts.mode, "fixed|rolling forecast mode");
        cmd->add_option("--area", opts.area, "knowledge area for graph export");
        cmd->add_flag("--use-body", opts.use_body, "also match post bodies against keywords");
    };

    CLI::App* ingest = app.add_subcommand("ingest", "parse dumps into the record store");
    ingest->add_option("--source", source, "posts|events")->check(CLI::IsMember({"posts", "events"}));
    ingest->add_option("files", input_files, "dump files")->required();
    add_common(ingest);

    CLI::App* classify = app.add_subcommand("classify", "write classified records");
    CLI::App* series = app.add_subcommand("series", "write time-series CSVs");
    CLI::App* forecast = app.add_subcommand("forecast", "write forecast CSVs");
    CLI::App* evaluate = app.add_subcommand("evaluate", "write evaluation reports and summary");
    evaluate->add_option("--pairs-dir", pairs_dir,
                         "evaluate transcribed actual/prediction CSVs instead of the store");
    CLI::App* graph = app.add_subcommand("graph", "write yearly co-occurrence GDF files");
    CLI::App* run = app.add_subcommand("run", "full pipeline");
    CLI::App* report = app.add_subcommand("report", "print the summary table");
    for (CLI::App* cmd : {classify, series, forecast, evaluate, graph, run, report}) add_common(cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (ingest->parsed()) {
            Config config = load_config(opts);
            RecordStore::Kind kind =
                source == "posts" ? RecordStore::Kind::posts : RecordStore::Kind::events;
            std::vector<std::filesystem::path> files(input_files.begin(), input_files.end());
            for (const auto& f : files)
                if (!std::filesystem::exists(f))
                    throw std::runtime_error("input file does not exist: " + f.string());
            auto summaries = ingest_files(config, kind, files);
            std::uint64_t records = 0, skipped = 0;
            for (const IngestSummary& s : summaries) {
                records += s.stats.rows_emitted;
                skipped += s.stats.rows_skipped;
            }
            std::cout << records << " records, " << skipped << " skipped\n";
            return kExitOk;
        }
        if (run->parsed()) return report_run(run_pipeline(load_config(opts)));
        if (classify->parsed()) return report_run(run_pipeline(load_config(opts), kStageClassify));
        if (series->parsed()) return report_run(run_pipeline(load_config(opts), kStageSeries));
        if (forecast->parsed()) return report_run(run_pipeline(load_config(opts), kStageForecast));
        if (graph->parsed()) return report_run(run_pipeline(load_config(opts), kStageGraph));
        if (evaluate->parsed()) {
            Config config = load_config(opts);
            if (!pairs_dir.empty())
                return report_run(
                    evaluate_pairs_dir(pairs_dir, config.taxonomy_path, config.out_dir));
            return report_run(run_pipeline(config, kStageEvaluate));
        }
        if (report->parsed()) {
            Config config = load_config(opts);
            std::ifstream in(config.out_dir / "summary.txt");
            if (!in)
                throw std::runtime_error("no summary at " + (config.out_dir / "summary.txt").string()
                                         + "; run `evaluate` or `run` first");
            std::cout << in.rdbuf();
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFatal;
    }
    return kExitFatal;
}
