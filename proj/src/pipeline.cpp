#include "techtrend/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "techtrend/errors.hpp"
#include "techtrend/evaluate.hpp"
#include "techtrend/graph.hpp"
#include "techtrend/series.hpp"

namespace techtrend {

namespace {

Period parse_period_or_throw(const std::string& s, const char* field) {
    auto p = parse_period(s);
    if (!p || p->granularity != Granularity::monthly)
        throw std::runtime_error(std::string("config: ") + field + " must be a YYYY-MM period, got '" + s + "'");
    return *p;
}

Period to_granularity(Period monthly, Granularity g) {
    switch (g) {
        case Granularity::monthly: return monthly;
        case Granularity::quarterly:
            return Period{Granularity::quarterly, monthly.year, (monthly.index - 1) / 3 + 1};
        case Granularity::yearly: return Period{Granularity::yearly, monthly.year, 1};
    }
    return monthly;
}

// quarters (or years) wholly inside the monthly window
Period test_end_for(Period test_start_m, Period test_end_m, Granularity g) {
    if (g == Granularity::monthly) return test_end_m;
    Period end = to_granularity(test_end_m, g);
    int last_month = g == Granularity::quarterly ? end.index * 3 : 12;
    Period end_month{Granularity::monthly, end.year, last_month};
    if (test_end_m < end_month) end = Period::from_linear(g, end.linear() - 1);
    return end;
}

std::string fmt_sig6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

struct SourceData {
    std::string name;  // "stackexchange" | "github"
    std::vector<ClassifiedRecord> records;
};

}  // namespace

std::string fs_slug(std::string_view technology_id) {
    std::string out;
    for (char c : technology_id) {
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-') out += c;
        else if (c == '#') out += "sharp";
        else if (c == '+') out += 'p';
        // '.' and anything else dropped
    }
    return out;
}

Config Config::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("invalid config " + path.string() + ": " + e.what());
    }

    Config c;
    auto path_of = [&](const char* key, std::filesystem::path fallback) {
        return doc.contains(key) ? std::filesystem::path(doc[key].get<std::string>()) : fallback;
    };
    c.posts_store = path_of("posts_store", {});
    c.events_store = path_of("events_store", {});
    c.taxonomy_path = path_of("taxonomy", c.taxonomy_path);
    c.stop_list_path = path_of("stop_list", c.stop_list_path);
    c.out_dir = path_of("out_dir", c.out_dir);
    if (doc.contains("granularities")) {
        c.granularities.clear();
        for (const auto& g : doc["granularities"]) {
            auto v = granularity_from_string(g.get<std::string>());
            if (!v) throw std::runtime_error("config: unknown granularity " + g.dump());
            c.granularities.push_back(*v);
        }
    }
    if (doc.contains("train_end")) c.train_end = parse_period_or_throw(doc["train_end"], "train_end");
    if (doc.contains("test_start")) c.test_start = parse_period_or_throw(doc["test_start"], "test_start");
    if (doc.contains("test_end")) c.test_end = parse_period_or_throw(doc["test_end"], "test_end");
    if (c.train_end.linear() >= c.test_start.linear() || c.test_end < c.test_start)
        throw std::runtime_error("config: split dates must satisfy train_end < test_start <= test_end");
    if (doc.contains("mode")) {
        std::string m = doc["mode"].get<std::string>();
        if (m == "fixed") c.mode = ForecastMode::fixed;
        else if (m == "rolling") c.mode = ForecastMode::rolling;
        else throw std::runtime_error("config: mode must be fixed or rolling");
    }
    if (doc.contains("spec_policy")) {
        std::string p = doc["spec_policy"].get<std::string>();
        if (p == "auto") {
            c.auto_spec = true;
        } else {
            c.auto_spec = false;
            // explicit policy names the trend/seasonal parts, e.g. "AdN", "AA"
            ModelSpec spec;
            if (p == "NN") spec = {TrendType::none, SeasonalType::none, 1};
            else if (p == "AN") spec = {TrendType::additive, SeasonalType::none, 1};
            else if (p == "AdN") spec = {TrendType::additive_damped, SeasonalType::none, 1};
            else if (p == "NA") spec = {TrendType::none, SeasonalType::additive, 1};
            else if (p == "AA") spec = {TrendType::additive, SeasonalType::additive, 1};
            else if (p == "AdA") spec = {TrendType::additive_damped, SeasonalType::additive, 1};
            else throw std::runtime_error("config: spec_policy must be auto or one of NN,AN,AdN,NA,AA,AdA");
            c.explicit_spec = spec;
        }
    }
    if (doc.contains("use_body")) c.use_body = doc["use_body"].get<bool>();
    if (doc.contains("graph_area")) c.graph_area = doc["graph_area"].get<std::string>();
    return c;
}

namespace {

void classify_sources(const Config& config, const Taxonomy& taxonomy, const StopList& stops,
                      std::vector<SourceData>& sources) {
    if (!config.posts_store.empty()) {
        SourceData sd;
        sd.name = "stackexchange";
        RecordStore::for_each_post(config.posts_store, [&](Post&& post) {
            sd.records.push_back(
                ClassifiedRecord{post.creation_date,
                                 classify_post(post, taxonomy, config.use_body, stops)});
        });
        sources.push_back(std::move(sd));
    }
    if (!config.events_store.empty()) {
        SourceData sd;
        sd.name = "github";
        RecordStore::for_each_event(config.events_store, [&](Event&& ev) {
            sd.records.push_back(ClassifiedRecord{ev.created_at, classify_event(ev, taxonomy)});
        });
        sources.push_back(std::move(sd));
    }
}

void emit_classified(const Config& config, const SourceData& sd, RunResult& result) {
    std::string out;
    for (const ClassifiedRecord& r : sd.records) {
        nlohmann::json j{{"t", format_timestamp(r.timestamp)}, {"ids", r.technology_ids}};
        out += j.dump();
        out += '\n';
    }
    std::string rel = "classified/" + sd.name + ".ndjson";
    write_file(config.out_dir / rel, out);
    result.files_written.push_back(rel);
}

struct EvalOutcome {
    std::vector<EvaluationReport> reports;
};

void forecast_and_evaluate(const Config& config, const SourceData& sd, Granularity gran,
                           const std::map<std::string, TimeSeries>& series, unsigned stages,
                           RunResult& result, EvalOutcome& outcome,
                           const std::set<std::string>& all_ids) {
    const int m = gran == Granularity::monthly ? 12 : 4;
    const Period train_end = to_granularity(config.train_end, gran);
    const Period test_start = to_granularity(config.test_start, gran);
    const Period test_end = test_end_for(config.test_start, config.test_end, gran);

    auto skip = [&](const std::string& id, const std::string& why) {
        result.skipped.push_back(sd.name + "," + to_string(gran).data() + "," + id + ": " + why);
    };

    for (const std::string& id : all_ids) {
        auto it = series.find(id);
        if (it == series.end()) {
            skip(id, "no data: not enough data points to make prediction");
            continue;
        }
        const TimeSeries& s = it->second;

        // train = [start .. train_end], test = [test_start .. test_end]
        std::int64_t train_n = train_end.linear() - s.start.linear() + 1;
        if (train_n < 0) train_n = 0;
        std::int64_t test_i0 = test_start.linear() - s.start.linear();
        std::int64_t test_i1 = std::min<std::int64_t>(test_end.linear() - s.start.linear(),
                                                      static_cast<std::int64_t>(s.size()) - 1);
        if (test_i0 < 0 || test_i1 < test_i0) {
            skip(id, "test window has no observations");
            continue;
        }
        std::vector<double> values = s.values();
        std::size_t train_len = static_cast<std::size_t>(train_n);
        std::size_t test_len = static_cast<std::size_t>(test_i1 - test_i0 + 1);

        std::vector<RollingPair> pairs;
        std::optional<ModelSpec> fixed_spec;
        if (!config.auto_spec) {
            fixed_spec = config.explicit_spec;
            if (fixed_spec->has_seasonal()) fixed_spec->season_length = m;
        }
        try {
            if (config.mode == ForecastMode::rolling) {
                pairs = rolling_one_step(values, train_len, test_len, m, fixed_spec);
            } else {
                std::vector<double> train(values.begin(),
                                          values.begin() + static_cast<std::ptrdiff_t>(train_len));
                FittedModel model = fixed_spec ? fit(train, *fixed_spec)
                                               : select_model(train, candidate_specs(m), m);
                std::vector<double> preds = forecast_fixed(model, static_cast<int>(test_len));
                for (std::size_t i = 0; i < test_len; ++i)
                    pairs.push_back(RollingPair{values[train_len + i], preds[i]});
            }
        } catch (const InsufficientDataError& e) {
            skip(id, e.what());
            continue;
        }

        if (stages & kStageForecast) {
            std::string csv = "technology,origin,horizon_index,period,predicted\n";
            Period p = test_start;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                csv += id + "," + train_end.str() + "," + std::to_string(i + 1) + "," + p.str()
                       + "," + fmt_sig6(pairs[i].predicted) + "\n";
                p = p.next();
            }
            std::string rel = "forecasts/" + sd.name + "_" + fs_slug(id) + "_"
                              + std::string(to_string(gran)) + ".csv";
            write_file(config.out_dir / rel, csv);
            result.files_written.push_back(rel);
        }

        if (stages & kStageEvaluate) {
            std::vector<std::pair<Period, double>> actuals;
            std::vector<double> preds;
            Period p = test_start;
            for (const RollingPair& pr : pairs) {
                actuals.emplace_back(p, pr.actual);
                preds.push_back(pr.predicted);
                p = p.next();
            }
            EvaluationReport rep = build_report(id, sd.name, gran, actuals, preds);
            std::ostringstream os;
            write_report_csv(os, rep);
            std::string rel = "reports/" + sd.name + "_" + fs_slug(id) + "_"
                              + std::string(to_string(gran)) + ".csv";
            write_file(config.out_dir / rel, os.str());
            result.files_written.push_back(rel);
            outcome.reports.push_back(std::move(rep));
        }
    }
}

void emit_graphs(const Config& config, const Taxonomy& taxonomy, const SourceData& posts,
                 RunResult& result) {
    // restrict each record's id set to the configured knowledge area
    std::set<std::string> area_ids;
    for (const Technology& t : taxonomy.technologies())
        if (t.knowledge_area == config.graph_area) area_ids.insert(t.id);

    std::vector<ClassifiedRecord> filtered;
    filtered.reserve(posts.records.size());
    std::set<int> years;
    for (const ClassifiedRecord& r : posts.records) {
        ClassifiedRecord f;
        f.timestamp = r.timestamp;
        for (const std::string& id : r.technology_ids)
            if (area_ids.count(id)) f.technology_ids.push_back(id);
        if (f.technology_ids.empty()) continue;
        years.insert(bucket_period(f.timestamp, Granularity::yearly).year);
        filtered.push_back(std::move(f));
    }

    auto label_of = [&](const std::string& id) {
        const Technology* t = taxonomy.find(id);
        return t ? t->display_name : id;
    };
    for (int year : years) {
        CooccurrenceGraph g = build_cooccurrence(filtered, year, label_of);
        std::string rel = "graphs/" + config.graph_area + "-" + std::to_string(year) + ".gdf";
        write_file(config.out_dir / rel, export_gdf(g));
        result.files_written.push_back(rel);
    }
}

}  // namespace

RunResult run_pipeline(const Config& config, unsigned stages) {
    Taxonomy taxonomy = load_taxonomy(config.taxonomy_path.string());
    StopList stops = StopList::load(config.stop_list_path.string());

    RunResult result;
    std::vector<SourceData> sources;
    classify_sources(config, taxonomy, stops, sources);

    std::set<std::string> all_ids;
    for (const Technology& t : taxonomy.technologies()) all_ids.insert(t.id);

    EvalOutcome outcome;
    for (const SourceData& sd : sources) {
        if (stages & kStageClassify) emit_classified(config, sd, result);

        UtcTimestamp min_ts{0}, max_ts{0};
        bool any = false;
        for (const ClassifiedRecord& r : sd.records) {
            if (r.technology_ids.empty()) continue;
            if (!any || r.timestamp < min_ts) min_ts = r.timestamp;
            if (!any || max_ts < r.timestamp) max_ts = r.timestamp;
            any = true;
        }

        for (Granularity gran : config.granularities) {
            std::map<std::string, TimeSeries> series;
            if (any) {
                Period start = bucket_period(min_ts, gran);
                Period end = test_end_for(config.test_start, config.test_end, gran);
                Period data_end = bucket_period(max_ts, gran);
                if (data_end < end) end = data_end;
                if (!(end < start)) {
                    Aggregator agg(gran, start, end, sd.name);
                    for (const ClassifiedRecord& r : sd.records) agg.add(r.timestamp, r.technology_ids);
                    series = agg.finish();
                }
            }

            if (stages & kStageSeries) {
                std::ostringstream os;
                write_series_csv(os, series);
                std::string rel = "series/" + sd.name + "_" + std::string(to_string(gran)) + ".csv";
                write_file(config.out_dir / rel, os.str());
                result.files_written.push_back(rel);
            }

            if (stages & (kStageForecast | kStageEvaluate))
                forecast_and_evaluate(config, sd, gran, series, stages, result, outcome, all_ids);
        }

        if ((stages & kStageGraph) && sd.name == "stackexchange") emit_graphs(config, taxonomy, sd, result);
    }

    if (stages & kStageEvaluate) {
        // summary mirrors the per-technology tables for the post source
        std::vector<EvaluationReport> se_reports;
        for (const EvaluationReport& r : outcome.reports)
            if (r.source == "stackexchange") se_reports.push_back(r);
        if (se_reports.empty()) se_reports = outcome.reports;

        auto area_of = [&](const std::string& id) {
            const Technology* t = taxonomy.find(id);
            return t ? t->knowledge_area : std::string("unknown");
        };
        std::vector<SummaryRow> summary = build_summary(se_reports, area_of);
        {
            std::ostringstream os;
            write_summary_csv(os, summary);
            write_file(config.out_dir / "summary.csv", os.str());
            result.files_written.push_back("summary.csv");
        }
        {
            std::ostringstream os;
            write_summary_table(os, summary);
            write_file(config.out_dir / "summary.txt", os.str());
            result.files_written.push_back("summary.txt");
        }
    }

    {
        std::string manifest;
        for (const std::string& line : result.skipped) {
            manifest += line;
            manifest += '\n';
        }
        write_file(config.out_dir / "skipped.txt", manifest);
        result.files_written.push_back("skipped.txt");
    }
    return result;
}

std::vector<IngestSummary> ingest_files(const Config& config, RecordStore::Kind kind,
                                        const std::vector<std::filesystem::path>& files) {
    const std::filesystem::path& root =
        kind == RecordStore::Kind::posts ? config.posts_store : config.events_store;
    if (root.empty()) throw std::runtime_error("config: store path for this source is not set");
    RecordStore store = RecordStore::open(root, kind);

    std::vector<IngestSummary> summaries;
    for (const std::filesystem::path& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open input file: " + file.string());
        std::uint32_t crc = crc32_file(file);

        IngestSummary summary;
        summary.source = file;
        constexpr std::size_t kBatch = 8192;
        if (kind == RecordStore::Kind::posts) {
            std::vector<Post> batch;
            batch.reserve(kBatch);
            summary.stats = parse_posts_stream(in, [&](Post&& p) {
                batch.push_back(std::move(p));
                if (batch.size() >= kBatch) {
                    store.append_posts(batch);
                    batch.clear();
                }
            });
            store.append_posts(batch, file.filename().string(), crc);
        } else {
            bool gz = file.extension() == ".gz";
            std::vector<Event> batch;
            batch.reserve(kBatch);
            summary.stats = parse_events_stream(in, gz, [&](Event&& e) {
                batch.push_back(std::move(e));
                if (batch.size() >= kBatch) {
                    store.append_events(batch);
                    batch.clear();
                }
            }, file.string());
            store.append_events(batch, file.filename().string(), crc);
        }
        summaries.push_back(std::move(summary));
    }
    return summaries;
}

RunResult evaluate_pairs_dir(const std::filesystem::path& pairs_dir,
                             const std::filesystem::path& taxonomy_path,
                             const std::filesystem::path& out_dir) {
    Taxonomy taxonomy = load_taxonomy(taxonomy_path.string());

    std::ifstream meta_in(pairs_dir / "meta.json");
    if (!meta_in)
        throw std::runtime_error("pairs dir lacks meta.json: " + (pairs_dir / "meta.json").string());
    nlohmann::json meta;
    meta_in >> meta;

    RunResult result;
    std::vector<EvaluationReport> reports;
    std::map<std::string, std::string> areas;

    for (const auto& entry : meta) {
        std::string file = entry.at("file").get<std::string>();
        std::string tech = entry.at("technology").get<std::string>();
        std::string source = entry.at("source").get<std::string>();
        auto gran = granularity_from_string(entry.at("granularity").get<std::string>());
        if (!gran) throw std::runtime_error("meta.json: bad granularity for " + file);
        areas[tech] = entry.value("area", "unknown");

        std::ifstream in(pairs_dir / file);
        if (!in) throw std::runtime_error("cannot open pairs file: " + (pairs_dir / file).string());
        std::string line;
        std::getline(in, line);  // header
        std::vector<std::pair<Period, double>> actuals;
        std::vector<double> preds;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream ss(line);
            std::string period, actual, predicted;
            std::getline(ss, period, ',');
            std::getline(ss, actual, ',');
            std::getline(ss, predicted, ',');
            auto p = parse_period(period);
            if (!p) throw std::runtime_error("bad period '" + period + "' in " + file);
            actuals.emplace_back(*p, std::stod(actual));
            preds.push_back(std::stod(predicted));
        }
        EvaluationReport rep = build_report(tech, source, *gran, actuals, preds);
        std::ostringstream os;
        write_report_csv(os, rep);
        std::string rel = "reports/" + source + "_" + fs_slug(tech) + "_"
                          + std::string(to_string(*gran)) + ".csv";
        write_file(out_dir / rel, os.str());
        result.files_written.push_back(rel);
        reports.push_back(std::move(rep));
    }

    std::vector<EvaluationReport> se_reports;
    for (const EvaluationReport& r : reports)
        if (r.source == "stackexchange") se_reports.push_back(r);

    auto area_of = [&](const std::string& id) {
        auto it = areas.find(id);
        if (it != areas.end()) return it->second;
        const Technology* t = taxonomy.find(id);
        return t ? t->knowledge_area : std::string("unknown");
    };
    std::vector<SummaryRow> summary = build_summary(se_reports, area_of);
    {
        std::ostringstream os;
        write_summary_csv(os, summary);
        write_file(out_dir / "summary.csv", os.str());
        result.files_written.push_back("summary.csv");
    }
    {
        std::ostringstream os;
        write_summary_table(os, summary);
        write_file(out_dir / "summary.txt", os.str());
        result.files_written.push_back("summary.txt");
    }
    return result;
}

}  // namespace techtrend
