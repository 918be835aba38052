#include "fssrank/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fssrank/errors.hpp"

namespace fssrank {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw ParseError("config '" + path + "': " + e.what());
    }
}

void reject_unknown_keys(const json& j, const std::set<std::string>& known,
                         const std::string& context) {
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) {
            throw InvalidConfigError("unknown key '" + key + "' in " + context);
        }
    }
}

Window window_from(const json& j) {
    Window w;
    w.start_year = j.at("start").get<int>();
    w.end_year = j.at("end").get<int>();
    reject_unknown_keys(j, {"start", "end"}, "window");
    return w;
}

EligibilityThresholds thresholds_from(const json& j) {
    EligibilityThresholds t;
    if (j.contains("min_productive_share")) {
        t.min_productive_share = j.at("min_productive_share").get<double>();
    }
    if (j.contains("min_per_gender")) t.min_per_gender = j.at("min_per_gender").get<int>();
    if (j.contains("min_professors")) {
        t.min_professors_per_university_uda = j.at("min_professors").get<int>();
    }
    reject_unknown_keys(j, {"min_productive_share", "min_per_gender", "min_professors"},
                        "thresholds");
    return t;
}

}  // namespace

IngestConfig ingest_config_from_json_file(const std::string& path) {
    const json j = parse_file(path);
    reject_unknown_keys(j,
                        {"researchers", "publications", "authorships", "taxonomy", "wages",
                         "baselines", "use_external_baselines", "window", "thresholds"},
                        "run config");
    IngestConfig cfg;
    try {
        cfg.researchers_path = j.at("researchers").get<std::string>();
        cfg.publications_path = j.at("publications").get<std::string>();
        cfg.authorships_path = j.at("authorships").get<std::string>();
        cfg.taxonomy_path = j.at("taxonomy").get<std::string>();
        if (j.contains("wages")) cfg.wages_path = j.at("wages").get<std::string>();
        if (j.contains("baselines")) cfg.baselines_path = j.at("baselines").get<std::string>();
        if (j.contains("use_external_baselines")) {
            cfg.use_external_baselines = j.at("use_external_baselines").get<bool>();
        }
        const Window w = window_from(j.at("window"));
        cfg.window_start = w.start_year;
        cfg.window_end = w.end_year;
        if (j.contains("thresholds")) cfg.thresholds = thresholds_from(j.at("thresholds"));
    } catch (const json::exception& e) {
        throw InvalidConfigError("run config '" + path + "': " + e.what());
    }
    return cfg;
}

SynthConfig synth_config_from_json_file(const std::string& path) {
    const json j = parse_file(path);
    reject_unknown_keys(j,
                        {"seed", "n_universities", "window", "pubs_per_year", "citation_mean",
                         "citation_dispersion", "coauthors_mean", "gap", "wages", "udas"},
                        "synth config");
    SynthConfig cfg;
    try {
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("n_universities")) cfg.n_universities = j.at("n_universities").get<int>();
        if (j.contains("window")) cfg.window = window_from(j.at("window"));
        if (j.contains("pubs_per_year")) cfg.pubs_per_year = j.at("pubs_per_year").get<double>();
        if (j.contains("citation_mean")) cfg.citation_mean = j.at("citation_mean").get<double>();
        if (j.contains("citation_dispersion")) {
            cfg.citation_dispersion = j.at("citation_dispersion").get<double>();
        }
        if (j.contains("coauthors_mean")) cfg.coauthors_mean = j.at("coauthors_mean").get<double>();
        if (j.contains("gap")) cfg.gap = j.at("gap").get<double>();
        if (j.contains("wages")) {
            cfg.wage_by_rank.clear();
            for (const auto& [rank, wage] : j.at("wages").items()) {
                cfg.wage_by_rank[rank] = wage.get<double>();
            }
        }
        cfg.udas.clear();
        for (const auto& ju : j.at("udas")) {
            reject_unknown_keys(ju, {"uda_id", "sds"}, "uda spec");
            UdaSpec uda;
            uda.uda_id = ju.at("uda_id").get<std::string>();
            for (const auto& js : ju.at("sds")) {
                reject_unknown_keys(js,
                                    {"sds_id", "weighting_scheme", "n_female", "n_male",
                                     "sample_counts"},
                                    "sds spec");
                SdsSpec sds;
                sds.sds_id = js.at("sds_id").get<std::string>();
                if (js.contains("weighting_scheme")) {
                    sds.weighting_scheme = js.at("weighting_scheme").get<std::string>();
                }
                sds.n_female_per_university = js.at("n_female").get<int>();
                sds.n_male_per_university = js.at("n_male").get<int>();
                if (js.contains("sample_counts")) {
                    sds.sample_counts = js.at("sample_counts").get<bool>();
                }
                uda.sds.push_back(std::move(sds));
            }
            cfg.udas.push_back(std::move(uda));
        }
    } catch (const json::exception& e) {
        throw InvalidConfigError("synth config '" + path + "': " + e.what());
    }
    validate_config(cfg);
    return cfg;
}

}  // namespace fssrank
