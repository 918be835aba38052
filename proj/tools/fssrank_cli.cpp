// Command-line front end: synthetic dataset generation, the full two-mode
// evaluation pipeline, a ranks-only comparison entry point, report
// re-rendering, and R' chart emission.
//
// Exit codes: 0 success, 1 validation failure, 2 I/O or parse failure,
// 3 internal invariant breach.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fssrank/chart.hpp"
#include "fssrank/config.hpp"
#include "fssrank/errors.hpp"
#include "fssrank/pipeline.hpp"
#include "fssrank/report.hpp"
#include "fssrank/synth.hpp"
#include "fssrank/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

void write_output(const std::string& content, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fssrank::IoError("cannot open '" + path + "' for writing");
    out << content;
    out.close();
    if (!out) throw fssrank::IoError("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fssrank::IoError("cannot open '" + path + "' for reading");
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return content;
}

struct SynthArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    bool emit_run_config = true;
};

int run_synth(const SynthArgs& args) {
    fssrank::SynthConfig cfg = fssrank::synth_config_from_json_file(args.config_path);
    if (args.seed) cfg.seed = *args.seed;

    std::error_code ec;
    std::filesystem::create_directories(args.out_dir, ec);
    if (ec) {
        throw fssrank::IoError("cannot create output directory '" + args.out_dir +
                               "': " + ec.message());
    }

    const fssrank::Dataset d = fssrank::generate_dataset(cfg);

    fssrank::DatasetPaths paths;
    paths.researchers_path = args.out_dir + "/researchers.csv";
    paths.publications_path = args.out_dir + "/publications.csv";
    paths.authorships_path = args.out_dir + "/authorships.csv";
    paths.taxonomy_path = args.out_dir + "/taxonomy.csv";
    paths.wages_path = args.out_dir + "/wages.csv";
    fssrank::write_dataset_csv(d, fssrank::wage_table_of(cfg), paths);

    if (args.emit_run_config) {
        std::string run_cfg = "{\n";
        run_cfg += "  \"researchers\": \"" + paths.researchers_path + "\",\n";
        run_cfg += "  \"publications\": \"" + paths.publications_path + "\",\n";
        run_cfg += "  \"authorships\": \"" + paths.authorships_path + "\",\n";
        run_cfg += "  \"taxonomy\": \"" + paths.taxonomy_path + "\",\n";
        run_cfg += "  \"wages\": \"" + paths.wages_path + "\",\n";
        run_cfg += "  \"window\": {\"start\": " + std::to_string(cfg.window.start_year) +
                   ", \"end\": " + std::to_string(cfg.window.end_year) + "}\n";
        run_cfg += "}\n";
        write_output(run_cfg, args.out_dir + "/run.json");
    }

    std::cerr << "wrote " << d.researchers.size() << " researchers, " << d.publications.size()
              << " publications to " << args.out_dir << "\n";
    return kExitOk;
}

struct RunArgs {
    std::string config_path;
    fssrank::IngestConfig cfg;
    bool has_window_start = false;
    bool has_window_end = false;
    bool has_min_share = false;
    bool has_min_gender = false;
    bool has_min_professors = false;
    std::optional<std::uint64_t> seed;
    std::string format = "text";
    std::string output;
};

int run_run(RunArgs& args) {
    fssrank::IngestConfig cfg;
    if (!args.config_path.empty()) {
        cfg = fssrank::ingest_config_from_json_file(args.config_path);
        // Explicit flags override the config file.
        if (!args.cfg.researchers_path.empty()) cfg.researchers_path = args.cfg.researchers_path;
        if (!args.cfg.publications_path.empty()) {
            cfg.publications_path = args.cfg.publications_path;
        }
        if (!args.cfg.authorships_path.empty()) cfg.authorships_path = args.cfg.authorships_path;
        if (!args.cfg.taxonomy_path.empty()) cfg.taxonomy_path = args.cfg.taxonomy_path;
        if (!args.cfg.wages_path.empty()) cfg.wages_path = args.cfg.wages_path;
        if (!args.cfg.baselines_path.empty()) cfg.baselines_path = args.cfg.baselines_path;
        if (args.cfg.use_external_baselines) cfg.use_external_baselines = true;
        if (args.has_window_start) cfg.window_start = args.cfg.window_start;
        if (args.has_window_end) cfg.window_end = args.cfg.window_end;
    } else {
        cfg = args.cfg;
    }
    if (args.has_min_share) {
        cfg.thresholds.min_productive_share = args.cfg.thresholds.min_productive_share;
    }
    if (args.has_min_gender) {
        cfg.thresholds.min_per_gender = args.cfg.thresholds.min_per_gender;
    }
    if (args.has_min_professors) {
        cfg.thresholds.min_professors_per_university_uda =
            args.cfg.thresholds.min_professors_per_university_uda;
    }

    const fssrank::ReportFormat format = fssrank::report_format_from_string(args.format);

    const fssrank::Dataset d = fssrank::load_dataset(cfg);
    const auto violations = fssrank::validate_dataset(d);
    if (!violations.empty()) {
        std::cerr << "dataset failed validation with " << violations.size() << " violation(s):\n";
        for (const auto& v : violations) {
            std::cerr << "  " << v.record_kind << " '" << v.record_id << "' " << v.field << ": "
                      << v.message << " [" << v.rule << "]\n";
        }
        return kExitValidation;
    }

    fssrank::CitationBaselineTable external;
    const fssrank::CitationBaselineTable* external_ptr = nullptr;
    if (cfg.use_external_baselines) {
        if (cfg.baselines_path.empty()) {
            throw fssrank::InvalidConfigError(
                "--use-external-baselines requires a baselines path");
        }
        external = fssrank::load_baseline_table(cfg.baselines_path);
        external_ptr = &external;
    }

    fssrank::RunReport report = fssrank::run_pipeline_on_dataset(d, cfg.thresholds, external_ptr);
    report.seed = args.seed;
    write_output(fssrank::render_report(report, format), args.output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Field-scaled research productivity rankings and gender rank divergence"};
    app.require_subcommand(1);

    SynthArgs synth_args;
    CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic dataset as CSV files");
    synth->add_option("--config", synth_args.config_path, "Synth config (json)")->required();
    synth->add_option("--out-dir", synth_args.out_dir, "Output directory (created if missing)");
    synth->add_option("--seed", synth_args.seed, "Override the config seed");
    synth->add_flag("!--no-run-config", synth_args.emit_run_config,
                    "Do not write a ready-to-use run.json");

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "Run the full two-mode evaluation pipeline");
    run->add_option("--config", run_args.config_path, "Run config (json)");
    run->add_option("--researchers", run_args.cfg.researchers_path, "researchers.csv");
    run->add_option("--publications", run_args.cfg.publications_path, "publications.csv");
    run->add_option("--authorships", run_args.cfg.authorships_path, "authorships.csv");
    run->add_option("--taxonomy", run_args.cfg.taxonomy_path, "taxonomy.csv");
    run->add_option("--wages", run_args.cfg.wages_path, "wages.csv (optional)");
    run->add_option("--baselines", run_args.cfg.baselines_path, "baselines.csv (optional)");
    run->add_flag("--use-external-baselines", run_args.cfg.use_external_baselines,
                  "Use the external baseline table instead of computing one");
    run->add_option("--window-start", run_args.cfg.window_start, "First year of the window")
        ->trigger_on_parse()
        ->each([&run_args](const std::string&) { run_args.has_window_start = true; });
    run->add_option("--window-end", run_args.cfg.window_end, "Last year of the window")
        ->trigger_on_parse()
        ->each([&run_args](const std::string&) { run_args.has_window_end = true; });
    run->add_option("--min-productive-share", run_args.cfg.thresholds.min_productive_share,
                    "SDS retention: minimum share of productive members")
        ->capture_default_str()
        ->each([&run_args](const std::string&) { run_args.has_min_share = true; });
    run->add_option("--min-per-gender", run_args.cfg.thresholds.min_per_gender,
                    "SDS retention: minimum individuals of each gender")
        ->capture_default_str()
        ->each([&run_args](const std::string&) { run_args.has_min_gender = true; });
    run->add_option("--min-professors", run_args.cfg.thresholds.min_professors_per_university_uda,
                    "University retention: minimum professors in the UDA")
        ->capture_default_str()
        ->each([&run_args](const std::string&) { run_args.has_min_professors = true; });
    run->add_option("--seed", run_args.seed, "Seed recorded in the report metadata");
    run->add_option("--format", run_args.format, "Output format: text, csv or json")
        ->capture_default_str();
    run->add_option("--output", run_args.output, "Output file ('-' or empty: stdout)");

    std::string ranks_input;
    std::string ranks_format = "text";
    std::string ranks_output;
    CLI::App* ranks = app.add_subcommand(
        "ranks-compare", "Divergence statistics from two pre-computed rank columns");
    ranks->add_option("--input", ranks_input,
                      "CSV with header university_id,rank_pooled,rank_gendered")
        ->required();
    ranks->add_option("--format", ranks_format, "Output format: text, csv or json")
        ->capture_default_str();
    ranks->add_option("--output", ranks_output, "Output file ('-' or empty: stdout)");

    std::string report_input;
    std::string report_format = "text";
    std::string report_output;
    CLI::App* report_cmd =
        app.add_subcommand("report", "Re-render a saved json report in another format");
    report_cmd->add_option("--input", report_input, "Report json produced by 'run'")->required();
    report_cmd->add_option("--format", report_format, "Output format: text, csv or json")
        ->capture_default_str();
    report_cmd->add_option("--output", report_output, "Output file ('-' or empty: stdout)");

    std::string chart_input;
    std::string chart_output = "r_prime.svg";
    CLI::App* chart_cmd =
        app.add_subcommand("chart", "Emit the R'-per-UDA bar chart (svg + companion csv)");
    chart_cmd->add_option("--input", chart_input, "Report json produced by 'run'")->required();
    chart_cmd->add_option("--output", chart_output, "SVG output path")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) return run_synth(synth_args);
        if (run->parsed()) return run_run(run_args);
        if (ranks->parsed()) {
            const auto format = fssrank::report_format_from_string(ranks_format);
            const fssrank::RanksCompareInput input = fssrank::load_ranks_csv(ranks_input);
            const fssrank::UdaDivergence d = fssrank::ranks_compare(input);
            write_output(fssrank::render_ranks_compare(input, d, format), ranks_output);
            return kExitOk;
        }
        if (report_cmd->parsed()) {
            const auto format = fssrank::report_format_from_string(report_format);
            const fssrank::RunReport report = fssrank::report_from_json(read_file(report_input));
            write_output(fssrank::render_report(report, format), report_output);
            return kExitOk;
        }
        if (chart_cmd->parsed()) {
            const fssrank::RunReport report = fssrank::report_from_json(read_file(chart_input));
            fssrank::emit_chart(report, chart_output);
            std::cerr << "wrote " << chart_output << " and "
                      << fssrank::chart_csv_path_for(chart_output) << "\n";
            return kExitOk;
        }
    } catch (const fssrank::PipelineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.stage == "validate") return kExitValidation;
        return e.stage == "aggregate" ? kExitInternal : kExitIo;
    } catch (const fssrank::NotAPermutationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const fssrank::LengthMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const fssrank::TooFewObservationsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const fssrank::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const fssrank::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const fssrank::InvalidConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
