#include "fssrank/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "fssrank/csv.hpp"
#include "fssrank/errors.hpp"

namespace fssrank {

namespace {

using ordered_json = nlohmann::ordered_json;

char sign_char(int signed_shift) {
    if (signed_shift > 0) return '+';
    if (signed_shift < 0) return '-';
    return '=';
}

std::string pad_right(const std::string& s, std::size_t width) {
    std::string out = s;
    if (out.size() < width) out.append(width - out.size(), ' ');
    return out;
}

std::string pad_left(const std::string& s, std::size_t width) {
    std::string out = s;
    if (out.size() < width) out.insert(0, width - out.size(), ' ');
    return out;
}

std::string render_text(const RunReport& r) {
    std::ostringstream out;
    out << "Rank divergence report: pooled vs by-gender field scaling\n";
    out << "Window: " << r.window.start_year << "-" << r.window.end_year
        << "   Config hash: " << r.config_hash;
    if (r.seed) out << "   Seed: " << *r.seed;
    out << "\n";
    out << "Researchers: " << r.eligibility.n_researchers_input << " input, "
        << r.eligibility.n_researchers_retained << " retained.  SDS: "
        << r.eligibility.n_sds_retained << " retained, "
        << r.eligibility.n_sds_excluded_by_productivity << " excluded by productivity, "
        << r.eligibility.n_sds_excluded_by_gender_count << " excluded by gender count.  "
        << "University-UDA pairs: " << r.eligibility.n_university_uda_pairs_retained
        << " retained, " << r.eligibility.n_university_uda_pairs_excluded << " excluded.\n";

    for (const auto& uda : r.udas) {
        std::size_t univ_width = 10;
        for (const auto& u : uda.universities) {
            univ_width = std::max(univ_width, u.university_id.size());
        }

        out << "\nUDA " << uda.uda_id << " (" << uda.n_universities << " universities, "
            << uda.n_significant << " with significant differences)\n";
        out << pad_right("University", univ_width) << "  " << pad_left("FSS_U pooled", 12) << "  "
            << pad_left("Rank", 4) << "  " << pad_left("FSS_U by-gender", 15) << "  "
            << pad_left("Rank", 4) << "  Sign  " << pad_left("Shift", 5) << "  Signif.\n";
        for (const auto& u : uda.universities) {
            out << pad_right(u.university_id, univ_width) << "  "
                << pad_left(format_fixed(u.fss_pooled, 3), 12) << "  "
                << pad_left(std::to_string(u.rank_pooled), 4) << "  "
                << pad_left(format_fixed(u.fss_gendered, 3), 15) << "  "
                << pad_left(std::to_string(u.rank_gendered), 4) << "  " << sign_char(u.signed_shift)
                << "     " << pad_left(std::to_string(u.abs_shift), 5) << "  " << u.t_test.stars
                << "\n";
        }
        out << "Observations: " << uda.n_universities
            << "  Sum of shifts: " << uda.divergence.shifts.sum_shift
            << "  Max shift: " << uda.divergence.shifts.max_shift
            << "  Mean shift: " << format_fixed(uda.divergence.shifts.mean_shift, 3) << "\n";
        out << "Spearman rho: " << format_fixed(uda.divergence.spearman.rho, 3)
            << uda.divergence.spearman.stars
            << " (p=" << format_fixed(uda.divergence.spearman.p_value, 3)
            << ")   R': " << format_fixed(uda.divergence.rprime.r_prime, 2) << "%\n";
    }

    out << "\nSummary\n";
    std::size_t uda_width = 8;
    for (const auto& uda : r.udas) uda_width = std::max(uda_width, uda.uda_id.size());
    out << pad_right("UDA", uda_width) << "  " << pad_left("Universities", 12) << "  "
        << pad_left("Signif.", 7) << "  " << pad_left("Shifted", 13) << "  " << pad_left("Max", 4)
        << "  " << pad_left("Mean", 6) << "  " << pad_left("Spearman", 11) << "  "
        << pad_left("R'(%)", 6) << "\n";
    for (const auto& uda : r.udas) {
        const std::string shifted = std::to_string(uda.divergence.shifts.n_shifted) + " (" +
                                    format_fixed(uda.divergence.shifts.percent_shifted, 1) + "%)";
        out << pad_right(uda.uda_id, uda_width) << "  "
            << pad_left(std::to_string(uda.n_universities), 12) << "  "
            << pad_left(std::to_string(uda.n_significant), 7) << "  " << pad_left(shifted, 13)
            << "  " << pad_left(std::to_string(uda.divergence.shifts.max_shift), 4) << "  "
            << pad_left(format_fixed(uda.divergence.shifts.mean_shift, 3), 6) << "  "
            << pad_left(format_fixed(uda.divergence.spearman.rho, 3) + uda.divergence.spearman.stars,
                        11)
            << "  " << pad_left(format_fixed(uda.divergence.rprime.r_prime, 2), 6) << "\n";
    }
    return out.str();
}

std::string render_csv(const RunReport& r) {
    std::ostringstream out;
    out << "uda_id,university_id,fss_pooled,rank_pooled,fss_gendered,rank_gendered,sign,"
           "abs_shift,t_statistic,degrees_of_freedom,p_value,stars\n";
    for (const auto& uda : r.udas) {
        for (const auto& u : uda.universities) {
            out << uda.uda_id << ',' << u.university_id << ',' << format_double(u.fss_pooled)
                << ',' << u.rank_pooled << ',' << format_double(u.fss_gendered) << ','
                << u.rank_gendered << ',' << sign_char(u.signed_shift) << ',' << u.abs_shift << ','
                << format_double(u.t_test.t_statistic) << ',' << u.t_test.degrees_of_freedom << ','
                << format_double(u.t_test.p_value) << ',' << u.t_test.stars << '\n';
        }
    }
    out << "\nuda_id,n_universities,n_significant,n_shifted,percent_shifted,max_shift,sum_shift,"
           "mean_shift,spearman_rho,spearman_p,spearman_stars,r_prime_sum,r_prime_max,"
           "r_prime_percent\n";
    for (const auto& uda : r.udas) {
        out << uda.uda_id << ',' << uda.n_universities << ',' << uda.n_significant << ','
            << uda.divergence.shifts.n_shifted << ','
            << format_double(uda.divergence.shifts.percent_shifted) << ','
            << uda.divergence.shifts.max_shift << ',' << uda.divergence.shifts.sum_shift << ','
            << format_double(uda.divergence.shifts.mean_shift) << ','
            << format_double(uda.divergence.spearman.rho) << ','
            << format_double(uda.divergence.spearman.p_value) << ','
            << uda.divergence.spearman.stars << ',' << uda.divergence.rprime.sum_abs_diff << ','
            << uda.divergence.rprime.max_sum << ','
            << format_double(uda.divergence.rprime.r_prime) << '\n';
    }
    return out.str();
}

ordered_json divergence_to_json(const UdaDivergence& d) {
    ordered_json j;
    j["shift_stats"] = {{"signed_shifts", d.shifts.signed_shifts},
                        {"abs_shifts", d.shifts.abs_shifts},
                        {"max_shift", d.shifts.max_shift},
                        {"sum_shift", d.shifts.sum_shift},
                        {"mean_shift", d.shifts.mean_shift},
                        {"n_shifted", d.shifts.n_shifted},
                        {"percent_shifted", d.shifts.percent_shifted}};
    j["spearman"] = {{"rho", d.spearman.rho},
                     {"p_value", d.spearman.p_value},
                     {"stars", d.spearman.stars}};
    j["r_prime"] = {{"sum_abs_diff", d.rprime.sum_abs_diff},
                    {"max_sum", d.rprime.max_sum},
                    {"percent", d.rprime.r_prime}};
    return j;
}

UdaDivergence divergence_from_json(const ordered_json& j) {
    UdaDivergence d;
    const auto& shifts = j.at("shift_stats");
    d.shifts.signed_shifts = shifts.at("signed_shifts").get<std::vector<int>>();
    d.shifts.abs_shifts = shifts.at("abs_shifts").get<std::vector<int>>();
    d.shifts.max_shift = shifts.at("max_shift").get<int>();
    d.shifts.sum_shift = shifts.at("sum_shift").get<long long>();
    d.shifts.mean_shift = shifts.at("mean_shift").get<double>();
    d.shifts.n_shifted = shifts.at("n_shifted").get<int>();
    d.shifts.percent_shifted = shifts.at("percent_shifted").get<double>();
    const auto& spearman = j.at("spearman");
    d.spearman.rho = spearman.at("rho").get<double>();
    d.spearman.p_value = spearman.at("p_value").get<double>();
    d.spearman.stars = spearman.at("stars").get<std::string>();
    const auto& rp = j.at("r_prime");
    d.rprime.sum_abs_diff = rp.at("sum_abs_diff").get<long long>();
    d.rprime.max_sum = rp.at("max_sum").get<long long>();
    d.rprime.r_prime = rp.at("percent").get<double>();
    return d;
}

}  // namespace

ReportFormat report_format_from_string(const std::string& name) {
    if (name == "text") return ReportFormat::text;
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw UnsupportedFormatError("unsupported report format '" + name +
                                 "' (expected text, csv or json)");
}

std::string report_to_json(const RunReport& r) {
    ordered_json j;
    j["schema_version"] = r.schema_version;
    j["config_hash"] = r.config_hash;
    j["window"] = {{"start_year", r.window.start_year}, {"end_year", r.window.end_year}};
    j["thresholds"] = {
        {"min_productive_share", r.thresholds.min_productive_share},
        {"min_per_gender", r.thresholds.min_per_gender},
        {"min_professors_per_university_uda", r.thresholds.min_professors_per_university_uda}};
    if (r.seed) j["seed"] = *r.seed;
    j["eligibility"] = {
        {"n_researchers_input", r.eligibility.n_researchers_input},
        {"n_researchers_retained", r.eligibility.n_researchers_retained},
        {"n_sds_retained", r.eligibility.n_sds_retained},
        {"n_sds_excluded_by_productivity", r.eligibility.n_sds_excluded_by_productivity},
        {"n_sds_excluded_by_gender_count", r.eligibility.n_sds_excluded_by_gender_count},
        {"n_university_uda_pairs_retained", r.eligibility.n_university_uda_pairs_retained},
        {"n_university_uda_pairs_excluded", r.eligibility.n_university_uda_pairs_excluded}};
    j["udas"] = ordered_json::array();
    for (const auto& uda : r.udas) {
        ordered_json ju;
        ju["uda_id"] = uda.uda_id;
        ju["n_universities"] = uda.n_universities;
        ju["n_significant"] = uda.n_significant;
        ju["universities"] = ordered_json::array();
        for (const auto& u : uda.universities) {
            ju["universities"].push_back({{"university_id", u.university_id},
                                          {"fss_pooled", u.fss_pooled},
                                          {"rank_pooled", u.rank_pooled},
                                          {"fss_gendered", u.fss_gendered},
                                          {"rank_gendered", u.rank_gendered},
                                          {"signed_shift", u.signed_shift},
                                          {"abs_shift", u.abs_shift},
                                          {"t_statistic", u.t_test.t_statistic},
                                          {"degrees_of_freedom", u.t_test.degrees_of_freedom},
                                          {"p_value", u.t_test.p_value},
                                          {"stars", u.t_test.stars}});
        }
        ju["divergence"] = divergence_to_json(uda.divergence);
        j["udas"].push_back(std::move(ju));
    }
    return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("report json: ") + e.what());
    }
    RunReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != 1) {
        throw UnsupportedFormatError("unsupported report schema_version " +
                                     std::to_string(r.schema_version));
    }
    r.config_hash = j.at("config_hash").get<std::string>();
    r.window.start_year = j.at("window").at("start_year").get<int>();
    r.window.end_year = j.at("window").at("end_year").get<int>();
    const auto& thresholds = j.at("thresholds");
    r.thresholds.min_productive_share = thresholds.at("min_productive_share").get<double>();
    r.thresholds.min_per_gender = thresholds.at("min_per_gender").get<int>();
    r.thresholds.min_professors_per_university_uda =
        thresholds.at("min_professors_per_university_uda").get<int>();
    if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
    const auto& eligibility = j.at("eligibility");
    r.eligibility.n_researchers_input = eligibility.at("n_researchers_input").get<int>();
    r.eligibility.n_researchers_retained = eligibility.at("n_researchers_retained").get<int>();
    r.eligibility.n_sds_retained = eligibility.at("n_sds_retained").get<int>();
    r.eligibility.n_sds_excluded_by_productivity =
        eligibility.at("n_sds_excluded_by_productivity").get<int>();
    r.eligibility.n_sds_excluded_by_gender_count =
        eligibility.at("n_sds_excluded_by_gender_count").get<int>();
    r.eligibility.n_university_uda_pairs_retained =
        eligibility.at("n_university_uda_pairs_retained").get<int>();
    r.eligibility.n_university_uda_pairs_excluded =
        eligibility.at("n_university_uda_pairs_excluded").get<int>();
    for (const auto& ju : j.at("udas")) {
        UdaReport uda;
        uda.uda_id = ju.at("uda_id").get<std::string>();
        uda.n_universities = ju.at("n_universities").get<int>();
        uda.n_significant = ju.at("n_significant").get<int>();
        for (const auto& jun : ju.at("universities")) {
            UniversityComparison u;
            u.university_id = jun.at("university_id").get<std::string>();
            u.fss_pooled = jun.at("fss_pooled").get<double>();
            u.rank_pooled = jun.at("rank_pooled").get<int>();
            u.fss_gendered = jun.at("fss_gendered").get<double>();
            u.rank_gendered = jun.at("rank_gendered").get<int>();
            u.signed_shift = jun.at("signed_shift").get<int>();
            u.abs_shift = jun.at("abs_shift").get<int>();
            u.t_test.university_id = u.university_id;
            u.t_test.t_statistic = jun.at("t_statistic").get<double>();
            u.t_test.degrees_of_freedom = jun.at("degrees_of_freedom").get<int>();
            u.t_test.p_value = jun.at("p_value").get<double>();
            u.t_test.stars = jun.at("stars").get<std::string>();
            uda.universities.push_back(std::move(u));
        }
        uda.divergence = divergence_from_json(ju.at("divergence"));
        r.udas.push_back(std::move(uda));
    }
    return r;
}

std::string render_report(const RunReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::text:
            return render_text(report);
        case ReportFormat::csv:
            return render_csv(report);
        case ReportFormat::json:
            return report_to_json(report);
    }
    throw UnsupportedFormatError("unsupported report format");
}

std::string render_ranks_compare(const RanksCompareInput& input, const UdaDivergence& d,
                                 ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json j;
        j["schema_version"] = 1;
        j["universities"] = ordered_json::array();
        for (std::size_t i = 0; i < input.university_ids.size(); ++i) {
            j["universities"].push_back({{"university_id", input.university_ids[i]},
                                         {"rank_pooled", input.rank_a[i]},
                                         {"rank_gendered", input.rank_b[i]},
                                         {"signed_shift", d.shifts.signed_shifts[i]},
                                         {"abs_shift", d.shifts.abs_shifts[i]}});
        }
        j["divergence"] = divergence_to_json(d);
        return j.dump(2) + "\n";
    }
    if (format == ReportFormat::csv) {
        std::ostringstream out;
        out << "university_id,rank_pooled,rank_gendered,sign,abs_shift\n";
        for (std::size_t i = 0; i < input.university_ids.size(); ++i) {
            out << input.university_ids[i] << ',' << input.rank_a[i] << ',' << input.rank_b[i]
                << ',' << sign_char(d.shifts.signed_shifts[i]) << ',' << d.shifts.abs_shifts[i]
                << '\n';
        }
        out << "\nn,n_shifted,percent_shifted,max_shift,sum_shift,mean_shift,spearman_rho,"
               "spearman_p,spearman_stars,r_prime_sum,r_prime_max,r_prime_percent\n";
        out << input.university_ids.size() << ',' << d.shifts.n_shifted << ','
            << format_double(d.shifts.percent_shifted) << ',' << d.shifts.max_shift << ','
            << d.shifts.sum_shift << ',' << format_double(d.shifts.mean_shift) << ','
            << format_double(d.spearman.rho) << ',' << format_double(d.spearman.p_value) << ','
            << d.spearman.stars << ',' << d.rprime.sum_abs_diff << ',' << d.rprime.max_sum << ','
            << format_double(d.rprime.r_prime) << '\n';
        return out.str();
    }

    std::ostringstream out;
    std::size_t univ_width = 10;
    for (const auto& id : input.university_ids) univ_width = std::max(univ_width, id.size());
    out << "Rank comparison (" << input.university_ids.size() << " universities)\n";
    out << pad_right("University", univ_width) << "  " << pad_left("Rank A", 6) << "  "
        << pad_left("Rank B", 6) << "  Sign  " << pad_left("Shift", 5) << "\n";
    for (std::size_t i = 0; i < input.university_ids.size(); ++i) {
        out << pad_right(input.university_ids[i], univ_width) << "  "
            << pad_left(std::to_string(input.rank_a[i]), 6) << "  "
            << pad_left(std::to_string(input.rank_b[i]), 6) << "  "
            << sign_char(d.shifts.signed_shifts[i]) << "     "
            << pad_left(std::to_string(d.shifts.abs_shifts[i]), 5) << "\n";
    }
    out << "Observations: " << input.university_ids.size()
        << "  Sum of shifts: " << d.shifts.sum_shift << "  Max shift: " << d.shifts.max_shift
        << "  Mean shift: " << format_fixed(d.shifts.mean_shift, 3) << "\n";
    out << "Shifted: " << d.shifts.n_shifted << " (" << format_fixed(d.shifts.percent_shifted, 1)
        << "%)   Spearman rho: " << format_fixed(d.spearman.rho, 3) << d.spearman.stars
        << " (p=" << format_fixed(d.spearman.p_value, 3)
        << ")   R': " << format_fixed(d.rprime.r_prime, 2) << "%\n";
    return out.str();
}

}  // namespace fssrank
