#include "fssrank/ingest.hpp"

#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "fssrank/csv.hpp"
#include "fssrank/errors.hpp"

namespace fssrank {

namespace {

std::vector<std::string> split_categories(const std::string& cell) {
    std::vector<std::string> out;
    std::string item;
    for (char c : cell) {
        if (c == ';') {
            out.push_back(item);
            item.clear();
        } else {
            item += c;
        }
    }
    out.push_back(item);
    return out;
}

std::string join_categories(const std::vector<std::string>& categories) {
    std::string out;
    for (std::size_t i = 0; i < categories.size(); ++i) {
        if (i) out += ';';
        out += categories[i];
    }
    return out;
}

FieldTaxonomy load_taxonomy(const std::string& path) {
    FieldTaxonomy taxonomy;
    CsvReader reader(path, {"sds_id", "uda_id", "weighting_scheme"});
    while (reader.next_row()) {
        const std::string& sds = reader.str(0);
        if (sds.empty()) reader.fail("empty sds_id");
        if (taxonomy.sds_to_uda.count(sds)) {
            throw DuplicateIdError("taxonomy lists sds '" + sds + "' more than once");
        }
        const std::string& scheme = reader.str(2);
        if (!default_weighting_schemes().has(scheme)) {
            reader.fail("unknown weighting scheme '" + scheme + "'");
        }
        taxonomy.sds_to_uda[sds] = reader.str(1);
        taxonomy.sds_to_weighting_scheme[sds] = scheme;
    }
    return taxonomy;
}

}  // namespace

WageTable load_wage_table(const std::string& path) {
    WageTable table;
    CsvReader reader(path, {"academic_rank", "yearly_wage"});
    while (reader.next_row()) {
        const std::string& rank = reader.str(0);
        if (table.wage_by_rank.count(rank)) {
            throw DuplicateIdError("wage table lists rank '" + rank + "' more than once");
        }
        const double wage = reader.decimal(1);
        if (!(wage > 0.0)) reader.fail("yearly_wage must be > 0");
        table.wage_by_rank[rank] = wage;
    }
    return table;
}

CitationBaselineTable load_baseline_table(const std::string& path) {
    CitationBaselineTable table;
    table.provenance = BaselineProvenance::external;
    CsvReader reader(path, {"year", "subject_category", "c_bar"});
    while (reader.next_row()) {
        const int year = static_cast<int>(reader.integer(0));
        const std::string& category = reader.str(1);
        const double c_bar = reader.decimal(2);
        if (!(c_bar > 0.0)) reader.fail("c_bar must be > 0");
        if (!table.cells.emplace(std::make_pair(year, category), c_bar).second) {
            throw DuplicateIdError("baseline cell (" + std::to_string(year) + ", " + category +
                                   ") listed more than once");
        }
    }
    return table;
}

Dataset load_dataset(const IngestConfig& cfg) {
    if (cfg.window_start > cfg.window_end) {
        throw InvalidConfigError("window start " + std::to_string(cfg.window_start) +
                                 " is after end " + std::to_string(cfg.window_end));
    }

    Dataset d;
    d.window = {cfg.window_start, cfg.window_end};
    d.taxonomy = load_taxonomy(cfg.taxonomy_path);

    const bool has_wage_table = !cfg.wages_path.empty();
    WageTable wages;
    if (has_wage_table) wages = load_wage_table(cfg.wages_path);

    {
        CsvReader reader(cfg.publications_path,
                         {"pub_id", "year", "subject_categories", "citations", "n_authors"});
        std::unordered_set<std::string> seen;
        while (reader.next_row()) {
            Publication p;
            p.pub_id = reader.str(0);
            if (p.pub_id.empty()) reader.fail("empty pub_id");
            if (!seen.insert(p.pub_id).second) {
                throw DuplicateIdError("duplicate publication id '" + p.pub_id + "' at " +
                                       cfg.publications_path + ":" +
                                       std::to_string(reader.line_number()));
            }
            p.year = static_cast<int>(reader.integer(1));
            if (p.year > cfg.window_end) {
                reader.fail("publication year " + std::to_string(p.year) +
                            " is after window end " + std::to_string(cfg.window_end));
            }
            p.subject_categories = split_categories(reader.str(2));
            for (const auto& cat : p.subject_categories) {
                if (cat.empty()) reader.fail("empty subject category");
            }
            std::set<std::string> unique(p.subject_categories.begin(),
                                         p.subject_categories.end());
            if (unique.size() != p.subject_categories.size()) {
                reader.fail("subject category listed more than once");
            }
            p.citations = reader.integer(3);
            if (p.citations < 0) reader.fail("citations must be >= 0");
            p.n_authors = static_cast<int>(reader.integer(4));
            if (p.n_authors < 1) reader.fail("n_authors must be >= 1");
            d.publications.push_back(std::move(p));
        }
    }

    {
        CsvReader reader(cfg.researchers_path,
                         {"researcher_id", "gender", "university_id", "sds_id", "uda_id",
                          "academic_rank", "years_active"});
        std::unordered_set<std::string> seen;
        const double window_len = static_cast<double>(d.window.length_years());
        while (reader.next_row()) {
            Researcher r;
            r.researcher_id = reader.str(0);
            if (r.researcher_id.empty()) reader.fail("empty researcher_id");
            if (!seen.insert(r.researcher_id).second) {
                throw DuplicateIdError("duplicate researcher id '" + r.researcher_id + "' at " +
                                       cfg.researchers_path + ":" +
                                       std::to_string(reader.line_number()));
            }
            try {
                r.gender = gender_from_code(reader.str(1));
            } catch (const ParseError& e) {
                reader.fail(e.what());
            }
            r.university_id = reader.str(2);
            r.sds_id = reader.str(3);
            r.uda_id = reader.str(4);
            auto uda_it = d.taxonomy.sds_to_uda.find(r.sds_id);
            if (uda_it == d.taxonomy.sds_to_uda.end()) {
                throw DanglingReferenceError("researcher '" + r.researcher_id +
                                             "' references sds '" + r.sds_id +
                                             "' missing from the taxonomy");
            }
            if (uda_it->second != r.uda_id) {
                reader.fail("sds '" + r.sds_id + "' maps to uda '" + uda_it->second +
                            "', row says '" + r.uda_id + "'");
            }
            r.academic_rank = reader.str(5);
            if (r.academic_rank.empty()) reader.fail("empty academic_rank");
            r.years_active = reader.decimal(6);
            if (!(r.years_active > 0.0)) reader.fail("years_active must be > 0");
            if (r.years_active > window_len) {
                reader.fail("years_active " + reader.str(6) + " exceeds window length of " +
                            std::to_string(d.window.length_years()) + " years");
            }
            if (has_wage_table) {
                auto wage_it = wages.wage_by_rank.find(r.academic_rank);
                if (wage_it == wages.wage_by_rank.end()) {
                    throw MissingWageForRankError("rank '" + r.academic_rank +
                                                  "' of researcher '" + r.researcher_id +
                                                  "' is absent from the wage table");
                }
                r.wage = wage_it->second;
            } else {
                r.wage = 1.0;  // pure bibliometric rate when no salary data
            }
            d.researchers.push_back(std::move(r));
        }
    }

    {
        std::unordered_map<std::string, int> pub_authors;
        pub_authors.reserve(d.publications.size());
        for (const auto& p : d.publications) pub_authors.emplace(p.pub_id, p.n_authors);
        std::unordered_set<std::string> researcher_ids;
        researcher_ids.reserve(d.researchers.size());
        for (const auto& r : d.researchers) researcher_ids.insert(r.researcher_id);

        CsvReader reader(cfg.authorships_path, {"pub_id", "researcher_id", "byline_position"});
        std::set<std::pair<std::string, std::string>> seen;
        while (reader.next_row()) {
            Authorship a;
            a.pub_id = reader.str(0);
            a.researcher_id = reader.str(1);
            if (!seen.insert({a.pub_id, a.researcher_id}).second) {
                throw DuplicateIdError("duplicate authorship (" + a.pub_id + ", " +
                                       a.researcher_id + ") at " + cfg.authorships_path + ":" +
                                       std::to_string(reader.line_number()));
            }
            auto pub_it = pub_authors.find(a.pub_id);
            if (pub_it == pub_authors.end()) {
                throw DanglingReferenceError("authorship references missing publication '" +
                                             a.pub_id + "' at " + cfg.authorships_path + ":" +
                                             std::to_string(reader.line_number()));
            }
            if (!researcher_ids.count(a.researcher_id)) {
                throw DanglingReferenceError("authorship references missing researcher '" +
                                             a.researcher_id + "' at " + cfg.authorships_path +
                                             ":" + std::to_string(reader.line_number()));
            }
            a.byline_position = static_cast<int>(reader.integer(2));
            if (a.byline_position < 1 || a.byline_position > pub_it->second) {
                reader.fail("byline position " + std::to_string(a.byline_position) +
                            " outside [1, " + std::to_string(pub_it->second) + "]");
            }
            d.authorships.push_back(std::move(a));
        }
    }

    d.sort_records();
    return d;
}

void write_dataset_csv(const Dataset& d, const WageTable& wages, const DatasetPaths& paths) {
    {
        CsvWriter w(paths.researchers_path, {"researcher_id", "gender", "university_id", "sds_id",
                                             "uda_id", "academic_rank", "years_active"});
        for (const auto& r : d.researchers) {
            w.write_row({r.researcher_id, to_string(r.gender), r.university_id, r.sds_id,
                         r.uda_id, r.academic_rank, format_double(r.years_active)});
        }
        w.close();
    }
    {
        CsvWriter w(paths.publications_path,
                    {"pub_id", "year", "subject_categories", "citations", "n_authors"});
        for (const auto& p : d.publications) {
            w.write_row({p.pub_id, std::to_string(p.year), join_categories(p.subject_categories),
                         std::to_string(p.citations), std::to_string(p.n_authors)});
        }
        w.close();
    }
    {
        CsvWriter w(paths.authorships_path, {"pub_id", "researcher_id", "byline_position"});
        for (const auto& a : d.authorships) {
            w.write_row({a.pub_id, a.researcher_id, std::to_string(a.byline_position)});
        }
        w.close();
    }
    {
        CsvWriter w(paths.taxonomy_path, {"sds_id", "uda_id", "weighting_scheme"});
        for (const auto& [sds, uda] : d.taxonomy.sds_to_uda) {
            auto scheme_it = d.taxonomy.sds_to_weighting_scheme.find(sds);
            const std::string scheme =
                scheme_it == d.taxonomy.sds_to_weighting_scheme.end() ? "uniform"
                                                                      : scheme_it->second;
            w.write_row({sds, uda, scheme});
        }
        w.close();
    }
    if (!paths.wages_path.empty()) {
        CsvWriter w(paths.wages_path, {"academic_rank", "yearly_wage"});
        for (const auto& [rank, wage] : wages.wage_by_rank) {
            w.write_row({rank, format_double(wage)});
        }
        w.close();
    }
}

}  // namespace fssrank
