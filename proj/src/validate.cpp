#include "fssrank/validate.hpp"

#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace fssrank {

namespace {

void add(std::vector<Violation>& out, std::string kind, std::string id, std::string field,
         std::string rule, std::string message) {
    out.push_back({std::move(kind), std::move(id), std::move(field), std::move(rule),
                   std::move(message)});
}

}  // namespace

std::vector<Violation> validate_dataset(const Dataset& d) {
    std::vector<Violation> out;

    if (d.window.start_year > d.window.end_year) {
        add(out, "window", "", "start_year", "window-ordering",
            "window start " + std::to_string(d.window.start_year) + " is after end " +
                std::to_string(d.window.end_year));
    }
    const double window_len = static_cast<double>(d.window.length_years());

    std::unordered_map<std::string, const Publication*> pub_by_id;
    std::unordered_set<std::string> researcher_ids;

    for (const auto& r : d.researchers) {
        if (!researcher_ids.insert(r.researcher_id).second) {
            add(out, "researcher", r.researcher_id, "researcher_id", "unique-id",
                "duplicate researcher id");
        }
        if (!(r.years_active > 0.0)) {
            add(out, "researcher", r.researcher_id, "years_active", "t-positive",
                "years_active must be > 0");
        } else if (r.years_active > window_len) {
            add(out, "researcher", r.researcher_id, "years_active", "t-within-window",
                "years_active exceeds window length of " + std::to_string(d.window.length_years()) +
                    " years");
        }
        if (!(r.wage > 0.0)) {
            add(out, "researcher", r.researcher_id, "wage", "w-positive", "wage must be > 0");
        }
        auto it = d.taxonomy.sds_to_uda.find(r.sds_id);
        if (it == d.taxonomy.sds_to_uda.end()) {
            add(out, "researcher", r.researcher_id, "sds_id", "taxonomy-total",
                "sds '" + r.sds_id + "' is missing from the taxonomy");
        } else if (it->second != r.uda_id) {
            add(out, "researcher", r.researcher_id, "uda_id", "sds-uda-consistency",
                "sds '" + r.sds_id + "' maps to uda '" + it->second + "', record says '" +
                    r.uda_id + "'");
        }
    }

    for (const auto& p : d.publications) {
        if (pub_by_id.count(p.pub_id)) {
            add(out, "publication", p.pub_id, "pub_id", "unique-id", "duplicate publication id");
        } else {
            pub_by_id.emplace(p.pub_id, &p);
        }
        if (p.n_authors < 1) {
            add(out, "publication", p.pub_id, "n_authors", "authors-positive",
                "n_authors must be >= 1");
        }
        if (p.citations < 0) {
            add(out, "publication", p.pub_id, "citations", "citations-nonnegative",
                "citations must be >= 0");
        }
        if (p.year > d.window.end_year) {
            add(out, "publication", p.pub_id, "year", "year-before-window-end",
                "publication year " + std::to_string(p.year) + " is after window end " +
                    std::to_string(d.window.end_year));
        }
        if (p.subject_categories.empty()) {
            add(out, "publication", p.pub_id, "subject_categories", "categories-nonempty",
                "subject category list is empty");
        }
        std::set<std::string> unique_cats(p.subject_categories.begin(),
                                          p.subject_categories.end());
        if (unique_cats.size() != p.subject_categories.size()) {
            add(out, "publication", p.pub_id, "subject_categories", "categories-distinct",
                "subject category listed more than once");
        }
    }

    std::set<std::pair<std::string, std::string>> seen_authorships;
    for (const auto& a : d.authorships) {
        const std::string id = a.pub_id + "/" + a.researcher_id;
        if (!seen_authorships.insert({a.pub_id, a.researcher_id}).second) {
            add(out, "authorship", id, "(pub_id, researcher_id)", "unique-authorship",
                "duplicate authorship");
        }
        if (!researcher_ids.count(a.researcher_id)) {
            add(out, "authorship", id, "researcher_id", "dangling-reference",
                "references missing researcher '" + a.researcher_id + "'");
        }
        auto it = pub_by_id.find(a.pub_id);
        if (it == pub_by_id.end()) {
            add(out, "authorship", id, "pub_id", "dangling-reference",
                "references missing publication '" + a.pub_id + "'");
        } else if (a.byline_position < 1 || a.byline_position > it->second->n_authors) {
            add(out, "authorship", id, "byline_position", "position-in-byline",
                "byline position " + std::to_string(a.byline_position) + " outside [1, " +
                    std::to_string(it->second->n_authors) + "]");
        }
    }

    return out;
}

}  // namespace fssrank
