#include "fssrank/fss.hpp"

#include <algorithm>
#include <exception>
#include <unordered_map>

#include "fssrank/errors.hpp"

namespace fssrank {

double uniform_weight(int /*position*/, int n_authors) {
    return 1.0 / static_cast<double>(n_authors);
}

double harmonic_weight(int position, int n_authors) {
    double h = 0.0;
    for (int k = 1; k <= n_authors; ++k) h += 1.0 / static_cast<double>(k);
    return (1.0 / static_cast<double>(position)) / h;
}

WeightingSchemeRegistry::WeightingSchemeRegistry() {
    schemes_["uniform"] = uniform_weight;
    schemes_["harmonic"] = harmonic_weight;
}

void WeightingSchemeRegistry::register_scheme(const std::string& label, WeightingFn fn) {
    schemes_[label] = std::move(fn);
}

bool WeightingSchemeRegistry::has(const std::string& label) const {
    return schemes_.count(label) != 0;
}

const WeightingFn& WeightingSchemeRegistry::get(const std::string& label) const {
    auto it = schemes_.find(label);
    if (it == schemes_.end()) {
        throw InvalidConfigError("unknown weighting scheme '" + label + "'");
    }
    return it->second;
}

const WeightingSchemeRegistry& default_weighting_schemes() {
    static const WeightingSchemeRegistry registry;
    return registry;
}

double fractional_contribution(int position, int n_authors, const WeightingFn& scheme) {
    if (position < 1 || position > n_authors) {
        throw PositionOutOfRangeError("byline position " + std::to_string(position) +
                                      " outside [1, " + std::to_string(n_authors) + "]");
    }
    return scheme(position, n_authors);
}

CitationBaselineTable compute_citation_baselines(const std::vector<Publication>& pubs) {
    struct CellAccumulator {
        double sum = 0.0;
        long long count = 0;
    };
    std::map<std::pair<int, std::string>, CellAccumulator> acc;

    // Only cited publications enter the mean; a publication listing k
    // categories contributes to all k cells.
    for (const auto& p : pubs) {
        if (p.citations <= 0) continue;
        for (const auto& cat : p.subject_categories) {
            auto& cell = acc[{p.year, cat}];
            cell.sum += static_cast<double>(p.citations);
            cell.count += 1;
        }
    }

    CitationBaselineTable table;
    for (const auto& [key, cell] : acc) {
        table.cells.emplace(key, cell.sum / static_cast<double>(cell.count));
    }
    return table;
}

AttributionMap build_attribution(const Dataset& d) {
    std::unordered_map<std::string, const Publication*> pub_by_id;
    pub_by_id.reserve(d.publications.size());
    for (const auto& p : d.publications) pub_by_id.emplace(p.pub_id, &p);

    AttributionMap out;
    for (const auto& a : d.authorships) {
        auto it = pub_by_id.find(a.pub_id);
        if (it == pub_by_id.end()) {
            throw DanglingReferenceError("authorship references missing publication '" +
                                         a.pub_id + "'");
        }
        if (!d.window.contains(it->second->year)) {
            throw WindowViolationError(
                "publication '" + a.pub_id + "' (year " + std::to_string(it->second->year) +
                ") attributed to researcher '" + a.researcher_id +
                "' lies outside the evaluation window");
        }
        out[a.researcher_id].push_back({it->second, a.byline_position});
    }
    // Authorships arrive sorted by (pub_id, researcher_id) in a canonical
    // dataset, but attribution is also used on raw datasets in tests.
    for (auto& [id, pubs] : out) {
        std::sort(pubs.begin(), pubs.end(),
                  [](const AttributedPublication& a, const AttributedPublication& b) {
                      return a.publication->pub_id < b.publication->pub_id;
                  });
    }
    return out;
}

IndividualProductivity individual_fss(const Researcher& r,
                                      const std::vector<AttributedPublication>& attributed,
                                      const CitationBaselineTable& baselines,
                                      const FieldTaxonomy& taxonomy, const Window& window,
                                      const WeightingSchemeRegistry& registry) {
    if (!(r.wage > 0.0) || !(r.years_active > 0.0)) {
        throw InvalidResearcherError("researcher '" + r.researcher_id +
                                     "' has non-positive wage or years_active");
    }

    std::string scheme_label = "uniform";
    if (auto it = taxonomy.sds_to_weighting_scheme.find(r.sds_id);
        it != taxonomy.sds_to_weighting_scheme.end()) {
        scheme_label = it->second;
    }
    const WeightingFn& scheme = registry.get(scheme_label);

    IndividualProductivity out;
    out.researcher_id = r.researcher_id;
    out.n_publications = static_cast<int>(attributed.size());
    out.is_productive = out.n_publications >= 1;

    double sum = 0.0;
    for (const auto& ap : attributed) {
        const Publication& p = *ap.publication;
        if (!window.contains(p.year)) {
            throw WindowViolationError("publication '" + p.pub_id +
                                       "' lies outside the evaluation window");
        }
        if (p.citations <= 0) continue;  // uncited publications contribute 0

        // Multi-category resolution: mean of the baselines of the categories
        // present in the table. No category present -> contributes 0 and is
        // recorded for diagnostics.
        double cbar_sum = 0.0;
        int cbar_count = 0;
        for (const auto& cat : p.subject_categories) {
            if (const double* cbar = baselines.find(p.year, cat)) {
                cbar_sum += *cbar;
                ++cbar_count;
            }
        }
        if (cbar_count == 0) {
            out.pubs_without_baseline.push_back(p.pub_id);
            continue;
        }
        const double cbar = cbar_sum / static_cast<double>(cbar_count);
        const double f = fractional_contribution(ap.byline_position, p.n_authors, scheme);
        sum += (static_cast<double>(p.citations) / cbar) * f;
    }

    out.fss = (1.0 / r.wage) * (1.0 / r.years_active) * sum;
    return out;
}

std::map<std::string, IndividualProductivity> compute_all_productivity(
    const Dataset& d, const CitationBaselineTable& baselines,
    const WeightingSchemeRegistry& registry) {
    const AttributionMap attribution = build_attribution(d);
    static const std::vector<AttributedPublication> no_pubs;

    std::vector<IndividualProductivity> results(d.researchers.size());
    const long long n = static_cast<long long>(d.researchers.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) {
        try {
            const Researcher& r = d.researchers[static_cast<std::size_t>(i)];
            auto it = attribution.find(r.researcher_id);
            const auto& attributed = it == attribution.end() ? no_pubs : it->second;
            results[static_cast<std::size_t>(i)] =
                individual_fss(r, attributed, baselines, d.taxonomy, d.window, registry);
        } catch (...) {
            // Exceptions must not escape the parallel region.
#pragma omp critical(fssrank_fss_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::map<std::string, IndividualProductivity> out;
    for (auto& p : results) {
        std::string id = p.researcher_id;
        out.emplace(std::move(id), std::move(p));
    }
    return out;
}

}  // namespace fssrank
