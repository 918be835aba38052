#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fssrank/types.hpp"

// Individual productivity: citation baselines, co-author fractionalization,
// and the yearly productivity rate
//
//   fss = (1/w) * (1/t) * sum_i (c_i / cbar_i) * f_i
//
// where cbar_i is the mean citation count of cited publications sharing
// publication i's year and subject category, and f_i the researcher's
// fractional contribution to publication i.

namespace fssrank {

// (byline_position, n_authors) -> fraction in (0, 1]. Fractions over a full
// byline sum to 1 for any registered scheme.
using WeightingFn = std::function<double(int position, int n_authors)>;

class WeightingSchemeRegistry {
  public:
    // "uniform" (1/n, position-independent) and "harmonic"
    // ((1/position) / H_n) are built in.
    WeightingSchemeRegistry();

    void register_scheme(const std::string& label, WeightingFn fn);
    bool has(const std::string& label) const;
    const WeightingFn& get(const std::string& label) const;

  private:
    std::map<std::string, WeightingFn> schemes_;
};

const WeightingSchemeRegistry& default_weighting_schemes();

// Throws PositionOutOfRangeError unless 1 <= position <= n_authors.
double fractional_contribution(int position, int n_authors, const WeightingFn& scheme);
double uniform_weight(int position, int n_authors);
double harmonic_weight(int position, int n_authors);

enum class BaselineProvenance : unsigned char { computed, external };

// (year, subject_category) -> mean citations of cited publications.
// Cells with no cited publications are absent, never zero.
struct CitationBaselineTable {
    std::map<std::pair<int, std::string>, double> cells;
    BaselineProvenance provenance = BaselineProvenance::computed;

    const double* find(int year, const std::string& category) const {
        auto it = cells.find({year, category});
        return it == cells.end() ? nullptr : &it->second;
    }
};

CitationBaselineTable compute_citation_baselines(const std::vector<Publication>& pubs);

struct AttributedPublication {
    const Publication* publication = nullptr;
    int byline_position = 1;
};

// Publications of one researcher, sorted by pub_id.
using AttributionMap = std::map<std::string, std::vector<AttributedPublication>>;

// Resolves authorships against publications. A publication attributed to a
// researcher but dated before the window start is an error, not a silent
// skip (validation already bounds years above by the window end).
AttributionMap build_attribution(const Dataset& d);

IndividualProductivity individual_fss(const Researcher& r,
                                      const std::vector<AttributedPublication>& attributed,
                                      const CitationBaselineTable& baselines,
                                      const FieldTaxonomy& taxonomy, const Window& window,
                                      const WeightingSchemeRegistry& registry =
                                          default_weighting_schemes());

// Parallel kernel: independent per-researcher evaluations, one output slot
// each, so results are identical for any thread count.
std::map<std::string, IndividualProductivity> compute_all_productivity(
    const Dataset& d, const CitationBaselineTable& baselines,
    const WeightingSchemeRegistry& registry = default_weighting_schemes());

}  // namespace fssrank
