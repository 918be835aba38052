#include "fssrank/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "fssrank/errors.hpp"

namespace fssrank {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x00000100000001B3ULL;
    }
    return h;
}

SplitMix64 derive_stream(std::uint64_t seed, const std::string& label) {
    SplitMix64 mixer(seed ^ fnv1a64(label));
    return SplitMix64(mixer.next());
}

namespace {

long long poisson_small(SplitMix64& rng, double lambda) {
    const double limit = std::exp(-lambda);
    long long k = 0;
    double p = 1.0;
    do {
        ++k;
        p *= rng.next_double();
    } while (p > limit);
    return k - 1;
}

}  // namespace

long long draw_poisson(SplitMix64& rng, double lambda) {
    if (!(lambda > 0.0)) return 0;
    long long total = 0;
    while (lambda > 30.0) {
        total += poisson_small(rng, 30.0);
        lambda -= 30.0;
    }
    return total + poisson_small(rng, lambda);
}

long long draw_negative_binomial(SplitMix64& rng, int size, double mean) {
    if (!(mean > 0.0)) return 0;
    const int r = std::max(1, size);
    // mean = r(1-p)/p  =>  p = r/(r+mean)
    const double p = static_cast<double>(r) / (static_cast<double>(r) + mean);
    const double log_q = std::log1p(-p);
    long long total = 0;
    for (int i = 0; i < r; ++i) {
        double u = rng.next_double();
        if (u <= 0.0) u = 0x1.0p-53;
        total += static_cast<long long>(std::floor(std::log(u) / log_q));
    }
    return total;
}

void validate_config(const SynthConfig& cfg) {
    if (cfg.n_universities < 1) throw InvalidConfigError("n_universities must be >= 1");
    if (cfg.udas.empty()) throw InvalidConfigError("config lists no UDAs");
    if (cfg.window.start_year > cfg.window.end_year) {
        throw InvalidConfigError("window start is after end");
    }
    if (!(cfg.pubs_per_year > 0.0)) throw InvalidConfigError("pubs_per_year must be > 0");
    if (!(cfg.gap > 0.0)) throw InvalidConfigError("gap must be > 0");
    if (!(cfg.citation_mean > 0.0)) throw InvalidConfigError("citation_mean must be > 0");
    if (!(cfg.coauthors_mean >= 0.0)) throw InvalidConfigError("coauthors_mean must be >= 0");
    std::set<std::string> uda_ids;
    std::set<std::string> sds_ids;
    for (const auto& uda : cfg.udas) {
        if (uda.uda_id.empty()) throw InvalidConfigError("empty uda_id");
        if (!uda_ids.insert(uda.uda_id).second) {
            throw InvalidConfigError("duplicate uda_id '" + uda.uda_id + "'");
        }
        if (uda.sds.empty()) {
            throw InvalidConfigError("uda '" + uda.uda_id + "' lists no SDSs");
        }
        for (const auto& sds : uda.sds) {
            if (sds.sds_id.empty()) throw InvalidConfigError("empty sds_id");
            if (!sds_ids.insert(sds.sds_id).second) {
                throw InvalidConfigError("duplicate sds_id '" + sds.sds_id + "'");
            }
            if (sds.n_female_per_university < 0 || sds.n_male_per_university < 0) {
                throw InvalidConfigError("negative researcher count in sds '" + sds.sds_id + "'");
            }
            if (!default_weighting_schemes().has(sds.weighting_scheme)) {
                throw InvalidConfigError("unknown weighting scheme '" + sds.weighting_scheme +
                                         "' in sds '" + sds.sds_id + "'");
            }
        }
    }
    for (const auto& [rank, wage] : cfg.wage_by_rank) {
        if (rank.empty() || !(wage > 0.0)) {
            throw InvalidConfigError("wage table entries must have a rank and a positive wage");
        }
    }
    if (cfg.wage_by_rank.empty()) throw InvalidConfigError("wage table is empty");
}

SynthConfig make_uniform_synth_config(int n_udas, int sds_per_uda, int n_universities,
                                      int n_female, int n_male) {
    SynthConfig cfg;
    cfg.n_universities = n_universities;
    int sds_counter = 0;
    for (int u = 1; u <= n_udas; ++u) {
        UdaSpec uda;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "UDA%02d", u);
        uda.uda_id = buf;
        for (int s = 0; s < sds_per_uda; ++s) {
            SdsSpec sds;
            std::snprintf(buf, sizeof(buf), "SDS%03d", ++sds_counter);
            sds.sds_id = buf;
            sds.n_female_per_university = n_female;
            sds.n_male_per_university = n_male;
            uda.sds.push_back(sds);
        }
        cfg.udas.push_back(std::move(uda));
    }
    return cfg;
}

namespace {

std::string university_id_for(int index, int n_universities) {
    const int width = n_universities >= 100 ? 3 : 2;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "U%0*d", width, index + 1);
    return buf;
}

const char* kRanks[] = {"assistant", "associate", "full"};

}  // namespace

WageTable wage_table_of(const SynthConfig& cfg) {
    WageTable t;
    t.wage_by_rank = cfg.wage_by_rank;
    return t;
}

Dataset generate_dataset(const SynthConfig& cfg) {
    validate_config(cfg);

    Dataset d;
    d.window = cfg.window;
    const int window_len = cfg.window.length_years();
    const int mid_age = (window_len + 1) / 2;

    // Assign rank labels present in the wage table; fall back to the three
    // standard ranks when all are configured.
    std::vector<std::string> ranks;
    for (const char* r : kRanks) {
        if (cfg.wage_by_rank.count(r)) ranks.push_back(r);
    }
    if (ranks.empty()) {
        for (const auto& [rank, wage] : cfg.wage_by_rank) ranks.push_back(rank);
    }

    long long researcher_counter = 0;
    for (const auto& uda : cfg.udas) {
        for (const auto& sds : uda.sds) {
            d.taxonomy.sds_to_uda[sds.sds_id] = uda.uda_id;
            d.taxonomy.sds_to_weighting_scheme[sds.sds_id] = sds.weighting_scheme;
            for (int u = 0; u < cfg.n_universities; ++u) {
                const std::string univ = university_id_for(u, cfg.n_universities);
                int n_female = sds.n_female_per_university;
                int n_male = sds.n_male_per_university;
                if (sds.sample_counts) {
                    SplitMix64 count_rng =
                        derive_stream(cfg.seed, "counts/" + sds.sds_id + "/" + univ);
                    n_female = static_cast<int>(
                        draw_poisson(count_rng, static_cast<double>(n_female)));
                    n_male = static_cast<int>(
                        draw_poisson(count_rng, static_cast<double>(n_male)));
                }
                for (int i = 0; i < n_female + n_male; ++i) {
                    Researcher r;
                    char id_buf[32];
                    std::snprintf(id_buf, sizeof(id_buf), "R%06lld", ++researcher_counter);
                    r.researcher_id = id_buf;
                    r.gender = i < n_female ? Gender::female : Gender::male;
                    r.university_id = univ;
                    r.sds_id = sds.sds_id;
                    r.uda_id = uda.uda_id;

                    SplitMix64 rng = derive_stream(cfg.seed, "researcher/" + r.researcher_id);
                    r.academic_rank = ranks[rng.next_below(ranks.size())];
                    r.wage = cfg.wage_by_rank.at(r.academic_rank);
                    // Quarter-year granularity in (0, window_len].
                    r.years_active =
                        static_cast<double>(1 + rng.next_below(
                                                    static_cast<std::uint64_t>(4 * window_len))) *
                        0.25;

                    const double output_scale = r.gender == Gender::female ? cfg.gap : 1.0;
                    const long long n_pubs = draw_poisson(
                        rng, cfg.pubs_per_year * r.years_active * output_scale);
                    for (long long k = 0; k < n_pubs; ++k) {
                        Publication p;
                        char pub_buf[64];
                        std::snprintf(pub_buf, sizeof(pub_buf), "P_%s_%03lld",
                                      r.researcher_id.c_str(), k);
                        p.pub_id = pub_buf;
                        p.year = cfg.window.start_year +
                                 static_cast<int>(rng.next_below(
                                     static_cast<std::uint64_t>(window_len)));
                        // Two categories per SDS; half the publications carry both.
                        const std::string cat_base = "CAT_" + sds.sds_id;
                        if (rng.next_double() < 0.5) {
                            p.subject_categories = {cat_base + "_1"};
                        } else {
                            p.subject_categories = {cat_base + "_1", cat_base + "_2"};
                        }
                        p.n_authors =
                            1 + static_cast<int>(draw_poisson(rng, cfg.coauthors_mean));
                        const int position =
                            1 + static_cast<int>(rng.next_below(
                                    static_cast<std::uint64_t>(p.n_authors)));
                        // Older publications accumulate more citations.
                        const int age = cfg.window.end_year - p.year + 1;
                        const double mean =
                            cfg.citation_mean * static_cast<double>(age) /
                            static_cast<double>(mid_age);
                        p.citations = draw_negative_binomial(
                            rng, static_cast<int>(std::lround(cfg.citation_dispersion)), mean);

                        d.authorships.push_back({p.pub_id, r.researcher_id, position});
                        d.publications.push_back(std::move(p));
                    }
                    d.researchers.push_back(std::move(r));
                }
            }
        }
    }

    d.sort_records();
    return d;
}

}  // namespace fssrank
