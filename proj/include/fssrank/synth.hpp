#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fssrank/ingest.hpp"
#include "fssrank/types.hpp"

// Seeded synthetic population generator. All randomness comes from
// SplitMix64 streams derived from (seed, label), so identical seed and
// config produce a byte-identical dataset on any platform, and each
// researcher's stream is independent of generation order.

namespace fssrank {

// SplitMix64 (Steele, Lea, Flood 2014; public-domain reference constants).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), n >= 1 (Lemire multiply-shift).
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

  private:
    std::uint64_t state_;
};

std::uint64_t fnv1a64(const std::string& s);

// Independent stream for a named purpose under a master seed.
SplitMix64 derive_stream(std::uint64_t seed, const std::string& label);

// Poisson by inversion (Knuth product method), chunked so exp(-lambda)
// never underflows. Deterministic given the stream.
long long draw_poisson(SplitMix64& rng, double lambda);

// Negative binomial with integer size r >= 1 and target mean, drawn as the
// sum of r geometric variables.
long long draw_negative_binomial(SplitMix64& rng, int size, double mean);

struct SdsSpec {
    std::string sds_id;
    std::string weighting_scheme = "uniform";
    int n_female_per_university = 0;
    int n_male_per_university = 0;
    // When set, per-university counts are Poisson-sampled around the values
    // above instead of taken exactly.
    bool sample_counts = false;
};

struct UdaSpec {
    std::string uda_id;
    std::vector<SdsSpec> sds;
};

struct SynthConfig {
    std::uint64_t seed = 1;
    int n_universities = 2;
    std::vector<UdaSpec> udas;
    Window window{2006, 2010};
    double pubs_per_year = 1.0;        // expected publications per researcher-year
    double citation_mean = 4.0;        // negative-binomial mean, scaled by age
    double citation_dispersion = 2.0;  // negative-binomial size (rounded to >= 1)
    double coauthors_mean = 3.0;       // expected co-authors beyond the researcher
    double gap = 1.0;                  // multiplier on female expected output; 1.0 = parity
    std::map<std::string, double> wage_by_rank = {
        {"assistant", 1.0}, {"associate", 1.0}, {"full", 1.0}};
};

void validate_config(const SynthConfig& cfg);  // throws InvalidConfigError

// Convenience: n_udas x sds_per_uda fields, every university staffed with
// n_female/n_male researchers per SDS.
SynthConfig make_uniform_synth_config(int n_udas, int sds_per_uda, int n_universities,
                                      int n_female, int n_male);

Dataset generate_dataset(const SynthConfig& cfg);

WageTable wage_table_of(const SynthConfig& cfg);

}  // namespace fssrank
