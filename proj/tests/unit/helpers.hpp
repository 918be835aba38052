#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "fssrank/types.hpp"

namespace fssrank::test {

inline Researcher make_researcher(std::string id, Gender gender, std::string univ,
                                  std::string sds, std::string uda, double t = 5.0,
                                  double w = 1.0, std::string rank = "associate") {
    Researcher r;
    r.researcher_id = std::move(id);
    r.gender = gender;
    r.university_id = std::move(univ);
    r.sds_id = std::move(sds);
    r.uda_id = std::move(uda);
    r.academic_rank = std::move(rank);
    r.years_active = t;
    r.wage = w;
    return r;
}

inline Publication make_pub(std::string id, int year, std::vector<std::string> cats,
                            long long citations, int n_authors) {
    Publication p;
    p.pub_id = std::move(id);
    p.year = year;
    p.subject_categories = std::move(cats);
    p.citations = citations;
    p.n_authors = n_authors;
    return p;
}

// Builds the taxonomy from the researchers present and sorts everything.
inline Dataset finalize(Dataset d) {
    for (const auto& r : d.researchers) {
        d.taxonomy.sds_to_uda.emplace(r.sds_id, r.uda_id);
        d.taxonomy.sds_to_weighting_scheme.emplace(r.sds_id, "uniform");
    }
    d.sort_records();
    return d;
}

class TempDir {
  public:
    TempDir() {
        static std::mt19937_64 rng{std::random_device{}()};
        char buf[64];
        std::snprintf(buf, sizeof(buf), "fssrank_test_%016llx",
                      static_cast<unsigned long long>(rng()));
        path_ = std::filesystem::temp_directory_path() / buf;
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }

  private:
    std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace fssrank::test
