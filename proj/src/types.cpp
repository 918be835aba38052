#include "fssrank/types.hpp"

#include <algorithm>
#include <tuple>

#include "fssrank/errors.hpp"

namespace fssrank {

const char* to_string(Gender g) { return g == Gender::female ? "F" : "M"; }

Gender gender_from_code(const std::string& code) {
    if (code == "F" || code == "f") return Gender::female;
    if (code == "M" || code == "m") return Gender::male;
    throw ParseError("unknown gender code '" + code + "' (expected F or M)");
}

void Dataset::sort_records() {
    std::sort(researchers.begin(), researchers.end(),
              [](const Researcher& a, const Researcher& b) {
                  return a.researcher_id < b.researcher_id;
              });
    std::sort(publications.begin(), publications.end(),
              [](const Publication& a, const Publication& b) { return a.pub_id < b.pub_id; });
    std::sort(authorships.begin(), authorships.end(),
              [](const Authorship& a, const Authorship& b) {
                  return std::tie(a.pub_id, a.researcher_id) < std::tie(b.pub_id, b.researcher_id);
              });
    for (auto& pub : publications) {
        std::sort(pub.subject_categories.begin(), pub.subject_categories.end());
    }
}

}  // namespace fssrank
