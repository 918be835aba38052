#pragma once

#include <string>

#include "fssrank/ingest.hpp"
#include "fssrank/synth.hpp"

// Declarative JSON configs mirroring the CLI flags. Missing optional fields
// keep their defaults; unknown keys are rejected to catch typos.

namespace fssrank {

IngestConfig ingest_config_from_json_file(const std::string& path);
SynthConfig synth_config_from_json_file(const std::string& path);

}  // namespace fssrank
