#pragma once

#include <stdexcept>
#include <string>

namespace fssrank {

// Unreadable or syntactically invalid input files, bad CLI/config values.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedRowError : ParseError {
    MalformedRowError(const std::string& file, std::size_t line, const std::string& what_arg)
        : ParseError(file + ":" + std::to_string(line) + ": " + what_arg),
          file_path(file),
          line_number(line) {}
    std::string file_path;
    std::size_t line_number;
};

struct DuplicateIdError : ParseError {
    using ParseError::ParseError;
};

struct DanglingReferenceError : ParseError {
    using ParseError::ParseError;
};

struct MissingWageForRankError : ParseError {
    using ParseError::ParseError;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contract breaches inside the numeric engine.
struct PositionOutOfRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidResearcherError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct WindowViolationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MissingScalingFactorError : std::logic_error {
    using std::logic_error::logic_error;
};

struct LengthMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAPermutationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooFewObservationsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedFormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A module error wrapped with the pipeline stage it surfaced in.
struct PipelineError : std::runtime_error {
    PipelineError(const std::string& stage_name, const std::string& what_arg)
        : std::runtime_error("stage '" + stage_name + "': " + what_arg), stage(stage_name) {}
    std::string stage;
};

}  // namespace fssrank
