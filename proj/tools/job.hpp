#ifndef CRJET_TOOLS_JOB_HPP
#define CRJET_TOOLS_JOB_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "crjet/invariants.hpp"

namespace crjet::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.3.0";

// Exit codes.
enum Exit : int { ExitComputed = 0, ExitVerification = 1, ExitInput = 2, ExitBudget = 3 };

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Source {
    enum Kind { None, Inline, File, Preset } kind = None;
    std::string value;
    std::string text; // file contents or inline text
};

struct JobSpec {
    std::string subcommand;
    Source source;
    bool exact = false;
    bool probabilistic = false;
    std::uint64_t seed = 1;
    int trials = kDefaultTrials;
    std::size_t budget_terms = 0; // 0: unlimited
    std::size_t memory_mb = 0;
    bool stress = false;
    std::string report_path;
    json options = json::object();

    InvariantOptions invariant_options() const;
    // Term ceiling from --budget-terms or --memory-mb, whichever is lower.
    std::size_t term_limit() const;
    json echo() const;
};

struct Report {
    JobSpec job;
    json inputs = json::array(); // canonical re-printed input expressions
    json results = json::object();
    json verdicts = json::array();
    double seconds = 0;
    bool verification_failed = false;

    void verdict(const std::string& what, bool ok, const std::string& detail = {});
    json to_json() const;
};

// Reads the single input source, accepting a file path or inline text.
Source read_source(const std::optional<std::string>& preset, const std::optional<std::string>& file,
                   const std::optional<std::string>& inline_text);

std::uint64_t default_seed();

} // namespace crjet::cli

#endif
