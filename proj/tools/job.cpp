#include "job.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace crjet::cli {

// Rough resident size of one stored term with its GMP coefficient.
constexpr std::size_t kBytesPerTerm = 320;

InvariantOptions JobSpec::invariant_options() const {
    InvariantOptions o;
    o.mode = exact ? VerdictMode::Exact : probabilistic ? VerdictMode::Probabilistic : VerdictMode::Auto;
    o.seed = seed;
    o.trials = trials;
    return o;
}

std::size_t JobSpec::term_limit() const {
    std::size_t lim = std::numeric_limits<std::size_t>::max();
    if (budget_terms) lim = budget_terms;
    if (memory_mb) lim = std::min(lim, memory_mb * 1024 * 1024 / kBytesPerTerm);
    return lim;
}

json JobSpec::echo() const {
    json j;
    j["subcommand"] = subcommand;
    json s;
    switch (source.kind) {
        case Source::None: s = nullptr; break;
        case Source::Inline: s["inline"] = source.value; break;
        case Source::File: s["file"] = source.value; break;
        case Source::Preset: s["preset"] = source.value; break;
    }
    j["source"] = s;
    j["mode"] = exact ? "exact" : probabilistic ? "probabilistic" : "auto";
    j["seed"] = seed;
    j["trials"] = trials;
    if (budget_terms) j["budget_terms"] = budget_terms;
    if (memory_mb) j["memory_mb"] = memory_mb;
    j["stress"] = stress;
    j["options"] = options;
    return j;
}

void Report::verdict(const std::string& what, bool ok, const std::string& detail) {
    json v;
    v["check"] = what;
    v["holds"] = ok;
    if (!detail.empty()) v["detail"] = detail;
    verdicts.push_back(v);
    if (!ok) verification_failed = true;
}

json Report::to_json() const {
    json j;
    j["tool"] = "crjet";
    j["version"] = kVersion;
    j["job"] = job.echo();
    j["inputs"] = inputs;
    j["results"] = results;
    j["verdicts"] = verdicts;
    j["timing"] = {{"seconds", seconds}};
    return j;
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

Source read_source(const std::optional<std::string>& preset, const std::optional<std::string>& file,
                   const std::optional<std::string>& inline_text) {
    int given = int(preset.has_value()) + int(file.has_value()) + int(inline_text.has_value());
    if (given > 1) throw InputError("give exactly one input source");
    Source s;
    if (preset) {
        s.kind = Source::Preset;
        s.value = *preset;
    } else if (file) {
        s.kind = Source::File;
        s.value = *file;
        s.text = slurp(*file);
    } else if (inline_text) {
        s.kind = Source::Inline;
        s.value = *inline_text;
        s.text = *inline_text;
    }
    return s;
}

std::uint64_t default_seed() {
    if (const char* e = std::getenv("CRJET_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(e, &end, 10);
        if (end && *end == '\0' && end != e) return v;
        throw InputError("CRJET_SEED must be a non-negative integer");
    }
    return 1;
}

} // namespace crjet::cli
