#ifndef CRJET_ZEROTEST_HPP
#define CRJET_ZEROTEST_HPP

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "crjet/modp.hpp"
#include "crjet/ratexpr.hpp"

namespace crjet {

class DegenerateSampling : public std::runtime_error {
public:
    DegenerateSampling() : std::runtime_error("denominator vanished at every sampled point") {}
};

// Random point of F_p^N, coordinates drawn lazily per variable.
class RandomPoint {
public:
    RandomPoint(Sampler& s, std::uint64_t p) : s_(s), p_(p) {}
    std::uint64_t operator()(VarKey v);
    const std::unordered_map<VarKey, std::uint64_t>& values() const { return vals_; }

private:
    Sampler& s_;
    std::uint64_t p_;
    std::unordered_map<VarKey, std::uint64_t> vals_;
};

struct ZeroVerdict {
    bool zero = false;
    bool exact = false;       // decided symbolically, not by sampling
    double confidence = 0;    // 1 - (deg/p)^trials, or 1 for exact verdicts
    double log2_error = 0;    // log2 of the failure probability bound
    int trials = 0;
    std::uint64_t prime = 0;
    std::uint64_t value = 0;  // nonzero sample value for a witness
    std::vector<std::pair<VarKey, std::uint64_t>> witness;
};

// Evaluation callback: value at the point, or nullopt when a denominator
// vanishes there.
using ModEvaluator = std::function<std::optional<std::uint64_t>(RandomPoint&, std::uint64_t p, std::uint64_t s)>;

ZeroVerdict probabilistic_zero(const ModEvaluator& f, std::uint64_t degree_bound, int trials, Sampler& sampler);
ZeroVerdict is_zero_probabilistic(const RatExpr& e, int trials, Sampler& sampler);

constexpr int kDefaultTrials = 40;

} // namespace crjet

#endif
