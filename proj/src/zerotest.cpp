#include "crjet/zerotest.hpp"

#include <algorithm>
#include <cmath>

namespace crjet {

std::uint64_t RandomPoint::operator()(VarKey v) {
    auto it = vals_.find(v);
    if (it != vals_.end()) return it->second;
    auto x = s_.uniform(p_);
    vals_.emplace(v, x);
    return x;
}

ZeroVerdict probabilistic_zero(const ModEvaluator& f, std::uint64_t degree_bound, int trials, Sampler& sampler) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const auto& pr = prime_table()[0];
    ZeroVerdict v;
    v.prime = pr.p;
    int done = 0, misses = 0;
    const int miss_budget = 20 * trials + 100;
    while (done < trials) {
        RandomPoint pt(sampler, pr.p);
        auto val = f(pt, pr.p, pr.sqrt_m1);
        if (!val) {
            if (++misses > miss_budget) throw DegenerateSampling();
            continue;
        }
        ++done;
        if (*val != 0) {
            v.zero = false;
            v.trials = done;
            v.value = *val;
            v.witness.assign(pt.values().begin(), pt.values().end());
            std::sort(v.witness.begin(), v.witness.end());
            v.confidence = 1;
            return v;
        }
    }
    v.zero = true;
    v.trials = done;
    double d = double(std::max<std::uint64_t>(degree_bound, 1));
    v.log2_error = double(trials) * (std::log2(d) - std::log2(double(pr.p)));
    v.confidence = 1 - std::exp2(v.log2_error);
    return v;
}

ZeroVerdict is_zero_probabilistic(const RatExpr& e, int trials, Sampler& sampler) {
    auto f = [&](RandomPoint& pt, std::uint64_t p, std::uint64_t s) -> std::optional<std::uint64_t> {
        std::function<std::uint64_t(VarKey)> val = [&](VarKey k) { return pt(k); };
        std::uint64_t out;
        if (!e.eval_mod(p, s, val, out)) return std::nullopt;
        return out;
    };
    return probabilistic_zero(f, e.num().total_degree(), trials, sampler);
}

} // namespace crjet
