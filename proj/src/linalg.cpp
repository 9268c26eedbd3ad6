#include "crjet/linalg.hpp"

namespace crjet {

bool SparseSystem::add_row(Row row) {
    ++seen_;
    std::map<std::size_t, Rational> r;
    for (auto& e : row)
        if (!e.second.is_zero()) r[e.first] += e.second;
    for (auto it = r.begin(); it != r.end();) {
        if (it->second.is_zero()) { it = r.erase(it); continue; }
        auto p = rows_.find(it->first);
        if (p == rows_.end()) { ++it; continue; }
        Rational f = it->second;
        std::size_t col = it->first;
        for (auto& kv : p->second) {
            auto& x = r[kv.first];
            x -= f * kv.second;
        }
        it = r.upper_bound(col);
        r.erase(col);
    }
    for (auto it = r.begin(); it != r.end();) {
        if (it->second.is_zero()) it = r.erase(it);
        else ++it;
    }
    if (r.empty()) return false;
    Rational inv = Rational(1) / r.begin()->second;
    for (auto& kv : r) kv.second *= inv;
    rows_.emplace(r.begin()->first, std::move(r));
    return true;
}

std::vector<std::vector<Rational>> SparseSystem::nullspace() const {
    // Back substitution to reduced form, last pivot first.
    std::map<std::size_t, std::map<std::size_t, Rational>> red;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        std::map<std::size_t, Rational> r = it->second;
        for (auto jt = std::next(r.begin()); jt != r.end();) {
            auto p = red.find(jt->first);
            if (p == red.end() || jt->second.is_zero()) { ++jt; continue; }
            Rational f = jt->second;
            std::size_t col = jt->first;
            for (auto& kv : p->second) r[kv.first] -= f * kv.second;
            jt = r.upper_bound(col);
        }
        for (auto jt = r.begin(); jt != r.end();) {
            if (jt->second.is_zero()) jt = r.erase(jt);
            else ++jt;
        }
        red.emplace(it->first, std::move(r));
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (red.count(f)) continue;
        std::vector<Rational> v(cols_);
        v[f] = Rational(1);
        for (auto& kv : red) {
            auto it = kv.second.find(f);
            if (it != kv.second.end()) v[kv.first] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace crjet
