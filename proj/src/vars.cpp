#include "crjet/vars.hpp"

#include <mutex>
#include <stdexcept>

namespace crjet {

namespace {

constexpr VarKey kJetTag = VarKey(1) << 62;
constexpr VarKey kFormalTag = VarKey(2) << 62;

bool all_primes(const std::string& s, std::size_t from) {
    for (std::size_t i = from; i < s.size(); ++i)
        if (s[i] != '\'') return false;
    return from < s.size();
}

} // namespace

VarTable& VarTable::global() {
    static VarTable t;
    return t;
}

VarTable::VarTable() {
    std::unique_lock lk(mu_);
    auto pair = [&](const std::string& a, const std::string& b) {
        auto ia = std::uint32_t(declare_locked(a));
        auto ib = std::uint32_t(declare_locked(b));
        plain_[ia].conj = ib;
        plain_[ib].conj = ia;
    };
    // Standard coordinates in their canonical priority order.
    std::vector<std::string> hol = {"z", "z1", "z2", "z3", "z4"};
    for (auto& h : hol) declare_locked(h);
    for (auto& h : hol) declare_locked(h.substr(0, 1) + "b" + h.substr(1));
    for (auto& h : hol) pair(h, "zb" + h.substr(1));
    for (std::string w : {"w", "w1", "w2", "w3", "w4"}) declare_locked(w);
    for (std::string w : {"w", "w1", "w2", "w3", "w4"}) pair(w, "wb" + w.substr(1));
    for (std::string u : {"u", "u1", "u2", "u3", "u4", "v", "v1", "v2", "v3", "x", "y", "x1", "y1", "x2", "y2", "t"})
        declare_locked(u);
    for (std::string g : {"a", "b", "c", "d", "e"}) pair(g, g + "b");
}

VarKey VarTable::declare_locked(const std::string& name) {
    auto it = plain_idx_.find(name);
    if (it != plain_idx_.end()) return it->second;
    if (name.empty() || name == "i") throw std::invalid_argument("invalid variable name '" + name + "'");
    std::uint32_t idx = std::uint32_t(plain_.size());
    plain_.push_back({name, idx});
    plain_idx_.emplace(name, idx);
    return idx;
}

VarKey VarTable::declare(const std::string& name) {
    {
        std::shared_lock lk(mu_);
        auto it = plain_idx_.find(name);
        if (it != plain_idx_.end()) return it->second;
    }
    std::unique_lock lk(mu_);
    if (fn_idx_.count(name)) throw std::invalid_argument("'" + name + "' is already a function");
    return declare_locked(name);
}

void VarTable::declare_conj(const std::string& a, const std::string& b) {
    std::unique_lock lk(mu_);
    auto ia = std::uint32_t(declare_locked(a));
    auto ib = std::uint32_t(declare_locked(b));
    // Break any previous pairing so the involution stays of order two.
    auto oa = plain_[ia].conj, ob = plain_[ib].conj;
    plain_[oa].conj = oa;
    plain_[ob].conj = ob;
    plain_[ia].conj = ib;
    plain_[ib].conj = ia;
}

int VarTable::declare_function(const std::string& name, const std::vector<std::string>& args, bool real) {
    if (name.find('_') != std::string::npos) throw std::invalid_argument("function names may not contain '_'");
    if (args.size() > std::size_t(kMaxFormalArgs)) throw std::invalid_argument("too many function arguments");
    std::vector<VarKey> keys;
    {
        std::unique_lock lk(mu_);
        for (auto& a : args) keys.push_back(declare_locked(a));
        auto it = fn_idx_.find(name);
        if (it != fn_idx_.end()) {
            const auto& f = fns_[it->second];
            if (f.args != keys || f.real != real)
                throw std::invalid_argument("function '" + name + "' redeclared differently");
            return it->second;
        }
        if (plain_idx_.count(name)) throw std::invalid_argument("'" + name + "' is already a variable");
        if (fns_.size() >= 4096) throw std::runtime_error("function table full");
        int idx = int(fns_.size());
        FormalFunction f{name, keys, real, idx, {}};
        std::vector<VarKey> conj_args;
        for (auto k : keys) conj_args.push_back(plain_[k].conj);
        if (real) {
            for (std::size_t i = 0; i < keys.size(); ++i) {
                int pos = -1;
                for (std::size_t j = 0; j < keys.size(); ++j)
                    if (keys[j] == conj_args[i]) pos = int(j);
                if (pos < 0) throw std::invalid_argument("real function '" + name + "' needs conjugation-closed arguments");
                f.conj_arg.push_back(pos);
            }
            fns_.push_back(std::move(f));
        } else {
            // Companion function carrying the conjugate values.
            std::string cname = name + "b";
            if (fn_idx_.count(cname) || plain_idx_.count(cname)) cname = name + "bar";
            fns_.push_back(std::move(f));
            FormalFunction g{cname, conj_args, false, idx, {}};
            for (std::size_t i = 0; i < keys.size(); ++i) {
                fns_[idx].conj_arg.push_back(int(i));
                g.conj_arg.push_back(int(i));
            }
            fns_[idx].conj_fn = idx + 1;
            fns_.push_back(std::move(g));
            fn_idx_.emplace(cname, idx + 1);
        }
        fn_idx_.emplace(name, idx);
        return idx;
    }
}

std::optional<int> VarTable::find_function(const std::string& name) const {
    std::shared_lock lk(mu_);
    auto it = fn_idx_.find(name);
    if (it == fn_idx_.end()) return std::nullopt;
    return it->second;
}

const FormalFunction& VarTable::function(int idx) const {
    std::shared_lock lk(mu_);
    return fns_.at(std::size_t(idx));
}

VarKey VarTable::jet(VarKey base, int order) const {
    if (kind_of(base) != VarKind::Plain) throw std::invalid_argument("jet of a non-coordinate");
    if (order < 1) throw std::invalid_argument("jet order must be >= 1");
    return kJetTag | (VarKey(order) << 32) | base;
}

VarKey VarTable::formal(int fn, const MultiIndex& alpha) const {
    VarKey k = kFormalTag | (VarKey(fn) << 50);
    int tot = 0;
    for (int i = 0; i < kMaxFormalArgs; ++i) {
        if (alpha[std::size_t(i)] > kMaxFormalExp) throw std::overflow_error("formal derivative order too high");
        tot += alpha[std::size_t(i)];
        k |= VarKey(alpha[std::size_t(i)]) << (6 * i);
    }
    if (tot > 255) throw std::overflow_error("formal derivative order too high");
    return k | (VarKey(tot) << 42);
}

MultiIndex VarTable::formal_alpha(VarKey k) const {
    MultiIndex a{};
    for (int i = 0; i < kMaxFormalArgs; ++i) a[std::size_t(i)] = std::uint8_t((k >> (6 * i)) & 63);
    return a;
}

std::optional<VarKey> VarTable::formal_diff(VarKey sym, VarKey arg) const {
    const auto& f = function(formal_fn(sym));
    for (std::size_t i = 0; i < f.args.size(); ++i) {
        if (f.args[i] == arg) {
            auto a = formal_alpha(sym);
            if (a[i] >= kMaxFormalExp) throw std::overflow_error("formal derivative order too high");
            ++a[i];
            return formal(formal_fn(sym), a);
        }
    }
    return std::nullopt;
}

VarKey VarTable::conj(VarKey k) const {
    switch (kind_of(k)) {
        case VarKind::Plain: {
            std::shared_lock lk(mu_);
            return plain_.at(std::size_t(k)).conj;
        }
        case VarKind::Jet: return jet(conj(jet_base(k)), jet_order(k));
        case VarKind::Formal: {
            const auto& f = function(formal_fn(k));
            auto a = formal_alpha(k);
            MultiIndex b{};
            for (std::size_t i = 0; i < f.args.size(); ++i) b[std::size_t(f.conj_arg[i])] = a[i];
            return formal(f.conj_fn, b);
        }
    }
    return k;
}

std::string VarTable::name(VarKey k) const {
    switch (kind_of(k)) {
        case VarKind::Plain: {
            std::shared_lock lk(mu_);
            return plain_.at(std::size_t(k)).name;
        }
        case VarKind::Jet: return name(jet_base(k)) + "^(" + std::to_string(jet_order(k)) + ")";
        case VarKind::Formal: {
            const auto& f = function(formal_fn(k));
            auto a = formal_alpha(k);
            std::string s = f.name;
            bool first = true;
            for (std::size_t i = 0; i < f.args.size(); ++i) {
                for (int r = 0; r < a[i]; ++r) {
                    if (first) { s += "_"; first = false; }
                    s += name(f.args[i]);
                }
            }
            return s;
        }
    }
    return "?";
}

VarKey VarTable::plain_key(const std::string& n) const {
    std::shared_lock lk(mu_);
    auto it = plain_idx_.find(n);
    if (it == plain_idx_.end()) throw UnknownVariable("unknown variable '" + n + "'");
    return it->second;
}

std::optional<VarKey> VarTable::find(const std::string& ident) const {
    // Jet suffixes.
    auto q = ident.find('\'');
    if (q != std::string::npos && q > 0 && all_primes(ident, q)) {
        // Primes stop at order 3; higher orders use x^(k).
        if (ident.size() - q > 3) return std::nullopt;
        auto base = find(ident.substr(0, q));
        if (!base || kind_of(*base) != VarKind::Plain) return std::nullopt;
        return jet(*base, int(ident.size() - q));
    }
    auto h = ident.find("^(");
    if (h != std::string::npos && h > 0 && ident.back() == ')') {
        auto base = find(ident.substr(0, h));
        if (!base || kind_of(*base) != VarKind::Plain) return std::nullopt;
        int ord = std::stoi(ident.substr(h + 2, ident.size() - h - 3));
        return jet(*base, ord);
    }
    {
        std::shared_lock lk(mu_);
        auto it = plain_idx_.find(ident);
        if (it != plain_idx_.end()) return it->second;
    }
    auto us = ident.find('_');
    std::string fname = us == std::string::npos ? ident : ident.substr(0, us);
    auto fi = find_function(fname);
    if (!fi) return std::nullopt;
    const auto& f = function(*fi);
    MultiIndex a{};
    if (us != std::string::npos) {
        std::vector<std::string> an;
        for (auto k : f.args) an.push_back(name(k));
        std::size_t pos = us + 1;
        if (pos == ident.size()) return std::nullopt;
        while (pos < ident.size()) {
            int best = -1;
            std::size_t blen = 0;
            for (std::size_t i = 0; i < an.size(); ++i) {
                if (an[i].size() > blen && ident.compare(pos, an[i].size(), an[i]) == 0) {
                    best = int(i);
                    blen = an[i].size();
                }
            }
            if (best < 0) return std::nullopt;
            if (a[std::size_t(best)] >= kMaxFormalExp) return std::nullopt;
            ++a[std::size_t(best)];
            pos += blen;
        }
    }
    return formal(*fi, a);
}

VarKey VarTable::resolve(const std::string& ident, bool autodeclare) {
    if (auto k = find(ident)) return *k;
    bool simple = !ident.empty() && ident.find('\'') == std::string::npos && ident.find('^') == std::string::npos;
    if (autodeclare && simple && ident.find('_') == std::string::npos) return declare(ident);
    if (autodeclare && !simple) {
        // Jet of a fresh base name.
        auto q = ident.find('\'');
        auto h = ident.find("^(");
        std::size_t cut = q != std::string::npos ? q : h;
        if (cut != std::string::npos && cut > 0) {
            declare(ident.substr(0, cut));
            if (auto k = find(ident)) return *k;
        }
    }
    throw UnknownVariable("unknown identifier '" + ident + "'");
}

} // namespace crjet
