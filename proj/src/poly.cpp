#include "crjet/poly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

#include "crjet/modp.hpp"

namespace crjet {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(VarKey v, std::uint32_t e) {
    Monomial m;
    if (e) {
        m.f_.push_back({v, e});
        m.deg_ = e;
    }
    return m;
}

Monomial Monomial::from_factors(Vec f) {
    std::sort(f.begin(), f.end(), [](const VarPow& a, const VarPow& b) { return a.v < b.v; });
    Monomial m;
    for (auto& p : f) {
        if (!p.e) continue;
        if (!m.f_.empty() && m.f_.back().v == p.v) m.f_.back().e += p.e;
        else m.f_.push_back(p);
        m.deg_ += p.e;
    }
    return m;
}

std::uint32_t Monomial::degree(VarKey v) const {
    for (auto& p : f_)
        if (p.v == v) return p.e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (o.f_.empty()) return *this;
    if (f_.empty()) return o;
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    std::size_t i = 0, j = 0;
    while (i < f_.size() && j < o.f_.size()) {
        if (f_[i].v == o.f_[j].v) {
            r.f_.push_back({f_[i].v, f_[i].e + o.f_[j].e});
            ++i; ++j;
        } else if (f_[i].v < o.f_[j].v) {
            r.f_.push_back(f_[i++]);
        } else {
            r.f_.push_back(o.f_[j++]);
        }
    }
    while (i < f_.size()) r.f_.push_back(f_[i++]);
    while (j < o.f_.size()) r.f_.push_back(o.f_[j++]);
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    std::size_t j = 0;
    for (auto& p : f_) {
        while (j < o.f_.size() && o.f_[j].v < p.v) ++j;
        if (j == o.f_.size() || o.f_[j].v != p.v || o.f_[j].e < p.e) return false;
    }
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    std::size_t j = 0;
    for (auto& p : f_) {
        std::uint32_t e = p.e;
        if (j < o.f_.size() && o.f_[j].v == p.v) e -= o.f_[j++].e;
        if (e) r.f_.push_back({p.v, e});
    }
    r.deg_ = deg_ - o.deg_;
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < f_.size() && j < o.f_.size()) {
        if (f_[i].v == o.f_[j].v) {
            std::uint32_t e = std::min(f_[i].e, o.f_[j].e);
            r.f_.push_back({f_[i].v, e});
            r.deg_ += e;
            ++i; ++j;
        } else if (f_[i].v < o.f_[j].v) {
            ++i;
        } else {
            ++j;
        }
    }
    return r;
}

Monomial Monomial::without(VarKey v) const {
    Monomial r;
    for (auto& p : f_)
        if (p.v != v) {
            r.f_.push_back(p);
            r.deg_ += p.e;
        }
    return r;
}

std::size_t Monomial::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto& p : f_) {
        h ^= p.v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= p.e + 0x7f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::string Monomial::str() const {
    if (f_.empty()) return "1";
    std::string s;
    for (auto& p : f_) {
        if (!s.empty()) s += "*";
        s += var_name(p.v);
        if (p.e > 1) s += "^" + std::to_string(p.e);
    }
    return s;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t n = std::min(fa.size(), fb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (fa[i].v != fb[i].v) return fa[i].v < fb[i].v ? 1 : -1;
        if (fa[i].e != fb[i].e) return fa[i].e > fb[i].e ? 1 : -1;
    }
    if (fa.size() != fb.size()) return fa.size() > fb.size() ? 1 : -1;
    return 0;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    return lex_cmp(a, b);
}

namespace {

struct TermGreater {
    bool operator()(const Term& a, const Term& b) const { return grlex_cmp(a.m, b.m) > 0; }
};
struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

void check_budget(std::size_t n) {
    if (n > TermBudget::limit()) throw BudgetExceeded("term budget exceeded (" + std::to_string(n) + " terms)");
}

} // namespace

std::size_t& TermBudget::limit() {
    thread_local std::size_t lim = std::numeric_limits<std::size_t>::max();
    return lim;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const GaussRat& c) {
    if (!c.is_zero()) t_.push_back({Monomial(), c});
}

Poly Poly::variable(VarKey v, std::uint32_t e) { return monomial(Monomial::of(v, e), GaussRat(1)); }

Poly Poly::monomial(const Monomial& m, const GaussRat& c) {
    Poly p;
    if (!c.is_zero()) p.t_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), TermGreater());
    Poly p;
    p.t_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().m == t.m) {
            p.t_.back().c += t.c;
            if (p.t_.back().c.is_zero()) p.t_.pop_back();
        } else if (!t.c.is_zero()) {
            p.t_.push_back(std::move(t));
        }
    }
    return p;
}

Poly Poly::from_sorted(std::vector<Term> terms) {
    Poly p;
    p.t_ = std::move(terms);
    return p;
}

GaussRat Poly::constant_term() const {
    if (!t_.empty() && t_.back().m.is_one()) return t_.back().c;
    return GaussRat();
}

std::vector<VarKey> Poly::vars() const {
    std::vector<VarKey> v;
    for (auto& t : t_)
        for (auto& f : t.m.factors()) v.push_back(f.v);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool Poly::has_var(VarKey v) const {
    for (auto& t : t_)
        if (t.m.degree(v)) return true;
    return false;
}

std::uint32_t Poly::degree(VarKey v) const {
    std::uint32_t d = 0;
    for (auto& t : t_) d = std::max(d, t.m.degree(v));
    return d;
}

std::uint32_t Poly::total_degree() const { return t_.empty() ? 0 : t_.front().m.degree(); }

Monomial Poly::monomial_content() const {
    if (t_.empty()) return Monomial();
    Monomial g = t_.front().m;
    for (auto& t : t_) {
        if (g.is_one()) break;
        g = g.gcd(t.m);
    }
    return g;
}

bool Poly::real_coefficients() const {
    for (auto& t : t_)
        if (!t.c.is_real()) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

namespace {

Poly merge(const Poly& a, const Poly& b, bool subtract) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    std::vector<Term> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        int c = grlex_cmp(x[i].m, y[j].m);
        if (c > 0) out.push_back(x[i++]);
        else if (c < 0) {
            out.push_back(y[j++]);
            if (subtract) out.back().c = -out.back().c;
        } else {
            GaussRat s = subtract ? x[i].c - y[j].c : x[i].c + y[j].c;
            if (!s.is_zero()) out.push_back({x[i].m, std::move(s)});
            ++i; ++j;
        }
    }
    while (i < x.size()) out.push_back(x[i++]);
    while (j < y.size()) {
        out.push_back(y[j++]);
        if (subtract) out.back().c = -out.back().c;
    }
    return Poly::from_sorted(std::move(out));
}

} // namespace

Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return merge(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    return merge(a, b, true);
}

Poly Poly::mul_monomial(const Monomial& m, const GaussRat& c) const {
    if (c.is_zero()) return Poly();
    Poly r;
    r.t_.reserve(t_.size());
    for (auto& t : t_) r.t_.push_back({t.m * m, t.c * c});
    return r;
}

Poly Poly::scale(const GaussRat& c) const { return mul_monomial(Monomial(), c); }

Poly Poly::div_monomial(const Monomial& m) const {
    Poly r;
    r.t_.reserve(t_.size());
    for (auto& t : t_) r.t_.push_back({t.m / m, t.c});
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.size() == 1) return b.mul_monomial(a.t_[0].m, a.t_[0].c);
    if (b.size() == 1) return a.mul_monomial(b.t_[0].m, b.t_[0].c);
    const Poly& big = a.size() >= b.size() ? a : b;
    const Poly& small = a.size() >= b.size() ? b : a;
    std::unordered_map<Monomial, GaussRat, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(big.size() * small.size(), 1u << 22));
    for (auto& s : small.t_) {
        for (auto& t : big.t_) {
            auto m = s.m * t.m;
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(std::move(m), s.c * t.c);
            else it->second += s.c * t.c;
        }
        check_budget(acc.size());
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& kv : acc)
        if (!kv.second.is_zero()) out.push_back({kv.first, kv.second});
    std::sort(out.begin(), out.end(), TermGreater());
    return Poly::from_sorted(std::move(out));
}

Poly Poly::pow(unsigned e) const {
    Poly r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Poly Poly::monic() const {
    if (t_.empty() || lc().is_one()) return *this;
    return scale(lc().inverse());
}

Poly Poly::diff(VarKey v) const {
    auto& vt = VarTable::global();
    bool plain = kind_of(v) == VarKind::Plain;
    std::unordered_map<VarKey, std::optional<VarKey>> cache;
    std::vector<Term> out;
    for (auto& t : t_) {
        for (auto& f : t.m.factors()) {
            if (f.v == v) {
                out.push_back({t.m / Monomial::of(v), t.c * GaussRat(Rational((long long)f.e))});
            } else if (plain && kind_of(f.v) == VarKind::Formal) {
                auto it = cache.find(f.v);
                if (it == cache.end()) it = cache.emplace(f.v, vt.formal_diff(f.v, v)).first;
                if (it->second) {
                    out.push_back({(t.m / Monomial::of(f.v)) * Monomial::of(*it->second),
                                   t.c * GaussRat(Rational((long long)f.e))});
                }
            }
        }
    }
    return from_terms(std::move(out));
}

Poly Poly::conj() const {
    auto& vt = VarTable::global();
    std::unordered_map<VarKey, VarKey> cache;
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        Monomial::Vec f;
        for (auto& p : t.m.factors()) {
            auto it = cache.find(p.v);
            if (it == cache.end()) it = cache.emplace(p.v, vt.conj(p.v)).first;
            f.push_back({it->second, p.e});
        }
        out.push_back({Monomial::from_factors(std::move(f)), t.c.conj()});
    }
    return from_terms(std::move(out));
}

std::optional<Poly> Poly::divide_exact(const Poly& b) const {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return Poly();
    if (b.is_constant()) return scale(b.lc().inverse());
    if (b.size() == 1) {
        const auto& m = b.t_[0].m;
        for (auto& t : t_)
            if (!m.divides(t.m)) return std::nullopt;
        return div_monomial(m).scale(b.lc().inverse());
    }
    if (b.total_degree() > total_degree()) return std::nullopt;
    for (auto& f : b.lead().m.factors())
        if (degree(f.v) < f.e) return std::nullopt;
    std::map<Monomial, GaussRat, MonoGreater> r;
    for (auto& t : t_) r.emplace(t.m, t.c);
    GaussRat inv = b.lc().inverse();
    const Monomial& lm = b.lead().m;
    std::vector<Term> q;
    while (!r.empty()) {
        auto it = r.begin();
        if (!lm.divides(it->first)) return std::nullopt;
        Monomial qm = it->first / lm;
        GaussRat qc = it->second * inv;
        r.erase(it);
        for (std::size_t j = 1; j < b.t_.size(); ++j) {
            auto m = qm * b.t_[j].m;
            auto c = qc * b.t_[j].c;
            auto jt = r.find(m);
            if (jt == r.end()) r.emplace(std::move(m), -c);
            else {
                jt->second -= c;
                if (jt->second.is_zero()) r.erase(jt);
            }
        }
        if (!r.empty() && r.begin()->first.degree() < lm.degree()) return std::nullopt;
        q.push_back({std::move(qm), std::move(qc)});
        check_budget(q.size());
    }
    return from_sorted(std::move(q));
}

Poly Poly::normal_form(const Poly& b) const {
    if (b.is_zero()) throw std::domain_error("normal form modulo zero");
    if (b.is_constant()) return Poly();
    std::map<Monomial, GaussRat, MonoGreater> r;
    for (auto& t : t_) r.emplace(t.m, t.c);
    GaussRat inv = b.lc().inverse();
    const Monomial& lm = b.lead().m;
    std::vector<Term> rem;
    while (!r.empty()) {
        auto it = r.begin();
        if (!lm.divides(it->first)) {
            rem.push_back({it->first, it->second});
            r.erase(it);
            continue;
        }
        Monomial qm = it->first / lm;
        GaussRat qc = it->second * inv;
        r.erase(it);
        for (std::size_t j = 1; j < b.t_.size(); ++j) {
            auto m = qm * b.t_[j].m;
            auto c = qc * b.t_[j].c;
            auto jt = r.find(m);
            if (jt == r.end()) r.emplace(std::move(m), -c);
            else {
                jt->second -= c;
                if (jt->second.is_zero()) r.erase(jt);
            }
        }
    }
    return from_sorted(std::move(rem));
}

std::vector<std::pair<Monomial, Poly>> Poly::split(const std::vector<VarKey>& vars) const {
    std::vector<VarKey> vs = vars;
    std::sort(vs.begin(), vs.end());
    std::unordered_map<Monomial, std::vector<Term>, MonomialHash> groups;
    for (auto& t : t_) {
        Monomial::Vec in, out;
        for (auto& f : t.m.factors()) {
            if (std::binary_search(vs.begin(), vs.end(), f.v)) in.push_back(f);
            else out.push_back(f);
        }
        groups[Monomial::from_factors(std::move(in))].push_back({Monomial::from_factors(std::move(out)), t.c});
    }
    std::vector<std::pair<Monomial, Poly>> res;
    res.reserve(groups.size());
    for (auto& g : groups) res.emplace_back(g.first, from_terms(std::move(g.second)));
    std::sort(res.begin(), res.end(), [](auto& a, auto& b) { return grlex_cmp(a.first, b.first) > 0; });
    return res;
}

Poly Poly::coeff(VarKey v, std::uint32_t k) const {
    std::vector<Term> out;
    for (auto& t : t_)
        if (t.m.degree(v) == k) out.push_back({t.m.without(v), t.c});
    return from_terms(std::move(out));
}

std::uint64_t gauss_mod(const GaussRat& c, std::uint64_t p, std::uint64_t s) {
    std::uint64_t r, i = 0;
    if (!c.re.mod(p, r)) throw std::domain_error("coefficient denominator vanishes mod p");
    if (!c.im.is_zero()) {
        if (!c.im.mod(p, i)) throw std::domain_error("coefficient denominator vanishes mod p");
        i = mul_mod(i, s, p);
    }
    return add_mod(r, i, p);
}

std::uint64_t Poly::eval_mod(std::uint64_t p, std::uint64_t s, const std::function<std::uint64_t(VarKey)>& val) const {
    std::unordered_map<VarKey, std::uint64_t> cache;
    std::uint64_t acc = 0;
    for (auto& t : t_) {
        std::uint64_t v = gauss_mod(t.c, p, s);
        for (auto& f : t.m.factors()) {
            auto it = cache.find(f.v);
            if (it == cache.end()) it = cache.emplace(f.v, val(f.v) % p).first;
            v = mul_mod(v, pow_mod(it->second, f.e, p), p);
        }
        acc = add_mod(acc, v, p);
    }
    return acc;
}

namespace {

std::string term_str(const Term& t) {
    const GaussRat& c = t.c;
    if (t.m.is_one()) return c.str();
    std::string m = t.m.str();
    if (c.is_one()) return m;
    if (c.is_real()) {
        if ((-c).is_one()) return "-" + m;
        return c.re.str() + "*" + m;
    }
    return c.str() + "*" + m;
}

} // namespace

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < t_.size(); ++k) {
        std::string ts = term_str(t_[k]);
        if (k == 0) s = ts;
        else if (ts[0] == '-') s += " - " + ts.substr(1);
        else s += " + " + ts;
    }
    return s;
}

std::size_t Poly::hash() const {
    std::size_t h = t_.size();
    for (auto& t : t_) h = h * 1000003u ^ (t.m.hash() + 31 * t.c.hash());
    return h;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
        if (a.t_[i].m != b.t_[i].m || a.t_[i].c != b.t_[i].c) return false;
    return true;
}

} // namespace crjet
