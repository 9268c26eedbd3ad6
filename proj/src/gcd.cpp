#include "crjet/gcd.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

#include "crjet/modp.hpp"

namespace crjet {

// ---------------------------------------------------------------- upoly

namespace upoly {

void trim(U& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const U& a) { return int(a.size()) - 1; }

std::uint64_t eval(const U& a, std::uint64_t x, std::uint64_t p) {
    std::uint64_t r = 0;
    for (std::size_t k = a.size(); k-- > 0;) r = add_mod(mul_mod(r, x, p), a[k], p);
    return r;
}

U mul(const U& a, const U& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    U r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

namespace {
// a <- a mod b, quotient in q when requested.
void divmod(U& a, const U& b, U* q, std::uint64_t p) {
    int db = deg(b);
    std::uint64_t inv = inv_mod(b.back(), p);
    if (q) q->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    for (int k = deg(a); k >= db; --k) {
        std::uint64_t c = mul_mod(a[std::size_t(k)], inv, p);
        if (!c) continue;
        if (q) (*q)[std::size_t(k - db)] = c;
        for (int j = 0; j <= db; ++j)
            a[std::size_t(k - db + j)] = sub_mod(a[std::size_t(k - db + j)], mul_mod(c, b[std::size_t(j)], p), p);
    }
    trim(a);
    if (q) trim(*q);
}
} // namespace

U gcd(U a, U b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        divmod(a, b, nullptr, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        std::uint64_t inv = inv_mod(a.back(), p);
        for (auto& c : a) c = mul_mod(c, inv, p);
    }
    return a;
}

bool divide(const U& a, const U& b, U& q, std::uint64_t p) {
    U r = a;
    trim(r);
    if (r.empty()) { q.clear(); return true; }
    if (deg(r) < deg(b)) return false;
    divmod(r, b, &q, p);
    return r.empty();
}

} // namespace upoly

using upoly::U;

namespace {

// ---------------------------------------------------------------- modular multivariate

struct MP {
    int nv = 0;
    std::vector<std::uint32_t> e;
    std::vector<std::uint64_t> c;
    std::size_t size() const { return c.size(); }
    const std::uint32_t* ex(std::size_t i) const { return e.data() + i * std::size_t(nv); }
};

int lexcmp(const std::uint32_t* a, const std::uint32_t* b, int n) {
    for (int i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

void sort_mp(MP& a) {
    std::vector<std::size_t> idx(a.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return lexcmp(a.ex(x), a.ex(y), a.nv) > 0; });
    MP r;
    r.nv = a.nv;
    for (auto i : idx) {
        if (!a.c[i]) continue;
        r.e.insert(r.e.end(), a.ex(i), a.ex(i) + a.nv);
        r.c.push_back(a.c[i]);
    }
    a = std::move(r);
}

void make_monic(MP& a, std::uint64_t p) {
    if (a.size() == 0) return;
    std::uint64_t inv = inv_mod(a.c[0], p);
    for (auto& c : a.c) c = mul_mod(c, inv, p);
}

MP mp_one(int nv) {
    MP r;
    r.nv = nv;
    r.e.assign(std::size_t(nv), 0);
    r.c.push_back(1);
    return r;
}

struct Group {
    std::vector<std::uint32_t> pre;
    U y;
};

std::vector<Group> to_groups(const MP& a) {
    std::vector<Group> g;
    int m = a.nv - 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::uint32_t* x = a.ex(i);
        if (g.empty() || !std::equal(x, x + m, g.back().pre.begin())) {
            g.push_back({std::vector<std::uint32_t>(x, x + m), {}});
        }
        auto k = x[m];
        if (g.back().y.size() <= k) g.back().y.resize(k + 1, 0);
        g.back().y[k] = a.c[i];
    }
    return g;
}

MP from_groups(const std::vector<Group>& g, int nv) {
    MP r;
    r.nv = nv;
    for (auto& gr : g) {
        for (std::size_t k = gr.y.size(); k-- > 0;) {
            if (!gr.y[k]) continue;
            r.e.insert(r.e.end(), gr.pre.begin(), gr.pre.end());
            r.e.push_back(std::uint32_t(k));
            r.c.push_back(gr.y[k]);
        }
    }
    return r;
}

MP eval_last(const std::vector<Group>& g, std::uint64_t alpha, std::uint64_t p) {
    MP r;
    r.nv = g.empty() ? 0 : int(g[0].pre.size());
    for (auto& gr : g) {
        auto v = upoly::eval(gr.y, alpha, p);
        if (!v) continue;
        r.e.insert(r.e.end(), gr.pre.begin(), gr.pre.end());
        r.c.push_back(v);
    }
    return r;
}

struct PreGreater {
    bool operator()(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
        return lexcmp(a.data(), b.data(), int(a.size())) > 0;
    }
};

class NoLuckyPoints : public std::runtime_error {
public:
    NoLuckyPoints() : std::runtime_error("modular gcd: evaluation points exhausted") {}
};

MP gcd_rec(const MP& A, const MP& B, std::uint64_t p, std::mt19937_64& rng) {
    if (A.size() == 0) { MP r = B; make_monic(r, p); return r; }
    if (B.size() == 0) { MP r = A; make_monic(r, p); return r; }
    int nv = A.nv;
    if (nv == 0) return mp_one(0);
    if (nv == 1) {
        U a(A.e[0] + 1, 0), b(B.e[0] + 1, 0);
        for (std::size_t i = 0; i < A.size(); ++i) a[A.e[i]] = A.c[i];
        for (std::size_t i = 0; i < B.size(); ++i) b[B.e[i]] = B.c[i];
        U g = upoly::gcd(a, b, p);
        MP r;
        r.nv = 1;
        for (std::size_t k = g.size(); k-- > 0;)
            if (g[k]) { r.e.push_back(std::uint32_t(k)); r.c.push_back(g[k]); }
        return r;
    }
    auto GA = to_groups(A), GB = to_groups(B);
    auto content = [&](std::vector<Group>& G) {
        U c;
        for (auto& g : G) {
            c = c.empty() ? g.y : upoly::gcd(c, g.y, p);
            if (upoly::deg(c) == 0) break;
        }
        if (c.empty()) c = {1};
        std::uint64_t inv = inv_mod(c.back(), p);
        for (auto& x : c) x = mul_mod(x, inv, p);
        if (upoly::deg(c) > 0) {
            for (auto& g : G) {
                U q;
                upoly::divide(g.y, c, q, p);
                g.y = q;
            }
        }
        return c;
    };
    U cA = content(GA), cB = content(GB);
    U cont = upoly::gcd(cA, cB, p);
    const U& lcA = GA[0].y;
    const U& lcB = GB[0].y;
    U gam = upoly::gcd(lcA, lcB, p);
    int dA = 0, dB = 0;
    for (auto& g : GA) dA = std::max(dA, upoly::deg(g.y));
    for (auto& g : GB) dB = std::max(dB, upoly::deg(g.y));
    int bound = upoly::deg(gam) + std::min(dA, dB);

    std::map<std::vector<std::uint32_t>, U, PreGreater> H;
    U N = {1};
    std::vector<std::uint32_t> lead;
    bool have_lead = false;
    int npts = 0, tries = 0;
    std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
    while (npts <= bound) {
        if (++tries > 20 * (bound + 8)) throw NoLuckyPoints();
        std::uint64_t alpha = dist(rng);
        if (!upoly::eval(lcA, alpha, p) || !upoly::eval(lcB, alpha, p)) continue;
        bool dup = false;
        // Newton needs distinct nodes.
        if (upoly::eval(N, alpha, p) == 0) dup = true;
        if (dup) continue;
        MP Aa = eval_last(GA, alpha, p), Ba = eval_last(GB, alpha, p);
        MP Ga = gcd_rec(Aa, Ba, p, rng);
        bool constant = Ga.size() == 1 && std::all_of(Ga.e.begin(), Ga.e.end(), [](std::uint32_t x) { return x == 0; });
        if (constant) {
            std::vector<Group> g = {{std::vector<std::uint32_t>(std::size_t(nv - 1), 0), cont}};
            MP r = from_groups(g, nv);
            make_monic(r, p);
            return r;
        }
        std::vector<std::uint32_t> pre(Ga.ex(0), Ga.ex(0) + Ga.nv);
        if (have_lead) {
            int c = lexcmp(pre.data(), lead.data(), Ga.nv);
            if (c > 0) continue;
            if (c < 0) {
                H.clear();
                N = {1};
                npts = 0;
                lead = pre;
            }
        } else {
            lead = pre;
            have_lead = true;
        }
        std::uint64_t ga = upoly::eval(gam, alpha, p);
        std::uint64_t invN = inv_mod(upoly::eval(N, alpha, p), p);
        std::map<std::vector<std::uint32_t>, std::uint64_t, PreGreater> vals;
        for (std::size_t i = 0; i < Ga.size(); ++i)
            vals.emplace(std::vector<std::uint32_t>(Ga.ex(i), Ga.ex(i) + Ga.nv), mul_mod(Ga.c[i], ga, p));
        for (auto& kv : vals) H.emplace(kv.first, U{});
        for (auto& kv : H) {
            auto it = vals.find(kv.first);
            std::uint64_t g = it == vals.end() ? 0 : it->second;
            std::uint64_t h = upoly::eval(kv.second, alpha, p);
            std::uint64_t d = mul_mod(sub_mod(g, h, p), invN, p);
            if (!d) continue;
            U& y = kv.second;
            if (y.size() < N.size()) y.resize(N.size(), 0);
            for (std::size_t k = 0; k < N.size(); ++k) y[k] = add_mod(y[k], mul_mod(d, N[k], p), p);
            upoly::trim(y);
        }
        // N <- N * (y - alpha)
        U nn(N.size() + 1, 0);
        for (std::size_t k = 0; k < N.size(); ++k) {
            nn[k + 1] = add_mod(nn[k + 1], N[k], p);
            nn[k] = sub_mod(nn[k], mul_mod(alpha, N[k], p), p);
        }
        N = std::move(nn);
        ++npts;
    }
    std::vector<Group> g;
    for (auto& kv : H)
        if (!kv.second.empty()) g.push_back({kv.first, kv.second});
    U c;
    for (auto& gr : g) {
        c = c.empty() ? gr.y : upoly::gcd(c, gr.y, p);
        if (upoly::deg(c) == 0) break;
    }
    for (auto& gr : g) {
        U q;
        if (upoly::deg(c) > 0) {
            upoly::divide(gr.y, c, q, p);
            gr.y = q;
        }
        gr.y = upoly::mul(gr.y, cont, p);
    }
    MP r = from_groups(g, nv);
    make_monic(r, p);
    return r;
}

// ---------------------------------------------------------------- Q(i) driver

struct VarIndex {
    std::vector<VarKey> vars;
    std::unordered_map<VarKey, int> idx;
};

bool to_mp(const Poly& a, const VarIndex& vi, std::uint64_t p, std::uint64_t s, MP& out) {
    out = MP();
    out.nv = int(vi.vars.size());
    out.e.reserve(a.size() * vi.vars.size());
    for (auto& t : a.terms()) {
        std::uint64_t c;
        try {
            c = gauss_mod(t.c, p, s);
        } catch (const std::domain_error&) {
            return false;
        }
        std::size_t base = out.e.size();
        out.e.resize(base + vi.vars.size(), 0);
        for (auto& f : t.m.factors()) out.e[base + std::size_t(vi.idx.at(f.v))] = f.e;
        out.c.push_back(c);
    }
    sort_mp(out);
    return true;
}

std::map<Monomial, std::uint64_t, bool (*)(const Monomial&, const Monomial&)> make_mono_map() {
    return std::map<Monomial, std::uint64_t, bool (*)(const Monomial&, const Monomial&)>(
        [](const Monomial& a, const Monomial& b) { return grlex_cmp(a, b) > 0; });
}

// Image normalized to graded-lex leading coefficient 1.
using Image = std::map<Monomial, std::uint64_t, bool (*)(const Monomial&, const Monomial&)>;

Image from_mp(const MP& g, const VarIndex& vi, std::uint64_t p) {
    Image im = make_mono_map();
    for (std::size_t i = 0; i < g.size(); ++i) {
        Monomial::Vec f;
        for (int k = 0; k < g.nv; ++k)
            if (g.ex(i)[k]) f.push_back({vi.vars[std::size_t(k)], g.ex(i)[k]});
        im.emplace(Monomial::from_factors(std::move(f)), g.c[i]);
    }
    if (!im.empty()) {
        std::uint64_t inv = inv_mod(im.begin()->second, p);
        for (auto& kv : im) kv.second = mul_mod(kv.second, inv, p);
    }
    return im;
}

bool ratrecon(const mpz_class& u, const mpz_class& M, mpq_class& out) {
    mpz_class bound;
    mpz_class half = M / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = M, r1 = u, t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class tmp = r0 - q * r1;
        r0 = r1; r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1; t1 = tmp;
    }
    if (abs(t1) > bound || t1 == 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return false;
    out = mpq_class(r1, t1);
    out.canonicalize();
    return true;
}

mpz_class crt(const mpz_class& r1, const mpz_class& M, std::uint64_t r2, std::uint64_t p) {
    // x = r1 + M * ((r2 - r1) * M^{-1} mod p)
    std::uint64_t r1p = mpz_fdiv_ui(r1.get_mpz_t(), p);
    std::uint64_t Mp = mpz_fdiv_ui(M.get_mpz_t(), p);
    std::uint64_t k = mul_mod(sub_mod(r2 % p, r1p, p), inv_mod(Mp, p), p);
    return r1 + M * mpz_class((unsigned long)k);
}

std::mt19937_64& gcd_rng() {
    thread_local std::mt19937_64 rng(0x5eed1234abcdULL);
    return rng;
}

// Univariate image of a in variable x at random values of the others.
bool univariate_image(const Poly& a, VarKey x, std::uint64_t p, std::uint64_t s,
                      const std::unordered_map<VarKey, std::uint64_t>& pt, U& out) {
    out.assign(a.degree(x) + 1, 0);
    for (auto& t : a.terms()) {
        std::uint64_t v = gauss_mod(t.c, p, s);
        std::uint32_t k = 0;
        for (auto& f : t.m.factors()) {
            if (f.v == x) k = f.e;
            else v = mul_mod(v, pow_mod(pt.at(f.v), f.e, p), p);
        }
        out[k] = add_mod(out[k], v, p);
    }
    bool full = !out.empty() && out.back() != 0;
    upoly::trim(out);
    return full;
}

GcdParts core_gcd(const Poly& a, const Poly& b);

GcdParts finish(const Poly& a, const Poly& b, Poly g) {
    auto qa = a.divide_exact(g);
    auto qb = b.divide_exact(g);
    if (!qa || !qb) throw std::logic_error("gcd: cofactor division failed");
    return {std::move(g), std::move(*qa), std::move(*qb)};
}

// Both inputs nonzero, free of monomial content.
GcdParts core_gcd(const Poly& a, const Poly& b) {
    if (a.is_constant() || b.is_constant()) return {Poly(1), a, b};
    if (a.size() == b.size() && a.monic() == b.monic()) {
        Poly g = a.monic();
        return {g, Poly(a.lc()), Poly(b.lc())};
    }
    auto va = a.vars(), vb = b.vars();
    std::vector<VarKey> only_a, only_b, common;
    std::set_difference(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(only_a));
    std::set_difference(vb.begin(), vb.end(), va.begin(), va.end(), std::back_inserter(only_b));
    if (!only_a.empty() || !only_b.empty()) {
        // The gcd lives in the shared variables: gcd(a, b) = gcd of b with
        // every coefficient of a in its private variables (and vice versa).
        std::vector<Poly> parts;
        if (!only_a.empty()) for (auto& kv : a.split(only_a)) parts.push_back(kv.second);
        else parts.push_back(a);
        if (!only_b.empty()) for (auto& kv : b.split(only_b)) parts.push_back(kv.second);
        else parts.push_back(b);
        std::sort(parts.begin(), parts.end(), [](const Poly& x, const Poly& y) { return x.size() < y.size(); });
        Poly g = parts[0];
        for (std::size_t k = 1; k < parts.size() && !g.is_constant(); ++k) g = gcd(g, parts[k]);
        if (g.is_constant()) return {Poly(1), a, b};
        return finish(a, b, g.monic());
    }
    VarIndex vi;
    vi.vars = va;
    // Highest-degree variable becomes the univariate base of the recursion.
    std::sort(vi.vars.begin(), vi.vars.end(), [&](VarKey x, VarKey y) {
        auto dx = std::min(a.degree(x), b.degree(x)), dy = std::min(a.degree(y), b.degree(y));
        return dx != dy ? dx > dy : x < y;
    });
    for (std::size_t k = 0; k < vi.vars.size(); ++k) vi.idx[vi.vars[k]] = int(k);

    const auto& primes = prime_table();
    auto& rng = gcd_rng();
    // Coprimality certificate from univariate images.
    {
        std::uint64_t p = primes[1].p, s = primes[1].sqrt_m1;
        std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
        bool all_zero = true, b_divides = true, a_divides = true;
        for (auto x : vi.vars) {
            int got = -1;
            for (int attempt = 0; attempt < 4 && got < 0; ++attempt) {
                std::unordered_map<VarKey, std::uint64_t> pt;
                for (auto y : vi.vars)
                    if (y != x) pt[y] = dist(rng);
                U ua, ub;
                if (!univariate_image(a, x, p, s, pt, ua) || !univariate_image(b, x, p, s, pt, ub)) continue;
                got = upoly::deg(upoly::gcd(ua, ub, p));
            }
            if (got < 0) { all_zero = false; a_divides = b_divides = false; break; }
            if (got > 0) all_zero = false;
            if (std::uint32_t(got) != b.degree(x)) b_divides = false;
            if (std::uint32_t(got) != a.degree(x)) a_divides = false;
        }
        if (all_zero) return {Poly(1), a, b};
        if (b_divides) {
            if (auto q = a.divide_exact(b)) return {b.monic(), *q * Poly(b.lc()), Poly(b.lc())};
        }
        if (a_divides) {
            if (auto q = b.divide_exact(a)) return {a.monic(), Poly(a.lc()), *q * Poly(a.lc())};
        }
    }

    bool real = a.real_coefficients() && b.real_coefficients();
    std::map<Monomial, std::pair<mpz_class, mpz_class>, bool (*)(const Monomial&, const Monomial&)> acc(
        [](const Monomial& x, const Monomial& y) { return grlex_cmp(x, y) > 0; });
    mpz_class M = 0;
    Monomial lead;
    bool have = false;
    std::optional<Poly> last;
    for (std::size_t k = 1; k < primes.size(); ++k) {
        std::uint64_t p = primes[k].p, s = primes[k].sqrt_m1;
        MP A1, B1;
        if (!to_mp(a, vi, p, s, A1) || !to_mp(b, vi, p, s, B1)) continue;
        Image g1, g2 = make_mono_map();
        try {
            g1 = from_mp(gcd_rec(A1, B1, p, rng), vi, p);
            if (!real) {
                MP A2, B2;
                to_mp(a, vi, p, p - s, A2);
                to_mp(b, vi, p, p - s, B2);
                g2 = from_mp(gcd_rec(A2, B2, p, rng), vi, p);
            }
        } catch (const NoLuckyPoints&) {
            continue;
        }
        if (g1.empty()) continue;
        if (!real && (g2.empty() || g2.begin()->first != g1.begin()->first)) continue;
        const Monomial& lm = g1.begin()->first;
        if (lm.is_one()) return {Poly(1), a, b};
        if (have) {
            int c = grlex_cmp(lm, lead);
            if (c > 0) continue;
            if (c < 0) { acc.clear(); M = 0; last.reset(); }
        }
        lead = lm;
        have = true;
        // Residues of real and imaginary parts.
        std::map<Monomial, std::pair<std::uint64_t, std::uint64_t>, bool (*)(const Monomial&, const Monomial&)> res(
            [](const Monomial& x, const Monomial& y) { return grlex_cmp(x, y) > 0; });
        std::uint64_t inv2 = inv_mod(2, p), inv2s = inv_mod(mul_mod(2, s, p), p);
        if (real) {
            for (auto& kv : g1) res[kv.first] = {kv.second, 0};
        } else {
            for (auto& kv : g1) res[kv.first] = {kv.second, 0};
            for (auto& kv : g2) res.emplace(kv.first, std::make_pair(std::uint64_t(0), std::uint64_t(0)));
            for (auto& kv : res) {
                auto i1 = g1.find(kv.first);
                auto i2 = g2.find(kv.first);
                std::uint64_t x1 = i1 == g1.end() ? 0 : i1->second;
                std::uint64_t x2 = i2 == g2.end() ? 0 : i2->second;
                kv.second = {mul_mod(add_mod(x1, x2, p), inv2, p), mul_mod(sub_mod(x1, x2, p), inv2s, p)};
            }
        }
        if (M == 0) {
            for (auto& kv : res) acc[kv.first] = {mpz_class((unsigned long)kv.second.first), mpz_class((unsigned long)kv.second.second)};
            M = mpz_class((unsigned long)p);
        } else {
            for (auto& kv : res) acc.emplace(kv.first, std::make_pair(mpz_class(0), mpz_class(0)));
            for (auto& kv : acc) {
                auto it = res.find(kv.first);
                std::uint64_t r1 = it == res.end() ? 0 : it->second.first;
                std::uint64_t r2 = it == res.end() ? 0 : it->second.second;
                kv.second.first = crt(kv.second.first, M, r1, p);
                kv.second.second = crt(kv.second.second, M, r2, p);
            }
            M *= mpz_class((unsigned long)p);
        }
        // Reconstruct a candidate.
        std::vector<Term> terms;
        bool ok = true;
        for (auto& kv : acc) {
            mpq_class re, im;
            if (!ratrecon(kv.second.first, M, re) || !ratrecon(kv.second.second, M, im)) { ok = false; break; }
            GaussRat c{Rational(re), Rational(im)};
            if (!c.is_zero()) terms.push_back({kv.first, c});
        }
        if (!ok) continue;
        Poly cand = Poly::from_terms(std::move(terms));
        if (last && *last == cand) {
            auto qa = a.divide_exact(cand);
            if (qa) {
                auto qb = b.divide_exact(cand);
                if (qb) return {cand, std::move(*qa), std::move(*qb)};
            }
        }
        last = cand;
    }
    throw std::runtime_error("gcd: modular reconstruction did not converge");
}

} // namespace

GcdParts gcd_cofactors(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return {Poly(), Poly(), Poly()};
    if (a.is_zero()) return {b.monic(), Poly(), Poly(b.lc())};
    if (b.is_zero()) return {a.monic(), Poly(a.lc()), Poly()};
    if (a.is_constant() || b.is_constant()) return {Poly(1), a, b};
    Monomial ma = a.monomial_content(), mb = b.monomial_content();
    Monomial mg = ma.gcd(mb);
    Poly a1 = ma.is_one() ? a : a.div_monomial(ma);
    Poly b1 = mb.is_one() ? b : b.div_monomial(mb);
    GcdParts core = core_gcd(a1, b1);
    GcdParts out;
    out.g = core.g.mul_monomial(mg, GaussRat(1));
    out.ca = core.ca.mul_monomial(ma / mg, GaussRat(1));
    out.cb = core.cb.mul_monomial(mb / mg, GaussRat(1));
    return out;
}

Poly gcd(const Poly& a, const Poly& b) { return gcd_cofactors(a, b).g; }

} // namespace crjet
