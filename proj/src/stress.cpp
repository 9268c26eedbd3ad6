#include "crjet/stress.hpp"

#include <chrono>
#include <map>
#include <set>

#include <json.hpp>

#include "crjet/invariants.hpp"

namespace crjet {

namespace {

long long choose(int n, int k) {
    long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

GaussRat ipow(int e) {
    static const GaussRat cyc[4] = {GaussRat(1), GaussRat::I(), GaussRat(-1), -GaussRat::I()};
    return cyc[((e % 4) + 4) % 4];
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Real and imaginary parts of a polynomial whose variables are all
// self-conjugate.
std::pair<Poly, Poly> re_im(const Poly& p) {
    std::vector<Term> re, im;
    for (auto& t : p.terms()) {
        if (!t.c.re.is_zero()) re.push_back({t.m, GaussRat(t.c.re)});
        if (!t.c.im.is_zero()) im.push_back({t.m, GaussRat(t.c.im)});
    }
    return {Poly::from_sorted(std::move(re)), Poly::from_sorted(std::move(im))};
}

} // namespace

TNumerators class31_T_numerators(const GraphedCR& M) {
    if (M.n != 1 || M.c != 3) throw DimensionOutOfRange("T numerators need n = 1, c = 3");
    for (auto& f : M.phi)
        if (!f.is_polynomial()) throw std::invalid_argument("T numerators need polynomial graphing functions");
    const int c = 3;
    Matrix<RatExpr> D(c, std::vector<RatExpr>(c));
    for (int j = 0; j < c; ++j)
        for (int k = 0; k < c; ++k) D[j][k] = M.phi[j].diff(M.u[k]) + (j == k ? RatExpr::I() : RatExpr(0));
    TNumerators out;
    out.delta = determinant(D, RatExpr(1)).num();
    Poly delb = out.delta.conj();
    std::vector<Poly> lam, lamb;
    for (int k = 0; k < c; ++k) {
        auto Dk = D;
        for (int j = 0; j < c; ++j) Dk[j][k] = -M.phi[j].diff(M.z[0]);
        lam.push_back(determinant(Dk, RatExpr(1)).num());
        lamb.push_back(lam.back().conj());
    }
    // Delta * L and Deltabar * Lbar keep everything polynomial.
    auto DL = [&](const Poly& f) {
        Poly r = out.delta * f.diff(M.z[0]);
        for (int j = 0; j < c; ++j) r += lam[std::size_t(j)] * f.diff(M.u[std::size_t(j)]);
        return r;
    };
    auto DLb = [&](const Poly& f) {
        Poly r = delb * f.diff(M.zb[0]);
        for (int j = 0; j < c; ++j) r += lamb[std::size_t(j)] * f.diff(M.u[std::size_t(j)]);
        return r;
    };
    for (int k = 0; k < c; ++k) {
        Poly a = DL(lamb[std::size_t(k)]) * delb - lamb[std::size_t(k)] * DL(delb);
        Poly b = DLb(lam[std::size_t(k)]) * out.delta - lam[std::size_t(k)] * DLb(out.delta);
        out.upsilon.push_back((out.delta * a - delb * b).scale(GaussRat::I()));
    }
    return out;
}

Poly expand_substitution(const Poly& p, const std::unordered_map<VarKey, Poly>& sub) {
    std::map<std::pair<VarKey, std::uint32_t>, Poly> powers;
    auto power = [&](VarKey v, std::uint32_t e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        return powers.emplace(key, sub.at(v).pow(e)).first->second;
    };
    Poly out;
    std::vector<Term> pending;
    auto flush = [&] {
        out += Poly::from_terms(std::move(pending));
        pending.clear();
        if (out.size() > TermBudget::limit())
            throw BudgetExceeded("term budget exceeded (" + std::to_string(out.size()) + " terms)");
    };
    for (auto& t : p.terms()) {
        Monomial rest;
        Poly prod(t.c);
        for (auto& f : t.m.factors()) {
            if (sub.count(f.v))
                prod *= power(f.v, f.e);
            else
                rest = rest * Monomial::of(f.v, f.e);
        }
        for (auto& s : prod.terms()) pending.push_back({s.m * rest, s.c});
        if (pending.size() > (1u << 20)) flush();
    }
    flush();
    return out;
}

Poly to_real_partials(const Poly& p, const GraphedCR& M, const std::string& prefix) {
    if (M.n != 1) throw DimensionOutOfRange("real partials are implemented for n = 1");
    auto& vt = VarTable::global();
    std::vector<std::string> args = {"x", "y"};
    for (auto u : M.u) args.push_back(var_name(u));
    std::map<int, int> fn_map;
    for (std::size_t j = 0; j < M.phi.size(); ++j) {
        auto vs = M.phi[j].num().vars();
        if (vs.size() != 1 || kind_of(vs[0]) != VarKind::Formal)
            throw std::invalid_argument("real partials need underived formal graphing functions");
        std::string name = M.c == 1 ? prefix : prefix + std::to_string(j + 1);
        fn_map[vt.formal_fn(vs[0])] = vt.declare_function(name, args, true);
    }
    std::unordered_map<VarKey, Poly> sub;
    for (auto v : p.vars()) {
        if (kind_of(v) != VarKind::Formal) continue;
        auto it = fn_map.find(vt.formal_fn(v));
        if (it == fn_map.end()) continue;
        auto al = vt.formal_alpha(v);
        int a = al[0], b = al[1];
        // d/dz = (d/dx - i d/dy)/2 and d/dzb = (d/dx + i d/dy)/2.
        std::vector<Term> ts;
        for (int q1 = 0; q1 <= a; ++q1)
            for (int q2 = 0; q2 <= b; ++q2) {
                GaussRat cf =
                    GaussRat(Rational(choose(a, q1) * choose(b, q2), 1LL << (a + b))) * ipow(b - q2) * ipow(q1 - a);
                MultiIndex m{};
                m[0] = std::uint8_t(q1 + q2);
                m[1] = std::uint8_t(a - q1 + b - q2);
                for (int k = 2; k < kMaxFormalArgs; ++k) m[std::size_t(k)] = al[std::size_t(k)];
                ts.push_back({Monomial::of(vt.formal(it->second, m)), cf});
            }
        sub[v] = Poly::from_terms(std::move(ts));
    }
    return expand_substitution(p, sub);
}

std::string MonomialCountReport::json() const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["completed"] = completed;
    j["counts"] = counts;
    j["expected"] = expected;
    j["matches"] = matches();
    j["term_budget"] = budget;
    j["seconds"] = seconds;
    j["note"] = note;
    return j.dump(2);
}

MonomialCountReport upsilon_monomial_count(std::size_t term_budget) {
    MonomialCountReport r;
    r.name = "Upsilon numerators of T on M^5 in C^4";
    r.expected = {41964};
    r.budget = term_budget;
    auto t0 = std::chrono::steady_clock::now();
    try {
        TermBudget b(term_budget);
        auto M = GraphedCR::formal(1, 3, "phi");
        auto T = class31_T_numerators(M);
        std::size_t total = 0;
        std::string per;
        bool real = true;
        for (auto& u : T.upsilon) {
            Poly ur = to_real_partials(u, M, "rphi");
            real = real && ur.real_coefficients();
            total += ur.size();
            per += (per.empty() ? "" : ", ") + std::to_string(ur.size());
        }
        r.counts = {total};
        r.completed = true;
        r.note = "per numerator in real partials: " + per + "; in (z, zb) partials each has " +
                 std::to_string(T.upsilon[0].size()) + " terms" + (real ? "" : "; real coefficients FAILED");
        std::set<VarKey> vs;
        for (auto& u : T.upsilon)
            for (auto v : u.vars()) vs.insert(v);
        r.note += "; " + std::to_string(vs.size()) + " variables";
    } catch (const BudgetExceeded& e) {
        r.note = e.what();
    }
    r.seconds = since(t0);
    return r;
}

MonomialCountReport class1_delta_monomial_count(std::size_t term_budget) {
    MonomialCountReport r;
    r.name = "real and imaginary numerators of the Class I invariant";
    r.expected = {1553198, 1634457};
    r.budget = term_budget;
    auto t0 = std::chrono::steady_clock::now();
    try {
        TermBudget b(term_budget);
        auto M = GraphedCR::formal(1, 1, "phi");
        // At a = 1 the invariant is 4 (Delta_1 + i Delta_4).
        RatExpr I = at_identity(class1_frakI(M));
        // The smallest denominator multiplier making the denominator real,
        // computed in (z, zb) partials where conjugation is cheap.
        auto parts = gcd_cofactors(I.den(), I.den().conj());
        Poly dd = I.den() * parts.cb;
        GaussRat lc = dd.lc();
        GaussRat inv = GaussRat(1) / lc;
        Poly num = to_real_partials((I.num() * parts.cb).scale(inv), M, "rphi");
        Poly den = to_real_partials(dd.scale(inv), M, "rphi");
        if (!den.real_coefficients()) throw std::logic_error("denominator did not become real");
        auto [nre, nim] = re_im(num);
        r.counts = {nre.size(), nim.size()};
        r.completed = true;
        r.note = "(z, zb) partials: numerator " + std::to_string(I.num().size()) + " terms, denominator " +
                 std::to_string(I.den().size()) + "; real numerator before splitting " + std::to_string(num.size()) +
                 " terms in " + std::to_string(num.vars().size()) + " variables over a real denominator of " +
                 std::to_string(den.size()) + " terms, multiplier " + parts.cb.str();
    } catch (const BudgetExceeded& e) {
        r.note = e.what();
    }
    r.seconds = since(t0);
    return r;
}

} // namespace crjet
