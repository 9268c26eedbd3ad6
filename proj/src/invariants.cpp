#include "crjet/invariants.hpp"

#include <json.hpp>

namespace crjet {

std::uint64_t Formula::degree_bound() const {
    std::vector<DegBound> d;
    for (auto& p : pieces) d.push_back({p.num().total_degree(), p.den().total_degree()});
    return degree(d, Ctx<DegBound>{}).num;
}

std::size_t Formula::pieces_size() const {
    std::size_t s = 0;
    for (auto& p : pieces) s += p.size();
    return s;
}

namespace {

void fill(InvariantReport& r, const ZeroVerdict& v) {
    r.zero = v.zero;
    r.exact = v.exact;
    r.confidence = v.confidence;
    r.log2_error = v.log2_error;
    r.trials = v.trials;
    r.prime = v.prime;
    r.witness.clear();
    for (auto& [k, x] : v.witness) r.witness.emplace_back(var_name(k), x);
}

} // namespace

std::string InvariantReport::json(bool with_value) const {
    nlohmann::ordered_json j;
    j["invariant"] = invariant;
    if (with_value && value) j["value_printed"] = value->str();
    j["verdict"] = verdict();
    j["exact"] = exact;
    j["confidence"] = confidence;
    if (!exact) {
        j["log2_error"] = log2_error;
        j["trials"] = trials;
    }
    if (prime) j["prime"] = prime;
    if (!witness.empty()) {
        nlohmann::ordered_json w;
        for (auto& [n, x] : witness) w[n] = x;
        j["witness"] = w;
    }
    if (!note.empty()) j["note"] = note;
    return j.dump(2);
}

InvariantReport report_exact(const std::string& name, const RatExpr& v, const InvariantOptions& opt) {
    InvariantReport r;
    r.invariant = name;
    r.value = v;
    Sampler s(opt.seed);
    if (opt.mode == VerdictMode::Probabilistic) {
        fill(r, is_zero_probabilistic(v, opt.trials, s));
        return r;
    }
    r.zero = v.is_zero();
    r.exact = true;
    r.confidence = 1;
    if (!r.zero) {
        // A sampled point where the value is nonzero, as evidence.
        auto w = is_zero_probabilistic(v, 1, s);
        for (auto& [k, x] : w.witness) r.witness.emplace_back(var_name(k), x);
        r.prime = w.prime;
    }
    return r;
}

InvariantReport evaluate(const Formula& f, const InvariantOptions& opt) {
    bool exact = opt.mode == VerdictMode::Exact ||
                 (opt.mode == VerdictMode::Auto && f.pieces_size() <= opt.term_budget);
    if (exact) {
        InvariantOptions o = opt;
        o.mode = VerdictMode::Exact;
        return report_exact(f.name, f.value(), o);
    }
    InvariantReport r;
    r.invariant = f.name;
    ModEvaluator ev = [&](RandomPoint& pt, std::uint64_t p, std::uint64_t s) -> std::optional<std::uint64_t> {
        std::function<std::uint64_t(VarKey)> val = [&](VarKey k) { return pt(k); };
        std::vector<Fp> xs;
        for (auto& piece : f.pieces) {
            std::uint64_t out = 0;
            if (!piece.eval_mod(p, s, val, out)) return std::nullopt;
            xs.emplace_back(out, p);
        }
        try {
            return f.modular(xs, Ctx<Fp>{p, s}).value();
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    };
    Sampler s(opt.seed);
    fill(r, probabilistic_zero(ev, f.degree_bound(), opt.trials, s));
    if (opt.mode == VerdictMode::Auto) r.note = "pieces exceed the term budget; sampled verdict";
    return r;
}

// ---------------------------------------------------------------- n = 1

namespace {

RatExpr det2(const RatExpr& a, const RatExpr& b, const RatExpr& c, const RatExpr& d) { return a * d - b * c; }

struct ThetaJet {
    const ThetaSurface& S;
    std::map<std::vector<VarKey>, RatExpr> memo;
    RatExpr operator()(std::vector<VarKey> vs) {
        std::sort(vs.begin(), vs.end());
        auto it = memo.find(vs);
        if (it != memo.end()) return it->second;
        RatExpr r = S.theta;
        for (auto v : vs) r = r.diff(v);
        return memo[vs] = r;
    }
};

} // namespace

RatExpr levi_factor_theta(const ThetaSurface& S) {
    if (S.n != 1) throw DimensionOutOfRange("needs n = 1");
    ThetaJet T{S, {}};
    VarKey z = S.z[0], zb = S.zb[0], wb = S.wb;
    return T({zb}) * T({z, wb}) - T({wb}) * T({z, zb});
}

RatExpr sphericity_AJ4(const ThetaSurface& S) {
    if (S.n != 1) throw DimensionOutOfRange("needs n = 1");
    ThetaJet T{S, {}};
    VarKey z = S.z[0], zb = S.zb[0], wb = S.wb;
    RatExpr Tzb = T({zb}), Twb = T({wb}), Tzzb = T({z, zb}), Tzwb = T({z, wb});
    RatExpr D = Tzb * Tzwb - Twb * Tzzb;
    if (D.is_zero()) throw LeviDegenerate();
    RatExpr b1 = T({z, z, zb, zb}) * Twb * Twb * D - RatExpr(2) * T({z, z, zb, wb}) * Tzb * Twb * D +
                 T({z, z, wb, wb}) * Tzb * Tzb * D;
    RatExpr b2 = T({z, z, zb}) * (Tzb * Tzb * det2(Twb, T({wb, wb}), Tzwb, T({z, wb, wb})) -
                                  RatExpr(2) * Tzb * Twb * det2(Twb, T({zb, wb}), Tzwb, T({z, zb, wb})) +
                                  Twb * Twb * det2(Twb, T({zb, zb}), Tzwb, T({z, zb, zb})));
    RatExpr b3 = T({z, z, wb}) * (-Tzb * Tzb * det2(Tzb, T({wb, wb}), Tzzb, T({z, wb, wb})) +
                                  RatExpr(2) * Tzb * Twb * det2(Tzb, T({zb, wb}), Tzzb, T({z, zb, wb})) -
                                  Twb * Twb * det2(Tzb, T({zb, zb}), Tzzb, T({z, zb, zb})));
    return (b1 + b2 + b3) / D.pow(3);
}

RatExpr sphericity_value(const ThetaSurface& S) {
    RatExpr D = levi_factor_theta(S);
    if (D.is_zero()) throw LeviDegenerate();
    RatExpr a = -S.theta.diff(S.wb) / D, b = S.theta.diff(S.zb[0]) / D;
    auto op = [&](const RatExpr& f) { return a * f.diff(S.zb[0]) + b * f.diff(S.wb); };
    return op(op(sphericity_AJ4(S)));
}

InvariantReport sphericity_expression(const ThetaSurface& S, const InvariantOptions& opt) {
    RatExpr v = sphericity_value(S);
    auto r = report_exact("sphericity", v, opt);
    if (!v.is_zero()) {
        // Powers of the Levi factor and of Theta_wb left in the reduced denominator.
        auto power = [&](const RatExpr& f) {
            int e = 0;
            Poly d = v.den();
            if (f.is_constant()) return 0;
            while (auto q = d.divide_exact(f.num())) {
                d = std::move(*q);
                ++e;
            }
            return e;
        };
        r.note = "denominator powers: levi " + std::to_string(power(levi_factor_theta(S))) + ", theta_wb " +
                 std::to_string(power(S.theta.diff(S.wb)));
    }
    return r;
}

// ---------------------------------------------------------------- n >= 2

BorderedMinorSet bordered_minors(const ThetaSurface& S) {
    int n = S.n;
    std::vector<VarKey> tb = S.zb;
    tb.push_back(S.wb);
    ThetaJet T{S, {}};
    Matrix<RatExpr> base(n + 1, std::vector<RatExpr>(n + 1));
    for (int j = 0; j <= n; ++j) {
        base[0][j] = T({tb[j]});
        for (int i = 0; i < n; ++i) base[1 + i][j] = T({S.z[i], tb[j]});
    }
    BorderedMinorSet B;
    B.n = n;
    B.delta = determinant(base);
    B.zero_col.assign(n + 1, std::vector<RatExpr>(n));
    for (int mu = 0; mu <= n; ++mu)
        for (int l = 0; l < n; ++l) {
            auto m = base;
            for (int r = 0; r <= n; ++r) m[r][mu] = RatExpr(r == 1 + l ? 1 : 0);
            B.zero_col[mu][l] = determinant(m);
        }
    B.tt_col.assign(n + 1, std::vector<std::vector<RatExpr>>(n + 1, std::vector<RatExpr>(n + 1)));
    for (int tau = 0; tau <= n; ++tau)
        for (int mu = 0; mu <= n; ++mu)
            for (int nu = mu; nu <= n; ++nu) {
                auto m = base;
                m[0][tau] = T({tb[mu], tb[nu]});
                for (int i = 0; i < n; ++i) m[1 + i][tau] = T({S.z[i], tb[mu], tb[nu]});
                B.tt_col[tau][mu][nu] = B.tt_col[tau][nu][mu] = determinant(m);
            }
    return B;
}

std::map<TensorIndex, RatExpr> pseudosphericity_tensor(const ThetaSurface& S) {
    int n = S.n;
    if (n < 2) throw DimensionOutOfRange("needs n >= 2");
    auto B = bordered_minors(S);
    if (B.delta.is_zero()) throw LeviDegenerate();
    std::vector<VarKey> tb = S.zb;
    tb.push_back(S.wb);
    ThetaJet T{S, {}};
    // Q[a][b][mu][nu] = Delta Theta_{z_a z_b tb_mu tb_nu} - sum_tau Delta^tau Theta_{z_a z_b tb_tau}
    auto Q = [&](int a, int b, int mu, int nu) {
        RatExpr q = B.delta * T({S.z[a], S.z[b], tb[mu], tb[nu]});
        for (int tau = 0; tau <= n; ++tau) q -= B.tt_col[tau][mu][nu] * T({S.z[a], S.z[b], tb[tau]});
        return q;
    };
    std::map<std::array<int, 4>, RatExpr> qmemo;
    auto Qm = [&](int a, int b, int mu, int nu) {
        if (a > b) std::swap(a, b);
        if (mu > nu) std::swap(mu, nu);
        std::array<int, 4> key{a, b, mu, nu};
        auto it = qmemo.find(key);
        if (it != qmemo.end()) return it->second;
        return qmemo[key] = Q(a, b, mu, nu);
    };
    // Bl(l1, l2; a, b) = sum_{mu,nu} Delta^mu_[0_{1+l1}] Delta^nu_[0_{1+l2}] Q(a, b; mu, nu)
    std::map<std::array<int, 4>, RatExpr> bmemo;
    auto Bl = [&](int l1, int l2, int a, int b) {
        std::array<int, 4> key{l1, l2, std::min(a, b), std::max(a, b)};
        auto it = bmemo.find(key);
        if (it != bmemo.end()) return it->second;
        RatExpr s;
        for (int mu = 0; mu <= n; ++mu)
            for (int nu = 0; nu <= n; ++nu) {
                RatExpr c = B.zero_col[mu][l1] * B.zero_col[nu][l2];
                if (!c.is_zero()) s += c * Qm(a, b, mu, nu);
            }
        return bmemo[key] = s;
    };
    RatExpr cn2 = RatExpr(GaussRat(Rational(1, n + 2)));
    RatExpr cn12 = RatExpr(GaussRat(Rational(1, (n + 1) * (n + 2))));
    RatExpr D3 = B.delta.pow(3);
    std::map<TensorIndex, RatExpr> out;
    for (int k1 = 0; k1 < n; ++k1)
        for (int k2 = 0; k2 < n; ++k2)
            for (int l1 = 0; l1 < n; ++l1)
                for (int l2 = 0; l2 < n; ++l2) {
                    RatExpr s = Bl(l1, l2, k1, k2);
                    for (int lp = 0; lp < n; ++lp) {
                        if (k1 == l1) s -= cn2 * Bl(lp, l2, lp, k2);
                        if (k1 == l2) s -= cn2 * Bl(l1, lp, lp, k2);
                        if (k2 == l1) s -= cn2 * Bl(lp, l2, k1, lp);
                        if (k2 == l2) s -= cn2 * Bl(l1, lp, k1, lp);
                    }
                    int dd = (k1 == l1 && k2 == l2) + (k2 == l1 && k1 == l2);
                    if (dd) {
                        RatExpr t;
                        for (int lp = 0; lp < n; ++lp)
                            for (int lq = 0; lq < n; ++lq) t += Bl(lp, lq, lp, lq);
                        s += cn12 * RatExpr(dd) * t;
                    }
                    out[{k1 + 1, k2 + 1, l1 + 1, l2 + 1}] = s / D3;
                }
    return out;
}

InvariantReport pseudosphericity_verdict(const ThetaSurface& S, const InvariantOptions& opt) {
    auto t = pseudosphericity_tensor(S);
    InvariantReport all;
    all.invariant = "pseudosphericity";
    all.zero = true;
    all.exact = true;
    all.confidence = 1;
    for (auto& [idx, v] : t) {
        auto r = report_exact("component", v, opt);
        if (!r.zero) {
            r.invariant = "pseudosphericity";
            r.note = "first nonzero component (" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                     std::to_string(idx[2]) + "," + std::to_string(idx[3]) + ")";
            return r;
        }
        if (!r.exact) {
            all.exact = false;
            all.confidence = std::min(all.confidence, r.confidence);
            all.log2_error = std::max(all.log2_error, r.log2_error);
            all.trials = r.trials;
            all.prime = r.prime;
        }
    }
    all.note = std::to_string(t.size()) + " components";
    return all;
}

// ---------------------------------------------------------------- Class I

namespace {

void require_class1(const GraphedCR& M) {
    if (M.n != 1 || M.c != 1) throw DimensionOutOfRange("needs n = 1, c = 1");
}

RatExpr ga() { return RatExpr::var("a"); }
RatExpr gab() { return RatExpr::var("ab"); }
RatExpr gb() { return RatExpr::var("b"); }

} // namespace

RatExpr class1_P(const GraphedCR& M) {
    require_class1(M);
    RatExpr ell = levi_factor_ell(M);
    if (ell.is_zero()) throw LeviDegenerate();
    const RatExpr& A = M.A()[0][0];
    return (M.L()[0].apply(ell) - ell * A.diff(M.u[0])) / ell;
}

Formula class1_frakI_formula(const GraphedCR& M) {
    RatExpr Pb = class1_P(M).conj();
    const VectorField& L = M.L()[0];
    const VectorField& Lb = M.Lbar()[0];
    RatExpr LPb = L.apply(Pb), LbPb = Lb.apply(Pb);
    RatExpr LbLPb = Lb.apply(LPb), LLbPb = L.apply(LbPb);
    std::vector<RatExpr> pieces = {Pb,    LPb,  LbPb, LbLPb, LLbPb, Lb.apply(LLbPb), Lb.apply(LbLPb),
                                   ga(), gab()};
    return make_formula("frakI", std::move(pieces), [](const auto& p, const auto& c) {
        auto& Pb = p[0];
        auto s = c.c(-2) * p[5] + c.c(3) * p[6] - c.c(7) * Pb * p[3] + c.c(4) * Pb * p[4] - p[1] * p[2] +
                 c.c(2) * Pb * Pb * p[1];
        return c.c(1, 6) * s / (p[7] * p[8] * p[8] * p[8]);
    });
}

RatExpr class1_frakI(const GraphedCR& M) { return class1_frakI_formula(M).value(); }

RatExpr class1_frakT(const GraphedCR& M) {
    RatExpr Ib = class1_frakI(M).conj();
    RatExpr Pb = class1_P(M).conj();
    return (M.Lbar()[0].apply(Ib) - Pb * Ib) / gab() - RatExpr::I() * gb() / (ga() * gab()) * Ib;
}

RatExpr at_identity(const RatExpr& e) {
    return e.substitute({{var("a"), RatExpr(1)}, {var("ab"), RatExpr(1)}, {var("b"), RatExpr(0)}, {var("bb"), RatExpr(0)}});
}

// ---------------------------------------------------------------- Class IV2

IV2Data class4_data(const GraphedCR& M) {
    if (M.n != 2 || M.c != 1) throw DimensionOutOfRange("needs n = 2, c = 1");
    IV2Data d;
    d.L1 = M.L()[0];
    d.L1bar = M.Lbar()[0];
    d.k = freeman_slant_k(M).k;
    d.K = d.k * M.L()[0] + M.L()[1];
    d.ell = levi_matrix(M)[0][0];
    d.T = d.ell * VectorField::coordinate(M.chart(), M.u[0]);
    const RatExpr& A1 = M.A()[0][0];
    d.P = (d.L1.apply(d.ell) - d.ell * A1.diff(M.u[0])) / d.ell;
    return d;
}

Formula class4_W_formula(const GraphedCR& M) {
    auto d = class4_data(M);
    RatExpr a = d.L1bar.apply(d.k);
    if (a.is_zero()) throw FreemanDegenerate();
    RatExpr lkb = d.L1.apply(d.k.conj());
    RatExpr Lba = d.L1bar.apply(a);
    std::vector<RatExpr> pieces = {a,   d.L1.apply(a), lkb, d.L1.apply(lkb), Lba, d.K.apply(a), d.K.apply(Lba),
                                   d.T.apply(d.k)};
    return make_formula("W", std::move(pieces), [](const auto& p, const auto& c) {
        auto& a = p[0];
        return c.c(2, 3) * p[1] / a + c.c(2, 3) * p[3] / p[2] + c.c(1, 3) * p[4] * p[5] / (a * a * a) -
               c.c(1, 3) * p[6] / (a * a) + c.c(1, 3) * c.i() * p[7] / a;
    });
}

Formula class4_J_formula(const GraphedCR& M) {
    auto d = class4_data(M);
    if (d.L1bar.apply(d.k).is_zero()) throw FreemanDegenerate();
    RatExpr l1 = d.L1.apply(d.k.conj());
    RatExpr l2 = d.L1.apply(l1), l3 = d.L1.apply(l2), l4 = d.L1.apply(l3);
    RatExpr LP = d.L1.apply(d.P);
    std::vector<RatExpr> pieces = {l1, l2, l3, l4, d.P, LP, d.L1.apply(LP)};
    return make_formula("J", std::move(pieces), [](const auto& p, const auto& c) {
        auto &l1 = p[0], &l2 = p[1], &l3 = p[2], &l4 = p[3], &P = p[4], &LP = p[5], &LLP = p[6];
        return c.c(5, 18) * l2 * l2 / (l1 * l1) + c.c(1, 3) * P * LP - c.c(1, 9) * P * P * l2 / l1 +
               c.c(20, 27) * l2 * l2 * l2 / (l1 * l1 * l1) - c.c(5, 6) * l2 * l3 / (l1 * l1) +
               c.c(1, 6) * l2 * LP / l1 - c.c(1, 6) * P * l3 / l1 - c.c(2, 27) * P * P * P - c.c(1, 6) * LLP +
               c.c(1, 6) * l4 / l1;
    });
}

std::pair<InvariantReport, InvariantReport> class4_WJ(const GraphedCR& M, const InvariantOptions& opt) {
    return {evaluate(class4_W_formula(M), opt), evaluate(class4_J_formula(M), opt)};
}

// ---------------------------------------------------------------- Class III1

Class31 class31_fundamental(const GraphedCR& M) {
    if (M.n != 1 || M.c != 3) throw DimensionOutOfRange("needs n = 1, c = 3");
    Class31 r;
    r.L = M.L()[0];
    r.Lbar = M.Lbar()[0];
    r.T = RatExpr::I() * lie_bracket(r.L, r.Lbar);
    r.S = lie_bracket(r.L, r.T);
    r.Sbar = lie_bracket(r.Lbar, r.T);
    FrameStructure F({r.Sbar, r.S, r.T, r.Lbar, r.L});
    r.S_L = F.decompose(lie_bracket(r.S, r.L));
    r.S_Lbar = F.decompose(lie_bracket(r.S, r.Lbar));
    r.Sbar_L = F.decompose(lie_bracket(r.Sbar, r.L));
    r.S_T = F.decompose(lie_bracket(r.S, r.T));
    r.R = -r.S_L[0];
    r.Q = -r.S_L[1];
    r.P = -r.S_L[2];
    r.B = -r.S_Lbar[1];
    r.A = -r.S_Lbar[2];
    r.G = -r.S_T[0];
    r.F = -r.S_T[1];
    r.E = -r.S_T[2];
    const RatExpr &P = r.P, &Q = r.Q, &R = r.R, &A = r.A, &B = r.B;
    RatExpr Bb = B.conj(), Pb = P.conj(), Rb = R.conj(), Qb = Q.conj();
    RatExpr i = RatExpr::I();
    r.E_rpl = i * (r.L.apply(A) - r.Lbar.apply(P) + A * Bb + B * P - A * Q - Pb * R);
    r.F_rpl = i * (r.L.apply(B) - r.Lbar.apply(Q) + A + B * Bb - R * Rb);
    r.G_rpl = i * (r.L.apply(Bb) - r.Lbar.apply(R) + Bb * Bb + B * R - P - Bb * Q - R * Qb);
    return r;
}

// ---------------------------------------------------------------- Egregium

RatExpr gauss_intrinsic(const MetricTriple& m, VarKey u, VarKey v) {
    const RatExpr &E = m.E, &F = m.F, &G = m.G;
    RatExpr W = E * G - F * F;
    if (W.is_zero()) throw DegenerateMetric();
    RatExpr Eu = E.diff(u), Ev = E.diff(v), Fu = F.diff(u), Fv = F.diff(v), Gu = G.diff(u), Gv = G.diff(v);
    RatExpr two(2), four(4);
    RatExpr brace = E * (Ev * Gv - two * Fu * Gv + Gu * Gu) +
                    F * (Eu * Gv - Ev * Gu - two * Ev * Fv + four * Fu * Fv - two * Fu * Gu) +
                    G * (Eu * Gu - two * Eu * Fv + Ev * Ev) -
                    two * W * (E.diff(v).diff(v) - two * F.diff(u).diff(v) + G.diff(u).diff(u));
    // The braced expression is four times the curvature numerator.
    return brace / (four * W * W);
}

EgregiumResult egregium_check(const MetricTriple& m) {
    EgregiumResult r;
    r.intrinsic = gauss_intrinsic(m, var("u"), var("v"));
    return r;
}

EgregiumResult egregium_check_parametric(const RatExpr& x, const RatExpr& y, const RatExpr& z) {
    VarKey u = var("u"), v = var("v");
    std::array<RatExpr, 3> r{x, y, z}, ru, rv, ruu, ruv, rvv;
    for (int k = 0; k < 3; ++k) {
        ru[k] = r[k].diff(u);
        rv[k] = r[k].diff(v);
        ruu[k] = ru[k].diff(u);
        ruv[k] = ru[k].diff(v);
        rvv[k] = rv[k].diff(v);
    }
    auto dot = [](const std::array<RatExpr, 3>& a, const std::array<RatExpr, 3>& b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    std::array<RatExpr, 3> N{ru[1] * rv[2] - ru[2] * rv[1], ru[2] * rv[0] - ru[0] * rv[2], ru[0] * rv[1] - ru[1] * rv[0]};
    MetricTriple m{dot(ru, ru), dot(ru, rv), dot(rv, rv)};
    EgregiumResult res;
    res.intrinsic = gauss_intrinsic(m, u, v);
    RatExpr W = m.E * m.G - m.F * m.F;
    RatExpr l = dot(ruu, N), mm = dot(ruv, N), n = dot(rvv, N);
    res.extrinsic = (l * n - mm * mm) / (W * W);
    res.equal = res.intrinsic == *res.extrinsic;
    return res;
}

EgregiumResult egregium_check_graph(const RatExpr& phi) {
    VarKey x = var("x"), y = var("y");
    RatExpr px = phi.diff(x), py = phi.diff(y);
    MetricTriple m{RatExpr(1) + px * px, px * py, RatExpr(1) + py * py};
    EgregiumResult r;
    r.intrinsic = gauss_intrinsic(m, x, y);
    RatExpr den = RatExpr(1) + px * px + py * py;
    r.extrinsic = (px.diff(x) * py.diff(y) - px.diff(y) * px.diff(y)) / (den * den);
    r.equal = r.intrinsic == *r.extrinsic;
    return r;
}

} // namespace crjet
