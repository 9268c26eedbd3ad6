#include "crjet/crgeom.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>

namespace crjet {

namespace {

std::vector<std::string> indexed(const std::string& base, int k) {
    if (k == 1) return {base};
    std::vector<std::string> out;
    for (int i = 1; i <= k; ++i) out.push_back(base + std::to_string(i));
    return out;
}

std::vector<VarKey> keys(const std::vector<std::string>& names) {
    std::vector<VarKey> out;
    for (auto& s : names) out.push_back(var(s));
    return out;
}

std::vector<VarKey> conj_keys(const std::vector<VarKey>& ks) {
    std::vector<VarKey> out;
    for (auto k : ks) out.push_back(VarTable::global().conj(k));
    return out;
}

// True when every variable of f is a chart coordinate or a formal symbol
// of a function whose arguments are chart coordinates.
bool lives_on(const RatExpr& f, const std::vector<VarKey>& chart, VarKey* bad = nullptr) {
    auto on = [&](VarKey a) { return std::find(chart.begin(), chart.end(), a) != chart.end(); };
    for (auto v : f.vars()) {
        bool ok = on(v);
        if (!ok && kind_of(v) == VarKind::Formal) {
            auto& fn = VarTable::global().function(VarTable::global().formal_fn(v));
            ok = std::all_of(fn.args.begin(), fn.args.end(), on);
        }
        if (!ok) {
            if (bad) *bad = v;
            return false;
        }
    }
    return true;
}

bool vanishes_at_origin(const RatExpr& f, const std::vector<VarKey>& vs) {
    std::map<VarKey, RatExpr> zero;
    for (auto v : vs) zero[v] = RatExpr(0);
    return f.substitute(zero).is_zero();
}

} // namespace

std::vector<std::string> holomorphic_names(int n) { return indexed("z", n); }
std::vector<std::string> parameter_names(int c) { return indexed("u", c); }
std::vector<std::string> ambient_names(int c) { return indexed("w", c); }

struct GraphedCR::Frame {
    std::vector<std::vector<RatExpr>> A;
    std::vector<VectorField> L, Lbar;
    RatExpr det;
};

GraphedCR GraphedCR::create(int n, int c, std::vector<RatExpr> phi, bool centered, std::string name) {
    if (n < 1 || c < 1) throw DimensionOutOfRange("need n >= 1 and c >= 1");
    if (int(phi.size()) != c) throw SizeMismatch("expected " + std::to_string(c) + " graphing functions");
    GraphedCR M;
    M.n = n;
    M.c = c;
    M.name = std::move(name);
    M.z = keys(holomorphic_names(n));
    M.zb = conj_keys(M.z);
    M.u = keys(parameter_names(c));
    std::map<VarKey, RatExpr> cx;
    auto xs = indexed("x", n), ys = indexed("y", n);
    for (int i = 0; i < n; ++i) {
        RatExpr zi = RatExpr::var(M.z[i]), zbi = RatExpr::var(M.zb[i]);
        cx[var(xs[i])] = (zi + zbi) / RatExpr(2);
        cx[var(ys[i])] = (zi - zbi) / (RatExpr(2) * RatExpr::I());
    }
    auto chart = M.chart();
    for (int j = 0; j < c; ++j) {
        phi[j] = phi[j].substitute(cx);
        VarKey bad = 0;
        if (!lives_on(phi[j], chart, &bad))
            throw std::invalid_argument("graphing function uses '" + var_name(bad) + "' outside the chart");
        if (phi[j].conj() != phi[j]) throw NotReal("graphing function " + std::to_string(j + 1) + " is not real-valued");
    }
    if (centered) {
        for (auto& f : phi) {
            if (!vanishes_at_origin(f, chart)) throw std::invalid_argument("centered graph must vanish at 0");
            for (auto v : chart)
                if (!vanishes_at_origin(f.diff(v), chart))
                    throw std::invalid_argument("centered graph must have zero differential at 0");
        }
    }
    M.phi = std::move(phi);
    return M;
}

GraphedCR GraphedCR::formal(int n, int c, const std::string& fname, bool rigid) {
    auto zs = holomorphic_names(n);
    std::vector<std::string> args = zs;
    for (auto& s : zs) args.push_back(var_name(VarTable::global().conj(var(s))));
    if (!rigid)
        for (auto& s : parameter_names(c)) args.push_back(s);
    std::vector<RatExpr> phi;
    for (auto& f : indexed(fname, c)) {
        int idx = VarTable::global().declare_function(f, args, true);
        phi.push_back(RatExpr::var(VarTable::global().formal(idx, MultiIndex{})));
    }
    return create(n, c, std::move(phi), false, "formal");
}

Chart GraphedCR::chart() const {
    Chart ch = z;
    ch.insert(ch.end(), zb.begin(), zb.end());
    ch.insert(ch.end(), u.begin(), u.end());
    return ch;
}

GraphedCR GraphedCR::permuted(const std::vector<int>& perm) const {
    if (int(perm.size()) != n) throw SizeMismatch("permutation length");
    std::map<VarKey, RatExpr> sub;
    for (int i = 0; i < n; ++i) {
        sub[z[perm[i]]] = RatExpr::var(z[i]);
        sub[zb[perm[i]]] = RatExpr::var(zb[i]);
    }
    std::vector<RatExpr> p;
    for (auto& f : phi) p.push_back(f.substitute(sub));
    return create(n, c, std::move(p), false, name);
}

const GraphedCR::Frame& GraphedCR::frame() const {
    if (frame_) return *frame_;
    auto F = std::make_shared<Frame>();
    Matrix<RatExpr> m(c, std::vector<RatExpr>(c));
    for (int j = 0; j < c; ++j)
        for (int l = 0; l < c; ++l) m[j][l] = phi[j].diff(u[l]) + (j == l ? RatExpr::I() : RatExpr(0));
    F->det = determinant(m);
    if (F->det.is_zero()) throw NotCRGeneric();
    Chart ch = chart();
    for (int i = 0; i < n; ++i) {
        std::vector<RatExpr> rhs;
        for (int j = 0; j < c; ++j) rhs.push_back(-phi[j].diff(z[i]));
        std::vector<RatExpr> Ai;
        for (int l = 0; l < c; ++l) {
            auto ml = m;
            for (int j = 0; j < c; ++j) ml[j][l] = rhs[j];
            Ai.push_back(c == 1 ? rhs[0] / F->det : determinant(ml) / F->det);
        }
        VectorField Li = VectorField::coordinate(ch, z[i]);
        for (int l = 0; l < c; ++l) Li.set(u[l], Ai[l]);
        F->A.push_back(std::move(Ai));
        F->Lbar.push_back(Li.conj());
        F->L.push_back(std::move(Li));
    }
    frame_ = F;
    return *frame_;
}

const std::vector<std::vector<RatExpr>>& GraphedCR::A() const { return frame().A; }
const std::vector<VectorField>& GraphedCR::L() const { return frame().L; }
const std::vector<VectorField>& GraphedCR::Lbar() const { return frame().Lbar; }
const RatExpr& GraphedCR::genericity_determinant() const { return frame().det; }

ThetaSurface ThetaSurface::create(int n, RatExpr theta) {
    if (n < 1) throw DimensionOutOfRange("need n >= 1");
    ThetaSurface S;
    S.n = n;
    S.z = keys(holomorphic_names(n));
    S.zb = conj_keys(S.z);
    S.w = var("w");
    S.wb = VarTable::global().conj(S.w);
    std::vector<VarKey> ch = S.z;
    ch.insert(ch.end(), S.zb.begin(), S.zb.end());
    ch.push_back(S.wb);
    VarKey bad = 0;
    if (!lives_on(theta, ch, &bad)) throw std::invalid_argument("Theta uses '" + var_name(bad) + "' outside (z, zb, wb)");
    auto tw = theta.diff(S.wb);
    if (tw.is_zero()) throw std::invalid_argument("Theta_wb vanishes identically");
    std::map<VarKey, RatExpr> zero;
    for (auto v : ch) zero[v] = RatExpr(0);
    bool vanishes = false;
    try {
        vanishes = tw.substitute(zero).is_zero();
    } catch (const ZeroDenominator&) {
        vanishes = true;
    }
    if (vanishes) throw std::invalid_argument("Theta_wb vanishes at the reference point");
    S.theta = std::move(theta);
    return S;
}

std::vector<VectorField> crgeneric_frame(const GraphedCR& M) { return M.L(); }

Matrix<RatExpr> levi_matrix(const GraphedCR& M) {
    if (M.c != 1) throw DimensionOutOfRange("Levi matrix is implemented for hypersurfaces (c = 1)");
    auto& L = M.L();
    auto& Lb = M.Lbar();
    auto& A = M.A();
    Matrix<RatExpr> m(M.n, std::vector<RatExpr>(M.n));
    for (int i = 0; i < M.n; ++i)
        for (int j = 0; j < M.n; ++j)
            m[i][j] = RatExpr::I() * (L[i].apply(A[j][0].conj()) - Lb[j].apply(A[i][0]));
    return m;
}

RatExpr levi_factor_ell(const GraphedCR& M) {
    if (M.n != 1 || M.c != 1) throw DimensionOutOfRange("Levi factor needs n = 1, c = 1");
    return levi_matrix(M)[0][0];
}

RatExpr levi_determinant(const GraphedCR& M) {
    if (M.n != 2 || M.c != 1) throw DimensionOutOfRange("Levi determinant needs n = 2, c = 1");
    return determinant(levi_matrix(M));
}

namespace {

void require_m5(const GraphedCR& M) {
    if (M.n != 2 || M.c != 1) throw DimensionOutOfRange("needs n = 2, c = 1");
}

} // namespace

FreemanSlant freeman_slant_k(const GraphedCR& M) {
    require_m5(M);
    auto& L = M.L();
    auto& Lb = M.Lbar();
    RatExpr A1 = M.A()[0][0], A2 = M.A()[1][0];
    RatExpr L1Ab1 = L[0].apply(A1.conj()), Lb1A1 = Lb[0].apply(A1);
    RatExpr top = L1Ab1 - Lb1A1;
    if (top.is_zero()) throw TopLeftLeviZero();
    FreemanSlant r;
    RatExpr L2Ab1 = L[1].apply(A1.conj()), Lb1A2 = Lb[0].apply(A2);
    r.k = -(L2Ab1 - Lb1A2) / top;
    if (levi_determinant(M).is_zero()) {
        r.alternates_checked = true;
        if (!L1Ab1.is_zero() && !Lb1A1.is_zero()) {
            r.k_from_L = -L2Ab1 / L1Ab1;
            r.k_from_Lbar = -Lb1A2 / Lb1A1;
            r.alternates_agree = r.k_from_L == r.k && r.k_from_Lbar == r.k;
        }
    }
    return r;
}

VectorField freeman_bracket(const GraphedCR& M) {
    auto k = freeman_slant_k(M).k;
    VectorField K = k * M.L()[0] + M.L()[1];
    return lie_bracket(K, M.Lbar()[0]);
}

RatExpr freeman_form(const GraphedCR& M) {
    require_m5(M);
    if (generic_matrix_rank(levi_matrix(M)).rank != 1) throw RankNotOne();
    auto k = freeman_slant_k(M).k;
    return M.Lbar()[0].apply(k);
}

std::pair<GraphedCR, std::vector<int>> levi_adapted_permutation(const GraphedCR& M) {
    if (M.c != 1) throw DimensionOutOfRange("Levi matrix is implemented for hypersurfaces (c = 1)");
    std::vector<int> perm(M.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        GraphedCR P = M.permuted(perm);
        auto& L = P.L();
        auto& Lb = P.Lbar();
        RatExpr A1 = P.A()[0][0];
        if (!(L[0].apply(A1.conj()) - Lb[0].apply(A1)).is_zero()) return {P, perm};
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw TopLeftLeviZero();
}

std::string to_string(ClassKind k) {
    switch (k) {
        case ClassKind::I: return "I";
        case ClassKind::II: return "II";
        case ClassKind::III1: return "III1";
        case ClassKind::III2: return "III2";
        case ClassKind::IV1: return "IV1";
        case ClassKind::IV2: return "IV2";
        case ClassKind::LeviFlat: return "LeviFlat";
        case ClassKind::DegenerateProduct: return "DegenerateProduct";
        case ClassKind::HullDeficient: return "HullDeficient";
        case ClassKind::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

std::string ClassLabel::name() const {
    if (kind == ClassKind::Unclassified) return "Unclassified(" + reason + ")";
    return to_string(kind);
}

namespace {

struct Ranker {
    std::uint64_t seed;
    ClassLabel& out;
    std::size_t operator()(const std::string& what, const std::vector<VectorField>& f) {
        auto r = generic_rank(f, seed);
        out.evidence.push_back({what, r.rank, r.exact});
        return r.rank;
    }
};

// Labels a manifold whose explicit bracket tests failed by its full hull rank.
ClassLabel by_hull(const GraphedCR& M, ClassLabel lab, std::uint64_t seed) {
    std::vector<VectorField> gens = M.L();
    for (auto& X : M.Lbar()) gens.push_back(X);
    auto h = lie_hull(gens, M.c + 2, seed);
    std::size_t r = h.levels.back().rank;
    lab.evidence.push_back({"Lie hull rank", r, false});
    std::size_t full = std::size_t(2 * M.n + M.c);
    if (r == std::size_t(2 * M.n)) lab.kind = ClassKind::LeviFlat;
    else if (r < full) lab.kind = ClassKind::HullDeficient;
    else {
        lab.kind = ClassKind::Unclassified;
        lab.reason = "hull completes only through longer brackets";
    }
    return lab;
}

} // namespace

ClassLabel classify(const GraphedCR& M, std::uint64_t seed) {
    if (M.n < 1 || M.c < 1 || 2 * M.n + M.c > 5)
        throw DimensionOutOfRange("classification covers 2n + c <= 5");
    ClassLabel lab;
    Ranker rank{seed, lab};
    if (M.n == 2) {
        auto r = generic_matrix_rank(levi_matrix(M), seed);
        lab.evidence.push_back({"Levi matrix rank", r.rank, r.exact});
        if (r.rank == 0) lab.kind = ClassKind::LeviFlat;
        else if (r.rank == 2) lab.kind = ClassKind::IV1;
        else {
            auto P = levi_adapted_permutation(M).first;
            bool zero = freeman_form(P).is_zero();
            lab.evidence.push_back({"Freeman form nonzero", zero ? 0u : 1u, true});
            lab.kind = zero ? ClassKind::DegenerateProduct : ClassKind::IV2;
        }
        return lab;
    }
    const VectorField& L = M.L()[0];
    const VectorField& Lb = M.Lbar()[0];
    VectorField T = lie_bracket(L, Lb);
    std::size_t r1 = rank("{L, Lb, [L,Lb]}", {L, Lb, T});
    if (M.c == 1) {
        lab.kind = r1 == 3 ? ClassKind::I : ClassKind::LeviFlat;
        return lab;
    }
    if (r1 == 2) return by_hull(M, lab, seed);
    VectorField S = lie_bracket(L, T), Sb = lie_bracket(Lb, T);
    if (M.c == 2) {
        if (rank("{L, Lb, T, [L,T], [Lb,T]}", {L, Lb, T, S, Sb}) == 4) {
            lab.kind = ClassKind::II;
            return lab;
        }
        return by_hull(M, lab, seed);
    }
    std::size_t r2 = rank("{L, Lb, T, [L,T]}", {L, Lb, T, S});
    if (r2 == 4 && rank("{L, Lb, T, [L,T], [Lb,T]}", {L, Lb, T, S, Sb}) == 5) {
        lab.kind = ClassKind::III1;
        return lab;
    }
    if (r2 == 4 && rank("{L, Lb, T, [L,T], [L,[L,T]]}", {L, Lb, T, S, lie_bracket(L, S)}) == 5) {
        lab.kind = ClassKind::III2;
        return lab;
    }
    return by_hull(M, lab, seed);
}

RatExpr class_iii2_condition(const GraphedCR& M) {
    if (M.n != 1 || M.c != 3) throw DimensionOutOfRange("needs n = 1, c = 3");
    const VectorField& L = M.L()[0];
    const VectorField& Lb = M.Lbar()[0];
    Matrix<RatExpr> m(3, std::vector<RatExpr>(3));
    for (int j = 0; j < 3; ++j) {
        const RatExpr& A = M.A()[0][j];
        RatExpr Ab = A.conj();
        RatExpr LAb = L.apply(Ab), LbA = Lb.apply(A);
        m[0][j] = LAb - LbA;
        m[1][j] = L.apply(LAb) - RatExpr(2) * L.apply(LbA) + Lb.apply(L.apply(A));
        m[2][j] = -Lb.apply(LbA) + RatExpr(2) * Lb.apply(LAb) - L.apply(Lb.apply(Ab));
    }
    return determinant(m);
}

Chart ambient_chart(const GraphedCR& M) {
    Chart ch = M.z;
    for (auto& s : ambient_names(M.c)) ch.push_back(var(s));
    return ch;
}

std::vector<RatExpr> tangency_defect(const VectorField& X, const GraphedCR& M) {
    Chart amb = ambient_chart(M);
    if (X.chart() != amb) throw ChartMismatch();
    std::vector<VarKey> w(amb.begin() + M.n, amb.end()), wb = conj_keys(w);
    std::map<VarKey, RatExpr> to_w, to_m;
    for (int j = 0; j < M.c; ++j) {
        RatExpr wj = RatExpr::var(w[j]), wbj = RatExpr::var(wb[j]);
        to_w[M.u[j]] = (wj + wbj) / RatExpr(2);
        RatExpr uj = RatExpr::var(M.u[j]), ip = RatExpr::I() * M.phi[j];
        to_m[w[j]] = uj + ip;
        to_m[wb[j]] = uj - ip;
    }
    VectorField Xb = X.conj();
    std::vector<RatExpr> out;
    for (int j = 0; j < M.c; ++j) {
        RatExpr F = (RatExpr::var(w[j]) - RatExpr::var(wb[j])) / (RatExpr(2) * RatExpr::I()) - M.phi[j].substitute(to_w);
        out.push_back((X.apply(F) + Xb.apply(F)).substitute(to_m));
    }
    return out;
}

bool verify_infinitesimal_automorphism(const VectorField& X, const GraphedCR& M) {
    for (auto& d : tangency_defect(X, M))
        if (!d.is_zero()) return false;
    return true;
}

namespace {

struct ModelDef {
    const char* name;
    int n, c;
    std::vector<const char*> phi;
};

const std::vector<ModelDef>& models() {
    static const std::vector<ModelDef> m = {
        {"model-I", 1, 1, {"z*zb"}},
        {"model-II", 1, 2, {"z*zb", "z^2*zb + z*zb^2"}},
        {"model-III1", 1, 3, {"z*zb", "z^2*zb + z*zb^2", "i*(z^2*zb - z*zb^2)"}},
        {"model-III2", 1, 3, {"z*zb", "z^2*zb + z*zb^2", "2*z^3*zb + 2*z*zb^3 + 3*z^2*zb^2"}},
        {"model-IV1", 2, 1, {"z1*zb1 + z2*zb2"}},
        {"model-IV2", 2, 1, {"(z1*zb1 + (1/2)*z1^2*zb2 + (1/2)*z2*zb1^2)/(1 - z2*zb2)"}},
    };
    return m;
}

} // namespace

std::vector<std::string> manifold_preset_names() {
    std::vector<std::string> out;
    for (auto& m : models()) out.push_back(m.name);
    out.push_back("cubic");
    out.push_back("light-cone");
    return out;
}

GraphedCR manifold_preset(const std::string& name) {
    if (name == "cubic") {
        // The generator list below is tangent to this sign of v3; the
        // printed Model III1 sign is its image under w3 -> -w3.
        std::vector<RatExpr> phi = {parse("z*zb"), parse("z^2*zb + z*zb^2"), parse("-i*(z^2*zb - z*zb^2)")};
        return GraphedCR::create(1, 3, std::move(phi), true, name);
    }
    // The light cone is the Class IV2 model graphed over (z1, z2, u).
    const std::string& want = name == "light-cone" ? models().back().name : name;
    for (auto& m : models()) {
        if (want != m.name) continue;
        std::vector<RatExpr> phi;
        for (auto s : m.phi) phi.push_back(parse(s));
        return GraphedCR::create(m.n, m.c, std::move(phi), true, name);
    }
    throw std::out_of_range("unknown manifold preset '" + name + "'");
}

std::vector<std::string> theta_preset_names() {
    return {"heisenberg", "heisenberg-perturbed", "pseudo-sphere-<n>-<k>"};
}

ThetaSurface theta_preset(const std::string& name) {
    if (name == "heisenberg") return ThetaSurface::create(1, parse("wb + 2*i*z*zb"));
    if (name == "heisenberg-perturbed") return ThetaSurface::create(1, parse("wb + 2*i*z*zb + z^2*zb^2"));
    const std::string pre = "pseudo-sphere-";
    if (name.rfind(pre, 0) == 0) {
        int n = 0, k = 0;
        if (std::sscanf(name.c_str() + pre.size(), "%d-%d", &n, &k) == 2 && n >= 1 && k >= 0 && k <= n) {
            auto zs = holomorphic_names(n);
            std::string s = "wb + 2*i*(0";
            for (int j = 0; j < n; ++j) {
                std::string zb = var_name(VarTable::global().conj(var(zs[j])));
                s += (j < k ? " - " : " + ") + zs[j] + "*" + zb;
            }
            return ThetaSurface::create(n, parse(s + ")"));
        }
    }
    throw std::out_of_range("unknown theta preset '" + name + "'");
}

std::vector<std::pair<std::string, VectorField>> cubic_model_generators() {
    Chart ch = make_chart({"z", "w1", "w2", "w3"});
    std::vector<std::pair<std::string, const char*>> defs = {
        {"T", "d/dw1"},
        {"S1", "d/dw2"},
        {"S2", "d/dw3"},
        {"L1", "d/dz + (2*i*z) d/dw1 + (2*i*z^2 + 4*w1) d/dw2 + (2*z^2) d/dw3"},
        {"L2", "i d/dz + (2*z) d/dw1 + (2*z^2) d/dw2 - (2*i*z^2 - 4*w1) d/dw3"},
        {"D", "z d/dz + (2*w1) d/dw1 + (3*w2) d/dw2 + (3*w3) d/dw3"},
        {"R", "(i*z) d/dz - w3 d/dw2 + w2 d/dw3"},
    };
    std::vector<std::pair<std::string, VectorField>> out;
    for (auto& [n, t] : defs) out.emplace_back(n, parse_field(ch, t));
    return out;
}

namespace {

struct Block {
    std::map<std::string, Token> entries;
};

Block read_block(const std::string& text, const std::string& head) {
    Lexer lx(text);
    std::string h = lx.expect_ident();
    if (h != head) throw ParseError("expected '" + head + "'", 0);
    lx.expect_sym("{");
    Block b;
    while (!lx.accept_sym("}")) {
        auto key = lx.expect_ident();
        lx.expect_sym("=");
        Token v = lx.next();
        if (v.kind == Token::End || v.kind == Token::Sym) throw ParseError("expected a value", v.pos);
        if (!b.entries.emplace(key, v).second) throw ParseError("duplicate key '" + key + "'", v.pos);
        lx.expect_sym(";");
    }
    if (lx.peek().kind != Token::End) throw ParseError("trailing input", lx.peek().pos);
    return b;
}

int int_entry(const Block& b, const std::string& key) {
    auto it = b.entries.find(key);
    if (it == b.entries.end()) throw ParseError("missing '" + key + "'", 0);
    if (it->second.kind != Token::Number) throw ParseError("'" + key + "' must be an integer", it->second.pos);
    return std::stoi(it->second.text);
}

RatExpr expr_entry(const Token& t) {
    if (t.kind != Token::String) throw ParseError("expected a quoted expression", t.pos);
    return parse(t.text);
}

} // namespace

GraphedCR parse_manifold(const std::string& text) {
    auto b = read_block(text, "manifold");
    int n = int_entry(b, "n"), c = int_entry(b, "c");
    if (n < 1 || c < 1 || n > 8 || c > 8) throw DimensionOutOfRange("n and c must lie in 1..8");
    std::vector<RatExpr> phi;
    for (int j = 1; j <= c; ++j) {
        auto it = b.entries.find("phi" + std::to_string(j));
        if (it == b.entries.end() && c == 1) it = b.entries.find("phi");
        if (it == b.entries.end()) throw ParseError("missing 'phi" + std::to_string(j) + "'", 0);
        phi.push_back(expr_entry(it->second));
    }
    bool centered = false;
    if (auto it = b.entries.find("centered"); it != b.entries.end()) centered = it->second.text == "true";
    std::string name;
    if (auto it = b.entries.find("name"); it != b.entries.end()) name = it->second.text;
    return GraphedCR::create(n, c, std::move(phi), centered, name);
}

ThetaSurface parse_theta(const std::string& text) {
    auto b = read_block(text, "theta");
    int n = int_entry(b, "n");
    auto it = b.entries.find("theta");
    if (it == b.entries.end()) throw ParseError("missing 'theta'", 0);
    return ThetaSurface::create(n, expr_entry(it->second));
}

} // namespace crjet
