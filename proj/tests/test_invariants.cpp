#include "doctest.h"

#include "crjet/invariants.hpp"

using namespace crjet;

namespace {

ThetaSurface theta(int n, const std::string& s) { return ThetaSurface::create(n, R(s)); }

// Image of w = Theta(z, zb, wb) under w -> w/(1 - w), z fixed.
ThetaSurface moebius_image(const ThetaSurface& S) {
    RatExpr wb = RatExpr::var(S.wb);
    RatExpr t = S.theta.substitute({{S.wb, wb / (RatExpr(1) + wb)}});
    return ThetaSurface::create(S.n, t / (RatExpr(1) - t));
}

} // namespace

TEST_CASE("Heisenberg sphericity") {
    auto H = theta_preset("heisenberg");
    CHECK(sphericity_AJ4(H).is_zero());
    auto r = sphericity_expression(H);
    CHECK(r.zero);
    CHECK(r.exact);
    auto N = theta_preset("heisenberg-perturbed");
    auto rn = sphericity_expression(N);
    CHECK_FALSE(rn.zero);
    CHECK_FALSE(rn.witness.empty());
}

TEST_CASE("sphericity is invariant under rational biholomorphisms") {
    std::vector<ThetaSurface> images;
    auto H = theta_preset("heisenberg");
    images.push_back(moebius_image(H));
    images.push_back(theta(1, "wb + z^2 - zb^2 + 2*i*z*zb")); // w -> w + z^2
    images.push_back(moebius_image(images.back()));
    InvariantOptions prob;
    prob.mode = VerdictMode::Probabilistic;
    prob.seed = 11;
    for (auto& S : images) {
        auto r = sphericity_expression(S, prob);
        CHECK(r.zero);
        CHECK(r.log2_error <= -40);
        CHECK(sphericity_value(S).is_zero());
    }
}

TEST_CASE("AJ4 denominator divides levi^3 * theta_wb^2 for formal Theta") {
    VarTable::global().declare_function("Theta", {"z", "zb", "wb"}, false);
    auto S = ThetaSurface::create(1, R("Theta"));
    RatExpr aj = sphericity_AJ4(S);
    RatExpr D = levi_factor_theta(S);
    RatExpr bound = D.pow(3) * R("Theta_wb").pow(2);
    CHECK(bound.num().divide_exact(aj.den()).has_value());
}

TEST_CASE("pseudo-sphericity of the quadrics") {
    for (auto sg : {"+", "-"})
        for (auto sg2 : {"+", "-"}) {
            auto S = theta(2, std::string("wb + 2*i*(") + sg + "z1*zb1 " + sg2 + " z2*zb2)");
            auto t = pseudosphericity_tensor(S);
            CHECK(t.size() == 16);
            for (auto& [k, v] : t) CHECK(v.is_zero());
            CHECK(pseudosphericity_verdict(S).zero);
        }
    auto P = theta(2, "wb + 2*i*(z1*zb1 + z2*zb2) + z1^2*zb1^2*zb2");
    auto t = pseudosphericity_tensor(P);
    bool any = false;
    for (auto& [k, v] : t) any = any || !v.is_zero();
    CHECK(any);
    for (auto& [k, v] : t) {
        CHECK(v == t.at({k[1], k[0], k[2], k[3]}));
        CHECK(v == t.at({k[0], k[1], k[3], k[2]}));
    }
    CHECK_FALSE(pseudosphericity_verdict(P).zero);
}

TEST_CASE("bordered minors are symmetric") {
    auto B = bordered_minors(theta(2, "wb + 2*i*(z1*zb1 + z2*zb2) + z1^2*zb1^2*zb2 + z2*zb2^2*wb"));
    for (int t = 0; t < 3; ++t)
        for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) CHECK(B.tt_col[t][m][n] == B.tt_col[t][n][m]);
}

TEST_CASE("class I fundamental function") {
    CHECK(class1_P(manifold_preset("model-I")).is_zero());
    auto Rg = GraphedCR::formal(1, 1, "psi", true);
    CHECK(class1_P(Rg) == R("psi_zzzb") / R("psi_zzb"));

    auto F = GraphedCR::formal(1, 1, "phi");
    const auto& L = F.L()[0];
    VectorField T = RatExpr::I() * lie_bracket(L, F.Lbar()[0]);
    auto c = decompose_in_frame(lie_bracket(L, T), {T, F.Lbar()[0], L});
    CHECK(c[0] == class1_P(F));
    CHECK(c[1].is_zero());
    CHECK(c[2].is_zero());
}

TEST_CASE("class I primary invariant, rigid expansion") {
    auto Rg = GraphedCR::formal(1, 1, "psi", true);
    RatExpr l = R("psi_zzb");
    RatExpr e = R("psi_zzzbzbzbzb") / l - RatExpr(6) * R("psi_zzzbzbzb*psi_zzbzb") / l.pow(2) -
                R("psi_zzbzbzbzb*psi_zzzb") / l.pow(2) - RatExpr(4) * R("psi_zzbzbzb*psi_zzzbzb") / l.pow(2) +
                RatExpr(10) * R("psi_zzbzbzb*psi_zzzb*psi_zzbzb") / l.pow(3) +
                RatExpr(15) * R("psi_zzbzb^2*psi_zzzbzb") / l.pow(3) -
                RatExpr(15) * R("psi_zzbzb^3*psi_zzzb") / l.pow(4);
    RatExpr want = e / (RatExpr(6) * R("a*ab^3"));
    CHECK((class1_frakI(Rg) - want).is_zero());
}

TEST_CASE("class I invariants on samples") {
    auto M = manifold_preset("model-I");
    CHECK(class1_frakI(M).is_zero());
    CHECK(class1_frakT(M).is_zero());
    auto N = GraphedCR::create(1, 1, {R("z*zb + z^2*zb^2")});
    RatExpr I = class1_frakI(N);
    CHECK_FALSE(I.is_zero());
    auto rep = report_exact("frakI", I);
    CHECK_FALSE(rep.witness.empty());
    RatExpr t = at_identity(class1_frakT(N));
    RatExpr Ib = at_identity(I).conj();
    RatExpr Pb = class1_P(N).conj();
    CHECK(t == N.Lbar()[0].apply(Ib) - Pb * Ib);
    InvariantOptions prob;
    prob.mode = VerdictMode::Probabilistic;
    CHECK_FALSE(evaluate(class1_frakI_formula(N), prob).zero);
    CHECK(evaluate(class1_frakI_formula(M), prob).zero);
}

TEST_CASE("light cone invariants W and J") {
    auto M = manifold_preset("model-IV2");
    InvariantOptions prob;
    prob.mode = VerdictMode::Probabilistic;
    prob.seed = 7;
    auto [W, J] = class4_WJ(M, prob);
    CHECK(W.zero);
    CHECK(J.zero);
    CHECK(W.log2_error <= -40);
    CHECK(J.log2_error <= -40);
    CHECK(W.confidence >= 1 - std::exp2(-40));
    InvariantOptions ex;
    ex.mode = VerdictMode::Exact;
    auto [We, Je] = class4_WJ(M, ex);
    CHECK(We.zero);
    CHECK(Je.zero);

    CHECK_THROWS_AS(class4_W_formula(GraphedCR::create(2, 1, {R("z1*zb1")})), FreemanDegenerate);

    auto Pt = GraphedCR::create(2, 1, {R("(z1*zb1 + (1/2)*z1^2*zb2 + (1/2)*z2*zb1^2)/(1 - z2*zb2) + (1/7)*z1^2*zb1^2")});
    auto [Wp, Jp] = class4_WJ(Pt, prob);
    CHECK((!Wp.zero || !Jp.zero));
    CHECK((!Wp.witness.empty() || !Jp.witness.empty()));
}

TEST_CASE("class III1 structure on the cubic model") {
    auto c = class31_fundamental(manifold_preset("cubic"));
    CHECK(c.S_Lbar[0] == -c.B.conj());
    CHECK(c.Sbar_L[0] == c.S_Lbar[0]);
    CHECK(c.Sbar_L[1] == c.S_Lbar[1]);
    CHECK(c.Sbar_L[2] == c.S_Lbar[2]);
    for (int k = 3; k < 5; ++k) {
        CHECK(c.S_L[k].is_zero());
        CHECK(c.S_Lbar[k].is_zero());
        CHECK(c.S_T[k].is_zero());
    }
    CHECK(c.E == c.E_rpl);
    CHECK(c.F == c.F_rpl);
    CHECK(c.G == c.G_rpl);
    auto d = class31_fundamental(manifold_preset("model-III1"));
    CHECK(d.E == d.E_rpl);
    CHECK(d.F == d.F_rpl);
    CHECK(d.G == d.G_rpl);
}

TEST_CASE("Theorema Egregium") {
    auto p = egregium_check_graph(RatExpr(0));
    CHECK(p.intrinsic.is_zero());
    CHECK(p.equal);
    auto q = egregium_check_graph(R("x^2 + y^2"));
    CHECK(q.equal);
    CHECK(q.intrinsic.substitute({{var("x"), RatExpr(0)}, {var("y"), RatExpr(0)}}) == RatExpr(4));
    VarTable::global().declare_function("h", {"x", "y"}, true);
    auto f = egregium_check_graph(R("h"));
    CHECK(f.equal);
    RatExpr den = R("1 + h_x^2 + h_y^2");
    CHECK(f.intrinsic * den.pow(2) == R("h_xx*h_yy - h_xy^2"));
    // Printed first-power denominator is not an identity.
    CHECK(f.intrinsic != R("h_xx*h_yy - h_xy^2") / den);
    auto s = egregium_check_parametric(R("u"), R("v"), R("u^3 - v^2*u"));
    CHECK(s.equal);
    auto m = egregium_check({R("1"), R("0"), R("u^2")});
    CHECK(m.intrinsic == RatExpr(0));
    CHECK_THROWS_AS(egregium_check({R("1"), R("1"), R("1")}), DegenerateMetric);
}
