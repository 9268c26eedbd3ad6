#include "doctest.h"

#include "crjet/crgeom.hpp"

using namespace crjet;

namespace {

GraphedCR graph(int n, int c, std::vector<std::string> phi) {
    std::vector<RatExpr> p;
    for (auto& s : phi) p.push_back(R(s));
    return GraphedCR::create(n, c, std::move(p));
}

} // namespace

TEST_CASE("frame of v = z zb") {
    auto M = graph(1, 1, {"z*zb"});
    auto L = crgeneric_frame(M);
    REQUIRE(L.size() == 1);
    CHECK(L[0].coeff_of(var("z")) == RatExpr(1));
    CHECK(L[0].coeff_of(var("u")) == R("i*zb"));
    CHECK(L[0].coeff_of(var("zb")).is_zero());
    CHECK(levi_factor_ell(M) == RatExpr(2));
}

TEST_CASE("real coordinates are complexified") {
    auto M = graph(1, 1, {"x^2 + y^2"});
    CHECK(M.phi[0] == R("z*zb"));
    CHECK_THROWS_AS(graph(1, 1, {"i*z*zb"}), NotReal);
    CHECK_THROWS_AS(GraphedCR::create(1, 1, {R("z*zb + z + zb")}, true), std::invalid_argument);
}

TEST_CASE("formal frame coefficient") {
    auto M = GraphedCR::formal(2, 1, "psi");
    CHECK(M.A()[0][0] == -R("psi_z1") / (RatExpr::I() + R("psi_u")));
    CHECK(M.A()[1][0] == -R("psi_z2") / (RatExpr::I() + R("psi_u")));
}

TEST_CASE("frame denominators divide the genericity determinant") {
    for (auto name : {"model-II", "model-III1", "model-IV1"}) {
        auto M = manifold_preset(name);
        auto det = M.genericity_determinant();
        for (auto& row : M.A())
            for (auto& a : row) CHECK(det.num().divide_exact(a.den()).has_value());
    }
    auto N = graph(1, 2, {"z*zb*(1 + u1*u2)", "z*zb*u1 + z^2*zb + z*zb^2"});
    for (auto& a : N.A()[0]) CHECK(N.genericity_determinant().num().divide_exact(a.den()).has_value());
    auto F = GraphedCR::formal(1, 2, "chi");
    for (auto& a : F.A()[0]) CHECK(F.genericity_determinant().num().divide_exact(a.den()).has_value());
}

TEST_CASE("Levi factor universal formula") {
    auto M = GraphedCR::formal(1, 1, "phi");
    RatExpr brace = R("2*phi_zzb + 2*phi_zzb*phi_u^2 - 2*i*phi_zb*phi_zu - 2*phi_zb*phi_zu*phi_u"
                      " + 2*i*phi_z*phi_zbu + 2*phi_z*phi_zb*phi_uu - 2*phi_z*phi_zbu*phi_u");
    RatExpr pre = RatExpr(1) / ((R("i + phi_u")).pow(2) * (R("-i + phi_u")).pow(2));
    CHECK((levi_factor_ell(M) - pre * brace).is_zero());

    auto Rg = GraphedCR::formal(1, 1, "rho", true);
    CHECK(levi_factor_ell(Rg) == RatExpr(2) * R("rho_zzb"));
}

TEST_CASE("Levi matrix examples") {
    auto M = graph(2, 1, {"z1*zb1 + z2*zb2"});
    auto m = levi_matrix(M);
    CHECK(m[0][0] == RatExpr(2));
    CHECK(m[1][1] == RatExpr(2));
    CHECK(m[0][1].is_zero());
    CHECK(levi_determinant(M) == RatExpr(4));
    auto Z = graph(2, 1, {"0"});
    for (auto& r : levi_matrix(Z))
        for (auto& e : r) CHECK(e.is_zero());

    auto F = GraphedCR::formal(2, 1, "psi");
    auto lf = levi_matrix(F);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(lf[i][j].conj() == lf[j][i]);

    auto Rg = GraphedCR::formal(2, 1, "omega", true);
    auto lr = levi_matrix(Rg);
    std::vector<std::string> zs = {"z1", "z2"}, zbs = {"zb1", "zb2"};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(lr[i][j] == RatExpr(2) * R("omega_" + zs[i] + zbs[j]));
}

TEST_CASE("light cone: degenerate Levi form, slant quotients, Freeman form") {
    auto M = manifold_preset("model-IV2");
    CHECK(levi_determinant(M).is_zero());
    CHECK(generic_matrix_rank(levi_matrix(M)).rank == 1);
    auto k = freeman_slant_k(M);
    CHECK(k.alternates_checked);
    CHECK(k.alternates_agree);
    CHECK_FALSE(freeman_form(M).is_zero());
    auto B = freeman_bracket(M);
    CHECK(B.coeff_of(var("z2")).is_zero());
    CHECK(B.coeff_of(var("zb1")).is_zero());
    CHECK(B.coeff_of(var("zb2")).is_zero());
}

TEST_CASE("Freeman slant on rigid and product samples") {
    auto Rg = GraphedCR::formal(2, 1, "kappa", true);
    CHECK(freeman_slant_k(Rg).k == -R("kappa_z2zb1") / R("kappa_z1zb1"));
    auto P = graph(2, 1, {"z1*zb1"});
    CHECK(freeman_slant_k(P).k.is_zero());
    CHECK(freeman_form(P).is_zero());
    auto Q = graph(2, 1, {"(z1*zb1 + z1^2*zb1 + z1*zb1^2)/(1 + u^2)"});
    CHECK(freeman_form(Q).is_zero());
    CHECK_THROWS_AS(freeman_form(graph(2, 1, {"z1*zb1 + z2*zb2"})), RankNotOne);
    CHECK_THROWS_AS(freeman_slant_k(graph(2, 1, {"z2*zb2"})), TopLeftLeviZero);
    auto [S, perm] = levi_adapted_permutation(graph(2, 1, {"z2*zb2"}));
    CHECK(perm == std::vector<int>{1, 0});
    CHECK(S.phi[0] == R("z1*zb1"));
}

TEST_CASE("random rigid rank-one samples: slant quotients coincide") {
    // phi = |f(z1, z2)|^2 has Levi rank 1 for holomorphic f.
    const char* fs[] = {"z1 + z2^2", "z1 + z1*z2 + z2^3", "z1^2 + 3*z2"};
    for (auto f : fs) {
        RatExpr h = R(f);
        auto M = GraphedCR::create(2, 1, {h * h.conj()});
        if (levi_determinant(M).is_zero()) {
            auto k = freeman_slant_k(M);
            CHECK(k.alternates_agree);
            CHECK(freeman_form(M).is_zero());
        }
    }
}

TEST_CASE("classification of the bundled models") {
    std::vector<std::pair<std::string, ClassKind>> want = {
        {"model-I", ClassKind::I},       {"model-II", ClassKind::II},   {"model-III1", ClassKind::III1},
        {"model-III2", ClassKind::III2}, {"model-IV1", ClassKind::IV1}, {"model-IV2", ClassKind::IV2},
    };
    for (auto& [n, k] : want) {
        auto lab = classify(manifold_preset(n));
        CHECK_MESSAGE(lab.kind == k, n << " -> " << lab.name());
        CHECK_FALSE(lab.evidence.empty());
    }
    CHECK(classify(graph(1, 1, {"0"})).kind == ClassKind::LeviFlat);
    CHECK(classify(graph(1, 2, {"0", "0"})).kind == ClassKind::LeviFlat);
    CHECK(classify(graph(1, 3, {"0", "0", "0"})).kind == ClassKind::LeviFlat);
    CHECK(classify(graph(2, 1, {"0"})).kind == ClassKind::LeviFlat);
    CHECK(classify(graph(1, 2, {"z*zb", "0"})).kind == ClassKind::HullDeficient);
    CHECK(classify(graph(2, 1, {"z1*zb1"})).kind == ClassKind::DegenerateProduct);
    CHECK_THROWS_AS(classify(graph(2, 2, {"0", "0"})), DimensionOutOfRange);
}

TEST_CASE("classification is invariant under z -> 3z") {
    for (auto n : {"model-I", "model-II", "model-III1", "model-III2", "model-IV1", "model-IV2"}) {
        auto M = manifold_preset(n);
        std::map<VarKey, RatExpr> s;
        for (std::size_t i = 0; i < M.z.size(); ++i) {
            s[M.z[i]] = RatExpr(3) * RatExpr::var(M.z[i]);
            s[M.zb[i]] = RatExpr(3) * RatExpr::var(M.zb[i]);
        }
        std::vector<RatExpr> p;
        for (auto& f : M.phi) p.push_back(f.substitute(s));
        auto S = GraphedCR::create(M.n, M.c, p);
        CHECK(classify(S).kind == classify(M).kind);
    }
}

TEST_CASE("class III2 condition") {
    CHECK(class_iii2_condition(manifold_preset("model-III2")).is_zero());
    CHECK_FALSE(class_iii2_condition(manifold_preset("model-III1")).is_zero());
    CHECK(class_iii2_condition(graph(1, 3, {"0", "0", "0"})).is_zero());
}

TEST_CASE("cubic model automorphisms") {
    auto M = manifold_preset("cubic");
    auto gens = cubic_model_generators();
    CHECK(gens.size() == 7);
    for (auto& [n, X] : gens) CHECK_MESSAGE(verify_infinitesimal_automorphism(X, M), n);
    auto dz = VectorField::coordinate(ambient_chart(M), var("z"));
    CHECK_FALSE(verify_infinitesimal_automorphism(dz, M));

    auto I = manifold_preset("model-I");
    auto dz1 = VectorField::coordinate(ambient_chart(I), var("z"));
    auto d = tangency_defect(dz1, I);
    CHECK(d[0] == -(R("z") + R("zb")));
}

TEST_CASE("manifold files") {
    auto M = parse_manifold(
        "manifold { n = 2; c = 1; phi1 = \"(z1*zb1 + (1/2)*z1^2*zb2 + (1/2)*z2*zb1^2)/(1 - z2*zb2)\"; }");
    CHECK(M.phi[0] == manifold_preset("model-IV2").phi[0]);
    CHECK_THROWS_AS(parse_manifold("manifold { n = 1; }"), ParseError);
    CHECK_THROWS_AS(parse_manifold("manifold { n = 1; c = 1; phi = \"z*zb\"; n = 2; }"), ParseError);
    auto T = parse_theta("theta { n = 1; theta = \"wb + 2*i*z*zb\"; }");
    CHECK(T.theta == theta_preset("heisenberg").theta);
    CHECK_THROWS_AS(ThetaSurface::create(1, R("z*zb")), std::invalid_argument);
    auto P = theta_preset("pseudo-sphere-2-1");
    CHECK(P.theta == R("wb + 2*i*(-z1*zb1 + z2*zb2)"));
}
