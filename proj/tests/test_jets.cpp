#include "doctest.h"

#include <random>
#include <set>

#include "crjet/jets.hpp"
#include "crjet/linalg.hpp"
#include "crjet/parse.hpp"

using namespace crjet;

namespace {

RatExpr Jv(const std::string& base, int s) { return RatExpr::var(jet_var(var(base), s)); }

Poly random_poly(std::mt19937_64& rng, const std::vector<VarKey>& vars, int deg, int terms) {
    std::uniform_int_distribution<int> coef(-5, 5), e(0, deg);
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int left = e(rng);
        for (auto v : vars) {
            int k = std::uniform_int_distribution<int>(0, left)(rng);
            m = m * Monomial::of(v, std::uint32_t(k));
            left -= k;
        }
        int c = coef(rng);
        if (c) ts.push_back({m, GaussRat(c)});
    }
    return Poly::from_terms(ts);
}

// Smooth plane curve: Fermat plus a small perturbation that keeps the
// points at infinity simple.
Poly fermat(int d, const std::string& extra = "") {
    std::string s = "x^" + std::to_string(d) + " + y^" + std::to_string(d) + " - 1";
    if (!extra.empty()) s += " + " + extra;
    return R(s).num();
}

long long partitions_dp(int kappa, int m) {
    std::vector<long long> ways(std::size_t(m + 1), 0);
    ways[0] = 1;
    for (int part = 1; part <= kappa; ++part)
        for (int s = part; s <= m; ++s) ways[std::size_t(s)] += ways[std::size_t(s - part)];
    return ways[std::size_t(m)];
}

// dim of polynomials of degree <= delta modulo multiples of R, by rank.
long long quotient_dim(const Poly& Rc, int delta) {
    const VarKey x = var("x"), y = var("y");
    std::map<std::pair<int, int>, std::size_t> col;
    for (int t = 0; t <= delta; ++t)
        for (int a = 0; a <= t; ++a) col[{a, t - a}] = col.size();
    int d = int(Rc.total_degree());
    Matrix<Rational> M;
    for (int t = 0; t <= delta - d; ++t)
        for (int a = 0; a <= t; ++a) {
            Poly p = Rc.mul_monomial(Monomial::of(x, std::uint32_t(a)) * Monomial::of(y, std::uint32_t(t - a)), GaussRat(1));
            std::vector<Rational> row(col.size());
            for (auto& tm : p.terms()) row[col.at({int(tm.m.degree(x)), int(tm.m.degree(y))})] = tm.c.re;
            M.push_back(std::move(row));
        }
    return (long long)col.size() - (long long)rank(M);
}

} // namespace

TEST_CASE("total derivative") {
    CHECK(total_derivative(R("x"), {var("x"), var("y")}) == Jv("x", 1));
    CHECK(total_derivative(Jv("x", 1) * R("y"), {var("x"), var("y")}) ==
          Jv("x", 2) * R("y") + Jv("x", 1) * Jv("y", 1));
    auto j = total_derivative(JetPoly::of(Jv("x", 1) * Jv("y", 1), {var("x"), var("y")}));
    CHECK(j.kappa == 2);
    CHECK(j.homogeneous(3));
}

TEST_CASE("Faa di Bruno closed form equals iterated D") {
    std::mt19937_64 rng(2024);
    std::vector<VarKey> all = {var("z1"), var("z2"), var("z3")};
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + std::size_t(trial % 3);
        std::vector<VarKey> coords(all.begin(), all.begin() + long(n));
        Poly Rp = random_poly(rng, coords, 4, 5);
        Poly D = Rp;
        int kmax = trial < 10 ? 6 : 4;
        for (int k = 1; k <= kmax; ++k) {
            D = total_derivative(D, coords);
            Poly F = faa_di_bruno(Rp, coords, k);
            CHECK(F == D);
            CHECK(JetPoly::of(RatExpr(F), coords).homogeneous(k));
        }
    }
    // Second-order line: z'' gradient term plus Hessian quadric.
    VarTable::global().declare_function("Rf", {"z1", "z2"}, false);
    std::vector<VarKey> c2 = {var("z1"), var("z2")};
    RatExpr want = R("Rf_z1") * Jv("z1", 2) + R("Rf_z2") * Jv("z2", 2) + R("Rf_z1z1") * Jv("z1", 1).pow(2) +
                   RatExpr(2) * R("Rf_z1z2") * Jv("z1", 1) * Jv("z2", 1) + R("Rf_z2z2") * Jv("z2", 1).pow(2);
    CHECK(RatExpr(faa_di_bruno(R("Rf").num(), c2, 2)) == want);
    // Fourth order in one variable: coefficients 4, 3, 6 and 1.
    VarTable::global().declare_function("Rg", {"z1"}, false);
    RatExpr w4 = R("Rg_z1") * Jv("z1", 4) + RatExpr(4) * R("Rg_z1z1") * Jv("z1", 3) * Jv("z1", 1) +
                 RatExpr(3) * R("Rg_z1z1") * Jv("z1", 2).pow(2) +
                 RatExpr(6) * R("Rg_z1z1z1") * Jv("z1", 2) * Jv("z1", 1).pow(2) + R("Rg_z1z1z1z1") * Jv("z1", 1).pow(4);
    CHECK(RatExpr(faa_di_bruno(R("Rg").num(), {var("z1")}, 4)) == w4);
}

TEST_CASE("curve jets of order 1 to 3") {
    auto J1 = curve_jet(1);
    CHECK(J1.xchart == Jv("y", 1) / curve_partial(1, 0));
    CHECK(J1.ychart == -Jv("x", 1) / curve_partial(0, 1));
    for (int l = 1; l <= 3; ++l) {
        auto J = curve_jet(l);
        CHECK(transition_check(J));
        CHECK(symmetry_check(J));
    }
    // Third-order coefficients read off after multiplying by R_x^5.
    auto J3 = curve_jet(3);
    RatExpr Rx = curve_partial(1, 0), Ry = curve_partial(0, 1);
    Poly n = (J3.xchart * Rx.pow(5)).num();
    VarKey y1 = jet_var(var("y"), 1), y2 = jet_var(var("y"), 2);
    Poly c21 = n.coeff(y2, 1).coeff(y1, 1);
    CHECK(RatExpr(c21) == (RatExpr(-3) * curve_partial(1, 1) * Rx + RatExpr(3) * Ry * curve_partial(2, 0)) * Rx.pow(2));
    Poly c3 = n.coeff(y1, 3);
    RatExpr want = RatExpr(-6) * Ry * curve_partial(1, 1) * curve_partial(2, 0) * Rx +
                   RatExpr(3) * Ry.pow(2) * curve_partial(2, 0).pow(2) +
                   RatExpr(3) * Ry * curve_partial(2, 1) * Rx.pow(2) - Ry.pow(2) * curve_partial(3, 0) * Rx;
    CHECK(RatExpr(c3) == want);

    auto bad = curve_jet(2);
    bad.xchart += Jv("y", 1).pow(2) * curve_partial(1, 1) / Rx.pow(2);
    CHECK_FALSE(transition_check(bad));
}

TEST_CASE("eliminated curve jets") {
    auto J4 = curve_jet(4);
    CHECK_FALSE(J4.explicit_formula);
    CHECK(symmetry_check(J4));
    CHECK(transition_check(J4));
    CHECK(transition_check(J4, fermat(5)));
    CHECK(vanishing_at_infinity(J4, fermat(7, "x^2*y")));
    // Forced elimination agrees with the explicit formulas on the curve.
    auto J3e = curve_jet(3, true);
    CHECK(symmetry_check(J3e));
    CHECK(transition_check(J3e));
}

TEST_CASE("transition on concrete curves") {
    std::vector<std::string> extras = {"", "x*y", "x^2*y^2 + 3*x", "2*x*y^3 - y", "x^3 + y^2"};
    for (int l = 1; l <= 3; ++l)
        for (auto& e : extras) {
            Poly Rc = fermat(l + 3, e);
            auto J = curve_jet(l);
            CHECK(transition_check(J, Rc));
            CHECK(vanishing_at_infinity(J, Rc));
        }
}

TEST_CASE("vanishing at infinity") {
    Poly F4 = fermat(4);
    CHECK(vanishing_at_infinity(curve_jet(1), F4));
    CHECK_THROWS_AS(vanishing_at_infinity(curve_jet(2), F4), BadDegree);
    CHECK_FALSE(transversal_at_infinity(R("y^4 - x").num()));
    for (int d = 4; d <= 7; ++d) {
        Poly Rc = fermat(d);
        RatExpr t = transport_to_infinity(instantiate_curve(curve_jet(1).xchart, Rc), Rc);
        CHECK(t.num().monomial_content().degree(infinity_y()) >= std::uint32_t(d - 3));
    }
}

TEST_CASE("prolonged chart changes") {
    VarKey x2 = infinity_x(), y2 = infinity_y();
    auto s = prolong_chart_change({{var("x"), RatExpr::var(x2) / RatExpr::var(y2)}, {var("y"), RatExpr(1) / RatExpr::var(y2)}},
                                  {x2, y2}, 1);
    CHECK(s.at(jet_var(var("y"), 1)) == -RatExpr::var(jet_var(y2, 1)) / RatExpr::var(y2).pow(2));
    auto id = prolong_chart_change({{var("x"), R("x")}, {var("y"), R("y")}}, {var("x"), var("y")}, 3);
    for (int k = 1; k <= 3; ++k) CHECK(id.at(jet_var(var("y"), k)) == Jv("y", k));
    auto lin = prolong_chart_change({{var("x"), R("2*x")}}, {var("x")}, 4);
    for (int k = 1; k <= 4; ++k) CHECK(lin.at(jet_var(var("x"), k)) == RatExpr(2) * Jv("x", k));
    CHECK_THROWS_AS(prolong_chart_change({{var("x"), R("x + y")}, {var("y"), R("2*x + 2*y")}}, {var("x"), var("y")}, 1),
                    SingularMap);
}

TEST_CASE("complete intersection first order") { CHECK(complete_intersection_first_order_check()); }

TEST_CASE("Green-Griffiths counting") {
    CHECK(gg_rank(1, 9) == 1);
    CHECK(gg_rank(2, 3) == 2);
    CHECK(gg_rank(3, 6) == 7);
    for (int k = 1; k <= 5; ++k)
        for (int m = 1; m <= 40; ++m) CHECK(gg_rank(k, m) == partitions_dp(k, m));
    CHECK(genus(4) == 3);
    CHECK(h0_line(4, 4) == 14);
    CHECK(h0_line(1, 4) == genus(4));
    for (int d = 1; d <= 12; ++d) CHECK(h0_line(d, d) == (d + 2) * (d + 1) / 2 - 1);

    // (2, 3, 10) against the rank of explicit multiples of a degree-10 curve.
    Poly R10 = fermat(10, "x^3*y^5 - 2*x*y");
    long long oracle = 0;
    for (auto& mm : weighted_partitions(2, 3)) oracle += quotient_dim(R10, mm[0] * 7 + mm[1] * 6);
    auto c = gg_sections_dim_curve(2, 3, 10);
    CHECK(c.value == oracle);
    CHECK(c.terms == 2);
    CHECK(c.clamped == 0);
    for (int m = 1; m <= 6; ++m) {
        long long s = binom2(m * 7 + 2) - binom2(m * 7 - 10 + 2);
        CHECK(gg_sections_dim_curve(1, m, 10).value == s);
    }
    double cmin = 1e300;
    for (int m = 10; m <= 30; ++m) cmin = std::min(cmin, double(gg_sections_dim_curve(2, m, 10).value) / (m * m));
    CHECK(cmin > 0);
    int clamps = 0;
    CHECK(binom2(-3, &clamps) == 0);
    CHECK(clamps == 1);
    CHECK(gg_sections_dim_curve(1, 1, 4).clamped > 0);

    CHECK(count_partial_derivatives(3, 6) == 83);
    CHECK(count_monomials(8, 14) == 319770);
}

TEST_CASE("surface transition formulas") {
    auto t = surface_transition_check();
    CHECK(t.first);
    CHECK(t.second);
    CHECK(t.rewrite);
    CHECK(t.rewrite_divided);
    CHECK_FALSE(t.printed_table);
    CHECK(t.negative_control);
    CHECK_FALSE(t.printed_signs);
}

TEST_CASE("symmetric differentials on surfaces") {
    for (int m = 1; m <= 2; ++m)
        for (int g = 0; g <= 3; ++g) {
            auto r = symmetric_search_surface(m, g);
            CHECK(r.dimension == 0);
            CHECK(r.rank == r.unknowns);
            auto c = symmetric_search_surface(m, g, true);
            CHECK(c.dimension >= 1);
            CHECK(c.all_verified());
            std::vector<Rational> J1m(c.unknowns);
            J1m[symmetric_search_index(m, g, m, 0, 0)] = 1;
            CHECK(c.contains(J1m));
        }
}

TEST_CASE("order-2 surface search") {
    Order2Budget b;
    CHECK(order2_generator_count(1, b) == 512);
    auto r = order2_surface_search(1, b);
    CHECK(r.unknowns == 512);
    CHECK(r.all_verified());
    CHECK(r.verified.size() == r.dimension);
    CHECK(r.note.find("agrees") != std::string::npos);
    auto e = order2_surface_search(3, Order2Budget{1, 0, 1});
    CHECK(e.unknowns == 0);
    CHECK(e.dimension == 0);
    CHECK_THROWS_AS(order2_surface_search(0, b), BudgetTooSmall);
}

TEST_CASE("Siu-Yeung construction") {
    Poly Rc = R("x^5 + y^5 - 1 + x*y^2").num();
    std::vector<VarKey> xy = {var("x"), var("y")};
    auto b = siu_yeung_build(Rc, {{{1, 0, 0, 0}, Poly(1)}}, 1);
    CHECK(b.J == Jv("x", 1) * RatExpr(Rc));
    CHECK(b.R1.num() == total_derivative(Rc, xy));
    CHECK(b.R2.num() == total_derivative(b.R1.num(), xy));
    RatExpr W = Jv("x", 1) * Jv("y", 2) - Jv("x", 2) * Jv("y", 1);
    CHECK(b.bracket == RatExpr(Rc.diff(var("y"))) * W + RatExpr(siu_yeung_quadric(Rc)));
    CHECK_THROWS_AS(siu_yeung_build(Rc, {{{1, 1, 0, 0}, Poly(1)}}, 1), IndexError);

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        int m = 1 + trial % 3;
        Poly Rr = random_poly(rng, xy, 3, 4) + R("x^3 + y^3").num();
        std::map<SYIndex, Poly> A;
        for (auto& i : siu_yeung_indices(m))
            if (rng() % 2) A[i] = random_poly(rng, xy, 2, 2);
        RatExpr Jr = siu_yeung_build(Rr, A, m).J;
        auto t = siu_yeung_expand(Jr);
        CHECK(siu_yeung_rebuild(t) == Jr);
        CHECK(siu_yeung_table(Rr, A, m) == t);
        for (auto& [k, v] : t) CHECK(k.alpha + k.beta + 3 * k.gamma == m);
    }
}

TEST_CASE("Siu-Yeung top part modulo R_y") {
    Poly Rc = R("x^4 - y^4 + x*y - 2").num();
    Poly Ry = Rc.diff(var("y"));
    for (int m = 1; m <= 2; ++m) {
        auto top = siu_yeung_expand(siu_yeung_top(Rc, m));
        CHECK(top.at({0, 0, m}) == Ry.pow(unsigned(m)) * Rc.pow(unsigned(2 * m)));
        LambdaTable q = siu_yeung_expand(RatExpr(siu_yeung_quadric(Rc).pow(unsigned(m)) * Rc.pow(unsigned(2 * m))));
        std::set<LambdaKey> keys;
        for (auto& [k, v] : top) keys.insert(k);
        for (auto& [k, v] : q) keys.insert(k);
        for (auto& k : keys) {
            Poly a = top.count(k) ? top.at(k) : Poly();
            Poly c = q.count(k) ? q.at(k) : Poly();
            CHECK((a - c).normal_form(Ry).is_zero());
        }
    }
}

TEST_CASE("normal form decides divisibility") {
    std::mt19937_64 rng(5);
    std::vector<VarKey> xy = {var("x"), var("y")};
    for (int t = 0; t < 60; ++t) {
        Poly g = random_poly(rng, xy, 3, 3);
        if (g.is_constant()) continue;
        Poly p = t % 2 ? g * random_poly(rng, xy, 3, 3) : random_poly(rng, xy, 5, 6);
        CHECK(p.normal_form(g).is_zero() == p.divide_exact(g).has_value());
    }
}

TEST_CASE("Siu-Yeung divisibility solver") {
    Poly R5 = R("x^5 + y^5 - 1 + x^2*y").num();
    auto tiny = siu_yeung_solve(R5, 1);
    CHECK(tiny.unknowns == 9);
    CHECK(tiny.all_verified());
    CHECK(tiny.verified.size() == tiny.dimension);
    CHECK(tiny.note.find("m = 81") != std::string::npos);

    // Planted family whose Lambda are multiples of R_y.
    Poly R9 = R("x^9 + y^9 - 1 + x^4*y^3 - 2*x*y^7").num();
    Poly Rx = R9.diff(var("x")), Ry = R9.diff(var("y"));
    Poly h1 = R("3*x - y + 2").num(), h2 = R("x + 5").num();
    std::map<SYIndex, Poly> A = {{{0, 0, 1, 0}, R9}, {{1, 0, 0, 0}, -Rx + Ry * h1}, {{0, 1, 0, 0}, Ry * h2}};
    for (auto& [k, lam] : siu_yeung_expand(siu_yeung_build(R9, A, 1).J)) CHECK(lam.divide_exact(Ry).has_value());
    const int bound = 9;
    auto us = siu_yeung_unknowns(1, bound);
    std::vector<Rational> v(us.size());
    for (std::size_t u = 0; u < us.size(); ++u) {
        auto it = A.find(us[u].first);
        if (it == A.end()) continue;
        for (auto& t : it->second.terms())
            if (t.m == us[u].second) v[u] = t.c.re;
    }
    CHECK(siu_yeung_family(v, 1, bound) == A);
    SYSolveOptions opt;
    opt.degree_bound = bound;
    auto rep = siu_yeung_solve(R9, 1, opt);
    CHECK(rep.dimension >= 1);
    CHECK(rep.all_verified());
    CHECK(rep.contains(v));
}
