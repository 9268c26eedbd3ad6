#include "crjet/jets.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <mutex>
#include <set>

namespace crjet {

namespace {

VarTable& vt() { return VarTable::global(); }
RatExpr V(VarKey k) { return RatExpr::var(k); }

int ensure_function(const std::string& name, const std::vector<std::string>& args) {
    if (auto f = vt().find_function(name)) return *f;
    return vt().declare_function(name, args, false);
}

RatExpr formal_partial(int fn, std::initializer_list<int> orders) {
    MultiIndex a{};
    std::size_t i = 0;
    for (int o : orders) a[i++] = std::uint8_t(o);
    return V(vt().formal(fn, a));
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Partitions of n as (part, multiplicity) pairs with distinct parts.
void partitions(int n, int maxp, std::vector<std::pair<int, int>>& cur,
                const std::function<void(const std::vector<std::pair<int, int>>&)>& f) {
    if (n == 0) {
        f(cur);
        return;
    }
    for (int p = std::min(n, maxp); p >= 1; --p)
        for (int mu = 1; mu * p <= n; ++mu) {
            cur.push_back({p, mu});
            partitions(n - mu * p, p - 1, cur, f);
            cur.pop_back();
        }
}

// Compositions of total into n nonnegative parts.
void compositions(int total, std::size_t n, std::vector<std::uint32_t>& cur,
                  const std::function<void(const std::vector<std::uint32_t>&)>& f) {
    if (cur.size() + 1 == n) {
        cur.push_back(std::uint32_t(total));
        f(cur);
        cur.pop_back();
        return;
    }
    for (int c = total; c >= 0; --c) {
        cur.push_back(std::uint32_t(c));
        compositions(total - c, n, cur, f);
        cur.pop_back();
    }
}

RatExpr poly_ratio(const Poly& n, const Poly& d) { return RatExpr::make(n, d); }


// Solves coord^(s), s = 1..order, from D^s(F) = 0.
std::map<VarKey, RatExpr> solve_jets(const RatExpr& F, const std::vector<VarKey>& coords, VarKey solved, int order) {
    std::map<VarKey, RatExpr> sol;
    Poly E = F.num();
    if (!F.is_polynomial()) throw std::invalid_argument("defining function must be polynomial");
    for (int s = 1; s <= order; ++s) {
        E = total_derivative(E, coords);
        VarKey js = jet_var(solved, s);
        Poly c = E.coeff(js, 1);
        if (c.is_zero()) throw SolveFailed();
        Poly rest = E - c * Poly::variable(js);
        sol[js] = (-RatExpr(rest) / RatExpr(c)).substitute(sol);
    }
    return sol;
}

} // namespace

// ---------------------------------------------------------------- jet calculus

VarKey jet_var(VarKey base, int s) { return s == 0 ? base : vt().jet(base, s); }

int jet_weight(const Monomial& m) {
    int w = 0;
    for (auto& f : m.factors())
        if (kind_of(f.v) == VarKind::Jet) w += vt().jet_order(f.v) * int(f.e);
    return w;
}

int max_jet_order(const RatExpr& e) {
    int k = 0;
    for (auto v : e.vars())
        if (kind_of(v) == VarKind::Jet) k = std::max(k, vt().jet_order(v));
    return k;
}

JetPoly JetPoly::of(RatExpr e, std::vector<VarKey> coords) {
    JetPoly j;
    j.kappa = max_jet_order(e);
    j.expr = std::move(e);
    j.coords = std::move(coords);
    return j;
}

std::map<int, RatExpr> JetPoly::components() const {
    for (auto v : expr.den().vars())
        if (kind_of(v) == VarKind::Jet) throw std::invalid_argument("jet variable in a denominator");
    std::map<int, std::vector<Term>> by;
    for (auto& t : expr.num().terms()) by[jet_weight(t.m)].push_back(t);
    std::map<int, RatExpr> out;
    for (auto& [w, ts] : by) out[w] = RatExpr::make(Poly::from_terms(ts), expr.den());
    return out;
}

bool JetPoly::homogeneous(int weight) const {
    auto c = components();
    return c.empty() || (c.size() == 1 && c.begin()->first == weight);
}

Poly total_derivative(const Poly& p, const std::vector<VarKey>& coords) {
    std::set<VarKey> cs(coords.begin(), coords.end());
    Poly out;
    for (auto c : coords) {
        Poly d = p.diff(c);
        if (!d.is_zero()) out += d * Poly::variable(jet_var(c, 1));
    }
    for (auto v : p.vars()) {
        if (kind_of(v) != VarKind::Jet || !cs.count(vt().jet_base(v))) continue;
        out += p.diff(v) * Poly::variable(vt().jet(vt().jet_base(v), vt().jet_order(v) + 1));
    }
    return out;
}

RatExpr total_derivative(const RatExpr& e, const std::vector<VarKey>& coords, int times) {
    RatExpr cur = e;
    for (int t = 0; t < times; ++t) {
        if (cur.is_polynomial()) {
            cur = RatExpr(total_derivative(cur.num(), coords));
            continue;
        }
        const Poly &n = cur.num(), &d = cur.den();
        cur = poly_ratio(total_derivative(n, coords) * d - n * total_derivative(d, coords), d * d);
    }
    return cur;
}

JetPoly total_derivative(const JetPoly& j) {
    JetPoly out = JetPoly::of(total_derivative(j.expr, j.coords), j.coords);
    out.kappa = std::max(out.kappa, j.kappa + 1);
    return out;
}

Poly faa_di_bruno(const Poly& R, const std::vector<VarKey>& coords, int kappa) {
    if (kappa < 1) throw std::invalid_argument("kappa >= 1 required");
    const std::size_t N = coords.size();
    std::map<std::vector<std::uint32_t>, Poly> dcache;
    std::function<const Poly&(const std::vector<std::uint32_t>&)> deriv = [&](const std::vector<std::uint32_t>& a)
        -> const Poly& {
        auto it = dcache.find(a);
        if (it != dcache.end()) return it->second;
        std::size_t k = 0;
        while (k < N && a[k] == 0) ++k;
        Poly val;
        if (k == N) val = R;
        else {
            auto b = a;
            --b[k];
            val = deriv(b).diff(coords[k]);
        }
        return dcache.emplace(a, std::move(val)).first->second;
    };

    // Jet polynomials grouped by the derivative multi-index they multiply.
    std::map<std::vector<std::uint32_t>, Poly> grouped;
    std::vector<std::pair<int, int>> cur;
    partitions(kappa, kappa, cur, [&](const std::vector<std::pair<int, int>>& parts) {
        Rational coef(factorial(kappa));
        for (auto [lam, mu] : parts) {
            long long lf = factorial(lam), d = factorial(mu);
            for (int r = 0; r < mu; ++r) d *= lf;
            coef = coef / Rational(d);
        }
        // Index sums block by block; equal derivatives collapse to a
        // multinomial weight.
        std::function<void(std::size_t, std::vector<std::uint32_t>, Monomial, Rational)> rec =
            [&](std::size_t b, std::vector<std::uint32_t> alpha, Monomial mono, Rational w) {
                if (b == parts.size()) {
                    grouped[alpha] += Poly::monomial(mono, GaussRat(w));
                    return;
                }
                auto [lam, mu] = parts[b];
                std::vector<std::uint32_t> c;
                compositions(mu, N, c, [&](const std::vector<std::uint32_t>& comp) {
                    Rational mult(factorial(mu));
                    Monomial m = mono;
                    auto a2 = alpha;
                    for (std::size_t i = 0; i < N; ++i) {
                        if (!comp[i]) continue;
                        mult = mult / Rational(factorial(int(comp[i])));
                        m = m * Monomial::of(jet_var(coords[i], lam), comp[i]);
                        a2[i] += comp[i];
                    }
                    rec(b + 1, a2, m, w * mult);
                });
            };
        rec(0, std::vector<std::uint32_t>(N, 0), Monomial(), coef);
    });
    Poly out;
    for (auto& [alpha, jets] : grouped) {
        const Poly& d = deriv(alpha);
        if (!d.is_zero()) out += d * jets;
    }
    return out;
}

// ---------------------------------------------------------------- plane curves

VarKey curve_x() { return var("x"); }
VarKey curve_y() { return var("y"); }

int curve_function() {
    static const int fn = ensure_function("R", {"x", "y"});
    return fn;
}

RatExpr curve_partial(int i, int j) { return formal_partial(curve_function(), {i, j}); }

RatExpr instantiate_curve(const RatExpr& e, const Poly& R) {
    int fn = curve_function();
    std::map<VarKey, RatExpr> sub;
    for (auto v : e.vars()) {
        if (kind_of(v) != VarKind::Formal || vt().formal_fn(v) != fn) continue;
        auto a = vt().formal_alpha(v);
        Poly d = R;
        for (int k = 0; k < a[0]; ++k) d = d.diff(curve_x());
        for (int k = 0; k < a[1]; ++k) d = d.diff(curve_y());
        sub[v] = RatExpr(d);
    }
    return sub.empty() ? e : e.substitute(sub);
}

std::vector<std::string> curve_preset_names() {
    std::vector<std::string> out;
    for (int d = 2; d <= 8; ++d) out.push_back("fermat-" + std::to_string(d));
    return out;
}

Poly curve_preset(const std::string& name) {
    int d = 0;
    if (name.rfind("fermat-", 0) == 0 && std::sscanf(name.c_str() + 7, "%d", &d) == 1 && d >= 2 && d <= 8 &&
        name == "fermat-" + std::to_string(d))
        return parse("x^" + std::to_string(d) + " + y^" + std::to_string(d) + " - 1").num();
    throw std::out_of_range("unknown curve preset '" + name + "'");
}

RatExpr chart_swap(const RatExpr& e) {
    VarKey x = curve_x(), y = curve_y();
    int fn = curve_function();
    std::map<VarKey, RatExpr> sub;
    for (auto v : e.vars()) {
        switch (kind_of(v)) {
            case VarKind::Plain:
                if (v == x) sub[v] = V(y);
                else if (v == y) sub[v] = V(x);
                break;
            case VarKind::Jet: {
                VarKey b = vt().jet_base(v);
                if (b == x || b == y) sub[v] = V(vt().jet(b == x ? y : x, vt().jet_order(v)));
                break;
            }
            case VarKind::Formal:
                if (vt().formal_fn(v) == fn) {
                    auto a = vt().formal_alpha(v);
                    std::swap(a[0], a[1]);
                    sub[v] = V(vt().formal(fn, a));
                }
                break;
        }
    }
    return sub.empty() ? e : e.substitute(sub);
}

namespace {

RatExpr yj(int s) { return V(jet_var(curve_y(), s)); }
RatExpr xj(int s) { return V(jet_var(curve_x(), s)); }

TwoChartJet explicit_curve_jet(int lambda) {
    auto P = curve_partial;
    RatExpr Rx = P(1, 0), Ry = P(0, 1), Rxx = P(2, 0), Rxy = P(1, 1), Ryy = P(0, 2);
    TwoChartJet J;
    J.lambda = lambda;
    J.explicit_formula = true;
    J.normal_form = true;
    if (lambda == 1) {
        J.xchart = yj(1) / Rx;
        J.ychart = -xj(1) / Ry;
    } else if (lambda == 2) {
        J.xchart = yj(2) / Rx + yj(1).pow(2) / Rx * (-Rxy / Rx + (Ry / Rx) * (Rxx / Rx));
        J.ychart = -xj(2) / Ry - xj(1).pow(2) / Ry * (-Rxy / Ry + (Rx / Ry) * (Ryy / Ry));
    } else if (lambda == 3) {
        RatExpr Rxxx = P(3, 0), Rxxy = P(2, 1), Rxyy = P(1, 2), Ryyy = P(0, 3);
        RatExpr a = Ry / Rx, b = Rx / Ry;
        J.xchart = yj(3) / Rx + yj(2) * yj(1) / Rx * (RatExpr(-3) * Rxy / Rx + RatExpr(3) * a * Rxx / Rx) +
                   yj(1).pow(3) / Rx *
                       (RatExpr(-6) * a * (Rxy / Rx) * (Rxx / Rx) + RatExpr(3) * a.pow(2) * (Rxx / Rx).pow(2) +
                        RatExpr(3) * a * Rxxy / Rx - a.pow(2) * Rxxx / Rx);
        J.ychart = -xj(3) / Ry - xj(2) * xj(1) / Ry * (RatExpr(-3) * Rxy / Ry + RatExpr(3) * b * Ryy / Ry) -
                   xj(1).pow(3) / Ry *
                       (RatExpr(-6) * b * (Rxy / Ry) * (Ryy / Ry) + RatExpr(3) * b.pow(2) * (Ryy / Ry).pow(2) +
                        RatExpr(3) * b * Rxyy / Ry - b.pow(2) * Ryyy / Ry);
    } else {
        throw std::invalid_argument("explicit formulas exist for lambda <= 3");
    }
    return J;
}

// Monomials in the R partials of order >= 1: count factors, sum of x-orders
// and sum of y-orders all equal to deg.
std::vector<RatExpr> correction_weights(int deg) {
    std::vector<std::pair<int, int>> ps;
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; j <= deg; ++j)
            if (i + j >= 1) ps.push_back({i, j});
    std::vector<RatExpr> out;
    std::function<void(std::size_t, int, int, int, RatExpr)> rec = [&](std::size_t from, int left, int si, int sj,
                                                                        RatExpr acc) {
        if (left == 0) {
            if (si == deg && sj == deg) out.push_back(acc);
            return;
        }
        for (std::size_t k = from; k < ps.size(); ++k) {
            auto [i, j] = ps[k];
            if (si + i > deg || sj + j > deg) continue;
            rec(k, left - 1, si + i, sj + j, acc * curve_partial(i, j));
        }
    };
    rec(0, deg, 0, 0, RatExpr(1));
    return out;
}

// The power of the symbol s when p's denominator is c * s^k, else -1.
int pure_power(const Poly& den, VarKey s) {
    if (!den.is_monomial()) return -1;
    auto& m = den.lead().m;
    for (auto& f : m.factors())
        if (f.v != s) return -1;
    return int(m.degree(s));
}

bool has_forbidden(const Monomial& m, int fn, int axis) {
    for (auto& f : m.factors())
        if (kind_of(f.v) == VarKind::Formal && vt().formal_fn(f.v) == fn && vt().formal_alpha(f.v)[axis] >= 2)
            return true;
    return false;
}

TwoChartJet eliminated_curve_jet(int lambda, bool force);

std::mutex& jet_cache_mu() {
    static std::mutex m;
    return m;
}
std::map<std::pair<int, bool>, TwoChartJet>& jet_cache() {
    static std::map<std::pair<int, bool>, TwoChartJet> c;
    return c;
}

TwoChartJet eliminated_curve_jet(int lambda, bool force) {
    const std::vector<VarKey> coords = {curve_x(), curve_y()};
    RatExpr Rx = curve_partial(1, 0), Ry = curve_partial(0, 1);
    TwoChartJet prev = curve_jet(lambda - 1, force);
    RatExpr bx = total_derivative(prev.xchart, coords).substitute({{jet_var(curve_x(), 1), -yj(1) * Ry / Rx}});
    RatExpr by = total_derivative(prev.ychart, coords).substitute({{jet_var(curve_y(), 1), -xj(1) * Rx / Ry}});

    // Candidate corrections H * prod J^part over partitions with parts < lambda.
    struct Cand {
        std::string label;
        RatExpr H, px, py;
    };
    std::vector<Cand> cands;
    std::vector<std::pair<int, int>> cur;
    partitions(lambda, lambda - 1, cur, [&](const std::vector<std::pair<int, int>>& parts) {
        int k = 0;
        RatExpr px(1), py(1);
        std::string lab;
        for (auto [p, mu] : parts) {
            k += mu;
            auto Jp = curve_jet(p, force);
            px *= Jp.xchart.pow(mu);
            py *= Jp.ychart.pow(mu);
            lab += "J" + std::to_string(p) + (mu > 1 ? "^" + std::to_string(mu) : "") + " ";
        }
        for (auto& H : correction_weights(k - 1)) cands.push_back({lab + "* (" + H.str() + ")", H, H * px, H * py});
    });

    // Common denominators are powers of R_x (resp. R_y).
    VarKey sx = *Rx.num().vars().begin(), sy = *Ry.num().vars().begin();
    auto numerators = [&](const RatExpr& base, std::function<const RatExpr&(const Cand&)> pick, VarKey s,
                          std::vector<Poly>& out) -> Poly {
        int E = pure_power(base.den(), s);
        for (auto& c : cands) E = std::max(E, pure_power(pick(c).den(), s));
        if (E < 0) throw EliminationFailed("denominator is not a power of the chart derivative");
        auto lift = [&](const RatExpr& e) {
            int k = pure_power(e.den(), s);
            if (k < 0) throw EliminationFailed("denominator is not a power of the chart derivative");
            return e.num().scale(e.den().lc().inverse()) * Poly::variable(s, std::uint32_t(E - k));
        };
        for (auto& c : cands) out.push_back(lift(pick(c)));
        return lift(base);
    };
    std::vector<Poly> nx, ny;
    Poly base_x = numerators(bx, [](const Cand& c) -> const RatExpr& { return c.px; }, sx, nx);
    Poly base_y = numerators(by, [](const Cand& c) -> const RatExpr& { return c.py; }, sy, ny);

    // Rows: coefficients of forbidden monomials.
    int fn = curve_function();
    struct KeyLess {
        bool operator()(const std::pair<int, Monomial>& a, const std::pair<int, Monomial>& b) const {
            if (a.first != b.first) return a.first < b.first;
            return grlex_cmp(a.second, b.second) > 0;
        }
    };
    std::map<std::pair<int, Monomial>, std::map<std::size_t, Rational>, KeyLess> rows;
    std::map<std::pair<int, Monomial>, Rational, KeyLess> rhs;
    auto collect = [&](int side, const Poly& p, std::size_t col, bool is_rhs) {
        for (auto& t : p.terms()) {
            if (!has_forbidden(t.m, fn, side == 0 ? 1 : 0)) continue;
            if (is_rhs) rhs[{side, t.m}] -= t.c.re;
            else rows[{side, t.m}][col] += t.c.re;
            rows[{side, t.m}];
        }
    };
    for (std::size_t u = 0; u < cands.size(); ++u) {
        collect(0, nx[u], u, false);
        collect(1, ny[u], u, false);
    }
    collect(0, base_x, 0, true);
    collect(1, base_y, 0, true);

    TwoChartJet J;
    J.lambda = lambda;
    std::optional<std::vector<Rational>> sol;
    if (rows.empty()) sol = std::vector<Rational>(cands.size());
    else {
        Matrix<Rational> A;
        std::vector<Rational> b;
        for (auto& [key, r] : rows) {
            std::vector<Rational> row(cands.size());
            for (auto& [c, v] : r) row[c] = v;
            A.push_back(std::move(row));
            auto it = rhs.find(key);
            b.push_back(it == rhs.end() ? Rational(0) : it->second);
        }
        sol = solve(A, b, Rational(1));
    }
    J.xchart = bx;
    J.ychart = by;
    if (sol) {
        for (std::size_t u = 0; u < cands.size(); ++u) {
            if ((*sol)[u].is_zero()) continue;
            RatExpr c(GaussRat((*sol)[u]));
            J.xchart += c * cands[u].px;
            J.ychart += c * cands[u].py;
            J.corrections.push_back({cands[u].label, c * cands[u].H});
        }
        J.normal_form = true;
        J.note = "D(J^" + std::to_string(lambda - 1) + ") reduced to the normal form by " +
                 std::to_string(J.corrections.size()) + " corrections";
    } else {
        J.normal_form = false;
        J.note = "normal form unreachable by polynomial corrections among " + std::to_string(cands.size()) +
                 " candidates; J = D(J^" + std::to_string(lambda - 1) + ")";
    }
    if (pure_power(J.xchart.den(), sx) < 0 || pure_power(J.ychart.den(), sy) < 0)
        throw EliminationFailed("chart denominators are not cleared");
    return J;
}

} // namespace

TwoChartJet curve_jet(int lambda, bool force_elimination) {
    if (lambda < 1) throw std::invalid_argument("lambda >= 1 required");
    {
        std::lock_guard lk(jet_cache_mu());
        auto it = jet_cache().find({lambda, force_elimination});
        if (it != jet_cache().end()) return it->second;
    }
    TwoChartJet J;
    if (lambda == 1 || (lambda <= 3 && !force_elimination)) J = explicit_curve_jet(lambda);
    else J = eliminated_curve_jet(lambda, force_elimination);
    std::lock_guard lk(jet_cache_mu());
    return jet_cache().emplace(std::make_pair(lambda, force_elimination), J).first->second;
}

TwoChartJet instantiate(const TwoChartJet& J, const Poly& R) {
    TwoChartJet out = J;
    out.xchart = instantiate_curve(J.xchart, R);
    out.ychart = instantiate_curve(J.ychart, R);
    return out;
}

std::map<VarKey, RatExpr> solve_curve_jets(int order, const std::optional<Poly>& R) {
    RatExpr F = R ? RatExpr(*R) : curve_partial(0, 0);
    return solve_jets(F, {curve_x(), curve_y()}, curve_y(), order);
}

bool transition_check(const TwoChartJet& J, const std::optional<Poly>& R) {
    RatExpr x = R ? instantiate_curve(J.xchart, *R) : J.xchart;
    RatExpr y = R ? instantiate_curve(J.ychart, *R) : J.ychart;
    if (R && Poly(R->diff(curve_y())).is_zero()) throw SolveFailed();
    auto sol = solve_curve_jets(J.lambda, R);
    return (x.substitute(sol) - y).is_zero();
}

bool symmetry_check(const TwoChartJet& J) {
    RatExpr s = chart_swap(J.xchart);
    return s == -J.ychart && chart_swap(s) == J.xchart && chart_swap(chart_swap(J.ychart)) == J.ychart;
}

std::map<VarKey, RatExpr> prolong_chart_change(const std::map<VarKey, RatExpr>& map,
                                               const std::vector<VarKey>& new_coords, int kappa) {
    if (map.size() != new_coords.size()) throw std::invalid_argument("chart change must be square");
    Matrix<RatExpr> jac;
    for (auto& [old, e] : map) {
        std::vector<RatExpr> row;
        for (auto n : new_coords) row.push_back(e.diff(n));
        jac.push_back(std::move(row));
    }
    if (determinant(jac, RatExpr(1)).is_zero()) throw SingularMap();
    std::map<VarKey, RatExpr> out;
    for (auto& [old, e] : map) {
        out[old] = e;
        RatExpr cur = e;
        for (int s = 1; s <= kappa; ++s) {
            cur = total_derivative(cur, new_coords);
            out[jet_var(old, s)] = cur;
        }
    }
    return out;
}

VarKey infinity_x() { return var("x2"); }
VarKey infinity_y() { return var("y2"); }

Poly infinity_polynomial(const Poly& R) {
    std::uint32_t d = R.total_degree();
    std::vector<Term> ts;
    for (auto& t : R.terms()) {
        std::uint32_t a = t.m.degree(curve_x()), b = t.m.degree(curve_y());
        if (a + b != t.m.degree()) throw std::invalid_argument("curve polynomial must involve only x and y");
        Monomial m = Monomial::of(infinity_x(), a) * Monomial::of(infinity_y(), d - a - b);
        ts.push_back({m, t.c});
    }
    return Poly::from_terms(std::move(ts));
}

namespace {
Poly at_y2_zero(const Poly& p) { return p.coeff(infinity_y(), 0); }
} // namespace

bool transversal_at_infinity(const Poly& R) {
    Poly r0 = at_y2_zero(infinity_polynomial(R));
    if (r0.degree(infinity_x()) != R.total_degree()) return false;
    return gcd(r0, r0.diff(infinity_x())).is_constant();
}

RatExpr transport_to_infinity(const RatExpr& xchart, const Poly& R) {
    (void)R;
    int k = max_jet_order(xchart);
    RatExpr X = V(infinity_x()), Y = V(infinity_y());
    auto sub = prolong_chart_change({{curve_x(), X / Y}, {curve_y(), RatExpr(1) / Y}}, {infinity_x(), infinity_y()},
                                    std::max(k, 1));
    return xchart.substitute(sub);
}

InfinityReport infinity_report(const RatExpr& xchart, const Poly& R) {
    InfinityReport r;
    r.transported = transport_to_infinity(xchart, R);
    Poly r0 = at_y2_zero(infinity_polynomial(R));
    Poly den0 = at_y2_zero(r.transported.den());
    r.holomorphic = !den0.is_zero() && gcd(den0, r0).is_constant();
    r.vanishes = at_y2_zero(r.transported.num()).normal_form(r0).is_zero();
    return r;
}

bool vanishing_at_infinity(const TwoChartJet& J, const Poly& R) {
    long long d = R.total_degree();
    if (d < J.lambda + 3)
        throw BadDegree("deg R = " + std::to_string(d) + " < lambda + 3 = " + std::to_string(J.lambda + 3));
    if (!transversal_at_infinity(R)) throw std::invalid_argument("the line at infinity is not transversal to the curve");
    auto rep = infinity_report(instantiate_curve(J.xchart, R), R);
    return rep.holomorphic && rep.vanishes;
}

bool complete_intersection_first_order_check() {
    int f1 = ensure_function("Fa", {"z1", "z2", "z3"});
    int f2 = ensure_function("Fb", {"z1", "z2", "z3"});
    std::vector<VarKey> zs = {var("z1"), var("z2"), var("z3")};
    RatExpr a[3], b[3];
    for (int k = 0; k < 3; ++k) {
        MultiIndex e{};
        e[std::size_t(k)] = 1;
        a[k] = V(vt().formal(f1, e));
        b[k] = V(vt().formal(f2, e));
    }
    auto M = [&](int i, int j) { return a[i] * b[j] - a[j] * b[i]; };
    // D F^1 = D F^2 = 0 solved for z1', z2' by Cramer.
    RatExpr z3 = V(jet_var(zs[2], 1));
    RatExpr det = M(0, 1);
    RatExpr z1 = (-a[2] * z3 * b[1] + b[2] * z3 * a[1]) / det;
    RatExpr z2 = (-b[2] * z3 * a[0] + a[2] * z3 * b[0]) / det;
    RatExpr q1 = z1 / M(1, 2), q2 = -z2 / M(0, 2), q3 = z3 / M(0, 1);
    return (q1 - q2).is_zero() && (q1 - q3).is_zero();
}

// ---------------------------------------------------------------- counting

std::vector<std::vector<int>> weighted_partitions(int kappa, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(std::size_t(kappa), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == 0) {
            cur[0] = left;
            out.push_back(cur);
            return;
        }
        for (int c = 0; c * (i + 1) <= left; ++c) {
            cur[std::size_t(i)] = c;
            rec(i - 1, left - c * (i + 1));
        }
        cur[std::size_t(i)] = 0;
    };
    if (kappa < 1 || m < 0) throw std::invalid_argument("kappa >= 1 and m >= 0 required");
    rec(kappa - 1, m);
    return out;
}

long long gg_rank(int kappa, int m) { return (long long)weighted_partitions(kappa, m).size(); }

long long binom2(long long s, int* clamps) {
    if (s < 2) {
        if (s < 0 && clamps) ++*clamps;
        return 0;
    }
    return s * (s - 1) / 2;
}

long long h0_line(long long t, long long d) { return binom2(t + 2) - binom2(t - d + 2); }
long long genus(long long d) { return (d - 1) * (d - 2) / 2; }

namespace {
SectionCount section_sum(int kappa, int m, int d, bool graded) {
    SectionCount c;
    for (auto& mm : weighted_partitions(kappa, m)) {
        long long delta = 0;
        for (int i = 0; i < kappa; ++i)
            delta += (long long)mm[std::size_t(i)] * (graded ? d - 3 : d - (i + 1) - 2);
        c.value += binom2(delta + 2, &c.clamped) - binom2(delta - d + 2, &c.clamped);
        ++c.terms;
    }
    return c;
}
} // namespace

SectionCount gg_sections_dim_curve(int kappa, int m, int d) { return section_sum(kappa, m, d, false); }
SectionCount gg_graded_h0(int kappa, int m, int d) { return section_sum(kappa, m, d, true); }

long long count_partial_derivatives(int nvars, int order) {
    long long n = 0;
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == nvars) {
            if (left < order) ++n; // |alpha| = order - left >= 1
            return;
        }
        for (int e = 0; e <= left; ++e) rec(v + 1, left - e);
    };
    rec(0, order);
    return n;
}

long long count_monomials(int nvars, int deg) {
    long long n = 0;
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == nvars) {
            ++n;
            return;
        }
        for (int e = 0; e <= left; ++e) rec(v + 1, left - e);
    };
    rec(0, deg);
    return n;
}

} // namespace crjet
