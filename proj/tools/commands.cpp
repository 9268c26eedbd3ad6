#include "commands.hpp"

#include <set>
#include <sstream>

#include "crjet/jets.hpp"
#include "crjet/stress.hpp"

namespace crjet::cli {

namespace {

json parsed(const std::string& s) { return json::parse(s); }

GraphedCR load_manifold(Report& r) {
    const auto& s = r.job.source;
    GraphedCR M;
    switch (s.kind) {
        case Source::None: throw InputError("a manifold is required (--preset, --manifold or --expr)");
        case Source::Preset: M = manifold_preset(s.value); break;
        default: M = parse_manifold(s.text); break;
    }
    for (std::size_t j = 0; j < M.phi.size(); ++j)
        r.inputs.push_back("phi" + std::to_string(j + 1) + " = " + M.phi[j].str());
    return M;
}

ThetaSurface load_theta(Report& r) {
    const auto& s = r.job.source;
    ThetaSurface S;
    switch (s.kind) {
        case Source::None: throw InputError("a Theta surface is required (--preset, --manifold or --expr)");
        case Source::Preset: S = theta_preset(s.value); break;
        default: S = parse_theta(s.text); break;
    }
    r.inputs.push_back("theta = " + S.theta.str());
    return S;
}

Poly load_curve(Report& r) {
    const auto& s = r.job.source;
    Poly R;
    switch (s.kind) {
        case Source::None: throw InputError("a curve is required (--curve, --curve-file, --R or --preset)");
        case Source::Preset: R = curve_preset(s.value); break;
        default: {
            RatExpr e = parse(s.text);
            if (!e.is_polynomial()) throw InputError("the curve must be a polynomial");
            R = e.num();
        }
    }
    for (auto v : R.vars())
        if (v != curve_x() && v != curve_y()) throw InputError("the curve may only involve x and y");
    r.inputs.push_back("R = " + R.str());
    return R;
}

json invariant_json(const InvariantReport& rep, std::size_t max_terms = 2000) {
    bool small = rep.value && rep.value->num().size() + rep.value->den().size() <= max_terms;
    json j = parsed(rep.json(small));
    j["verdict"] = rep.zero ? (rep.exact ? "zero (exact)" : "zero (probabilistic)") : "nonzero";
    return j;
}

json fields_json(const std::vector<VectorField>& fs, const std::string& prefix) {
    json a = json::array();
    for (std::size_t i = 0; i < fs.size(); ++i)
        a.push_back("field " + prefix + std::to_string(i + 1) + " = " + fs[i].str() + ";");
    return a;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string t;
    while (std::getline(ss, t, ','))
        if (!t.empty()) out.push_back(t);
    return out;
}

json section_json(const SectionCount& c) { return {{"value", c.value}, {"terms", c.terms}, {"clamped", c.clamped}}; }

} // namespace

void run_classify(Report& r) {
    GraphedCR M = load_manifold(r);
    ClassLabel lab = classify(M, r.job.seed);
    r.results["class"] = lab.name();
    r.results["reason"] = lab.reason;
    json ev = json::array();
    for (auto& e : lab.evidence) ev.push_back({{"what", e.what}, {"rank", e.rank}, {"exact", e.exact}});
    r.results["evidence"] = ev;
}

void run_invariant(Report& r) {
    const std::string name = r.job.options.value("invariant", "");
    InvariantOptions opt = r.job.invariant_options();
    if (name == "upsilon-counts" || name == "delta-counts") {
        if (!r.job.stress) throw InputError("monomial-count reproductions need --stress");
        auto c = name == "upsilon-counts" ? upsilon_monomial_count(r.job.term_limit())
                                          : class1_delta_monomial_count(r.job.term_limit());
        json j = parsed(c.json());
        j.erase("seconds");
        r.results["counts"] = j;
        if (!c.completed) throw BudgetExceeded(c.note);
        r.verdict("printed monomial counts", c.matches());
        return;
    }
    if (name == "sphericity") {
        ThetaSurface S = load_theta(r);
        r.results["sphericity"] = invariant_json(sphericity_expression(S, opt));
    } else if (name == "pseudo-sphericity") {
        ThetaSurface S = load_theta(r);
        auto rep = pseudosphericity_verdict(S, opt);
        r.results["pseudo-sphericity"] = invariant_json(rep);
    } else if (name == "levi-factor") {
        GraphedCR M = load_manifold(r);
        r.results["levi-factor"] = invariant_json(report_exact("levi-factor", levi_factor_ell(M), opt));
    } else if (name == "levi-determinant") {
        GraphedCR M = load_manifold(r);
        r.results["levi-determinant"] = invariant_json(report_exact("levi-determinant", levi_determinant(M), opt));
    } else if (name == "freeman") {
        GraphedCR M = load_manifold(r);
        r.results["freeman"] = invariant_json(report_exact("freeman", freeman_form(M), opt));
    } else if (name == "class1-P") {
        GraphedCR M = load_manifold(r);
        r.results["class1-P"] = invariant_json(report_exact("class1-P", class1_P(M), opt));
    } else if (name == "class1-I") {
        GraphedCR M = load_manifold(r);
        r.results["class1-I"] = invariant_json(evaluate(class1_frakI_formula(M), opt));
    } else if (name == "W-J" || name == "WJ" || name == "W" || name == "J") {
        GraphedCR M = load_manifold(r);
        auto [W, J] = class4_WJ(M, opt);
        if (name != "J") r.results["W"] = invariant_json(W);
        if (name != "W") r.results["J"] = invariant_json(J);
    } else if (name == "class3-structure") {
        GraphedCR M = load_manifold(r);
        auto c = class31_fundamental(M);
        json j;
        for (auto& [k, v] : std::vector<std::pair<std::string, const RatExpr*>>{
                 {"P", &c.P}, {"Q", &c.Q}, {"R", &c.R}, {"A", &c.A}, {"B", &c.B}, {"E", &c.E}, {"F", &c.F}, {"G", &c.G}})
            j[k] = v->str();
        r.results["class3-structure"] = j;
        r.verdict("E, F, G agree with the secondary formulas", c.E == c.E_rpl && c.F == c.F_rpl && c.G == c.G_rpl);
    } else {
        throw InputError("unknown invariant '" + name +
                         "' (sphericity, pseudo-sphericity, levi-factor, levi-determinant, freeman, class1-P, "
                         "class1-I, W, J, W-J, class3-structure, upsilon-counts, delta-counts)");
    }
}

void run_frame(Report& r) {
    GraphedCR M = load_manifold(r);
    r.results["L"] = fields_json(M.L(), "L");
    r.results["Lbar"] = fields_json(M.Lbar(), "Lb");
    r.results["genericity_determinant"] = M.genericity_determinant().str();
    if (M.c == 1) {
        json lm = json::array();
        for (auto& row : levi_matrix(M)) {
            json jr = json::array();
            for (auto& e : row) jr.push_back(e.str());
            lm.push_back(jr);
        }
        r.results["levi_matrix"] = lm;
        if (M.n == 2) r.results["levi_determinant"] = levi_determinant(M).str();
    }
}

void run_darboux(Report& r) {
    GraphedCR M = load_manifold(r);
    const int depth = r.job.options.value("depth", 3);
    const std::size_t dim = std::size_t(2 * M.n + M.c);
    std::vector<VectorField> frame;
    std::vector<std::string> names;
    std::size_t rank = 0;
    auto offer = [&](const VectorField& X, const std::string& n) {
        if (rank == dim) return;
        auto trial = frame;
        trial.push_back(X);
        auto k = generic_rank(trial, r.job.seed, r.job.exact).rank;
        if (k > rank) {
            frame = std::move(trial);
            names.push_back(n);
            rank = k;
        }
    };
    // Generators, then brackets by increasing length.
    std::vector<std::pair<std::string, VectorField>> level;
    for (int i = 0; i < M.n; ++i) level.push_back({"L" + std::to_string(i + 1), M.L()[std::size_t(i)]});
    for (int i = 0; i < M.n; ++i) level.push_back({"Lb" + std::to_string(i + 1), M.Lbar()[std::size_t(i)]});
    auto gens = level;
    for (auto& [n, X] : level) offer(X, n);
    for (int d = 2; d <= depth && rank < dim; ++d) {
        std::vector<std::pair<std::string, VectorField>> next;
        for (auto& [gn, G] : gens)
            for (auto& [ln, X] : level) {
                if (d == 2 && gn >= ln) continue;
                VectorField B = lie_bracket(G, X);
                if (B.is_zero()) continue;
                std::string n = "[" + gn + "," + ln + "]";
                next.push_back({n, B});
                offer(B, n);
            }
        level = std::move(next);
    }
    if (rank < dim) throw VerificationFailure("brackets up to depth " + std::to_string(depth) + " span rank " +
                                              std::to_string(rank) + " < " + std::to_string(dim));
    FrameStructure F(frame);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < names.size(); ++k) labels.push_back("omega" + std::to_string(k + 1));
    auto eqs = darboux_structure(F, labels);
    json fr = json::array();
    for (std::size_t k = 0; k < names.size(); ++k) fr.push_back({{"label", labels[k]}, {"dual_to", names[k]}, {"field", frame[k].str()}});
    r.results["frame"] = fr;
    r.results["structure"] = parsed(eqs.json());
}

void run_jets(Report& r) {
    const json& o = r.job.options;
    if (o.value("gg_dims", false)) {
        int kappa = o.value("kappa", 1), m = o.value("m", 1), d = o.value("d", 4);
        if (kappa < 1 || m < 0 || d < 1) throw InputError("need kappa >= 1, m >= 0, d >= 1");
        json g;
        g["kappa"] = kappa;
        g["m"] = m;
        g["d"] = d;
        g["gg_rank"] = gg_rank(kappa, m);
        g["genus"] = genus(d);
        g["sections_dim_curve"] = section_json(gg_sections_dim_curve(kappa, m, d));
        g["graded_h0"] = section_json(gg_graded_h0(kappa, m, d));
        g["binomial_convention"] = "C(s, 2) = 0 for s < 2";
        r.results["gg_dims"] = g;
        return;
    }
    if (o.value("surface", false)) {
        auto t = surface_transition_check();
        r.results["surface_transitions"] = {{"first", t.first},
                                           {"second", t.second},
                                           {"printed_signs", t.printed_signs},
                                           {"rewrite", t.rewrite},
                                           {"rewrite_divided", t.rewrite_divided},
                                           {"printed_table", t.printed_table},
                                           {"negative_control", t.negative_control}};
        r.verdict("surface transition formulas", t.first && t.second && t.rewrite && t.rewrite_divided && t.negative_control);
        return;
    }
    if (o.value("symmetric_search", false)) {
        int m = o.value("m", 1), deg = o.value("deg", 2);
        if (m < 1 || deg < 0) throw InputError("need m >= 1 and deg >= 0");
        auto rep = symmetric_search_surface(m, deg, o.value("relaxed", false));
        r.results["symmetric_search"] = parsed(rep.json());
        r.verdict("basis re-verification", rep.all_verified());
        return;
    }
    if (o.value("order2", false)) {
        Order2Budget b;
        if (o.contains("budget")) {
            auto v = o["budget"].get<std::vector<int>>();
            if (v.size() != 3) throw InputError("--budget takes jk,l,quot");
            b = {v[0], v[1], v[2]};
        }
        auto rep = order2_surface_search(o.value("m", 1), b);
        r.results["order2_search"] = parsed(rep.json());
        r.verdict("basis re-verification", rep.all_verified());
        return;
    }

    if (!o.contains("lambda")) throw InputError("jets needs --lambda, --gg-dims, --surface, --symmetric-search or --order2");
    int lambda = o["lambda"].get<int>();
    if (lambda < 1) throw InputError("lambda must be >= 1");
    auto J = curve_jet(lambda, o.value("force_elimination", false));
    json j;
    j["lambda"] = lambda;
    j["explicit_formula"] = J.explicit_formula;
    j["normal_form"] = J.normal_form;
    j["xchart"] = J.xchart.str();
    j["ychart"] = J.ychart.str();
    if (!J.note.empty()) j["note"] = J.note;
    std::optional<Poly> R;
    if (r.job.source.kind != Source::None) {
        R = load_curve(r);
        auto Ji = instantiate(J, *R);
        j["instantiated"] = {{"xchart", Ji.xchart.str()}, {"ychart", Ji.ychart.str()}};
    }
    r.results["jet"] = j;
    std::vector<std::string> checks = split_list(o.value("check", ""));
    json c;
    for (auto& k : checks) {
        if (k == "transition") {
            bool ok = transition_check(J, R);
            c[k] = ok;
            r.verdict("transition", ok);
        } else if (k == "symmetry") {
            bool ok = symmetry_check(J);
            c[k] = ok;
            r.verdict("symmetry", ok);
        } else if (k == "infinity") {
            if (!R) throw InputError("the infinity check needs a concrete curve");
            if (!transversal_at_infinity(*R)) throw InputError("the curve is not transversal to the line at infinity");
            try {
                bool ok = vanishing_at_infinity(J, *R);
                c[k] = ok;
                r.verdict("vanishing at infinity", ok);
            } catch (const BadDegree& e) {
                c[k] = {{"skipped", e.what()}};
            }
        } else {
            throw InputError("unknown check '" + k + "' (transition, symmetry, infinity)");
        }
    }
    if (!checks.empty()) r.results["checks"] = c;
}

void run_siu_yeung(Report& r) {
    const json& o = r.job.options;
    Poly R = load_curve(r);
    int m = o.value("m", 1);
    if (m < 1) throw InputError("m must be >= 1");
    json j;
    j["degree"] = R.total_degree();
    j["m"] = m;
    j["index_count"] = siu_yeung_indices(m).size();
    // J^top and its congruence modulo R_y with the quadric part.
    Poly Ry = R.diff(curve_y());
    auto top = siu_yeung_expand(siu_yeung_top(R, m));
    auto quad = siu_yeung_expand(RatExpr(siu_yeung_quadric(R).pow(unsigned(m)) * R.pow(unsigned(2 * m))));
    std::set<LambdaKey> keys;
    for (auto& [k, v] : top) keys.insert(k);
    for (auto& [k, v] : quad) keys.insert(k);
    bool congruent = true;
    for (auto& k : keys) {
        Poly a = top.count(k) ? top.at(k) : Poly();
        Poly b = quad.count(k) ? quad.at(k) : Poly();
        congruent = congruent && (a - b).normal_form(Ry).is_zero();
    }
    j["top_lambda_count"] = top.size();
    r.verdict("J^top congruent to (quadric)^m R^(2m) modulo R_y", congruent);
    if (o.value("solve", false)) {
        SYSolveOptions so;
        so.degree_bound = o.value("degree_bound", -1);
        auto rep = siu_yeung_solve(R, m, so);
        j["solve"] = parsed(rep.json());
        r.verdict("basis re-verification", rep.all_verified());
    }
    r.results["siu_yeung"] = j;
}

void run_egregium(Report& r) {
    const json& o = r.job.options;
    EgregiumResult e;
    if (o.contains("graph")) {
        RatExpr phi = parse(o["graph"].get<std::string>());
        r.inputs.push_back("z = " + phi.str());
        e = egregium_check_graph(phi);
    } else if (o.contains("param")) {
        auto p = split_list(o["param"].get<std::string>());
        if (p.size() != 3) throw InputError("--param takes x,y,z in (u, v)");
        RatExpr x = parse(p[0]), y = parse(p[1]), z = parse(p[2]);
        r.inputs.push_back("x = " + x.str());
        r.inputs.push_back("y = " + y.str());
        r.inputs.push_back("z = " + z.str());
        e = egregium_check_parametric(x, y, z);
    } else if (o.contains("E") && o.contains("F") && o.contains("G")) {
        MetricTriple m{parse(o["E"].get<std::string>()), parse(o["F"].get<std::string>()), parse(o["G"].get<std::string>())};
        r.inputs.push_back("E = " + m.E.str());
        r.inputs.push_back("F = " + m.F.str());
        r.inputs.push_back("G = " + m.G.str());
        e = egregium_check(m);
    } else {
        throw InputError("egregium needs --graph, --param, or all of --E --F --G");
    }
    r.results["intrinsic"] = e.intrinsic.str();
    if (e.extrinsic) {
        r.results["extrinsic"] = e.extrinsic->str();
        r.verdict("intrinsic equals extrinsic curvature", e.equal);
    }
}

void run_presets(Report& r) {
    json man = json::array();
    for (auto& n : manifold_preset_names()) {
        auto M = manifold_preset(n);
        json phi = json::array();
        for (std::size_t j = 0; j < M.phi.size(); ++j)
            phi.push_back("v" + (M.c > 1 ? std::to_string(j + 1) : std::string()) + " = " + M.phi[j].str());
        json e = {{"name", n}, {"n", M.n}, {"c", M.c}, {"graph", phi}};
        if (n == "cubic") {
            json g = json::array();
            for (auto& [gn, X] : cubic_model_generators()) g.push_back({{"name", gn}, {"field", X.str()}});
            e["automorphism_generators"] = g;
        }
        man.push_back(e);
    }
    json th = json::array();
    std::vector<std::string> tn = {"heisenberg", "heisenberg-perturbed"};
    for (int k = 0; k <= 2; ++k) tn.push_back("pseudo-sphere-2-" + std::to_string(k));
    for (auto& n : tn) {
        auto S = theta_preset(n);
        th.push_back({{"name", n}, {"n", S.n}, {"theta", "w = " + S.theta.str()}});
    }
    json cv = json::array();
    for (auto& n : curve_preset_names()) cv.push_back({{"name", n}, {"R", curve_preset(n).str()}});
    r.results["manifolds"] = man;
    r.results["theta_surfaces"] = th;
    r.results["curves"] = cv;
}

} // namespace crjet::cli
