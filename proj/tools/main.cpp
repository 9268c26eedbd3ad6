#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "commands.hpp"
#include "crjet/jets.hpp"

using namespace crjet;
using namespace crjet::cli;

namespace {

struct InputFlags {
    std::optional<std::string> preset, file, inline_text;
};

void add_manifold_input(CLI::App* sc, InputFlags& in) {
    sc->add_option("--preset,--model", in.preset, "bundled manifold or Theta surface (see `crjet presets`)");
    sc->add_option("--manifold", in.file, "file holding a manifold { } or theta { } block");
    sc->add_option("--expr", in.inline_text, "inline manifold { } or theta { } block");
}

int write_report(const Report& r, int code) {
    std::string text = r.to_json().dump(2) + "\n";
    if (r.job.report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(r.job.report_path);
        if (!out) {
            std::cerr << "crjet: cannot write '" << r.job.report_path << "'\n";
            return ExitInput;
        }
        out << text;
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact CR-geometry invariants and jet differentials"};
    app.require_subcommand(1);
    app.fallthrough();

    JobSpec job;
    std::optional<std::uint64_t> seed;
    app.add_flag("--exact", job.exact, "decide zero tests symbolically");
    app.add_flag("--probabilistic", job.probabilistic, "decide zero tests by sampling modulo a prime");
    std::optional<std::string> mode;
    app.add_option("--mode", mode, "exact, probabilistic or auto")
        ->check(CLI::IsMember({"exact", "probabilistic", "auto"}));
    app.add_option("--seed", seed, "sampler seed (default CRJET_SEED or 1)");
    app.add_option("--trials", job.trials, "sampling trials")->check(CLI::PositiveNumber);
    app.add_option("--budget-terms", job.budget_terms, "ceiling on stored polynomial terms");
    app.add_option("--memory-mb", job.memory_mb, "memory budget, converted to a term ceiling");
    app.add_option("--report", job.report_path, "write the JSON report here instead of stdout");
    app.add_flag("--stress", job.stress, "allow the monomial-count reproductions");

    InputFlags in;
    json& o = job.options;
    std::map<std::string, std::function<void(Report&)>> run;

    auto* classify_cmd = app.add_subcommand("classify", "general class of a CR-generic manifold");
    add_manifold_input(classify_cmd, in);
    run["classify"] = run_classify;

    std::string invariant;
    auto* inv = app.add_subcommand("invariant", "evaluate a biholomorphic invariant");
    add_manifold_input(inv, in);
    inv->add_option("--invariant", invariant, "invariant name")->required();
    run["invariant"] = run_invariant;

    auto* frame = app.add_subcommand("frame", "rational frame, Levi matrix and genericity determinant");
    add_manifold_input(frame, in);
    run["frame"] = run_frame;

    int depth = 3;
    auto* dar = app.add_subcommand("darboux", "Darboux structure of a bracket-generated frame");
    add_manifold_input(dar, in);
    dar->add_option("--depth", depth, "maximal bracket length")->check(CLI::Range(1, 5));
    run["darboux"] = run_darboux;

    std::optional<int> lambda, kappa, m, d, deg, degree_bound;
    std::string check;
    std::vector<int> budget;
    bool gg = false, surface = false, sym = false, relaxed = false, order2 = false, force = false, solve = false;
    auto* jets = app.add_subcommand("jets", "jet differentials on plane curves and surfaces");
    jets->add_option("--curve", in.inline_text, "curve polynomial R(x, y)");
    jets->add_option("--curve-file", in.file, "file holding R(x, y)");
    jets->add_option("--preset", in.preset, "curve preset, e.g. fermat-5");
    jets->add_option("--lambda", lambda, "jet order");
    jets->add_option("--check", check, "comma list of transition, symmetry, infinity");
    jets->add_flag("--force-elimination", force, "construct by elimination even where explicit");
    jets->add_flag("--gg-dims", gg, "Green-Griffiths rank and section counts");
    jets->add_option("--kappa", kappa, "jet order for --gg-dims");
    jets->add_option("--m", m, "weighted degree");
    jets->add_option("--d", d, "curve degree for --gg-dims");
    jets->add_flag("--surface", surface, "surface transition formulas");
    jets->add_flag("--symmetric-search", sym, "symmetric differentials on surfaces");
    jets->add_option("--deg", deg, "degree bound on Pi for --symmetric-search");
    jets->add_flag("--relaxed", relaxed, "relaxed control for --symmetric-search");
    jets->add_flag("--order2", order2, "order-2 surface search");
    jets->add_option("--budget", budget, "exponent budget jk,l,quot for --order2")->delimiter(',');
    run["jets"] = run_jets;

    std::optional<int> sy_m;
    auto* sy = app.add_subcommand("siu-yeung", "Siu-Yeung jet differentials and divisibility search");
    sy->add_option("--R", in.file, "file holding R(x, y)");
    sy->add_option("--curve", in.inline_text, "inline R(x, y)");
    sy->add_option("--preset", in.preset, "curve preset");
    sy->add_option("--m", sy_m, "weighted degree");
    sy->add_flag("--solve", solve, "run the divisibility search");
    sy->add_option("--degree-bound", degree_bound, "degree bound on the A coefficients");
    run["siu-yeung"] = run_siu_yeung;

    std::optional<std::string> graph, param, E, F, G;
    auto* eg = app.add_subcommand("egregium", "intrinsic against extrinsic Gaussian curvature");
    eg->add_option("--graph", graph, "z = phi(x, y)");
    eg->add_option("--param", param, "x,y,z in (u, v)");
    eg->add_option("--E", E, "first fundamental form E(u, v)");
    eg->add_option("--F", F, "first fundamental form F(u, v)");
    eg->add_option("--G", G, "first fundamental form G(u, v)");
    run["egregium"] = run_egregium;

    app.add_subcommand("presets", "list bundled models, surfaces and curves");
    run["presets"] = run_presets;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ExitInput;
    }

    Report r;
    auto t0 = std::chrono::steady_clock::now();
    try {
        job.subcommand = app.get_subcommands().front()->get_name();
        job.seed = seed ? *seed : default_seed();
        if (mode && (job.exact || job.probabilistic)) throw cli::InputError("--mode repeats --exact/--probabilistic");
        if (mode) {
            job.exact = *mode == "exact";
            job.probabilistic = *mode == "probabilistic";
        }
        if (job.exact && job.probabilistic) throw cli::InputError("--exact and --probabilistic exclude each other");
        job.source = read_source(in.preset, in.file, in.inline_text);
        if (!invariant.empty()) o["invariant"] = invariant;
        if (job.subcommand == "darboux") o["depth"] = depth;
        auto put = [&](const char* k, const std::optional<int>& v) {
            if (v) o[k] = *v;
        };
        if (job.subcommand == "jets") {
            put("lambda", lambda);
            put("kappa", kappa);
            put("m", m);
            put("d", d);
            put("deg", deg);
            if (!check.empty()) o["check"] = check;
            if (force) o["force_elimination"] = true;
            if (gg) o["gg_dims"] = true;
            if (surface) o["surface"] = true;
            if (sym) o["symmetric_search"] = true;
            if (relaxed) o["relaxed"] = true;
            if (order2) o["order2"] = true;
            if (!budget.empty()) o["budget"] = budget;
        }
        if (job.subcommand == "siu-yeung") {
            put("m", sy_m);
            put("degree_bound", degree_bound);
            if (solve) o["solve"] = true;
        }
        if (job.subcommand == "egregium") {
            if (graph) o["graph"] = *graph;
            if (param) o["param"] = *param;
            if (E) o["E"] = *E;
            if (F) o["F"] = *F;
            if (G) o["G"] = *G;
        }
        r.job = job;
        TermBudget cap(job.term_limit());
        run.at(job.subcommand)(r);
    } catch (const BudgetExceeded& e) {
        std::cerr << "crjet: " << e.what() << "\n";
        r.results["error"] = e.what();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return write_report(r, ExitBudget);
    } catch (const VerificationFailure& e) {
        std::cerr << "crjet: verification failed: " << e.what() << "\n";
        r.results["error"] = e.what();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return write_report(r, ExitVerification);
    } catch (const cli::InputError& e) {
        std::cerr << "crjet: " << e.what() << "\n";
        return ExitInput;
    } catch (const ParseError& e) {
        std::cerr << "crjet: parse error: " << e.what() << "\n";
        return ExitInput;
    } catch (const std::logic_error& e) {
        // Domain, range and argument errors all describe unusable input.
        std::cerr << "crjet: " << e.what() << "\n";
        return ExitInput;
    } catch (const std::exception& e) {
        std::cerr << "crjet: " << e.what() << "\n";
        r.results["error"] = e.what();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return write_report(r, ExitVerification);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return write_report(r, r.verification_failed ? ExitVerification : ExitComputed);
}
