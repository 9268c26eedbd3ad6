#ifndef CRJET_INVARIANTS_HPP
#define CRJET_INVARIANTS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crjet/crgeom.hpp"
#include "crjet/formula.hpp"

namespace crjet {

class LeviDegenerate : public std::domain_error {
public:
    LeviDegenerate() : std::domain_error("Levi form degenerates identically") {}
};
class FreemanDegenerate : public std::domain_error {
public:
    FreemanDegenerate() : std::domain_error("Freeman form vanishes identically") {}
};
class DegenerateMetric : public std::domain_error {
public:
    DegenerateMetric() : std::domain_error("EG - F^2 vanishes identically") {}
};

enum class VerdictMode { Exact, Probabilistic, Auto };

struct InvariantOptions {
    VerdictMode mode = VerdictMode::Auto;
    int trials = kDefaultTrials;
    std::uint64_t seed = 1;
    std::size_t term_budget = 1000000; // Auto: exact normalization while pieces stay below this
};

struct InvariantReport {
    std::string invariant;
    std::optional<RatExpr> value;
    bool zero = false;
    bool exact = false;
    double confidence = 0;
    double log2_error = 0;
    int trials = 0;
    std::uint64_t prime = 0;
    std::vector<std::pair<std::string, std::uint64_t>> witness;
    std::string note;

    std::string verdict() const { return zero ? "zero" : "nonzero"; }
    std::string json(bool with_value = true) const;
};

// Decides a formula according to options.
InvariantReport evaluate(const Formula& f, const InvariantOptions& opt = {});
// Decides an exactly computed expression.
InvariantReport report_exact(const std::string& name, const RatExpr& v, const InvariantOptions& opt = {});

// n = 1 sphericity.
RatExpr levi_factor_theta(const ThetaSurface& S); // Theta_zb Theta_zwb - Theta_wb Theta_zzb
RatExpr sphericity_AJ4(const ThetaSurface& S);
RatExpr sphericity_value(const ThetaSurface& S); // the squared operator applied to AJ4
InvariantReport sphericity_expression(const ThetaSurface& S, const InvariantOptions& opt = {});

// Bordered minors of the Levi determinant for n >= 1.
struct BorderedMinorSet {
    int n = 0;
    RatExpr delta;
    std::vector<std::vector<RatExpr>> zero_col;               // [mu][l] = Delta^mu_[0_{1+l}]
    std::vector<std::vector<std::vector<RatExpr>>> tt_col;   // [tau][mu][nu] = Delta^tau_[tb^mu tb^nu]
};
BorderedMinorSet bordered_minors(const ThetaSurface& S);

using TensorIndex = std::array<int, 4>; // (k1, k2, l1, l2), 1-based
std::map<TensorIndex, RatExpr> pseudosphericity_tensor(const ThetaSurface& S);
InvariantReport pseudosphericity_verdict(const ThetaSurface& S, const InvariantOptions& opt = {});

// Class I (M^3 in C^2).
RatExpr class1_P(const GraphedCR& M);
RatExpr class1_frakI(const GraphedCR& M);                // with group parameters a, ab
RatExpr class1_frakT(const GraphedCR& M);                // with a, ab, b
Formula class1_frakI_formula(const GraphedCR& M);        // same, as a piece formula
RatExpr at_identity(const RatExpr& e);                   // a = ab = 1, b = bb = 0

// Class IV2 (M^5 in C^3, Levi rank 1).
struct IV2Data {
    RatExpr k, P, ell;
    VectorField L1, L1bar, K, T;
};
IV2Data class4_data(const GraphedCR& M);
Formula class4_W_formula(const GraphedCR& M);
Formula class4_J_formula(const GraphedCR& M);
std::pair<InvariantReport, InvariantReport> class4_WJ(const GraphedCR& M, const InvariantOptions& opt = {});

// Class III1 (M^5 in C^4).
struct Class31 {
    VectorField L, Lbar, T, S, Sbar;
    RatExpr P, Q, R, A, B;
    RatExpr E, F, G;              // from [S, T] = -G Sb - F S - E T
    RatExpr E_rpl, F_rpl, G_rpl;  // from the secondary formulas
    std::vector<RatExpr> S_L, S_Lbar, Sbar_L, S_T; // decompositions in (Sb, S, T, Lb, L)
};
Class31 class31_fundamental(const GraphedCR& M);

// Theorema Egregium.
struct MetricTriple {
    RatExpr E, F, G;
};
struct EgregiumResult {
    RatExpr intrinsic;
    std::optional<RatExpr> extrinsic;
    bool equal = false;
};
RatExpr gauss_intrinsic(const MetricTriple& m, VarKey u, VarKey v);
EgregiumResult egregium_check(const MetricTriple& m);                   // on (u, v)
EgregiumResult egregium_check_parametric(const RatExpr& x, const RatExpr& y, const RatExpr& z);
EgregiumResult egregium_check_graph(const RatExpr& phi);                // phi(x, y)

} // namespace crjet

#endif
