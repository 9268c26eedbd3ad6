#ifndef CRJET_JETS_HPP
#define CRJET_JETS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "crjet/symbolics.hpp"

namespace crjet {

class EliminationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class SolveFailed : public std::runtime_error {
public:
    SolveFailed() : std::runtime_error("R_y vanishes identically; jets cannot be solved") {}
};
class SingularMap : public std::runtime_error {
public:
    SingularMap() : std::runtime_error("chart change has identically vanishing Jacobian") {}
};
class BadDegree : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class BasisViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};
class BudgetTooSmall : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------- jet calculus

// x^(s) for s >= 1, x itself for s = 0.
VarKey jet_var(VarKey base, int s);
// Sum of s * exponent over the jet variables of a monomial.
int jet_weight(const Monomial& m);
// Highest jet order present (0 when none).
int max_jet_order(const RatExpr& e);

// Polynomial in jets with coefficients rational in the base variables.
struct JetPoly {
    RatExpr expr;
    std::vector<VarKey> coords;
    int kappa = 0;

    static JetPoly of(RatExpr e, std::vector<VarKey> coords);
    // Weighted-homogeneous components keyed by weight; the denominator is
    // shared and must be free of jets.
    std::map<int, RatExpr> components() const;
    bool homogeneous(int weight) const;
};

// D = sum_i sum_s x_i^(s+1) d/dx_i^(s) + sum_i x_i' d/dx_i, the chain rule
// reaching formal derivative symbols of the coordinates.
Poly total_derivative(const Poly& p, const std::vector<VarKey>& coords);
RatExpr total_derivative(const RatExpr& e, const std::vector<VarKey>& coords, int times = 1);
JetPoly total_derivative(const JetPoly& j);

// The closed-form kappa-th derivative of R(f(zeta)) = 0.
Poly faa_di_bruno(const Poly& R, const std::vector<VarKey>& coords, int kappa);

// ---------------------------------------------------------------- plane curves

VarKey curve_x();
VarKey curve_y();
// The formal function R(x, y) and its partial symbols.
int curve_function();
RatExpr curve_partial(int i, int j);
// Concrete partials of R substituted for the formal symbols.
RatExpr instantiate_curve(const RatExpr& e, const Poly& R);

// fermat-<d> for 2 <= d <= 8: x^d + y^d - 1.
std::vector<std::string> curve_preset_names();
Poly curve_preset(const std::string& name); // throws std::out_of_range

// x <-> y, x^(s) <-> y^(s), R_{x^i y^j} <-> R_{x^j y^i}.
RatExpr chart_swap(const RatExpr& e);

struct TwoChartJet {
    int lambda = 0;
    RatExpr xchart; // jets of y, denominators powers of R_x
    RatExpr ychart; // jets of x, denominators powers of R_y
    bool explicit_formula = false;
    bool normal_form = false; // x-chart free of R partials with two or more y-derivatives
    std::vector<std::pair<std::string, RatExpr>> corrections; // lower products and their polynomial weights
    std::string note;
};

// Generating jet differentials for formal R: explicit for lambda <= 3,
// elimination from lambda - 1 beyond (or for every lambda when forced).
TwoChartJet curve_jet(int lambda, bool force_elimination = false);
TwoChartJet instantiate(const TwoChartJet& J, const Poly& R);

// y^(s) for s = 1..order solved from D^s(R) = 0 over 1/R_y, in x-chart
// jets. Formal R when R is empty.
std::map<VarKey, RatExpr> solve_curve_jets(int order, const std::optional<Poly>& R = std::nullopt);
bool transition_check(const TwoChartJet& J, const std::optional<Poly>& R = std::nullopt);
// Literal swap with global sign maps the x-chart to the y-chart, and the
// swap is an involution on both.
bool symmetry_check(const TwoChartJet& J);

// Jets of old coordinates through old = map(new). Includes order 0.
std::map<VarKey, RatExpr> prolong_chart_change(const std::map<VarKey, RatExpr>& map,
                                               const std::vector<VarKey>& new_coords, int kappa);

// The chart (x2, y2) = (x/y, 1/y) capturing the line at infinity.
VarKey infinity_x();
VarKey infinity_y();
Poly infinity_polynomial(const Poly& R); // R2 = y2^d R(x2/y2, 1/y2)
bool transversal_at_infinity(const Poly& R);
// An x-chart expression (jets of y, concrete or formal partials already
// instantiated) written in the chart at infinity.
RatExpr transport_to_infinity(const RatExpr& xchart, const Poly& R);
struct InfinityReport {
    bool holomorphic = false; // denominator nonzero at the points at infinity
    bool vanishes = false;    // numerator in <y2, R2>
    RatExpr transported;
};
InfinityReport infinity_report(const RatExpr& xchart, const Poly& R);
// Requires deg R >= lambda + 3 (BadDegree otherwise).
bool vanishing_at_infinity(const TwoChartJet& J, const Poly& R);

// The first-order complete-intersection identity for two equations in
// three variables, checked on formal R^1, R^2.
bool complete_intersection_first_order_check();

// ---------------------------------------------------------------- counting

// #{(m_1..m_kappa) : m_1 + 2 m_2 + ... + kappa m_kappa = m}.
long long gg_rank(int kappa, int m);
std::vector<std::vector<int>> weighted_partitions(int kappa, int m);
// C(s, 2) with C(s, 2) = 0 for s < 2; counts clamps when asked.
long long binom2(long long s, int* clamps = nullptr);
long long h0_line(long long t, long long d); // t >= d branch formula, clamped
long long genus(long long d);

struct SectionCount {
    long long value = 0;
    int clamped = 0; // binomials set to zero by the convention
    int terms = 0;
};
// Sum over partitions of the binomial difference at
// delta = m_1 (d - 3) + ... + m_kappa (d - kappa - 2).
SectionCount gg_sections_dim_curve(int kappa, int m, int d);
// Same sum at (m_1 + ... + m_kappa)(d - 3), the graded-bundle count.
SectionCount gg_graded_h0(int kappa, int m, int d);

// Multi-indices alpha in N^nvars with 1 <= |alpha| <= order, enumerated.
long long count_partial_derivatives(int nvars, int order);
// Monomials of degree <= deg in nvars variables, enumerated.
long long count_monomials(int nvars, int deg);

// ---------------------------------------------------------------- surfaces

int surface_function(); // R3(x, y, z)
RatExpr surface_partial(int i, int j, int k);
// y', y'' solved from D R3 = D^2 R3 = 0 over 1/R_y.
std::map<VarKey, RatExpr> solve_surface_jets(int order);

struct SurfaceTransitions {
    bool first = false;           // y'/R_x = -x'/R_y - (z'/R_y)(R_z/R_x)
    bool second = false;          // Wronskian formula, brackets entering with +
    bool printed_signs = false;   // the Wronskian formula with the brackets subtracted
    bool rewrite = false;         // rewritten in r_* with r_ab = R_ab / R_y
    bool rewrite_divided = false; // the same divided by R_x = r_x R_y
    bool printed_table = false;   // the rewrite under the table as typeset
    bool negative_control = false; // dropping the factor 2 breaks the second formula
};
SurfaceTransitions surface_transition_check();

// Right side of the second transition formula, with an adjustable factor
// on the x'(z')^2 bracket and an overall sign on the brackets for
// negative controls.
RatExpr surface_wronskian_rhs(const RatExpr& two = RatExpr(2), const RatExpr& sign = RatExpr(1));

struct LinearSystemReport {
    std::string name;
    std::size_t unknowns = 0;
    std::size_t constraints = 0;
    std::size_t rank = 0;
    std::size_t dimension = 0;
    std::vector<std::string> labels;                  // one per unknown
    std::vector<std::vector<Rational>> basis;
    std::vector<bool> verified;                       // one per basis element
    std::string note;

    bool all_verified() const;
    // Membership of a vector in the span of the basis.
    bool contains(const std::vector<Rational>& v) const;
    std::string json() const;
};

// Pi_{j,k}(U, V) with deg <= degPi; Pi = 0 is expected for the strict
// system. The relaxed control uses the prefactor 1/R_x^m and admits R_x^m
// on the target, so (J^1)^m = (y'/R_x)^m becomes a solution.
LinearSystemReport symmetric_search_surface(int m, int degPi, bool relaxed = false);
// Index of the unknown Pi_{j,k} coefficient of U^p V^q.
std::size_t symmetric_search_index(int m, int degPi, int j, int p, int q);

struct Order2Budget {
    int jk = 1;    // bound on j and k
    int l = 1;     // bound on l
    int quot = 1;  // bound on a..h
};
LinearSystemReport order2_surface_search(int m, const Order2Budget& b);
// The number of admissible generators, without solving.
std::size_t order2_generator_count(int m, const Order2Budget& b);

// ---------------------------------------------------------------- Siu-Yeung

struct SYIndex {
    int j, k, p, q;
    friend bool operator<(const SYIndex& a, const SYIndex& b) {
        return std::tie(a.j, a.k, a.p, a.q) < std::tie(b.j, b.k, b.p, b.q);
    }
    friend bool operator==(const SYIndex& a, const SYIndex& b) { return !(a < b) && !(b < a); }
};
std::vector<SYIndex> siu_yeung_indices(int m);

struct SYBuild {
    RatExpr R1, R2; // R', R''
    RatExpr bracket; // |x' R'; x'' R''|
    RatExpr J;
};
SYBuild siu_yeung_build(const Poly& R, const std::map<SYIndex, Poly>& A, int m);

struct LambdaKey {
    int alpha, beta, gamma;
    friend bool operator<(const LambdaKey& a, const LambdaKey& b) {
        return std::tie(a.alpha, a.beta, a.gamma) < std::tie(b.alpha, b.beta, b.gamma);
    }
    friend bool operator==(const LambdaKey& a, const LambdaKey& b) { return !(a < b) && !(b < a); }
};
using LambdaTable = std::map<LambdaKey, Poly>;

VarKey wronskian_var(); // W = x'y'' - x''y'
LambdaTable siu_yeung_expand(const RatExpr& J);
RatExpr siu_yeung_rebuild(const LambdaTable& t);
// Direct table through |x' R'; x'' R''| = R_y W + x' Q_2.
LambdaTable siu_yeung_table(const Poly& R, const std::map<SYIndex, Poly>& A, int m);
// (x'^3 R_xx + 2 x'^2 y' R_xy + x' y'^2 R_yy).
Poly siu_yeung_quadric(const Poly& R);
// J^top = |x' R'; x'' R''|^m R^(2m), weight 3m.
RatExpr siu_yeung_top(const Poly& R, int m);

struct SYSolveOptions {
    int degree_bound = -1; // default d - 3m - 1
};
LinearSystemReport siu_yeung_solve(const Poly& R, int m, const SYSolveOptions& opt = {});
// Unknown order of siu_yeung_solve: index-major, then monomials x^a y^b by
// increasing total degree and decreasing a.
std::vector<std::pair<SYIndex, Monomial>> siu_yeung_unknowns(int m, int degree_bound);
std::map<SYIndex, Poly> siu_yeung_family(const std::vector<Rational>& v, int m, int degree_bound);

} // namespace crjet

#endif
