#ifndef CRJET_CRGEOM_HPP
#define CRJET_CRGEOM_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "crjet/vfield.hpp"

namespace crjet {

class NotCRGeneric : public std::domain_error {
public:
    NotCRGeneric() : std::domain_error("CR-genericity determinant is identically zero") {}
};
class NotReal : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class DimensionOutOfRange : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class TopLeftLeviZero : public std::domain_error {
public:
    TopLeftLeviZero() : std::domain_error("top-left Levi entry vanishes identically; permute coordinates first") {}
};
class RankNotOne : public std::domain_error {
public:
    RankNotOne() : std::domain_error("Levi matrix does not have generic rank 1") {}
};

std::vector<std::string> holomorphic_names(int n);  // z | z1..zn
std::vector<std::string> parameter_names(int c);    // u | u1..uc
std::vector<std::string> ambient_names(int c);      // w | w1..wc

// Graph v_j = phi_j(z, zb, u) of a CR-generic submanifold of C^{n+c}.
struct GraphedCR {
    int n = 0, c = 0;
    std::vector<RatExpr> phi;
    std::vector<VarKey> z, zb, u;
    std::string name;

    // Complexifies any x_i, y_i occurring in phi and checks reality; with
    // centered, also checks phi(0) = 0 and dphi(0) = 0.
    static GraphedCR create(int n, int c, std::vector<RatExpr> phi, bool centered = false, std::string name = {});
    // phi_j are underived formal functions of (z, zb, u), or of (z, zb)
    // when rigid. Function names: fname (c = 1) or fname1..fnamec.
    static GraphedCR formal(int n, int c, const std::string& fname = "phi", bool rigid = false);

    Chart chart() const; // (z.., zb.., u..)
    // Swaps holomorphic coordinates: new z_i = old z_{perm[i]}.
    GraphedCR permuted(const std::vector<int>& perm) const;

    // Frame data, computed on first use.
    const std::vector<std::vector<RatExpr>>& A() const; // A[i][j] = coefficient of d/du_j in L_i
    const std::vector<VectorField>& L() const;
    const std::vector<VectorField>& Lbar() const;
    const RatExpr& genericity_determinant() const;

private:
    struct Frame;
    mutable std::shared_ptr<const Frame> frame_;
    const Frame& frame() const;
};

// w = Theta(z, zb, wb) solved form of a real hypersurface of C^{n+1}.
struct ThetaSurface {
    int n = 0;
    RatExpr theta;
    std::vector<VarKey> z, zb;
    VarKey w = 0, wb = 0;

    static ThetaSurface create(int n, RatExpr theta);
};

// L_1..L_n with L_i = d/dz_i + sum_j A_i^j d/du_j.
std::vector<VectorField> crgeneric_frame(const GraphedCR& M);

Matrix<RatExpr> levi_matrix(const GraphedCR& M);
RatExpr levi_factor_ell(const GraphedCR& M);
RatExpr levi_determinant(const GraphedCR& M);

struct FreemanSlant {
    RatExpr k;
    bool alternates_checked = false; // only when the Levi determinant is 0
    bool alternates_agree = false;
    RatExpr k_from_L, k_from_Lbar;  // -L2(Ab1)/L1(Ab1), -Lb1(A2)/Lb1(A1)
};
FreemanSlant freeman_slant_k(const GraphedCR& M);
// [K, Lb1] for K = k L1 + L2.
VectorField freeman_bracket(const GraphedCR& M);
RatExpr freeman_form(const GraphedCR& M);

// Searches coordinate permutations for one with nonvanishing top-left
// Levi entry. Returns the permuted manifold and the permutation used.
std::pair<GraphedCR, std::vector<int>> levi_adapted_permutation(const GraphedCR& M);

enum class ClassKind { I, II, III1, III2, IV1, IV2, LeviFlat, DegenerateProduct, HullDeficient, Unclassified };
std::string to_string(ClassKind k);

struct RankEvidence {
    std::string what;
    std::size_t rank = 0;
    bool exact = false;
};
struct ClassLabel {
    ClassKind kind = ClassKind::Unclassified;
    std::string reason;
    std::vector<RankEvidence> evidence;
    std::string name() const;
};
ClassLabel classify(const GraphedCR& M, std::uint64_t seed = 1);

RatExpr class_iii2_condition(const GraphedCR& M);

// Holomorphic field on (z.., w..) tangent to M: (X + Xbar) applied to
// (w_j - wb_j)/(2i) - phi_j(z, zb, (w + wb)/2) vanishes on M.
Chart ambient_chart(const GraphedCR& M);
std::vector<RatExpr> tangency_defect(const VectorField& X, const GraphedCR& M);
bool verify_infinitesimal_automorphism(const VectorField& X, const GraphedCR& M);

// Bundled sample manifolds.
std::vector<std::string> manifold_preset_names();
GraphedCR manifold_preset(const std::string& name); // throws std::out_of_range
std::vector<std::string> theta_preset_names();
ThetaSurface theta_preset(const std::string& name);
// The seven generators T, S1, S2, L1, L2, D, R of the cubic model's
// infinitesimal automorphisms, on its ambient chart.
std::vector<std::pair<std::string, VectorField>> cubic_model_generators();

// manifold { n = 2; c = 1; phi1 = "..."; }   or   theta { n = 1; theta = "..."; }
GraphedCR parse_manifold(const std::string& text);
ThetaSurface parse_theta(const std::string& text);

} // namespace crjet

#endif
