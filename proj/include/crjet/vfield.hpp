#ifndef CRJET_VFIELD_HPP
#define CRJET_VFIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "crjet/symbolics.hpp"

namespace crjet {

class ChartMismatch : public std::invalid_argument {
public:
    ChartMismatch() : std::invalid_argument("vector fields live on different charts") {}
};
class FrameDegenerate : public std::runtime_error {
public:
    FrameDegenerate() : std::runtime_error("frame matrix determinant is identically zero") {}
};
class SizeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Chart = std::vector<VarKey>;
Chart make_chart(const std::vector<std::string>& names);

// Derivation sum_k c_k d/dx_k on an ordered chart.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(Chart chart);
    VectorField(Chart chart, std::vector<RatExpr> coeffs);
    static VectorField coordinate(const Chart& chart, VarKey x);

    const Chart& chart() const { return chart_; }
    const std::vector<RatExpr>& coeffs() const { return c_; }
    const RatExpr& coeff(std::size_t k) const { return c_[k]; }
    RatExpr coeff_of(VarKey x) const;
    void set(VarKey x, RatExpr c);
    bool is_zero() const;

    RatExpr apply(const RatExpr& f) const;
    VectorField conj() const;
    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator-() const;
    friend VectorField operator*(const RatExpr& f, const VectorField& X);
    bool operator==(const VectorField& o) const { return chart_ == o.chart_ && c_ == o.c_; }
    bool operator!=(const VectorField& o) const { return !(*this == o); }

    // "d/dz + (expr) d/du" in the field block syntax.
    std::string str() const;

private:
    Chart chart_;
    std::vector<RatExpr> c_;
};

VectorField lie_bracket(const VectorField& X, const VectorField& Y);

// Parses "d/dz + (expr) d/du" (optionally "(expr)*d/dx").
VectorField parse_field(const Chart& chart, const std::string& text);

struct RankResult {
    std::size_t rank = 0;
    bool exact = false;
    int samples = 0;
};

// Rank over the fraction field. Probabilistic by default: two independent
// seeds must agree; otherwise falls back to exact elimination.
RankResult generic_rank(const std::vector<VectorField>& fields, std::uint64_t seed = 1, bool exact = false);
RankResult generic_matrix_rank(const Matrix<RatExpr>& m, std::uint64_t seed = 1, bool exact = false);

struct HullLevel {
    std::vector<VectorField> fields; // cumulative
    std::size_t rank = 0;
};
struct HullReport {
    std::vector<HullLevel> levels;
    int stabilized_at = -1; // first depth whose rank equals the next one's
};
HullReport lie_hull(const std::vector<VectorField>& generators, int depth, std::uint64_t seed = 1);

class FrameStructure {
public:
    // Computes and verifies the bracket table c[i][j][k].
    explicit FrameStructure(std::vector<VectorField> fields, bool verify = true);

    const std::vector<VectorField>& fields() const { return f_; }
    std::size_t size() const { return f_.size(); }
    const std::vector<RatExpr>& structure(std::size_t i, std::size_t j) const { return c_[i][j]; }
    // Coefficients of X in the frame, in frame order.
    std::vector<RatExpr> decompose(const VectorField& X) const;

private:
    std::vector<VectorField> f_;
    Matrix<RatExpr> inv_; // inverse transpose: lambda = inv_ * coeffs
    std::vector<std::vector<std::vector<RatExpr>>> c_;
};

std::vector<RatExpr> decompose_in_frame(const VectorField& X, const std::vector<VectorField>& frame);

struct WedgeTerm {
    std::size_t i, j;
    RatExpr coeff;
};
struct CoframeEqs {
    std::vector<std::string> labels;
    std::vector<std::vector<WedgeTerm>> d; // d(omega^k) = sum coeff omega^i ^ omega^j, i < j
    std::string json() const;
    std::string str() const;
};

CoframeEqs darboux_structure(const FrameStructure& F, std::vector<std::string> labels = {});

struct GStructure {
    Matrix<RatExpr> m;
    std::vector<std::string> notes; // e.g. "a != 0"
    RatExpr det() const { return determinant(m); }
};

struct LiftedForm {
    std::string name;
    std::vector<std::pair<std::string, RatExpr>> terms; // coefficient times base form
    std::string str() const;
};
std::vector<LiftedForm> lifted_coframe(const GStructure& G, const std::vector<std::string>& base,
                                       std::vector<std::string> names = {});

} // namespace crjet

#endif
