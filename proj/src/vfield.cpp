#include "crjet/vfield.hpp"

#include <algorithm>

#include "json.hpp"

namespace crjet {

Chart make_chart(const std::vector<std::string>& names) {
    Chart c;
    for (auto& n : names) c.push_back(var(n));
    return c;
}

VectorField::VectorField(Chart chart) : chart_(std::move(chart)), c_(chart_.size()) {}

VectorField::VectorField(Chart chart, std::vector<RatExpr> coeffs) : chart_(std::move(chart)), c_(std::move(coeffs)) {
    if (c_.size() != chart_.size()) throw SizeMismatch("coefficient count differs from chart dimension");
}

VectorField VectorField::coordinate(const Chart& chart, VarKey x) {
    VectorField v(chart);
    v.set(x, RatExpr(1));
    return v;
}

RatExpr VectorField::coeff_of(VarKey x) const {
    for (std::size_t k = 0; k < chart_.size(); ++k)
        if (chart_[k] == x) return c_[k];
    return RatExpr();
}

void VectorField::set(VarKey x, RatExpr c) {
    for (std::size_t k = 0; k < chart_.size(); ++k)
        if (chart_[k] == x) { c_[k] = std::move(c); return; }
    throw ChartMismatch();
}

bool VectorField::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const RatExpr& e) { return e.is_zero(); });
}

RatExpr VectorField::apply(const RatExpr& f) const {
    RatExpr acc;
    for (std::size_t k = 0; k < chart_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        RatExpr d = f.diff(chart_[k]);
        if (!d.is_zero()) acc += c_[k] * d;
    }
    return acc;
}

VectorField VectorField::conj() const {
    auto& vt = VarTable::global();
    bool closed = std::all_of(chart_.begin(), chart_.end(), [&](VarKey x) {
        return std::find(chart_.begin(), chart_.end(), vt.conj(x)) != chart_.end();
    });
    if (!closed) {
        // Holomorphic fields go to the conjugate chart, order preserved.
        VectorField r;
        for (std::size_t k = 0; k < chart_.size(); ++k) {
            r.chart_.push_back(vt.conj(chart_[k]));
            r.c_.push_back(c_[k].conj());
        }
        return r;
    }
    VectorField r(chart_);
    for (std::size_t k = 0; k < chart_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        r.set(vt.conj(chart_[k]), c_[k].conj());
    }
    return r;
}

VectorField VectorField::operator+(const VectorField& o) const {
    if (chart_ != o.chart_) throw ChartMismatch();
    VectorField r(chart_);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const { return *this + (-o); }

VectorField VectorField::operator-() const {
    VectorField r(chart_);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
    return r;
}

VectorField operator*(const RatExpr& f, const VectorField& X) {
    VectorField r(X.chart_);
    for (std::size_t k = 0; k < X.c_.size(); ++k) r.c_[k] = f * X.c_[k];
    return r;
}

std::string VectorField::str() const {
    std::string s;
    for (std::size_t k = 0; k < chart_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        std::string d = "d/d" + var_name(chart_[k]);
        std::string t;
        if (c_[k].is_one()) t = d;
        else if ((-c_[k]).is_one()) t = "-" + d;
        else t = "(" + c_[k].str() + ") " + d;
        if (s.empty()) s = t;
        else if (t[0] == '-') s += " - " + t.substr(1);
        else s += " + " + t;
    }
    return s.empty() ? "0" : s;
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
    if (X.chart() != Y.chart()) throw ChartMismatch();
    VectorField r(X.chart());
    for (std::size_t k = 0; k < X.chart().size(); ++k) r.set(X.chart()[k], X.apply(Y.coeff(k)) - Y.apply(X.coeff(k)));
    return r;
}

VectorField parse_field(const Chart& chart, const std::string& text) {
    Lexer lx(text);
    VectorField out(chart);
    bool first = true;
    auto is_d = [&](std::size_t k) {
        return lx.peek(k).kind == Token::Ident && lx.peek(k).text == "d" && lx.peek(k + 1).kind == Token::Sym &&
               lx.peek(k + 1).text == "/";
    };
    while (lx.peek().kind != Token::End) {
        RatExpr sign(1);
        if (lx.accept_sym("-")) sign = RatExpr(-1);
        else if (!lx.accept_sym("+") && !first) throw ParseError("expected '+' or '-'", lx.peek().pos);
        first = false;
        RatExpr c(1);
        while (!is_d(0)) {
            const Token& t = lx.peek();
            if (lx.accept_sym("(")) {
                c *= parse_expression(lx);
                lx.expect_sym(")");
            } else if (t.kind == Token::Number) {
                c *= RatExpr(GaussRat(Rational(mpq_class(mpz_class(lx.next().text)))));
            } else if (t.kind == Token::Ident) {
                auto name = lx.next().text;
                c *= name == "i" ? RatExpr::I() : RatExpr::var(VarTable::global().resolve(name, true));
            } else {
                throw ParseError("expected coefficient or d/dx", t.pos);
            }
            lx.accept_sym("*");
        }
        if (!is_d(0)) throw ParseError("expected d/dx", lx.peek().pos);
        lx.next();
        lx.next();
        auto tok = lx.next();
        if (tok.kind != Token::Ident || tok.text.size() < 2 || tok.text[0] != 'd')
            throw ParseError("expected d/d<coordinate>", tok.pos);
        auto k = VarTable::global().find(tok.text.substr(1));
        if (!k || std::find(chart.begin(), chart.end(), *k) == chart.end())
            throw ParseError("'" + tok.text.substr(1) + "' is not a chart coordinate", tok.pos);
        out.set(*k, out.coeff_of(*k) + sign * c);
    }
    return out;
}

namespace {

std::size_t mod_rank(const Matrix<RatExpr>& rows, Sampler& s) {
    const auto& pr = prime_table()[0];
    for (int attempt = 0; attempt < 50; ++attempt) {
        RandomPoint pt(s, pr.p);
        std::function<std::uint64_t(VarKey)> val = [&](VarKey k) { return pt(k); };
        Matrix<Fp> m;
        bool ok = true;
        for (auto& f : rows) {
            std::vector<Fp> row;
            for (auto& c : f) {
                std::uint64_t v = 0;
                if (!c.is_zero() && !c.eval_mod(pr.p, pr.sqrt_m1, val, v)) { ok = false; break; }
                row.emplace_back(v, pr.p);
            }
            if (!ok) break;
            m.push_back(std::move(row));
        }
        if (ok) return rank(std::move(m));
    }
    throw DegenerateSampling();
}

} // namespace

RankResult generic_matrix_rank(const Matrix<RatExpr>& m, std::uint64_t seed, bool exact) {
    RankResult r;
    if (m.empty()) { r.exact = true; return r; }
    if (!exact) {
        Sampler s1(seed), s2(seed ^ 0x9e3779b97f4a7c15ULL);
        auto a = mod_rank(m, s1), b = mod_rank(m, s2);
        r.samples = 2;
        if (a == b) { r.rank = a; return r; }
    }
    r.rank = rank(Matrix<RatExpr>(m));
    r.exact = true;
    return r;
}

RankResult generic_rank(const std::vector<VectorField>& fields, std::uint64_t seed, bool exact) {
    Matrix<RatExpr> m;
    for (auto& f : fields) {
        if (f.chart() != fields[0].chart()) throw ChartMismatch();
        m.push_back(f.coeffs());
    }
    return generic_matrix_rank(m, seed, exact);
}

HullReport lie_hull(const std::vector<VectorField>& gens, int depth, std::uint64_t seed) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    HullReport rep;
    std::vector<VectorField> all = gens, last = gens;
    rep.levels.push_back({all, generic_rank(all, seed).rank});
    for (int d = 2; d <= depth; ++d) {
        std::vector<VectorField> fresh;
        for (auto& g : gens)
            for (auto& f : last) {
                auto b = lie_bracket(g, f);
                if (!b.is_zero()) fresh.push_back(std::move(b));
            }
        all.insert(all.end(), fresh.begin(), fresh.end());
        last = std::move(fresh);
        rep.levels.push_back({all, generic_rank(all, seed).rank});
        auto r = rep.levels.back().rank;
        if (r == rep.levels[rep.levels.size() - 2].rank || r == gens[0].chart().size()) break;
    }
    for (std::size_t k = 0; k + 1 < rep.levels.size(); ++k)
        if (rep.levels[k].rank == rep.levels[k + 1].rank) { rep.stabilized_at = int(k) + 1; break; }
    return rep;
}

FrameStructure::FrameStructure(std::vector<VectorField> fields, bool verify) : f_(std::move(fields)) {
    std::size_t n = f_.size();
    if (n == 0) throw SizeMismatch("empty frame");
    for (auto& f : f_)
        if (f.chart() != f_[0].chart()) throw ChartMismatch();
    if (f_[0].chart().size() != n) throw SizeMismatch("frame length differs from chart dimension");
    // Invert the transpose of the coefficient matrix.
    Matrix<RatExpr> a(n, std::vector<RatExpr>(2 * n));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) a[k][i] = f_[i].coeff(k);
        a[k][n + k] = RatExpr(1);
    }
    auto piv = rref(a);
    if (piv.size() < n || piv[n - 1] != n - 1) throw FrameDegenerate();
    inv_.assign(n, std::vector<RatExpr>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) inv_[i][k] = a[i][n + k];
    c_.assign(n, std::vector<std::vector<RatExpr>>(n, std::vector<RatExpr>(n)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            auto br = lie_bracket(f_[i], f_[j]);
            c_[i][j] = decompose(br);
            for (std::size_t k = 0; k < n; ++k) c_[j][i][k] = -c_[i][j][k];
            if (verify) {
                VectorField re(f_[0].chart());
                for (std::size_t k = 0; k < n; ++k)
                    if (!c_[i][j][k].is_zero()) re = re + c_[i][j][k] * f_[k];
                if (re != br) throw std::logic_error("bracket table does not reproduce the bracket");
            }
        }
    }
}

std::vector<RatExpr> FrameStructure::decompose(const VectorField& X) const {
    if (X.chart() != f_[0].chart()) throw ChartMismatch();
    std::size_t n = f_.size();
    std::vector<RatExpr> lam(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (!inv_[i][k].is_zero() && !X.coeff(k).is_zero()) lam[i] += inv_[i][k] * X.coeff(k);
    return lam;
}

std::vector<RatExpr> decompose_in_frame(const VectorField& X, const std::vector<VectorField>& frame) {
    std::size_t n = frame.size();
    if (n == 0 || X.chart().size() != n) throw SizeMismatch("frame length differs from chart dimension");
    for (auto& f : frame)
        if (f.chart() != X.chart()) throw ChartMismatch();
    Matrix<RatExpr> m(n, std::vector<RatExpr>(n));
    std::vector<RatExpr> rhs(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) m[k][i] = frame[i].coeff(k);
        rhs[k] = X.coeff(k);
    }
    auto piv = rref(m);
    if (piv.size() < n) throw FrameDegenerate();
    m.assign(n, std::vector<RatExpr>(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) m[k][i] = frame[i].coeff(k);
    auto x = solve(m, rhs, RatExpr(1));
    if (!x) throw FrameDegenerate();
    return *x;
}

CoframeEqs darboux_structure(const FrameStructure& F, std::vector<std::string> labels) {
    std::size_t n = F.size();
    if (labels.empty())
        for (std::size_t k = 0; k < n; ++k) labels.push_back("omega" + std::to_string(k + 1));
    if (labels.size() != n) throw SizeMismatch("label count differs from frame length");
    CoframeEqs eq;
    eq.labels = labels;
    eq.d.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const RatExpr& c = F.structure(i, j)[k];
                if (!c.is_zero()) eq.d[k].push_back({i, j, -c});
            }
    return eq;
}

std::string CoframeEqs::json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < d.size(); ++k) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (auto& t : d[k]) {
            nlohmann::ordered_json o;
            o["i"] = t.i;
            o["j"] = t.j;
            o["coeff"] = t.coeff.str();
            terms.push_back(o);
        }
        nlohmann::ordered_json f;
        f["form"] = labels[k];
        f["terms"] = terms;
        arr.push_back(f);
    }
    return arr.dump(2);
}

std::string CoframeEqs::str() const {
    std::string s;
    for (std::size_t k = 0; k < d.size(); ++k) {
        s += "d" + labels[k] + " = ";
        if (d[k].empty()) s += "0";
        for (std::size_t t = 0; t < d[k].size(); ++t) {
            if (t) s += " + ";
            s += "(" + d[k][t].coeff.str() + ") " + labels[d[k][t].i] + "^" + labels[d[k][t].j];
        }
        s += "\n";
    }
    return s;
}

std::string LiftedForm::str() const {
    std::string s = name + " = ";
    for (std::size_t t = 0; t < terms.size(); ++t) {
        if (t) s += " + ";
        s += "(" + terms[t].second.str() + ")*" + terms[t].first;
    }
    if (terms.empty()) s += "0";
    return s;
}

std::vector<LiftedForm> lifted_coframe(const GStructure& G, const std::vector<std::string>& base,
                                       std::vector<std::string> names) {
    std::size_t n = base.size();
    if (G.m.size() != n) throw SizeMismatch("G-structure size differs from coframe length");
    for (auto& row : G.m)
        if (row.size() != n) throw SizeMismatch("G-structure matrix is not square");
    if (names.empty())
        for (auto& b : base) names.push_back(!b.empty() && b.back() == '0' ? b.substr(0, b.size() - 1) : b + "'");
    std::vector<LiftedForm> out;
    for (std::size_t r = 0; r < n; ++r) {
        LiftedForm f{names[r], {}};
        for (std::size_t c = 0; c < n; ++c)
            if (!G.m[r][c].is_zero()) f.terms.push_back({base[c], G.m[r][c]});
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace crjet
