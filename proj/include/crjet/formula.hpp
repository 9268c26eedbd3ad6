#ifndef CRJET_FORMULA_HPP
#define CRJET_FORMULA_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crjet/symbolics.hpp"

namespace crjet {

// Degree bookkeeping for num/den through a formula; the numerator bound
// feeds the Schwartz-Zippel error estimate.
struct DegBound {
    std::uint64_t num = 0, den = 0;
    friend DegBound operator+(DegBound a, DegBound b) {
        return {std::max(a.num + b.den, b.num + a.den), a.den + b.den};
    }
    friend DegBound operator-(DegBound a, DegBound b) { return a + b; }
    friend DegBound operator*(DegBound a, DegBound b) { return {a.num + b.num, a.den + b.den}; }
    friend DegBound operator/(DegBound a, DegBound b) { return {a.num + b.den, a.den + b.num}; }
    DegBound operator-() const { return *this; }
};

// Constants of the scalar type a formula is instantiated with.
template <class S> struct Ctx;

template <> struct Ctx<RatExpr> {
    RatExpr c(long long n, long long d = 1) const { return RatExpr(GaussRat(Rational(n, d))); }
    RatExpr i() const { return RatExpr::I(); }
};
template <> struct Ctx<Fp> {
    std::uint64_t p, s;
    Fp c(long long n, long long d = 1) const {
        auto m = [&](long long x) { return x >= 0 ? std::uint64_t(x) % p : neg_mod(std::uint64_t(-x) % p, p); };
        return Fp(m(n), p) / Fp(m(d), p);
    }
    Fp i() const { return Fp(s, p); }
};
template <> struct Ctx<DegBound> {
    DegBound c(long long, long long = 1) const { return {}; }
    DegBound i() const { return {}; }
};

// A rational formula in exactly computed pieces, usable exactly, mod p, or
// for degree bounds.
struct Formula {
    std::string name;
    std::vector<RatExpr> pieces;
    std::function<RatExpr(const std::vector<RatExpr>&, const Ctx<RatExpr>&)> exact;
    std::function<Fp(const std::vector<Fp>&, const Ctx<Fp>&)> modular;
    std::function<DegBound(const std::vector<DegBound>&, const Ctx<DegBound>&)> degree;

    RatExpr value() const { return exact(pieces, Ctx<RatExpr>{}); }
    std::uint64_t degree_bound() const;
    std::size_t pieces_size() const;
};

template <class F> Formula make_formula(std::string name, std::vector<RatExpr> pieces, F f) {
    Formula out;
    out.name = std::move(name);
    out.pieces = std::move(pieces);
    out.exact = [f](const std::vector<RatExpr>& p, const Ctx<RatExpr>& c) { return f(p, c); };
    out.modular = [f](const std::vector<Fp>& p, const Ctx<Fp>& c) { return f(p, c); };
    out.degree = [f](const std::vector<DegBound>& p, const Ctx<DegBound>& c) { return f(p, c); };
    return out;
}

} // namespace crjet

#endif
