#include "crjet/ratexpr.hpp"

#include <algorithm>
#include <unordered_map>

#include "crjet/modp.hpp"

namespace crjet {

RatExpr RatExpr::monic_den(Poly n, Poly d) {
    if (!d.lc().is_one()) {
        GaussRat inv = d.lc().inverse();
        n = n.scale(inv);
        d = d.scale(inv);
    }
    return RatExpr(Raw{}, std::move(n), std::move(d));
}

RatExpr RatExpr::make(Poly num, Poly den) {
    if (den.is_zero()) throw ZeroDenominator();
    if (num.is_zero()) return RatExpr();
    if (den.is_constant()) return monic_den(std::move(num), std::move(den));
    if (num.is_constant()) return monic_den(std::move(num), std::move(den));
    auto parts = gcd_cofactors(num, den);
    return monic_den(std::move(parts.ca), std::move(parts.cb));
}

GaussRat RatExpr::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value of a non-constant expression");
    return num_.constant_term() / den_.constant_term();
}

std::vector<VarKey> RatExpr::vars() const {
    auto a = num_.vars(), b = den_.vars();
    std::vector<VarKey> r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

RatExpr RatExpr::operator-() const { return RatExpr(Raw{}, -num_, den_); }

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_one()) return RatExpr(a.num_ + b.num_);
        return RatExpr::make(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_one()) return RatExpr(RatExpr::Raw{}, a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_one()) return RatExpr(RatExpr::Raw{}, a.num_ + b.num_ * a.den_, a.den_);
    auto g = gcd_cofactors(a.den_, b.den_);
    // a/(g*a') + b/(g*b') = (a*b' + b*a') / (g*a'*b'); only g can share
    // factors with the new numerator.
    Poly n = a.num_ * g.cb + b.num_ * g.ca;
    if (n.is_zero()) return RatExpr();
    if (g.g.is_one()) return RatExpr::monic_den(std::move(n), g.ca * b.den_);
    auto h = gcd_cofactors(n, g.g);
    return RatExpr::monic_den(std::move(h.ca), h.cb * g.ca * g.cb);
}

RatExpr operator-(const RatExpr& a, const RatExpr& b) { return a + (-b); }

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
    if (a.is_zero() || b.is_zero()) return RatExpr();
    if (a.den_.is_one() && b.den_.is_one()) return RatExpr(a.num_ * b.num_);
    // (a/b)(c/d) with cross cancellations.
    Poly n1 = a.num_, d2 = b.den_, n2 = b.num_, d1 = a.den_;
    if (!d2.is_one() && !n1.is_constant()) {
        auto g = gcd_cofactors(n1, d2);
        n1 = std::move(g.ca);
        d2 = std::move(g.cb);
    }
    if (!d1.is_one() && !n2.is_constant()) {
        auto g = gcd_cofactors(n2, d1);
        n2 = std::move(g.ca);
        d1 = std::move(g.cb);
    }
    return RatExpr::monic_den(n1 * n2, d1 * d2);
}

RatExpr RatExpr::inverse() const {
    if (is_zero()) throw ZeroDenominator();
    return monic_den(den_, num_);
}

RatExpr operator/(const RatExpr& a, const RatExpr& b) { return a * b.inverse(); }

RatExpr RatExpr::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return RatExpr(Raw{}, num_.pow(unsigned(e)), den_.pow(unsigned(e)));
}

RatExpr RatExpr::diff(VarKey v) const {
    Poly dn = num_.diff(v);
    if (den_.is_constant()) return RatExpr(Raw{}, std::move(dn), den_);
    Poly dd = den_.diff(v);
    if (dd.is_zero()) return make(std::move(dn), den_);
    // (a/b)' = (a' b1 - a b2)/(b b1) where b = g b1, b' = g b2.
    auto g = gcd_cofactors(den_, dd);
    Poly n = dn * g.ca - num_ * g.cb;
    if (n.is_zero()) return RatExpr();
    // Only factors of b can still cancel.
    return make(std::move(n), den_ * g.ca);
}

RatExpr RatExpr::diff(const std::string& v) const {
    auto k = VarTable::global().find(v);
    if (!k) throw UnknownVariable("unknown variable '" + v + "'");
    return diff(*k);
}

RatExpr RatExpr::conj() const { return monic_den(num_.conj(), den_.conj()); }

RatExpr substitute(const Poly& p, const std::map<VarKey, RatExpr>& b) {
    bool polynomial = true;
    for (auto& kv : b)
        if (!kv.second.is_polynomial()) polynomial = false;
    std::map<std::pair<VarKey, std::uint32_t>, Poly> npow, dpow;
    auto power = [&](std::map<std::pair<VarKey, std::uint32_t>, Poly>& cache, VarKey v, const Poly& base,
                     std::uint32_t e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Poly r = e == 0 ? Poly(1) : base.pow(e);
        return cache.emplace(key, std::move(r)).first->second;
    };
    // Degree of each bound variable, for the common denominator.
    std::map<VarKey, std::uint32_t> top;
    for (auto& kv : b) {
        auto d = p.degree(kv.first);
        if (d) top[kv.first] = d;
    }
    Poly acc;
    std::unordered_map<Monomial, std::vector<Term>, MonomialHash> groups;
    // Group terms by their bound-variable part to share products.
    std::vector<Monomial> order;
    for (auto& t : p.terms()) {
        Monomial::Vec bound, free;
        for (auto& f : t.m.factors()) (b.count(f.v) ? bound : free).push_back(f);
        Monomial bm = Monomial::from_factors(bound);
        auto it = groups.find(bm);
        if (it == groups.end()) {
            order.push_back(bm);
            it = groups.emplace(bm, std::vector<Term>{}).first;
        }
        it->second.push_back({Monomial::from_factors(free), t.c});
    }
    for (auto& bm : order) {
        Poly coeff = Poly::from_terms(std::move(groups[bm]));
        Poly prod = coeff;
        for (auto& kv : top) {
            auto e = bm.degree(kv.first);
            const RatExpr& be = b.at(kv.first);
            if (e) prod = prod * power(npow, kv.first, be.num(), e);
            if (!polynomial && kv.second > e) prod = prod * power(dpow, kv.first, be.den(), kv.second - e);
        }
        acc += prod;
    }
    if (polynomial) return RatExpr(acc);
    Poly den(1);
    for (auto& kv : top) {
        const RatExpr& be = b.at(kv.first);
        if (!be.den().is_one()) den = den * power(dpow, kv.first, be.den(), kv.second);
    }
    return RatExpr::make(std::move(acc), std::move(den));
}

RatExpr RatExpr::substitute(const std::map<VarKey, RatExpr>& bindings) const {
    RatExpr n = crjet::substitute(num_, bindings);
    if (den_.is_one()) return n;
    RatExpr d = crjet::substitute(den_, bindings);
    if (d.is_zero()) throw ZeroDenominator();
    return n / d;
}

bool RatExpr::eval_mod(std::uint64_t p, std::uint64_t s, const std::function<std::uint64_t(VarKey)>& val,
                       std::uint64_t& out) const {
    std::uint64_t d = den_.eval_mod(p, s, val);
    if (d == 0) return false;
    std::uint64_t n = num_.eval_mod(p, s, val);
    out = mul_mod(n, inv_mod(d, p), p);
    return true;
}

std::string RatExpr::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::size_t monomial_count(const Poly& p) { return p.size(); }

} // namespace crjet
