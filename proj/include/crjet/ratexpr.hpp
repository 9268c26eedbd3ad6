#ifndef CRJET_RATEXPR_HPP
#define CRJET_RATEXPR_HPP

#include <map>
#include <string>
#include <utility>

#include "crjet/gcd.hpp"
#include "crjet/poly.hpp"

namespace crjet {

class ZeroDenominator : public std::domain_error {
public:
    ZeroDenominator() : std::domain_error("denominator is identically zero") {}
};

// Canonical quotient num/den: gcd(num, den) = 1 and den has graded-lex
// leading coefficient 1.
class RatExpr {
public:
    RatExpr() : den_(1) {}
    RatExpr(long long c) : num_(c), den_(1) {}
    RatExpr(const GaussRat& c) : num_(c), den_(1) {}
    RatExpr(Poly p) : num_(std::move(p)), den_(1) {}
    static RatExpr make(Poly num, Poly den);
    static RatExpr var(VarKey v) { return RatExpr(Poly::variable(v)); }
    static RatExpr var(const std::string& name) { return var(crjet::var(name)); }
    static RatExpr I() { return RatExpr(GaussRat::I()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_one(); }
    GaussRat constant_value() const; // requires is_constant()
    std::size_t size() const { return num_.size() + den_.size(); }
    std::uint32_t degree_bound() const { return std::max(num_.total_degree(), den_.total_degree()); }
    bool has_var(VarKey v) const { return num_.has_var(v) || den_.has_var(v); }
    std::vector<VarKey> vars() const;

    RatExpr operator-() const;
    friend RatExpr operator+(const RatExpr& a, const RatExpr& b);
    friend RatExpr operator-(const RatExpr& a, const RatExpr& b);
    friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
    friend RatExpr operator/(const RatExpr& a, const RatExpr& b);
    RatExpr& operator+=(const RatExpr& b) { return *this = *this + b; }
    RatExpr& operator-=(const RatExpr& b) { return *this = *this - b; }
    RatExpr& operator*=(const RatExpr& b) { return *this = *this * b; }
    RatExpr& operator/=(const RatExpr& b) { return *this = *this / b; }
    RatExpr pow(int e) const;
    RatExpr inverse() const;

    RatExpr diff(VarKey v) const;
    RatExpr diff(const std::string& v) const;
    RatExpr conj() const;
    RatExpr substitute(const std::map<VarKey, RatExpr>& bindings) const;

    // Value mod p with i -> s; false when the denominator vanishes there.
    bool eval_mod(std::uint64_t p, std::uint64_t s, const std::function<std::uint64_t(VarKey)>& val,
                  std::uint64_t& out) const;

    std::string str() const;
    std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }
    friend bool operator==(const RatExpr& a, const RatExpr& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatExpr& a, const RatExpr& b) { return !(a == b); }

private:
    struct Raw {};
    RatExpr(Raw, Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {}
    static RatExpr monic_den(Poly n, Poly d);

    Poly num_;
    Poly den_;
};

// Simultaneous substitution into a polynomial; result as a quotient.
RatExpr substitute(const Poly& p, const std::map<VarKey, RatExpr>& bindings);

std::size_t monomial_count(const Poly& p);

} // namespace crjet

#endif
