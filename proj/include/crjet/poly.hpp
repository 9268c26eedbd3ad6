#ifndef CRJET_POLY_HPP
#define CRJET_POLY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "crjet/scalar.hpp"
#include "crjet/vars.hpp"

namespace crjet {

struct VarPow {
    VarKey v;
    std::uint32_t e;
    friend bool operator==(const VarPow& a, const VarPow& b) { return a.v == b.v && a.e == b.e; }
};

// Sparse power product, factors sorted by increasing key.
class Monomial {
public:
    using Vec = boost::container::small_vector<VarPow, 4>;

    Monomial() = default;
    static Monomial of(VarKey v, std::uint32_t e = 1);
    static Monomial from_factors(Vec f); // sorts and merges

    const Vec& factors() const { return f_; }
    std::uint32_t degree() const { return deg_; }
    std::uint32_t degree(VarKey v) const;
    bool is_one() const { return f_.empty(); }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const; // requires o.divides(*this)
    Monomial gcd(const Monomial& o) const;
    Monomial without(VarKey v) const;
    std::size_t hash() const;
    std::string str() const; // "1" for the empty product

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.deg_ == b.deg_ && a.f_ == b.f_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    Vec f_;
    std::uint32_t deg_ = 0;
};

// Graded lexicographic comparison: -1, 0, +1.
int grlex_cmp(const Monomial& a, const Monomial& b);
// Lexicographic comparison ignoring degree.
int lex_cmp(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
    Monomial m;
    GaussRat c;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Term-count ceiling for intermediate products on the current thread.
struct TermBudget {
    static std::size_t& limit();
    explicit TermBudget(std::size_t n) : saved_(limit()) { limit() = n; }
    ~TermBudget() { limit() = saved_; }
    TermBudget(const TermBudget&) = delete;
    TermBudget& operator=(const TermBudget&) = delete;

private:
    std::size_t saved_;
};

// Sparse multivariate polynomial over Q(i); terms strictly decreasing in
// graded lex order, no zero coefficients.
class Poly {
public:
    Poly() = default;
    Poly(long long c) : Poly(GaussRat(c)) {}
    Poly(const GaussRat& c);
    static Poly variable(VarKey v, std::uint32_t e = 1);
    static Poly monomial(const Monomial& m, const GaussRat& c);
    static Poly from_terms(std::vector<Term> terms); // any order, duplicates merged
    static Poly from_sorted(std::vector<Term> terms); // caller guarantees canonical order

    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    bool is_one() const { return t_.size() == 1 && t_[0].m.is_one() && t_[0].c.is_one(); }
    bool is_monomial() const { return t_.size() == 1; }
    GaussRat constant_term() const;
    const std::vector<Term>& terms() const { return t_; }
    const Term& lead() const { return t_.front(); }
    const GaussRat& lc() const { return t_.front().c; }

    std::vector<VarKey> vars() const; // sorted by key
    bool has_var(VarKey v) const;
    std::uint32_t degree(VarKey v) const;
    std::uint32_t total_degree() const;
    Monomial monomial_content() const; // gcd of all monomials
    bool real_coefficients() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    Poly scale(const GaussRat& c) const;
    Poly mul_monomial(const Monomial& m, const GaussRat& c) const;
    Poly div_monomial(const Monomial& m) const; // requires divisibility
    Poly pow(unsigned e) const;
    Poly monic() const;

    // Partial derivative honouring the formal-symbol derivative table.
    Poly diff(VarKey v) const;
    Poly conj() const;
    // Exact quotient, or nullopt when b does not divide *this.
    std::optional<Poly> divide_exact(const Poly& b) const;
    // Remainder of division by b in the graded lex order (single-divisor
    // normal form).
    Poly normal_form(const Poly& b) const;

    // Groups terms by their exponents in the given variables: returns
    // (monomial in vars, coefficient polynomial in the rest).
    std::vector<std::pair<Monomial, Poly>> split(const std::vector<VarKey>& vars) const;
    // Coefficient of v^k.
    Poly coeff(VarKey v, std::uint32_t k) const;

    // Image modulo p with i -> s; throws if a coefficient denominator
    // vanishes mod p.
    std::uint64_t eval_mod(std::uint64_t p, std::uint64_t s, const std::function<std::uint64_t(VarKey)>& val) const;

    std::string str() const;
    std::size_t hash() const;
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    std::vector<Term> t_;
};

std::uint64_t gauss_mod(const GaussRat& c, std::uint64_t p, std::uint64_t s);

} // namespace crjet

#endif
