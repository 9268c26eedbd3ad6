#ifndef CRJET_SCALAR_HPP
#define CRJET_SCALAR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <gmpxx.h>

namespace crjet {

// Exact rational with an inline fast path. Values whose numerator and
// denominator both fit in 62 bits live inline; anything larger spills
// into an mpq_class. Results are demoted back whenever they fit again.
class Rational {
public:
    Rational() noexcept : n_(0), d_(1) {}
    Rational(long long n);
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);
    explicit Rational(const mpz_class& z);

    Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
        if (o.q_) q_ = std::make_unique<mpq_class>(*o.q_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            n_ = o.n_; d_ = o.d_;
            q_ = o.q_ ? std::make_unique<mpq_class>(*o.q_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    bool is_zero() const { return !q_ && n_ == 0; }
    bool is_one() const { return !q_ && n_ == 1 && d_ == 1; }
    bool is_integer() const;
    int sign() const;
    bool is_small() const { return !q_; }

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    std::string str() const;
    std::size_t hash() const;
    double to_double() const;

    // Image in Z/p; false when the denominator is divisible by p.
    bool mod(std::uint64_t p, std::uint64_t& out) const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }
    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

private:
    static Rational from_i128(__int128 n, __int128 d);
    void demote();

    std::int64_t n_, d_;
    std::unique_ptr<mpq_class> q_;
};

// Gaussian rational re + im*i.
struct GaussRat {
    Rational re, im;

    GaussRat() = default;
    GaussRat(long long r) : re(r) {}
    GaussRat(Rational r) : re(std::move(r)) {}
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    static GaussRat I() { return GaussRat(Rational(0), Rational(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_one() const { return re.is_one() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    GaussRat conj() const { return GaussRat(re, -im); }
    GaussRat inverse() const;
    std::size_t hash() const { return re.hash() * 1000003u ^ im.hash(); }
    // Parenthesised when both parts are nonzero.
    std::string str() const;

    GaussRat operator-() const { return GaussRat(-re, -im); }
    friend GaussRat operator+(const GaussRat& a, const GaussRat& b);
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b);
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b);
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }
    GaussRat& operator+=(const GaussRat& b);
    GaussRat& operator-=(const GaussRat& b);
    GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }
    GaussRat& operator/=(const GaussRat& b) { return *this = *this / b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

} // namespace crjet

#endif
