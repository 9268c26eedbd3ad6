#include "crjet/scalar.hpp"

#include <stdexcept>

namespace crjet {

namespace {

constexpr std::int64_t kSmall = std::int64_t(1) << 62;

inline bool fits(__int128 v) { return v <= kSmall && v >= -kSmall; }

unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
    while (b) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    mpz_class hi((unsigned long)(std::uint64_t)(u >> 64));
    mpz_class lo((unsigned long)(std::uint64_t)u);
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (std::uint64_t)((unsigned __int128)a * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
    if (v >= 0) return std::uint64_t(v) % p;
    std::uint64_t m = std::uint64_t(-(v + 1)) + 1;
    m %= p;
    return m ? p - m : 0;
}

} // namespace

Rational::Rational(long long n) : n_(n), d_(1) {
    if (!fits(n)) {
        q_ = std::make_unique<mpq_class>(mpz_from_i128(n));
    }
}

Rational::Rational(long long n, long long d) : n_(0), d_(1) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) : n_(0), d_(1), q_(std::make_unique<mpq_class>(q)) {
    q_->canonicalize();
    demote();
}

Rational::Rational(const mpz_class& z) : n_(0), d_(1), q_(std::make_unique<mpq_class>(z)) {
    demote();
}

Rational Rational::from_i128(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    if (n == 0) return Rational();
    unsigned __int128 an = n < 0 ? (unsigned __int128)(-n) : (unsigned __int128)n;
    unsigned __int128 g = gcd_u128(an, (unsigned __int128)d);
    if (g != 1) { n /= (__int128)g; d /= (__int128)g; }
    Rational r;
    if (fits(n) && d <= kSmall) {
        r.n_ = (std::int64_t)n;
        r.d_ = (std::int64_t)d;
    } else {
        r.q_ = std::make_unique<mpq_class>(mpz_from_i128(n), mpz_from_i128(d));
    }
    return r;
}

void Rational::demote() {
    if (!q_) return;
    const mpz_class& num = q_->get_num();
    const mpz_class& den = q_->get_den();
    if (mpz_sizeinbase(num.get_mpz_t(), 2) <= 62 && mpz_sizeinbase(den.get_mpz_t(), 2) <= 62) {
        n_ = num.get_si();
        d_ = den.get_si();
        q_.reset();
    }
}

bool Rational::is_integer() const { return q_ ? q_->get_den() == 1 : d_ == 1; }

int Rational::sign() const {
    if (q_) return sgn(*q_);
    return (n_ > 0) - (n_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (q_) return *q_;
    mpq_class r(mpz_from_i128(n_), mpz_from_i128(d_));
    return r;
}

mpz_class Rational::numerator() const { return q_ ? q_->get_num() : mpz_from_i128(n_); }
mpz_class Rational::denominator() const { return q_ ? q_->get_den() : mpz_from_i128(d_); }

std::string Rational::str() const {
    if (q_) return q_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

std::size_t Rational::hash() const {
    if (!q_) return std::hash<std::int64_t>()(n_) * 31 + std::hash<std::int64_t>()(d_);
    return std::hash<std::string>()(q_->get_str());
}

double Rational::to_double() const { return q_ ? q_->get_d() : double(n_) / double(d_); }

bool Rational::mod(std::uint64_t p, std::uint64_t& out) const {
    std::uint64_t num, den;
    if (q_) {
        mpz_class t;
        mpz_fdiv_r_ui(t.get_mpz_t(), q_->get_num().get_mpz_t(), p);
        num = t.get_ui();
        den = mpz_fdiv_ui(q_->get_den().get_mpz_t(), p);
    } else {
        num = reduce_signed(n_, p);
        den = std::uint64_t(d_) % p;
    }
    if (den == 0) return false;
    out = mulmod(num, powmod(den, p - 2, p), p);
    return true;
}

Rational Rational::operator-() const {
    if (!q_) { Rational r; r.n_ = -n_; r.d_ = d_; return r; }
    return Rational(mpq_class(-*q_));
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.q_ && !b.q_) {
        if (a.d_ == 1 && b.d_ == 1) {
            __int128 s = (__int128)a.n_ + b.n_;
            if (fits(s)) { Rational r; r.n_ = (std::int64_t)s; return r; }
            return Rational::from_i128(s, 1);
        }
        return Rational::from_i128((__int128)a.n_ * b.d_ + (__int128)b.n_ * a.d_, (__int128)a.d_ * b.d_);
    }
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) {
    if (!a.q_ && !b.q_) {
        if (a.d_ == 1 && b.d_ == 1) {
            __int128 s = (__int128)a.n_ - b.n_;
            if (fits(s)) { Rational r; r.n_ = (std::int64_t)s; return r; }
            return Rational::from_i128(s, 1);
        }
        return Rational::from_i128((__int128)a.n_ * b.d_ - (__int128)b.n_ * a.d_, (__int128)a.d_ * b.d_);
    }
    if (b.is_zero()) return a;
    return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
}

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.q_ && !b.q_) {
        if (a.n_ == 0 || b.n_ == 0) return Rational();
        if (a.d_ == 1 && b.d_ == 1) {
            __int128 s = (__int128)a.n_ * b.n_;
            if (fits(s)) { Rational r; r.n_ = (std::int64_t)s; return r; }
            return Rational::from_i128(s, 1);
        }
        std::uint64_t an = a.n_ < 0 ? std::uint64_t(-a.n_) : std::uint64_t(a.n_);
        std::uint64_t bn = b.n_ < 0 ? std::uint64_t(-b.n_) : std::uint64_t(b.n_);
        std::uint64_t g1 = gcd_u64(an, std::uint64_t(b.d_));
        std::uint64_t g2 = gcd_u64(bn, std::uint64_t(a.d_));
        __int128 n = (__int128)(a.n_ / (std::int64_t)g1) * (b.n_ / (std::int64_t)g2);
        __int128 d = (__int128)(a.d_ / (std::int64_t)g2) * (b.d_ / (std::int64_t)g1);
        if (fits(n) && d <= kSmall) {
            Rational r; r.n_ = (std::int64_t)n; r.d_ = (std::int64_t)d; return r;
        }
        return Rational::from_i128(n, d);
    }
    if (a.is_zero() || b.is_zero()) return Rational();
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!a.q_ && !b.q_) {
        Rational inv;
        if (b.n_ < 0) { inv.n_ = -b.d_; inv.d_ = -b.n_; }
        else { inv.n_ = b.d_; inv.d_ = b.n_; }
        return a * inv;
    }
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.q_ && !b.q_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (!a.q_ || !b.q_) return false; // canonical: big values never fit inline
    return *a.q_ == *b.q_;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.q_ && !b.q_) return (__int128)a.n_ * b.d_ < (__int128)b.n_ * a.d_;
    return a.to_mpq() < b.to_mpq();
}

GaussRat GaussRat::inverse() const {
    if (im.is_zero()) {
        if (re.is_zero()) throw std::domain_error("GaussRat: division by zero");
        return GaussRat(Rational(1) / re);
    }
    Rational n = re * re + im * im;
    return GaussRat(re / n, -im / n);
}

std::string GaussRat::str() const {
    if (im.is_zero()) return re.str();
    std::string ims;
    if (im.is_one()) ims = "i";
    else if ((-im).is_one()) ims = "-i";
    else ims = im.str() + "*i";
    if (re.is_zero()) return ims;
    if (im.sign() < 0) {
        std::string neg = (-im).is_one() ? "i" : (-im).str() + "*i";
        return "(" + re.str() + " - " + neg + ")";
    }
    return "(" + re.str() + " + " + ims + ")";
}

GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    if (a.im.is_zero() && b.im.is_zero()) return GaussRat(a.re + b.re);
    return GaussRat(a.re + b.re, a.im + b.im);
}

GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    if (a.im.is_zero() && b.im.is_zero()) return GaussRat(a.re - b.re);
    return GaussRat(a.re - b.re, a.im - b.im);
}

GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    if (a.im.is_zero()) {
        if (b.im.is_zero()) return GaussRat(a.re * b.re);
        return GaussRat(a.re * b.re, a.re * b.im);
    }
    if (b.im.is_zero()) return GaussRat(a.re * b.re, a.im * b.re);
    return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

GaussRat& GaussRat::operator+=(const GaussRat& b) {
    re += b.re;
    if (!b.im.is_zero()) im += b.im;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& b) {
    re -= b.re;
    if (!b.im.is_zero()) im -= b.im;
    return *this;
}

} // namespace crjet
