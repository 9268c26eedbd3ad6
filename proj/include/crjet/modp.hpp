#ifndef CRJET_MODP_HPP
#define CRJET_MODP_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace crjet {

// Primes just below 2^62, all congruent to 1 mod 4, paired with a square
// root of -1. Entry 0 is the designated zero-test prime.
struct PrimeRoot {
    std::uint64_t p;
    std::uint64_t sqrt_m1;
};
const std::vector<PrimeRoot>& prime_table();

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (std::uint64_t)((unsigned __int128)a * b % p);
}
inline std::uint64_t neg_mod(std::uint64_t a, std::uint64_t p) { return a ? p - a : 0; }
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

// Field element with a runtime modulus; used by the scalar-generic linear
// algebra templates.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}
    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    Fp operator-() const { return Fp(neg_mod(v_, p_), p_); }
    friend Fp operator+(Fp a, Fp b) { return Fp(add_mod(a.v_, b.v_, pick(a, b)), pick(a, b)); }
    friend Fp operator-(Fp a, Fp b) { return Fp(sub_mod(a.v_, b.v_, pick(a, b)), pick(a, b)); }
    friend Fp operator*(Fp a, Fp b) { return Fp(mul_mod(a.v_, b.v_, pick(a, b)), pick(a, b)); }
    friend Fp operator/(Fp a, Fp b) {
        if (b.v_ == 0) throw std::domain_error("Fp: division by zero");
        auto p = pick(a, b);
        return Fp(mul_mod(a.v_, inv_mod(b.v_, p), p), p);
    }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

private:
    // A default-constructed zero carries modulus 0 until combined.
    static std::uint64_t pick(Fp a, Fp b) { return a.p_ ? a.p_ : b.p_; }
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

// Seedable sampler; one instance per task.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed), seed_(seed) {}
    std::uint64_t uniform(std::uint64_t p) {
        std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
        return d(rng_);
    }
    std::uint64_t nonzero(std::uint64_t p) {
        std::uniform_int_distribution<std::uint64_t> d(1, p - 1);
        return d(rng_);
    }
    std::mt19937_64& engine() { return rng_; }
    std::uint64_t seed() const { return seed_; }

private:
    std::mt19937_64 rng_;
    std::uint64_t seed_;
};

} // namespace crjet

#endif
