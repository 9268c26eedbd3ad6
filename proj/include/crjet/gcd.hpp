#ifndef CRJET_GCD_HPP
#define CRJET_GCD_HPP

#include <cstdint>
#include <vector>

#include "crjet/poly.hpp"

namespace crjet {

// Monic (graded-lex leading coefficient 1) gcd over Q(i).
Poly gcd(const Poly& a, const Poly& b);

struct GcdParts {
    Poly g;  // monic gcd
    Poly ca; // a / g
    Poly cb; // b / g
};
GcdParts gcd_cofactors(const Poly& a, const Poly& b);

// Dense univariate polynomials over Z/p, coefficient k at index k.
namespace upoly {
using U = std::vector<std::uint64_t>;
void trim(U& a);
int deg(const U& a); // -1 for zero
std::uint64_t eval(const U& a, std::uint64_t x, std::uint64_t p);
U mul(const U& a, const U& b, std::uint64_t p);
U gcd(U a, U b, std::uint64_t p); // monic
bool divide(const U& a, const U& b, U& q, std::uint64_t p); // exact
} // namespace upoly

} // namespace crjet

#endif
