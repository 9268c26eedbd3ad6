#ifndef CRJET_STRESS_HPP
#define CRJET_STRESS_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "crjet/crgeom.hpp"

namespace crjet {

// Numerators of T = i[L, Lbar] on M^5 in C^4 (n = 1, c = 3):
// T = sum_k Upsilon_k / (Delta^2 Deltabar^2) d/du_k.
struct TNumerators {
    Poly delta; // det(i Id + phi_u)
    std::vector<Poly> upsilon;
};
TNumerators class31_T_numerators(const GraphedCR& M);

// Expands p with each listed variable replaced by a polynomial. Honors the
// current TermBudget on the accumulated result.
Poly expand_substitution(const Poly& p, const std::unordered_map<VarKey, Poly>& sub);

// Rewrites formal partials in (z, zb) of the graphing functions of an
// n = 1 manifold as partials in (x, y), z = x + i y, of new real functions
// prefix1..prefixc (prefix for c = 1) of (x, y, u..).
Poly to_real_partials(const Poly& p, const GraphedCR& M, const std::string& prefix);

struct MonomialCountReport {
    std::string name;
    bool completed = false;
    std::vector<std::size_t> counts;
    std::vector<std::size_t> expected;
    std::size_t budget = 0;
    double seconds = 0;
    std::string note;

    bool matches() const { return completed && counts == expected; }
    std::string json() const;
};

// Upsilon_1..3 for formal phi_1..3, in real partials; the expected value is
// the combined count.
MonomialCountReport upsilon_monomial_count(std::size_t term_budget);
// Numerators of the real and imaginary parts of the Class I primary
// invariant at the identity, for a formal non-rigid phi in real partials.
MonomialCountReport class1_delta_monomial_count(std::size_t term_budget);

} // namespace crjet

#endif
