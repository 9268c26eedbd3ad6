#ifndef CRJET_SYMBOLICS_HPP
#define CRJET_SYMBOLICS_HPP

#include "crjet/gcd.hpp"
#include "crjet/linalg.hpp"
#include "crjet/parse.hpp"
#include "crjet/ratexpr.hpp"
#include "crjet/zerotest.hpp"

namespace crjet {

inline RatExpr determinant(const Matrix<RatExpr>& m) { return determinant(m, RatExpr(1)); }

// Shorthand used throughout: parse one expression.
inline RatExpr R(const std::string& s) { return parse(s); }

} // namespace crjet

#endif
