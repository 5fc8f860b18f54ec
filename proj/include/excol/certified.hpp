#pragma once

#include "excol/common.hpp"

namespace excol {

// A closed interval [lo, hi] of exact rationals enclosing a real value.
struct RatInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
};

// Nearest rational of the form a / 2^bits below (resp. above) r.
Rational round_down_dyadic(const Rational& r, int bits);
Rational round_up_dyadic(const Rational& r, int bits);

// Enclosure of ln(x) for rational x > 0 with width <= 2^-prec_bits.
RatInterval ln_enclosure(const Rational& x, int prec_bits);

// Enclosure of e^x for rational x. The result's integer part needs about
// 1.45 * x bits; arguments whose result exceeds `max_result_bits` raise
// ResourceError instead of allocating unbounded integers.
RatInterval exp_enclosure(const Rational& x, int prec_bits, long long max_result_bits = 1LL << 18);

// floor(e^x) as an exact integer (refines the enclosure until the floor is
// pinned). Requires x >= 0.
BigInt floor_exp(const Rational& x, long long max_result_bits = 1LL << 18);

}  // namespace excol
