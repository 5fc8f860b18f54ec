#include "excol/certified.hpp"

#include <map>
#include <mutex>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace excol {

namespace mp = boost::multiprecision;

namespace {

BigInt bigint_floor(const Rational& r) {
    BigInt num = mp::numerator(r);
    BigInt den = mp::denominator(r);
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && num % den != 0) q -= 1;
    return q;
}

Rational pow2_rational(long long e) {
    if (e >= 0) return Rational(BigInt(1) << e);
    return Rational(1, BigInt(1) << (-e));
}

// floor(log2 |r|) within +-1, r != 0.
long long ilog2_approx(const Rational& r) {
    BigInt num = mp::numerator(r);
    if (num < 0) num = -num;
    BigInt den = mp::denominator(r);
    return static_cast<long long>(mp::msb(num)) - static_cast<long long>(mp::msb(den));
}

Rational dyadic_round(const Rational& r, long long frac_bits, bool up) {
    BigInt num = mp::numerator(r);
    BigInt den = mp::denominator(r);
    if (frac_bits >= 0)
        num <<= frac_bits;
    else
        den <<= -frac_bits;
    BigInt q = num / den;
    BigInt rem = num % den;
    if (rem != 0) {
        if (up && num > 0) q += 1;
        if (!up && num < 0) q -= 1;
    }
    Rational res(q);
    return frac_bits >= 0 ? res / pow2_rational(frac_bits) * Rational(1)
                          : res * pow2_rational(-frac_bits);
}

// Round keeping about `sig` significant bits.
Rational round_sig(const Rational& r, long long sig, bool up) {
    if (r == 0) return r;
    return dyadic_round(r, sig - ilog2_approx(r), up);
}

struct Iv {
    Rational lo, hi;
};

Iv round_iv(const Iv& v, long long sig) {
    return Iv{round_sig(v.lo, sig, false), round_sig(v.hi, sig, true)};
}

Iv mul_iv(const Iv& a, const Iv& b, long long sig) {
    Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    Rational lo = std::min(std::min(c1, c2), std::min(c3, c4));
    Rational hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return round_iv(Iv{lo, hi}, sig);
}

Iv add_iv(const Iv& a, const Iv& b, long long sig) {
    return round_iv(Iv{a.lo + b.lo, a.hi + b.hi}, sig);
}

// ln(y) for exact rational y in [1/2, 2] via the atanh series. The partial
// sums are exact; only the tail is bounded outward.
Iv ln_core(const Rational& y, long long prec) {
    if (y == 1) return Iv{0, 0};
    Rational z = (y - 1) / (y + 1);  // |z| <= 1/3
    bool neg = z < 0;
    Rational az = neg ? Rational(-z) : z;
    Rational az2 = az * az;
    Rational term = az;
    Rational sum = 0;
    Rational eps = pow2_rational(-(prec + 6));
    Rational tail;
    for (int i = 0;; ++i) {
        sum += term / (2 * i + 1);
        term *= az2;
        tail = term / ((2 * i + 3) * (1 - az2));
        if (tail < eps) break;
    }
    Iv result{2 * sum, 2 * (sum + tail)};
    if (neg) return Iv{-result.hi, -result.lo};
    return result;
}

Iv e_enclosure(long long prec) {
    BigInt partial = 1;  // sum_{i<=n} n!/i!
    BigInt fact = 1;
    long long n = 0;
    while (static_cast<long long>(mp::msb(fact)) <= prec + 4) {
        ++n;
        fact *= n;
        partial = partial * n + 1;
    }
    Rational lo(partial, fact);
    Rational tail = Rational(2) / (fact * (n + 1));
    return Iv{lo, lo + tail};
}

Iv pow_iv(Iv base, BigInt e, long long sig) {
    Iv result{1, 1};
    while (e > 0) {
        if ((e & 1) != 0) result = mul_iv(result, base, sig);
        e >>= 1;
        if (e > 0) base = mul_iv(base, base, sig);
    }
    return result;
}

// e^f for rational f in [0, 1).
Iv exp_frac(const Rational& f, long long prec) {
    if (f == 0) return Iv{1, 1};
    long long sig = prec + 32;
    Iv fv{round_sig(f, sig, false), round_sig(f, sig, true)};
    Iv term{1, 1};
    Iv sum{1, 1};
    Rational eps = pow2_rational(-(prec + 4));
    for (int i = 1;; ++i) {
        term = mul_iv(term, fv, sig);
        term = round_iv(Iv{term.lo / i, term.hi / i}, sig);
        sum = add_iv(sum, term, sig);
        if (term.hi < eps) {
            // ratio of consecutive terms is below 1/2 from here on
            sum.hi += 2 * term.hi;
            break;
        }
    }
    return sum;
}

}  // namespace

Rational round_down_dyadic(const Rational& r, int bits) { return dyadic_round(r, bits, false); }
Rational round_up_dyadic(const Rational& r, int bits) { return dyadic_round(r, bits, true); }

namespace {

RatInterval ln_enclosure_uncached(const Rational& x, int prec_bits) {
    long long prec = prec_bits + 16;
    long long t = ilog2_approx(x);
    Rational y = x * pow2_rational(-t);
    while (y >= Rational(3, 2)) {
        y /= 2;
        ++t;
    }
    while (y < Rational(3, 4)) {
        y *= 2;
        --t;
    }
    long long sig = prec + 32;
    Iv yv{round_sig(y, sig, false), round_sig(y, sig, true)};
    Iv lny{ln_core(yv.lo, prec).lo, ln_core(yv.hi, prec).hi};
    Iv ln2 = ln_core(Rational(2), prec);
    Iv tln2 = t >= 0 ? Iv{t * ln2.lo, t * ln2.hi} : Iv{t * ln2.hi, t * ln2.lo};
    return RatInterval{tln2.lo + lny.lo, tln2.hi + lny.hi};
}

}  // namespace

RatInterval ln_enclosure(const Rational& x, int prec_bits) {
    if (x <= 0) throw ContractError("ln_enclosure: argument must be positive");
    static std::mutex cache_mutex;
    static std::map<std::pair<Rational, int>, RatInterval> cache;
    std::pair<Rational, int> key{x, prec_bits};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    RatInterval result = ln_enclosure_uncached(x, prec_bits);
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (cache.size() > 4096) cache.clear();
    cache.emplace(std::move(key), result);
    return result;
}

RatInterval exp_enclosure(const Rational& x, int prec_bits, long long max_result_bits) {
    if (x < 0) {
        RatInterval inv = exp_enclosure(-x, prec_bits + 2, max_result_bits);
        return RatInterval{round_sig(1 / inv.hi, prec_bits + 16, false),
                           round_sig(1 / inv.lo, prec_bits + 16, true)};
    }
    BigInt a = bigint_floor(x);
    Rational f = x - Rational(a);
    // result magnitude is about 1.4427 * x bits
    BigInt result_bits = (a + 1) * 14427 / 10000 + 16;
    if (result_bits + prec_bits > max_result_bits)
        throw ResourceError("exp_enclosure: result would exceed the configured size guard");
    long long prec = prec_bits + static_cast<long long>(result_bits) + 64;

    Iv e = e_enclosure(prec);
    Iv pa = pow_iv(e, a, prec);
    Iv pf = exp_frac(f, prec);
    Iv res = mul_iv(pa, pf, prec);
    return RatInterval{res.lo, res.hi};
}

BigInt floor_exp(const Rational& x, long long max_result_bits) {
    if (x < 0) throw ContractError("floor_exp: argument must be nonnegative");
    for (int prec = 64; prec <= 4096; prec *= 2) {
        RatInterval enc = exp_enclosure(x, prec, max_result_bits);
        BigInt lo = bigint_floor(enc.lo);
        BigInt hi = bigint_floor(enc.hi);
        if (lo == hi) return lo;
    }
    throw ResourceError("floor_exp: could not pin the floor");
}

}  // namespace excol
