#include "gopm/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gopm {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Strong-probable-prime test to base a, with n odd and n-1 = d * 2^s.
bool sprp(uint64_t n, uint64_t a, uint64_t d, int s) {
    uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// This base set decides primality exactly for every n < 2^64.
constexpr uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

uint64_t isqrt64(uint64_t n) {
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<__uint128_t>(r) * r > n) --r;
    while (static_cast<__uint128_t>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// One-pass sieve of the consecutive window [lo, lo+count-1] into mask.flags.
void sieve_consecutive(PrimeMask& mask, uint64_t lo, uint64_t count) {
    const uint64_t hi = lo + count - 1;
    const uint64_t root = isqrt64(hi);

    std::vector<uint8_t> small(root + 1, 1);
    small[0] = 0;
    if (root >= 1) small[1] = 0;
    for (uint64_t p = 2; p * p <= root; ++p)
        if (small[p])
            for (uint64_t q = p * p; q <= root; q += p) small[q] = 0;

    std::fill(mask.flags.begin(), mask.flags.end(), 1);
    for (uint64_t v = lo; v < 2 && v <= hi; ++v) mask.flags[v - lo] = 0;

    for (uint64_t p = 2; p <= root; ++p) {
        if (!small[p]) continue;
        uint64_t first = ((lo + p - 1) / p) * p;
        if (first < p * p) first = p * p;
        for (uint64_t m = first; m <= hi; m += p) mask.flags[m - lo] = 0;
    }
}

// Below this window size the per-value test wins; above this ceiling the
// base sieve for sqrt(hi) gets too large, so fall back to per-value tests.
constexpr uint64_t kDenseThreshold = 1024;
constexpr uint64_t kDenseCeiling = 1'000'000'000'000ull;

}  // namespace

bool is_prime(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t p : kWitnesses) {  // doubles as a small-prime screen
        if (v % p == 0) return v == p;
    }
    if (v < 41 * 41) return true;  // no factor <= 37 and below 41^2
    uint64_t d = v - 1;
    const int s = std::countr_zero(d);
    d >>= s;
    for (uint64_t a : kWitnesses)
        if (!sprp(v, a, d, s)) return false;
    return true;
}

PrimeMask sieve_window(uint64_t base, uint64_t step, uint64_t count) {
    if (step == 0) throw std::invalid_argument("sieve_window: step must be >= 1");
    if (count > 0 && count - 1 > (std::numeric_limits<uint64_t>::max() - base) / step)
        throw std::overflow_error("sieve_window: window end exceeds 64 bits");

    PrimeMask mask;
    mask.base = base;
    mask.step = step;
    mask.flags.assign(count, 0);
    if (count == 0) return mask;

    const uint64_t last = base + step * (count - 1);
    if (step == 1 && count >= kDenseThreshold && last <= kDenseCeiling) {
        sieve_consecutive(mask, base, count);
    } else {
        for (uint64_t i = 0; i < count; ++i)
            mask.flags[i] = is_prime(base + i * step) ? 1 : 0;
    }
    return mask;
}

GapSignature gap_signature(uint64_t base, uint64_t count) {
    const PrimeMask mask = sieve_window(base, 1, count);

    GapSignature sig;
    sig.window_len = count;
    for (uint64_t i = 0; i < count; ++i)
        if (mask.flags[i]) sig.prime_offsets.push_back(i);

    sig.gaps.reserve(sig.prime_offsets.size());
    uint64_t prev_pos = 0;  // the predecessor of the window start
    for (uint64_t off : sig.prime_offsets) {
        sig.gaps.push_back(off + 1 - prev_pos);
        prev_pos = off + 1;
    }
    return sig;
}

}  // namespace gopm
