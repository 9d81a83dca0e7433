#pragma once
// Primality decisions, windowed prime masks, and prime-gap signatures for
// 64-bit value windows.

#include <cstdint>
#include <vector>

namespace gopm {

// Primality flags for the arithmetic progression base, base+step, ...
// flags[i] != 0  <=>  base + i*step is prime.
struct PrimeMask {
    uint64_t base = 0;
    uint64_t step = 1;
    std::vector<uint8_t> flags;

    bool at(uint64_t i) const { return flags[i] != 0; }
    uint64_t size() const { return flags.size(); }
};

// Positions of the primes inside the consecutive window
// [base, base + window_len - 1]. Gaps treat the predecessor of the window
// start as position 0:
//   gaps[0] = prime_offsets[0] + 1
//   gaps[j] = prime_offsets[j] - prime_offsets[j-1]   for j >= 1
// Two signatures compare equal when their window lengths and prime offsets
// match; the gaps are recoverable from the offsets and vice versa.
struct GapSignature {
    uint64_t window_len = 0;
    std::vector<uint64_t> prime_offsets;
    std::vector<uint64_t> gaps;

    friend bool operator==(const GapSignature& a, const GapSignature& b) {
        return a.window_len == b.window_len && a.prime_offsets == b.prime_offsets;
    }
};

// Deterministic for every 64-bit input. 0 and 1 are not prime.
bool is_prime(uint64_t v);

// Mask for the window base, base+step, ..., base+step*(count-1).
// Dense consecutive windows are sieved in one pass; sparse or very high
// windows fall back to the per-value test.
// Throws std::invalid_argument when step == 0 and std::overflow_error when
// the last value does not fit in 64 bits.
PrimeMask sieve_window(uint64_t base, uint64_t step, uint64_t count);

// Signature of the consecutive window [base, base+count-1] (step fixed at 1).
GapSignature gap_signature(uint64_t base, uint64_t count);

}  // namespace gopm
