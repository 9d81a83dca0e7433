#pragma once
// Quadruple searches, equivalent-start search, and executable checks for the
// cycle-structure results and the day-1 parity rule.
//
// The two quadruple modes answer different questions and are deliberately
// kept apart. The arithmetic mode looks for the smallest x in
// [k+2, k^2-k-1] with x-1, x+1, x-k, x+k all prime -- a value-arithmetic
// condition that marks four prime grid neighbors only when x falls in the
// middle column. The grid mode asks the positional question directly: the
// smallest grid value whose cell has four or more prime Moore neighbors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gopm/automaton.hpp"
#include "gopm/grid.hpp"

namespace gopm {

enum class QuadMode { arithmetic, grid };

struct QuadrupleHit {
    uint64_t dim = 0;
    uint64_t x = 0;
    QuadMode mode = QuadMode::arithmetic;
};

enum class VerdictStatus { holds, vacuous, failed };

const char* to_string(VerdictStatus s);

struct TheoremVerdict {
    std::string theorem_id;
    VerdictStatus status = VerdictStatus::holds;
    std::string witness;  // re-checkable counterexample, set when status == failed

    bool ok() const { return status != VerdictStatus::failed; }
};

// Smallest x in [k+2, k*k-k-1] with x-1, x+1, x-k, x+k all prime. Requires
// k >= 3.
std::optional<QuadrupleHit> quad_search_arithmetic(uint64_t k);

// Smallest grid value whose cell has four or more prime Moore neighbors.
std::optional<QuadrupleHit> quad_search_grid(const GridSpec& spec);

// Primes p in [5, p_max] without an arithmetic quadruple. Expected empty;
// p_max below 5 scans nothing.
std::vector<uint64_t> claim_checker(uint64_t p_max);

// Starts b in (start, search_bound] whose dim^2-wide consecutive window has
// the same gap signature as start's window. Ascending, truncated to
// max_results; search_bound <= start scans nothing. Equal signatures at
// equal dimension replay identical games.
std::vector<uint64_t> equivalent_starts(uint64_t dim, uint64_t start, uint64_t search_bound,
                                        uint64_t max_results);

// 4.1: over the realized set of distinct states (through cycle closure), no
// state has more than two predecessors. Vacuous for games that never start.
TheoremVerdict verify_indegree(const GridSpec& spec, uint64_t max_days);

// 4.2: when some cell has four or more prime grid neighbors, the cycle
// length is even. Vacuous when no such cell exists.
TheoremVerdict verify_even_cycle(const GridSpec& spec, uint64_t max_days);

// 4.3: a corner with at least one prime neighbor never goes dormant after
// its first excitation, checked up to the horizon. Vacuous when no such
// corner gets excited.
TheoremVerdict verify_immortal_corners(const GridSpec& spec, uint64_t horizon);

// 4.4.1: every cell the parity rule forces dormant on day 1 reports
// day1_parity_excitable == false. Vacuous for odd dimensions, where the rule
// never forces anything.
TheoremVerdict verify_parity_day1(const GridSpec& spec);

// Day-1 excitability filtered by the parity rule: false outright for a
// non-boundary odd-valued cell of an even-dimension grid when 2 is not among
// its neighbor values; otherwise decided by the actual prime neighbor count.
// Requires step == 1.
bool day1_parity_excitable(const GridSpec& spec, CellAddr addr);

// 4*p^3*(1-p) + p^4. Throws std::domain_error for p outside [0, 1].
double excite_prob_estimate(double p);

}  // namespace gopm
