#pragma once
// Synchronous excitation dynamics and cycle detection.
//
// Cell states live in a packed bit vector indexed in value order (the snake
// index), parallel to PrimeMask flags. A transition counts, per cell, the
// neighbors that are prime or excited; a neighbor that is both contributes
// one, not two. Dormant cells with three or more active neighbors wake up;
// excited cells with four or more, or with none at all, go dormant. A cell's
// own primality never affects its own transition.

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gopm/grid.hpp"
#include "gopm/primes.hpp"

namespace gopm {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(uint64_t n) : size_(n), words_((n + 63) / 64, 0) {}

    uint64_t size() const { return size_; }
    bool get(uint64_t i) const {
        assert(i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(uint64_t i, bool v) {
        assert(i < size_);
        const uint64_t bit = uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }
    uint64_t count() const;  // number of set bits
    bool any() const;
    const std::vector<uint64_t>& words() const { return words_; }

    friend bool operator==(const BitVec&, const BitVec&) = default;

    struct Hash {
        size_t operator()(const BitVec& b) const;
    };

private:
    uint64_t size_ = 0;
    std::vector<uint64_t> words_;
};

struct BoardState {
    uint64_t day = 0;
    BitVec excited;  // one flag per cell, snake order, length dim^2
};

struct CycleReport {
    uint64_t tail_mu = 0;        // days before the first day that ever repeats
    uint64_t period_lambda = 0;  // cycle length; 0 when the game never starts
    uint64_t days_explored = 0;
};

// Thrown when detect_cycle exhausts its day budget without finding a repeat.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(uint64_t days)
        : std::runtime_error("automaton: no repeated state within the day budget"),
          days_explored(days) {}

    uint64_t days_explored;
};

// Day 0: every cell dormant.
BoardState initial_state(const GridSpec& spec);

// Union count of prime-or-excited neighbors of one cell.
uint64_t active_count(const GridSpec& spec, const BoardState& state, CellAddr addr,
                      const PrimeMask& mask);

// One synchronous day transition.
BoardState step(const GridSpec& spec, const BoardState& state, const PrimeMask& mask);

// States for days 0..num_days.
std::vector<BoardState> run(const GridSpec& spec, uint64_t num_days);

// Iterates the transition, recording each distinct state with its first day
// of occurrence. On the first repeat at day t of a state first seen at day
// f, returns tail_mu = f and period_lambda = t - f. A game whose day-1 state
// equals the all-dormant day-0 state never starts and reports
// period_lambda = 0. Throws BudgetExceededError when no repeat shows up
// within max_days.
CycleReport detect_cycle(const GridSpec& spec, uint64_t max_days);

// True iff some cell has at least three prime neighbors, i.e. the day-1
// state differs from day 0.
bool game_starts(const GridSpec& spec, const PrimeMask& mask);

// Trajectory export record: day index, excited cell values in ascending
// order, and the excited count.
struct DayRecord {
    uint64_t day = 0;
    std::vector<uint64_t> excited_values;
    uint64_t count = 0;
};

DayRecord day_record(const GridSpec& spec, const BoardState& state);

}  // namespace gopm
