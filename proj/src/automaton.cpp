#include "gopm/automaton.hpp"

#include <array>
#include <bit>
#include <limits>
#include <unordered_map>

namespace gopm {

namespace {

// Neighbor snake indices per cell, built once per trajectory.
struct Adjacency {
    std::vector<std::array<uint32_t, 8>> nbr;
    std::vector<uint8_t> cnt;
};

Adjacency build_adjacency(const GridSpec& spec) {
    validate(spec);
    const uint64_t n = spec.dim;
    const uint64_t cells = n * n;
    if (cells > std::numeric_limits<uint32_t>::max())
        throw std::invalid_argument("automaton: grid too large to simulate");

    auto snake = [n](uint64_t r, uint64_t c) {
        return r * n + ((r % 2 == 0) ? c : n - 1 - c);
    };

    Adjacency adj;
    adj.nbr.resize(cells);
    adj.cnt.assign(cells, 0);
    for (uint64_t r = 0; r < n; ++r) {
        for (uint64_t c = 0; c < n; ++c) {
            const uint64_t k = snake(r, c);
            uint8_t m = 0;
            for (int dr = -1; dr <= 1; ++dr) {
                for (int dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    const uint64_t nr = r + static_cast<uint64_t>(dr);
                    const uint64_t nc = c + static_cast<uint64_t>(dc);
                    if (nr >= n || nc >= n) continue;
                    adj.nbr[k][m++] = static_cast<uint32_t>(snake(nr, nc));
                }
            }
            adj.cnt[k] = m;
        }
    }
    return adj;
}

void step_into(const Adjacency& adj, const PrimeMask& mask, const BitVec& cur, BitVec& next) {
    const uint64_t cells = adj.cnt.size();
    for (uint64_t k = 0; k < cells; ++k) {
        uint32_t active = 0;
        for (uint8_t j = 0; j < adj.cnt[k]; ++j) {
            const uint32_t u = adj.nbr[k][j];
            if (mask.flags[u] || cur.get(u)) ++active;
        }
        bool excited = cur.get(k);
        if (!excited) {
            if (active >= 3) excited = true;
        } else if (active >= 4 || active == 0) {
            excited = false;
        }
        next.set(k, excited);
    }
}

}  // namespace

uint64_t BitVec::count() const {
    uint64_t total = 0;
    for (uint64_t w : words_) total += static_cast<uint64_t>(std::popcount(w));
    return total;
}

bool BitVec::any() const {
    for (uint64_t w : words_)
        if (w != 0) return true;
    return false;
}

size_t BitVec::Hash::operator()(const BitVec& b) const {
    uint64_t h = 0xcbf29ce484222325ull ^ b.size();
    for (uint64_t w : b.words()) {
        h ^= w;
        h *= 0x100000001b3ull;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return static_cast<size_t>(h);
}

BoardState initial_state(const GridSpec& spec) {
    validate(spec);
    return {0, BitVec(spec.cell_count())};
}

uint64_t active_count(const GridSpec& spec, const BoardState& state, CellAddr addr,
                      const PrimeMask& mask) {
    check_mask(spec, mask);
    if (state.excited.size() != spec.cell_count())
        throw std::invalid_argument("automaton: state was not built from this spec");
    uint64_t active = 0;
    for (const CellAddr& nb : neighbors(spec, addr)) {
        const uint64_t u = snake_index(spec, nb);
        if (mask.flags[u] || state.excited.get(u)) ++active;
    }
    return active;
}

BoardState step(const GridSpec& spec, const BoardState& state, const PrimeMask& mask) {
    check_mask(spec, mask);
    if (state.excited.size() != spec.cell_count())
        throw std::invalid_argument("automaton: state was not built from this spec");
    const Adjacency adj = build_adjacency(spec);
    BoardState next{state.day + 1, BitVec(spec.cell_count())};
    step_into(adj, mask, state.excited, next.excited);
    return next;
}

std::vector<BoardState> run(const GridSpec& spec, uint64_t num_days) {
    const Adjacency adj = build_adjacency(spec);
    const PrimeMask mask = grid_mask(spec);

    std::vector<BoardState> days;
    days.reserve(num_days + 1);
    days.push_back({0, BitVec(spec.cell_count())});
    for (uint64_t d = 1; d <= num_days; ++d) {
        BoardState next{d, BitVec(spec.cell_count())};
        step_into(adj, mask, days.back().excited, next.excited);
        days.push_back(std::move(next));
    }
    return days;
}

CycleReport detect_cycle(const GridSpec& spec, uint64_t max_days) {
    if (max_days == 0) throw std::invalid_argument("detect_cycle: max_days must be >= 1");
    const Adjacency adj = build_adjacency(spec);
    const PrimeMask mask = grid_mask(spec);

    BitVec cur(spec.cell_count());
    const BitVec all_dormant = cur;

    // First-occurrence day per distinct state; full bit vectors are kept so
    // hash collisions resolve exactly.
    std::unordered_map<BitVec, uint64_t, BitVec::Hash> seen;
    seen.emplace(cur, 0);

    for (uint64_t t = 1; t <= max_days; ++t) {
        BitVec next(spec.cell_count());
        step_into(adj, mask, cur, next);
        if (t == 1 && next == all_dormant) return {0, 0, 1};  // never starts
        auto it = seen.find(next);
        if (it != seen.end()) return {it->second, t - it->second, t};
        seen.emplace(next, t);
        cur = std::move(next);
    }
    throw BudgetExceededError(max_days);
}

bool game_starts(const GridSpec& spec, const PrimeMask& mask) {
    check_mask(spec, mask);
    for (uint64_t i = 0; i < spec.cell_count(); ++i)
        if (prime_neighbor_count(spec, addr_at_index(spec, i), mask) >= 3) return true;
    return false;
}

DayRecord day_record(const GridSpec& spec, const BoardState& state) {
    if (state.excited.size() != spec.cell_count())
        throw std::invalid_argument("automaton: state was not built from this spec");
    DayRecord rec;
    rec.day = state.day;
    for (uint64_t i = 0; i < spec.cell_count(); ++i)
        if (state.excited.get(i)) rec.excited_values.push_back(spec.start + spec.step * i);
    rec.count = rec.excited_values.size();
    return rec;
}

}  // namespace gopm
