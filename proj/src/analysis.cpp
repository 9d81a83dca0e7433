#include "gopm/analysis.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "gopm/primes.hpp"

namespace gopm {

const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::holds: return "holds";
        case VerdictStatus::vacuous: return "vacuous";
        case VerdictStatus::failed: return "failed";
    }
    return "unknown";
}

std::optional<QuadrupleHit> quad_search_arithmetic(uint64_t k) {
    if (k < 3) throw std::invalid_argument("quad_search_arithmetic: k must be >= 3");
    if (k > std::numeric_limits<uint32_t>::max())
        throw std::invalid_argument("quad_search_arithmetic: k too large");
    const uint64_t limit = k * k - k - 1;
    for (uint64_t x = k + 2; x <= limit; ++x) {
        if (is_prime(x + 1) && is_prime(x - 1) && is_prime(x + k) && is_prime(x - k))
            return QuadrupleHit{k, x, QuadMode::arithmetic};
    }
    return std::nullopt;
}

std::optional<QuadrupleHit> quad_search_grid(const GridSpec& spec) {
    validate(spec);
    const PrimeMask mask = grid_mask(spec);
    for (uint64_t i = 0; i < spec.cell_count(); ++i) {
        if (prime_neighbor_count(spec, addr_at_index(spec, i), mask) >= 4)
            return QuadrupleHit{spec.dim, spec.start + spec.step * i, QuadMode::grid};
    }
    return std::nullopt;
}

std::vector<uint64_t> claim_checker(uint64_t p_max) {
    std::vector<uint64_t> failures;
    for (uint64_t p = 5; p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        if (!quad_search_arithmetic(p)) failures.push_back(p);
    }
    return failures;
}

std::vector<uint64_t> equivalent_starts(uint64_t dim, uint64_t start, uint64_t search_bound,
                                        uint64_t max_results) {
    if (dim == 0) throw std::invalid_argument("equivalent_starts: dim must be >= 1");
    if (start == 0) throw std::invalid_argument("equivalent_starts: start must be >= 1");
    if (dim > std::numeric_limits<uint32_t>::max())
        throw std::invalid_argument("equivalent_starts: dim too large");

    const uint64_t len = dim * dim;
    const GapSignature target = gap_signature(start, len);

    std::vector<uint64_t> out;
    if (search_bound <= start || max_results == 0) return out;
    if (len - 1 > std::numeric_limits<uint64_t>::max() - search_bound)
        throw std::overflow_error("equivalent_starts: scan window exceeds 64 bits");

    // One sieve over every candidate window, then a prefix-count prefilter.
    const PrimeMask all = sieve_window(1, 1, search_bound + len - 1);
    std::vector<uint32_t> prefix(all.size() + 1, 0);
    for (uint64_t i = 0; i < all.size(); ++i)
        prefix[i + 1] = prefix[i] + (all.flags[i] ? 1 : 0);

    const uint64_t want = target.prime_offsets.size();
    for (uint64_t b = start + 1; b <= search_bound; ++b) {
        if (prefix[b - 1 + len] - prefix[b - 1] != want) continue;
        bool match = true;
        for (uint64_t off : target.prime_offsets) {
            if (!all.flags[b - 1 + off]) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        out.push_back(b);
        if (out.size() >= max_results) break;
    }
    return out;
}

TheoremVerdict verify_indegree(const GridSpec& spec, uint64_t max_days) {
    TheoremVerdict verdict{"4.1", VerdictStatus::holds, ""};
    const CycleReport report = detect_cycle(spec, max_days);
    if (report.period_lambda == 0) {
        verdict.status = VerdictStatus::vacuous;  // single realized state
        return verdict;
    }

    const uint64_t realized = report.tail_mu + report.period_lambda;
    std::vector<BoardState> days = run(spec, realized);  // days 0..mu+lambda

    // Successor edges over the realized distinct states: day i -> day i+1,
    // where day mu+lambda coincides with day mu.
    std::unordered_map<BitVec, uint64_t, BitVec::Hash> indegree;
    for (uint64_t i = 1; i <= realized; ++i) ++indegree[days[i].excited];

    for (const auto& [state, degree] : indegree) {
        if (degree > 2) {
            uint64_t day = 0;
            for (uint64_t i = 0; i < realized; ++i)
                if (days[i].excited == state) {
                    day = i;
                    break;
                }
            std::ostringstream os;
            os << "state first seen on day " << day << " has " << degree << " predecessors";
            return {"4.1", VerdictStatus::failed, os.str()};
        }
    }
    return verdict;
}

TheoremVerdict verify_even_cycle(const GridSpec& spec, uint64_t max_days) {
    const std::optional<QuadrupleHit> hit = quad_search_grid(spec);
    if (!hit) return {"4.2", VerdictStatus::vacuous, ""};

    const CycleReport report = detect_cycle(spec, max_days);
    if (report.period_lambda % 2 == 0) return {"4.2", VerdictStatus::holds, ""};

    std::ostringstream os;
    os << "cell of value " << hit->x << " has 4+ prime neighbors but period_lambda = "
       << report.period_lambda << " is odd";
    return {"4.2", VerdictStatus::failed, os.str()};
}

TheoremVerdict verify_immortal_corners(const GridSpec& spec, uint64_t horizon) {
    validate(spec);
    const PrimeMask mask = grid_mask(spec);
    const std::vector<BoardState> days = run(spec, horizon);

    std::vector<CellAddr> corners = {{0, 0}};
    if (spec.dim > 1) {
        corners.push_back({0, spec.dim - 1});
        corners.push_back({spec.dim - 1, 0});
        corners.push_back({spec.dim - 1, spec.dim - 1});
    }

    bool any_excited = false;
    for (const CellAddr& corner : corners) {
        if (prime_neighbor_count(spec, corner, mask) < 1) continue;
        const uint64_t k = snake_index(spec, corner);
        bool seen_excited = false;
        for (uint64_t d = 0; d <= horizon; ++d) {
            const bool excited = days[d].excited.get(k);
            if (excited) {
                seen_excited = true;
                any_excited = true;
            } else if (seen_excited) {
                std::ostringstream os;
                os << "corner of value " << value_at(spec, corner)
                   << " went dormant on day " << d << " after an earlier excitation";
                return {"4.3", VerdictStatus::failed, os.str()};
            }
        }
    }
    return {"4.3", any_excited ? VerdictStatus::holds : VerdictStatus::vacuous, ""};
}

TheoremVerdict verify_parity_day1(const GridSpec& spec) {
    validate(spec);
    if (spec.step != 1)
        throw std::invalid_argument("verify_parity_day1: step must be 1");
    if (spec.dim % 2 != 0 || spec.dim < 4) return {"4.4.1", VerdictStatus::vacuous, ""};

    bool any_forced = false;
    for (uint64_t r = 1; r + 1 < spec.dim; ++r) {
        for (uint64_t c = 1; c + 1 < spec.dim; ++c) {
            const CellAddr addr{r, c};
            const uint64_t v = value_at(spec, addr);
            if (v % 2 == 0) continue;
            bool two_adjacent = false;
            for (const CellAddr& nb : neighbors(spec, addr))
                if (value_at(spec, nb) == 2) two_adjacent = true;
            if (two_adjacent) continue;
            any_forced = true;
            if (day1_parity_excitable(spec, addr)) {
                std::ostringstream os;
                os << "cell of value " << v << " is parity-forced dormant but reported excitable";
                return {"4.4.1", VerdictStatus::failed, os.str()};
            }
        }
    }
    return {"4.4.1", any_forced ? VerdictStatus::holds : VerdictStatus::vacuous, ""};
}

bool day1_parity_excitable(const GridSpec& spec, CellAddr addr) {
    validate(spec);
    if (spec.step != 1)
        throw std::invalid_argument("day1_parity_excitable: step must be 1");
    const uint64_t v = value_at(spec, addr);
    const bool boundary = addr.row == 0 || addr.col == 0 || addr.row + 1 == spec.dim ||
                          addr.col + 1 == spec.dim;
    if (spec.dim % 2 == 0 && v % 2 == 1 && !boundary) {
        bool two_adjacent = false;
        for (const CellAddr& nb : neighbors(spec, addr))
            if (value_at(spec, nb) == 2) two_adjacent = true;
        if (!two_adjacent) return false;  // parity rule
    }
    return prime_neighbor_count(spec, addr, grid_mask(spec)) >= 3;
}

double excite_prob_estimate(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("excite_prob_estimate: p must lie in [0, 1]");
    return 4.0 * p * p * p * (1.0 - p) + p * p * p * p;
}

}  // namespace gopm
