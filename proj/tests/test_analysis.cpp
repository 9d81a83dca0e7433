#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "gopm/analysis.hpp"
#include "gopm/automaton.hpp"
#include "gopm/grid.hpp"
#include "gopm/primes.hpp"

using gopm::GridSpec;
using gopm::VerdictStatus;

namespace {

// The published dimension/x pairs, with the anomalous row recorded as 83.
const std::vector<std::pair<uint64_t, uint64_t>> kQuadTable = {
    {5, 12},   {7, 12},   {11, 18},  {13, 18},  {17, 30},  {19, 42},
    {23, 30},  {29, 42},  {31, 42},  {37, 42},  {41, 60},  {43, 60},
    {47, 60},  {53, 60},  {59, 72},  {61, 102}, {67, 72},  {71, 102},
    {73, 240}, {79, 102}, {83, 150}, {89, 102}, {97, 102}, {101, 138}};

}  // namespace

TEST_CASE("arithmetic quadruple search matches the published values") {
    REQUIRE(gopm::quad_search_arithmetic(5));
    CHECK(gopm::quad_search_arithmetic(5)->x == 12);
    CHECK(gopm::quad_search_arithmetic(7)->x == 12);
    CHECK(gopm::quad_search_arithmetic(101)->x == 138);
}

TEST_CASE("arithmetic quadruples are absent for small and even dimensions") {
    CHECK_FALSE(gopm::quad_search_arithmetic(3));
    CHECK_FALSE(gopm::quad_search_arithmetic(4));
    CHECK_FALSE(gopm::quad_search_arithmetic(6));
    CHECK_FALSE(gopm::quad_search_arithmetic(9));
    CHECK_THROWS_AS(gopm::quad_search_arithmetic(2), std::invalid_argument);
}

TEST_CASE("every published quadruple row passes the four primality checks") {
    for (const auto& [k, x] : kQuadTable) {
        CAPTURE(k);
        CHECK(gopm::is_prime(x - 1));
        CHECK(gopm::is_prime(x + 1));
        CHECK(gopm::is_prime(x - k));
        CHECK(gopm::is_prime(x + k));
    }
}

TEST_CASE("middle-column arithmetic hits have four prime grid neighbors") {
    for (const auto& [k, x] : kQuadTable) {
        const GridSpec spec{k, 1, 1};
        const gopm::CellAddr addr = gopm::addr_of(spec, x);
        if (!gopm::is_middle_column(spec, addr)) continue;
        if (addr.row == 0 || addr.row + 1 == k) continue;
        CAPTURE(k);
        CHECK(gopm::prime_neighbor_count(spec, addr, gopm::grid_mask(spec)) >= 4);
    }
}

TEST_CASE("grid quadruple search asks the positional question") {
    CHECK_FALSE(gopm::quad_search_grid(GridSpec{3, 1, 1}));
    CHECK_FALSE(gopm::quad_search_grid(GridSpec{1, 1, 1}));

    const auto hit5 = gopm::quad_search_grid(GridSpec{5, 1, 1});
    REQUIRE(hit5);
    CHECK(hit5->x == 8);
    CHECK(hit5->mode == gopm::QuadMode::grid);

    // 4x4: values 1..5 see at most three prime neighbors, 6 sees 2,3,5,7,11.
    const auto hit4 = gopm::quad_search_grid(GridSpec{4, 1, 1});
    REQUIRE(hit4);
    CHECK(hit4->x == 6);

    // Brute-force oracle over all 25 cells.
    const GridSpec g5{5, 1, 1};
    const gopm::PrimeMask mask = gopm::grid_mask(g5);
    uint64_t smallest = 0;
    for (uint64_t i = 0; i < g5.cell_count() && smallest == 0; ++i)
        if (gopm::prime_neighbor_count(g5, gopm::addr_at_index(g5, i), mask) >= 4)
            smallest = 1 + i;
    CHECK(smallest == 8);
}

TEST_CASE("claim_checker finds no failures at desk scale") {
    CHECK(gopm::claim_checker(101).empty());
    CHECK(gopm::claim_checker(3).empty());
    CHECK(gopm::claim_checker(1000).empty());
}

TEST_CASE("equivalent_starts finds the 5x5 companions of 51") {
    CHECK(gopm::equivalent_starts(5, 51, 300, 10) == std::vector<uint64_t>{261});
    CHECK(gopm::equivalent_starts(5, 51, 2000, 10) ==
          std::vector<uint64_t>{261, 1281});
    // 88791 opens the next window that shares the signature.
    CHECK(gopm::equivalent_starts(5, 51, 100000, 10) ==
          std::vector<uint64_t>{261, 1281, 14541, 75981, 88791});
    CHECK(gopm::equivalent_starts(5, 51, 51, 10).empty());
    CHECK(gopm::equivalent_starts(2, 1, 10000, 10).empty());
    CHECK(gopm::equivalent_starts(5, 51, 100000, 1) == std::vector<uint64_t>{261});
}

TEST_CASE("equivalent starts replay the same game") {
    const auto starts = gopm::equivalent_starts(5, 51, 100000, 10);
    REQUIRE(!starts.empty());
    const auto base = gopm::run(GridSpec{5, 51, 1}, 40);
    for (uint64_t b : starts) {
        const auto other = gopm::run(GridSpec{5, b, 1}, 40);
        for (uint64_t d = 0; d <= 40; ++d) CHECK(base[d].excited == other[d].excited);
    }
}

TEST_CASE("state in-degree never exceeds two") {
    CHECK(gopm::verify_indegree(GridSpec{3, 1, 1}, 1000).status == VerdictStatus::holds);
    CHECK(gopm::verify_indegree(GridSpec{2, 1, 1}, 1000).status == VerdictStatus::vacuous);
    for (uint64_t dim = 3; dim <= 10; ++dim) {
        CAPTURE(dim);
        CHECK(gopm::verify_indegree(GridSpec{dim, 1, 1}, 1'000'000).ok());
    }
}

TEST_CASE("even-cycle check holds or is vacuous") {
    const auto v5 = gopm::verify_even_cycle(GridSpec{5, 1, 1}, 100000);
    CHECK(v5.status == VerdictStatus::holds);
    CHECK(gopm::verify_even_cycle(GridSpec{3, 1, 1}, 1000).status == VerdictStatus::vacuous);
    CHECK(gopm::verify_even_cycle(GridSpec{1, 1, 1}, 1000).status == VerdictStatus::vacuous);
}

TEST_CASE("excited corners with a prime neighbor stay excited") {
    CHECK(gopm::verify_immortal_corners(GridSpec{3, 1, 1}, 50).status ==
          VerdictStatus::holds);
    CHECK(gopm::verify_immortal_corners(GridSpec{2, 1, 1}, 50).status ==
          VerdictStatus::vacuous);
    CHECK(gopm::verify_immortal_corners(GridSpec{1, 1, 1}, 50).status ==
          VerdictStatus::vacuous);
}

TEST_CASE("budget errors propagate out of the cycle-backed checks") {
    CHECK_THROWS_AS(gopm::verify_indegree(GridSpec{3, 1, 1}, 2), gopm::BudgetExceededError);
    CHECK_THROWS_AS(gopm::verify_even_cycle(GridSpec{5, 1, 1}, 2), gopm::BudgetExceededError);
}

TEST_CASE("day-1 parity rule forces odd interior cells dormant in even grids") {
    const GridSpec g4{4, 1, 1};
    // 11 is interior and odd, and 2 is not among its neighbors.
    CHECK_FALSE(gopm::day1_parity_excitable(g4, gopm::addr_of(g4, 11)));
    // 7 has 2 as a neighbor, so the actual count (3 primes) decides.
    CHECK(gopm::day1_parity_excitable(g4, gopm::addr_of(g4, 7)));
    CHECK_THROWS_AS(gopm::day1_parity_excitable(GridSpec{4, 1, 2}, {1, 1}),
                    std::invalid_argument);
}

TEST_CASE("odd dimensions are never parity-forced") {
    const GridSpec g5{5, 1, 1};
    const gopm::PrimeMask mask = gopm::grid_mask(g5);
    for (uint64_t i = 0; i < g5.cell_count(); ++i) {
        const gopm::CellAddr addr = gopm::addr_at_index(g5, i);
        CHECK(gopm::day1_parity_excitable(g5, addr) ==
              (gopm::prime_neighbor_count(g5, addr, mask) >= 3));
    }
}

TEST_CASE("parity validator verdicts") {
    CHECK(gopm::verify_parity_day1(GridSpec{4, 1, 1}).status == VerdictStatus::holds);
    CHECK(gopm::verify_parity_day1(GridSpec{5, 1, 1}).status == VerdictStatus::vacuous);
    CHECK(gopm::verify_parity_day1(GridSpec{2, 1, 1}).status == VerdictStatus::vacuous);
}

TEST_CASE("excitation probability estimate") {
    CHECK(gopm::excite_prob_estimate(0.0) == 0.0);
    CHECK(gopm::excite_prob_estimate(1.0) == 1.0);
    CHECK(gopm::excite_prob_estimate(0.5) == doctest::Approx(0.3125).epsilon(1e-15));
    CHECK_THROWS_AS(gopm::excite_prob_estimate(-0.1), std::domain_error);
    CHECK_THROWS_AS(gopm::excite_prob_estimate(1.1), std::domain_error);
}
