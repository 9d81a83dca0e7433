#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "gopm/grid.hpp"
#include "gopm/primes.hpp"

using gopm::CellAddr;
using gopm::GridSpec;

namespace {

// Layout oracle: fill the board row by row and reverse odd rows, with no
// index arithmetic shared with the implementation.
std::vector<std::vector<uint64_t>> snake_board(const GridSpec& spec) {
    std::vector<std::vector<uint64_t>> board(spec.dim, std::vector<uint64_t>(spec.dim));
    uint64_t v = spec.start;
    for (uint64_t r = 0; r < spec.dim; ++r) {
        std::vector<uint64_t> row;
        for (uint64_t c = 0; c < spec.dim; ++c) {
            row.push_back(v);
            v += spec.step;
        }
        if (r % 2 == 1) std::reverse(row.begin(), row.end());
        board[r] = row;
    }
    return board;
}

std::set<uint64_t> neighbor_values(const GridSpec& spec, CellAddr addr) {
    std::set<uint64_t> out;
    for (const CellAddr& nb : gopm::neighbors(spec, addr)) out.insert(gopm::value_at(spec, nb));
    return out;
}

}  // namespace

TEST_CASE("value_at follows the snake fill") {
    const GridSpec g3{3, 1, 1};
    CHECK(gopm::value_at(g3, {1, 0}) == 6);
    CHECK(gopm::value_at(g3, {0, 0}) == 1);

    const GridSpec g5{5, 1, 1};
    CHECK(gopm::value_at(g5, {1, 0}) == 10);

    const GridSpec offset{4, 100, 3};
    CHECK(gopm::value_at(offset, {0, 0}) == 100);
}

TEST_CASE("value_at matches the row-reversal oracle") {
    for (const GridSpec spec : {GridSpec{1, 1, 1}, GridSpec{2, 1, 1}, GridSpec{5, 1, 1},
                                GridSpec{6, 51, 1}, GridSpec{7, 10, 4}}) {
        const auto board = snake_board(spec);
        for (uint64_t r = 0; r < spec.dim; ++r)
            for (uint64_t c = 0; c < spec.dim; ++c)
                CHECK(gopm::value_at(spec, {r, c}) == board[r][c]);
    }
}

TEST_CASE("addr_of inverts value_at") {
    const GridSpec g3{3, 1, 1};
    CHECK(gopm::addr_of(g3, 6) == CellAddr{1, 0});
    CHECK(gopm::addr_of(g3, 5) == CellAddr{1, 1});
    CHECK(gopm::addr_of(g3, 1) == CellAddr{0, 0});
}

TEST_CASE("addr_of rejects values off the grid") {
    const GridSpec g3{3, 1, 1};
    CHECK_THROWS_AS(gopm::addr_of(g3, 10), std::invalid_argument);
    CHECK_THROWS_AS(gopm::addr_of(g3, 0), std::invalid_argument);
    const GridSpec stepped{3, 4, 2};  // values 4,6,...,20
    CHECK_THROWS_AS(gopm::addr_of(stepped, 5), std::invalid_argument);
    CHECK_NOTHROW(gopm::addr_of(stepped, 20));
}

TEST_CASE("out-of-range addresses are address errors") {
    const GridSpec g3{3, 1, 1};
    CHECK_THROWS_AS(gopm::value_at(g3, {3, 0}), std::out_of_range);
    CHECK_THROWS_AS(gopm::neighbors(g3, {0, 3}), std::out_of_range);
}

TEST_CASE("bijection between addresses and values") {
    for (const GridSpec spec : {GridSpec{1, 1, 1}, GridSpec{4, 1, 1}, GridSpec{8, 33, 5}}) {
        std::set<uint64_t> seen;
        for (uint64_t r = 0; r < spec.dim; ++r) {
            for (uint64_t c = 0; c < spec.dim; ++c) {
                const uint64_t v = gopm::value_at(spec, {r, c});
                CHECK(gopm::addr_of(spec, v) == CellAddr{r, c});
                seen.insert(v);
            }
        }
        CHECK(seen.size() == spec.cell_count());
        CHECK(*seen.begin() == spec.start);
        CHECK(*seen.rbegin() == spec.start + spec.step * (spec.cell_count() - 1));
    }
}

TEST_CASE("neighbors of the 3x3 cells match the worked example") {
    const GridSpec g3{3, 1, 1};
    CHECK(neighbor_values(g3, gopm::addr_of(g3, 1)) == std::set<uint64_t>{2, 5, 6});
    CHECK(neighbor_values(g3, gopm::addr_of(g3, 5)) ==
          std::set<uint64_t>{1, 2, 3, 4, 6, 7, 8, 9});
    const GridSpec g1{1, 1, 1};
    CHECK(gopm::neighbors(g1, {0, 0}).empty());
}

TEST_CASE("neighbor relation is symmetric") {
    const GridSpec spec{6, 1, 1};
    for (uint64_t i = 0; i < spec.cell_count(); ++i) {
        const CellAddr a = gopm::addr_at_index(spec, i);
        for (const CellAddr& b : gopm::neighbors(spec, a)) {
            const auto back = gopm::neighbors(spec, b);
            CHECK(std::count(back.begin(), back.end(), a) == 1);
        }
    }
}

TEST_CASE("neighbor counts split into corner, edge and interior") {
    for (uint64_t n : {2ull, 3ull, 5ull, 9ull}) {
        const GridSpec spec{n, 1, 1};
        std::map<size_t, uint64_t> histogram;
        for (uint64_t i = 0; i < spec.cell_count(); ++i)
            ++histogram[gopm::neighbors(spec, gopm::addr_at_index(spec, i)).size()];
        CHECK(histogram[3] == 4);
        CHECK(histogram[5] == 4 * (n - 2));
        CHECK(histogram[8] == (n - 2) * (n - 2));
    }
}

TEST_CASE("prime neighbor counts of the 3x3 board") {
    const GridSpec g3{3, 1, 1};
    const gopm::PrimeMask mask = gopm::grid_mask(g3);
    CHECK(gopm::prime_neighbor_count(g3, gopm::addr_of(g3, 6), mask) == 3);
    CHECK(gopm::prime_neighbor_count(g3, gopm::addr_of(g3, 4), mask) == 3);
    CHECK(gopm::prime_neighbor_count(g3, gopm::addr_of(g3, 1), mask) == 2);
}

TEST_CASE("prime_neighbor_count rejects a foreign mask") {
    const GridSpec g3{3, 1, 1};
    const gopm::PrimeMask other = gopm::grid_mask(GridSpec{3, 2, 1});
    CHECK_THROWS_AS(gopm::prime_neighbor_count(g3, {0, 0}, other), std::invalid_argument);
}

TEST_CASE("middle column cells are exactly the ones with value-arithmetic verticals") {
    const GridSpec g5{5, 1, 1};
    const CellAddr mid = gopm::addr_of(g5, 13);
    CHECK(gopm::is_middle_column(g5, mid));
    CHECK(gopm::value_at(g5, {mid.row - 1, mid.col}) == 13 - 5);
    CHECK(gopm::value_at(g5, {mid.row + 1, mid.col}) == 13 + 5);

    CHECK_FALSE(gopm::is_middle_column(g5, gopm::addr_of(g5, 12)));

    const GridSpec g4{4, 1, 1};
    for (uint64_t i = 0; i < g4.cell_count(); ++i)
        CHECK_FALSE(gopm::is_middle_column(g4, gopm::addr_at_index(g4, i)));
}

TEST_CASE("vertical neighbors equal v -+ n*step exactly in the middle column") {
    for (const GridSpec spec : {GridSpec{3, 1, 1}, GridSpec{5, 1, 1}, GridSpec{7, 51, 2},
                                GridSpec{9, 1, 1}}) {
        const uint64_t n = spec.dim;
        for (uint64_t col = 0; col < n; ++col) {
            bool all_rows_match = true;
            for (uint64_t row = 1; row + 1 < n; ++row) {
                const uint64_t v = gopm::value_at(spec, {row, col});
                const uint64_t above = gopm::value_at(spec, {row - 1, col});
                const uint64_t below = gopm::value_at(spec, {row + 1, col});
                if (above != v - n * spec.step || below != v + n * spec.step)
                    all_rows_match = false;
            }
            if (n >= 3) {
                const bool is_middle = gopm::is_middle_column(spec, {1, col});
                CHECK(all_rows_match == is_middle);
            }
        }
    }
}

TEST_CASE("validate rejects degenerate specs") {
    CHECK_THROWS_AS(gopm::validate(GridSpec{0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gopm::validate(GridSpec{3, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gopm::validate(GridSpec{3, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(gopm::validate(GridSpec{3, UINT64_MAX, 2}), std::invalid_argument);
    CHECK_NOTHROW(gopm::validate(GridSpec{3, 1, 1}));
}
