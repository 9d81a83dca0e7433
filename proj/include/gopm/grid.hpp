#pragma once
// Boustrophedon (snake) layout of a value window onto an n x n grid.
//
// Row 0 is the top row and runs left to right; odd rows run right to left,
// so the start value sits at the top-left corner and the largest value ends
// up at the bottom-right or bottom-left depending on the parity of n.
// Neighborhoods are positional (Moore, Chebyshev distance 1). Note that the
// vertical grid neighbors of a value v equal v -+ dim*step only in the
// middle column of odd-dimension grids; everywhere else the snake fold
// breaks that arithmetic, which is why neighbor queries never reason about
// values directly.

#include <cstdint>
#include <vector>

#include "gopm/primes.hpp"

namespace gopm {

struct GridSpec {
    uint64_t dim = 1;    // side length n
    uint64_t start = 1;  // top-left value
    uint64_t step = 1;   // common difference

    uint64_t cell_count() const { return dim * dim; }
    bool is_ngopm() const { return start == 1 && step == 1; }
};

struct CellAddr {
    uint64_t row = 0;
    uint64_t col = 0;

    friend bool operator==(const CellAddr&, const CellAddr&) = default;
};

// Throws std::invalid_argument unless dim, start and step are all >= 1 and
// the largest grid value fits in 64 bits.
void validate(const GridSpec& spec);

// Position of a cell in value order: 0 for the start cell, dim^2 - 1 for the
// last. Throws std::out_of_range for addresses outside the grid.
uint64_t snake_index(const GridSpec& spec, CellAddr addr);
CellAddr addr_at_index(const GridSpec& spec, uint64_t index);

uint64_t value_at(const GridSpec& spec, CellAddr addr);

// Inverse of value_at. Throws std::invalid_argument when the value does not
// belong to the grid's value set.
CellAddr addr_of(const GridSpec& spec, uint64_t value);

// All cells at Chebyshev distance 1: 3 for corners, 5 for other boundary
// cells, 8 for interior cells.
std::vector<CellAddr> neighbors(const GridSpec& spec, CellAddr addr);

// Number of neighbors holding a prime value. The mask must have been built
// from this spec (see check_mask).
uint64_t prime_neighbor_count(const GridSpec& spec, CellAddr addr, const PrimeMask& mask);

// True iff dim is odd and the address sits in column (dim-1)/2 -- exactly
// the cells whose vertical neighbors hold value -+ dim*step.
bool is_middle_column(const GridSpec& spec, CellAddr addr);

// Mask covering exactly the grid's values, indexed by snake index.
PrimeMask grid_mask(const GridSpec& spec);

// Throws std::invalid_argument unless the mask matches spec's window.
void check_mask(const GridSpec& spec, const PrimeMask& mask);

}  // namespace gopm
