#include "gopm/grid.hpp"

#include <limits>
#include <stdexcept>

namespace gopm {

namespace {

void check_addr(const GridSpec& spec, CellAddr addr) {
    if (addr.row >= spec.dim || addr.col >= spec.dim)
        throw std::out_of_range("grid: cell address outside the grid");
}

}  // namespace

void validate(const GridSpec& spec) {
    if (spec.dim == 0) throw std::invalid_argument("grid: dim must be >= 1");
    if (spec.start == 0) throw std::invalid_argument("grid: start must be >= 1");
    if (spec.step == 0) throw std::invalid_argument("grid: step must be >= 1");
    if (spec.dim > std::numeric_limits<uint32_t>::max())
        throw std::invalid_argument("grid: dim too large");
    const uint64_t cells = spec.dim * spec.dim;
    if (cells - 1 > (std::numeric_limits<uint64_t>::max() - spec.start) / spec.step)
        throw std::invalid_argument("grid: largest value exceeds 64 bits");
}

uint64_t snake_index(const GridSpec& spec, CellAddr addr) {
    check_addr(spec, addr);
    const uint64_t within = (addr.row % 2 == 0) ? addr.col : spec.dim - 1 - addr.col;
    return addr.row * spec.dim + within;
}

CellAddr addr_at_index(const GridSpec& spec, uint64_t index) {
    if (index >= spec.cell_count())
        throw std::out_of_range("grid: snake index outside the grid");
    const uint64_t row = index / spec.dim;
    const uint64_t within = index % spec.dim;
    return {row, (row % 2 == 0) ? within : spec.dim - 1 - within};
}

uint64_t value_at(const GridSpec& spec, CellAddr addr) {
    validate(spec);
    return spec.start + spec.step * snake_index(spec, addr);
}

CellAddr addr_of(const GridSpec& spec, uint64_t value) {
    validate(spec);
    if (value < spec.start || (value - spec.start) % spec.step != 0)
        throw std::invalid_argument("grid: value is not on the grid");
    const uint64_t index = (value - spec.start) / spec.step;
    if (index >= spec.cell_count())
        throw std::invalid_argument("grid: value is not on the grid");
    return addr_at_index(spec, index);
}

std::vector<CellAddr> neighbors(const GridSpec& spec, CellAddr addr) {
    check_addr(spec, addr);
    std::vector<CellAddr> out;
    out.reserve(8);
    for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            const uint64_t r = addr.row + static_cast<uint64_t>(dr);  // wraps below zero
            const uint64_t c = addr.col + static_cast<uint64_t>(dc);
            if (r >= spec.dim || c >= spec.dim) continue;
            out.push_back({r, c});
        }
    }
    return out;
}

uint64_t prime_neighbor_count(const GridSpec& spec, CellAddr addr, const PrimeMask& mask) {
    check_mask(spec, mask);
    uint64_t count = 0;
    for (const CellAddr& nb : neighbors(spec, addr))
        if (mask.flags[snake_index(spec, nb)]) ++count;
    return count;
}

bool is_middle_column(const GridSpec& spec, CellAddr addr) {
    return spec.dim % 2 == 1 && addr.col == (spec.dim - 1) / 2;
}

PrimeMask grid_mask(const GridSpec& spec) {
    validate(spec);
    return sieve_window(spec.start, spec.step, spec.cell_count());
}

void check_mask(const GridSpec& spec, const PrimeMask& mask) {
    validate(spec);
    if (mask.base != spec.start || mask.step != spec.step ||
        mask.flags.size() != spec.cell_count())
        throw std::invalid_argument("grid: mask was not built from this spec");
}

}  // namespace gopm
