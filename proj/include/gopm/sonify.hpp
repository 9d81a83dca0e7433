#pragma once
// Excited-count sonification. Per-day counts map onto the seven-tone scale
// 240, 270, 288, 320, 360, 405, 432 Hz by count mod 7 (Do Re Mi Fa So La
// Ti), and note sequences render to mono 16-bit 44100 Hz PCM WAV.
//
// The rendering math is pinned so the same sequence always produces the
// same bytes:
//   N            = llround(note_duration_s * 44100)     samples per note
//   F            = 441                                  10 ms fade length
//   envelope(t)  = min(1, t/F, (N-1-t)/F)
//   sample(t)    = round(envelope(t) * 0.8 * 32767
//                        * sin(2*pi*((f*t) mod 44100)/44100))
// The phase argument is reduced mod 44100 before the sine, which keeps the
// result independent of how long the note runs.

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "gopm/grid.hpp"

namespace gopm {

inline constexpr std::array<uint32_t, 7> kScaleHz = {240, 270, 288, 320, 360, 405, 432};
inline constexpr std::array<const char*, 7> kSolfege = {"Do", "Re", "Mi", "Fa",
                                                        "So", "La", "Ti"};

struct NoteEntry {
    uint64_t day = 0;
    uint64_t excited_count = 0;
    uint32_t pitch_class = 0;   // excited_count mod 7
    uint32_t frequency_hz = 0;  // kScaleHz[pitch_class]
};

struct NoteSequence {
    std::vector<NoteEntry> entries;
};

class WavWriteError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One entry per day in [first_day, last_day]. Day 0 is normally left out
// (its count is zero by definition) but may be requested explicitly.
NoteSequence note_sequence(const GridSpec& spec, uint64_t first_day, uint64_t last_day);

// Writes the RIFF/WAVE stream and returns the total byte count, header
// included; an empty sequence yields a valid 44-byte header-only file.
// Throws std::invalid_argument for a non-positive duration and
// WavWriteError when the sink fails.
uint64_t render_wav(const NoteSequence& seq, double note_duration_s, std::ostream& out);

}  // namespace gopm
