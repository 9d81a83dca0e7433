#include "gopm/sonify.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "gopm/automaton.hpp"

namespace gopm {

namespace {

constexpr uint64_t kSampleRate = 44100;
constexpr uint64_t kFadeSamples = 441;  // 10 ms
constexpr double kTwoPi = 6.283185307179586476925286766559;

void put_u16(std::string& out, uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32(std::string& out, uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

}  // namespace

NoteSequence note_sequence(const GridSpec& spec, uint64_t first_day, uint64_t last_day) {
    validate(spec);
    if (last_day < first_day)
        throw std::invalid_argument("note_sequence: last_day must be >= first_day");

    const std::vector<BoardState> days = run(spec, last_day);

    NoteSequence seq;
    seq.entries.reserve(last_day - first_day + 1);
    for (uint64_t d = first_day; d <= last_day; ++d) {
        const uint64_t count = days[d].excited.count();
        const auto pitch = static_cast<uint32_t>(count % 7);
        seq.entries.push_back({d, count, pitch, kScaleHz[pitch]});
    }
    return seq;
}

uint64_t render_wav(const NoteSequence& seq, double note_duration_s, std::ostream& out) {
    if (!(note_duration_s > 0.0))
        throw std::invalid_argument("render_wav: note duration must be positive");

    const auto samples_per_note =
        static_cast<uint64_t>(std::llround(note_duration_s * static_cast<double>(kSampleRate)));
    const uint64_t total_samples = seq.entries.size() * samples_per_note;
    const uint64_t data_bytes = total_samples * 2;
    if (data_bytes > std::numeric_limits<uint32_t>::max() - 36)
        throw std::invalid_argument("render_wav: output too large for a RIFF file");

    std::string bytes;
    bytes.reserve(44 + data_bytes);
    bytes.append("RIFF");
    put_u32(bytes, static_cast<uint32_t>(36 + data_bytes));
    bytes.append("WAVE");
    bytes.append("fmt ");
    put_u32(bytes, 16);  // PCM fmt chunk
    put_u16(bytes, 1);   // format 1 = PCM
    put_u16(bytes, 1);   // mono
    put_u32(bytes, kSampleRate);
    put_u32(bytes, kSampleRate * 2);  // byte rate
    put_u16(bytes, 2);                // block align
    put_u16(bytes, 16);               // bits per sample
    bytes.append("data");
    put_u32(bytes, static_cast<uint32_t>(data_bytes));

    for (const NoteEntry& entry : seq.entries) {
        const uint64_t f = entry.frequency_hz;
        for (uint64_t t = 0; t < samples_per_note; ++t) {
            const double ramp_in = static_cast<double>(t) / kFadeSamples;
            const double ramp_out =
                static_cast<double>(samples_per_note - 1 - t) / kFadeSamples;
            const double env = std::min({1.0, ramp_in, ramp_out});
            const double phase =
                kTwoPi * static_cast<double>((f * t) % kSampleRate) / kSampleRate;
            const auto sample =
                static_cast<int16_t>(std::lround(env * 0.8 * 32767.0 * std::sin(phase)));
            put_u16(bytes, static_cast<uint16_t>(sample));
        }
    }

    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw WavWriteError("render_wav: sink write failed");
    return bytes.size();
}

}  // namespace gopm
