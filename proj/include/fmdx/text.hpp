#pragma once

#include <span>
#include <string>
#include <vector>

#include "fmdx/common.hpp"

namespace fmdx {

// A text is raw bytes; no encoding is assumed.
struct text {
    std::vector<u8> bytes;
    std::vector<u8> alphabet;  // sorted distinct byte values
    u32 sigma = 0;

    std::size_t n() const { return bytes.size(); }

    static text from_bytes(std::vector<u8> b);
    static text from_file(const std::string& path);
};

// Equal-length patterns stored back to back.
struct pattern_set {
    std::vector<u8> flat;
    std::size_t m = 0;
    std::size_t count = 0;
    std::size_t source_length = 0;
    u64 seed = 0;

    std::span<const u8> pattern(std::size_t i) const {
        return {flat.data() + i * m, m};
    }
};

// Uniform random m-length windows of t, count of them. Windows containing a
// newline are rejected (the pattern file format is line-based); with
// acgt_only, windows with any byte outside {A,C,G,T} are rejected too.
// Deterministic for a given seed: splitmix64, position = next() % (n-m+1).
// Throws if a pattern exhausts 64*n rejection attempts.
pattern_set extract_patterns(const text& t, std::size_t count, std::size_t m, u64 seed,
                             bool acgt_only = false);

// One pattern per line, raw bytes, 0x0A terminated.
void write_patterns(const pattern_set& ps, const std::string& path);
pattern_set read_patterns(const std::string& path);

}  // namespace fmdx
