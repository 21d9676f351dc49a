#pragma once

#include <array>
#include <span>
#include <vector>

#include "fmdx/common.hpp"
#include "fmdx/text.hpp"

namespace fmdx {

// Text remapped to integer ids 1..sigma (ascending source order) with the
// sentinel id 0 appended. All searchable structures are built over ids, so
// the sentinel always has a free slot even for 256-value texts.
struct sentinel_text {
    std::vector<u16> symbols;  // length n+1, symbols.back() == 0
    u32 sigma = 0;             // ids run 1..sigma
    std::size_t n = 0;         // original length

    // byte remap tables (only meaningful for byte-sourced texts)
    std::array<u16, 256> byte_to_id{};  // 0 = byte absent from the text
    std::vector<u8> id_to_byte;         // [0]=0 placeholder for the sentinel

    static sentinel_text from_text(const text& t);
    // symbols already in 0..sigma-1 (id = value+1); used for digit streams
    static sentinel_text from_symbols(std::span<const u8> syms, u32 sigma);
};

struct bwt_result {
    std::vector<u16> bwt;        // n+1 symbols, sentinel included
    std::vector<u64> c_prefix;   // size sigma+2: c_prefix[v] = #{symbols < v}
    u64 primary_row = 0;         // row whose BWT cell is the sentinel
};

// SA-IS; entry 0 is always the sentinel suffix (position n).
std::vector<u32> build_suffix_array(const sentinel_text& st);

bwt_result build_bwt(const sentinel_text& st, std::span<const u32> sa);

// Test oracles: direct scans, independent of every rank structure.
u64 naive_occ(std::span<const u16> bwt, u16 c, std::size_t pos);
u64 naive_count(std::span<const u8> t, std::span<const u8> p);
inline u64 naive_count(const text& t, std::span<const u8> p) {
    return naive_count(std::span<const u8>(t.bytes), p);
}

}  // namespace fmdx
