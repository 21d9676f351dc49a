#pragma once

#include <cassert>
#include <span>
#include <utility>
#include <vector>

#include "fmdx/common.hpp"

namespace fmdx {

// Block layouts. A block is one aligned 256- or 512-bit chunk holding a
// counter header followed by data bits, so any rank touches a single block.
//   r512_64  64-bit counter,  448 data bits
//   r512_32  32-bit counter,  480 data bits
//   r256_64  64-bit counter,  192 data bits
//   r256_32  32-bit counter,  224 data bits
//   r256c    48-bit counter + cumulative ranks of the 64- and 128-bit data
//            prefixes (one byte each), 192 data bits
//   r512c    40-bit counter + ones counts of three successive 128-bit data
//            subblocks (one byte each), 448 data bits
enum class rank_layout : u8 {
    r512_64 = 1,
    r512_32 = 2,
    r256_64 = 3,
    r256_32 = 4,
    r256c = 5,
    r512c = 6,
};

struct layout_traits {
    u32 block_bits;
    u32 block_words;
    u32 data_bits;
    u32 header_bits;   // bits spent on counters per block
    u32 counter_bits;  // width of the main counter
    bool subcounts;
};

constexpr layout_traits traits_of(rank_layout l) {
    switch (l) {
        case rank_layout::r512_64: return {512, 8, 448, 64, 64, false};
        case rank_layout::r512_32: return {512, 8, 480, 32, 32, false};
        case rank_layout::r256_64: return {256, 4, 192, 64, 64, false};
        case rank_layout::r256_32: return {256, 4, 224, 32, 32, false};
        case rank_layout::r256c: return {256, 4, 192, 64, 48, true};
        case rank_layout::r512c: return {512, 8, 448, 64, 40, true};
    }
    return {0, 0, 0, 0, 0, false};
}

struct ratio {
    u64 num, den;
    friend bool operator==(const ratio&, const ratio&) = default;
};

// header bits per data bit, exact
constexpr ratio overhead_ratio(rank_layout l) {
    auto t = traits_of(l);
    return {t.header_bits, t.data_bits};
}

const char* layout_name(rank_layout l);
bool layout_from_name(const char* name, u32 counter_bits, rank_layout& out);

// Instrumentation record for the structural tests: which bytes of the word
// array a query touched and how many popcounts it executed.
struct rank_trace {
    u64 lo_byte = ~u64(0);
    u64 hi_byte = 0;  // exclusive
    u32 pop64 = 0;
    u32 pop32 = 0;
    void touch_word(u64 word_index) {
        u64 lo = word_index * 8;
        if (lo < lo_byte) lo_byte = lo;
        if (lo + 8 > hi_byte) hi_byte = lo + 8;
    }
};

class interleaved_rank_vector {
  public:
    interleaved_rank_vector() = default;
    interleaved_rank_vector(u64 logical_len, rank_layout layout);

    // two-phase build: set bits, then finalize() fills counters
    void set_bit(u64 j);
    bool get_bit(u64 j) const;
    void finalize();

    u64 rank1(u64 j) const { return rank1_impl<false>(j, nullptr); }
    u64 rank1_traced(u64 j, rank_trace& tr) const { return rank1_impl<true>(j, &tr); }

    // non-binding cache hint for the block a future rank will touch
    void prefetch_hint(u64 j) const {
        auto [b, r] = block_and_offset(j);
        (void)r;
        __builtin_prefetch(words_.data() + b * traits_of(layout_).block_words, 0, 0);
    }

    u64 logical_length() const { return len_; }
    rank_layout layout() const { return layout_; }
    u64 num_blocks() const { return nblocks_; }
    std::span<const u64> words() const { return {words_.data(), words_.size()}; }
    u64 size_bytes() const { return words_.size_bytes(); }

    // clamped block arithmetic, exposed for the structural tests
    std::pair<u64, u64> block_and_offset(u64 j) const {
        const u32 D = traits_of(layout_).data_bits;
        u64 b = j / D;
        u64 r = j - b * D;
        if (b == nblocks_) {
            --b;
            r = D;
        }
        return {b, r};
    }
    // byte span of a block within the word array
    std::pair<u64, u64> block_byte_span(u64 block) const {
        const u32 W = traits_of(layout_).block_words;
        return {block * W * 8, (block + 1) * W * 8};
    }

    static interleaved_rank_vector from_words(rank_layout layout, u64 logical_len,
                                              std::span<const u64> w);

  private:
    template <bool Traced>
    u64 rank1_impl(u64 j, rank_trace* tr) const;

    rank_layout layout_ = rank_layout::r512_64;
    u64 len_ = 0;
    u64 nblocks_ = 0;
    cacheline_words words_;
};

interleaved_rank_vector build_rank(const std::vector<bool>& bits, rank_layout layout);

namespace detail {

inline u32 low_mask32(unsigned k) { return k >= 32 ? ~u32(0) : ((u32(1) << k) - 1); }

template <bool T>
inline u64 pc64(u64 x, rank_trace* tr) {
    if constexpr (T) ++tr->pop64;
    return popcount64(x);
}
template <bool T>
inline u64 pc32(u32 x, rank_trace* tr) {
    if constexpr (T) ++tr->pop32;
    return popcount32(x);
}
template <bool T>
inline void touch(rank_trace* tr, u64 word_index) {
    if constexpr (T) tr->touch_word(word_index);
}

// In 64-bit-header blocks data bit k lives in word 1 + k/64; in 32-bit-header
// blocks the first 32 data bits share word 0 with the counter.
template <bool T>
u64 rank_block_64hdr(const u64* blk, u64 base_word, u32 words_after_hdr, u64 r, rank_trace* tr) {
    touch<T>(tr, base_word);
    u64 cnt = 0;
    u64 f = r >> 6, rem = r & 63;
    for (u64 w = 0; w < f; ++w) {
        touch<T>(tr, base_word + 1 + w);
        cnt += pc64<T>(blk[1 + w], tr);
    }
    if (rem) {
        touch<T>(tr, base_word + 1 + f);
        cnt += pc64<T>(blk[1 + f] & low_mask(static_cast<unsigned>(rem)), tr);
    }
    (void)words_after_hdr;
    assert(f + (rem ? 1 : 0) <= words_after_hdr);
    return cnt;
}

template <bool T>
u64 rank_block_32hdr(const u64* blk, u64 base_word, u32 words_after_hdr, u64 r, rank_trace* tr) {
    touch<T>(tr, base_word);
    u64 cnt = 0;
    if (r <= 32) {
        if (r) cnt += pc32<T>(static_cast<u32>(blk[0] >> 32) & low_mask32(static_cast<unsigned>(r)), tr);
        return cnt;
    }
    cnt += pc32<T>(static_cast<u32>(blk[0] >> 32), tr);
    u64 k = r - 32;
    u64 f = k >> 6, rem = k & 63;
    for (u64 w = 0; w < f; ++w) {
        touch<T>(tr, base_word + 1 + w);
        cnt += pc64<T>(blk[1 + w], tr);
    }
    if (rem) {
        touch<T>(tr, base_word + 1 + f);
        cnt += pc64<T>(blk[1 + f] & low_mask(static_cast<unsigned>(rem)), tr);
    }
    (void)words_after_hdr;
    assert(f + (rem ? 1 : 0) <= words_after_hdr);
    return cnt;
}

template <bool T>
u64 rank_block_256c(const u64* blk, u64 base_word, u64 r, rank_trace* tr) {
    touch<T>(tr, base_word);
    const u64 hdr = blk[0];
    if (r < 64) {
        if (r == 0) return 0;
        touch<T>(tr, base_word + 1);
        return pc64<T>(blk[1] & low_mask(static_cast<unsigned>(r)), tr);
    }
    if (r < 128) {
        touch<T>(tr, base_word + 2);
        return ((hdr >> 48) & 0xff) + pc64<T>(blk[2] & low_mask(static_cast<unsigned>(r - 64)), tr);
    }
    touch<T>(tr, base_word + 3);
    return ((hdr >> 56) & 0xff) + pc64<T>(blk[3] & low_mask(static_cast<unsigned>(r - 128)), tr);
}

template <bool T>
u64 rank_block_512c(const u64* blk, u64 base_word, u64 r, rank_trace* tr) {
    touch<T>(tr, base_word);
    const u64 hdr = blk[0];
    const u64 sub = r >> 7;  // 128-bit subblock index, 0..3
    u64 cnt = 0;
    if (sub > 0) cnt += (hdr >> 40) & 0xff;
    if (sub > 1) cnt += (hdr >> 48) & 0xff;
    if (sub > 2) cnt += (hdr >> 56) & 0xff;
    // r <= 448, so sub == 3 implies rem <= 64: the last subblock is the
    // single word 7 and is never read past.
    const u64 rem = r & 127;
    const u64* p = blk + 1 + 2 * sub;
    const u64 pw = base_word + 1 + 2 * sub;
    if (rem == 0) {
        // nothing past the subblock boundary
    } else if (rem <= 64) {
        touch<T>(tr, pw);
        cnt += pc64<T>(p[0] & low_mask(static_cast<unsigned>(rem)), tr);
    } else {
        touch<T>(tr, pw);
        cnt += pc64<T>(p[0], tr);
        touch<T>(tr, pw + 1);
        cnt += pc64<T>(p[1] & low_mask(static_cast<unsigned>(rem - 64)), tr);
    }
    return cnt;
}

}  // namespace detail

template <bool Traced>
u64 interleaved_rank_vector::rank1_impl(u64 j, rank_trace* tr) const {
    assert(j <= len_);
    const layout_traits t = traits_of(layout_);
    u64 b = j / t.data_bits;
    u64 r = j - b * t.data_bits;
    if (b == nblocks_) {
        --b;
        r = t.data_bits;
    }
    const u64 base_word = b * t.block_words;
    const u64* blk = words_.data() + base_word;
    switch (layout_) {
        case rank_layout::r512_64:
            return blk[0] + detail::rank_block_64hdr<Traced>(blk, base_word, 7, r, tr);
        case rank_layout::r256_64:
            return blk[0] + detail::rank_block_64hdr<Traced>(blk, base_word, 3, r, tr);
        case rank_layout::r512_32:
            return (blk[0] & 0xffffffffull) +
                   detail::rank_block_32hdr<Traced>(blk, base_word, 7, r, tr);
        case rank_layout::r256_32:
            return (blk[0] & 0xffffffffull) +
                   detail::rank_block_32hdr<Traced>(blk, base_word, 3, r, tr);
        case rank_layout::r256c:
            return (blk[0] & low_mask(48)) + detail::rank_block_256c<Traced>(blk, base_word, r, tr);
        case rank_layout::r512c:
            return (blk[0] & low_mask(40)) + detail::rank_block_512c<Traced>(blk, base_word, r, tr);
    }
    return 0;
}

}  // namespace fmdx
