#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <stdexcept>

namespace fmdx {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i32 = std::int32_t;
using i64 = std::int64_t;

inline constexpr std::size_t kCacheLineBytes = 64;

// All-ones mask over the low k bits, valid for k in [0, 64].
inline u64 low_mask(unsigned k) {
    return k >= 64 ? ~u64(0) : ((u64(1) << k) - 1);
}

inline unsigned popcount64(u64 x) { return static_cast<unsigned>(std::popcount(x)); }
inline unsigned popcount32(u32 x) { return static_cast<unsigned>(std::popcount(x)); }

// 64-byte aligned, zero-initialized word array. Alignment is load-bearing:
// a block must never straddle two cache lines.
class cacheline_words {
  public:
    cacheline_words() = default;
    explicit cacheline_words(std::size_t n_words) { reset(n_words); }

    void reset(std::size_t n_words) {
        size_ = n_words;
        if (n_words == 0) {
            data_.reset();
            return;
        }
        std::size_t bytes = (n_words * sizeof(u64) + kCacheLineBytes - 1) / kCacheLineBytes * kCacheLineBytes;
        void* p = std::aligned_alloc(kCacheLineBytes, bytes);
        if (!p) throw std::bad_alloc();
        std::memset(p, 0, bytes);
        data_.reset(static_cast<u64*>(p));
    }

    u64* data() { return data_.get(); }
    const u64* data() const { return data_.get(); }
    std::size_t size() const { return size_; }
    std::size_t size_bytes() const { return size_ * sizeof(u64); }
    u64& operator[](std::size_t i) { return data_.get()[i]; }
    u64 operator[](std::size_t i) const { return data_.get()[i]; }

  private:
    struct free_deleter {
        void operator()(u64* p) const { std::free(p); }
    };
    std::unique_ptr<u64[], free_deleter> data_;
    std::size_t size_ = 0;
};

// splitmix64; the fixed generator for pattern extraction so pattern sets are
// reproducible across implementations.
struct splitmix64 {
    u64 state;
    explicit splitmix64(u64 seed) : state(seed) {}
    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

inline u64 fnv1a64(const void* data, std::size_t len, u64 h = 0xcbf29ce484222325ull) {
    const u8* p = static_cast<const u8*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

// CRC-32 (IEEE, reflected), table-driven.
u32 crc32(const void* data, std::size_t len, u32 crc = 0);

}  // namespace fmdx
