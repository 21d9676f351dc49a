#include "fmdx/common.hpp"

#include <array>

namespace fmdx {

namespace {

std::array<u32, 256> make_crc_table() {
    std::array<u32, 256> t{};
    for (u32 i = 0; i < 256; ++i) {
        u32 c = i;
        for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xedb88320u ^ (c >> 1) : c >> 1;
        t[i] = c;
    }
    return t;
}

}  // namespace

u32 crc32(const void* data, std::size_t len, u32 crc) {
    static const std::array<u32, 256> table = make_crc_table();
    const u8* p = static_cast<const u8*>(data);
    crc = ~crc;
    for (std::size_t i = 0; i < len; ++i) crc = table[(crc ^ p[i]) & 0xff] ^ (crc >> 8);
    return ~crc;
}

}  // namespace fmdx
