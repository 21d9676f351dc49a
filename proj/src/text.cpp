#include "fmdx/text.hpp"

#include <array>
#include <cstdio>
#include <fstream>

namespace fmdx {

text text::from_bytes(std::vector<u8> b) {
    if (b.empty()) throw std::runtime_error("text must be non-empty");
    text t;
    t.bytes = std::move(b);
    std::array<bool, 256> seen{};
    for (u8 c : t.bytes) seen[c] = true;
    for (int v = 0; v < 256; ++v)
        if (seen[v]) t.alphabet.push_back(static_cast<u8>(v));
    t.sigma = static_cast<u32>(t.alphabet.size());
    return t;
}

text text::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open text file: " + path);
    std::vector<u8> b((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (b.empty()) throw std::runtime_error("text file is empty: " + path);
    return from_bytes(std::move(b));
}

namespace {

bool acgt_window(const u8* p, std::size_t m) {
    for (std::size_t i = 0; i < m; ++i) {
        u8 c = p[i];
        if (c != 'A' && c != 'C' && c != 'G' && c != 'T') return false;
    }
    return true;
}

bool clean_window(const u8* p, std::size_t m) {
    for (std::size_t i = 0; i < m; ++i)
        if (p[i] == 0x0a) return false;
    return true;
}

}  // namespace

pattern_set extract_patterns(const text& t, std::size_t count, std::size_t m, u64 seed,
                             bool acgt_only) {
    const std::size_t n = t.n();
    if (m == 0) throw std::invalid_argument("pattern length must be positive");
    if (m > n) throw std::invalid_argument("pattern length exceeds text length");

    pattern_set ps;
    ps.m = m;
    ps.count = count;
    ps.source_length = n;
    ps.seed = seed;
    ps.flat.reserve(count * m);

    splitmix64 rng(seed);
    const u64 positions = n - m + 1;
    const u64 budget = 64 * static_cast<u64>(n);
    for (std::size_t i = 0; i < count; ++i) {
        u64 attempts = 0;
        for (;;) {
            if (attempts++ >= budget)
                throw std::runtime_error("pattern extraction: no valid window found");
            u64 pos = rng.next() % positions;
            const u8* w = t.bytes.data() + pos;
            if (!clean_window(w, m)) continue;
            if (acgt_only && !acgt_window(w, m)) continue;
            ps.flat.insert(ps.flat.end(), w, w + m);
            break;
        }
    }
    return ps;
}

void write_patterns(const pattern_set& ps, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open pattern file for writing: " + path);
    for (std::size_t i = 0; i < ps.count; ++i) {
        auto p = ps.pattern(i);
        out.write(reinterpret_cast<const char*>(p.data()), static_cast<std::streamsize>(p.size()));
        out.put('\n');
    }
}

pattern_set read_patterns(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open pattern file: " + path);
    std::vector<u8> all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    pattern_set ps;
    std::size_t pos = 0;
    while (pos < all.size()) {
        std::size_t nl = pos;
        while (nl < all.size() && all[nl] != 0x0a) ++nl;
        if (nl == all.size()) throw std::runtime_error("pattern file: missing trailing newline");
        std::size_t len = nl - pos;
        if (len == 0) throw std::runtime_error("pattern file: empty pattern line");
        if (ps.count == 0) {
            ps.m = len;
        } else if (len != ps.m) {
            throw std::runtime_error("pattern file: patterns have unequal lengths");
        }
        ps.flat.insert(ps.flat.end(), all.begin() + static_cast<std::ptrdiff_t>(pos),
                       all.begin() + static_cast<std::ptrdiff_t>(nl));
        ++ps.count;
        pos = nl + 1;
    }
    if (ps.count == 0) throw std::runtime_error("pattern file: no patterns");
    return ps;
}

}  // namespace fmdx
