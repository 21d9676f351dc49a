#include "fmdx/suffix_bwt.hpp"

#include <algorithm>
#include <string_view>

namespace fmdx {

sentinel_text sentinel_text::from_text(const text& t) {
    sentinel_text st;
    st.n = t.n();
    st.sigma = t.sigma;
    st.id_to_byte.assign(t.sigma + 1, 0);
    for (u32 i = 0; i < t.sigma; ++i) {
        st.byte_to_id[t.alphabet[i]] = static_cast<u16>(i + 1);
        st.id_to_byte[i + 1] = t.alphabet[i];
    }
    st.symbols.resize(st.n + 1);
    for (std::size_t i = 0; i < st.n; ++i) st.symbols[i] = st.byte_to_id[t.bytes[i]];
    st.symbols[st.n] = 0;
    return st;
}

sentinel_text sentinel_text::from_symbols(std::span<const u8> syms, u32 sigma) {
    sentinel_text st;
    st.n = syms.size();
    st.sigma = sigma;
    st.symbols.resize(st.n + 1);
    for (std::size_t i = 0; i < st.n; ++i) st.symbols[i] = static_cast<u16>(syms[i] + 1);
    st.symbols[st.n] = 0;
    return st;
}

namespace {

// SA-IS over s[0..n-1], values in [0, K), with s[n-1] the unique minimum.
void sais(const i32* s, i32* sa, i32 n, i32 K) {
    if (n == 1) {
        sa[0] = 0;
        return;
    }

    std::vector<u8> stype(static_cast<std::size_t>(n));
    stype[n - 1] = 1;
    for (i32 i = n - 2; i >= 0; --i)
        stype[i] = (s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1])) ? 1 : 0;
    auto is_lms = [&](i32 i) { return i > 0 && stype[i] && !stype[i - 1]; };

    std::vector<i32> cnt(static_cast<std::size_t>(K), 0);
    std::vector<i32> bkt(static_cast<std::size_t>(K));
    for (i32 i = 0; i < n; ++i) ++cnt[s[i]];
    auto bkt_ends = [&] {
        i32 sum = 0;
        for (i32 c = 0; c < K; ++c) {
            sum += cnt[c];
            bkt[c] = sum;
        }
    };
    auto bkt_starts = [&] {
        i32 sum = 0;
        for (i32 c = 0; c < K; ++c) {
            bkt[c] = sum;
            sum += cnt[c];
        }
    };

    auto induce = [&](auto&& place_lms) {
        std::fill(sa, sa + n, -1);
        bkt_ends();
        place_lms();
        bkt_starts();
        for (i32 i = 0; i < n; ++i) {
            i32 j = sa[i];
            if (j > 0 && !stype[j - 1]) sa[bkt[s[j - 1]]++] = j - 1;
        }
        bkt_ends();
        for (i32 i = n - 1; i >= 0; --i) {
            i32 j = sa[i];
            if (j > 0 && stype[j - 1]) sa[--bkt[s[j - 1]]] = j - 1;
        }
    };

    // first pass: approximate LMS order is enough to sort LMS substrings
    induce([&] {
        for (i32 i = n - 1; i >= 1; --i)
            if (is_lms(i)) sa[--bkt[s[i]]] = i;
    });

    // compact sorted LMS positions and name their substrings
    i32 n1 = 0;
    for (i32 i = 0; i < n; ++i)
        if (is_lms(sa[i])) sa[n1++] = sa[i];
    std::fill(sa + n1, sa + n, -1);

    i32 names = 0, prev = -1;
    for (i32 i = 0; i < n1; ++i) {
        i32 pos = sa[i];
        bool differ = (prev < 0);
        if (!differ) {
            for (i32 d = 0;; ++d) {
                if (s[pos + d] != s[prev + d] || stype[pos + d] != stype[prev + d]) {
                    differ = true;
                    break;
                }
                if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) break;
            }
        }
        if (differ) {
            ++names;
            prev = pos;
        }
        sa[n1 + pos / 2] = names - 1;
    }

    std::vector<i32> p1(static_cast<std::size_t>(n1));
    {
        i32 j = 0;
        for (i32 i = 1; i < n; ++i)
            if (is_lms(i)) p1[j++] = i;
    }
    std::vector<i32> s1(static_cast<std::size_t>(n1));
    {
        i32 j = 0;
        for (i32 i = n1; i < n; ++i)
            if (sa[i] >= 0) s1[j++] = sa[i];
    }

    std::vector<i32> sa1(static_cast<std::size_t>(n1));
    if (names < n1) {
        sais(s1.data(), sa1.data(), n1, names);
    } else {
        for (i32 i = 0; i < n1; ++i) sa1[s1[i]] = i;
    }

    induce([&] {
        for (i32 i = n1 - 1; i >= 0; --i) {
            i32 j = p1[sa1[i]];
            sa[--bkt[s[j]]] = j;
        }
    });
}

}  // namespace

std::vector<u32> build_suffix_array(const sentinel_text& st) {
    const std::size_t len = st.symbols.size();
    std::vector<i32> s(len);
    for (std::size_t i = 0; i < len; ++i) s[i] = st.symbols[i];
    std::vector<i32> sa(len);
    sais(s.data(), sa.data(), static_cast<i32>(len), static_cast<i32>(st.sigma) + 1);
    std::vector<u32> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = static_cast<u32>(sa[i]);
    return out;
}

bwt_result build_bwt(const sentinel_text& st, std::span<const u32> sa) {
    const std::size_t len = st.symbols.size();
    bwt_result r;
    r.bwt.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
        u32 p = sa[i];
        r.bwt[i] = (p == 0) ? st.symbols[len - 1] : st.symbols[p - 1];
        if (p == 0) r.primary_row = i;
    }
    r.c_prefix.assign(st.sigma + 2, 0);
    for (u16 c : st.symbols) ++r.c_prefix[c + 1];
    for (std::size_t v = 1; v < r.c_prefix.size(); ++v) r.c_prefix[v] += r.c_prefix[v - 1];
    return r;
}

u64 naive_occ(std::span<const u16> bwt, u16 c, std::size_t pos) {
    if (pos > bwt.size()) throw std::out_of_range("naive_occ: pos out of range");
    u64 cnt = 0;
    for (std::size_t i = 0; i < pos; ++i) cnt += (bwt[i] == c);
    return cnt;
}

u64 naive_count(std::span<const u8> t, std::span<const u8> p) {
    if (p.empty() || p.size() > t.size()) return 0;
    std::string_view hay(reinterpret_cast<const char*>(t.data()), t.size());
    std::string_view needle(reinterpret_cast<const char*>(p.data()), p.size());
    u64 cnt = 0;
    std::size_t pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string_view::npos) {
        ++cnt;
        ++pos;
    }
    return cnt;
}

}  // namespace fmdx
