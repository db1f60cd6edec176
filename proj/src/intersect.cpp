#include "kcl/intersect.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#if defined(__SSE2__)
#include <emmintrin.h>
#if defined(__SSSE3__)
#include <tmmintrin.h>
#endif
#endif

namespace kcl {

size_t merge_intersect(std::span<const uint32_t> a, std::span<const uint32_t> b,
                       uint32_t* out) {
    size_t i = 0, j = 0, n = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            out[n++] = a[i];
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return n;
}

#if defined(__SSE2__) && defined(__SSSE3__)

namespace {
// Compaction shuffle: for each 4-bit match mask, byte indices that pack the
// matched 32-bit lanes to the front (255 = zero fill).
struct ShuffleLut {
    alignas(16) uint8_t bytes[16][16];
    ShuffleLut() {
        for (int mask = 0; mask < 16; ++mask) {
            int n = 0;
            for (int lane = 0; lane < 4; ++lane) {
                if (mask & (1 << lane)) {
                    for (int b = 0; b < 4; ++b)
                        bytes[mask][4 * n + b] = static_cast<uint8_t>(4 * lane + b);
                    ++n;
                }
            }
            for (int b = 4 * n; b < 16; ++b) bytes[mask][b] = 255;
        }
    }
};
const ShuffleLut shuffle_lut;
}  // namespace

size_t block_merge_intersect(std::span<const uint32_t> a,
                             std::span<const uint32_t> b, uint32_t* out) {
    constexpr uint32_t B = kBlockWidth;
    size_t i = 0, j = 0, n = 0;
    const size_t qa = a.size() - (a.size() % B);
    const size_t qb = b.size() - (b.size() % B);

    while (i < qa && j < qb) {
        __m128i va = _mm_lddqu_si128(reinterpret_cast<const __m128i*>(a.data() + i));
        __m128i vb = _mm_lddqu_si128(reinterpret_cast<const __m128i*>(b.data() + j));

        __m128i cmp = _mm_cmpeq_epi32(va, vb);
        __m128i rot = vb;
        for (uint32_t r = 1; r < B; ++r) {
            rot = _mm_shuffle_epi32(rot, _MM_SHUFFLE(0, 3, 2, 1));
            cmp = _mm_or_si128(cmp, _mm_cmpeq_epi32(va, rot));
        }
        int mask = _mm_movemask_ps(_mm_castsi128_ps(cmp));
        __m128i packed = _mm_shuffle_epi8(va, _mm_load_si128(reinterpret_cast<const __m128i*>(
                                                  shuffle_lut.bytes[mask])));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out + n), packed);
        n += static_cast<size_t>(std::popcount(static_cast<unsigned>(mask)));

        uint32_t a_tail = a[i + B - 1];
        uint32_t b_tail = b[j + B - 1];
        if (a_tail <= b_tail) i += B;
        if (b_tail <= a_tail) j += B;
    }
    return n + merge_intersect(a.subspan(i), b.subspan(j), out + n);
}

#else

size_t block_merge_intersect(std::span<const uint32_t> a,
                             std::span<const uint32_t> b, uint32_t* out) {
    constexpr uint32_t B = kBlockWidth;
    size_t i = 0, j = 0, n = 0;
    const size_t qa = a.size() - (a.size() % B);
    const size_t qb = b.size() - (b.size() % B);

    while (i < qa && j < qb) {
        // all-pairs equality over the two blocks, rotation by rotation
        uint32_t match[B];
        uint32_t nm = 0;
        for (uint32_t r = 0; r < B; ++r)
            for (uint32_t t = 0; t < B; ++t)
                if (a[i + t] == b[j + (t + r) % B]) match[nm++] = a[i + t];
        std::sort(match, match + nm);
        for (uint32_t t = 0; t < nm; ++t) out[n++] = match[t];

        uint32_t a_tail = a[i + B - 1];
        uint32_t b_tail = b[j + B - 1];
        if (a_tail <= b_tail) i += B;
        if (b_tail <= a_tail) j += B;
    }
    return n + merge_intersect(a.subspan(i), b.subspan(j), out + n);
}

#endif

size_t galloping_intersect(std::span<const uint32_t> a,
                           std::span<const uint32_t> b, uint32_t* out) {
    if (a.size() > b.size()) throw std::invalid_argument("galloping requires |a| <= |b|");
    size_t n = 0, lo = 0;
    for (uint32_t x : a) {
        size_t step = 1, hi = lo;
        while (hi < b.size() && b[hi] < x) {
            lo = hi;
            hi += step;
            step <<= 1;
        }
        hi = std::min(hi, b.size());
        auto it = std::lower_bound(b.begin() + lo, b.begin() + hi, x);
        lo = static_cast<size_t>(it - b.begin());
        if (lo < b.size() && b[lo] == x) {
            out[n++] = x;
            ++lo;
        }
    }
    return n;
}

BitmapAdjacency bit_encode(const InducedDag& dag, uint32_t word_bits) {
    if (word_bits == 0 || word_bits > 64)
        throw std::invalid_argument("word_bits must be in 1..64");
    BitmapAdjacency bm;
    bm.word_bits = word_bits;
    bm.deg = dag.n;
    bm.words = words_per_row(dag.n, word_bits);
    bm.universe = dag.universe;
    bm.rows.assign(static_cast<size_t>(dag.n) * bm.words, 0);
    for (uint32_t v = 0; v < dag.n; ++v) {
        uint64_t* row = bm.rows.data() + static_cast<size_t>(v) * bm.words;
        for (uint32_t p : dag.out(v))
            row[p / word_bits] |= uint64_t{1} << (p % word_bits);
    }
    return bm;
}

void make_full_row(uint32_t deg, uint32_t word_bits, uint64_t* out) {
    uint32_t words = words_per_row(deg, word_bits);
    for (uint32_t w = 0; w < words; ++w) {
        uint32_t lo = w * word_bits;
        uint32_t bits = std::min(word_bits, deg - lo);
        out[w] = bits == 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
    }
}

void bit_join(std::span<const uint64_t> a, std::span<const uint64_t> b,
              std::span<uint64_t> out) {
    if (a.size() != b.size() || a.size() != out.size())
        throw std::invalid_argument("bit_join length mismatch");
    const uint64_t* pa = a.data();
    const uint64_t* pb = b.data();
    uint64_t* po = out.data();
    const size_t n = a.size();
    // contiguous, dependency-free: auto-vectorizes
    for (size_t i = 0; i < n; ++i) po[i] = pa[i] & pb[i];
}

uint64_t popcount_row(std::span<const uint64_t> row) {
    uint64_t c = 0;
    for (uint64_t w : row) c += static_cast<uint64_t>(std::popcount(w));
    return c;
}

size_t bit_decode_positions(std::span<const uint64_t> row, uint32_t word_bits,
                            uint32_t* out) {
    size_t n = 0;
    uint32_t base = 0;
    for (uint64_t w : row) {
        while (w) {
            out[n++] = base + static_cast<uint32_t>(std::countr_zero(w));
            w &= w - 1;
        }
        base += word_bits;
    }
    return n;
}

MaskTable::MaskTable(uint32_t word_bits) : word_bits_(word_bits) {
    if (word_bits == 0 || word_bits > 24)
        throw std::invalid_argument("mask table supports word_bits <= 24");
    const uint32_t size = 1u << word_bits;
    offsets_.resize(static_cast<size_t>(size) + 1);
    offsets_[0] = 0;
    for (uint32_t v = 0; v < size; ++v)
        offsets_[v + 1] = offsets_[v] + static_cast<uint32_t>(std::popcount(v));
    positions_.resize(offsets_[size]);
    for (uint32_t v = 0; v < size; ++v) {
        uint32_t o = offsets_[v];
        for (uint32_t bit = 0; bit < word_bits; ++bit)
            if (v & (1u << bit)) positions_[o++] = static_cast<uint8_t>(bit);
    }
}

size_t MaskTable::decode_positions(std::span<const uint64_t> row, uint32_t* out) const {
    size_t n = 0;
    uint32_t base = 0;
    for (uint64_t w : row) {
        auto v = static_cast<uint32_t>(w);  // payload fits word_bits_ <= 24
        for (uint32_t o = offsets_[v]; o < offsets_[v + 1]; ++o)
            out[n++] = base + positions_[o];
        base += word_bits_;
    }
    return n;
}

std::vector<uint32_t> bit_decode(std::span<const uint64_t> row,
                                 std::span<const uint32_t> universe,
                                 uint32_t word_bits, const MaskTable* table) {
    std::vector<uint32_t> pos(universe.size());
    size_t n = table ? table->decode_positions(row, pos.data())
                     : bit_decode_positions(row, word_bits, pos.data());
    std::vector<uint32_t> ids(n);
    for (size_t i = 0; i < n; ++i) ids[i] = universe[pos[i]];
    return ids;
}

}  // namespace kcl
