#ifndef KCL_INTERSECT_HPP
#define KCL_INTERSECT_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace kcl {

// All kernels take strictly ascending arrays and write the ascending
// intersection to out (capacity >= min(|a|,|b|)); they return the result
// size and never modify their inputs.

size_t merge_intersect(std::span<const uint32_t> a, std::span<const uint32_t> b,
                       uint32_t* out);

/// Block-merge intersection: fixed-width blocks of kBlockWidth elements,
/// all-pairs equality via cyclic rotations of one block, then the pointer
/// whose block tail is smaller advances (both advance on equal tails).
/// Output is identical to merge_intersect. Uses SSE on x86, a plain
/// fixed-width block loop elsewhere; remainders fall back to the scalar
/// merge.
inline constexpr uint32_t kBlockWidth = 4;

size_t block_merge_intersect(std::span<const uint32_t> a,
                             std::span<const uint32_t> b, uint32_t* out);

/// Exponential probe + binary search per element of a; requires |a| <= |b|.
size_t galloping_intersect(std::span<const uint32_t> a,
                           std::span<const uint32_t> b, uint32_t* out);

/// Small DAG over positions 0..n-1 of a root's out-neighbor universe.
/// universe[i] is the vertex id at bit position i (ascending).
struct InducedDag {
    uint32_t n = 0;
    std::vector<uint32_t> out_offsets;    // n+1
    std::vector<uint32_t> out_positions;  // out-neighbors as positions, ascending
    std::vector<uint32_t> universe;

    std::span<const uint32_t> out(uint32_t pos) const {
        return {out_positions.data() + out_offsets[pos],
                out_positions.data() + out_offsets[pos + 1]};
    }
};

inline uint32_t words_per_row(uint32_t deg, uint32_t word_bits) {
    return deg == 0 ? 0 : (deg + word_bits - 1) / word_bits;
}

/// Per-root bitmap adjacency: row i encodes the out-neighbors of the
/// vertex at universe position i, the low-order bit of each word being the
/// first position it covers. Bits at or beyond deg are always zero.
struct BitmapAdjacency {
    uint32_t word_bits = 64;  // payload bits per 64-bit word (L)
    uint32_t words = 0;       // words per row
    uint32_t deg = 0;
    std::vector<uint32_t> universe;
    std::vector<uint64_t> rows;  // deg rows, contiguous

    std::span<const uint64_t> row(uint32_t pos) const {
        return {rows.data() + static_cast<size_t>(pos) * words, words};
    }
};

BitmapAdjacency bit_encode(const InducedDag& dag, uint32_t word_bits);

/// All-ones row over deg positions (the root's own row B_u(u)).
void make_full_row(uint32_t deg, uint32_t word_bits, uint64_t* out);

void bit_join(std::span<const uint64_t> a, std::span<const uint64_t> b,
              std::span<uint64_t> out);

uint64_t popcount_row(std::span<const uint64_t> row);

/// Set-bit extraction: positions of set bits, ascending.
size_t bit_decode_positions(std::span<const uint64_t> row, uint32_t word_bits,
                            uint32_t* out);

/// Precomputed value -> bit-positions table for word_bits <= 24
/// (compatibility decode strategy; bit-scan is the default).
class MaskTable {
public:
    explicit MaskTable(uint32_t word_bits);
    uint32_t word_bits() const { return word_bits_; }
    size_t decode_positions(std::span<const uint64_t> row, uint32_t* out) const;

private:
    uint32_t word_bits_;
    std::vector<uint32_t> offsets_;
    std::vector<uint8_t> positions_;
};

/// Decode through the universe to vertex ids, ascending.
std::vector<uint32_t> bit_decode(std::span<const uint64_t> row,
                                 std::span<const uint32_t> universe,
                                 uint32_t word_bits,
                                 const MaskTable* table = nullptr);

}  // namespace kcl

#endif  // KCL_INTERSECT_HPP
