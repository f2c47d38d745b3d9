#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace polarsim {

using BitVector = std::vector<std::uint8_t>;

// Code description: block length N = 2^n, info_count K, and the frozen mask
// over the natural (pre-permutation) input index order, 0-based.
struct PolarCode {
    int n = 0;
    int block_length = 0;
    int info_count = 0;
    std::vector<std::uint8_t> is_frozen; // size N
    BitVector frozen_values;             // size N, meaningful where is_frozen

    static PolarCode bec_construction(int n, int info_count, double erasure_prob = 0.5);
    static PolarCode with_frozen_set(int n, const std::vector<int>& frozen_positions);

    std::map<std::string, std::string> to_kv() const;
    static PolarCode from_kv(const std::map<std::string, std::string>& kv);
};

// Index permutation that reverses the low n bits.
std::vector<int> bit_reversal_permutation(int n);

// Dense GF(2) matrix, row-major.
struct Gf2Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> data;

    std::uint8_t at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
};

// Full transform matrix for block length 2^n, including the bit-reversal step.
Gf2Matrix generator_matrix(int n);

// x = u * G over GF(2), computed by the in-place butterfly (O(N log N)).
BitVector polar_transform(const BitVector& u);

// Encode a length-N composite input; throws if a frozen slot disagrees with
// the code's pinned value.
BitVector encode(const PolarCode& code, const BitVector& u);

// Builds a length-K message into the composite input vector.
BitVector expand_message(const PolarCode& code, const BitVector& message);

// Extracts the K info bits from a composite input vector.
BitVector extract_message(const PolarCode& code, const BitVector& u);

// Feedback values consumed at the given internal level after the first
// `prefix.size()` input bits are known. Level s in 1..n; the returned vector
// holds, for each level-s stream (in stream order), the elements produced so
// far (oldest first). Used as a ground-truth oracle for the streaming
// partial-sum hardware.
std::vector<std::vector<std::uint8_t>> partial_sum_oracle(const BitVector& prefix, int level, int n);

} // namespace polarsim
