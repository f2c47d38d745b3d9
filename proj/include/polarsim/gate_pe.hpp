#pragma once

#include <cstdint>
#include <utility>

namespace polarsim {

// Fixed-point word layout: q total bits, two's complement, f fraction bits.
// All datapath words saturate symmetrically to +/-(2^(q-1)-1).
struct Quantization {
    int q = 6;
    int f = 2;
};

struct BitCellOut {
    std::uint8_t sum = 0;
    std::uint8_t carry_out = 0;
    std::uint8_t diff = 0;
    std::uint8_t borrow_out = 0;
};

// Combined adder/subtractor bit cell with separate carry and borrow inputs.
BitCellOut full_addsub_bit(std::uint8_t x, std::uint8_t y, std::uint8_t carry_in, std::uint8_t borrow_in);

// Same cell probed with one shared chain input (truth-table form).
BitCellOut addsub_cell_probe(std::uint8_t x, std::uint8_t y, std::uint8_t z);

struct WordAddSub {
    int sum = 0;
    int diff = 0;
    bool sum_saturated = false;
    bool diff_saturated = false;
};

// Ripple add and subtract of two q-bit words built from the bit cells: a half
// cell at bit 0, full cells above, with independent carry and borrow chains.
// Word outputs saturate to +/-(2^(q-1)-1).
WordAddSub addsub_word(int x, int y, int q);

struct SignMag {
    std::uint8_t sign = 0; // 1 = negative
    int magnitude = 0;
};

SignMag ttos(int v, int q); // two's complement -> sign-magnitude
int stot(const SignMag& sm); // sign-magnitude -> two's complement

struct Type1Out {
    int sum = 0;  // b + a
    int diff = 0; // b - a
};

// Candidate-pair unit: both feedback outcomes of the pair (a, b), where a is
// the operand whose sign the decided bit flips.
Type1Out type1_pe(int a, int b, int q);

// Sign-magnitude min unit: sign(a)*sign(b)*min(|a|,|b|).
int type2_pe(int a, int b, int q);

struct MergedOut {
    int f = 0;     // sign-min output
    int cand0 = 0; // b + a
    int cand1 = 0; // b - a
};

// Merged unit: one shared add/sub word feeds both candidate outputs and the
// magnitude comparison, so the min is recovered from the chain signs alone.
MergedOut merged_pe(int a, int b, int q);

// Plain integer helpers used by the quantized decoders (arithmetic domain;
// bit-exact against the gate path above).
int sat(long long v, int q);
int sat_add(int a, int b, int q);
int sign_min(int a, int b);
std::pair<int, int> g_candidates(int a, int b, int q); // (b+a, b-a), saturated
int quantize(double llr, const Quantization& quant);

// XOR-gate budgets for the datapath blocks, in 2-input XOR equivalents.
namespace xor_cost {

int full_cell();              // merged bit cell
int half_cell();              // merged bit 0 cell
int conventional_full_cell(); // separate adder + subtractor cells
int conventional_half_cell();
int addsub_word(int q);
int conventional_word(int q);
int type1(int q);
int type2(int q);
int merged(int q);
int tree_pe(int q); // type1 + type2 kept separate

} // namespace xor_cost

} // namespace polarsim
