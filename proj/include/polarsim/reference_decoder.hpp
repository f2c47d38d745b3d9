#pragma once

#include "polarsim/codec.hpp"
#include "polarsim/gate_pe.hpp"

#include <vector>

namespace polarsim {

// Streaming feedback state for successive decoding. Depth 0 is the decision
// side, depth n-1 the channel side; node p at depth d holds the value its
// next combined-feedback step needs.
class PartialSumTracker {
public:
    explicit PartialSumTracker(int n);

    void push_decision(std::uint8_t u);
    void reset();

    // Pending feedback operand of node p at depth d (0-based from the
    // decision side).
    std::uint8_t pending_by_depth(int depth, int node) const;

    // Same operand addressed by processing stage s in 1..n (stage n decides).
    std::uint8_t operand(int stage, int node) const;

    int decisions() const { return count_; }

private:
    void deliver(int d, int p, int t, std::uint8_t v);

    int n_;
    int count_ = 0;
    std::vector<std::vector<std::uint8_t>> pending_odd_;
};

enum class DecodeVariant {
    lr,               // likelihood-ratio domain
    llr_exact,        // log domain, exact combine
    minsum,           // log domain, sign-min combine
    minsum_quantized, // fixed point on the saturating integer datapath
};

struct DecodeResult {
    BitVector u_hat;   // composite input estimate, length N
    BitVector message; // info bits only, length K
};

double f_exact(double a, double b);
double f_minsum(double a, double b);
double g_func(double a, double b, std::uint8_t u);
std::uint8_t decide_llr(double llr);

DecodeResult decode(const PolarCode& code, const std::vector<double>& channel_llrs,
                    DecodeVariant variant, const Quantization& quant = {});

} // namespace polarsim
