#pragma once

#include "polarsim/codec.hpp"
#include "polarsim/reference_decoder.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace polarsim {

const char* variant_name(DecodeVariant v);
bool parse_variant(const std::string& name, DecodeVariant& out);

// Deterministic 64-bit generator; identical sequences on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    double uniform01(); // (0, 1]
    std::pair<double, double> gaussian_pair();

private:
    std::uint64_t state_;
};

// Decorrelates a stream from a base seed and a stream index.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

enum class ChannelType { noiseless, awgn, bsc };

struct ChannelConfig {
    ChannelType type = ChannelType::awgn;
    double ebno_db = 2.0;    // awgn
    double crossover = 0.05; // bsc
};

// Channel LLRs for a transmitted codeword; rate scales the symbol energy.
std::vector<double> channel_llrs(const BitVector& codeword, const ChannelConfig& cfg, double rate,
                                 SplitMix64& rng);

struct BerPoint {
    double ebno_db = 0;
    std::string decoder;
    long long frames = 0;
    long long bit_errors = 0;
    long long frame_errors = 0;
    double ber = 0;
    double fer = 0;
};

// Monte-Carlo sweep; every decoder sees the same noise, and an uncoded
// hard-decision row is appended per point.
std::vector<BerPoint> run_ber(const PolarCode& code, const std::vector<double>& ebno_points,
                              const std::vector<DecodeVariant>& decoders, long long frames,
                              std::uint64_t seed, const Quantization& quant = {});

std::string ber_csv(const std::vector<BerPoint>& points);

struct LatencyRow {
    int n = 0;
    long long block = 0;
    long long tree = 0;
    long long d1 = 0;
    long long d2 = 0;
    long long d3 = 0;
    long long d4 = 0;
};

std::vector<LatencyRow> latency_table(const std::vector<int>& ns);
std::string latency_csv(const std::vector<LatencyRow>& rows);

} // namespace polarsim
