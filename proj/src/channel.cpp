#include "polarsim/channel.hpp"

#include "polarsim/arch_sim.hpp"
#include "polarsim/util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace polarsim {

const char* variant_name(DecodeVariant v) {
    switch (v) {
    case DecodeVariant::lr: return "lr";
    case DecodeVariant::llr_exact: return "llr_exact";
    case DecodeVariant::minsum: return "minsum";
    case DecodeVariant::minsum_quantized: return "minsum_quantized";
    }
    return "?";
}

bool parse_variant(const std::string& name, DecodeVariant& out) {
    for (DecodeVariant v : {DecodeVariant::lr, DecodeVariant::llr_exact, DecodeVariant::minsum,
                            DecodeVariant::minsum_quantized}) {
        if (name == variant_name(v)) {
            out = v;
            return true;
        }
    }
    return false;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
    // (next >> 11) is uniform on [0, 2^53); +1 keeps log() safe at the low end.
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

std::pair<double, double> SplitMix64::gaussian_pair() {
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * 3.14159265358979323846 * u2;
    return {r * std::cos(t), r * std::sin(t)};
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::vector<double> channel_llrs(const BitVector& codeword, const ChannelConfig& cfg, double rate,
                                 SplitMix64& rng) {
    const std::size_t count = codeword.size();
    std::vector<double> llrs(count);
    switch (cfg.type) {
    case ChannelType::noiseless:
        for (std::size_t i = 0; i < count; ++i) llrs[i] = codeword[i] ? -1e30 : 1e30;
        break;
    case ChannelType::awgn: {
        require(rate > 0, "channel_llrs: rate must be positive");
        const double ebno = std::pow(10.0, cfg.ebno_db / 10.0);
        const double sigma2 = 1.0 / (2.0 * rate * ebno);
        const double sigma = std::sqrt(sigma2);
        double spare = 0;
        bool have_spare = false;
        for (std::size_t i = 0; i < count; ++i) {
            double z;
            if (have_spare) {
                z = spare;
                have_spare = false;
            } else {
                auto [z0, z1] = rng.gaussian_pair();
                z = z0;
                spare = z1;
                have_spare = true;
            }
            const double s = codeword[i] ? -1.0 : 1.0;
            const double y = s + sigma * z;
            llrs[i] = 2.0 * y / sigma2;
        }
        break;
    }
    case ChannelType::bsc: {
        const double p = cfg.crossover;
        require(p > 0 && p < 0.5, "channel_llrs: crossover must be in (0, 0.5)");
        const double mag = std::log((1.0 - p) / p);
        for (std::size_t i = 0; i < count; ++i) {
            const int flip = rng.uniform01() <= p ? 1 : 0;
            const int r = codeword[i] ^ flip;
            llrs[i] = (1 - 2 * r) * mag;
        }
        break;
    }
    }
    return llrs;
}

std::vector<BerPoint> run_ber(const PolarCode& code, const std::vector<double>& ebno_points,
                              const std::vector<DecodeVariant>& decoders, long long frames,
                              std::uint64_t seed, const Quantization& quant) {
    require(frames > 0, "run_ber: frames must be positive");
    require(code.info_count > 0, "run_ber: code carries no information bits");
    const int block = code.block_length;
    const int info = code.info_count;
    const double rate = static_cast<double>(info) / block;

    std::vector<BerPoint> out;
    for (std::size_t pi = 0; pi < ebno_points.size(); ++pi) {
        ChannelConfig cfg;
        cfg.type = ChannelType::awgn;
        cfg.ebno_db = ebno_points[pi];
        SplitMix64 rng(mix_seed(seed, pi));

        std::vector<BerPoint> rows(decoders.size() + 1);
        for (std::size_t di = 0; di < decoders.size(); ++di) {
            rows[di].decoder = variant_name(decoders[di]);
        }
        rows.back().decoder = "uncoded";

        BitVector message(info);
        BitVector plain(block);
        for (long long f = 0; f < frames; ++f) {
            for (int i = 0; i < info; ++i) message[i] = static_cast<std::uint8_t>(rng.next() >> 63);
            const BitVector tx = encode(code, expand_message(code, message));
            const std::vector<double> llrs = channel_llrs(tx, cfg, rate, rng);
            for (std::size_t di = 0; di < decoders.size(); ++di) {
                const DecodeResult res = decode(code, llrs, decoders[di], quant);
                int errs = 0;
                for (int i = 0; i < info; ++i) errs += res.message[i] != message[i];
                rows[di].bit_errors += errs;
                rows[di].frame_errors += errs > 0;
            }

            // Uncoded baseline: the same payload size per block at rate 1.
            for (int i = 0; i < block; ++i) plain[i] = static_cast<std::uint8_t>(rng.next() >> 63);
            const std::vector<double> raw = channel_llrs(plain, cfg, 1.0, rng);
            int errs = 0;
            for (int i = 0; i < block; ++i) errs += (raw[i] >= 0 ? 0 : 1) != plain[i];
            rows.back().bit_errors += errs;
            rows.back().frame_errors += errs > 0;
        }

        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            BerPoint& row = rows[ri];
            row.ebno_db = ebno_points[pi];
            row.frames = frames;
            const long long bits = frames * (ri < decoders.size() ? info : block);
            row.ber = static_cast<double>(row.bit_errors) / static_cast<double>(bits);
            row.fer = static_cast<double>(row.frame_errors) / static_cast<double>(frames);
            out.push_back(row);
        }
    }
    return out;
}

std::string ber_csv(const std::vector<BerPoint>& points) {
    std::string out = "ebno_db,decoder,frames,bit_errors,frame_errors,ber,fer\n";
    char line[256];
    for (const BerPoint& p : points) {
        std::snprintf(line, sizeof(line), "%g,%s,%lld,%lld,%lld,%.8g,%.8g\n", p.ebno_db,
                      p.decoder.c_str(), p.frames, p.bit_errors, p.frame_errors, p.ber, p.fer);
        out += line;
    }
    return out;
}

namespace {

long long measured_latency(ArchKind kind, int n) {
    PolarCode code = PolarCode::bec_construction(n, std::max(1, (1 << n) / 2));
    ArchitectureConfig cfg;
    cfg.kind = kind;
    cfg.n = n;
    cfg.m = 1;
    ChannelConfig clean;
    clean.type = ChannelType::noiseless;
    SplitMix64 rng(1);
    const BitVector tx = encode(code, expand_message(code, BitVector(code.info_count, 0)));
    std::vector<std::vector<double>> frames(kind == ArchKind::two_parallel ? 2 : 1,
                                            channel_llrs(tx, clean, 1.0, rng));
    const SimResult res = simulate(cfg, code, frames);
    require(res.latency_cycles == nominal_latency(kind, n),
            "latency_table: simulated cycle count disagrees with the closed form");
    return res.latency_cycles;
}

} // namespace

std::vector<LatencyRow> latency_table(const std::vector<int>& ns) {
    std::vector<LatencyRow> rows;
    for (int n : ns) {
        LatencyRow row;
        row.n = n;
        row.block = 1ll << n;
        row.tree = measured_latency(ArchKind::tree_baseline, n);
        row.d1 = measured_latency(ArchKind::lookahead_pipelined, n);
        row.d2 = measured_latency(ArchKind::refined_concurrent, n);
        row.d3 = measured_latency(ArchKind::folded, n);
        row.d4 = measured_latency(ArchKind::two_parallel, n);
        rows.push_back(row);
    }
    return rows;
}

std::string latency_csv(const std::vector<LatencyRow>& rows) {
    std::string out = "n,block,tree,d1,d2,d3,d4\n";
    char line[160];
    for (const LatencyRow& r : rows) {
        std::snprintf(line, sizeof(line), "%d,%lld,%lld,%lld,%lld,%lld,%lld\n", r.n, r.block,
                      r.tree, r.d1, r.d2, r.d3, r.d4);
        out += line;
    }
    return out;
}

} // namespace polarsim
