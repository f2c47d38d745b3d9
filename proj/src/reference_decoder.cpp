#include "polarsim/reference_decoder.hpp"
#include "polarsim/util.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace polarsim {

PartialSumTracker::PartialSumTracker(int n) : n_(n) {
    pending_odd_.resize(n);
    for (int d = 0; d < n; ++d) pending_odd_[d].assign(std::size_t(1) << d, 0);
    require(n >= 1, "PartialSumTracker: n must be positive");
}

void PartialSumTracker::reset() {
    count_ = 0;
    for (auto& row : pending_odd_) std::fill(row.begin(), row.end(), 0);
}

void PartialSumTracker::push_decision(std::uint8_t u) {
    require(count_ < (1 << n_), "PartialSumTracker: too many decisions");
    deliver(0, 0, count_, u);
    ++count_;
}

void PartialSumTracker::deliver(int d, int p, int t, std::uint8_t v) {
    if ((t & 1) == 0) {
        pending_odd_[d][p] = v;
        return;
    }
    // Completed pair: fold it one level toward the channel.
    const std::uint8_t a = pending_odd_[d][p];
    if (d + 1 < n_) {
        deliver(d + 1, 2 * p, t >> 1, static_cast<std::uint8_t>(a ^ v));
        deliver(d + 1, 2 * p + 1, t >> 1, v);
    }
}

std::uint8_t PartialSumTracker::pending_by_depth(int depth, int node) const {
    return pending_odd_.at(depth).at(node);
}

std::uint8_t PartialSumTracker::operand(int stage, int node) const {
    return pending_by_depth(n_ - stage, node);
}

double f_exact(double a, double b) {
    const double sign = ((a < 0) != (b < 0)) ? -1.0 : 1.0;
    const double m = std::min(std::fabs(a), std::fabs(b));
    double v = sign * m + std::log1p(std::exp(-std::fabs(a + b))) - std::log1p(std::exp(-std::fabs(a - b)));
    // The exact combine never exceeds the smaller input magnitude.
    if (v > m) v = m;
    if (v < -m) v = -m;
    return v;
}

double f_minsum(double a, double b) {
    const double sign = ((a < 0) != (b < 0)) ? -1.0 : 1.0;
    return sign * std::min(std::fabs(a), std::fabs(b));
}

double g_func(double a, double b, std::uint8_t u) { return (u ? -a : a) + b; }

std::uint8_t decide_llr(double llr) { return llr >= 0 ? 0 : 1; }

namespace {

constexpr double kLrMin = 1e-30;
constexpr double kLrMax = 1e30;

double clamp_lr(double v) { return std::min(std::max(v, kLrMin), kLrMax); }

struct LrDomain {
    using Value = double;
    static Value from_llr(double llr, const Quantization&) { return clamp_lr(std::exp(llr)); }
    static Value f(Value a, Value b) { return clamp_lr((a * b + 1.0) / (a + b)); }
    static Value g(Value a, Value b, std::uint8_t u) { return clamp_lr(u ? b / a : a * b); }
    static std::uint8_t decide(Value v) { return v >= 1.0 ? 0 : 1; }
};

struct LlrExactDomain {
    using Value = double;
    static Value from_llr(double llr, const Quantization&) { return llr; }
    static Value f(Value a, Value b) { return f_exact(a, b); }
    static Value g(Value a, Value b, std::uint8_t u) { return g_func(a, b, u); }
    static std::uint8_t decide(Value v) { return decide_llr(v); }
};

struct MinSumDomain {
    using Value = double;
    static Value from_llr(double llr, const Quantization&) { return llr; }
    static Value f(Value a, Value b) { return f_minsum(a, b); }
    static Value g(Value a, Value b, std::uint8_t u) { return g_func(a, b, u); }
    static std::uint8_t decide(Value v) { return decide_llr(v); }
};

struct QuantizedDomain {
    using Value = int;
    int q;
    Value from_llr(double llr, const Quantization& quant) const { return quantize(llr, quant); }
    Value f(Value a, Value b) const { return sign_min(a, b); }
    Value g(Value a, Value b, std::uint8_t u) const {
        const auto [c0, c1] = g_candidates(a, b, q);
        return u ? c1 : c0;
    }
    static std::uint8_t decide(Value v) { return v >= 0 ? 0 : 1; }
};

template <typename Domain>
BitVector run_sc(const PolarCode& code, const std::vector<double>& llrs, const Domain& dom,
                 const Quantization& quant) {
    const int n = code.n;
    const int size = code.block_length;

    std::vector<std::vector<typename Domain::Value>> level(n + 1);
    for (int d = 0; d <= n; ++d) level[d].resize(std::size_t(1) << d);
    for (int j = 0; j < size; ++j) level[n][j] = dom.from_llr(llrs[j], quant);

    PartialSumTracker ps(n);
    BitVector u_hat(size);

    for (int phi = 0; phi < size; ++phi) {
        int top = n - 1;
        if (phi != 0) {
            const int dg = std::countr_zero(static_cast<unsigned>(phi));
            for (int p = 0; p < (1 << dg); ++p)
                level[dg][p] = dom.g(level[dg + 1][2 * p], level[dg + 1][2 * p + 1],
                                     ps.pending_by_depth(dg, p));
            top = dg - 1;
        }
        for (int d = top; d >= 0; --d)
            for (int p = 0; p < (1 << d); ++p)
                level[d][p] = dom.f(level[d + 1][2 * p], level[d + 1][2 * p + 1]);

        u_hat[phi] = code.is_frozen[phi] ? code.frozen_values[phi] : dom.decide(level[0][0]);
        ps.push_decision(u_hat[phi]);
    }
    return u_hat;
}

} // namespace

DecodeResult decode(const PolarCode& code, const std::vector<double>& channel_llrs,
                    DecodeVariant variant, const Quantization& quant) {
    if (static_cast<int>(channel_llrs.size()) != code.block_length)
        throw std::invalid_argument("decode: channel length mismatch");

    DecodeResult result;
    switch (variant) {
        case DecodeVariant::lr:
            result.u_hat = run_sc(code, channel_llrs, LrDomain{}, quant);
            break;
        case DecodeVariant::llr_exact:
            result.u_hat = run_sc(code, channel_llrs, LlrExactDomain{}, quant);
            break;
        case DecodeVariant::minsum:
            result.u_hat = run_sc(code, channel_llrs, MinSumDomain{}, quant);
            break;
        case DecodeVariant::minsum_quantized:
            result.u_hat = run_sc(code, channel_llrs, QuantizedDomain{quant.q}, quant);
            break;
    }
    result.message = extract_message(code, result.u_hat);
    return result;
}

} // namespace polarsim
