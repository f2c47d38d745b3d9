#include "polarsim/gate_pe.hpp"
#include "polarsim/util.hpp"

#include <cmath>
#include <cstdlib>

namespace polarsim {

BitCellOut full_addsub_bit(std::uint8_t x, std::uint8_t y, std::uint8_t carry_in, std::uint8_t borrow_in) {
    BitCellOut o;
    const std::uint8_t axy = static_cast<std::uint8_t>(x ^ y);
    o.sum = static_cast<std::uint8_t>(axy ^ carry_in);
    o.carry_out = static_cast<std::uint8_t>((x & y) | (axy & carry_in));
    o.diff = static_cast<std::uint8_t>(axy ^ borrow_in);
    o.borrow_out = static_cast<std::uint8_t>(((x ^ 1) & y) | ((axy ^ 1) & borrow_in));
    return o;
}

BitCellOut addsub_cell_probe(std::uint8_t x, std::uint8_t y, std::uint8_t z) {
    return full_addsub_bit(x, y, z, z);
}

namespace {

int max_word(int q) { return (1 << (q - 1)) - 1; }

int saturate_raw(int raw, int q, bool overflow, std::uint8_t result_sign, bool* flag) {
    if (overflow) {
        if (flag) *flag = true;
        return result_sign ? -max_word(q) : max_word(q);
    }
    if (raw == -(1 << (q - 1))) { // representable but outside the symmetric range
        if (flag) *flag = true;
        return -max_word(q);
    }
    return raw;
}

} // namespace

WordAddSub addsub_word(int x, int y, int q) {
    require(q >= 2 && q <= 30, "addsub_word: q out of range");
    const int mask = (1 << q) - 1;
    const unsigned ux = static_cast<unsigned>(x) & mask;
    const unsigned uy = static_cast<unsigned>(y) & mask;

    unsigned sum_bits = 0, diff_bits = 0;
    std::uint8_t carry = 0, borrow = 0;
    for (int i = 0; i < q; ++i) {
        const std::uint8_t xb = (ux >> i) & 1u;
        const std::uint8_t yb = (uy >> i) & 1u;
        BitCellOut cell;
        if (i == 0) {
            // Half cell: no chain inputs at bit 0.
            cell.sum = static_cast<std::uint8_t>(xb ^ yb);
            cell.carry_out = static_cast<std::uint8_t>(xb & yb);
            cell.diff = cell.sum;
            cell.borrow_out = static_cast<std::uint8_t>((xb ^ 1) & yb);
        } else {
            cell = full_addsub_bit(xb, yb, carry, borrow);
        }
        sum_bits |= static_cast<unsigned>(cell.sum) << i;
        diff_bits |= static_cast<unsigned>(cell.diff) << i;
        carry = cell.carry_out;
        borrow = cell.borrow_out;
    }

    const auto to_signed = [&](unsigned bits) {
        int v = static_cast<int>(bits & mask);
        if (v & (1 << (q - 1))) v -= 1 << q;
        return v;
    };

    const std::uint8_t sx = (ux >> (q - 1)) & 1u;
    const std::uint8_t sy = (uy >> (q - 1)) & 1u;
    const std::uint8_t ssum = (sum_bits >> (q - 1)) & 1u;
    const std::uint8_t sdiff = (diff_bits >> (q - 1)) & 1u;

    WordAddSub out;
    // Add overflows only for equal input signs; subtract only for differing.
    const bool add_ovf = (sx == sy) && (ssum != sx);
    const bool sub_ovf = (sx != sy) && (sdiff != sx);
    out.sum = saturate_raw(to_signed(sum_bits), q, add_ovf, sx, &out.sum_saturated);
    out.diff = saturate_raw(to_signed(diff_bits), q, sub_ovf, sx, &out.diff_saturated);
    return out;
}

SignMag ttos(int v, int q) {
    SignMag sm;
    if (v < 0) {
        sm.sign = 1;
        sm.magnitude = v == -(1 << (q - 1)) ? max_word(q) : -v;
    } else {
        sm.magnitude = v;
    }
    return sm;
}

int stot(const SignMag& sm) { return sm.sign ? -sm.magnitude : sm.magnitude; }

Type1Out type1_pe(int a, int b, int q) {
    const WordAddSub w = addsub_word(b, a, q);
    return {w.sum, w.diff};
}

int type2_pe(int a, int b, int q) {
    const SignMag sa = ttos(a, q);
    const SignMag sb = ttos(b, q);
    SignMag out;
    out.sign = static_cast<std::uint8_t>(sa.sign ^ sb.sign);
    out.magnitude = sa.magnitude < sb.magnitude ? sa.magnitude : sb.magnitude;
    return stot(out);
}

MergedOut merged_pe(int a, int b, int q) {
    const WordAddSub w = addsub_word(b, a, q); // shared chain: b+a and b-a
    const SignMag sa = ttos(a, q);
    const SignMag sb = ttos(b, q);

    // Select min(|a|,|b|) from the chain signs; saturation keeps signs intact.
    bool a_is_min;
    if (sa.sign == sb.sign) {
        if (w.diff == 0) {
            a_is_min = true; // equal magnitudes
        } else {
            const bool b_smaller = (w.diff < 0) != (sb.sign != 0);
            a_is_min = !b_smaller;
        }
    } else {
        const bool a_bigger = ((w.sum < 0) ? 1 : 0) == sa.sign;
        a_is_min = !a_bigger;
    }

    MergedOut out;
    SignMag f;
    f.sign = static_cast<std::uint8_t>(sa.sign ^ sb.sign);
    f.magnitude = a_is_min ? sa.magnitude : sb.magnitude;
    out.f = stot(f);
    out.cand0 = w.sum;
    out.cand1 = w.diff;
    return out;
}

int sat(long long v, int q) {
    const long long m = max_word(q);
    if (v > m) return static_cast<int>(m);
    if (v < -m) return static_cast<int>(-m);
    return static_cast<int>(v);
}

int sat_add(int a, int b, int q) { return sat(static_cast<long long>(a) + b, q); }

int sign_min(int a, int b) {
    const int ma = a < 0 ? -a : a;
    const int mb = b < 0 ? -b : b;
    const int m = ma < mb ? ma : mb;
    return ((a < 0) != (b < 0)) ? -m : m;
}

std::pair<int, int> g_candidates(int a, int b, int q) {
    return {sat(static_cast<long long>(b) + a, q), sat(static_cast<long long>(b) - a, q)};
}

int quantize(double llr, const Quantization& quant) {
    const double scaled = llr * static_cast<double>(1 << quant.f);
    const int m = max_word(quant.q);
    if (scaled >= m) return m;
    if (scaled <= -m) return -m;
    return static_cast<int>(std::llround(scaled));
}

namespace xor_cost {

int full_cell() { return 4; }
int half_cell() { return 1; }
int conventional_full_cell() { return 7; }
int conventional_half_cell() { return 2; }
int addsub_word(int q) { return 4 * q - 3; }
int conventional_word(int q) { return 7 * q - 5; }
int type1(int q) { return addsub_word(q); }
int type2(int q) { return 7 * q; }
int merged(int q) { return 9 * q; }
int tree_pe(int q) { return type1(q) + type2(q); }

} // namespace xor_cost

} // namespace polarsim
