#include "polarsim/codec.hpp"
#include "polarsim/util.hpp"

#include <algorithm>
#include <sstream>

namespace polarsim {

namespace {

int reverse_bits(int value, int width) {
    int r = 0;
    for (int b = 0; b < width; ++b)
        if (value & (1 << b)) r |= 1 << (width - 1 - b);
    return r;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<int> split_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

} // namespace

std::vector<int> bit_reversal_permutation(int n) {
    const int size = 1 << n;
    std::vector<int> perm(size);
    for (int i = 0; i < size; ++i) perm[i] = reverse_bits(i, n);
    return perm;
}

BitVector polar_transform(const BitVector& u) {
    const int size = static_cast<int>(u.size());
    if (size == 0 || !is_power_of_two(static_cast<std::uint64_t>(size)))
        throw std::invalid_argument("polar_transform: length must be a power of two");
    const int n = log2_exact(static_cast<std::uint64_t>(size));
    const auto rev = bit_reversal_permutation(n);
    BitVector w(size);
    for (int j = 0; j < size; ++j) w[j] = u[rev[j]];
    // In-place butterflies; with the index-reversal prefix this equals the
    // full transform including the reversal step.
    for (int h = 1; h < size; h <<= 1)
        for (int base = 0; base < size; base += 2 * h)
            for (int j = base; j < base + h; ++j)
                w[j] = static_cast<std::uint8_t>(w[j] ^ w[j + h]);
    return w;
}

Gf2Matrix generator_matrix(int n) {
    const int size = 1 << n;
    Gf2Matrix m;
    m.rows = size;
    m.cols = size;
    m.data.assign(static_cast<std::size_t>(size) * size, 0);
    BitVector e(size, 0);
    for (int r = 0; r < size; ++r) {
        e[r] = 1;
        BitVector row = polar_transform(e);
        e[r] = 0;
        for (int c = 0; c < size; ++c) m.at(r, c) = row[c];
    }
    return m;
}

PolarCode PolarCode::bec_construction(int n, int info_count, double erasure_prob) {
    if (n < 1 || n > 24) throw std::invalid_argument("bec_construction: n out of range");
    const int size = 1 << n;
    if (info_count < 0 || info_count > size)
        throw std::invalid_argument("bec_construction: info_count out of range");

    std::vector<double> z{erasure_prob};
    for (int level = 0; level < n; ++level) {
        std::vector<double> next(z.size() * 2);
        for (std::size_t j = 0; j < z.size(); ++j) {
            next[2 * j] = 2.0 * z[j] - z[j] * z[j];
            next[2 * j + 1] = z[j] * z[j];
        }
        z = std::move(next);
    }

    // Freeze the least reliable positions; ties break toward the lower index.
    std::vector<int> order(size);
    for (int i = 0; i < size; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return z[a] > z[b]; });

    PolarCode code;
    code.n = n;
    code.block_length = size;
    code.info_count = info_count;
    code.is_frozen.assign(size, 0);
    code.frozen_values.assign(size, 0);
    for (int i = 0; i < size - info_count; ++i) code.is_frozen[order[i]] = 1;
    return code;
}

PolarCode PolarCode::with_frozen_set(int n, const std::vector<int>& frozen_positions) {
    const int size = 1 << n;
    PolarCode code;
    code.n = n;
    code.block_length = size;
    code.is_frozen.assign(size, 0);
    code.frozen_values.assign(size, 0);
    for (int pos : frozen_positions) {
        if (pos < 0 || pos >= size) throw std::invalid_argument("with_frozen_set: position out of range");
        code.is_frozen[pos] = 1;
    }
    code.info_count = size - static_cast<int>(std::count(code.is_frozen.begin(), code.is_frozen.end(), 1));
    return code;
}

std::map<std::string, std::string> PolarCode::to_kv() const {
    std::vector<int> frozen;
    std::string vals;
    for (int i = 0; i < block_length; ++i) {
        if (is_frozen[i]) {
            frozen.push_back(i);
            vals += frozen_values[i] ? '1' : '0';
        }
    }
    return {
        {"n", std::to_string(n)},
        {"info_count", std::to_string(info_count)},
        {"frozen_positions", join_ints(frozen)},
        {"frozen_values", vals},
    };
}

PolarCode PolarCode::from_kv(const std::map<std::string, std::string>& kv) {
    PolarCode code = with_frozen_set(std::stoi(kv.at("n")), split_ints(kv.at("frozen_positions")));
    if (kv.count("frozen_values")) {
        const std::string& vals = kv.at("frozen_values");
        std::size_t k = 0;
        for (int i = 0; i < code.block_length && k < vals.size(); ++i)
            if (code.is_frozen[i]) code.frozen_values[i] = vals[k++] == '1';
    }
    if (kv.count("info_count") && std::stoi(kv.at("info_count")) != code.info_count)
        throw std::invalid_argument("from_kv: info_count disagrees with frozen set");
    return code;
}

BitVector encode(const PolarCode& code, const BitVector& u) {
    if (static_cast<int>(u.size()) != code.block_length)
        throw std::invalid_argument("encode: input length mismatch");
    for (int i = 0; i < code.block_length; ++i)
        if (code.is_frozen[i] && u[i] != code.frozen_values[i])
            throw std::invalid_argument("encode: frozen slot disagrees with pinned value");
    return polar_transform(u);
}

BitVector expand_message(const PolarCode& code, const BitVector& message) {
    if (static_cast<int>(message.size()) != code.info_count)
        throw std::invalid_argument("expand_message: message length mismatch");
    BitVector u(code.block_length, 0);
    std::size_t k = 0;
    for (int i = 0; i < code.block_length; ++i)
        u[i] = code.is_frozen[i] ? code.frozen_values[i] : message[k++];
    return u;
}

BitVector extract_message(const PolarCode& code, const BitVector& u) {
    if (static_cast<int>(u.size()) != code.block_length)
        throw std::invalid_argument("extract_message: input length mismatch");
    BitVector message;
    message.reserve(code.info_count);
    for (int i = 0; i < code.block_length; ++i)
        if (!code.is_frozen[i]) message.push_back(u[i]);
    return message;
}

std::vector<std::vector<std::uint8_t>> partial_sum_oracle(const BitVector& prefix, int level, int n) {
    if (level < 1 || level > n) throw std::invalid_argument("partial_sum_oracle: level out of range");
    const int k = n - level;          // each element spans a block of 2^k inputs
    const int block = 1 << k;
    const int streams = 1 << k;
    const int produced = static_cast<int>(prefix.size()) / block;

    std::vector<std::vector<std::uint8_t>> out(streams);
    for (int sigma = 0; sigma < streams; ++sigma) {
        const int col = reverse_bits(sigma, k);
        out[sigma].reserve(produced);
        for (int i = 0; i < produced; ++i) {
            std::uint8_t acc = 0;
            for (int r = 0; r < block; ++r) {
                // Transform-matrix entry: column bits must be covered by row bits.
                if ((col & ~r) == 0) acc ^= prefix[i * block + r];
            }
            out[sigma].push_back(acc);
        }
    }
    return out;
}

} // namespace polarsim
