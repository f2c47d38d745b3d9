#include <doctest.h>

#include "oracle_gf2.hpp"
#include "polarsim/channel.hpp"
#include "polarsim/codec.hpp"

#include <stdexcept>

using namespace polarsim;

namespace {

BitVector random_bits(SplitMix64& rng, int count) {
    BitVector bits(count);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next() >> 63);
    return bits;
}

} // namespace

TEST_CASE("bit reversal permutation") {
    CHECK(bit_reversal_permutation(0) == std::vector<int>{0});
    CHECK(bit_reversal_permutation(1) == std::vector<int>{0, 1});
    CHECK(bit_reversal_permutation(2) == std::vector<int>{0, 2, 1, 3});
    CHECK(bit_reversal_permutation(3) == std::vector<int>{0, 4, 2, 6, 1, 5, 3, 7});
    const auto perm = bit_reversal_permutation(5);
    for (int i = 0; i < 32; ++i) CHECK(perm[perm[i]] == i); // involution
}

TEST_CASE("generator matrix equals the Kronecker oracle") {
    for (int n = 0; n <= 5; ++n) {
        const Gf2Matrix g = generator_matrix(n);
        const auto f = oracle::kron_f_power(n);
        const int size = 1 << n;
        REQUIRE(g.rows == size);
        REQUIRE(g.cols == size);
        for (int r = 0; r < size; ++r)
            for (int c = 0; c < size; ++c)
                CHECK(g.at(r, c) == f[oracle::reverse_bits(r, n)][c]);
    }
}

TEST_CASE("transform matches the dense oracle") {
    SplitMix64 rng(101);
    for (int n = 1; n <= 7; ++n)
        for (int t = 0; t < 50; ++t) {
            const BitVector u = random_bits(rng, 1 << n);
            CHECK(polar_transform(u) == oracle::transform_oracle(u, n));
        }
}

TEST_CASE("transform is an involution") {
    SplitMix64 rng(102);
    for (int n = 1; n <= 8; ++n)
        for (int t = 0; t < 20; ++t) {
            const BitVector u = random_bits(rng, 1 << n);
            CHECK(polar_transform(polar_transform(u)) == u);
        }
}

TEST_CASE("length-4 transform in closed form") {
    for (int mask = 0; mask < 16; ++mask) {
        BitVector u(4);
        for (int i = 0; i < 4; ++i) u[i] = static_cast<std::uint8_t>((mask >> i) & 1);
        const BitVector x = polar_transform(u);
        CHECK(x[0] == (u[0] ^ u[1] ^ u[2] ^ u[3]));
        CHECK(x[1] == (u[2] ^ u[3]));
        CHECK(x[2] == (u[1] ^ u[3]));
        CHECK(x[3] == u[3]);
    }
}

TEST_CASE("erasure-probability construction picks the worst channels") {
    // Density-evolution doubling from 0.5: length 2 gives (0.75, 0.25),
    // length 4 gives (0.9375, 0.5625, 0.4375, 0.0625).
    const PolarCode c2 = PolarCode::bec_construction(1, 1);
    CHECK(c2.is_frozen == std::vector<std::uint8_t>{1, 0});

    const PolarCode c4 = PolarCode::bec_construction(2, 2);
    CHECK(c4.is_frozen == std::vector<std::uint8_t>{1, 1, 0, 0});

    const PolarCode c8 = PolarCode::bec_construction(3, 4);
    CHECK(c8.is_frozen == std::vector<std::uint8_t>{1, 1, 1, 0, 1, 0, 0, 0});

    const PolarCode all = PolarCode::bec_construction(3, 8);
    CHECK(all.info_count == 8);
    for (auto f : all.is_frozen) CHECK(f == 0);

    const PolarCode none = PolarCode::bec_construction(3, 0);
    CHECK(none.info_count == 0);
    CHECK_THROWS_AS(PolarCode::bec_construction(3, 9), std::invalid_argument);
}

TEST_CASE("encode rejects disagreeing frozen slots") {
    const PolarCode code = PolarCode::bec_construction(3, 4);
    BitVector u(8, 0);
    CHECK(encode(code, u) == BitVector(8, 0));
    u[0] = 1; // frozen position pinned to zero
    CHECK_THROWS_AS(encode(code, u), std::invalid_argument);
    CHECK_THROWS_AS(encode(code, BitVector(4, 0)), std::invalid_argument);
}

TEST_CASE("message expansion and extraction round trip") {
    SplitMix64 rng(103);
    for (int n = 2; n <= 6; ++n) {
        const PolarCode code = PolarCode::bec_construction(n, (1 << n) * 3 / 4);
        for (int t = 0; t < 20; ++t) {
            const BitVector message = random_bits(rng, code.info_count);
            const BitVector u = expand_message(code, message);
            CHECK(extract_message(code, u) == message);
            for (int i = 0; i < code.block_length; ++i)
                if (code.is_frozen[i]) CHECK(u[i] == code.frozen_values[i]);
        }
    }
}

TEST_CASE("code description round trips through key-value form") {
    const PolarCode code = PolarCode::bec_construction(4, 11);
    const PolarCode back = PolarCode::from_kv(code.to_kv());
    CHECK(back.n == code.n);
    CHECK(back.info_count == code.info_count);
    CHECK(back.is_frozen == code.is_frozen);
    CHECK(back.frozen_values == code.frozen_values);
}

TEST_CASE("explicit frozen set constructor") {
    const PolarCode code = PolarCode::with_frozen_set(3, {0, 1, 2, 4});
    CHECK(code.info_count == 4);
    CHECK(code.is_frozen == std::vector<std::uint8_t>{1, 1, 1, 0, 1, 0, 0, 0});
}

TEST_CASE("feedback oracle on the length-8 example") {
    SplitMix64 rng(104);
    for (int t = 0; t < 50; ++t) {
        const BitVector u = random_bits(rng, 8);

        // Level 3: the single stream replays the raw decisions.
        const auto s3 = partial_sum_oracle({u[0], u[1], u[2], u[3], u[4], u[5]}, 3, 3);
        REQUIRE(s3.size() == 1);
        CHECK(s3[0] == std::vector<std::uint8_t>{u[0], u[1], u[2], u[3], u[4], u[5]});

        // Level 2: two streams, one element per decided pair.
        const auto s2 = partial_sum_oracle({u[0], u[1], u[2], u[3]}, 2, 3);
        REQUIRE(s2.size() == 2);
        CHECK(s2[0] == std::vector<std::uint8_t>{static_cast<std::uint8_t>(u[0] ^ u[1]),
                                                 static_cast<std::uint8_t>(u[2] ^ u[3])});
        CHECK(s2[1] == std::vector<std::uint8_t>{u[1], u[3]});

        // Level 1: four streams, one element per decided quad.
        const auto s1 = partial_sum_oracle({u[0], u[1], u[2], u[3]}, 1, 3);
        REQUIRE(s1.size() == 4);
        CHECK(s1[0] ==
              std::vector<std::uint8_t>{static_cast<std::uint8_t>(u[0] ^ u[1] ^ u[2] ^ u[3])});
        CHECK(s1[1] == std::vector<std::uint8_t>{static_cast<std::uint8_t>(u[2] ^ u[3])});
        CHECK(s1[2] == std::vector<std::uint8_t>{static_cast<std::uint8_t>(u[1] ^ u[3])});
        CHECK(s1[3] == std::vector<std::uint8_t>{u[3]});
    }
}

TEST_CASE("feedback oracle elements re-encode the decided blocks") {
    // Element i of every level-s stream is a codeword bit of the i-th decided
    // input block, so the streams must agree with the transform itself.
    SplitMix64 rng(105);
    for (int n = 2; n <= 6; ++n) {
        const int size = 1 << n;
        const BitVector u = random_bits(rng, size);
        for (int level = 1; level <= n; ++level) {
            const int block = 1 << (n - level);
            const auto streams = partial_sum_oracle(u, level, n);
            REQUIRE(static_cast<int>(streams.size()) == block);
            for (int i = 0; i * block < size; ++i) {
                const BitVector piece(u.begin() + i * block, u.begin() + (i + 1) * block);
                const BitVector x = polar_transform(piece);
                for (int sigma = 0; sigma < block; ++sigma) {
                    REQUIRE(static_cast<int>(streams[sigma].size()) == size / block);
                    CHECK(streams[sigma][i] == x[sigma]);
                }
            }
        }
    }
}
