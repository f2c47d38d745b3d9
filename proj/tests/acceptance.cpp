// End-to-end acceptance harness: ten independent checks, one [PASS]/[FAIL]
// line each, exit 0 only when every check passes.  Workloads and tolerances
// are pinned as named constants next to the checks that use them.

#include "polarsim/arch_sim.hpp"
#include "polarsim/channel.hpp"
#include "polarsim/cli.hpp"
#include "polarsim/codec.hpp"
#include "polarsim/cost_model.hpp"
#include "polarsim/gate_pe.hpp"
#include "polarsim/igc.hpp"
#include "polarsim/reference_decoder.hpp"
#include "polarsim/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace polarsim;

namespace {

// Workload pins.
constexpr long long kEquivalenceFrames = 1000; // frames per block length (check 2)
constexpr double kEquivalenceEbn0Db = 2.0;
constexpr long long kIgcFrames = 1000;          // frames per block length (check 6)
constexpr long long kDegradationFrames = 100000; // Monte-Carlo frames (check 9)
constexpr std::uint64_t kDegradationSeed = 2024;

// Tolerance pins.
// FER ratio bound frozen from a reference run at the same seed and frame
// count (observed maximum 1.037 across the three operating points).
constexpr double kMinsumFerRatioBound = 1.25;
// Acceptance window for the documented headline percentages (check 8).
constexpr double kRatioWindowPp = 0.5;

struct Failure {
    std::string reason;
};

void check(bool ok, const std::string& reason) {
    if (!ok) throw Failure{reason};
}

template <class... Ts> std::string cat(const Ts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

std::string pct(double v, int digits = 2) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

std::vector<std::vector<double>> awgn_frames(const PolarCode& code, int count, std::uint64_t seed,
                                             double ebno_db) {
    SplitMix64 rng(seed);
    ChannelConfig chan;
    chan.type = ChannelType::awgn;
    chan.ebno_db = ebno_db;
    const double rate = static_cast<double>(code.info_count) / code.block_length;
    std::vector<std::vector<double>> frames;
    frames.reserve(count);
    for (int f = 0; f < count; ++f) {
        BitVector msg(code.info_count);
        for (auto& b : msg) b = static_cast<std::uint8_t>(rng.next() >> 63);
        const BitVector x = encode(code, expand_message(code, msg));
        frames.push_back(channel_llrs(x, chan, rate, rng));
    }
    return frames;
}

std::vector<BitVector> reference_composites(const PolarCode& code,
                                            const std::vector<std::vector<double>>& frames) {
    std::vector<BitVector> out;
    out.reserve(frames.size());
    for (const auto& f : frames)
        out.push_back(decode(code, f, DecodeVariant::minsum_quantized, Quantization{}).u_hat);
    return out;
}

struct CliRun {
    int rc = 0;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.rc = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::vector<ArchKind> kAllArchs = {ArchKind::tree_baseline, ArchKind::lookahead_pipelined,
                                         ArchKind::refined_concurrent, ArchKind::folded,
                                         ArchKind::two_parallel};

const char* arch_label(ArchKind k) {
    switch (k) {
        case ArchKind::tree_baseline: return "tree";
        case ArchKind::lookahead_pipelined: return "d1";
        case ArchKind::refined_concurrent: return "d2";
        case ArchKind::folded: return "d3";
        case ArchKind::two_parallel: return "d4";
    }
    return "?";
}

// ---------------------------------------------------------------- check 1

void crit_latency(std::vector<std::string>& detail) {
    std::vector<int> ns;
    for (int n = 1; n <= 10; ++n) ns.push_back(n);
    const auto rows = latency_table(ns); // simulates and cross-checks internally
    check(rows.size() == 10, "latency table row count");
    for (const auto& r : rows) {
        const long long size = 1LL << r.n;
        check(r.block == size, cat("block size at n=", r.n));
        check(r.tree == 2 * (size - 1), cat("tree latency at n=", r.n));
        check(r.d1 == size - 1 && r.d2 == size - 1 && r.d3 == size - 1,
              cat("single-codeword latency at n=", r.n));
        check(r.d4 == size, cat("two-frame latency at n=", r.n));
    }
    // Independent: simulate every flow directly and compare to the formulas.
    for (int n = 1; n <= 10; ++n) {
        const int size = 1 << n;
        const PolarCode code = PolarCode::bec_construction(n, std::max(1, size / 2));
        const auto one = awgn_frames(code, 1, 0x100 + n, kEquivalenceEbn0Db);
        const auto two = awgn_frames(code, 2, 0x200 + n, kEquivalenceEbn0Db);
        for (ArchKind k : kAllArchs) {
            ArchitectureConfig cfg;
            cfg.kind = k;
            cfg.n = n;
            if (k == ArchKind::refined_concurrent) cfg.m = std::min(3, size - 1);
            const SimResult res = simulate(cfg, code, k == ArchKind::two_parallel ? two : one);
            const long long expect = k == ArchKind::tree_baseline ? 2 * (size - 1)
                                     : k == ArchKind::two_parallel ? size
                                                                   : size - 1;
            check(res.latency_cycles == expect,
                  cat(arch_label(k), " measured ", res.latency_cycles, " expected ", expect,
                      " at n=", n));
        }
    }
    detail.push_back("simulated latencies equal the closed forms for all five flows, n=1..10");
}

// ---------------------------------------------------------------- check 2

void crit_equivalence(std::vector<std::string>& detail) {
    long long frames_total = 0;
    for (int n = 2; n <= 10; ++n) {
        const int size = 1 << n;
        const PolarCode code = PolarCode::bec_construction(n, size / 2);
        const auto frames =
            awgn_frames(code, static_cast<int>(kEquivalenceFrames), 0xC200 + n, kEquivalenceEbn0Db);
        const auto refs = reference_composites(code, frames);
        for (ArchKind k : kAllArchs) {
            ArchitectureConfig cfg;
            cfg.kind = k;
            cfg.n = n;
            if (k == ArchKind::refined_concurrent) cfg.m = std::min(3, size - 1);
            const SimResult res = simulate(cfg, code, frames);
            check(res.decoded.size() == frames.size(), cat(arch_label(k), " frame count at n=", n));
            for (std::size_t f = 0; f < frames.size(); ++f)
                check(res.decoded[f] == refs[f],
                      cat(arch_label(k), " diverges from the reference at n=", n, " frame ", f));
        }
        frames_total += kEquivalenceFrames;
    }
    detail.push_back(cat("all five flows bit-exact vs the quantized reference: n=2..10, ",
                         kEquivalenceFrames, " noisy frames each (", frames_total,
                         " frames x 5 flows)"));
}

// ---------------------------------------------------------------- check 3

void crit_tables(std::vector<std::string>& detail) {
    // Concurrent schedule, one period plus the wrap column.
    const CliRun lower = cli({"schedule", "--n", "3", "--design", "d2", "--m", "3"});
    check(lower.rc == 0, "schedule d2 m=3 exit code");
    check(lower.out == "stage,1,2,3,4,5,6,7,8\n"
                       "1,C1,C2,C3,,,,,C4\n"
                       "2,,C1,C2,C3,C1,C2,C3,\n"
                       "3,,,C1,C2,C3,C1,C2,C3\n"
                       "3',,,,C1,C2,C3,C1,C2\n",
          "concurrent schedule window (m=3, one period) differs");

    // Two full periods of the same schedule.
    const CliRun two = cli({"schedule", "--n", "3", "--design", "d2", "--m", "3", "--cycles", "14"});
    check(two.rc == 0, "schedule d2 m=3 cycles=14 exit code");
    check(two.out == "stage,1,2,3,4,5,6,7,8,9,10,11,12,13,14\n"
                     "1,C1,C2,C3,,,,,C4,C5,C6,,,,\n"
                     "2,,C1,C2,C3,C1,C2,C3,,C4,C5,C6,C4,C5,C6\n"
                     "3,,,C1,C2,C3,C1,C2,C3,,C4,C5,C6,C4,C5\n"
                     "3',,,,C1,C2,C3,C1,C2,C3,,C4,C5,C6,C4\n",
          "concurrent schedule window (m=3, two periods) differs");

    // Fully concurrent admission, first seven codewords.
    const CliRun full = cli(
        {"schedule", "--n", "3", "--design", "d2", "--m", "7", "--cycles", "14", "--frames", "7"});
    check(full.rc == 0, "schedule d2 m=7 exit code");
    check(full.out == "stage,1,2,3,4,5,6,7,8,9,10,11,12,13,14\n"
                      "1,C1,C2,C3,C4,C5,C6,C7,,,,,,,\n"
                      "2,,C1,C2,C3,C4,C5,C6,C7,,,,,,\n"
                      "3,,,C1,C2,C3,C4,C5,C6,C7,,,,,\n"
                      "3',,,,C1,C2,C3,C4,C5,C6,C7,,,,\n"
                      "2',,,,,C1,C2,C3,C4,C5,C6,C7,,,\n"
                      "3'',,,,,,C1,C2,C3,C4,C5,C6,C7,,\n"
                      "3''',,,,,,,C1,C2,C3,C4,C5,C6,C7,\n",
          "concurrent schedule window (m=7) differs");

    // Two-frame bank demand chart.
    const CliRun demand = cli({"schedule", "--n", "3", "--design", "d4"});
    check(demand.rc == 0, "schedule d4 exit code");
    check(demand.out == "frame,1,2,3,4,5,6,7,8\n"
                        "C1,4,,2,1,1,2,1,1\n"
                        "C2,,4,2,1,1,2,1,1\n",
          "two-frame demand chart differs");

    // The demand chart is what the cycle-accurate flow actually does.
    const PolarCode code = PolarCode::bec_construction(3, 4);
    ArchitectureConfig cfg;
    cfg.kind = ArchKind::two_parallel;
    cfg.n = 3;
    const SimResult res = simulate(cfg, code, awgn_frames(code, 2, 0x300, kEquivalenceEbn0Db));
    check(res.active_pe_per_cycle == std::vector<int>{4, 4, 4, 2, 2, 4, 2, 2},
          "simulated two-frame activity differs from the chart column sums");

    detail.push_back("concurrent windows (m=3 one/two periods, m=7) and the two-frame demand "
                     "chart match cell for cell");
}

// ---------------------------------------------------------------- check 4

void crit_pe_brackets(std::vector<std::string>& detail) {
    check(required_pe_count(3, 1) == 7, "pe count at n=3 m=1");
    check(required_pe_count(3, 3) == 8, "pe count at n=3 m=3");
    check(required_pe_count(3, 7) == 12, "pe count at n=3 m=7");

    for (int n = 2; n <= 8; ++n) {
        const long long size = 1LL << n;
        long long prev = -1;
        int prev_bracket = -1;
        for (int m = 1; m <= size - 1; ++m) {
            int i = 1;
            while (((1 << i) - 1) < m) ++i;
            const long long expect = size + (1LL << (i - 1)) * (i - 2);
            const long long got = required_pe_count(n, m);
            check(got == expect, cat("pe count at n=", n, " m=", m, ": got ", got, " expected ",
                                     expect, " (bracket ", i, ")"));
            if (i == prev_bracket)
                check(got == prev, cat("pe count not constant inside bracket ", i, " at n=", n,
                                       " m=", m));
            prev = got;
            prev_bracket = i;
        }
    }
    detail.push_back("counts follow N + 2^(i-1)(i-2) and stay constant inside each "
                     "2^(i-1) <= m < 2^i bracket, n=2..8");
}

// ---------------------------------------------------------------- check 5

void crit_gates(std::vector<std::string>& detail) {
    auto clamp_sym = [](long long v, int q) {
        const long long maxv = (1LL << (q - 1)) - 1;
        return static_cast<int>(std::max(-maxv, std::min(maxv, v)));
    };
    auto sign_min = [](int a, int b) {
        const int mag = std::min(std::abs(a), std::abs(b));
        return (a < 0) == (b < 0) ? mag : -mag;
    };

    long long compared = 0;

    // Combined bit cell against its documented truth table (x, y, z) ->
    // (sum, carry, diff, borrow) with z driving both chain inputs.
    const std::uint8_t rows[8][7] = {
        {0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 1, 1}, {0, 1, 0, 1, 0, 1, 1},
        {0, 1, 1, 0, 1, 0, 1}, {1, 0, 0, 1, 0, 1, 0}, {1, 0, 1, 0, 1, 0, 0},
        {1, 1, 0, 0, 1, 0, 0}, {1, 1, 1, 1, 1, 1, 1},
    };
    for (const auto& r : rows) {
        const BitCellOut o = addsub_cell_probe(r[0], r[1], r[2]);
        check(o.sum == r[3] && o.carry_out == r[4] && o.diff == r[5] && o.borrow_out == r[6],
              cat("bit cell row (", int(r[0]), ",", int(r[1]), ",", int(r[2]), ")"));
        ++compared;
    }

    // Independent chain inputs behave as classical adder / subtractor cells.
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            for (int cin = 0; cin <= 1; ++cin)
                for (int bin = 0; bin <= 1; ++bin) {
                    const BitCellOut o = full_addsub_bit(
                        static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y),
                        static_cast<std::uint8_t>(cin), static_cast<std::uint8_t>(bin));
                    check(o.sum == ((x + y + cin) & 1) && o.carry_out == ((x + y + cin) >> 1) &&
                              o.diff == ((x - y - bin) & 1) &&
                              o.borrow_out == (x - y - bin < 0 ? 1 : 0),
                          "full adder/subtractor bit");
                    ++compared;
                }

    for (int q : {4, 6, 8}) {
        const int lim = 1 << (q - 1);
        for (int x = -lim; x < lim; ++x)
            for (int y = -lim; y < lim; ++y) {
                const WordAddSub ws = addsub_word(x, y, q);
                check(ws.sum == clamp_sym(static_cast<long long>(x) + y, q) &&
                          ws.diff == clamp_sym(static_cast<long long>(x) - y, q),
                      cat("ripple word q=", q, " x=", x, " y=", y));
                ++compared;
            }

        const int dlim = (1 << (q - 1)) - 1;
        for (int a = -dlim; a <= dlim; ++a)
            for (int b = -dlim; b <= dlim; ++b) {
                const Type1Out t1 = type1_pe(a, b, q);
                check(t1.sum == clamp_sym(b + a, q) && t1.diff == clamp_sym(b - a, q),
                      cat("candidate pair q=", q, " a=", a, " b=", b));
                check(type2_pe(a, b, q) == sign_min(a, b),
                      cat("sign-min q=", q, " a=", a, " b=", b));
                const MergedOut mg = merged_pe(a, b, q);
                check(mg.f == type2_pe(a, b, q) && mg.cand0 == t1.sum && mg.cand1 == t1.diff,
                      cat("merged unit q=", q, " a=", a, " b=", b));
                compared += 3;
            }
    }
    detail.push_back(cat("exhaustive over q=4,6,8: ", compared,
                         " gate-level outputs equal the arithmetic oracles"));
}

// ---------------------------------------------------------------- check 6

void crit_igc(std::vector<std::string>& detail) {
    check(xor_ops_closed_form(3) == 5, "simplified XOR count at n=3");

    long long emissions_checked = 0;
    for (int n = 2; n <= 8; ++n) {
        const long long size = 1LL << n;

        // Structural: simplified graph and streaming form agree with the
        // closed forms.
        const IgcFlowGraph g = simplify_graph(build_full_graph(n));
        const auto counts = g.counts();
        check(counts.xor_nodes == xor_ops_closed_form(n) &&
                  counts.xor_nodes == size * (n - 2) / 2 + 1,
              cat("simplified XOR count at n=", n));
        check(counts.consumed_outputs == consumed_outputs_closed_form(n) &&
                  counts.consumed_outputs == (size / 2) * (n - 1),
              cat("consumed operand count at n=", n));
        IgcPipeline pipe(n);
        const auto st = pipe.structure();
        check(st.xor_pass_elements == size / 2 - 1 &&
                  st.xor_pass_elements == xor_pass_elements_closed_form(n),
              cat("streaming element count at n=", n));

        // Behavioral: every emission appears the step its operand completes
        // and carries the exact feedback value for the decisions so far.
        SplitMix64 rng(0x160 + n);
        for (long long frame = 0; frame < kIgcFrames; ++frame) {
            pipe.reset();
            BitVector u(size);
            for (auto& b : u) b = static_cast<std::uint8_t>(rng.next() >> 63);
            BitVector prefix;
            long long emitted = 0;
            for (long long t = 0; t < size / 2; ++t) {
                prefix.push_back(u[2 * t]);
                prefix.push_back(u[2 * t + 1]);
                const auto ems = pipe.step(u[2 * t], u[2 * t + 1]);
                std::map<int, std::vector<const IgcEmission*>> by_stage;
                for (const auto& e : ems) by_stage[e.stage].push_back(&e);
                for (const auto& [stage, group] : by_stage) {
                    check(stage >= 1 && stage <= n - 1, cat("emission stage at n=", n));
                    const auto streams = partial_sum_oracle(prefix, stage, n);
                    for (const IgcEmission* e : group) {
                        check(e->element % 2 == 1, cat("even element emitted at n=", n));
                        check(e->stream >= 0 && e->stream < static_cast<int>(streams.size()),
                              cat("stream out of range at n=", n));
                        check(e->element == static_cast<int>(streams[e->stream].size()),
                              cat("operand early or late at n=", n, " stage ", stage, " element ",
                                  e->element));
                        check(e->value == streams[e->stream].back(),
                              cat("operand value wrong at n=", n, " stage ", stage, " element ",
                                  e->element));
                        ++emitted;
                        ++emissions_checked;
                    }
                }
            }
            check(emitted == consumed_outputs_closed_form(n),
                  cat("emission total at n=", n, ": ", emitted));
        }
    }
    detail.push_back(cat(emissions_checked, " streamed operands (n=2..8, ", kIgcFrames,
                         " random frames each) matched the feedback oracle at the exact "
                         "consumption step"));
}

// ---------------------------------------------------------------- check 7

void crit_cost_cells(std::vector<std::string>& detail) {
    // Every cell re-derived from independent integer expressions.
    for (int n = 3; n <= 6; ++n) {
        const long long size = 1LL << n;
        for (int q : {4, 6, 8}) {
            for (int m : {1, 3, 7}) {
                if (m > size - 1) continue;
                const std::string at = cat(" at n=", n, " m=", m, " q=", q);

                int i = 1;
                while (((1 << i) - 1) < m) ++i;
                const long long pes = size + (1LL << (i - 1)) * (i - 2);

                const CostEstimate d1 = estimate(Design::d1, n, m, q);
                check(d1.pe_count == size - 1 && d1.pe_xor == 9 * q && d1.pe_reg == 0 &&
                          d1.pe_mux == 6 * q,
                      "d1 PE cells" + at);
                check(d1.igc_count == 1 && d1.igc_count_printed == size - 1 &&
                          d1.igc_xor == size / 2 - 1 && d1.igc_ram == size / 2 - 2 &&
                          d1.igc_mux == size / 2 - 2,
                      "d1 feedback cells" + at);
                check(d1.other_reg == q * (3 * size - 4) && d1.other_mux == q * (2 * size - 3),
                      "d1 peripheral cells" + at);

                const CostEstimate d2 = estimate(Design::d2, n, m, q);
                check(d2.pe_count == pes && d2.igc_count == m && d2.igc_count_printed == m,
                      "d2 instance cells" + at);
                check(d2.other_reg == (2LL * m + 1) * q * (pes - i) + 2 * i &&
                          d2.other_mux == 6LL * q * pes,
                      "d2 peripheral cells" + at);

                const CostEstimate d3 = estimate(Design::d3, n, m, q);
                check(d3.pe_count == size / 2 && d3.igc_count == 1 &&
                          d3.other_reg == q * (3 * size / 2 + 2) && d3.other_mux == q * (size - 1),
                      "d3 cells" + at);

                const CostEstimate d4 = estimate(Design::d4, n, m, q);
                check(d4.pe_count == size / 2 && d4.igc_count == 2 &&
                          d4.other_reg == q * (9 * size / 2 + 4) && d4.other_mux == q * (size + 2),
                      "d4 cells" + at);

                const CostEstimate tree = estimate(Design::tree, n, m, q);
                check(tree.pe_count == size - 1 && tree.pe_xor == 11 * q - 3 && tree.pe_reg == 1 &&
                          tree.pe_mux == 5 * q && tree.igc_count == 0 &&
                          tree.igc_count_printed == -1 && tree.other_reg == q * (size - 1) &&
                          tree.other_mux == 0,
                      "tree cells" + at);

                const CostEstimate line = estimate(Design::line, n, m, q);
                check(line.pe_count == size / 2 && line.pe_xor == 11 * q - 3 &&
                          line.other_reg == q * (size - 1) &&
                          line.other_mux == 3LL * q * (size / 2 - 1),
                      "line cells" + at);

                const CostEstimate over = estimate(Design::overlapped, n, m, q);
                const double pov = static_cast<double>(size) +
                                   m * std::log2(static_cast<double>(m)) / 4.0;
                check(over.approximate && over.pe_count == std::llround(pov) &&
                          over.other_reg == std::llround(q * m * pov) &&
                          over.other_mux ==
                              std::llround(q * (2.0 * size +
                                                m * std::log2(static_cast<double>(m)) / 2.0)),
                      "overlapped cells" + at);

                // Totals recompose identically for every column.
                for (Design d : {Design::d1, Design::d2, Design::d3, Design::d4, Design::tree,
                                 Design::overlapped, Design::line}) {
                    const CostEstimate e = estimate(d, n, m, q);
                    check(e.total_xor_equiv == e.pe_count * (e.pe_xor + e.pe_mux) +
                                                   e.igc_count * (e.igc_xor + e.igc_mux) +
                                                   e.other_mux,
                          cat(design_name(d), " combined-gate total", at));
                    check(e.total_reg_bits ==
                              e.pe_count * e.pe_reg + e.igc_count * e.igc_ram + e.other_reg,
                          cat(design_name(d), " register total", at));
                }
            }
        }
    }

    // Anchor the reference operating point's totals.
    const long long want_xor[7] = {713, 1023, 407, 430, 651, 947, 426};
    const long long want_reg[7] = {122, 262, 86, 244, 49, 174, 46};
    const Design order[7] = {Design::d1, Design::d2,   Design::d3,         Design::d4,
                             Design::tree, Design::overlapped, Design::line};
    for (int c = 0; c < 7; ++c) {
        const CostEstimate e = estimate(order[c], 3, 3, 6);
        check(e.total_xor_equiv == want_xor[c] && e.total_reg_bits == want_reg[c],
              cat(design_name(order[c]), " reference totals: ", e.total_xor_equiv, "/",
                  e.total_reg_bits));
    }

    // Structural audit: measured inventory vs documented counts.
    const auto a1 = structural_audit(Design::d1, 3, 1);
    check(a1.size() == 7, "d1 audit row count");
    check(a1[0].item == "pe count" && a1[0].measured == 7 && a1[0].match, "d1 audit: pe count");
    check(a1[1].item == "pe mux words" && a1[1].measured == 13 && a1[1].match,
          "d1 audit: mux words");
    check(a1[2].item == "pe delay words" && a1[2].measured == 21 && a1[2].match,
          "d1 audit: delay words");
    check(a1[3].item == "igc instances" && a1[3].measured == 1 && a1[3].documented == 7 &&
              !a1[3].match && !a1[3].note.empty(),
          "d1 audit: shared feedback instance must be flagged");
    check(a1[4].item == "igc xor elements" && a1[4].measured == 3 && a1[4].match,
          "d1 audit: xor elements");
    check(a1[5].item == "igc demux elements" && a1[5].measured == 3 && a1[5].documented == 2 &&
              !a1[5].match && !a1[5].note.empty(),
          "d1 audit: demux off-by-one must be flagged");
    check(a1[6].item == "igc storage bits" && a1[6].measured == 2 && a1[6].match,
          "d1 audit: storage bits");

    const auto a3 = structural_audit(Design::d3, 3, 1);
    check(a3.size() == 8 && a3[0].measured == 4 && a3[0].match, "d3 audit: pe count");
    check(a3[7].item == "routing switches" && a3[7].measured == 3 && a3[7].documented == 9 &&
              !a3[7].match,
          "d3 audit: routing discrepancy must be flagged");

    const auto a4 = structural_audit(Design::d4, 3, 1);
    check(a4.size() == 7 && a4[0].measured == 4 && a4[0].match, "d4 audit: pe count");
    check(a4[3].item == "igc instances" && a4[3].measured == 2 && a4[3].match,
          "d4 audit: feedback instances");

    const auto a2 = structural_audit(Design::d2, 3, 3);
    check(a2[0].measured == 8 && a2[0].documented == 8 && a2[0].match, "d2 audit: pe count");
    check(a2[3].measured == 3 && a2[3].documented == 3, "d2 audit: feedback instances track m");

    const auto at = structural_audit(Design::tree, 3, 1);
    check(at.size() == 1 && at[0].measured == 7 && at[0].match, "tree audit: pe count");

    detail.push_back("all table cells re-derived from integer formulas (n=3..6, q=4/6/8, "
                     "m=1/3/7); audits match except the two documented discrepancies, "
                     "both flagged (feedback instances 1 vs N-1; demux N/2-1 vs N/2-2)");
}

// ---------------------------------------------------------------- check 8

void crit_ratio_scan(std::vector<std::string>& detail) {
    struct ClaimStat {
        std::string name;
        double claim = 0;
        double leading = 0;
        bool leading_matches = false;
        double lo = 1e300, hi = -1e300;
        double nearest = 0, nearest_gap = 1e300;
        bool any_within = false;
    };
    std::vector<ClaimStat> stats;
    int points = 0;
    for (int q = 4; q <= 8; ++q) {
        for (int n = 8; n <= 12; ++n) {
            const auto rows = ratio_report(n, 3, q);
            check(rows.size() == 3, "ratio report row count");
            if (stats.empty()) {
                for (const auto& r : rows) {
                    ClaimStat s;
                    s.name = r.name;
                    s.claim = r.claim_percent;
                    s.leading = r.leading_percent;
                    s.leading_matches = r.leading_matches_claim;
                    stats.push_back(s);
                }
            }
            for (std::size_t c = 0; c < rows.size(); ++c) {
                const auto& r = rows[c];
                auto& s = stats[c];
                check(r.name == s.name && r.claim_percent == s.claim,
                      "ratio claim changed across the scan");
                check(r.leading_matches_claim == s.leading_matches,
                      "leading-order verdict changed across the scan");
                s.lo = std::min(s.lo, r.computed_percent);
                s.hi = std::max(s.hi, r.computed_percent);
                const double gap = std::abs(r.computed_percent - r.claim_percent);
                if (gap < s.nearest_gap) {
                    s.nearest_gap = gap;
                    s.nearest = r.computed_percent;
                }
                if (gap <= kRatioWindowPp) s.any_within = true;
            }
            ++points;
        }
    }
    check(points == 25, "scan coverage");

    int leading_ok = 0;
    for (const auto& s : stats) {
        if (s.leading_matches) ++leading_ok;
        detail.push_back(cat(
            s.name, ": stated ", pct(s.claim), "%, leading-order ", pct(s.leading), "% (",
            s.leading_matches ? "agrees" : "differs", "); exact totals span ", pct(s.lo), "%..",
            pct(s.hi), "% over the scan, nearest ", pct(s.nearest), "% (gap ", pct(s.nearest_gap),
            "pp), ",
            s.any_within ? "inside" : "never inside", " the ", pct(kRatioWindowPp, 1),
            "pp window"));
    }
    detail.push_back(cat("verdict: leading-order coefficients reproduce ", leading_ok,
                         " of 3 stated percentages; exact totals at q=4..8, n=8..12 match none "
                         "within ", pct(kRatioWindowPp, 1),
                         "pp (the stated figures are asymptotic, not operating-point values)"));
}

// ---------------------------------------------------------------- check 9

void crit_degradation(std::vector<std::string>& detail) {
    const PolarCode code = PolarCode::bec_construction(6, 32); // N=64, K=32
    const std::vector<double> points = {2.0, 3.0, 4.0};
    const auto rows = run_ber(code, points,
                              {DecodeVariant::llr_exact, DecodeVariant::minsum,
                               DecodeVariant::minsum_quantized},
                              kDegradationFrames, kDegradationSeed);
    const std::size_t per_point = 4; // three decoders plus the uncoded row
    check(rows.size() == points.size() * per_point, "sweep row count");

    double worst_ratio = 0;
    for (std::size_t p = 0; p < points.size(); ++p) {
        const BerPoint* exact = nullptr;
        const BerPoint* msum = nullptr;
        const BerPoint* quant = nullptr;
        const BerPoint* uncoded = nullptr;
        for (std::size_t r = per_point * p; r < per_point * (p + 1); ++r) {
            check(rows[r].ebno_db == points[p], "row grouping by operating point");
            if (rows[r].decoder == variant_name(DecodeVariant::llr_exact)) exact = &rows[r];
            if (rows[r].decoder == variant_name(DecodeVariant::minsum)) msum = &rows[r];
            if (rows[r].decoder == variant_name(DecodeVariant::minsum_quantized)) quant = &rows[r];
            if (rows[r].decoder == "uncoded") uncoded = &rows[r];
        }
        check(exact && msum && quant && uncoded, "decoder rows present per point");
        check(exact->frame_errors > 0, cat("exact decoder has no frame errors at ", points[p],
                                           " dB; ratio undefined"));
        const double ratio = msum->fer / exact->fer;
        const double quant_ratio = quant->fer / exact->fer;
        worst_ratio = std::max({worst_ratio, ratio, quant_ratio});
        check(ratio <= kMinsumFerRatioBound,
              cat("min-sum/exact FER ratio ", pct(ratio, 4), " exceeds ",
                  pct(kMinsumFerRatioBound, 2), " at ", points[p], " dB"));
        check(quant_ratio <= kMinsumFerRatioBound,
              cat("quantized/exact FER ratio ", pct(quant_ratio, 4), " exceeds ",
                  pct(kMinsumFerRatioBound, 2), " at ", points[p], " dB"));
        detail.push_back(cat(pct(points[p], 1), " dB: exact FER ", exact->fer, ", min-sum ",
                             msum->fer, " (ratio ", pct(ratio, 3), "), quantized ", quant->fer,
                             " (ratio ", pct(quant_ratio, 3), ")"));
        if (points[p] >= 3.0) {
            check(exact->ber < uncoded->ber && msum->ber < uncoded->ber &&
                      quant->ber < uncoded->ber,
                  cat("coded BER not below uncoded at ", points[p], " dB"));
        }
    }
    detail.push_back(cat("worst FER ratio ", pct(worst_ratio, 3), " within the frozen bound ",
                         pct(kMinsumFerRatioBound, 2), " (", kDegradationFrames,
                         " frames, seed ", kDegradationSeed,
                         "); coded BER beats uncoded at 3 and 4 dB"));
}

// ---------------------------------------------------------------- check 10

void crit_utilization(std::vector<std::string>& detail) {
    // Tree flow: the widest rail is half the block, so the N-1 bank never
    // exceeds (N/2)/(N-1); the narrowest busy cycle runs one PE.
    for (int n = 3; n <= 6; ++n) {
        const int size = 1 << n;
        const PolarCode code = PolarCode::bec_construction(n, size / 2);
        ArchitectureConfig cfg;
        cfg.kind = ArchKind::tree_baseline;
        cfg.n = n;
        cfg.record_trace = true;
        const SimResult res = simulate(cfg, code, awgn_frames(code, 1, 0xA00 + n, 2.0));
        const UtilizationReport rep = utilization_report(res, 1, res.makespan, size);
        check(rep.max_active_pes == size / 2,
              cat("tree peak activity at n=", n, ": ", rep.max_active_pes));
        check(rep.max_fraction_of_block == Rational{1, 2},
              cat("tree peak block fraction at n=", n));
        check(rep.max_fraction_of_bank == Rational{size / 2, size - 1},
              cat("tree peak bank fraction at n=", n));
        check(rep.min_fraction_of_block == Rational{1, size},
              cat("tree minimum block fraction at n=", n));
    }
    detail.push_back("tree peak is N/2 active PEs: 1/2 of the block, (N/2)/(N-1) of the bank; "
                     "the leanest busy cycle runs 1 of N (n=3..6)");

    // Fully concurrent admission saturates the replicated bank.
    {
        const PolarCode code = PolarCode::bec_construction(3, 4);
        ArchitectureConfig cfg;
        cfg.kind = ArchKind::refined_concurrent;
        cfg.n = 3;
        cfg.m = 7;
        cfg.record_trace = true;
        const SimResult res = simulate(cfg, code, awgn_frames(code, 14, 0xB00, 2.0));
        check(res.pe_bank_size == 12, "saturated bank size");
        const UtilizationReport rep = utilization_report(res, 7, 7, 8);
        check(rep.max_active_pes == 12 && rep.min_active_pes == 12,
              cat("steady-state activity: ", rep.min_active_pes, "..", rep.max_active_pes));
        check(rep.max_fraction_of_bank == Rational{1, 1}, "steady-state bank fraction");
        check(rep.stage_fractions.size() == 7, "stage row count");
        for (const auto& sf : rep.stage_fractions)
            check(sf.second == Rational{1, 1}, cat("stage ", sf.first, " not saturated"));
        detail.push_back("fully concurrent admission (m=N-1) holds every replicated stage at "
                         "utilization 1/1 across the steady-state window");
    }

    // Partially concurrent admission: exact per-stage duty cycles.
    {
        const auto u = stage_utilization(concurrent_schedule(3, 3));
        const std::vector<std::pair<std::string, Rational>> want = {
            {"1", Rational{3, 7}}, {"2", Rational{6, 7}}, {"3", Rational{6, 7}},
            {"3'", Rational{6, 7}}};
        check(u == want, "m=3 stage duty cycles differ from 3/7 and 6/7");
        detail.push_back("m=3 schedule duty cycles are exactly 3/7 (first stage) and 6/7 "
                         "(deeper stages)");
    }
}

struct Criterion {
    int id;
    const char* name;
    void (*fn)(std::vector<std::string>&);
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "single-frame latencies match the closed forms", crit_latency},
        {2, "every architecture is bit-exact against the reference decoder", crit_equivalence},
        {3, "schedule tables reproduce the documented windows cell for cell", crit_tables},
        {4, "concurrent PE counts follow the bracket formula", crit_pe_brackets},
        {5, "gate-level units match the arithmetic oracles exhaustively", crit_gates},
        {6, "feedback generator streams exact operands at consumption time", crit_igc},
        {7, "cost table cells re-derive from integer formulas; audits flag the "
            "known discrepancies",
         crit_cost_cells},
        {8, "headline area ratios scanned and reported honestly", crit_ratio_scan},
        {9, "min-sum and quantized degradation stay inside the frozen bound", crit_degradation},
        {10, "utilization profiles match the exact rational duty cycles", crit_utilization},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::vector<std::string> detail;
        std::string reason;
        try {
            c.fn(detail);
        } catch (const Failure& f) {
            reason = f.reason;
        } catch (const std::exception& e) {
            reason = cat("unexpected exception: ", e.what());
        }
        std::ostringstream id;
        id << std::setw(2) << std::setfill('0') << c.id;
        if (reason.empty()) {
            std::cout << "[PASS] " << id.str() << " " << c.name << "\n";
        } else {
            std::cout << "[FAIL] " << id.str() << " " << c.name << ": " << reason << "\n";
            ++failures;
        }
        for (const auto& d : detail) std::cout << "         - " << d << "\n";
    }
    std::cout << "acceptance: " << (criteria.size() - failures) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
