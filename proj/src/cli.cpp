#include "polarsim/cli.hpp"

#include "polarsim/arch_sim.hpp"
#include "polarsim/channel.hpp"
#include "polarsim/codec.hpp"
#include "polarsim/cost_model.hpp"
#include "polarsim/igc.hpp"
#include "polarsim/reference_decoder.hpp"
#include "polarsim/scheduler.hpp"
#include "polarsim/util.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace polarsim {
namespace {

std::string bits_to_string(const BitVector& bits) {
    std::string s;
    s.reserve(bits.size());
    for (std::uint8_t b : bits) s.push_back(static_cast<char>('0' + (b & 1)));
    return s;
}

std::string sanitize_cell(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n') c = ';';
    return s;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << content;
    file.close();
    out << "wrote " << path << " (" << content.size() << " bytes)\n";
}

ChannelType parse_channel(const std::string& name) {
    if (name == "awgn") return ChannelType::awgn;
    if (name == "bsc") return ChannelType::bsc;
    if (name == "noiseless") return ChannelType::noiseless;
    throw std::invalid_argument("unknown channel: " + name);
}

struct CommonFlags {
    int n = 3;
    int k = -1; // -1: half rate
    std::string design = "d1";
    int m = 1;
    int l = 2;
    int q = 6;
    int f = 2;
    std::vector<double> ebno{2.0};
    long long frames = 1000;
    std::uint64_t seed = 1;
    std::string out_path;
    std::string channel = "awgn";
    double crossover = 0.05;
    int cycles = 0;
    long long max_codewords = 0;
    std::vector<std::string> decoders;
    std::vector<int> latency_ns;
};

PolarCode make_code(const CommonFlags& fl) {
    const int block = 1 << fl.n;
    const int k = fl.k < 0 ? block / 2 : fl.k;
    return PolarCode::bec_construction(fl.n, k);
}

int decode_cmd(const CommonFlags& fl, std::ostream& out) {
    Design design;
    if (!parse_design(fl.design, design)) throw std::invalid_argument("unknown design: " + fl.design);
    const ArchKind kind = design_arch(design);
    const PolarCode code = make_code(fl);
    const double rate = static_cast<double>(code.info_count) / code.block_length;

    ChannelConfig ccfg;
    ccfg.type = parse_channel(fl.channel);
    ccfg.ebno_db = fl.ebno.front();
    ccfg.crossover = fl.crossover;

    ArchitectureConfig acfg;
    acfg.kind = kind;
    acfg.n = fl.n;
    acfg.m = fl.m;
    acfg.quant = Quantization{fl.q, fl.f};
    acfg.record_trace = true;

    const int nframes = kind == ArchKind::two_parallel ? 2 : 1;
    SplitMix64 rng(mix_seed(fl.seed, 0));
    std::vector<BitVector> messages;
    std::vector<std::vector<double>> frames;
    for (int i = 0; i < nframes; ++i) {
        BitVector message(code.info_count);
        for (auto& b : message) b = static_cast<std::uint8_t>(rng.next() >> 63);
        const BitVector tx = encode(code, expand_message(code, message));
        frames.push_back(channel_llrs(tx, ccfg, rate, rng));
        messages.push_back(std::move(message));
    }

    const SimResult res = simulate(acfg, code, frames);
    std::ostringstream text;
    text << "design=" << design_name(design) << "\n";
    text << "n=" << fl.n << "\nblock=" << code.block_length << "\nk=" << code.info_count << "\n";
    if (kind == ArchKind::refined_concurrent) text << "m=" << fl.m << "\n";
    text << "q=" << fl.q << "\nf=" << fl.f << "\nseed=" << fl.seed << "\n";
    text << "channel=" << fl.channel << "\n";
    if (ccfg.type == ChannelType::awgn) text << "ebno_db=" << fl.ebno.front() << "\n";
    if (ccfg.type == ChannelType::bsc) text << "crossover=" << fl.crossover << "\n";
    for (int i = 0; i < nframes; ++i) {
        const DecodeResult ref = decode(code, frames[i], DecodeVariant::minsum_quantized, acfg.quant);
        require(ref.u_hat == res.decoded[i], "decode: architecture disagrees with reference");
        const BitVector got = extract_message(code, res.decoded[i]);
        text << "frame" << i + 1 << ".message=" << bits_to_string(messages[i]) << "\n";
        text << "frame" << i + 1 << ".u_hat=" << bits_to_string(res.decoded[i]) << "\n";
        text << "frame" << i + 1 << ".decoded=" << bits_to_string(got) << "\n";
        text << "frame" << i + 1 << ".message_ok=" << (got == messages[i] ? 1 : 0) << "\n";
        text << "frame" << i + 1 << ".matches_reference=1\n";
    }
    text << "latency_cycles=" << res.latency_cycles << "\n";
    text << "makespan=" << res.makespan << "\n";
    text << "pe_bank_size=" << res.pe_bank_size << "\n";
    text << "igc_instances=" << res.igc_instances << "\n";
    int peak = 0;
    long long ops = 0;
    for (int a : res.active_pe_per_cycle) peak = std::max(peak, a);
    for (const TraceEvent& e : res.trace) ops += e.pe_ops;
    text << "peak_active_pes=" << peak << "\n";
    text << "total_pe_ops=" << ops << "\n";
    text << "stage_busy=";
    for (std::size_t i = 0; i < res.stage_labels.size(); ++i) {
        if (i) text << ";";
        text << res.stage_labels[i] << ":" << res.stage_busy[i];
    }
    text << "\n";
    emit(fl.out_path, text.str(), out);
    return 0;
}

std::string folded_demand_csv(int n) {
    const PeBankSchedule sched = folded_schedule(n);
    const std::vector<std::vector<int>> demand = pe_demand_by_cycle(sched);
    std::string csv = "frame";
    for (int c = 1; c <= sched.makespan; ++c) csv += "," + std::to_string(c);
    csv += "\nC1";
    for (int c = 1; c <= sched.makespan; ++c) csv += "," + std::to_string(demand[0][c - 1]);
    csv += "\n";
    return csv;
}

int schedule_cmd(const CommonFlags& fl, std::ostream& out) {
    std::string csv;
    if (fl.design == "tree") {
        csv = chart_csv(conventional_chart(fl.n));
    } else if (fl.design == "d1") {
        csv = chart_csv(lookahead_chart(fl.n));
    } else if (fl.design == "d2") {
        const Schedule sched = concurrent_schedule(fl.n, fl.m);
        const int cycles = fl.cycles > 0 ? fl.cycles : (1 << fl.n);
        csv = schedule_csv(sched, cycles, static_cast<int>(fl.max_codewords));
    } else if (fl.design == "d3") {
        csv = folded_demand_csv(fl.n);
    } else if (fl.design == "d4") {
        csv = two_parallel_demand_csv(fl.n);
    } else {
        throw std::invalid_argument("no schedule view for design: " + fl.design);
    }
    emit(fl.out_path, csv, out);
    return 0;
}

BerPoint arch_ber_point(const PolarCode& code, const ArchitectureConfig& acfg,
                        const std::string& name, double ebno_db, long long frames,
                        std::uint64_t seed, std::uint64_t salt) {
    ChannelConfig ccfg;
    ccfg.type = ChannelType::awgn;
    ccfg.ebno_db = ebno_db;
    const double rate = static_cast<double>(code.info_count) / code.block_length;
    SplitMix64 rng(mix_seed(seed, salt));

    std::vector<BitVector> messages;
    std::vector<std::vector<double>> llrs;
    for (long long f = 0; f < frames; ++f) {
        BitVector message(code.info_count);
        for (auto& b : message) b = static_cast<std::uint8_t>(rng.next() >> 63);
        const BitVector tx = encode(code, expand_message(code, message));
        llrs.push_back(channel_llrs(tx, ccfg, rate, rng));
        messages.push_back(std::move(message));
    }
    const SimResult res = simulate(acfg, code, llrs);

    BerPoint row;
    row.ebno_db = ebno_db;
    row.decoder = name;
    row.frames = frames;
    for (long long f = 0; f < frames; ++f) {
        const BitVector got = extract_message(code, res.decoded[f]);
        int errs = 0;
        for (int i = 0; i < code.info_count; ++i) errs += got[i] != messages[f][i];
        row.bit_errors += errs;
        row.frame_errors += errs > 0;
    }
    row.ber = static_cast<double>(row.bit_errors) /
              static_cast<double>(frames * std::max(1, code.info_count));
    row.fer = static_cast<double>(row.frame_errors) / static_cast<double>(frames);
    return row;
}

int ber_cmd(const CommonFlags& fl, bool design_given, std::ostream& out) {
    const PolarCode code = make_code(fl);
    const Quantization quant{fl.q, fl.f};

    std::vector<DecodeVariant> variants;
    if (fl.decoders.empty()) {
        variants = {DecodeVariant::llr_exact, DecodeVariant::minsum, DecodeVariant::minsum_quantized};
    } else {
        for (const std::string& name : fl.decoders) {
            DecodeVariant v;
            if (!parse_variant(name, v)) throw std::invalid_argument("unknown decoder: " + name);
            variants.push_back(v);
        }
    }

    std::vector<BerPoint> points = run_ber(code, fl.ebno, variants, fl.frames, fl.seed, quant);

    if (design_given) {
        Design design;
        if (!parse_design(fl.design, design))
            throw std::invalid_argument("unknown design: " + fl.design);
        ArchitectureConfig acfg;
        acfg.kind = design_arch(design);
        acfg.n = fl.n;
        acfg.m = fl.m;
        acfg.quant = quant;
        const std::size_t group = variants.size() + 1;
        std::vector<BerPoint> merged;
        for (std::size_t pi = 0; pi < fl.ebno.size(); ++pi) {
            for (std::size_t r = 0; r < group; ++r) merged.push_back(points[pi * group + r]);
            merged.push_back(arch_ber_point(code, acfg, design_name(design), fl.ebno[pi],
                                            fl.frames, fl.seed, pi));
        }
        points.swap(merged);
    }
    emit(fl.out_path, ber_csv(points), out);
    return 0;
}

int latency_cmd(const CommonFlags& fl, std::ostream& out) {
    std::vector<int> ns = fl.latency_ns;
    if (ns.empty())
        for (int n = 1; n <= 10; ++n) ns.push_back(n);
    std::string csv = latency_csv(latency_table(ns));
    if (fl.l > 1) {
        csv += "\nl,extra_cycles\n";
        csv += std::to_string(fl.l) + "," + std::to_string(parallel_overhead(fl.l)) + "\n";
    }
    emit(fl.out_path, csv, out);
    return 0;
}

int cost_cmd(const CommonFlags& fl, std::ostream& out) {
    std::string csv = cost_table_csv(fl.n, fl.m, fl.q);
    csv += "\nratio,claim_percent,leading_percent,leading_matches,computed_percent,note\n";
    char line[256];
    for (const RatioRow& r : ratio_report(fl.n, fl.m, fl.q)) {
        std::snprintf(line, sizeof(line), "%s,%.2f,%.4f,%d,%.4f,%s\n", sanitize_cell(r.name).c_str(),
                      r.claim_percent, r.leading_percent, r.leading_matches_claim ? 1 : 0,
                      r.computed_percent, sanitize_cell(r.note).c_str());
        csv += line;
    }
    emit(fl.out_path, csv, out);
    return 0;
}

int audit_cmd(const CommonFlags& fl, std::ostream& out) {
    Design design;
    if (!parse_design(fl.design, design)) throw std::invalid_argument("unknown design: " + fl.design);
    std::string csv = "item,measured,documented,match,note\n";
    for (const AuditRow& r : structural_audit(design, fl.n, fl.m)) {
        csv += sanitize_cell(r.item) + "," + std::to_string(r.measured) + ",";
        if (r.documented >= 0) csv += std::to_string(r.documented);
        csv += ",";
        csv += r.match ? "1" : "0";
        csv += "," + sanitize_cell(r.note) + "\n";
    }
    emit(fl.out_path, csv, out);
    return 0;
}

// ---- selftest ---------------------------------------------------------

BitVector random_bits(SplitMix64& rng, int count) {
    BitVector bits(count);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next() >> 63);
    return bits;
}

void check_transform_involution() {
    SplitMix64 rng(11);
    for (int n = 1; n <= 6; ++n)
        for (int t = 0; t < 25; ++t) {
            const BitVector u = random_bits(rng, 1 << n);
            require(polar_transform(polar_transform(u)) == u, "transform is not an involution");
        }
}

void check_generator_matrix() {
    SplitMix64 rng(12);
    for (int n = 1; n <= 4; ++n) {
        const Gf2Matrix g = generator_matrix(n);
        const int size = 1 << n;
        for (int t = 0; t < 25; ++t) {
            const BitVector u = random_bits(rng, size);
            BitVector x(size, 0);
            for (int c = 0; c < size; ++c) {
                std::uint8_t acc = 0;
                for (int r = 0; r < size; ++r) acc ^= static_cast<std::uint8_t>(u[r] & g.at(r, c));
                x[c] = acc;
            }
            require(polar_transform(u) == x, "transform disagrees with the dense matrix");
        }
    }
}

void check_noiseless_roundtrip() {
    SplitMix64 rng(13);
    ChannelConfig cfg;
    cfg.type = ChannelType::noiseless;
    for (int n = 2; n <= 5; ++n) {
        const PolarCode code = PolarCode::bec_construction(n, (1 << n) / 2);
        for (int t = 0; t < 10; ++t) {
            const BitVector message = random_bits(rng, code.info_count);
            const BitVector tx = encode(code, expand_message(code, message));
            const std::vector<double> llrs = channel_llrs(tx, cfg, 1.0, rng);
            for (DecodeVariant v : {DecodeVariant::lr, DecodeVariant::llr_exact,
                                    DecodeVariant::minsum, DecodeVariant::minsum_quantized}) {
                require(decode(code, llrs, v).message == message,
                        "noiseless decode failed to recover the message");
            }
        }
    }
}

void check_adder_cell_table() {
    static const std::uint8_t rows[8][7] = {
        {0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 1, 1}, {0, 1, 0, 1, 0, 1, 1},
        {0, 1, 1, 0, 1, 0, 1}, {1, 0, 0, 1, 0, 1, 0}, {1, 0, 1, 0, 1, 0, 0},
        {1, 1, 0, 0, 1, 0, 0}, {1, 1, 1, 1, 1, 1, 1},
    };
    for (const auto& r : rows) {
        const BitCellOut o = addsub_cell_probe(r[0], r[1], r[2]);
        require(o.sum == r[3] && o.carry_out == r[4] && o.diff == r[5] && o.borrow_out == r[6],
                "bit cell disagrees with its truth table");
    }
}

void check_addsub_exhaustive() {
    const int q = 4;
    const int lim = 1 << (q - 1);
    const int maxv = lim - 1;
    for (int x = -lim; x < lim; ++x)
        for (int y = -lim; y < lim; ++y) {
            const WordAddSub ws = addsub_word(x, y, q);
            const auto clampv = [&](int v) { return std::max(-maxv, std::min(maxv, v)); };
            require(ws.sum == clampv(x + y) && ws.diff == clampv(x - y),
                    "ripple add/sub disagrees with the saturating oracle");
        }
}

void check_igc_stream() {
    SplitMix64 rng(14);
    for (int n : {3, 4}) {
        const int size = 1 << n;
        for (int t = 0; t < 20; ++t) {
            const BitVector u = random_bits(rng, size);
            IgcPipeline pipe(n);
            BitVector prefix;
            for (int i = 0; i < size; i += 2) {
                prefix.push_back(u[i]);
                prefix.push_back(u[i + 1]);
                for (const IgcEmission& e : pipe.step(u[i], u[i + 1])) {
                    const auto streams = partial_sum_oracle(prefix, e.stage, n);
                    require(e.stream < static_cast<int>(streams.size()) &&
                                e.element <= static_cast<int>(streams[e.stream].size()),
                            "feedback emission out of oracle range");
                    require(e.value == streams[e.stream][e.element - 1],
                            "feedback emission value disagrees with the oracle");
                }
            }
        }
    }
}

void check_latency_forms() {
    const std::vector<LatencyRow> rows = latency_table({1, 2, 3, 4, 5});
    const LatencyRow& r3 = rows[2];
    require(r3.tree == 14 && r3.d1 == 7 && r3.d2 == 7 && r3.d3 == 7 && r3.d4 == 8,
            "n=3 latency row mismatch");
}

void check_arch_equivalence() {
    SplitMix64 rng(15);
    const PolarCode code = PolarCode::bec_construction(3, 4);
    ChannelConfig ccfg;
    ccfg.type = ChannelType::awgn;
    ccfg.ebno_db = 2.0;
    const Quantization quant{};
    std::vector<std::vector<double>> frames;
    std::vector<BitVector> expected;
    for (int t = 0; t < 20; ++t) {
        const BitVector message = random_bits(rng, code.info_count);
        const BitVector tx = encode(code, expand_message(code, message));
        frames.push_back(channel_llrs(tx, ccfg, 0.5, rng));
        expected.push_back(decode(code, frames.back(), DecodeVariant::minsum_quantized, quant).u_hat);
    }
    for (ArchKind kind : {ArchKind::tree_baseline, ArchKind::lookahead_pipelined,
                          ArchKind::refined_concurrent, ArchKind::folded, ArchKind::two_parallel}) {
        ArchitectureConfig acfg;
        acfg.kind = kind;
        acfg.n = 3;
        acfg.m = 3;
        acfg.quant = quant;
        const SimResult res = simulate(acfg, code, frames);
        require(res.decoded == expected, "architecture decode disagrees with the reference");
    }
}

void check_chart_structure() {
    for (int n = 1; n <= 6; ++n) {
        const TimeChart conv = conventional_chart(n);
        const TimeChart look = lookahead_chart(n);
        const int size = 1 << n;
        require(static_cast<int>(conv.activations.size()) == 2 * (size - 1),
                "conventional chart length mismatch");
        require(static_cast<int>(look.activations.size()) == size - 1,
                "look-ahead chart length mismatch");
        for (int i = 0; i < size - 1; ++i)
            require(look.activations[i].stage == conv.activations[i].stage,
                    "look-ahead chart is not the first half of the conventional one");
    }
}

void check_igc_forms() {
    for (int n = 2; n <= 6; ++n) {
        const auto counts = simplify_graph(build_full_graph(n)).counts();
        require(counts.xor_nodes == xor_ops_closed_form(n),
                "simplified XOR count disagrees with the closed form");
        require(counts.consumed_outputs == consumed_outputs_closed_form(n),
                "consumed output count disagrees with the closed form");
        const IgcPipeline pipe(n);
        require(pipe.structure().xor_pass_elements == xor_pass_elements_closed_form(n),
                "streaming element count disagrees with the closed form");
    }
}

void check_stage_utilization() {
    const Schedule sched = concurrent_schedule(3, 3);
    const auto rows = stage_utilization(sched);
    require(rows.size() == 4, "unexpected physical stage count");
    require(rows[0].second == Rational{3, 7}, "stage 1 utilization mismatch");
    for (std::size_t i = 1; i < rows.size(); ++i)
        require(rows[i].second == Rational{6, 7}, "replicated stage utilization mismatch");
}

int selftest_cmd(std::ostream& out) {
    struct Check {
        const char* name;
        std::function<void()> fn;
    };
    const std::vector<Check> checks = {
        {"transform_involution", check_transform_involution},
        {"generator_matrix", check_generator_matrix},
        {"noiseless_roundtrip", check_noiseless_roundtrip},
        {"adder_cell_table", check_adder_cell_table},
        {"addsub_exhaustive", check_addsub_exhaustive},
        {"igc_stream_oracle", check_igc_stream},
        {"latency_closed_forms", check_latency_forms},
        {"arch_reference_equivalence", check_arch_equivalence},
        {"chart_structure", check_chart_structure},
        {"igc_closed_forms", check_igc_forms},
        {"stage_utilization", check_stage_utilization},
    };
    for (const Check& c : checks) {
        try {
            c.fn();
        } catch (const std::exception& e) {
            out << "FAIL " << c.name << ": " << e.what() << "\n";
            return 1;
        }
        out << "ok " << c.name << "\n";
    }
    out << "selftest: " << checks.size() << "/" << checks.size() << " checks passed\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"polar decoding architecture toolkit"};
    app.require_subcommand(1);

    CommonFlags fl;
    bool ber_design_given = false;

    const std::vector<std::string> design_names = {"d1", "d2", "d3", "d4", "tree"};
    const std::vector<std::string> audit_names = {"d1", "d2", "d3", "d4", "tree", "overlapped", "line"};
    const std::vector<std::string> channel_names = {"awgn", "bsc", "noiseless"};

    CLI::App* decode = app.add_subcommand("decode", "decode one frame and print a trace summary");
    decode->add_option("--n", fl.n, "log2 of the block length")->check(CLI::Range(1, 16));
    decode->add_option("--k", fl.k, "information bits (default: half rate)");
    decode->add_option("--design", fl.design, "architecture")->check(CLI::IsMember(design_names));
    decode->add_option("--m", fl.m, "concurrent codewords (d2)")->check(CLI::PositiveNumber);
    decode->add_option("--q", fl.q, "word width in bits")->check(CLI::Range(2, 16));
    decode->add_option("--f", fl.f, "fraction bits")->check(CLI::Range(0, 15));
    decode->add_option("--seed", fl.seed, "random seed");
    decode->add_option("--channel", fl.channel, "channel model")->check(CLI::IsMember(channel_names));
    decode->add_option("--ebno", fl.ebno, "Eb/N0 in dB (awgn)");
    decode->add_option("--p", fl.crossover, "crossover probability (bsc)");
    decode->add_option("--out", fl.out_path, "write output to this path");

    CLI::App* schedule = app.add_subcommand("schedule", "dump a time chart or schedule as CSV");
    schedule->add_option("--n", fl.n, "log2 of the block length")->check(CLI::Range(1, 16));
    schedule->add_option("--design", fl.design, "architecture")->check(CLI::IsMember(design_names));
    schedule->add_option("--m", fl.m, "concurrent codewords (d2)")->check(CLI::PositiveNumber);
    schedule->add_option("--cycles", fl.cycles, "columns to print (d2, default N)")
        ->check(CLI::PositiveNumber);
    schedule->add_option("--frames", fl.max_codewords, "admit at most this many codewords (d2, 0 = all)");
    schedule->add_option("--out", fl.out_path, "write output to this path");

    CLI::App* ber = app.add_subcommand("ber", "Monte-Carlo error-rate sweep over Eb/N0");
    ber->add_option("--n", fl.n, "log2 of the block length")->check(CLI::Range(1, 16));
    ber->add_option("--k", fl.k, "information bits (default: half rate)");
    ber->add_option("--ebno", fl.ebno, "Eb/N0 points in dB");
    ber->add_option("--frames", fl.frames, "frames per point")->check(CLI::PositiveNumber);
    ber->add_option("--seed", fl.seed, "random seed");
    ber->add_option("--q", fl.q, "word width in bits")->check(CLI::Range(2, 16));
    ber->add_option("--f", fl.f, "fraction bits")->check(CLI::Range(0, 15));
    ber->add_option("--decoder", fl.decoders, "reference decoders to run")
        ->check(CLI::IsMember({"lr", "llr_exact", "minsum", "minsum_quantized"}));
    ber->add_option("--design", fl.design, "also run this architecture")
        ->check(CLI::IsMember(design_names));
    ber->add_option("--m", fl.m, "concurrent codewords (d2)")->check(CLI::PositiveNumber);
    ber->add_option("--out", fl.out_path, "write output to this path");

    CLI::App* latency = app.add_subcommand("latency", "decoding latency per architecture");
    latency->add_option("--n", fl.latency_ns, "block-length exponents (default 1..10)");
    latency->add_option("--l", fl.l, "also report the l-codeword batch overhead")
        ->check(CLI::PositiveNumber);
    latency->add_option("--out", fl.out_path, "write output to this path");

    CLI::App* cost = app.add_subcommand("cost", "hardware cost table and area ratios");
    cost->add_option("--n", fl.n, "log2 of the block length")->check(CLI::Range(2, 20));
    cost->add_option("--m", fl.m, "concurrent codewords (d2)")->check(CLI::PositiveNumber);
    cost->add_option("--q", fl.q, "word width in bits")->check(CLI::Range(2, 16));
    cost->add_option("--out", fl.out_path, "write output to this path");

    CLI::App* audit = app.add_subcommand("audit", "measured vs documented component counts");
    audit->add_option("--design", fl.design, "design column")->check(CLI::IsMember(audit_names));
    audit->add_option("--n", fl.n, "log2 of the block length")->check(CLI::Range(2, 16));
    audit->add_option("--m", fl.m, "concurrent codewords (d2)")->check(CLI::PositiveNumber);
    audit->add_option("--out", fl.out_path, "write output to this path");

    app.add_subcommand("selftest", "run the built-in oracle equivalence checks");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const std::string name = e.get_name();
        if (name == "CallForHelp" || name == "CallForAllHelp" || name == "CallForVersion")
            return app.exit(e, out, err);
        app.exit(e, out, err);
        return 2;
    }

    ber_design_given = ber->count("--design") > 0;

    try {
        if (decode->parsed()) return decode_cmd(fl, out);
        if (schedule->parsed()) {
            if (schedule->count("--design") == 0) fl.design = "d2";
            return schedule_cmd(fl, out);
        }
        if (ber->parsed()) return ber_cmd(fl, ber_design_given, out);
        if (latency->parsed()) return latency_cmd(fl, out);
        if (cost->parsed()) return cost_cmd(fl, out);
        if (audit->parsed()) return audit_cmd(fl, out);
        return selftest_cmd(out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace polarsim
