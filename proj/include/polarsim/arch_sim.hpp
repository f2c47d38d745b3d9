#pragma once

#include "polarsim/codec.hpp"
#include "polarsim/gate_pe.hpp"
#include "polarsim/igc.hpp"
#include "polarsim/scheduler.hpp"
#include "polarsim/util.hpp"

#include <string>
#include <vector>

namespace polarsim {

enum class ArchKind {
    tree_baseline,        // full tree, one activation per cycle, two passes
    lookahead_pipelined,  // merged PEs, one codeword in flight
    refined_concurrent,   // merged PEs, m codewords share replicated stages
    folded,               // merged PEs time-shared on a half-width bank
    two_parallel,         // two codewords on a half-width bank
};

struct ArchitectureConfig {
    ArchKind kind = ArchKind::tree_baseline;
    int n = 3;
    int m = 1; // refined_concurrent only
    Quantization quant{};
    bool record_trace = false;
    bool record_selects = false;
};

struct TraceEvent {
    long long cycle = 0;
    int codeword = 0; // 1-based
    int position = 0; // 1..N-1 for the merged flows, 0 for the tree
    int stage = 0;
    int row = 0; // physical stage row
    PeKind kind = PeKind::merged;
    int pe_ops = 0;
};

struct SelectEvent {
    long long cycle = 0;
    int codeword = 0;
    int stage = 0;   // stage whose candidate pair was resolved
    int stream = 0;  // PE index within the stage
    int element = 0; // 1-based element written
    std::uint8_t value = 0;
};

struct SimResult {
    std::vector<BitVector> decoded; // composite estimate per frame
    long long latency_cycles = 0;   // single-frame convention of the flow
    long long makespan = 0;         // last busy cycle of the whole run
    int pe_bank_size = 0;
    int igc_instances = 0;
    std::vector<int> active_pe_per_cycle; // [cycle-1]
    std::vector<std::string> stage_labels;
    std::vector<long long> stage_busy; // busy cycles per row over the run
    std::vector<TraceEvent> trace;
    std::vector<SelectEvent> selects;
};

SimResult simulate(const ArchitectureConfig& cfg, const PolarCode& code,
                   const std::vector<std::vector<double>>& frames);

long long nominal_latency(ArchKind kind, int n);

struct UtilizationReport {
    int max_active_pes = 0;
    int min_active_pes = 0; // over busy cycles
    Rational max_fraction_of_block{0, 1};
    Rational min_fraction_of_block{0, 1};
    Rational max_fraction_of_bank{0, 1};
    std::vector<std::pair<std::string, Rational>> stage_fractions;
};

// Busy statistics over [window_start, window_start + window_len); stage rows
// need a recorded trace.
UtilizationReport utilization_report(const SimResult& result, long long window_start,
                                     long long window_len, int block_length);

// Measured component counts of one decoder instance.
struct StructuralInventory {
    ArchKind kind = ArchKind::lookahead_pipelined;
    int n = 0;
    int m = 1;
    int pe_count = 0;
    int select_mux_words = 0;
    int out_mux_words = 0;
    int delay_words = 0;
    int igc_instances = 0;
    int routing_switches = 0; // folded bank only
    IgcPipeline::Structure igc;
};

StructuralInventory build_inventory(const ArchitectureConfig& cfg);

} // namespace polarsim
