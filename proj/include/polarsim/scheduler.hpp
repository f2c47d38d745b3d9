#pragma once

#include "polarsim/util.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polarsim {

// Activation kinds: type_2 combines fresh inputs, type_1 reuses them with a
// decided feedback bit, merged does both in one pass.
enum class PeKind { type_2, type_1, merged };

struct StageActivation {
    int stage = 0;
    PeKind kind = PeKind::type_2;
};

// One activation per cycle; index c-1 holds cycle c.
struct TimeChart {
    int n = 0;
    std::vector<StageActivation> activations;
};

TimeChart conventional_chart(int n); // length 2(N-1)
TimeChart lookahead_chart(int n);    // length N-1

// Stage sequence of the look-ahead flow by position 1..N-1.
std::vector<int> position_stage_sequence(int n);

struct PhysicalStage {
    int stage = 0;
    int copy = 0;
    std::string label; // "3", "3'", "3''", ...
};

// Concurrent schedule: m codewords share one look-ahead pipeline whose later
// stages are replicated just enough to avoid collisions.
struct Schedule {
    int n = 0;
    int m = 1;
    int bracket = 0; // smallest i with m <= 2^i - 1
    int period = 0;  // N-1
    std::vector<PhysicalStage> stages;  // first-use order
    std::vector<int> position_to_stage; // position p -> index into stages, [p-1]

    long long admission_cycle(int k) const; // codeword k >= 1 -> cycle >= 1
};

Schedule concurrent_schedule(int n, int m);

// Processing elements needed for m concurrent codewords at block size 2^n.
int required_pe_count(int n, int m);

// Steady-state busy fraction of each physical stage, first-use order.
std::vector<std::pair<std::string, Rational>> stage_utilization(const Schedule& sched);

// Extra latency of an l-codeword batch on a fully parallel bank.
long long parallel_overhead(int l);

// Shared-bank schedules: each frame's position p runs in one cycle.
struct PeBankSchedule {
    int n = 0;
    int frames = 0;
    int bank_size = 0;
    int makespan = 0;
    std::vector<std::vector<int>> cycle_of_position; // [frame][p-1] -> cycle
};

PeBankSchedule folded_schedule(int n);       // one frame, bank N/2
PeBankSchedule two_parallel_schedule(int n); // two frames, bank N/2

// PE operations demanded per cycle, one row per frame.
std::vector<std::vector<int>> pe_demand_by_cycle(const PeBankSchedule& sched);

std::string chart_csv(const TimeChart& chart);
std::string schedule_csv(const Schedule& sched, int cycles, int max_codewords = 0);
std::string two_parallel_demand_csv(int n);

} // namespace polarsim
