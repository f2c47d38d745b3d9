#include "polarsim/scheduler.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace polarsim {

namespace {

const char* kind_name(PeKind k) {
    switch (k) {
        case PeKind::type_2: return "II";
        case PeKind::type_1: return "I";
        case PeKind::merged: return "II+I";
    }
    return "";
}

} // namespace

TimeChart conventional_chart(int n) {
    require(n >= 1 && n <= 20, "conventional_chart: n out of range");
    std::vector<StageActivation> tc;
    for (int i = n; i >= 1; --i) {
        std::vector<StageActivation> next;
        next.push_back({i, PeKind::type_1});
        next.insert(next.end(), tc.begin(), tc.end());
        const std::vector<StageActivation> half = next;
        next.insert(next.end(), half.begin(), half.end());
        next[0].kind = PeKind::type_2;
        tc = std::move(next);
    }
    return {n, std::move(tc)};
}

TimeChart lookahead_chart(int n) {
    require(n >= 1 && n <= 20, "lookahead_chart: n out of range");
    std::vector<StageActivation> tc;
    for (int i = n; i >= 1; --i) {
        std::vector<StageActivation> next;
        next.push_back({i, PeKind::merged});
        next.insert(next.end(), tc.begin(), tc.end());
        if (i > 1) {
            const std::vector<StageActivation> half = next;
            next.insert(next.end(), half.begin(), half.end());
        }
        tc = std::move(next);
    }
    return {n, std::move(tc)};
}

std::vector<int> position_stage_sequence(int n) {
    const TimeChart chart = lookahead_chart(n);
    std::vector<int> stages(chart.activations.size());
    for (std::size_t i = 0; i < stages.size(); ++i) stages[i] = chart.activations[i].stage;
    return stages;
}

long long Schedule::admission_cycle(int k) const {
    require(k >= 1, "admission_cycle: codeword index must be positive");
    const long long burst = (k - 1) / m;  // zero-based burst of m codewords
    const long long within = (k - 1) % m; // slot inside the burst
    return burst * period + within + 1;
}

Schedule concurrent_schedule(int n, int m) {
    require(n >= 1 && n <= 20, "concurrent_schedule: n out of range");
    const int size = 1 << n;
    require(m >= 1 && m <= size - 1, "concurrent_schedule: m out of range");

    Schedule sched;
    sched.n = n;
    sched.m = m;
    sched.bracket = std::bit_width(static_cast<unsigned>(m));
    sched.period = size - 1;
    sched.position_to_stage.assign(size - 1, -1);

    // Instance path bits pick first/second use at each enclosing stage; the
    // offsets (2^(n-k) - 1) place every instance at a distinct position.
    std::map<std::pair<int, int>, int> row_of; // (stage, copy) -> row index
    std::vector<std::pair<int, int>> first_use(size - 1);
    for (int s = 1; s <= n; ++s) {
        const int instances = 1 << (s - 1);
        const int copies = 1 << std::max(0, s - 1 - (n - sched.bracket));
        for (int w = 0; w < instances; ++w) {
            int pos = s;
            for (int k = 1; k <= s - 1; ++k) {
                const int bit = (w >> (s - 1 - k)) & 1;
                pos += bit * ((1 << (n - k)) - 1);
            }
            require(pos >= 1 && pos <= size - 1 && first_use[pos - 1] == std::pair<int, int>{},
                    "concurrent_schedule: position clash");
            first_use[pos - 1] = {s, w % copies};
        }
    }

    for (int p = 1; p <= size - 1; ++p) {
        const auto key = first_use[p - 1];
        auto it = row_of.find(key);
        if (it == row_of.end()) {
            PhysicalStage ps;
            ps.stage = key.first;
            ps.copy = key.second;
            ps.label = std::to_string(key.first) + std::string(key.second, '\'');
            it = row_of.emplace(key, static_cast<int>(sched.stages.size())).first;
            sched.stages.push_back(ps);
        }
        sched.position_to_stage[p - 1] = it->second;
    }
    return sched;
}

int required_pe_count(int n, int m) {
    const Schedule sched = concurrent_schedule(n, m);
    int total = 0;
    for (const auto& ps : sched.stages) total += 1 << (n - ps.stage);
    return total;
}

std::vector<std::pair<std::string, Rational>> stage_utilization(const Schedule& sched) {
    std::vector<int> positions(sched.stages.size(), 0);
    for (int row : sched.position_to_stage) positions[row]++;
    std::vector<std::pair<std::string, Rational>> out;
    out.reserve(sched.stages.size());
    for (std::size_t r = 0; r < sched.stages.size(); ++r)
        out.emplace_back(sched.stages[r].label, Rational(sched.m * positions[r], sched.period));
    return out;
}

long long parallel_overhead(int l) {
    require(l >= 1, "parallel_overhead: l must be positive");
    return static_cast<long long>(l) * (l - 1) / 2;
}

PeBankSchedule folded_schedule(int n) {
    require(n >= 1 && n <= 20, "folded_schedule: n out of range");
    const int size = 1 << n;
    PeBankSchedule sched;
    sched.n = n;
    sched.frames = 1;
    sched.bank_size = size / 2;
    sched.cycle_of_position.assign(1, std::vector<int>(size - 1));
    for (int p = 1; p <= size - 1; ++p) sched.cycle_of_position[0][p - 1] = p;
    sched.makespan = size - 1;
    return sched;
}

PeBankSchedule two_parallel_schedule(int n) {
    require(n >= 1 && n <= 20, "two_parallel_schedule: n out of range");
    const int size = 1 << n;
    PeBankSchedule sched;
    sched.n = n;
    sched.frames = 2;
    sched.bank_size = size / 2;
    sched.cycle_of_position.assign(2, std::vector<int>(size - 1));
    // Frame 1 stalls once after its full-width first step so the shared bank
    // never sees both full-width steps together.
    for (int p = 1; p <= size - 1; ++p) {
        sched.cycle_of_position[0][p - 1] = p == 1 ? 1 : p + 1;
        sched.cycle_of_position[1][p - 1] = p + 1;
    }
    sched.makespan = size;

    const auto demand = pe_demand_by_cycle(sched);
    for (int c = 0; c < sched.makespan; ++c) {
        int total = 0;
        for (int fr = 0; fr < sched.frames; ++fr) total += demand[fr][c];
        require(total <= sched.bank_size, "two_parallel_schedule: bank overflow");
    }
    return sched;
}

std::vector<std::vector<int>> pe_demand_by_cycle(const PeBankSchedule& sched) {
    const std::vector<int> stages = position_stage_sequence(sched.n);
    std::vector<std::vector<int>> demand(sched.frames, std::vector<int>(sched.makespan, 0));
    for (int fr = 0; fr < sched.frames; ++fr)
        for (std::size_t p = 0; p < stages.size(); ++p)
            demand[fr][sched.cycle_of_position[fr][p] - 1] += 1 << (sched.n - stages[p]);
    return demand;
}

std::string chart_csv(const TimeChart& chart) {
    const int cycles = static_cast<int>(chart.activations.size());
    std::string out = "stage";
    for (int c = 1; c <= cycles; ++c) out += "," + std::to_string(c);
    out += "\n";
    for (int s = 1; s <= chart.n; ++s) {
        out += std::to_string(s);
        for (int c = 0; c < cycles; ++c) {
            out += ",";
            if (chart.activations[c].stage == s) out += kind_name(chart.activations[c].kind);
        }
        out += "\n";
    }
    return out;
}

std::string schedule_csv(const Schedule& sched, int cycles, int max_codewords) {
    std::vector<std::vector<int>> grid(sched.stages.size(), std::vector<int>(cycles, 0));
    for (int k = 1;; ++k) {
        if (max_codewords > 0 && k > max_codewords) break;
        const long long admit = sched.admission_cycle(k);
        if (admit > cycles) break;
        for (int p = 1; p <= sched.period; ++p) {
            const long long c = admit + p - 1;
            if (c > cycles) break;
            int& cell = grid[sched.position_to_stage[p - 1]][c - 1];
            require(cell == 0, "schedule_csv: collision");
            cell = k;
        }
    }

    std::string out = "stage";
    for (int c = 1; c <= cycles; ++c) out += "," + std::to_string(c);
    out += "\n";
    for (std::size_t r = 0; r < sched.stages.size(); ++r) {
        out += sched.stages[r].label;
        for (int c = 0; c < cycles; ++c) {
            out += ",";
            if (grid[r][c] != 0) out += "C" + std::to_string(grid[r][c]);
        }
        out += "\n";
    }
    return out;
}

std::string two_parallel_demand_csv(int n) {
    const PeBankSchedule sched = two_parallel_schedule(n);
    const auto demand = pe_demand_by_cycle(sched);
    std::string out = "frame";
    for (int c = 1; c <= sched.makespan; ++c) out += "," + std::to_string(c);
    out += "\n";
    for (int fr = 0; fr < sched.frames; ++fr) {
        out += "C" + std::to_string(fr + 1);
        for (int c = 0; c < sched.makespan; ++c) {
            out += ",";
            if (demand[fr][c] != 0) out += std::to_string(demand[fr][c]);
        }
        out += "\n";
    }
    return out;
}

} // namespace polarsim
