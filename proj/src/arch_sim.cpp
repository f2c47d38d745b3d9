#include "polarsim/arch_sim.hpp"
#include "polarsim/reference_decoder.hpp"

#include <algorithm>
#include <set>

namespace polarsim {

namespace {

// One codeword flowing through the merged-PE pipeline. Delivery and
// consumption are step-checked so any schedule violation trips a logic error
// instead of silently reusing stale values.
class LookaheadFrame {
public:
    LookaheadFrame(const PolarCode& code, const std::vector<double>& llrs, const Quantization& quant)
        : code_(&code), quant_(quant), n_(code.n), igc_(code.n) {
        const int size = code.block_length;
        chan_.resize(size);
        for (int j = 0; j < size; ++j) chan_[j] = quantize(llrs[j], quant);
        out_.resize(n_ + 1);
        out_step_.resize(n_ + 1);
        out_consumed_.resize(n_ + 1);
        cand0_.resize(n_ + 1);
        cand1_.resize(n_ + 1);
        cand_step_.resize(n_ + 1);
        for (int s = 1; s <= n_; ++s) {
            const std::size_t pes = std::size_t(1) << (n_ - s);
            out_[s].assign(pes, 0);
            out_step_[s].assign(pes, 0);
            out_consumed_[s].assign(pes, 1);
            cand0_[s].assign(pes, 0);
            cand1_[s].assign(pes, 0);
            cand_step_[s].assign(pes, 0);
        }
        act_count_.assign(n_ + 1, 0);
        u_hat_.assign(size, 0);
    }

    // Runs one merged activation of the given stage; returns PE ops spent.
    int activate(int stage, long long cycle, int codeword, std::vector<SelectEvent>* selects) {
        require(stage >= 1 && stage <= n_, "LookaheadFrame: bad stage");
        const int act = ++act_count_[stage];
        require(act <= (1 << (stage - 1)), "LookaheadFrame: stage overran its activations");
        const int pes = 1 << (n_ - stage);
        for (int j = 0; j < pes; ++j) {
            int a, b;
            if (stage == 1) {
                a = chan_[2 * j];
                b = chan_[2 * j + 1];
            } else {
                a = consume(stage - 1, 2 * j, act);
                b = consume(stage - 1, 2 * j + 1, act);
            }
            const int f = sign_min(a, b);
            const auto [c0, c1] = g_candidates(a, b, quant_.q);
            if (stage < n_) {
                deliver(stage, j, f, 2 * act - 1);
                cand0_[stage][j] = c0;
                cand1_[stage][j] = c1;
                cand_step_[stage][j] = 2 * act;
            } else {
                decide_pair(f, c0, c1, act, cycle, codeword, selects);
            }
        }
        return pes;
    }

    bool complete() const { return decided_ == code_->block_length; }
    const BitVector& u_hat() const { return u_hat_; }

private:
    int consume(int stage, int j, int element) {
        require(out_step_[stage][j] == element, "LookaheadFrame: input not fresh");
        require(!out_consumed_[stage][j], "LookaheadFrame: input consumed twice");
        out_consumed_[stage][j] = 1;
        return out_[stage][j];
    }

    void deliver(int stage, int j, int value, int element) {
        require(out_step_[stage][j] == element - 1, "LookaheadFrame: output out of order");
        require(out_step_[stage][j] == 0 || out_consumed_[stage][j],
                "LookaheadFrame: output never consumed");
        out_[stage][j] = value;
        out_step_[stage][j] = element;
        out_consumed_[stage][j] = 0;
    }

    void decide_pair(int f, int c0, int c1, int act, long long cycle, int codeword,
                     std::vector<SelectEvent>* selects) {
        const int idx_even = 2 * (act - 1);
        const int idx_odd = 2 * act - 1;
        const std::uint8_t ue = code_->is_frozen[idx_even]
                                    ? code_->frozen_values[idx_even]
                                    : static_cast<std::uint8_t>(f >= 0 ? 0 : 1);
        const int chosen = ue ? c1 : c0;
        const std::uint8_t uo = code_->is_frozen[idx_odd]
                                    ? code_->frozen_values[idx_odd]
                                    : static_cast<std::uint8_t>(chosen >= 0 ? 0 : 1);
        u_hat_[idx_even] = ue;
        u_hat_[idx_odd] = uo;
        decided_ += 2;
        if (selects) selects->push_back({cycle, codeword, n_, 0, 2 * act, ue});

        for (const IgcEmission& e : igc_.step(ue, uo)) {
            require(cand_step_[e.stage][e.stream] == e.element + 1,
                    "LookaheadFrame: select out of step");
            const int value = e.value ? cand1_[e.stage][e.stream] : cand0_[e.stage][e.stream];
            deliver(e.stage, e.stream, value, e.element + 1);
            cand_step_[e.stage][e.stream] = 0;
            if (selects) selects->push_back({cycle, codeword, e.stage, e.stream, e.element + 1, e.value});
        }
    }

    const PolarCode* code_;
    Quantization quant_;
    int n_;
    std::vector<int> chan_;
    std::vector<std::vector<int>> out_, cand0_, cand1_;
    std::vector<std::vector<int>> out_step_, cand_step_;
    std::vector<std::vector<std::uint8_t>> out_consumed_;
    std::vector<int> act_count_;
    IgcPipeline igc_;
    BitVector u_hat_;
    int decided_ = 0;
};

// One codeword on the conventional tree: every activation refreshes a whole
// stage, feedback comes from the shared tracker.
class TreeFrame {
public:
    TreeFrame(const PolarCode& code, const std::vector<double>& llrs, const Quantization& quant)
        : code_(&code), quant_(quant), n_(code.n), tracker_(code.n) {
        const int size = code.block_length;
        chan_.resize(size);
        for (int j = 0; j < size; ++j) chan_[j] = quantize(llrs[j], quant);
        out_.resize(n_ + 1);
        for (int s = 1; s <= n_; ++s) out_[s].assign(std::size_t(1) << (n_ - s), 0);
        u_hat_.assign(size, 0);
    }

    int activate(const StageActivation& activation) {
        const int stage = activation.stage;
        const int pes = 1 << (n_ - stage);
        for (int j = 0; j < pes; ++j) {
            const int a = stage == 1 ? chan_[2 * j] : out_[stage - 1][2 * j];
            const int b = stage == 1 ? chan_[2 * j + 1] : out_[stage - 1][2 * j + 1];
            if (activation.kind == PeKind::type_2) {
                out_[stage][j] = sign_min(a, b);
            } else {
                const auto [c0, c1] = g_candidates(a, b, quant_.q);
                out_[stage][j] = tracker_.operand(stage, j) ? c1 : c0;
            }
        }
        if (stage == n_) {
            const int idx = decided_;
            u_hat_[idx] = code_->is_frozen[idx]
                              ? code_->frozen_values[idx]
                              : static_cast<std::uint8_t>(out_[n_][0] >= 0 ? 0 : 1);
            tracker_.push_decision(u_hat_[idx]);
            ++decided_;
        }
        return pes;
    }

    bool complete() const { return decided_ == code_->block_length; }
    const BitVector& u_hat() const { return u_hat_; }

private:
    const PolarCode* code_;
    Quantization quant_;
    int n_;
    PartialSumTracker tracker_;
    std::vector<int> chan_;
    std::vector<std::vector<int>> out_;
    BitVector u_hat_;
    int decided_ = 0;
};

struct Bookkeeper {
    SimResult* result;
    bool trace = false;

    void note(long long cycle, int codeword, int position, int stage, int row, PeKind kind, int ops) {
        if (static_cast<long long>(result->active_pe_per_cycle.size()) < cycle)
            result->active_pe_per_cycle.resize(cycle, 0);
        result->active_pe_per_cycle[cycle - 1] += ops;
        result->makespan = std::max(result->makespan, cycle);
        if (row >= 0 && row < static_cast<int>(result->stage_busy.size())) result->stage_busy[row]++;
        if (trace) result->trace.push_back({cycle, codeword, position, stage, row, kind, ops});
    }
};

} // namespace

long long nominal_latency(ArchKind kind, int n) {
    const long long size = 1LL << n;
    switch (kind) {
        case ArchKind::tree_baseline: return 2 * (size - 1);
        case ArchKind::lookahead_pipelined:
        case ArchKind::refined_concurrent:
        case ArchKind::folded: return size - 1;
        case ArchKind::two_parallel: return size;
    }
    return 0;
}

SimResult simulate(const ArchitectureConfig& cfg, const PolarCode& code,
                   const std::vector<std::vector<double>>& frames) {
    require(cfg.n == code.n, "simulate: config and code disagree on n");
    const int n = cfg.n;
    const int size = code.block_length;
    for (const auto& f : frames)
        require(static_cast<int>(f.size()) == size, "simulate: frame length mismatch");

    SimResult result;
    result.latency_cycles = nominal_latency(cfg.kind, n);
    Bookkeeper keeper{&result, cfg.record_trace};
    std::vector<SelectEvent>* selects = cfg.record_selects ? &result.selects : nullptr;

    const auto stage_rows = [&] {
        for (int s = 1; s <= n; ++s) result.stage_labels.push_back(std::to_string(s));
        result.stage_busy.assign(n, 0);
    };

    switch (cfg.kind) {
        case ArchKind::tree_baseline: {
            result.pe_bank_size = size - 1;
            result.igc_instances = 0;
            stage_rows();
            const TimeChart chart = conventional_chart(n);
            const long long span = static_cast<long long>(chart.activations.size());
            for (std::size_t fr = 0; fr < frames.size(); ++fr) {
                TreeFrame frame(code, frames[fr], cfg.quant);
                const long long offset = static_cast<long long>(fr) * span;
                for (std::size_t c = 0; c < chart.activations.size(); ++c) {
                    const auto& act = chart.activations[c];
                    const int ops = frame.activate(act);
                    keeper.note(offset + static_cast<long long>(c) + 1, static_cast<int>(fr) + 1, 0,
                                act.stage, act.stage - 1, act.kind, ops);
                }
                require(frame.complete(), "simulate: tree frame incomplete");
                result.decoded.push_back(frame.u_hat());
            }
            break;
        }

        case ArchKind::lookahead_pipelined:
        case ArchKind::refined_concurrent: {
            const int m = cfg.kind == ArchKind::refined_concurrent ? cfg.m : 1;
            const Schedule sched = concurrent_schedule(n, m);
            const std::vector<int> stages = position_stage_sequence(n);
            result.pe_bank_size = required_pe_count(n, m);
            result.igc_instances = m;
            for (const auto& ps : sched.stages) result.stage_labels.push_back(ps.label);
            result.stage_busy.assign(sched.stages.size(), 0);

            std::set<std::pair<long long, int>> occupancy;
            for (std::size_t fr = 0; fr < frames.size(); ++fr) {
                const int k = static_cast<int>(fr) + 1;
                LookaheadFrame frame(code, frames[fr], cfg.quant);
                const long long admit = sched.admission_cycle(k);
                for (int p = 1; p <= size - 1; ++p) {
                    const long long cycle = admit + p - 1;
                    const int row = sched.position_to_stage[p - 1];
                    require(occupancy.emplace(cycle, row).second, "simulate: stage collision");
                    const int ops = frame.activate(stages[p - 1], cycle, k, selects);
                    keeper.note(cycle, k, p, stages[p - 1], row, PeKind::merged, ops);
                }
                require(frame.complete(), "simulate: frame incomplete");
                result.decoded.push_back(frame.u_hat());
            }
            break;
        }

        case ArchKind::folded: {
            const PeBankSchedule sched = folded_schedule(n);
            const std::vector<int> stages = position_stage_sequence(n);
            result.pe_bank_size = sched.bank_size;
            result.igc_instances = 1;
            stage_rows();
            for (std::size_t fr = 0; fr < frames.size(); ++fr) {
                LookaheadFrame frame(code, frames[fr], cfg.quant);
                const long long offset = static_cast<long long>(fr) * sched.makespan;
                for (int p = 1; p <= size - 1; ++p) {
                    const long long cycle = offset + sched.cycle_of_position[0][p - 1];
                    const int ops = frame.activate(stages[p - 1], cycle, static_cast<int>(fr) + 1, selects);
                    require(ops <= sched.bank_size, "simulate: folded bank overflow");
                    keeper.note(cycle, static_cast<int>(fr) + 1, p, stages[p - 1], stages[p - 1] - 1,
                                PeKind::merged, ops);
                }
                require(frame.complete(), "simulate: frame incomplete");
                result.decoded.push_back(frame.u_hat());
            }
            break;
        }

        case ArchKind::two_parallel: {
            const PeBankSchedule sched = two_parallel_schedule(n);
            const std::vector<int> stages = position_stage_sequence(n);
            result.pe_bank_size = sched.bank_size;
            result.igc_instances = 2;
            stage_rows();
            result.decoded.resize(frames.size());
            for (std::size_t base = 0; base < frames.size(); base += 2) {
                const long long offset = static_cast<long long>(base / 2) * sched.makespan;
                const std::size_t in_batch = std::min<std::size_t>(2, frames.size() - base);
                std::vector<int> demand(sched.makespan, 0);
                for (std::size_t slot = 0; slot < in_batch; ++slot) {
                    const std::size_t fr = base + slot;
                    LookaheadFrame frame(code, frames[fr], cfg.quant);
                    for (int p = 1; p <= size - 1; ++p) {
                        const long long cycle = offset + sched.cycle_of_position[slot][p - 1];
                        const int ops = frame.activate(stages[p - 1], cycle, static_cast<int>(fr) + 1, selects);
                        demand[sched.cycle_of_position[slot][p - 1] - 1] += ops;
                        keeper.note(cycle, static_cast<int>(fr) + 1, p, stages[p - 1],
                                    stages[p - 1] - 1, PeKind::merged, ops);
                    }
                    require(frame.complete(), "simulate: frame incomplete");
                    result.decoded[fr] = frame.u_hat();
                }
                for (int d : demand) require(d <= sched.bank_size, "simulate: shared bank overflow");
            }
            break;
        }
    }
    return result;
}

UtilizationReport utilization_report(const SimResult& result, long long window_start,
                                     long long window_len, int block_length) {
    require(window_start >= 1 && window_len >= 1, "utilization_report: bad window");
    UtilizationReport rep;
    const long long block = block_length;

    bool any = false;
    for (long long c = window_start; c < window_start + window_len; ++c) {
        if (c > static_cast<long long>(result.active_pe_per_cycle.size())) break;
        const int active = result.active_pe_per_cycle[c - 1];
        if (active == 0) continue;
        if (!any || active > rep.max_active_pes) rep.max_active_pes = active;
        if (!any || active < rep.min_active_pes) rep.min_active_pes = active;
        any = true;
    }
    if (any && block > 0) {
        rep.max_fraction_of_block = Rational(rep.max_active_pes, block);
        rep.min_fraction_of_block = Rational(rep.min_active_pes, block);
        rep.max_fraction_of_bank = Rational(rep.max_active_pes, result.pe_bank_size);
    }

    std::vector<long long> busy(result.stage_labels.size(), 0);
    for (const TraceEvent& ev : result.trace)
        if (ev.cycle >= window_start && ev.cycle < window_start + window_len) busy[ev.row]++;
    for (std::size_t r = 0; r < busy.size(); ++r)
        rep.stage_fractions.emplace_back(result.stage_labels[r], Rational(busy[r], window_len));
    return rep;
}

StructuralInventory build_inventory(const ArchitectureConfig& cfg) {
    StructuralInventory inv;
    inv.kind = cfg.kind;
    inv.n = cfg.n;
    inv.m = cfg.m;
    const int size = 1 << cfg.n;

    switch (cfg.kind) {
        case ArchKind::tree_baseline:
            inv.pe_count = size - 1;
            inv.igc_instances = 0;
            inv.delay_words = size - 1; // one output register per PE
            return inv;
        case ArchKind::lookahead_pipelined:
            inv.pe_count = size - 1;
            inv.igc_instances = 1;
            break;
        case ArchKind::refined_concurrent:
            inv.pe_count = required_pe_count(cfg.n, cfg.m);
            inv.igc_instances = cfg.m;
            break;
        case ArchKind::folded:
            inv.pe_count = size / 2;
            inv.igc_instances = 1;
            // A bank PE that serves k stages needs k-1 extra input routes.
            for (int j = 0; j < size / 2; ++j) {
                int sources = 0;
                for (int s = 1; s <= cfg.n; ++s)
                    if (j < (1 << (cfg.n - s))) sources++;
                inv.routing_switches += sources - 1;
            }
            break;
        case ArchKind::two_parallel:
            inv.pe_count = size / 2;
            inv.igc_instances = 2;
            break;
    }

    // Merged-PE flows: one candidate-select mux per PE, an output-source mux
    // everywhere below the decision stage, and three word registers per PE.
    inv.select_mux_words = inv.pe_count;
    inv.out_mux_words = inv.pe_count - 1;
    inv.delay_words = 3 * inv.pe_count;
    inv.igc = IgcPipeline(cfg.n).structure();
    return inv;
}

} // namespace polarsim
