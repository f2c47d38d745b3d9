#pragma once

#include "polarsim/codec.hpp"

#include <string>
#include <vector>

namespace polarsim {

// Unfolded feedback-generation network. Graph stage k (1..n-1) produces the
// decoder-level (n-k) stream values: 2^k streams of 2^(n-k) elements each.
// Even-numbered streams come out of XOR elements, odd-numbered ones are
// pass-throughs; odd elements (1-based) are the operands the processing
// stages consume.
struct IgcGraphNode {
    int stage = 0;
    int stream = 0;
    int element = 0; // 1-based
    bool is_xor = false;
    bool pruned = false;
    bool consumed = false;
};

struct IgcFlowGraph {
    int n = 0;
    bool simplified = false;
    std::vector<IgcGraphNode> nodes;

    int index_of(int stage, int stream, int element) const;

    struct Counts {
        long long total_nodes = 0;
        long long xor_nodes = 0;
        long long pass_nodes = 0;
        long long pruned_nodes = 0;
        long long consumed_outputs = 0;
        std::vector<long long> xor_per_stage; // [stage-1]
    };
    Counts counts() const;
};

IgcFlowGraph build_full_graph(int n);
IgcFlowGraph simplify_graph(IgcFlowGraph graph); // drops never-consumed tails

// Values of all non-pruned nodes for a composite input (pruned slots zero).
std::vector<std::uint8_t> evaluate(const IgcFlowGraph& graph, const BitVector& u);

std::string graph_to_text(const IgcFlowGraph& graph);

long long xor_ops_closed_form(int n);           // simplified XOR total
long long xor_pass_elements_closed_form(int n); // streaming-form XOR elements
long long consumed_outputs_closed_form(int n);

// One feedback operand, addressed the way the processing stages consume it.
struct IgcEmission {
    int stage = 0;   // decoder stage 1..n-1
    int stream = 0;  // PE index within the stage
    int element = 0; // 1-based, odd
    std::uint8_t value = 0;
};

// Streaming generator: consumes one decided pair per step and cascades
// completed batches toward the wider stages. Buffers hold one odd batch per
// cascade level; level j's batch lives exactly 2^(j-1) pairs.
class IgcPipeline {
public:
    explicit IgcPipeline(int n);

    // Feed the decided pair (u_{2t}, u_{2t+1}); returns operands completed
    // at this step.
    std::vector<IgcEmission> step(std::uint8_t u_even, std::uint8_t u_odd);
    void reset();

    int pairs_consumed() const { return pair_count_; }

    // Cascade level k folds its batch down when this control bit is set.
    static bool combine_control(int level, int pair_index);

    struct Structure {
        int xor_pass_elements = 0;       // N/2 - 1
        int demux_elements = 0;          // N/2 - 1
        int documented_demux = 0;        // N/2 - 2
        int storage_bits = 0;            // N/2 - 2
        int register_bits = 0;           // narrow buffer kept in registers
        int ram_bits = 0;                // wider buffers
        std::vector<int> ram_bank_sizes; // bits per bank, widest last
    };
    Structure structure() const;

private:
    int n_;
    int pair_count_ = 0;
    std::vector<std::vector<std::uint8_t>> buffer_; // [cascade level] odd batch
    std::vector<int> buffer_written_at_;
};

} // namespace polarsim
