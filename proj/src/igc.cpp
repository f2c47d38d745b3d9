#include "polarsim/igc.hpp"
#include "polarsim/util.hpp"

namespace polarsim {

int IgcFlowGraph::index_of(int stage, int stream, int element) const {
    const int per_stage = 1 << n;
    const int per_stream = 1 << (n - stage);
    return (stage - 1) * per_stage + stream * per_stream + (element - 1);
}

IgcFlowGraph::Counts IgcFlowGraph::counts() const {
    Counts c;
    c.xor_per_stage.assign(n - 1, 0);
    for (const auto& node : nodes) {
        if (node.pruned) {
            c.pruned_nodes++;
            continue;
        }
        c.total_nodes++;
        if (node.is_xor) {
            c.xor_nodes++;
            c.xor_per_stage[node.stage - 1]++;
        } else {
            c.pass_nodes++;
        }
        if (node.consumed) c.consumed_outputs++;
    }
    return c;
}

IgcFlowGraph build_full_graph(int n) {
    require(n >= 2 && n <= 20, "build_full_graph: n out of range");
    IgcFlowGraph g;
    g.n = n;
    g.nodes.reserve(static_cast<std::size_t>(n - 1) << n);
    for (int stage = 1; stage <= n - 1; ++stage) {
        const int streams = 1 << stage;
        const int elements = 1 << (n - stage);
        for (int stream = 0; stream < streams; ++stream) {
            for (int element = 1; element <= elements; ++element) {
                IgcGraphNode node;
                node.stage = stage;
                node.stream = stream;
                node.element = element;
                node.is_xor = (stream & 1) == 0;
                node.consumed = (element & 1) == 1;
                g.nodes.push_back(node);
            }
        }
    }
    return g;
}

IgcFlowGraph simplify_graph(IgcFlowGraph graph) {
    // The tail element of every stream feeds nothing: it is even (never a
    // select operand) and its fold target is the next stage's tail.
    for (auto& node : graph.nodes)
        if (node.element == (1 << (graph.n - node.stage))) node.pruned = true;
    graph.simplified = true;
    return graph;
}

std::vector<std::uint8_t> evaluate(const IgcFlowGraph& graph, const BitVector& u) {
    require(static_cast<int>(u.size()) == (1 << graph.n), "evaluate: input length mismatch");
    std::vector<std::uint8_t> values(graph.nodes.size(), 0);
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        const auto& node = graph.nodes[i];
        if (node.pruned) continue;
        if (node.stage == 1) {
            const std::uint8_t even = u[2 * (node.element - 1)];
            const std::uint8_t odd = u[2 * node.element - 1];
            values[i] = node.is_xor ? static_cast<std::uint8_t>(even ^ odd) : odd;
        } else {
            const int parent = node.stream >> 1;
            const std::uint8_t first = values[graph.index_of(node.stage - 1, parent, 2 * node.element - 1)];
            const std::uint8_t second = values[graph.index_of(node.stage - 1, parent, 2 * node.element)];
            values[i] = node.is_xor ? static_cast<std::uint8_t>(first ^ second) : second;
        }
    }
    return values;
}

std::string graph_to_text(const IgcFlowGraph& graph) {
    std::string out = "stages=" + std::to_string(graph.n - 1) +
                      (graph.simplified ? " simplified\n" : " full\n");
    for (const auto& node : graph.nodes) {
        if (node.pruned) continue;
        out += "stage " + std::to_string(node.stage) + " stream " + std::to_string(node.stream) +
               " elem " + std::to_string(node.element) + (node.is_xor ? " xor" : " pass") +
               (node.consumed ? " out\n" : "\n");
    }
    return out;
}

long long xor_ops_closed_form(int n) {
    require(n >= 2, "xor_ops_closed_form: n out of range");
    const long long size = 1LL << n;
    return size * (n - 2) / 2 + 1;
}

long long xor_pass_elements_closed_form(int n) {
    require(n >= 2, "xor_pass_elements_closed_form: n out of range");
    return (1LL << (n - 1)) - 1;
}

long long consumed_outputs_closed_form(int n) {
    require(n >= 2, "consumed_outputs_closed_form: n out of range");
    return (1LL << (n - 1)) * (n - 1);
}

IgcPipeline::IgcPipeline(int n) : n_(n) {
    require(n >= 1 && n <= 20, "IgcPipeline: n out of range");
    buffer_.resize(std::max(0, n - 1));
    buffer_written_at_.assign(std::max(0, n - 1), -1);
    for (int j = 1; j <= n - 2; ++j) buffer_[j].assign(std::size_t(1) << j, 0);
}

void IgcPipeline::reset() {
    pair_count_ = 0;
    for (auto& w : buffer_written_at_) w = -1;
}

bool IgcPipeline::combine_control(int level, int pair_index) {
    return (pair_index >> (level - 1)) & 1;
}

std::vector<IgcEmission> IgcPipeline::step(std::uint8_t u_even, std::uint8_t u_odd) {
    require(pair_count_ < (1 << (n_ - 1)) || n_ == 1, "IgcPipeline: frame already complete");
    if (n_ == 1) {
        require(pair_count_ == 0, "IgcPipeline: frame already complete");
        ++pair_count_;
        return {};
    }

    const int t = pair_count_++;
    std::vector<std::uint8_t> batch = {static_cast<std::uint8_t>(u_even ^ u_odd), u_odd};
    std::vector<IgcEmission> out;

    int j = 1;       // cascade level
    int m = t + 1;   // 1-based element index at this level
    while (true) {
        if (m & 1) {
            for (int sigma = 0; sigma < static_cast<int>(batch.size()); ++sigma)
                out.push_back({n_ - j, sigma, m, batch[sigma]});
            if (j <= n_ - 2) {
                buffer_[j] = batch;
                buffer_written_at_[j] = t;
            }
            break;
        }
        if (j + 1 > n_ - 1) break; // widest level: even tail is dead
        require(buffer_written_at_[j] >= 0, "IgcPipeline: missing stored batch");
        require(t - buffer_written_at_[j] == (1 << (j - 1)), "IgcPipeline: buffer lifetime");
        std::vector<std::uint8_t> next(batch.size() * 2);
        for (std::size_t sigma = 0; sigma < batch.size(); ++sigma) {
            next[2 * sigma] = static_cast<std::uint8_t>(buffer_[j][sigma] ^ batch[sigma]);
            next[2 * sigma + 1] = batch[sigma];
        }
        batch = std::move(next);
        ++j;
        m >>= 1;
    }
    return out;
}

IgcPipeline::Structure IgcPipeline::structure() const {
    Structure s;
    if (n_ == 1) return s;
    const int half = 1 << (n_ - 1);
    s.xor_pass_elements = half - 1;
    s.demux_elements = half - 1;
    s.documented_demux = half - 2;
    s.storage_bits = half - 2;
    for (int j = 1; j <= n_ - 2; ++j) {
        const int bits = 1 << j;
        if (j == 1)
            s.register_bits += bits;
        else {
            s.ram_bits += bits;
            s.ram_bank_sizes.push_back(bits);
        }
    }
    return s;
}

} // namespace polarsim
