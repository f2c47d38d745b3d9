#pragma once

#include "polarsim/arch_sim.hpp"

#include <string>
#include <vector>

namespace polarsim {

// Cost-table columns. d1..d4 are the four merged-PE flows, tree is the
// two-pass baseline, overlapped and line are comparison designs built from
// baseline PEs.
enum class Design { d1, d2, d3, d4, tree, overlapped, line };

std::string design_name(Design d);
bool parse_design(const std::string& name, Design& out);
ArchKind design_arch(Design d); // d1..d4 and tree only

// All register, RAM and mux figures are in bits; mux bits count one
// XOR-equivalent each in the combined total.
struct CostEstimate {
    Design design = Design::d1;
    int n = 0;
    int m = 1;
    int q = 6;
    bool approximate = false; // column uses an approximate closed form

    double pe_count_real = 0; // may be fractional in approximate columns
    long long pe_count = 0;
    long long igc_count = 0;          // instances actually built
    long long igc_count_printed = -1; // table cell as documented (-1: none)

    long long pe_xor = 0; // per PE
    long long pe_reg = 0;
    long long pe_mux = 0;
    long long igc_xor = 0; // per instance
    long long igc_ram = 0;
    long long igc_mux = 0;
    long long other_reg = 0;
    long long other_mux = 0;

    long long total_xor_equiv = 0; // xor gates + mux bits, all blocks
    long long total_reg_bits = 0;  // register + RAM bits
    std::string total_xor_formula; // documented leading-order form ("" if none)
    std::string total_reg_formula;
};

CostEstimate estimate(Design design, int n, int m, int q);

struct RatioRow {
    std::string name;
    double claim_percent = 0;
    double leading_percent = 0; // from leading-order coefficients
    bool leading_matches_claim = false;
    double computed_percent = 0; // from exact totals at (n, m, q)
    std::string note;
};

// The three headline area ratios, checked against their stated values.
std::vector<RatioRow> ratio_report(int n, int m, int q);

struct AuditRow {
    std::string item;
    long long measured = 0;
    long long documented = -1; // -1: nothing documented
    bool match = false;
    std::string note;
};

// Component-count cross-check: measured inventory vs documented cells.
std::vector<AuditRow> structural_audit(Design design, int n, int m);

std::string cost_table_csv(int n, int m, int q);

} // namespace polarsim
