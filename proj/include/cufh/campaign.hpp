/******************************************************************************
*
*   Copyright (c) 2026 cufh toolkit authors.
*
*   Licensed under the Apache License, Version 2.0 (the "License");
*   you may not use this file except in compliance with the License.
*   You may obtain a copy of the License at
*
*       http://www.apache.org/licenses/LICENSE-2.0
*
*   Unless required by applicable law or agreed to in writing, software
*   distributed under the License is distributed on an "AS IS" BASIS,
*   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
*   See the License for the specific language governing permissions and
*   limitations under the License.
*
*******************************************************************************/

#ifndef CUFH_CAMPAIGN_HPP
#define CUFH_CAMPAIGN_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cufh/classify.hpp"
#include "cufh/sim/scenario.hpp"

namespace cufh {

/// One attack configuration in a campaign.
struct AttackSpec {
    std::string target; // node name, "odu" or "oru"
    FrameClass trafficType = FrameClass::CPlaneDL;
    std::string srcLabel; // peer | random | same-as-dst | broadcast
    double tierMbps = 10;
    uint32_t durationSeconds = 30;
};

struct MatrixCell {
    AttackSpec spec;
    sim::Verdict verdict = sim::Verdict::Pass;
    sim::Severity severity = sim::Severity::None;
    std::optional<uint32_t> firstDropSecond;
    std::optional<uint32_t> recoveredSecond;
    bool verdictStable = true; // across the repeat sweep

    std::string key() const;
};

struct MatrixReport {
    std::string suite;       // tifg722 | extended
    std::string backend;     // sim | port:<ifname>
    std::string calibration; // calibration file path
    uint64_t seed = 1;
    uint32_t attackSeconds = 30;
    std::vector<MatrixCell> rows;

    const MatrixCell* cell(const std::string& target, FrameClass traffic,
                           const std::string& srcLabel, double tierMbps) const;
};

struct CampaignConfig {
    sim::TopologyConfig topology;
    uint64_t seed = 1;
    uint32_t attackSeconds = 30;
    int repeat = 1;               // > 1: seed sweep, reports verdict stability
    bool includeBroadcast = false; // extra source column without ground truth
    std::vector<std::size_t> cellOrder; // test hook: execution permutation
};

/// The standard six-combination C-Plane flood toward the O-DU:
/// {spoofed peer, random} x {10, 100, 1000} Mbps, 30 s each.
MatrixReport run_tifg_722(const CampaignConfig& config);

/// The full grid: 2 targets x 3 traffic types x 3 source strategies x
/// 3 tiers (54 cells; broadcast column optional).
MatrixReport run_extended_matrix(const CampaignConfig& config);

/// Resolves a campaign cell into the simulator attack (exposed for tests
/// and for the dynamics checks that need raw outcomes).
sim::SimAttack resolve_attack(const sim::TopologyConfig& topology, const AttackSpec& spec,
                              uint64_t seed);

// ---------------------------------------------------------------------------
// Tool self-verification on the loopback port (no privileges required).

struct ComplianceCheck {
    std::string name;
    std::string expected;
    std::string measured;
    bool pass = false;
};

struct ComplianceReport {
    std::vector<ComplianceCheck> checks;
    bool all_pass() const;
};

/// Source-address strategies on the wire, volumetric tiers, and U-Plane
/// DL/UL capability, all measured through the meter on loopback.
ComplianceReport verify_tool_compliance(uint32_t tierSeconds = 30);

// ---------------------------------------------------------------------------
// Report emission.

void write_matrix_text(std::ostream& os, const MatrixReport& report);
void write_matrix_json(std::ostream& os, const MatrixReport& report);
MatrixReport load_matrix_json(std::istream& is);

void write_compliance_text(std::ostream& os, const ComplianceReport& report);
void write_compliance_json(std::ostream& os, const ComplianceReport& report);

} // namespace cufh

#endif
