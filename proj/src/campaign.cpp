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

#include "cufh/campaign.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "cufh/forge.hpp"
#include "cufh/rx_meter.hpp"
#include "cufh/tx_engine.hpp"

namespace cufh {

namespace {

sim::Plane plane_for(FrameClass cls) {
    switch (cls) {
        case FrameClass::CPlaneDL: return sim::Plane::CPlaneDL;
        case FrameClass::UPlaneDL: return sim::Plane::UPlaneDL;
        case FrameClass::UPlaneUL: return sim::Plane::UPlaneUL;
        default: throw std::invalid_argument("unsupported campaign traffic type");
    }
}

const double kTiersMbps[] = {10, 100, 1000};

} // namespace

std::string MatrixCell::key() const {
    std::ostringstream os;
    os << spec.target << '/' << to_string(spec.trafficType) << '/' << spec.srcLabel << '/'
       << spec.tierMbps;
    return os.str();
}

const MatrixCell* MatrixReport::cell(const std::string& target, FrameClass traffic,
                                     const std::string& srcLabel, double tierMbps) const {
    for (const auto& row : rows) {
        if (row.spec.target == target && row.spec.trafficType == traffic &&
            row.spec.srcLabel == srcLabel && row.spec.tierMbps == tierMbps)
            return &row;
    }
    return nullptr;
}

sim::SimAttack resolve_attack(const sim::TopologyConfig& topology, const AttackSpec& spec,
                              uint64_t seed) {
    const sim::NodeConfig& target = topology.node(spec.target);
    sim::SimAttack attack;
    attack.targetNode = spec.target;
    attack.plane = plane_for(spec.trafficType);
    attack.mbps = spec.tierMbps;
    if (spec.srcLabel == "peer") {
        attack.srcStrategy.kind = SourceMacStrategy::Kind::SpoofedPeer;
        attack.srcStrategy.mac = topology.node(target.peer).mac;
    } else if (spec.srcLabel == "random") {
        attack.srcStrategy.kind = SourceMacStrategy::Kind::RandomPerPacket;
        attack.srcStrategy.seed = seed;
    } else if (spec.srcLabel == "same-as-dst") {
        attack.srcStrategy.kind = SourceMacStrategy::Kind::SameAsDestination;
    } else if (spec.srcLabel == "broadcast") {
        attack.srcStrategy.kind = SourceMacStrategy::Kind::Broadcast;
    } else {
        throw std::invalid_argument("unknown source label '" + spec.srcLabel + "'");
    }
    return attack;
}

namespace {

MatrixCell run_cell(const CampaignConfig& config, const AttackSpec& spec) {
    sim::SimTimings timings;
    timings.attackSeconds = spec.durationSeconds;

    MatrixCell cell;
    cell.spec = spec;

    // Cells are freshly initialized simulations; nothing carries over.
    auto outcome = sim::run_scenario(config.topology,
                                     resolve_attack(config.topology, spec, config.seed), timings);
    cell.verdict = outcome.verdict;
    cell.severity = outcome.severity;
    cell.firstDropSecond = outcome.firstDropSecond;
    cell.recoveredSecond = outcome.recoveredSecond;
    cell.verdictStable = true;

    for (int r = 1; r < config.repeat; ++r) {
        auto sweep = sim::run_scenario(
            config.topology, resolve_attack(config.topology, spec, config.seed + static_cast<uint64_t>(r)),
            timings);
        if (sweep.verdict != cell.verdict) cell.verdictStable = false;
    }
    return cell;
}

MatrixReport run_cells(const CampaignConfig& config, const std::string& suite,
                       std::vector<AttackSpec> specs) {
    MatrixReport report;
    report.suite = suite;
    report.backend = "sim";
    report.calibration = config.topology.sourcePath;
    report.seed = config.seed;
    report.attackSeconds = config.attackSeconds;
    report.rows.resize(specs.size());

    std::vector<std::size_t> order = config.cellOrder;
    if (order.empty())
        for (std::size_t i = 0; i < specs.size(); ++i) order.push_back(i);
    if (order.size() != specs.size())
        throw std::invalid_argument("cell order permutation has wrong size");

    // Independent simulations; report order stays canonical regardless of
    // execution order.
#pragma omp parallel for schedule(dynamic)
    for (int64_t k = 0; k < static_cast<int64_t>(order.size()); ++k) {
        std::size_t idx = order[static_cast<std::size_t>(k)];
        report.rows[idx] = run_cell(config, specs[idx]);
    }
    return report;
}

} // namespace

MatrixReport run_tifg_722(const CampaignConfig& config) {
    std::vector<AttackSpec> specs;
    for (const char* src : {"peer", "random"})
        for (double tier : kTiersMbps) {
            AttackSpec spec;
            spec.target = "odu";
            spec.trafficType = FrameClass::CPlaneDL;
            spec.srcLabel = src;
            spec.tierMbps = tier;
            spec.durationSeconds = config.attackSeconds;
            specs.push_back(spec);
        }
    return run_cells(config, "tifg722", std::move(specs));
}

MatrixReport run_extended_matrix(const CampaignConfig& config) {
    std::vector<AttackSpec> specs;
    std::vector<std::string> sources = {"peer", "random", "same-as-dst"};
    if (config.includeBroadcast) sources.push_back("broadcast"); // no ground truth
    for (const char* target : {"odu", "oru"})
        for (FrameClass traffic :
             {FrameClass::CPlaneDL, FrameClass::UPlaneDL, FrameClass::UPlaneUL})
            for (const auto& src : sources)
                for (double tier : kTiersMbps) {
                    AttackSpec spec;
                    spec.target = target;
                    spec.trafficType = traffic;
                    spec.srcLabel = src;
                    spec.tierMbps = tier;
                    spec.durationSeconds = config.attackSeconds;
                    specs.push_back(spec);
                }
    return run_cells(config, "extended", std::move(specs));
}

// ---------------------------------------------------------------------------

namespace {

struct SrcObservation {
    uint64_t frames = 0;
    uint64_t matching = 0;
    uint64_t unicastLocal = 0;
    std::set<MacAddress> distinct;
    MacAddress dst{};
    MacAddress expect{};
};

ComplianceCheck strategy_check(const std::string& name, const SourceMacStrategy& strategy,
                               bool expectExact, const MacAddress& expectMac) {
    const MacAddress dst = *MacAddress::parse("02:aa:bb:00:00:01");
    auto tmpl = synthesize_template(FrameClass::CPlaneDL, 64, dst,
                                    *MacAddress::parse("02:aa:bb:00:00:02"));

    LoopbackPort port;
    SrcObservation obs;
    obs.dst = dst;
    obs.expect = expectMac;
    port.set_sink([&obs](std::span<const uint8_t> f, uint64_t) {
        obs.frames++;
        MacAddress src;
        std::copy_n(f.begin() + kSrcOffset, 6, src.octets.begin());
        if (src == obs.expect) obs.matching++;
        if (src.is_unicast() && src.is_locally_administered() && !(src == obs.dst))
            obs.unicastLocal++;
        obs.distinct.insert(src);
    });

    TxRunConfig cfg;
    cfg.schedule = RateSchedule::constant(1, 1); // 1 Mbps for 1 s: 1953 frames
    cfg.edits.src = strategy;
    TxStats stats = run_attack({tmpl.record}, cfg, port);

    ComplianceCheck check;
    check.name = name;
    if (expectExact) {
        check.expected = std::to_string(stats.totalFrames) + " frames from " +
                         expectMac.to_string();
        check.measured = std::to_string(obs.matching) + " of " + std::to_string(obs.frames) +
                         " frames carried the mandated source";
        check.pass = obs.matching == stats.totalFrames && stats.totalFrames > 0;
    } else {
        uint64_t want = obs.frames * 99 / 100;
        check.expected = "all sources unicast + locally administered, >= " +
                         std::to_string(want) + " distinct of " + std::to_string(obs.frames);
        check.measured = std::to_string(obs.unicastLocal) + " unicast-local, " +
                         std::to_string(obs.distinct.size()) + " distinct";
        check.pass = obs.frames > 0 && obs.unicastLocal == obs.frames &&
                     obs.distinct.size() >= want;
    }
    return check;
}

} // namespace

bool ComplianceReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

ComplianceReport verify_tool_compliance(uint32_t tierSeconds) {
    ComplianceReport report;

    const MacAddress oru = *MacAddress::parse("02:aa:bb:00:00:02");
    {
        SourceMacStrategy s;
        s.kind = SourceMacStrategy::Kind::SpoofedPeer;
        s.mac = oru;
        report.checks.push_back(strategy_check("mac-strategy spoofed-peer", s, true, oru));
    }
    {
        SourceMacStrategy s;
        s.kind = SourceMacStrategy::Kind::RandomPerPacket;
        s.seed = 7;
        report.checks.push_back(strategy_check("mac-strategy random", s, false, MacAddress{}));
    }
    {
        SourceMacStrategy s;
        s.kind = SourceMacStrategy::Kind::Broadcast;
        report.checks.push_back(
            strategy_check("mac-strategy broadcast", s, true, MacAddress::broadcast()));
    }

    // Volumetric tiers: deterministic token-bucket counts on loopback with
    // 64-byte C-Plane frames (512 wire bits each).
    for (double tier : kTiersMbps) {
        auto tmpl = synthesize_template(FrameClass::CPlaneDL, 64,
                                        *MacAddress::parse("02:aa:bb:00:00:01"),
                                        *MacAddress::parse("02:aa:bb:00:00:02"));
        LoopbackPort port;
        Meter meter;
        port.set_sink(meter.sink());
        TxRunConfig cfg;
        cfg.schedule = RateSchedule::constant(tier, tierSeconds);
        TxStats stats = run_attack({tmpl.record}, cfg, port);
        MeterReport m = meter.finish(tierSeconds);

        uint64_t expected = static_cast<uint64_t>(
            static_cast<long double>(tier) * 1e6L * tierSeconds / 512.0L);
        ComplianceCheck check;
        check.name = "volumetric tier " + std::to_string(static_cast<int>(tier)) + " Mbps";
        check.expected = std::to_string(expected) + " frames sent and received over " +
                         std::to_string(tierSeconds) + " s";
        check.measured = std::to_string(stats.totalFrames) + " sent, " +
                         std::to_string(m.totalFrames) + " received";
        check.pass = stats.totalFrames == expected && m.totalFrames == expected;
        report.checks.push_back(check);
    }

    // U-Plane capability: transmitted frames classify as the right plane
    // and direction on receipt.
    for (FrameClass cls : {FrameClass::UPlaneDL, FrameClass::UPlaneUL}) {
        auto tmpl = synthesize_template(cls, 82, *MacAddress::parse("02:aa:bb:00:00:01"),
                                        *MacAddress::parse("02:aa:bb:00:00:02"));
        LoopbackPort port;
        Meter meter;
        port.set_sink(meter.sink());
        TxRunConfig cfg;
        cfg.schedule = RateSchedule::constant(1, 1);
        TxStats stats = run_attack({tmpl.record}, cfg, port);
        MeterReport m = meter.finish(1);

        ComplianceCheck check;
        check.name = std::string("capability ") + std::string(to_string(cls));
        check.expected = "100% of received frames classify as " + std::string(to_string(cls));
        check.measured = std::to_string(m.total_for_class(cls).frames) + " of " +
                         std::to_string(m.totalFrames) + " frames";
        check.pass = stats.totalFrames > 0 && m.totalFrames == stats.totalFrames &&
                     m.total_for_class(cls).frames == m.totalFrames;
        report.checks.push_back(check);
    }
    return report;
}

} // namespace cufh
