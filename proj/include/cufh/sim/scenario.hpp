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

#ifndef CUFH_SIM_SCENARIO_HPP
#define CUFH_SIM_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cufh/addr_strategy.hpp"
#include "cufh/sim/calibration.hpp"

namespace cufh::sim {

/// Discrete time step. 100 ms resolves the observed difference between
/// "slight delay" drops at the low tier and immediate drops at high tiers
/// without an event queue.
constexpr double kTickSeconds = 0.1;
constexpr int kTicksPerSecond = 10;

enum class NodeState : uint8_t { Up, Restarting, Down };
enum class Verdict : uint8_t { Pass, Fail };
enum class Severity : uint8_t { None, DegradedRecovered, DegradedUnrecovered, CrashRestart };

std::string_view to_string(NodeState s) noexcept;
std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Severity s) noexcept;

/// One attack the simulator executes against the configured topology.
struct SimAttack {
    std::string targetNode; // destination of the forged traffic
    Plane plane = Plane::CPlaneDL;
    SourceMacStrategy srcStrategy;
    double mbps = 10;
    std::size_t wireBytes = 0; // 0 = minimal template size for the plane
};

struct SimTimings {
    uint32_t baselineSeconds = 5;
    uint32_t attackSeconds = 30; // the standing attack window
    uint32_t postSeconds = 30;

    uint32_t total_seconds() const { return baselineSeconds + attackSeconds + postSeconds; }
};

struct FlowOutcome {
    std::string flow;
    Plane plane;
    std::string fromNode, toNode;
    double baselineBitsPerSecond = 0;
    std::vector<int64_t> deliveredBitsPerSecond;
    std::optional<uint32_t> firstDropSecond;
    std::optional<uint32_t> recoveredSecond;
    double cumulativeMisdeliveredFrames = 0;
    bool latchedUnrecoverable = false;
};

struct StateTransition {
    uint32_t tick;
    std::string node;
    NodeState state;
};

struct SimOutcome {
    Verdict verdict = Verdict::Pass;
    Severity severity = Severity::None;
    std::vector<FlowOutcome> flows;
    std::vector<double> blockErrorProxy; // legit U-Plane loss fraction per second
    std::vector<StateTransition> stateTimeline;
    std::vector<std::string> degradations; // deterministic order, deduplicated
    std::optional<uint32_t> firstDropSecond;
    std::optional<uint32_t> recoveredSecond;

    const FlowOutcome* flow(const std::string& name) const;
};

/// Runs baseline + attack + observation deterministically. `attack` may be
/// null (pass nullptr via no-attack overload) for the quiet baseline case.
SimOutcome run_scenario(const TopologyConfig& topology, const SimAttack& attack,
                        const SimTimings& timings = {}, double dropFraction = 0.5);

/// Baseline-only run: no attacker traffic.
SimOutcome run_quiet(const TopologyConfig& topology, const SimTimings& timings = {},
                     double dropFraction = 0.5);

} // namespace cufh::sim

#endif
