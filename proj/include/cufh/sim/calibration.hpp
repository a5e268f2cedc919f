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

#ifndef CUFH_SIM_CALIBRATION_HPP
#define CUFH_SIM_CALIBRATION_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cufh/classify.hpp"
#include "cufh/mac_address.hpp"

namespace cufh::sim {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Traffic planes a node processes (and the legit flows map onto).
enum class Plane : uint8_t { CPlaneDL = 0, UPlaneDL = 1, UPlaneUL = 2 };
constexpr int kPlaneCount = 3;

std::string_view to_string(Plane p) noexcept;
Plane plane_from_string(std::string_view s);
FrameClass frame_class_for(Plane p) noexcept;

enum class SrcAcceptance : uint8_t { Any, ExpectedPeerOnly };

/// How a node reacts to frames sourced from its own address: process them
/// like any foreign source, discard them silently (loop guard), or count a
/// fault (the anomalous handling this harness probes for).
enum class SelfSourceHandling : uint8_t { Process, Discard, Fault };

/// Per-plane processing knobs. The shipped calibration values are fits
/// chosen to reproduce observed outcome matrices, not measurements; see
/// the comments in configs/*.cfg.
struct PlanePolicy {
    SrcAcceptance srcAcceptance = SrcAcceptance::Any;
    SelfSourceHandling selfSource = SelfSourceHandling::Process;
    double peerCostUnits = 1.0;  // per accepted frame from the expected peer
    double otherCostUnits = 1.0; // per accepted frame from anyone else
    double budgetUnitsPerSecond = 1e12;
    uint32_t flowStateCapacity = 0;        // distinct tracked sources; 0 = untracked
    double misdeliveryFailThreshold = 0.5; // fraction of a legit flow stolen per second
    double misdeliveryStickiness = 0;      // cumulative stolen frames latching the flow; 0 = off
    bool overloadRestarts = true;          // sustained overload forces a restart
    double collapseRatio = 0;              // spend/budget ratio latching the node down; 0 = off
};

struct NodeConfig {
    std::string name;
    MacAddress mac{};
    std::string peer; // expected peer node name
    double restartDowntimeSeconds = 10;
    std::array<PlanePolicy, kPlaneCount> planes{};

    const PlanePolicy& policy(Plane p) const { return planes[static_cast<std::size_t>(p)]; }
};

struct LegitFlowConfig {
    std::string name; // equals the plane key
    std::string fromNode;
    std::string toNode;
    Plane plane = Plane::CPlaneDL;
    double framesPerSecond = 0;
    double wireBytes = 64;
};

/// One simulated fronthaul segment: a switch, its ports, the two node
/// models, and the legit traffic profile.
struct TopologyConfig {
    std::map<std::string, int> switchPorts; // node name or "attacker" -> port
    double switchAgingSeconds = 300;
    std::vector<std::string> pinnedNodes; // addresses the switch refuses to re-learn
    std::vector<NodeConfig> nodes;
    std::vector<LegitFlowConfig> legitFlows;
    std::string sourcePath;

    const NodeConfig& node(const std::string& name) const;
    bool is_pinned(const std::string& name) const;
    int port_of(const std::string& name) const;

    /// Strict line-oriented key/value parser; unknown keys, unknown port
    /// references, and malformed values raise ConfigError.
    static TopologyConfig load(const std::string& path);
    static TopologyConfig parse(const std::string& text, const std::string& path);
};

} // namespace cufh::sim

#endif
