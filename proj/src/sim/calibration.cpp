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

#include "cufh/sim/calibration.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cufh::sim {

std::string_view to_string(Plane p) noexcept {
    switch (p) {
        case Plane::CPlaneDL: return "cplane_dl";
        case Plane::UPlaneDL: return "uplane_dl";
        case Plane::UPlaneUL: return "uplane_ul";
    }
    return "cplane_dl";
}

Plane plane_from_string(std::string_view s) {
    if (s == "cplane_dl") return Plane::CPlaneDL;
    if (s == "uplane_dl") return Plane::UPlaneDL;
    if (s == "uplane_ul") return Plane::UPlaneUL;
    throw ConfigError("unknown plane '" + std::string(s) + "'");
}

FrameClass frame_class_for(Plane p) noexcept {
    switch (p) {
        case Plane::CPlaneDL: return FrameClass::CPlaneDL;
        case Plane::UPlaneDL: return FrameClass::UPlaneDL;
        case Plane::UPlaneUL: return FrameClass::UPlaneUL;
    }
    return FrameClass::Other;
}

const NodeConfig& TopologyConfig::node(const std::string& name) const {
    for (const auto& n : nodes)
        if (n.name == name) return n;
    throw ConfigError("config references unknown node '" + name + "'");
}

bool TopologyConfig::is_pinned(const std::string& name) const {
    return std::find(pinnedNodes.begin(), pinnedNodes.end(), name) != pinnedNodes.end();
}

int TopologyConfig::port_of(const std::string& name) const {
    auto it = switchPorts.find(name);
    if (it == switchPorts.end())
        throw ConfigError("config references unknown port for '" + name + "'");
    return it->second;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

double parse_number(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (...) {
        throw ConfigError("bad numeric value for " + key + ": '" + value + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("bad boolean value for " + key + ": '" + value + "'");
}

NodeConfig& node_for(std::vector<NodeConfig>& nodes, const std::string& name) {
    for (auto& n : nodes)
        if (n.name == name) return n;
    nodes.push_back(NodeConfig{});
    nodes.back().name = name;
    return nodes.back();
}

LegitFlowConfig& flow_for(std::vector<LegitFlowConfig>& flows, const std::string& name) {
    for (auto& f : flows)
        if (f.name == name) return f;
    flows.push_back(LegitFlowConfig{});
    flows.back().name = name;
    flows.back().plane = plane_from_string(name);
    return flows.back();
}

void apply_plane_key(PlanePolicy& p, const std::string& key, const std::string& knob,
                     const std::string& value) {
    if (knob == "src_acceptance") {
        if (value == "any") p.srcAcceptance = SrcAcceptance::Any;
        else if (value == "expected-peer-only") p.srcAcceptance = SrcAcceptance::ExpectedPeerOnly;
        else throw ConfigError("bad src_acceptance '" + value + "' for " + key);
    } else if (knob == "self_source") {
        if (value == "process") p.selfSource = SelfSourceHandling::Process;
        else if (value == "discard") p.selfSource = SelfSourceHandling::Discard;
        else if (value == "fault") p.selfSource = SelfSourceHandling::Fault;
        else throw ConfigError("bad self_source '" + value + "' for " + key);
    } else if (knob == "peer_cost") {
        p.peerCostUnits = parse_number(key, value);
    } else if (knob == "other_cost") {
        p.otherCostUnits = parse_number(key, value);
    } else if (knob == "budget_units_per_second") {
        p.budgetUnitsPerSecond = parse_number(key, value);
    } else if (knob == "flow_state_capacity") {
        p.flowStateCapacity = static_cast<uint32_t>(parse_number(key, value));
    } else if (knob == "misdelivery_fail_threshold") {
        p.misdeliveryFailThreshold = parse_number(key, value);
        if (p.misdeliveryFailThreshold <= 0 || p.misdeliveryFailThreshold >= 1)
            throw ConfigError(key + " must lie in (0, 1)");
    } else if (knob == "misdelivery_stickiness") {
        p.misdeliveryStickiness = parse_number(key, value);
    } else if (knob == "overload_restarts") {
        p.overloadRestarts = parse_bool(key, value);
    } else if (knob == "collapse_ratio") {
        p.collapseRatio = parse_number(key, value);
    } else {
        throw ConfigError("unknown plane knob in key '" + key + "'");
    }
}

} // namespace

TopologyConfig TopologyConfig::parse(const std::string& text, const std::string& path) {
    TopologyConfig cfg;
    cfg.sourcePath = path;

    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineNo) + ": expected key = value");
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        auto parts = split(key, '.');

        if (parts[0] == "switch") {
            if (parts.size() == 3 && parts[1] == "port") {
                cfg.switchPorts[parts[2]] = static_cast<int>(parse_number(key, value));
            } else if (parts.size() == 2 && parts[1] == "aging_seconds") {
                cfg.switchAgingSeconds = parse_number(key, value);
            } else if (parts.size() == 3 && parts[1] == "pinned") {
                if (parse_bool(key, value)) cfg.pinnedNodes.push_back(parts[2]);
            } else {
                throw ConfigError("unknown switch key '" + key + "'");
            }
        } else if (parts[0] == "node") {
            if (parts.size() < 3) throw ConfigError("incomplete node key '" + key + "'");
            NodeConfig& node = node_for(cfg.nodes, parts[1]);
            if (parts.size() == 3 && parts[2] == "mac") {
                auto mac = MacAddress::parse(value);
                if (!mac) throw ConfigError("bad MAC '" + value + "' for " + key);
                node.mac = *mac;
            } else if (parts.size() == 3 && parts[2] == "peer") {
                node.peer = value;
            } else if (parts.size() == 3 && parts[2] == "restart_downtime_seconds") {
                node.restartDowntimeSeconds = parse_number(key, value);
            } else if (parts.size() == 4) {
                Plane plane = plane_from_string(parts[2]);
                apply_plane_key(node.planes[static_cast<std::size_t>(plane)], key, parts[3],
                                value);
            } else {
                throw ConfigError("unknown node key '" + key + "'");
            }
        } else if (parts[0] == "legit") {
            if (parts.size() != 3) throw ConfigError("unknown legit key '" + key + "'");
            LegitFlowConfig& flow = flow_for(cfg.legitFlows, parts[1]);
            if (parts[2] == "from") flow.fromNode = value;
            else if (parts[2] == "to") flow.toNode = value;
            else if (parts[2] == "frames_per_second") flow.framesPerSecond = parse_number(key, value);
            else if (parts[2] == "wire_bytes") flow.wireBytes = parse_number(key, value);
            else throw ConfigError("unknown legit knob in key '" + key + "'");
        } else {
            throw ConfigError("unknown key '" + key + "'");
        }
    }

    // Cross-reference checks: every named node needs a port, a MAC, and a
    // peer that exists; flows must reference known nodes.
    if (cfg.nodes.empty()) throw ConfigError(path + ": no nodes defined");
    if (cfg.switchPorts.find("attacker") == cfg.switchPorts.end())
        throw ConfigError(path + ": switch.port.attacker is required");
    for (const auto& n : cfg.nodes) {
        cfg.port_of(n.name);
        cfg.node(n.peer);
        if (n.mac == MacAddress{}) throw ConfigError(path + ": node " + n.name + " has no MAC");
    }
    for (const auto& name : cfg.pinnedNodes) cfg.node(name);
    for (const auto& f : cfg.legitFlows) {
        cfg.node(f.fromNode);
        cfg.node(f.toNode);
        if (f.framesPerSecond <= 0)
            throw ConfigError(path + ": legit flow " + f.name + " needs a positive rate");
    }
    return cfg;
}

TopologyConfig TopologyConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open calibration file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

} // namespace cufh::sim
