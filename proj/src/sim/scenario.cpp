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

#include "cufh/sim/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "cufh/forge.hpp"
#include "cufh/rx_meter.hpp"

namespace cufh::sim {

std::string_view to_string(NodeState s) noexcept {
    switch (s) {
        case NodeState::Up: return "UP";
        case NodeState::Restarting: return "RESTARTING";
        case NodeState::Down: return "DOWN";
    }
    return "UP";
}

std::string_view to_string(Verdict v) noexcept {
    return v == Verdict::Pass ? "PASS" : "FAIL";
}

std::string_view to_string(Severity s) noexcept {
    switch (s) {
        case Severity::None: return "none";
        case Severity::DegradedRecovered: return "degraded-recovered";
        case Severity::DegradedUnrecovered: return "degraded-unrecovered";
        case Severity::CrashRestart: return "crash-restart";
    }
    return "none";
}

const FlowOutcome* SimOutcome::flow(const std::string& name) const {
    for (const auto& f : flows)
        if (f.flow == name) return &f;
    return nullptr;
}

namespace {

constexpr int kSustainSeconds = 3; // consecutive bad seconds before a restart

enum class SrcClass : uint8_t { Self, Peer, Other };

struct PlaneRuntime {
    double spendTick = 0;
    double spendSecond = 0;
    double faultsSecond = 0;
    int consecOverload = 0;
    int consecFault = 0;
    double flowOccupancy = 0;
    bool attackSourceCounted = false;
    bool legitSourceCounted = false;
};

struct NodeRuntime {
    const NodeConfig* cfg = nullptr;
    NodeState state = NodeState::Up;
    int restartTicksLeft = 0;
    bool everRestarted = false;
    std::array<PlaneRuntime, kPlaneCount> planes{};

    bool up() const noexcept { return state == NodeState::Up; }
    PlaneRuntime& rt(Plane p) { return planes[static_cast<std::size_t>(p)]; }
};

struct Ownership {
    double homeFraction = 1.0; // fraction of the tick the table entry points home
    int64_t lastActiveTick = 0;
    bool aged = false;

    double deliver_fraction() const noexcept { return aged ? 1.0 : homeFraction; }
};

struct FlowRuntime {
    const LegitFlowConfig* cfg = nullptr;
    double offeredSecond = 0;
    double misdeliveredSecond = 0;
    double deliveredSecond = 0;
    double cumulativeMisdelivered = 0;
    bool latched = false;
    bool thetaMarked = false;
    std::vector<int64_t> deliveredBits;
};

struct Engine {
    const TopologyConfig& topo;
    const SimAttack* attack;
    SimTimings timings;
    double dropFraction;

    std::vector<NodeRuntime> nodes;
    std::vector<Ownership> ownership; // parallel to nodes
    std::vector<FlowRuntime> flows;
    SimOutcome outcome;

    double attackPerTick = 0;
    MacAddress attackSrcMac{};
    bool attackSrcRefreshes = false; // single spoofed/self address refreshing the table
    bool attackSrcRandom = false;
    int targetIdx = -1;
    SrcClass attackSrcClass = SrcClass::Other;
    int64_t agingTicks = 0;

    std::vector<double> uplaneLostSecond;    // scratch per second
    std::vector<double> uplaneOfferedSecond;

    explicit Engine(const TopologyConfig& t, const SimAttack* a, const SimTimings& ti, double df)
        : topo(t), attack(a), timings(ti), dropFraction(df) {
        for (const auto& n : topo.nodes) {
            NodeRuntime rt;
            rt.cfg = &n;
            nodes.push_back(rt);
            ownership.push_back(Ownership{});
        }
        for (const auto& f : topo.legitFlows) {
            FlowRuntime fr;
            fr.cfg = &f;
            flows.push_back(fr);
        }
        agingTicks = static_cast<int64_t>(topo.switchAgingSeconds / kTickSeconds);

        if (attack) {
            const NodeConfig& target = topo.node(attack->targetNode);
            targetIdx = node_index(attack->targetNode);
            std::size_t wire = attack->wireBytes
                                   ? attack->wireBytes
                                   : min_template_wire_bytes(frame_class_for(attack->plane));
            attackPerTick = attack->mbps * 1e6 / (static_cast<double>(wire) * 8.0) * kTickSeconds;
            attackSrcRandom = attack->srcStrategy.kind == SourceMacStrategy::Kind::RandomPerPacket;
            switch (attack->srcStrategy.kind) {
                case SourceMacStrategy::Kind::RandomPerPacket:
                case SourceMacStrategy::Kind::Broadcast:
                    attackSrcClass = SrcClass::Other;
                    break;
                case SourceMacStrategy::Kind::SameAsDestination:
                    attackSrcMac = target.mac;
                    attackSrcRefreshes = true;
                    break;
                default:
                    attackSrcMac = attack->srcStrategy.mac;
                    attackSrcRefreshes = true;
                    break;
            }
            if (attackSrcRefreshes) {
                if (attackSrcMac == target.mac) attackSrcClass = SrcClass::Self;
                else if (attackSrcMac == topo.node(target.peer).mac) attackSrcClass = SrcClass::Peer;
                else attackSrcClass = SrcClass::Other;
            }
        }
    }

    int node_index(const std::string& name) const {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].cfg->name == name) return static_cast<int>(i);
        throw ConfigError("scenario references unknown node '" + name + "'");
    }

    void note(const std::string& event) {
        if (std::find(outcome.degradations.begin(), outcome.degradations.end(), event) ==
            outcome.degradations.end())
            outcome.degradations.push_back(event);
    }

    void transition(uint32_t tick, NodeRuntime& node, NodeState state) {
        node.state = state;
        outcome.stateTimeline.push_back(StateTransition{tick, node.cfg->name, state});
    }

    void restart(uint32_t tick, NodeRuntime& node, const std::string& why) {
        if (node.state != NodeState::Up) return;
        note("node " + node.cfg->name + " restarted (" + why + ")");
        node.everRestarted = true;
        transition(tick, node, NodeState::Restarting);
        node.restartTicksLeft =
            static_cast<int>(node.cfg->restartDowntimeSeconds * kTicksPerSecond);
        for (auto& p : node.planes) p = PlaneRuntime{}; // restart clears flow state
    }

    void collapse(uint32_t tick, NodeRuntime& node, Plane plane) {
        if (node.state == NodeState::Down) return;
        note("node " + node.cfg->name + " down (overload collapse on " +
             std::string(to_string(plane)) + ")");
        node.everRestarted = true;
        transition(tick, node, NodeState::Down);
    }

    // Refresh rates on a node's address this tick: the node's own
    // transmissions versus attack frames spoofing it.
    void update_ownership(uint32_t tick, bool attackActive) {
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            NodeRuntime& node = nodes[i];
            double own = 0;
            if (node.up()) {
                for (const auto& f : flows)
                    if (f.cfg->fromNode == node.cfg->name)
                        own += f.cfg->framesPerSecond * kTickSeconds;
            }
            double foreign = 0;
            if (attackActive && attackSrcRefreshes && attackSrcMac == node.cfg->mac &&
                !topo.is_pinned(node.cfg->name))
                foreign = attackPerTick;

            Ownership& o = ownership[i];
            if (topo.is_pinned(node.cfg->name)) {
                o.homeFraction = 1.0;
                o.lastActiveTick = tick;
                o.aged = false;
            } else if (own + foreign > 0) {
                o.homeFraction = own / (own + foreign);
                o.lastActiveTick = tick;
                o.aged = false;
            } else if (static_cast<int64_t>(tick) - o.lastActiveTick > agingTicks) {
                o.aged = true; // expired entries flood, which still delivers
            }
        }
    }

    struct Intake {
        double peer = 0;
        double other = 0;
        double self = 0;
    };

    void run() {
        const uint32_t totalTicks = timings.total_seconds() * kTicksPerSecond;
        const uint32_t attackStart = timings.baselineSeconds * kTicksPerSecond;
        const uint32_t attackEnd = attackStart + timings.attackSeconds * kTicksPerSecond;

        for (auto& f : flows) f.deliveredBits.assign(timings.total_seconds(), 0);
        uplaneLostSecond.assign(timings.total_seconds(), 0);
        uplaneOfferedSecond.assign(timings.total_seconds(), 0);

        for (uint32_t tick = 0; tick < totalTicks; ++tick) {
            const uint32_t second = tick / kTicksPerSecond;
            const bool attackActive = attack && tick >= attackStart && tick < attackEnd;

            update_ownership(tick, attackActive);

            for (auto& node : nodes)
                for (auto& p : node.planes) p.spendTick = 0;

            // Legit traffic enters the switch, then its destination node.
            std::vector<Intake> intake(nodes.size() * kPlaneCount);
            auto intakeOf = [&](int nodeIdx, Plane p) -> Intake& {
                return intake[static_cast<std::size_t>(nodeIdx) * kPlaneCount +
                              static_cast<std::size_t>(p)];
            };
            std::vector<double> arriving(flows.size(), 0);

            for (std::size_t fi = 0; fi < flows.size(); ++fi) {
                FlowRuntime& f = flows[fi];
                int fromIdx = node_index(f.cfg->fromNode);
                int toIdx = node_index(f.cfg->toNode);
                double offered = f.cfg->framesPerSecond * kTickSeconds;
                f.offeredSecond += offered;
                bool isUplane = f.cfg->plane != Plane::CPlaneDL;
                if (isUplane) uplaneOfferedSecond[second] += offered;

                if (!nodes[static_cast<std::size_t>(fromIdx)].up() || f.latched) {
                    if (isUplane) uplaneLostSecond[second] += offered;
                    continue; // sender silent; service shortfall counts as loss
                }
                double frac = ownership[static_cast<std::size_t>(toIdx)].deliver_fraction();
                double misdelivered = offered * (1.0 - frac);
                f.misdeliveredSecond += misdelivered;
                double toNode = offered - misdelivered;
                if (!nodes[static_cast<std::size_t>(toIdx)].up()) {
                    if (isUplane) uplaneLostSecond[second] += offered;
                    continue; // switch delivered, node did not process
                }
                arriving[fi] = toNode;
                intakeOf(toIdx, f.cfg->plane).peer += toNode; // legit senders are the peer
                if (isUplane) uplaneLostSecond[second] += misdelivered;
            }

            // Attack traffic toward the target.
            if (attackActive) {
                NodeRuntime& target = nodes[static_cast<std::size_t>(targetIdx)];
                double frac =
                    ownership[static_cast<std::size_t>(targetIdx)].deliver_fraction();
                double delivered = attackPerTick * frac; // hairpin drops the remainder
                if (target.up() && delivered > 0) {
                    const PlanePolicy& policy = target.cfg->policy(attack->plane);
                    PlaneRuntime& rt = target.rt(attack->plane);
                    double processed = delivered;
                    if (attackSrcClass == SrcClass::Self) {
                        switch (policy.selfSource) {
                            case SelfSourceHandling::Fault:
                                rt.faultsSecond += processed;
                                processed = 0;
                                break;
                            case SelfSourceHandling::Discard:
                                processed = 0;
                                break;
                            case SelfSourceHandling::Process:
                                break;
                        }
                    }
                    bool isPeer = attackSrcClass == SrcClass::Peer;
                    if (processed > 0 && policy.srcAcceptance == SrcAcceptance::ExpectedPeerOnly &&
                        !isPeer)
                        processed = 0;
                    if (processed > 0) {
                        rt.spendTick +=
                            processed * (isPeer ? policy.peerCostUnits : policy.otherCostUnits);
                        if (policy.flowStateCapacity > 0) {
                            if (attackSrcRandom) {
                                rt.flowOccupancy += processed; // fresh source per frame
                            } else if (!rt.attackSourceCounted) {
                                rt.flowOccupancy += 1;
                                rt.attackSourceCounted = true;
                            }
                            if (rt.flowOccupancy > policy.flowStateCapacity)
                                restart(tick, target, "flow-state exhaustion on " +
                                                          std::string(to_string(attack->plane)));
                        }
                    }
                }
            }

            // Legit intake spends against the same per-plane budgets.
            for (std::size_t fi = 0; fi < flows.size(); ++fi) {
                if (arriving[fi] <= 0) continue;
                FlowRuntime& f = flows[fi];
                int toIdx = node_index(f.cfg->toNode);
                NodeRuntime& to = nodes[static_cast<std::size_t>(toIdx)];
                if (!to.up()) continue;
                const PlanePolicy& policy = to.cfg->policy(f.cfg->plane);
                PlaneRuntime& rt = to.rt(f.cfg->plane);
                rt.spendTick += arriving[fi] * policy.peerCostUnits;
                if (policy.flowStateCapacity > 0 && !rt.legitSourceCounted) {
                    rt.flowOccupancy += 1;
                    rt.legitSourceCounted = true;
                }
            }

            // Budget slices: over budget, everything shares proportionally,
            // so legit frames beyond the budget drop.
            for (std::size_t fi = 0; fi < flows.size(); ++fi) {
                FlowRuntime& f = flows[fi];
                if (arriving[fi] <= 0) continue;
                int toIdx = node_index(f.cfg->toNode);
                NodeRuntime& to = nodes[static_cast<std::size_t>(toIdx)];
                if (!to.up()) {
                    // Receiver went down within this tick; its intake is lost.
                    if (f.cfg->plane != Plane::CPlaneDL)
                        uplaneLostSecond[second] += arriving[fi];
                    continue;
                }
                const PlanePolicy& policy = to.cfg->policy(f.cfg->plane);
                PlaneRuntime& rt = to.rt(f.cfg->plane);
                double slice = policy.budgetUnitsPerSecond * kTickSeconds;
                double share = rt.spendTick <= slice ? 1.0 : slice / rt.spendTick;
                double deliveredFrames = arriving[fi] * share;
                f.deliveredSecond += deliveredFrames;
                f.deliveredBits[second] += static_cast<int64_t>(
                    std::llround(deliveredFrames * f.cfg->wireBytes * 8.0));
                if (f.cfg->plane != Plane::CPlaneDL)
                    uplaneLostSecond[second] += arriving[fi] - deliveredFrames;
            }

            for (auto& node : nodes)
                for (auto& p : node.planes) p.spendSecond += p.spendTick;

            // Restart countdowns.
            for (auto& node : nodes) {
                if (node.state == NodeState::Restarting && --node.restartTicksLeft <= 0)
                    transition(tick, node, NodeState::Up);
            }

            if (tick % kTicksPerSecond == kTicksPerSecond - 1) close_second(tick, second);
        }

        finalize();
    }

    void close_second(uint32_t tick, uint32_t second) {
        (void)second;
        for (auto& node : nodes) {
            for (int pi = 0; pi < kPlaneCount; ++pi) {
                Plane plane = static_cast<Plane>(pi);
                const PlanePolicy& policy = node.cfg->policy(plane);
                PlaneRuntime& rt = node.rt(plane);

                bool overloaded = node.up() && rt.spendSecond > policy.budgetUnitsPerSecond;
                if (overloaded) {
                    note("plane " + std::string(to_string(plane)) + " at " + node.cfg->name +
                         " overloaded");
                    if (policy.collapseRatio > 0 &&
                        rt.spendSecond / policy.budgetUnitsPerSecond > policy.collapseRatio)
                        collapse(tick, node, plane);
                    rt.consecOverload++;
                    if (node.up() && policy.overloadRestarts &&
                        rt.consecOverload >= kSustainSeconds)
                        restart(tick, node, "sustained overload on " +
                                                std::string(to_string(plane)));
                } else {
                    rt.consecOverload = 0;
                }

                if (node.up() && rt.faultsSecond > 0) {
                    note("self-source fault on " + std::string(to_string(plane)) + " at " +
                         node.cfg->name);
                    rt.consecFault++;
                    if (rt.consecFault >= kSustainSeconds)
                        restart(tick, node, "sustained self-source faults on " +
                                                std::string(to_string(plane)));
                } else {
                    rt.consecFault = 0;
                }

                rt.spendSecond = 0;
                rt.faultsSecond = 0;
            }
        }

        for (auto& f : flows) {
            int toIdx = node_index(f.cfg->toNode);
            const PlanePolicy& policy = nodes[static_cast<std::size_t>(toIdx)].cfg->policy(
                f.cfg->plane);
            if (f.offeredSecond > 0 &&
                f.misdeliveredSecond / f.offeredSecond > policy.misdeliveryFailThreshold)
                if (!f.thetaMarked) {
                    note("flow " + f.cfg->name + " misdelivery exceeded threshold");
                    f.thetaMarked = true;
                }
            f.cumulativeMisdelivered += f.misdeliveredSecond;
            if (policy.misdeliveryStickiness > 0 && !f.latched &&
                f.cumulativeMisdelivered > policy.misdeliveryStickiness) {
                f.latched = true;
                note("flow " + f.cfg->name + " latched unrecoverable (poisoning stickiness)");
            }
            f.offeredSecond = 0;
            f.misdeliveredSecond = 0;
            f.deliveredSecond = 0;
        }
    }

    void finalize() {
        bool anyRestart = false;
        bool anyDown = false;
        for (const auto& node : nodes) {
            anyRestart = anyRestart || node.everRestarted;
            anyDown = anyDown || node.state == NodeState::Down;
        }

        bool anyDrop = false;
        bool anyUnrecovered = false;
        std::optional<uint32_t> firstDrop;
        std::optional<uint32_t> lastRecovery;
        bool allRecovered = true;

        for (auto& f : flows) {
            FlowOutcome out;
            out.flow = f.cfg->name;
            out.plane = f.cfg->plane;
            out.fromNode = f.cfg->fromNode;
            out.toNode = f.cfg->toNode;
            out.deliveredBitsPerSecond = f.deliveredBits;
            out.cumulativeMisdeliveredFrames = f.cumulativeMisdelivered;
            out.latchedUnrecoverable = f.latched;

            double baseline = 0;
            for (uint32_t s = 0; s < timings.baselineSeconds; ++s)
                baseline += static_cast<double>(f.deliveredBits[s]);
            baseline /= std::max(1u, timings.baselineSeconds);
            out.baselineBitsPerSecond = baseline;

            auto [drop, recovered] = detect_drop_and_recovery(
                f.deliveredBits, static_cast<int64_t>(std::llround(baseline)), dropFraction);
            out.firstDropSecond = drop;
            out.recoveredSecond = recovered;
            if (drop) {
                anyDrop = true;
                note("flow " + f.cfg->name + " throughput dropped");
                if (!firstDrop || *drop < *firstDrop) firstDrop = drop;
                if (recovered) {
                    if (!lastRecovery || *recovered > *lastRecovery) lastRecovery = recovered;
                } else {
                    allRecovered = false;
                    anyUnrecovered = true;
                }
            }
            if (f.latched) anyUnrecovered = true;
            outcome.flows.push_back(std::move(out));
        }

        outcome.firstDropSecond = firstDrop;
        if (firstDrop && allRecovered) outcome.recoveredSecond = lastRecovery;

        outcome.blockErrorProxy.assign(timings.total_seconds(), 0);
        for (uint32_t s = 0; s < timings.total_seconds(); ++s)
            if (uplaneOfferedSecond[s] > 0)
                outcome.blockErrorProxy[s] = uplaneLostSecond[s] / uplaneOfferedSecond[s];

        if (anyDown || anyRestart) outcome.severity = Severity::CrashRestart;
        else if (anyUnrecovered) outcome.severity = Severity::DegradedUnrecovered;
        else if (!outcome.degradations.empty() || anyDrop)
            outcome.severity = Severity::DegradedRecovered;
        else outcome.severity = Severity::None;
        outcome.verdict = outcome.severity == Severity::None ? Verdict::Pass : Verdict::Fail;
    }
};

} // namespace

SimOutcome run_scenario(const TopologyConfig& topology, const SimAttack& attack,
                        const SimTimings& timings, double dropFraction) {
    if (attack.mbps <= 0) throw std::invalid_argument("attack rate must be positive");
    topology.node(attack.targetNode); // config error surfaces before the run
    Engine engine(topology, &attack, timings, dropFraction);
    engine.run();
    return std::move(engine.outcome);
}

SimOutcome run_quiet(const TopologyConfig& topology, const SimTimings& timings,
                     double dropFraction) {
    Engine engine(topology, nullptr, timings, dropFraction);
    engine.run();
    return std::move(engine.outcome);
}

} // namespace cufh::sim
