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

#ifndef CUFH_SIM_SWITCH_MODEL_HPP
#define CUFH_SIM_SWITCH_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>

#include "cufh/mac_address.hpp"

namespace cufh::sim {

struct ForwardDecision {
    enum class Action { Deliver, Flood, Drop };
    Action action = Action::Flood;
    int egressPort = -1; // Deliver only

    bool operator==(const ForwardDecision&) const = default;
};

/// Learning switch with aging. Destination lookup happens before source
/// learning, so a frame's own learning affects only later frames. Unknown
/// and broadcast destinations flood; a destination resolving to its ingress
/// port is dropped (no hairpin).
///
/// Addresses may be pinned to a home port (port-security style): learning
/// for a pinned address is ignored unless it arrives on that port.
class SwitchModel {
public:
    explicit SwitchModel(double agingSeconds, double tickSeconds = 0.1)
        : agingTicks_(agingSeconds <= 0 ? 0 : static_cast<int64_t>(agingSeconds / tickSeconds)),
          tickSeconds_(tickSeconds) {}

    void pin(const MacAddress& addr, int homePort) { pinned_[addr] = homePort; }

    /// Advances the aging clock by one tick.
    void tick() { ++now_; }
    int64_t now() const noexcept { return now_; }
    double tick_seconds() const noexcept { return tickSeconds_; }

    ForwardDecision process(int ingressPort, const MacAddress& src, const MacAddress& dst);

    /// Aging-aware lookup without learning.
    std::optional<int> lookup(const MacAddress& addr) const;

    std::size_t table_size() const noexcept { return table_.size(); }

private:
    struct Entry {
        int port;
        int64_t lastSeenTick;
    };

    bool expired(const Entry& e) const noexcept {
        return agingTicks_ > 0 && now_ - e.lastSeenTick > agingTicks_;
    }

    std::map<MacAddress, Entry> table_;
    std::map<MacAddress, int> pinned_;
    int64_t agingTicks_;
    double tickSeconds_;
    int64_t now_ = 0;
};

} // namespace cufh::sim

#endif
