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

#include "cufh/sim/switch_model.hpp"

namespace cufh::sim {

std::optional<int> SwitchModel::lookup(const MacAddress& addr) const {
    auto it = table_.find(addr);
    if (it == table_.end() || expired(it->second)) return std::nullopt;
    return it->second.port;
}

ForwardDecision SwitchModel::process(int ingressPort, const MacAddress& src,
                                     const MacAddress& dst) {
    ForwardDecision decision;
    if (dst.is_broadcast() || dst.is_multicast()) {
        decision.action = ForwardDecision::Action::Flood;
    } else if (auto port = lookup(dst)) {
        if (*port == ingressPort) {
            decision.action = ForwardDecision::Action::Drop;
        } else {
            decision.action = ForwardDecision::Action::Deliver;
            decision.egressPort = *port;
        }
    } else {
        decision.action = ForwardDecision::Action::Flood;
    }

    // Learn after the lookup. Group addresses are never learned; pinned
    // addresses only refresh from their home port.
    if (!src.is_multicast()) {
        auto pin = pinned_.find(src);
        if (pin == pinned_.end() || pin->second == ingressPort)
            table_[src] = Entry{ingressPort, now_};
    }
    return decision;
}

} // namespace cufh::sim
