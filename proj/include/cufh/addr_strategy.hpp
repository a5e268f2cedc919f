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

#ifndef CUFH_ADDR_STRATEGY_HPP
#define CUFH_ADDR_STRATEGY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "cufh/mac_address.hpp"

namespace cufh {

/// Source-MAC selection for attack traffic. CLI spelling:
///   spoof:<mac> | random[:seed] | broadcast | same-as-dst | fixed:<mac>
struct SourceMacStrategy {
    enum class Kind : uint8_t {
        SpoofedPeer,      // a victim peer's address
        RandomPerPacket,  // fresh seeded pseudo-random unicast per packet
        Broadcast,
        SameAsDestination,
        Fixed,            // any literal address
    };

    Kind kind = Kind::Fixed;
    MacAddress mac{};   // SpoofedPeer / Fixed
    uint64_t seed = 0;  // RandomPerPacket

    bool varies_per_packet() const noexcept { return kind == Kind::RandomPerPacket; }

    std::string to_string() const;
    static std::optional<SourceMacStrategy> parse(const std::string& text);

    bool operator==(const SourceMacStrategy&) const = default;
};

/// Deterministic source address for packet `packetIndex`. Random draws are
/// counter-based: unicast, locally administered, and re-drawn on collision
/// with broadcast, the destination, or any address in `avoid`.
MacAddress source_for(const SourceMacStrategy& strategy, const MacAddress& dst,
                      uint64_t packetIndex, std::span<const MacAddress> avoid = {});

} // namespace cufh

#endif
