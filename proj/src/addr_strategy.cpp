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

#include "cufh/addr_strategy.hpp"

#include <algorithm>

namespace cufh {

namespace {

// splitmix64: stateless mix so draws are independent per (seed, index).
uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

MacAddress random_mac(uint64_t seed, uint64_t index, uint64_t attempt) {
    uint64_t v = mix64(seed ^ mix64(index + (attempt << 48)));
    MacAddress mac;
    for (int i = 0; i < 6; ++i) mac.octets[static_cast<std::size_t>(i)] =
        static_cast<uint8_t>(v >> (8 * i));
    mac.octets[0] = static_cast<uint8_t>((mac.octets[0] | 0x02) & ~0x01); // local, unicast
    return mac;
}

} // namespace

std::string SourceMacStrategy::to_string() const {
    switch (kind) {
        case Kind::SpoofedPeer: return "spoof:" + mac.to_string();
        case Kind::RandomPerPacket: return "random:" + std::to_string(seed);
        case Kind::Broadcast: return "broadcast";
        case Kind::SameAsDestination: return "same-as-dst";
        case Kind::Fixed: return "fixed:" + mac.to_string();
    }
    return "fixed:" + mac.to_string();
}

std::optional<SourceMacStrategy> SourceMacStrategy::parse(const std::string& text) {
    SourceMacStrategy s;
    auto macArg = [&](std::size_t prefixLen) -> std::optional<MacAddress> {
        return MacAddress::parse(text.substr(prefixLen));
    };
    if (text == "broadcast") {
        s.kind = Kind::Broadcast;
        return s;
    }
    if (text == "same-as-dst") {
        s.kind = Kind::SameAsDestination;
        return s;
    }
    if (text == "random") {
        s.kind = Kind::RandomPerPacket;
        return s;
    }
    if (text.rfind("random:", 0) == 0) {
        s.kind = Kind::RandomPerPacket;
        try {
            s.seed = std::stoull(text.substr(7));
        } catch (...) {
            return std::nullopt;
        }
        return s;
    }
    if (text.rfind("spoof:", 0) == 0) {
        auto mac = macArg(6);
        if (!mac) return std::nullopt;
        s.kind = Kind::SpoofedPeer;
        s.mac = *mac;
        return s;
    }
    if (text.rfind("fixed:", 0) == 0) {
        auto mac = macArg(6);
        if (!mac) return std::nullopt;
        s.kind = Kind::Fixed;
        s.mac = *mac;
        return s;
    }
    return std::nullopt;
}

MacAddress source_for(const SourceMacStrategy& strategy, const MacAddress& dst,
                      uint64_t packetIndex, std::span<const MacAddress> avoid) {
    switch (strategy.kind) {
        case SourceMacStrategy::Kind::SpoofedPeer:
        case SourceMacStrategy::Kind::Fixed:
            return strategy.mac;
        case SourceMacStrategy::Kind::Broadcast:
            return MacAddress::broadcast();
        case SourceMacStrategy::Kind::SameAsDestination:
            return dst;
        case SourceMacStrategy::Kind::RandomPerPacket: {
            for (uint64_t attempt = 0;; ++attempt) {
                MacAddress mac = random_mac(strategy.seed, packetIndex, attempt);
                bool clash = mac == dst || mac.is_broadcast() ||
                             std::find(avoid.begin(), avoid.end(), mac) != avoid.end();
                if (!clash) return mac;
            }
        }
    }
    return strategy.mac;
}

} // namespace cufh
