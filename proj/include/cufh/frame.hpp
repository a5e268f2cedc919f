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

#ifndef CUFH_FRAME_HPP
#define CUFH_FRAME_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cufh/bytes.hpp"
#include "cufh/mac_address.hpp"

namespace cufh {

constexpr uint16_t kEthertypeVlan = 0x8100;
constexpr uint16_t kEthertypeEcpri = 0xAEFE;

/// Minimum Ethernet frame length excluding the frame check sequence.
constexpr std::size_t kMinFrameBytes = 60;
/// Frame check sequence appended by the MAC on the wire.
constexpr std::size_t kFcsBytes = 4;
constexpr std::size_t kMaxPayloadBytes = 1500;

/// 802.1Q tag control information.
struct VlanTag {
    uint8_t pcp = 0;    // 3-bit priority
    bool dei = false;
    uint16_t vid = 0;   // 12-bit VLAN id, valid range [0, 4094]

    uint16_t tci() const noexcept {
        return static_cast<uint16_t>((pcp & 0x7) << 13 | (dei ? 1 : 0) << 12 | (vid & 0xFFF));
    }
    static VlanTag from_tci(uint16_t tci) noexcept {
        return VlanTag{static_cast<uint8_t>(tci >> 13), ((tci >> 12) & 1) != 0,
                       static_cast<uint16_t>(tci & 0xFFF)};
    }
    bool operator==(const VlanTag&) const = default;
};

/// An Ethernet II frame, the unit forged, transmitted, and dissected.
/// Payload is opaque at this layer.
struct EthFrame {
    MacAddress dst{};
    MacAddress src{};
    std::optional<VlanTag> vlan;
    uint16_t ethertype = kEthertypeEcpri;
    std::vector<uint8_t> payload;
};

/// Serializes to wire bytes excluding the FCS; zero-pads to the 60-byte
/// minimum. Throws CodecError when the payload exceeds the 1500-byte MTU or
/// the VLAN id is out of range.
std::vector<uint8_t> encode_frame(const EthFrame& frame);

/// Parses dst/src/optional 802.1Q tag/ethertype; the remainder (including
/// any pad) becomes the payload. Throws CodecError with the failing offset
/// on truncated input.
EthFrame decode_frame(std::span<const uint8_t> bytes);

/// L2 wire length including the FCS, as counted by the volume and rate
/// arithmetic throughout this toolkit.
inline std::size_t wire_length_of_encoded(std::size_t encodedLen) {
    return (encodedLen < kMinFrameBytes ? kMinFrameBytes : encodedLen) + kFcsBytes;
}

/// True when the frames match ignoring trailing zero padding of the payload.
bool frames_equal_modulo_padding(const EthFrame& a, const EthFrame& b);

/// Byte offsets of the fields that live edits patch in place.
constexpr std::size_t kDstOffset = 0;
constexpr std::size_t kSrcOffset = 6;

} // namespace cufh

#endif
