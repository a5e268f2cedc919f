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

#include "cufh/frame.hpp"

#include <algorithm>

namespace cufh {

std::vector<uint8_t> encode_frame(const EthFrame& frame) {
    if (frame.payload.size() > kMaxPayloadBytes)
        throw CodecError("payload exceeds 1500-byte MTU", frame.payload.size());
    if (frame.vlan && frame.vlan->vid > 4094)
        throw CodecError("VLAN id out of range [0, 4094]", 14);

    ByteWriter w;
    w.bytes(frame.dst.octets);
    w.bytes(frame.src.octets);
    if (frame.vlan) {
        w.u16be(kEthertypeVlan);
        w.u16be(frame.vlan->tci());
    }
    w.u16be(frame.ethertype);
    w.bytes(frame.payload);
    if (w.size() < kMinFrameBytes) w.zeros(kMinFrameBytes - w.size());
    return w.take();
}

EthFrame decode_frame(std::span<const uint8_t> bytes) {
    ByteReader r(bytes);
    EthFrame f;
    std::copy_n(r.bytes(6, "destination MAC").begin(), 6, f.dst.octets.begin());
    std::copy_n(r.bytes(6, "source MAC").begin(), 6, f.src.octets.begin());
    uint16_t type = r.u16be();
    if (type == kEthertypeVlan) {
        f.vlan = VlanTag::from_tci(r.u16be());
        type = r.u16be();
    }
    f.ethertype = type;
    auto rest = r.rest();
    f.payload.assign(rest.begin(), rest.end());
    return f;
}

bool frames_equal_modulo_padding(const EthFrame& a, const EthFrame& b) {
    if (a.dst != b.dst || a.src != b.src || a.vlan != b.vlan || a.ethertype != b.ethertype)
        return false;
    const auto& shorter = a.payload.size() <= b.payload.size() ? a.payload : b.payload;
    const auto& longer = a.payload.size() <= b.payload.size() ? b.payload : a.payload;
    if (!std::equal(shorter.begin(), shorter.end(), longer.begin())) return false;
    return std::all_of(longer.begin() + static_cast<std::ptrdiff_t>(shorter.size()),
                       longer.end(), [](uint8_t v) { return v == 0; });
}

} // namespace cufh
