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

#include "cufh/classify.hpp"

#include "cufh/ecpri.hpp"

namespace cufh {

namespace {

// Returns the offset of the eCPRI header within the frame, or -1 when the
// frame is not eCPRI-over-Ethernet.
int ecpri_offset(std::span<const uint8_t> b) noexcept {
    if (b.size() < 14) return -1;
    std::size_t off = 12;
    uint16_t type = static_cast<uint16_t>(b[off] << 8 | b[off + 1]);
    off += 2;
    if (type == kEthertypeVlan) {
        if (b.size() < off + 4) return -1;
        type = static_cast<uint16_t>(b[off + 2] << 8 | b[off + 3]);
        off += 4;
    }
    if (type != kEthertypeEcpri) return -1;
    return static_cast<int>(off);
}

} // namespace

std::string_view to_string(FrameClass c) noexcept {
    switch (c) {
        case FrameClass::CPlaneDL: return "cplane-dl";
        case FrameClass::CPlaneUL: return "cplane-ul";
        case FrameClass::UPlaneDL: return "uplane-dl";
        case FrameClass::UPlaneUL: return "uplane-ul";
        case FrameClass::Other: return "other";
    }
    return "other";
}

std::optional<FrameClass> frame_class_from_string(std::string_view s) noexcept {
    if (s == "cplane-dl") return FrameClass::CPlaneDL;
    if (s == "cplane-ul") return FrameClass::CPlaneUL;
    if (s == "uplane-dl") return FrameClass::UPlaneDL;
    if (s == "uplane-ul") return FrameClass::UPlaneUL;
    if (s == "other") return FrameClass::Other;
    return std::nullopt;
}

FrameClass classify(std::span<const uint8_t> b) noexcept {
    int off = ecpri_offset(b);
    if (off < 0) return FrameClass::Other;
    std::size_t ecpri = static_cast<std::size_t>(off);
    // Need the eCPRI header plus the first application byte for the
    // direction bit.
    if (b.size() < ecpri + kEcpriHeaderBytes + 1) return FrameClass::Other;
    uint8_t msgType = b[ecpri + 1];
    bool downlink = (b[ecpri + kEcpriHeaderBytes] & 0x80) != 0;
    if (msgType == kEcpriMsgTypeRtControl)
        return downlink ? FrameClass::CPlaneDL : FrameClass::CPlaneUL;
    if (msgType == kEcpriMsgTypeIq)
        return downlink ? FrameClass::UPlaneDL : FrameClass::UPlaneUL;
    return FrameClass::Other;
}

FrameClass classify(const EthFrame& frame) noexcept {
    if (frame.ethertype != kEthertypeEcpri) return FrameClass::Other;
    if (frame.payload.size() < kEcpriHeaderBytes + 1) return FrameClass::Other;
    uint8_t msgType = frame.payload[1];
    bool downlink = (frame.payload[kEcpriHeaderBytes] & 0x80) != 0;
    if (msgType == kEcpriMsgTypeRtControl)
        return downlink ? FrameClass::CPlaneDL : FrameClass::CPlaneUL;
    if (msgType == kEcpriMsgTypeIq)
        return downlink ? FrameClass::UPlaneDL : FrameClass::UPlaneUL;
    return FrameClass::Other;
}

std::optional<FlowKeyPeek> peek_flow_key(std::span<const uint8_t> b) noexcept {
    int off = ecpri_offset(b);
    if (off < 0) return std::nullopt;
    std::size_t ecpri = static_cast<std::size_t>(off);
    if (b.size() < ecpri + kEcpriHeaderBytes + 1) return std::nullopt;
    FrameClass cls = classify(b);
    if (cls == FrameClass::Other) return std::nullopt;
    FlowKeyPeek peek;
    peek.cls = cls;
    peek.eaxcId = static_cast<uint16_t>(b[ecpri + 4] << 8 | b[ecpri + 5]);
    peek.sequenceId = b[ecpri + 6];
    return peek;
}

} // namespace cufh
