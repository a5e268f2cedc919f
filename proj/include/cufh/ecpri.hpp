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

#ifndef CUFH_ECPRI_HPP
#define CUFH_ECPRI_HPP

#include <cstdint>

#include "cufh/bytes.hpp"

namespace cufh {

/// eCPRI message types carried by this toolkit.
constexpr uint8_t kEcpriMsgTypeIq = 0;        // U-Plane IQ data
constexpr uint8_t kEcpriMsgTypeRtControl = 2; // C-Plane real-time control

constexpr std::size_t kEcpriHeaderBytes = 8;

/// Sequence byte pair: sequenceId counter plus fragmentation bits.
/// Unfragmented messages carry lastFragment = 1, subSequenceId = 0;
/// fragmentation is parsed but never generated.
struct SeqId {
    uint8_t sequenceId = 0;
    bool lastFragment = true;  // eBit
    uint8_t subSequenceId = 0; // 7-bit

    bool operator==(const SeqId&) const = default;
};

/// Common 8-byte eCPRI transport header preceding every fronthaul message.
///
///   byte 0: version(4) | reserved(3) | concatenation(1)
///   byte 1: message type
///   bytes 2-3: payload size (bytes following this header)
///   bytes 4-5: eAxC stream id (ecpriRtcid for C-Plane, ecpriPcid for U-Plane)
///   byte 6: sequence id
///   byte 7: eBit(1) | subSequenceId(7)
struct EcpriHeader {
    uint8_t version = 1;
    uint8_t reserved = 0;      // 3-bit
    bool concatenation = false;
    uint8_t msgType = 0;
    uint16_t payloadSize = 0;
    uint16_t eaxcId = 0;
    SeqId seq{};

    bool operator==(const EcpriHeader&) const = default;
};

void encode_ecpri_header(ByteWriter& w, const EcpriHeader& h);
EcpriHeader decode_ecpri_header(ByteReader& r);

} // namespace cufh

#endif
