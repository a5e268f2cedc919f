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

#ifndef CUFH_UPLANE_HPP
#define CUFH_UPLANE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cufh/bytes.hpp"
#include "cufh/cplane.hpp" // DataDirection
#include "cufh/ecpri.hpp"

namespace cufh {

constexpr unsigned kResourceElementsPerPrb = 12;

/// Uncompressed 16-bit in-phase/quadrature sample pair.
struct IQSample {
    int16_t i = 0;
    int16_t q = 0;

    bool operator==(const IQSample&) const = default;
};

/// U-Plane data section:
///   bytes 0-2: sectionId(12) | rb(1) | symInc(1) | startPrbu(10)
///   byte 3:    numPrbu
///   then 12 * numPrbu IQ samples at 4 bytes each (16-bit I, 16-bit Q, BE).
///
/// numPrbu = 0 means "all PRBs"; forged packets never use it, and the decoder
/// accepts it only on the final section (consuming the remaining payload).
struct USection {
    uint16_t sectionId = 0;
    bool rb = false;
    bool symInc = false;
    uint16_t startPrbu = 0;
    uint8_t numPrbu = 0;
    std::vector<IQSample> iq;

    bool operator==(const USection&) const = default;
};

/// U-Plane message: 4-byte application header followed by sections.
///
///   byte 0:    dataDirection(1) | payloadVersion(3) | filterIndex(4)
///   byte 1:    frameId
///   bytes 2-3: subframeId(4) | slotId(6) | symbolId(6)
struct UPlaneMessage {
    DataDirection dataDirection = DataDirection::Downlink;
    uint8_t payloadVersion = 1;
    uint8_t filterIndex = 0;
    uint8_t frameId = 0;
    uint8_t subframeId = 0;
    uint8_t slotId = 0;
    uint8_t symbolId = 0;
    std::vector<USection> sections; // at least one

    uint16_t pcid = 0;
    SeqId seq{};

    bool operator==(const UPlaneMessage&) const = default;
};

/// Serializes the full eCPRI PDU (msgType 0, payloadSize computed).
/// Throws CodecError when a section's IQ count differs from 12 * numPrbu or
/// sections are empty.
std::vector<uint8_t> encode_uplane(const UPlaneMessage& msg);

/// Exact inverse of encode_uplane.
UPlaneMessage decode_uplane(std::span<const uint8_t> ecpriPdu);

std::size_t uplane_app_payload_size(const UPlaneMessage& msg);

} // namespace cufh

#endif
