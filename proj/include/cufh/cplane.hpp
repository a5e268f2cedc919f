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

#ifndef CUFH_CPLANE_HPP
#define CUFH_CPLANE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cufh/bytes.hpp"
#include "cufh/ecpri.hpp"

namespace cufh {

enum class DataDirection : uint8_t { Uplink = 0, Downlink = 1 };

/// Section extension type 1: beamforming weight IQ values.
///
///   byte 0: ef(1) | extType(7) = 1
///   byte 1: extLen in 4-byte words, covering the whole extension
///   byte 2: bfwIqWidth(4) | bfwCompMeth(4)
///   then ceil(2 * width * count / 8) bytes of MSB-first packed weights,
///   zero-padded to the next 4-byte boundary.
///
/// Width is stored logically (1..16); the 4-bit wire nibble encodes 16 as 0.
///
/// The wire format carries no weight count: decode derives it from extLen
/// and bfwIqWidth, so trailing all-zero pairs that fit inside the word
/// padding are part of the canonical message. canonical_weight_count()
/// gives the count decode will reconstruct for a given encoding.
struct BfwExt1 {
    uint8_t bfwIqWidth = 16;
    uint8_t bfwCompMeth = 0;
    std::vector<std::pair<int16_t, int16_t>> weights; // (bfwI, bfwQ)

    bool operator==(const BfwExt1&) const = default;
};

/// Pairs a decoder recovers from the wire bytes this extension encodes to.
std::size_t canonical_weight_count(uint8_t bfwIqWidth, std::size_t encodedPairs);

/// Section type 1 body (8 bytes), optionally followed by extensions.
///
///   bytes 0-2: sectionId(12) | rb(1) | symInc(1) | startPrbc(10)
///   byte 3:    numPrbc
///   bytes 4-5: reMask(12) | numSymbol(4)
///   bytes 6-7: ef(1) | beamId(15)
struct CSection1 {
    uint16_t sectionId = 0; // 12-bit
    bool rb = false;
    bool symInc = false;
    uint16_t startPrbc = 0; // 10-bit
    uint8_t numPrbc = 0;
    uint16_t reMask = 0xFFF; // 12-bit
    uint8_t numSymbol = 14;  // 4-bit, >= 1
    uint16_t beamId = 0;     // 15-bit
    std::optional<BfwExt1> extension; // ef bit derives from presence

    bool operator==(const CSection1&) const = default;
};

/// C-Plane section type 1 message: radio application header (8 bytes)
/// followed by sections. The eCPRI stream id and sequence travel with the
/// message so encode/decode cover the full eCPRI PDU.
///
/// Radio application header:
///   byte 0:    dataDirection(1) | payloadVersion(3) | filterIndex(4)
///   byte 1:    frameId
///   bytes 2-3: subframeId(4) | slotId(6) | startSymbolId(6)
///   byte 4:    numberOfSections
///   byte 5:    sectionType
///   byte 6:    udCompHdr = udIqWidth(4) | udCompMeth(4); width 16 encodes as 0
///   byte 7:    reserved
struct CPlaneMessage {
    DataDirection dataDirection = DataDirection::Downlink;
    uint8_t payloadVersion = 1; // 3-bit
    uint8_t filterIndex = 0;    // 4-bit
    uint8_t frameId = 0;
    uint8_t subframeId = 0;   // 4-bit
    uint8_t slotId = 0;       // 6-bit
    uint8_t startSymbolId = 0; // 6-bit
    uint8_t sectionType = 1;
    uint8_t udIqWidth = 16;  // logical 1..16
    uint8_t udCompMeth = 0;
    std::vector<CSection1> sections;

    uint16_t rtcid = 0;
    SeqId seq{};

    bool operator==(const CPlaneMessage&) const = default;
};

/// Serializes the full eCPRI PDU (msgType 2, payloadSize computed).
/// Throws CodecError for sectionType != 1 or empty sections.
std::vector<uint8_t> encode_cplane(const CPlaneMessage& msg);

/// Exact inverse of encode_cplane. Nonzero extension pad bits are reported
/// through `warnings` when provided, not treated as errors.
CPlaneMessage decode_cplane(std::span<const uint8_t> ecpriPdu,
                            CodecWarnings* warnings = nullptr);

/// Application payload length (after the eCPRI header) for a given message.
std::size_t cplane_app_payload_size(const CPlaneMessage& msg);

} // namespace cufh

#endif
