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

#include "cufh/cplane.hpp"

namespace cufh {

namespace {

constexpr std::size_t kAppHeaderBytes = 8;
constexpr std::size_t kSectionBytes = 8;
constexpr uint8_t kExtTypeBfw = 1;

// 4-bit width nibble encodes 16 as 0.
uint8_t width_to_nibble(uint8_t width) { return static_cast<uint8_t>(width & 0xF); }
uint8_t nibble_to_width(uint8_t nibble) { return nibble == 0 ? 16 : nibble; }

std::size_t ext1_encoded_bytes(const BfwExt1& ext) {
    std::size_t weightBits = 2u * ext.bfwIqWidth * ext.weights.size();
    std::size_t raw = 3 + (weightBits + 7) / 8;
    return (raw + 3) / 4 * 4;
}

void encode_ext1(ByteWriter& w, const BfwExt1& ext) {
    if (ext.bfwIqWidth < 1 || ext.bfwIqWidth > 16)
        throw CodecError("bfwIqWidth out of range [1, 16]", w.size());
    std::size_t total = ext1_encoded_bytes(ext);
    if (total / 4 > 0xFF)
        throw CodecError("extension exceeds 255-word extLen limit", w.size());
    w.u8(kExtTypeBfw); // ef = 0 (last extension), extType = 1
    w.u8(static_cast<uint8_t>(total / 4));
    w.u8(static_cast<uint8_t>(width_to_nibble(ext.bfwIqWidth) << 4 | (ext.bfwCompMeth & 0xF)));
    BitWriter bits;
    uint32_t mask = ext.bfwIqWidth == 32 ? ~0u : ((1u << ext.bfwIqWidth) - 1u);
    for (auto [i, q] : ext.weights) {
        bits.put(static_cast<uint32_t>(i) & mask, ext.bfwIqWidth);
        bits.put(static_cast<uint32_t>(q) & mask, ext.bfwIqWidth);
    }
    w.bytes(bits.bytes());
    w.zeros(total - 3 - bits.bytes().size());
}

BfwExt1 decode_ext1(ByteReader& r, CodecWarnings* warnings) {
    std::size_t extStart = r.offset();
    uint8_t b0 = r.u8();
    uint8_t extType = b0 & 0x7F;
    if (extType != kExtTypeBfw)
        throw CodecError("unsupported section extension type " + std::to_string(extType),
                         extStart);
    if ((b0 & 0x80) != 0)
        throw CodecError("chained section extensions not supported", extStart);
    uint8_t extLen = r.u8();
    if (extLen < 1) throw CodecError("extension length below minimum of 1 word", extStart + 1);
    uint8_t b2 = r.u8();
    BfwExt1 ext;
    ext.bfwIqWidth = nibble_to_width(b2 >> 4);
    ext.bfwCompMeth = b2 & 0xF;

    std::size_t bodyBytes = static_cast<std::size_t>(extLen) * 4 - 3;
    auto body = r.bytes(bodyBytes, "extension weights");
    BitReader bits(body);
    std::size_t count = (bodyBytes * 8) / (2u * ext.bfwIqWidth);
    ext.weights.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        int32_t i = sign_extend(bits.get(ext.bfwIqWidth), ext.bfwIqWidth);
        int32_t q = sign_extend(bits.get(ext.bfwIqWidth), ext.bfwIqWidth);
        ext.weights.emplace_back(static_cast<int16_t>(i), static_cast<int16_t>(q));
    }
    bool padClean = true;
    while (bits.bits_available() > 0)
        if (bits.get(1) != 0) padClean = false;
    if (!padClean && warnings)
        warnings->push_back("nonzero pad bits in section extension at offset " +
                            std::to_string(extStart));
    return ext;
}

void encode_section(ByteWriter& w, const CSection1& s) {
    if (s.numSymbol < 1) throw CodecError("numSymbol must be >= 1", w.size());
    uint32_t first24 = (static_cast<uint32_t>(s.sectionId & 0xFFF) << 12) |
                       (s.rb ? 1u << 11 : 0) | (s.symInc ? 1u << 10 : 0) |
                       (s.startPrbc & 0x3FF);
    w.u8(static_cast<uint8_t>(first24 >> 16));
    w.u16be(static_cast<uint16_t>(first24 & 0xFFFF));
    w.u8(s.numPrbc);
    w.u16be(static_cast<uint16_t>((s.reMask & 0xFFF) << 4 | (s.numSymbol & 0xF)));
    w.u16be(static_cast<uint16_t>((s.extension ? 0x8000 : 0) | (s.beamId & 0x7FFF)));
    if (s.extension) encode_ext1(w, *s.extension);
}

CSection1 decode_section(ByteReader& r, CodecWarnings* warnings) {
    CSection1 s;
    uint32_t first24 = (static_cast<uint32_t>(r.u8()) << 16) | r.u16be();
    s.sectionId = static_cast<uint16_t>(first24 >> 12);
    s.rb = (first24 & (1u << 11)) != 0;
    s.symInc = (first24 & (1u << 10)) != 0;
    s.startPrbc = static_cast<uint16_t>(first24 & 0x3FF);
    s.numPrbc = r.u8();
    uint16_t w45 = r.u16be();
    s.reMask = static_cast<uint16_t>(w45 >> 4);
    s.numSymbol = static_cast<uint8_t>(w45 & 0xF);
    uint16_t w67 = r.u16be();
    bool ef = (w67 & 0x8000) != 0;
    s.beamId = static_cast<uint16_t>(w67 & 0x7FFF);
    if (ef) s.extension = decode_ext1(r, warnings);
    return s;
}

} // namespace

std::size_t canonical_weight_count(uint8_t bfwIqWidth, std::size_t encodedPairs) {
    BfwExt1 probe;
    probe.bfwIqWidth = bfwIqWidth;
    probe.weights.resize(encodedPairs);
    std::size_t bodyBytes = ext1_encoded_bytes(probe) - 3;
    return (bodyBytes * 8) / (2u * bfwIqWidth);
}

std::size_t cplane_app_payload_size(const CPlaneMessage& msg) {
    std::size_t n = kAppHeaderBytes;
    for (const auto& s : msg.sections) {
        n += kSectionBytes;
        if (s.extension) n += ext1_encoded_bytes(*s.extension);
    }
    return n;
}

std::vector<uint8_t> encode_cplane(const CPlaneMessage& msg) {
    if (msg.sectionType != 1)
        throw CodecError("unsupported section type " + std::to_string(msg.sectionType), 0);
    if (msg.sections.empty()) throw CodecError("message carries no sections", 0);
    if (msg.sections.size() > 0xFF)
        throw CodecError("more than 255 sections", 0);

    std::size_t appSize = cplane_app_payload_size(msg);
    if (appSize > 0xFFFF) throw CodecError("application payload exceeds 16-bit size", 0);

    ByteWriter w;
    EcpriHeader ec;
    ec.msgType = kEcpriMsgTypeRtControl;
    ec.payloadSize = static_cast<uint16_t>(appSize);
    ec.eaxcId = msg.rtcid;
    ec.seq = msg.seq;
    encode_ecpri_header(w, ec);

    w.u8(static_cast<uint8_t>((msg.dataDirection == DataDirection::Downlink ? 0x80 : 0) |
                              (msg.payloadVersion & 0x7) << 4 | (msg.filterIndex & 0xF)));
    w.u8(msg.frameId);
    w.u16be(static_cast<uint16_t>((msg.subframeId & 0xF) << 12 | (msg.slotId & 0x3F) << 6 |
                                  (msg.startSymbolId & 0x3F)));
    w.u8(static_cast<uint8_t>(msg.sections.size()));
    w.u8(msg.sectionType);
    w.u8(static_cast<uint8_t>(width_to_nibble(msg.udIqWidth) << 4 | (msg.udCompMeth & 0xF)));
    w.u8(0); // reserved

    for (const auto& s : msg.sections) encode_section(w, s);
    return w.take();
}

CPlaneMessage decode_cplane(std::span<const uint8_t> ecpriPdu, CodecWarnings* warnings) {
    ByteReader r(ecpriPdu);
    EcpriHeader ec = decode_ecpri_header(r);
    if (ec.msgType != kEcpriMsgTypeRtControl)
        throw CodecError("eCPRI message type " + std::to_string(ec.msgType) +
                             " is not real-time control",
                         1);
    if (ec.payloadSize > r.remaining())
        throw CodecError("eCPRI payloadSize exceeds available bytes", r.offset());
    ByteReader app(ecpriPdu.subspan(kEcpriHeaderBytes, ec.payloadSize));

    CPlaneMessage m;
    m.rtcid = ec.eaxcId;
    m.seq = ec.seq;

    uint8_t b0 = app.u8();
    m.dataDirection = (b0 & 0x80) ? DataDirection::Downlink : DataDirection::Uplink;
    m.payloadVersion = (b0 >> 4) & 0x7;
    m.filterIndex = b0 & 0xF;
    m.frameId = app.u8();
    uint16_t w23 = app.u16be();
    m.subframeId = static_cast<uint8_t>(w23 >> 12);
    m.slotId = static_cast<uint8_t>((w23 >> 6) & 0x3F);
    m.startSymbolId = static_cast<uint8_t>(w23 & 0x3F);
    uint8_t numberOfSections = app.u8();
    m.sectionType = app.u8();
    if (m.sectionType != 1)
        throw CodecError("unsupported section type " + std::to_string(m.sectionType),
                         kEcpriHeaderBytes + 5);
    uint8_t udCompHdr = app.u8();
    m.udIqWidth = nibble_to_width(udCompHdr >> 4);
    m.udCompMeth = udCompHdr & 0xF;
    app.u8(); // reserved

    m.sections.reserve(numberOfSections);
    for (unsigned i = 0; i < numberOfSections; ++i) m.sections.push_back(decode_section(app, warnings));
    if (app.remaining() != 0)
        throw CodecError("trailing bytes after last section", kEcpriHeaderBytes + app.offset());
    return m;
}

} // namespace cufh
