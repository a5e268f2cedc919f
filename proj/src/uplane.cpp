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

#include "cufh/uplane.hpp"

namespace cufh {

namespace {

constexpr std::size_t kAppHeaderBytes = 4;
constexpr std::size_t kSectionHeaderBytes = 4;
constexpr std::size_t kSampleBytes = 4;

} // namespace

std::size_t uplane_app_payload_size(const UPlaneMessage& msg) {
    std::size_t n = kAppHeaderBytes;
    for (const auto& s : msg.sections) n += kSectionHeaderBytes + s.iq.size() * kSampleBytes;
    return n;
}

std::vector<uint8_t> encode_uplane(const UPlaneMessage& msg) {
    if (msg.sections.empty()) throw CodecError("message carries no sections", 0);
    for (const auto& s : msg.sections) {
        if (s.numPrbu == 0)
            throw CodecError("numPrbu = 0 (all PRBs) is never forged", 0);
        if (s.iq.size() != kResourceElementsPerPrb * s.numPrbu)
            throw CodecError("IQ sample count does not match 12 * numPrbu", 0);
    }
    std::size_t appSize = uplane_app_payload_size(msg);
    if (appSize > 0xFFFF) throw CodecError("application payload exceeds 16-bit size", 0);

    ByteWriter w;
    EcpriHeader ec;
    ec.msgType = kEcpriMsgTypeIq;
    ec.payloadSize = static_cast<uint16_t>(appSize);
    ec.eaxcId = msg.pcid;
    ec.seq = msg.seq;
    encode_ecpri_header(w, ec);

    w.u8(static_cast<uint8_t>((msg.dataDirection == DataDirection::Downlink ? 0x80 : 0) |
                              (msg.payloadVersion & 0x7) << 4 | (msg.filterIndex & 0xF)));
    w.u8(msg.frameId);
    w.u16be(static_cast<uint16_t>((msg.subframeId & 0xF) << 12 | (msg.slotId & 0x3F) << 6 |
                                  (msg.symbolId & 0x3F)));

    for (const auto& s : msg.sections) {
        uint32_t first24 = (static_cast<uint32_t>(s.sectionId & 0xFFF) << 12) |
                           (s.rb ? 1u << 11 : 0) | (s.symInc ? 1u << 10 : 0) |
                           (s.startPrbu & 0x3FF);
        w.u8(static_cast<uint8_t>(first24 >> 16));
        w.u16be(static_cast<uint16_t>(first24 & 0xFFFF));
        w.u8(s.numPrbu);
        for (const auto& sample : s.iq) {
            w.u16be(static_cast<uint16_t>(sample.i));
            w.u16be(static_cast<uint16_t>(sample.q));
        }
    }
    return w.take();
}

UPlaneMessage decode_uplane(std::span<const uint8_t> ecpriPdu) {
    ByteReader r(ecpriPdu);
    EcpriHeader ec = decode_ecpri_header(r);
    if (ec.msgType != kEcpriMsgTypeIq)
        throw CodecError("eCPRI message type " + std::to_string(ec.msgType) + " is not IQ data",
                         1);
    if (ec.payloadSize > r.remaining())
        throw CodecError("eCPRI payloadSize exceeds available bytes", r.offset());
    ByteReader app(ecpriPdu.subspan(kEcpriHeaderBytes, ec.payloadSize));

    UPlaneMessage m;
    m.pcid = ec.eaxcId;
    m.seq = ec.seq;

    uint8_t b0 = app.u8();
    m.dataDirection = (b0 & 0x80) ? DataDirection::Downlink : DataDirection::Uplink;
    m.payloadVersion = (b0 >> 4) & 0x7;
    m.filterIndex = b0 & 0xF;
    m.frameId = app.u8();
    uint16_t w23 = app.u16be();
    m.subframeId = static_cast<uint8_t>(w23 >> 12);
    m.slotId = static_cast<uint8_t>((w23 >> 6) & 0x3F);
    m.symbolId = static_cast<uint8_t>(w23 & 0x3F);

    if (app.remaining() == 0) throw CodecError("message carries no sections", app.offset());
    while (app.remaining() > 0) {
        USection s;
        uint32_t first24 = (static_cast<uint32_t>(app.u8()) << 16) | app.u16be();
        s.sectionId = static_cast<uint16_t>(first24 >> 12);
        s.rb = (first24 & (1u << 11)) != 0;
        s.symInc = (first24 & (1u << 10)) != 0;
        s.startPrbu = static_cast<uint16_t>(first24 & 0x3FF);
        s.numPrbu = app.u8();
        std::size_t sampleCount;
        if (s.numPrbu == 0) {
            // "All PRBs": only meaningful as the final section; the sample
            // count is whatever remains.
            if (app.remaining() % kSampleBytes != 0)
                throw CodecError("IQ payload of all-PRB section is not sample-aligned",
                                 kEcpriHeaderBytes + app.offset());
            sampleCount = app.remaining() / kSampleBytes;
        } else {
            sampleCount = kResourceElementsPerPrb * static_cast<std::size_t>(s.numPrbu);
        }
        if (app.remaining() < sampleCount * kSampleBytes)
            throw CodecError("IQ payload shorter than 12 * numPrbu samples",
                             kEcpriHeaderBytes + app.offset());
        s.iq.reserve(sampleCount);
        for (std::size_t k = 0; k < sampleCount; ++k) {
            IQSample sample;
            sample.i = static_cast<int16_t>(app.u16be());
            sample.q = static_cast<int16_t>(app.u16be());
            s.iq.push_back(sample);
        }
        m.sections.push_back(std::move(s));
    }
    return m;
}

} // namespace cufh
