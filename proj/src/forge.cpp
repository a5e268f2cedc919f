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

#include "cufh/forge.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "cufh/cplane.hpp"
#include "cufh/uplane.hpp"

namespace cufh {

FrameTemplate FrameTemplate::from_record(PacketRecord rec) {
    FrameTemplate t;
    t.cls = classify(rec.bytes);
    t.wireLen = wire_length_of_encoded(rec.bytes.size());
    t.record = std::move(rec);
    return t;
}

uint64_t attack_packet_count(double volumeMbit, std::size_t wireLen) {
    if (volumeMbit <= 0) throw std::invalid_argument("volume must be positive");
    if (wireLen == 0) throw std::invalid_argument("wire length must be positive");
    double bits = volumeMbit * 1e6;
    double frameBits = static_cast<double>(wireLen) * 8.0;
    return static_cast<uint64_t>(std::ceil(bits / frameBits - 1e-9));
}

std::vector<uint8_t> apply_structural_edits(const std::vector<uint8_t>& bytes,
                                            const EditSet& edits) {
    EthFrame f = decode_frame(bytes);
    if (edits.stripVlan) f.vlan.reset();
    if (edits.vlan) f.vlan = *edits.vlan;
    if (edits.dst) f.dst = *edits.dst;
    if (edits.src && !edits.src->varies_per_packet())
        f.src = source_for(*edits.src, f.dst, 0);
    return encode_frame(f);
}

namespace {

std::vector<PacketRecord> build_records(const FrameTemplate& tmpl, double volumeMbit,
                                        const EditSet& edits, bool parallel) {
    if (tmpl.cls == FrameClass::Other)
        throw std::invalid_argument("attack template must classify as fronthaul traffic");

    std::vector<uint8_t> base = apply_structural_edits(tmpl.record.bytes, edits);
    std::size_t wireLen = wire_length_of_encoded(base.size());
    uint64_t n = attack_packet_count(volumeMbit, wireLen);

    MacAddress dst;
    std::memcpy(dst.octets.data(), base.data() + kDstOffset, 6);
    bool perPacketSrc = edits.src && edits.src->varies_per_packet();

    std::vector<PacketRecord> out(n);
    // Records are independent: per-packet sources are counter-based draws,
    // so any iteration order produces the same bytes.
    auto fill = [&](uint64_t i) {
        PacketRecord& rec = out[i];
        rec.tsSec = 0;
        rec.tsUsec = static_cast<uint32_t>(i * 1000000ull / n);
        rec.bytes = base;
        if (perPacketSrc) {
            MacAddress src = source_for(*edits.src, dst, i);
            std::memcpy(rec.bytes.data() + kSrcOffset, src.octets.data(), 6);
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int64_t i = 0; i < static_cast<int64_t>(n); ++i) fill(static_cast<uint64_t>(i));
    } else {
        for (uint64_t i = 0; i < n; ++i) fill(i);
    }
    return out;
}

} // namespace

std::vector<PacketRecord> build_attack_records(const FrameTemplate& tmpl, double volumeMbit,
                                               const EditSet& edits) {
    return build_records(tmpl, volumeMbit, edits, true);
}

std::vector<PacketRecord> build_attack_records_serial(const FrameTemplate& tmpl,
                                                      double volumeMbit, const EditSet& edits) {
    return build_records(tmpl, volumeMbit, edits, false);
}

namespace {

constexpr std::size_t kCPlaneMinWire = 64;
constexpr std::size_t kUPlaneMinWire = 82; // eth 14 + ecpri 8 + app 4 + sect 4 + 48 IQ + FCS

std::vector<uint8_t> synth_cplane(DataDirection dir) {
    CPlaneMessage m;
    m.dataDirection = dir;
    m.frameId = 5;
    m.subframeId = 2;
    m.slotId = 1;
    CSection1 s;
    s.sectionId = 1;
    s.numPrbc = 4;
    s.numSymbol = 14;
    m.sections.push_back(s);
    m.rtcid = 1;
    return encode_cplane(m);
}

std::vector<uint8_t> synth_uplane(DataDirection dir, uint8_t numPrbu) {
    UPlaneMessage m;
    m.dataDirection = dir;
    m.frameId = 5;
    m.subframeId = 2;
    m.slotId = 1;
    m.symbolId = 3;
    USection s;
    s.sectionId = 1;
    s.numPrbu = numPrbu;
    s.iq.assign(kResourceElementsPerPrb * static_cast<std::size_t>(numPrbu), IQSample{});
    m.sections.push_back(std::move(s));
    m.pcid = 2;
    return encode_uplane(m);
}

} // namespace

std::size_t min_template_wire_bytes(FrameClass cls) {
    switch (cls) {
        case FrameClass::CPlaneDL:
        case FrameClass::CPlaneUL: return kCPlaneMinWire;
        case FrameClass::UPlaneDL:
        case FrameClass::UPlaneUL: return kUPlaneMinWire;
        case FrameClass::Other: break;
    }
    throw std::invalid_argument("no template for class other");
}

FrameTemplate synthesize_template(FrameClass cls, std::size_t wireBytes, const MacAddress& dst,
                                  const MacAddress& src) {
    std::size_t minWire = min_template_wire_bytes(cls);
    if (wireBytes < minWire)
        throw std::invalid_argument("requested " + std::to_string(wireBytes) +
                                    " wire bytes; minimum for " + std::string(to_string(cls)) +
                                    " is " + std::to_string(minWire));

    EthFrame f;
    f.dst = dst;
    f.src = src;
    f.ethertype = kEthertypeEcpri;

    bool cplane = cls == FrameClass::CPlaneDL || cls == FrameClass::CPlaneUL;
    bool downlink = cls == FrameClass::CPlaneDL || cls == FrameClass::UPlaneDL;
    DataDirection dir = downlink ? DataDirection::Downlink : DataDirection::Uplink;

    if (cplane) {
        f.payload = synth_cplane(dir);
    } else {
        // Grow in whole PRBs (48 IQ bytes each), then pad the remainder.
        std::size_t targetEncoded = wireBytes - kFcsBytes;
        std::size_t fixed = 14 + kEcpriHeaderBytes + 4 + 4;
        std::size_t prbs = targetEncoded > fixed ? (targetEncoded - fixed) / 48 : 1;
        if (prbs < 1) prbs = 1;
        if (prbs > 30) prbs = 30; // keeps the payload under the 1500-byte MTU
        f.payload = synth_uplane(dir, static_cast<uint8_t>(prbs));
    }

    std::vector<uint8_t> encoded = encode_frame(f);
    std::size_t targetEncoded = wireBytes - kFcsBytes;
    if (encoded.size() < targetEncoded) {
        encoded.resize(targetEncoded, 0); // trailing frame pad past payloadSize
    } else if (encoded.size() > targetEncoded) {
        throw std::invalid_argument("cannot size " + std::string(to_string(cls)) + " frame to " +
                                    std::to_string(wireBytes) + " wire bytes (minimum step)");
    }

    PacketRecord rec;
    rec.bytes = std::move(encoded);
    FrameTemplate t = FrameTemplate::from_record(std::move(rec));
    if (t.cls != cls) throw std::logic_error("synthesized template class mismatch");
    return t;
}

} // namespace cufh
