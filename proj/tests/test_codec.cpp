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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>

#include "cufh/classify.hpp"
#include "cufh/cplane.hpp"
#include "cufh/frame.hpp"
#include "cufh/uplane.hpp"

using namespace cufh;

namespace {

const MacAddress kOdu = *MacAddress::parse("02:aa:bb:00:00:01");
const MacAddress kOru = *MacAddress::parse("02:aa:bb:00:00:02");

std::vector<uint8_t> golden(const std::string& name) {
    std::ifstream in(std::string(CUFH_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::string hex;
    in >> hex;
    return from_hex(hex);
}

CPlaneMessage reference_cplane_min() {
    CPlaneMessage m;
    m.frameId = 5;
    m.subframeId = 2;
    m.slotId = 1;
    m.rtcid = 1;
    CSection1 s;
    s.sectionId = 1;
    s.numPrbc = 4;
    s.reMask = 0xFFF;
    s.numSymbol = 14;
    m.sections.push_back(s);
    return m;
}

CPlaneMessage reference_cplane_ext() {
    CPlaneMessage m;
    m.frameId = 9;
    m.subframeId = 3;
    m.slotId = 2;
    m.startSymbolId = 7;
    m.rtcid = 0x0203;
    m.seq.sequenceId = 17;
    CSection1 s;
    s.sectionId = 2;
    s.startPrbc = 16;
    s.numPrbc = 8;
    s.reMask = 0xFFF;
    s.numSymbol = 1;
    s.beamId = 0x1234;
    BfwExt1 ext;
    ext.weights = {{100, -100}, {2000, -2000}, {300, -1}, {-32768, 32767}};
    s.extension = ext;
    m.sections.push_back(s);
    return m;
}

UPlaneMessage reference_uplane() {
    UPlaneMessage m;
    m.frameId = 5;
    m.subframeId = 2;
    m.slotId = 1;
    m.symbolId = 3;
    m.pcid = 2;
    m.seq.sequenceId = 7;
    USection s;
    s.sectionId = 1;
    s.startPrbu = 10;
    s.numPrbu = 2;
    for (int k = 0; k < 24; ++k)
        s.iq.push_back({static_cast<int16_t>(100 + k), static_cast<int16_t>(-(100 + k))});
    m.sections.push_back(std::move(s));
    return m;
}

EthFrame wrap(std::vector<uint8_t> pdu, MacAddress dst = kOru, MacAddress src = kOdu) {
    EthFrame f;
    f.dst = dst;
    f.src = src;
    f.payload = std::move(pdu);
    return f;
}

std::mt19937_64 rng(20260811);

uint32_t rnd(uint32_t bound) { return static_cast<uint32_t>(rng() % bound); }

CPlaneMessage random_cplane() {
    CPlaneMessage m;
    m.dataDirection = rnd(2) ? DataDirection::Downlink : DataDirection::Uplink;
    m.payloadVersion = static_cast<uint8_t>(rnd(8));
    m.filterIndex = static_cast<uint8_t>(rnd(16));
    m.frameId = static_cast<uint8_t>(rnd(256));
    m.subframeId = static_cast<uint8_t>(rnd(16));
    m.slotId = static_cast<uint8_t>(rnd(64));
    m.startSymbolId = static_cast<uint8_t>(rnd(64));
    m.udIqWidth = static_cast<uint8_t>(1 + rnd(16));
    m.udCompMeth = static_cast<uint8_t>(rnd(16));
    m.rtcid = static_cast<uint16_t>(rng());
    m.seq.sequenceId = static_cast<uint8_t>(rnd(256));
    int sections = 1 + static_cast<int>(rnd(3));
    for (int i = 0; i < sections; ++i) {
        CSection1 s;
        s.sectionId = static_cast<uint16_t>(rnd(1 << 12));
        s.rb = rnd(2);
        s.symInc = rnd(2);
        s.startPrbc = static_cast<uint16_t>(rnd(1 << 10));
        s.numPrbc = static_cast<uint8_t>(rnd(256));
        s.reMask = static_cast<uint16_t>(rnd(1 << 12));
        s.numSymbol = static_cast<uint8_t>(1 + rnd(14));
        s.beamId = static_cast<uint16_t>(rnd(1 << 15));
        if (rnd(2)) {
            BfwExt1 ext;
            ext.bfwIqWidth = static_cast<uint8_t>(1 + rnd(16));
            ext.bfwCompMeth = static_cast<uint8_t>(rnd(16));
            int exp = ext.bfwIqWidth;
            int pairs = 1 + static_cast<int>(rnd(8));
            for (int k = 0; k < pairs; ++k) {
                int32_t lim = 1 << (exp - 1);
                ext.weights.push_back(
                    {static_cast<int16_t>(static_cast<int32_t>(rnd(static_cast<uint32_t>(2 * lim))) - lim),
                     static_cast<int16_t>(static_cast<int32_t>(rnd(static_cast<uint32_t>(2 * lim))) - lim)});
            }
            // Canonical form: zero pairs inside the word padding are part of
            // the message (the wire carries no count field).
            ext.weights.resize(canonical_weight_count(ext.bfwIqWidth, ext.weights.size()));
            s.extension = ext;
        }
        m.sections.push_back(s);
    }
    return m;
}

UPlaneMessage random_uplane() {
    UPlaneMessage m;
    m.dataDirection = rnd(2) ? DataDirection::Downlink : DataDirection::Uplink;
    m.payloadVersion = static_cast<uint8_t>(rnd(8));
    m.filterIndex = static_cast<uint8_t>(rnd(16));
    m.frameId = static_cast<uint8_t>(rnd(256));
    m.subframeId = static_cast<uint8_t>(rnd(16));
    m.slotId = static_cast<uint8_t>(rnd(64));
    m.symbolId = static_cast<uint8_t>(rnd(64));
    m.pcid = static_cast<uint16_t>(rng());
    m.seq.sequenceId = static_cast<uint8_t>(rnd(256));
    int sections = 1 + static_cast<int>(rnd(2));
    for (int i = 0; i < sections; ++i) {
        USection s;
        s.sectionId = static_cast<uint16_t>(rnd(1 << 12));
        s.rb = rnd(2);
        s.symInc = rnd(2);
        s.startPrbu = static_cast<uint16_t>(rnd(1 << 10));
        s.numPrbu = static_cast<uint8_t>(1 + rnd(6));
        for (unsigned k = 0; k < kResourceElementsPerPrb * s.numPrbu; ++k)
            s.iq.push_back({static_cast<int16_t>(rng()), static_cast<int16_t>(rng())});
        m.sections.push_back(std::move(s));
    }
    return m;
}

EthFrame random_frame() {
    EthFrame f;
    for (auto& b : f.dst.octets) b = static_cast<uint8_t>(rng());
    for (auto& b : f.src.octets) b = static_cast<uint8_t>(rng());
    if (rnd(2)) {
        VlanTag tag;
        tag.pcp = static_cast<uint8_t>(rnd(8));
        tag.dei = rnd(2);
        tag.vid = static_cast<uint16_t>(rnd(4095));
        f.vlan = tag;
    }
    f.ethertype = rnd(2) ? kEthertypeEcpri : static_cast<uint16_t>(0x0800);
    f.payload.resize(rnd(200));
    for (auto& b : f.payload) b = static_cast<uint8_t>(rng());
    return f;
}

} // namespace

TEST_CASE("golden: minimal control frame is byte-exact and 64 wire bytes") {
    auto encoded = encode_frame(wrap(encode_cplane(reference_cplane_min())));
    CHECK(encoded == golden("golden_cplane_min.hex"));
    CHECK(encoded.size() == 60);
    CHECK(wire_length_of_encoded(encoded.size()) == 64);
}

TEST_CASE("golden: extension frame matches the recorded reference") {
    auto pdu = encode_cplane(reference_cplane_ext());
    // 8 eCPRI + 8 app header + 8 section + 20 extension
    CHECK(pdu.size() == 44);
    CHECK(pdu[24 + 1] == 5); // extLen in 4-byte words
    CHECK(encode_frame(wrap(std::move(pdu))) == golden("golden_cplane_ext.hex"));
}

TEST_CASE("golden: IQ data frame matches the recorded reference") {
    auto pdu = encode_uplane(reference_uplane());
    CHECK(encode_frame(wrap(std::move(pdu))) == golden("golden_uplane.hex"));
}

TEST_CASE("golden: tagged frame dissects to the recorded fields") {
    auto bytes = golden("golden_vlan.hex");
    EthFrame f = decode_frame(bytes);
    CHECK(f.dst == kOdu);
    CHECK(f.src == kOru);
    REQUIRE(f.vlan.has_value());
    CHECK(f.vlan->pcp == 5);
    CHECK(f.vlan->dei == false);
    CHECK(f.vlan->vid == 564);
    CHECK(f.ethertype == kEthertypeEcpri);
    // Payload (before the pad) equals the reference PDU.
    auto pdu = encode_cplane(reference_cplane_min());
    REQUIRE(f.payload.size() >= pdu.size());
    CHECK(std::equal(pdu.begin(), pdu.end(), f.payload.begin()));
}

TEST_CASE("frame padding floor and oversize error") {
    EthFrame f = wrap({});
    auto enc = encode_frame(f);
    CHECK(enc.size() == 60);
    for (std::size_t i = 14; i < enc.size(); ++i) CHECK(enc[i] == 0);

    f.payload.assign(1501, 0xAB);
    CHECK_THROWS_AS(encode_frame(f), CodecError);
}

TEST_CASE("truncated frame reports the failing offset") {
    std::vector<uint8_t> bytes(13, 0);
    try {
        decode_frame(bytes);
        FAIL("expected CodecError");
    } catch (const CodecError& e) {
        CHECK(e.offset() == 13);
    }
}

TEST_CASE("frame round-trip modulo padding") {
    for (int i = 0; i < 500; ++i) {
        EthFrame f = random_frame();
        EthFrame back = decode_frame(encode_frame(f));
        CHECK(frames_equal_modulo_padding(f, back));
    }
}

TEST_CASE("control message layout arithmetic") {
    auto m = reference_cplane_min();
    auto pdu = encode_cplane(m);
    CHECK(pdu.size() == kEcpriHeaderBytes + 16); // 8 app header + 8 section
    // payloadSize bytes 2-3 of the eCPRI header
    CHECK((pdu[2] << 8 | pdu[3]) == 16);

    auto ext = reference_cplane_ext();
    CHECK(cplane_app_payload_size(ext) == 16 + 20); // extension pads to 5 words
}

TEST_CASE("eCPRI payloadSize always matches the application payload") {
    for (int i = 0; i < 200; ++i) {
        auto pdu = encode_cplane(random_cplane());
        CHECK(static_cast<std::size_t>(pdu[2] << 8 | pdu[3]) == pdu.size() - kEcpriHeaderBytes);
        auto updu = encode_uplane(random_uplane());
        CHECK(static_cast<std::size_t>(updu[2] << 8 | updu[3]) ==
              updu.size() - kEcpriHeaderBytes);
    }
}

TEST_CASE("control message round-trip over randomized fields") {
    for (int i = 0; i < 2000; ++i) {
        CPlaneMessage m = random_cplane();
        CHECK(decode_cplane(encode_cplane(m)) == m);
    }
}

TEST_CASE("IQ message round-trip over randomized fields") {
    for (int i = 0; i < 2000; ++i) {
        UPlaneMessage m = random_uplane();
        CHECK(decode_uplane(encode_uplane(m)) == m);
    }
}

TEST_CASE("all-zero IQ samples round-trip to all-zero") {
    UPlaneMessage m;
    USection s;
    s.numPrbu = 1;
    s.iq.assign(12, IQSample{});
    m.sections.push_back(s);
    auto back = decode_uplane(encode_uplane(m));
    for (const auto& sample : back.sections.at(0).iq) {
        CHECK(sample.i == 0);
        CHECK(sample.q == 0);
    }
}

TEST_CASE("section type other than 1 is rejected with a clear error") {
    auto expectUnsupported = [](auto&& fn) {
        try {
            fn();
            FAIL("expected CodecError");
        } catch (const CodecError& e) {
            CHECK(std::string(e.what()).find("unsupported section type") != std::string::npos);
        }
    };
    auto m = reference_cplane_min();
    m.sectionType = 3;
    expectUnsupported([&] { encode_cplane(m); });

    auto pdu = encode_cplane(reference_cplane_min());
    pdu[kEcpriHeaderBytes + 5] = 3; // sectionType byte
    expectUnsupported([&] { decode_cplane(pdu); });
}

TEST_CASE("extension length inconsistent with payload is a parse error") {
    auto pdu = encode_cplane(reference_cplane_ext());
    pdu[kEcpriHeaderBytes + 16 + 1] = 40; // extLen far beyond the payload
    // payloadSize no longer covers the extension
    CHECK_THROWS_AS(decode_cplane(pdu), CodecError);
}

TEST_CASE("nonzero extension pad bytes warn instead of failing") {
    auto pdu = encode_cplane(reference_cplane_ext());
    pdu[pdu.size() - 1] |= 0x01; // last pad byte of the extension
    CodecWarnings warnings;
    auto m = decode_cplane(pdu, &warnings);
    CHECK(m.sections.at(0).extension.has_value());
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("pad") != std::string::npos);
}

TEST_CASE("IQ length mismatch is rejected") {
    UPlaneMessage m;
    USection s;
    s.numPrbu = 2;
    s.iq.assign(12, IQSample{}); // should be 24
    m.sections.push_back(s);
    CHECK_THROWS_AS(encode_uplane(m), CodecError);
}

TEST_CASE("uplane decode: truncated IQ payload is a parse error") {
    auto pdu = encode_uplane(reference_uplane());
    pdu.resize(pdu.size() - 5);
    pdu[2] = static_cast<uint8_t>((pdu.size() - 8) >> 8);
    pdu[3] = static_cast<uint8_t>((pdu.size() - 8) & 0xFF);
    CHECK_THROWS_AS(decode_uplane(pdu), CodecError);
}

TEST_CASE("classification is total and direction-aware") {
    auto cdl = encode_frame(wrap(encode_cplane(reference_cplane_min())));
    CHECK(classify(cdl) == FrameClass::CPlaneDL);

    auto cm = reference_cplane_min();
    cm.dataDirection = DataDirection::Uplink;
    CHECK(classify(encode_frame(wrap(encode_cplane(cm)))) == FrameClass::CPlaneUL);

    auto um = reference_uplane();
    um.dataDirection = DataDirection::Uplink;
    CHECK(classify(encode_frame(wrap(encode_uplane(um)))) == FrameClass::UPlaneUL);
    um.dataDirection = DataDirection::Downlink;
    CHECK(classify(encode_frame(wrap(encode_uplane(um)))) == FrameClass::UPlaneDL);

    EthFrame notEcpri = wrap(encode_cplane(reference_cplane_min()));
    notEcpri.ethertype = 0x0800;
    CHECK(classify(encode_frame(notEcpri)) == FrameClass::Other);

    CHECK(classify(std::vector<uint8_t>(5, 0)) == FrameClass::Other);
    CHECK(classify(std::vector<uint8_t>(20, 0)) == FrameClass::Other);
}

TEST_CASE("bit packing: single-field flips move exactly the documented wire bits") {
    // Offsets within the encoded frame: 14 Ethernet header bytes, then the
    // eCPRI header, then the application payload.
    auto base = encode_frame(wrap(encode_cplane(reference_cplane_min())));
    auto diff = [&](const CPlaneMessage& m) {
        auto enc = encode_frame(wrap(encode_cplane(m)));
        REQUIRE(enc.size() == base.size());
        std::vector<std::pair<std::size_t, uint8_t>> changed;
        for (std::size_t i = 0; i < enc.size(); ++i)
            if (enc[i] != base[i]) changed.push_back({i, static_cast<uint8_t>(enc[i] ^ base[i])});
        return changed;
    };
    const std::size_t ecpri = 14, app = 14 + 8, sec = app + 8;

    auto m = reference_cplane_min();
    m.seq.sequenceId ^= 1; // eCPRI byte 6, LSB
    CHECK(diff(m) == std::vector<std::pair<std::size_t, uint8_t>>{{ecpri + 6, 0x01}});

    m = reference_cplane_min();
    m.seq.lastFragment = false; // eBit: byte 7 MSB
    CHECK(diff(m) == std::vector<std::pair<std::size_t, uint8_t>>{{ecpri + 7, 0x80}});

    m = reference_cplane_min();
    m.dataDirection = DataDirection::Uplink; // app byte 0 MSB
    CHECK(diff(m) == std::vector<std::pair<std::size_t, uint8_t>>{{app + 0, 0x80}});

    m = reference_cplane_min();
    m.subframeId ^= 1; // bits 15-12 of app bytes 2-3: LSB at byte 2, mask 0x10
    CHECK(diff(m) == std::vector<std::pair<std::size_t, uint8_t>>{{app + 2, 0x10}});

    m = reference_cplane_min();
    m.slotId ^= 1; // bits 11-6: LSB at byte 3, mask 0x40
    CHECK(diff(m) == std::vector<std::pair<std::size_t, uint8_t>>{{app + 3, 0x40}});

    m = reference_cplane_min();
    m.sections[0].sectionId ^= 1; // top 12 bits of the 24-bit group: LSB at byte 1, mask 0x10
    CHECK(diff(m) == std::vector<std::pair<std::size_t, uint8_t>>{{sec + 1, 0x10}});

    m = reference_cplane_min();
    m.sections[0].startPrbc ^= 1; // low 10 bits: LSB at byte 2
    CHECK(diff(m) == std::vector<std::pair<std::size_t, uint8_t>>{{sec + 2, 0x01}});

    m = reference_cplane_min();
    m.sections[0].numSymbol ^= 1; // low nibble of bytes 4-5 group: byte 5 LSB
    CHECK(diff(m) == std::vector<std::pair<std::size_t, uint8_t>>{{sec + 5, 0x01}});

    m = reference_cplane_min();
    m.sections[0].beamId ^= 1; // low 15 bits of bytes 6-7: byte 7 LSB
    CHECK(diff(m) == std::vector<std::pair<std::size_t, uint8_t>>{{sec + 7, 0x01}});
}

TEST_CASE("narrow-width extensions canonicalize pad space into zero pairs") {
    // One 1-bit pair packs into 2 bits; the word padding leaves room the
    // decoder must read back as zero pairs, since no count travels on the
    // wire.
    CPlaneMessage m = reference_cplane_min();
    BfwExt1 ext;
    ext.bfwIqWidth = 1;
    ext.weights = {{-1, 0}};
    m.sections[0].extension = ext;
    auto decoded = decode_cplane(encode_cplane(m));
    const auto& back = decoded.sections.at(0).extension;
    REQUIRE(back.has_value());
    CHECK(back->weights.size() == canonical_weight_count(1, 1));
    CHECK(back->weights.size() == 4);
    CHECK(back->weights[0] == std::pair<int16_t, int16_t>{-1, 0});
    for (std::size_t k = 1; k < back->weights.size(); ++k)
        CHECK(back->weights[k] == std::pair<int16_t, int16_t>{0, 0});
    // At full width the count is exact.
    CHECK(canonical_weight_count(16, 4) == 4);
}

TEST_CASE("decode accepts eCPRI PDUs with trailing frame pad via payloadSize") {
    auto pdu = encode_cplane(reference_cplane_min());
    auto padded = pdu;
    padded.resize(padded.size() + 22, 0);
    CHECK(decode_cplane(padded) == reference_cplane_min());
}
