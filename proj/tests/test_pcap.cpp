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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "cufh/cplane.hpp"
#include "cufh/forge.hpp"
#include "cufh/pcap.hpp"
#include "cufh/uplane.hpp"

using namespace cufh;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

const MacAddress kOdu = *MacAddress::parse("02:aa:bb:00:00:01");
const MacAddress kOru = *MacAddress::parse("02:aa:bb:00:00:02");

FrameTemplate cplane_template() { return synthesize_template(FrameClass::CPlaneDL, 64, kOdu, kOru); }

} // namespace

TEST_CASE("capture write/read round-trip") {
    std::vector<PacketRecord> records;
    std::mt19937_64 rng(42);
    for (int i = 0; i < 17; ++i) {
        PacketRecord rec;
        rec.tsSec = static_cast<uint32_t>(i);
        rec.tsUsec = static_cast<uint32_t>(rng() % 1000000);
        rec.bytes.resize(60 + rng() % 200);
        for (auto& b : rec.bytes) b = static_cast<uint8_t>(rng());
        records.push_back(rec);
    }
    auto path = temp_path("cufh_rt.pcap");
    write_pcap(path, records);
    CHECK(read_pcap(path) == records);

    write_pcap(path, {});
    CHECK(read_pcap(path).empty());
    std::remove(path.c_str());
}

TEST_CASE("swapped byte order captures parse") {
    // Global header and one 4-byte record written big-endian on this
    // little-endian host.
    auto path = temp_path("cufh_swapped.pcap");
    std::ofstream out(path, std::ios::binary);
    auto put32be = [&](uint32_t v) {
        char b[4] = {static_cast<char>(v >> 24), static_cast<char>(v >> 16),
                     static_cast<char>(v >> 8), static_cast<char>(v)};
        out.write(b, 4);
    };
    auto put16be = [&](uint16_t v) {
        char b[2] = {static_cast<char>(v >> 8), static_cast<char>(v)};
        out.write(b, 2);
    };
    put32be(0xA1B2C3D4);
    put16be(2);
    put16be(4);
    put32be(0);
    put32be(0);
    put32be(65535);
    put32be(1);
    put32be(7);  // ts sec
    put32be(9);  // ts usec
    put32be(4);  // incl len
    put32be(4);  // orig len
    out.write("\xDE\xAD\xBE\xEF", 4);
    out.close();

    auto records = read_pcap(path);
    REQUIRE(records.size() == 1);
    CHECK(records[0].tsSec == 7);
    CHECK(records[0].tsUsec == 9);
    CHECK(records[0].bytes == std::vector<uint8_t>{0xDE, 0xAD, 0xBE, 0xEF});
    std::remove(path.c_str());
}

TEST_CASE("bad magic and non-Ethernet link type are format errors") {
    auto path = temp_path("cufh_bad.pcap");
    {
        std::ofstream out(path, std::ios::binary);
        out.write("NOTPCAP.NOTPCAP.NOTPCAP.", 24);
    }
    CHECK_THROWS_AS(read_pcap(path), PcapError);

    {
        std::ofstream out(path, std::ios::binary);
        uint32_t magic = 0xA1B2C3D4;
        uint16_t v2 = 2, v4 = 4;
        uint32_t zero = 0, snap = 65535, linkType = 101; // not Ethernet
        out.write(reinterpret_cast<char*>(&magic), 4);
        out.write(reinterpret_cast<char*>(&v2), 2);
        out.write(reinterpret_cast<char*>(&v4), 2);
        out.write(reinterpret_cast<char*>(&zero), 4);
        out.write(reinterpret_cast<char*>(&zero), 4);
        out.write(reinterpret_cast<char*>(&snap), 4);
        out.write(reinterpret_cast<char*>(&linkType), 4);
    }
    CHECK_THROWS_AS(read_pcap(path), PcapError);
    CHECK_THROWS_AS(read_pcap(temp_path("cufh_missing.pcap")), PcapError);
    std::remove(path.c_str());
}

TEST_CASE("attack volume arithmetic") {
    CHECK(attack_packet_count(10, 64) == 19532); // ceil(1e7 / 512)
    CHECK(attack_packet_count(0.000512, 64) == 1); // exactly one frame's bits
    CHECK(attack_packet_count(100, 64) == 195313);
    CHECK_THROWS_AS(attack_packet_count(0, 64), std::invalid_argument);

    auto records = build_attack_records(cplane_template(), 10, {});
    CHECK(records.size() == 19532);
}

TEST_CASE("volume fidelity bounds") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        double volume = 0.001 + static_cast<double>(rng() % 10000) / 100.0;
        std::size_t wire = 64 + rng() % 1400;
        uint64_t n = attack_packet_count(volume, wire);
        long double bits = static_cast<long double>(wire) * 8;
        CHECK(static_cast<long double>(n) * bits >= volume * 1e6L);
        CHECK(static_cast<long double>(n - 1) * bits < volume * 1e6L);
    }
}

TEST_CASE("broadcast source edit applies to every record") {
    EditSet edits;
    SourceMacStrategy s;
    s.kind = SourceMacStrategy::Kind::Broadcast;
    edits.src = s;
    auto records = build_attack_records(cplane_template(), 1, edits);
    for (const auto& rec : records) {
        MacAddress src;
        std::copy_n(rec.bytes.begin() + kSrcOffset, 6, src.octets.begin());
        CHECK(src.is_broadcast());
    }
}

TEST_CASE("edits change only the addressed bytes") {
    EditSet random;
    SourceMacStrategy s;
    s.kind = SourceMacStrategy::Kind::RandomPerPacket;
    s.seed = 3;
    random.src = s;
    auto tmpl = cplane_template();
    auto edited = build_attack_records(tmpl, 1, random);
    auto plain = build_attack_records(tmpl, 1, {});
    REQUIRE(edited.size() == plain.size());
    for (std::size_t i = 0; i < edited.size(); ++i) {
        REQUIRE(edited[i].bytes.size() == plain[i].bytes.size());
        for (std::size_t b = 0; b < edited[i].bytes.size(); ++b) {
            bool srcByte = b >= kSrcOffset && b < kSrcOffset + 6;
            if (!srcByte) CHECK(edited[i].bytes[b] == plain[i].bytes[b]);
        }
    }
}

TEST_CASE("same seed reproduces byte-identical builds; parallel equals serial") {
    EditSet edits;
    SourceMacStrategy s;
    s.kind = SourceMacStrategy::Kind::RandomPerPacket;
    s.seed = 99;
    edits.src = s;
    auto tmpl = cplane_template();
    auto a = build_attack_records(tmpl, 5, edits);
    auto b = build_attack_records(tmpl, 5, edits);
    auto c = build_attack_records_serial(tmpl, 5, edits);
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("timestamps spread uniformly across one second") {
    auto records = build_attack_records(cplane_template(), 0.1, {});
    REQUIRE(records.size() == 196); // ceil(1e5 / 512)
    CHECK(records.front().tsUsec == 0);
    CHECK(records.back().tsUsec < 1000000);
    for (std::size_t i = 1; i < records.size(); ++i)
        CHECK(records[i].tsUsec >= records[i - 1].tsUsec);
}

TEST_CASE("VLAN and destination edits are structural") {
    EditSet edits;
    edits.dst = kOru;
    VlanTag tag;
    tag.vid = 100;
    edits.vlan = tag;
    auto records = build_attack_records(cplane_template(), 0.01, edits);
    EthFrame f = decode_frame(records.front().bytes);
    CHECK(f.dst == kOru);
    REQUIRE(f.vlan.has_value());
    CHECK(f.vlan->vid == 100);
    // 4 extra tag bytes on the wire
    CHECK(wire_length_of_encoded(records.front().bytes.size()) == 68);

    EditSet strip;
    strip.stripVlan = true;
    auto base = FrameTemplate::from_record(records.front());
    auto stripped = build_attack_records(base, 0.01, strip);
    CHECK(!decode_frame(stripped.front().bytes).vlan.has_value());
}

TEST_CASE("templates synthesize at requested wire sizes") {
    auto c = synthesize_template(FrameClass::CPlaneDL, 64, kOdu, kOru);
    CHECK(c.wireLen == 64);
    CHECK(c.cls == FrameClass::CPlaneDL);
    EthFrame f = decode_frame(c.record.bytes);
    CHECK_NOTHROW(decode_cplane(f.payload));

    auto u = synthesize_template(FrameClass::UPlaneDL, 1000, kOdu, kOru);
    CHECK(u.wireLen == 1000);
    EthFrame uf = decode_frame(u.record.bytes);
    auto um = decode_uplane(uf.payload);
    CHECK(um.sections.at(0).numPrbu == 20);

    auto minU = synthesize_template(FrameClass::UPlaneUL, 82, kOdu, kOru);
    CHECK(minU.cls == FrameClass::UPlaneUL);
    CHECK(minU.wireLen == 82);

    try {
        synthesize_template(FrameClass::CPlaneDL, 20, kOdu, kOru);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("64") != std::string::npos);
    }
}

TEST_CASE("non-fronthaul templates are rejected by the builder") {
    PacketRecord rec;
    rec.bytes.assign(60, 0);
    auto tmpl = FrameTemplate::from_record(rec);
    CHECK(tmpl.cls == FrameClass::Other);
    CHECK_THROWS_AS(build_attack_records(tmpl, 1, {}), std::invalid_argument);
}
