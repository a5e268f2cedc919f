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

#include "cufh/pcap.hpp"

#include <cstdio>
#include <cstring>
#include <memory>

namespace cufh {

namespace {

constexpr uint32_t kMagicUsec = 0xA1B2C3D4;
constexpr uint32_t kMagicUsecSwapped = 0xD4C3B2A1;
constexpr uint32_t kLinkTypeEthernet = 1;
constexpr uint32_t kSnapLen = 65535;

uint32_t bswap32(uint32_t v) {
    return (v >> 24) | ((v >> 8) & 0x0000FF00u) | ((v << 8) & 0x00FF0000u) | (v << 24);
}

uint16_t bswap16(uint16_t v) { return static_cast<uint16_t>((v >> 8) | (v << 8)); }

struct FileCloser {
    void operator()(std::FILE* f) const noexcept {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

} // namespace

std::vector<PacketRecord> read_pcap(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f) throw PcapError("cannot open capture file: " + path);

    uint8_t gh[24];
    if (std::fread(gh, 1, sizeof gh, f.get()) != sizeof gh)
        throw PcapError("capture file shorter than the 24-byte global header: " + path);

    uint32_t magic;
    std::memcpy(&magic, gh, 4);
    bool swapped;
    if (magic == kMagicUsec) {
        swapped = false;
    } else if (magic == kMagicUsecSwapped) {
        swapped = true;
    } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "bad capture magic 0x%08x", magic);
        throw PcapError(std::string(buf) + " in " + path);
    }
    auto rd32 = [&](const uint8_t* p) {
        uint32_t v;
        std::memcpy(&v, p, 4);
        return swapped ? bswap32(v) : v;
    };
    auto rd16 = [&](const uint8_t* p) {
        uint16_t v;
        std::memcpy(&v, p, 2);
        return swapped ? bswap16(v) : v;
    };
    uint16_t versionMajor = rd16(gh + 4);
    uint32_t linkType = rd32(gh + 20);
    if (versionMajor != 2)
        throw PcapError("unsupported capture version " + std::to_string(versionMajor));
    if (linkType != kLinkTypeEthernet)
        throw PcapError("capture link type " + std::to_string(linkType) +
                        " is not Ethernet (1)");

    std::vector<PacketRecord> records;
    uint8_t rh[16];
    for (;;) {
        std::size_t got = std::fread(rh, 1, sizeof rh, f.get());
        if (got == 0) break;
        if (got != sizeof rh) throw PcapError("truncated record header in " + path);
        PacketRecord rec;
        rec.tsSec = rd32(rh);
        rec.tsUsec = rd32(rh + 4);
        uint32_t inclLen = rd32(rh + 8);
        if (inclLen > kSnapLen)
            throw PcapError("record longer than snap length in " + path);
        rec.bytes.resize(inclLen);
        if (std::fread(rec.bytes.data(), 1, inclLen, f.get()) != inclLen)
            throw PcapError("truncated record data in " + path);
        records.push_back(std::move(rec));
    }
    return records;
}

void write_pcap(const std::string& path, const std::vector<PacketRecord>& records) {
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f) throw PcapError("cannot create capture file: " + path);

    auto put32 = [&](uint32_t v) {
        if (std::fwrite(&v, 4, 1, f.get()) != 1) throw PcapError("write failed: " + path);
    };
    auto put16 = [&](uint16_t v) {
        if (std::fwrite(&v, 2, 1, f.get()) != 1) throw PcapError("write failed: " + path);
    };
    put32(kMagicUsec);
    put16(2);
    put16(4);
    put32(0); // thiszone
    put32(0); // sigfigs
    put32(kSnapLen);
    put32(kLinkTypeEthernet);
    for (const auto& rec : records) {
        put32(rec.tsSec);
        put32(rec.tsUsec);
        put32(static_cast<uint32_t>(rec.bytes.size()));
        put32(static_cast<uint32_t>(rec.bytes.size()));
        if (!rec.bytes.empty() &&
            std::fwrite(rec.bytes.data(), 1, rec.bytes.size(), f.get()) != rec.bytes.size())
            throw PcapError("write failed: " + path);
    }
    if (std::fflush(f.get()) != 0) throw PcapError("flush failed: " + path);
}

} // namespace cufh
