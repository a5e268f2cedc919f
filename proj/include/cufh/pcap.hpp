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

#ifndef CUFH_PCAP_HPP
#define CUFH_PCAP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cufh {

class PcapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One captured or forged frame with its capture timestamp.
struct PacketRecord {
    uint32_t tsSec = 0;
    uint32_t tsUsec = 0;
    std::vector<uint8_t> bytes;

    bool operator==(const PacketRecord&) const = default;
};

/// Classic capture file, Ethernet link type, microsecond timestamps:
/// 24-byte global header (magic 0xa1b2c3d4, version 2.4, link type 1)
/// followed by 16-byte record headers (ts-sec, ts-usec, captured-len,
/// original-len). Writes native byte order; reads either order.
std::vector<PacketRecord> read_pcap(const std::string& path);
void write_pcap(const std::string& path, const std::vector<PacketRecord>& records);

} // namespace cufh

#endif
