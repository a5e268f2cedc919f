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

#ifndef CUFH_FORGE_HPP
#define CUFH_FORGE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cufh/addr_strategy.hpp"
#include "cufh/classify.hpp"
#include "cufh/frame.hpp"
#include "cufh/pcap.hpp"

namespace cufh {

/// A frame chosen (or synthesized) as the base of an attack build.
struct FrameTemplate {
    PacketRecord record;
    FrameClass cls = FrameClass::Other;
    std::size_t wireLen = 0; // stored bytes + FCS

    static FrameTemplate from_record(PacketRecord rec);
};

/// Field edits applied to every built or transmitted frame. VLAN edits are
/// structural (insert/rewrite/strip); address edits patch bytes in place.
struct EditSet {
    std::optional<SourceMacStrategy> src;
    std::optional<MacAddress> dst;
    std::optional<VlanTag> vlan;
    bool stripVlan = false;
};

/// Number of packets needed so that n * wireLen * 8 covers volumeMbit
/// megabits (ceil; delivered volume is never below the request).
uint64_t attack_packet_count(double volumeMbit, std::size_t wireLen);

/// Applies structural edits (dst / VLAN / fixed source) to template bytes.
/// Per-packet sources are the caller's business.
std::vector<uint8_t> apply_structural_edits(const std::vector<uint8_t>& bytes,
                                            const EditSet& edits);

/// The paper-shaped generator: replicate the template to the requested
/// volume with edits applied, timestamps spread uniformly across one
/// second. Per-packet source strategies draw a fresh address per record.
/// Parallelized over records; byte-identical to the serial reference.
std::vector<PacketRecord> build_attack_records(const FrameTemplate& tmpl, double volumeMbit,
                                               const EditSet& edits);

/// Single-threaded reference implementation kept for tests and benchmarks.
std::vector<PacketRecord> build_attack_records_serial(const FrameTemplate& tmpl,
                                                      double volumeMbit, const EditSet& edits);

/// Minimum synthesizable wire size per class (minimal valid message plus
/// padding floor and FCS).
std::size_t min_template_wire_bytes(FrameClass cls);

/// A valid frame of the class sized to `wireBytes` on the wire (stored
/// bytes + 4). C-Plane frames grow by zero padding; U-Plane frames grow by
/// PRB count. Throws std::invalid_argument below the class minimum.
FrameTemplate synthesize_template(FrameClass cls, std::size_t wireBytes,
                                  const MacAddress& dst = {}, const MacAddress& src = {});

} // namespace cufh

#endif
