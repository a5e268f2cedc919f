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

#ifndef CUFH_RX_METER_HPP
#define CUFH_RX_METER_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cufh/classify.hpp"
#include "cufh/port.hpp"

namespace cufh {

struct ClassTally {
    uint64_t frames = 0;
    uint64_t wireBits = 0;

    bool operator==(const ClassTally&) const = default;
};

/// Receive-side observability: per-second throughput per class, sequence
/// gaps per stream, and optional drop/recovery markers.
struct MeterReport {
    /// Contiguous from second 0; empty seconds are zero rows.
    std::vector<std::array<ClassTally, kFrameClassCount>> perSecond;
    /// (msgType << 16 | eAxC id) -> count of sequenceId discontinuities.
    std::map<uint32_t, uint64_t> seqGaps;
    uint64_t totalFrames = 0;
    uint64_t totalWireBits = 0;
    std::optional<uint32_t> firstDropSecond;
    std::optional<uint32_t> recoveredSecond;

    ClassTally total_for_class(FrameClass c) const;
    std::vector<int64_t> bits_series(FrameClass c) const;
    std::vector<int64_t> bits_series_all() const;
};

/// Streaming frame counter; attach via sink() as a loopback port's receiver
/// or feed it captured frames. Frames bucket by their emission timestamp.
class Meter {
public:
    void ingest(std::span<const uint8_t> frame, uint64_t tsNanos);

    FrameSink sink() {
        return [this](std::span<const uint8_t> f, uint64_t ts) { ingest(f, ts); };
    }

    /// Finalizes the report, padding the series out to `durationSeconds`
    /// when given.
    MeterReport finish(std::optional<uint32_t> durationSeconds = std::nullopt) const;

private:
    struct SeqTrack {
        bool seen = false;
        uint8_t last = 0;
    };

    std::vector<std::array<ClassTally, kFrameClassCount>> perSecond_;
    std::map<uint32_t, SeqTrack> seqTrack_;
    std::map<uint32_t, uint64_t> seqGaps_;
    uint64_t totalFrames_ = 0;
    uint64_t totalWireBits_ = 0;
};

/// Drains a sink-less loopback port through a meter.
MeterReport meter_drain(LoopbackPort& port, std::optional<uint32_t> durationSeconds = {});

/// firstDropSecond: first second with bits < dropFraction * baselineBits.
/// recoveredSecond: first later second back at or above that threshold and
/// staying there for `recoveryRunSeconds` consecutive seconds. Either may
/// be absent.
std::pair<std::optional<uint32_t>, std::optional<uint32_t>> detect_drop_and_recovery(
    std::span<const int64_t> bitsPerSecond, int64_t baselineBits, double dropFraction,
    int recoveryRunSeconds = 3);

void write_meter_text(std::ostream& os, const MeterReport& report);
void write_meter_records(std::ostream& os, const MeterReport& report); // one JSON per line

} // namespace cufh

#endif
