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

#include "cufh/rx_meter.hpp"

#include <iomanip>

#include <json.hpp>

namespace cufh {

ClassTally MeterReport::total_for_class(FrameClass c) const {
    ClassTally t;
    for (const auto& row : perSecond) {
        t.frames += row[static_cast<std::size_t>(c)].frames;
        t.wireBits += row[static_cast<std::size_t>(c)].wireBits;
    }
    return t;
}

std::vector<int64_t> MeterReport::bits_series(FrameClass c) const {
    std::vector<int64_t> out;
    out.reserve(perSecond.size());
    for (const auto& row : perSecond)
        out.push_back(static_cast<int64_t>(row[static_cast<std::size_t>(c)].wireBits));
    return out;
}

std::vector<int64_t> MeterReport::bits_series_all() const {
    std::vector<int64_t> out;
    out.reserve(perSecond.size());
    for (const auto& row : perSecond) {
        int64_t bits = 0;
        for (const auto& tally : row) bits += static_cast<int64_t>(tally.wireBits);
        out.push_back(bits);
    }
    return out;
}

void Meter::ingest(std::span<const uint8_t> frame, uint64_t tsNanos) {
    std::size_t second = static_cast<std::size_t>(tsNanos / 1'000'000'000ull);
    if (second >= perSecond_.size()) perSecond_.resize(second + 1);

    FrameClass cls = FrameClass::Other;
    if (auto peek = peek_flow_key(frame)) {
        cls = peek->cls;
        // Sequence continuity per stream id, C-Plane and U-Plane tracked
        // separately.
        uint8_t msgType = cls == FrameClass::CPlaneDL || cls == FrameClass::CPlaneUL ? 2 : 0;
        uint32_t key = static_cast<uint32_t>(msgType) << 16 | peek->eaxcId;
        auto& track = seqTrack_[key];
        if (track.seen) {
            uint8_t delta = static_cast<uint8_t>(peek->sequenceId - track.last);
            if (delta != 1) seqGaps_[key]++;
        }
        track.seen = true;
        track.last = peek->sequenceId;
    }

    auto& tally = perSecond_[second][static_cast<std::size_t>(cls)];
    tally.frames++;
    tally.wireBits += static_cast<uint64_t>(wire_length_of_encoded(frame.size())) * 8;
    totalFrames_++;
    totalWireBits_ += static_cast<uint64_t>(wire_length_of_encoded(frame.size())) * 8;
}

MeterReport Meter::finish(std::optional<uint32_t> durationSeconds) const {
    MeterReport r;
    r.perSecond = perSecond_;
    if (durationSeconds && r.perSecond.size() < *durationSeconds)
        r.perSecond.resize(*durationSeconds);
    r.seqGaps = seqGaps_;
    r.totalFrames = totalFrames_;
    r.totalWireBits = totalWireBits_;
    return r;
}

MeterReport meter_drain(LoopbackPort& port, std::optional<uint32_t> durationSeconds) {
    Meter meter;
    for (const auto& rx : port.drain()) meter.ingest(rx.bytes, rx.tsNanos);
    return meter.finish(durationSeconds);
}

std::pair<std::optional<uint32_t>, std::optional<uint32_t>> detect_drop_and_recovery(
    std::span<const int64_t> bitsPerSecond, int64_t baselineBits, double dropFraction,
    int recoveryRunSeconds) {
    if (dropFraction <= 0 || dropFraction >= 1)
        throw std::invalid_argument("dropFraction must lie in (0, 1)");
    const double threshold = dropFraction * static_cast<double>(baselineBits);

    std::optional<uint32_t> firstDrop;
    for (std::size_t s = 0; s < bitsPerSecond.size(); ++s) {
        if (static_cast<double>(bitsPerSecond[s]) < threshold) {
            firstDrop = static_cast<uint32_t>(s);
            break;
        }
    }
    if (!firstDrop) return {std::nullopt, std::nullopt};

    for (std::size_t s = *firstDrop + 1; s < bitsPerSecond.size(); ++s) {
        bool stays = s + static_cast<std::size_t>(recoveryRunSeconds) <= bitsPerSecond.size();
        if (!stays) break;
        bool above = true;
        for (int k = 0; k < recoveryRunSeconds && above; ++k)
            above = static_cast<double>(bitsPerSecond[s + static_cast<std::size_t>(k)]) >= threshold;
        if (above) return {firstDrop, static_cast<uint32_t>(s)};
    }
    return {firstDrop, std::nullopt};
}

void write_meter_text(std::ostream& os, const MeterReport& report) {
    os << "second  cplane-dl  cplane-ul  uplane-dl  uplane-ul      other   (frames)\n";
    for (std::size_t s = 0; s < report.perSecond.size(); ++s) {
        os << std::setw(6) << s;
        for (const auto& tally : report.perSecond[s]) os << std::setw(11) << tally.frames;
        os << '\n';
    }
    os << "total frames " << report.totalFrames << ", total wire bits " << report.totalWireBits
       << '\n';
    for (const auto& [key, gaps] : report.seqGaps) {
        os << "seq gaps: " << (key >> 16 == 2 ? "cplane" : "uplane") << " eaxc 0x" << std::hex
           << std::setw(4) << std::setfill('0') << (key & 0xFFFF) << std::dec << std::setfill(' ')
           << " -> " << gaps << '\n';
    }
    if (report.firstDropSecond) os << "first drop second: " << *report.firstDropSecond << '\n';
    if (report.recoveredSecond) os << "recovered second: " << *report.recoveredSecond << '\n';
}

void write_meter_records(std::ostream& os, const MeterReport& report) {
    for (std::size_t s = 0; s < report.perSecond.size(); ++s) {
        for (std::size_t c = 0; c < kFrameClassCount; ++c) {
            const auto& tally = report.perSecond[s][c];
            nlohmann::ordered_json rec;
            rec["second"] = s;
            rec["class"] = to_string(static_cast<FrameClass>(c));
            rec["frames"] = tally.frames;
            rec["wire_bits"] = tally.wireBits;
            os << rec.dump() << '\n';
        }
    }
}

} // namespace cufh
