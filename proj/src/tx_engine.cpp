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

#include "cufh/tx_engine.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <thread>

namespace cufh {

int64_t RateSchedule::bits_for_second(uint32_t s) const {
    return std::llround(mbps_for_second(s) * 1e6);
}

void RateSchedule::validate() const {
    if (durationSeconds < 1) throw std::invalid_argument("duration must be at least 1 second");
    if (startMbps <= 0) throw std::invalid_argument("rate must be positive");
    if (mode == Mode::Incremental && mbps_for_second(durationSeconds - 1) <= 0)
        throw std::invalid_argument("incremental schedule reaches a non-positive rate");
}

TxStats run_attack(const std::vector<PacketRecord>& records, const TxRunConfig& config,
                   TxPort& port) {
    config.schedule.validate();
    if (records.empty()) throw std::invalid_argument("no records to transmit");

    // Pre-encode once: structural edits (dst / VLAN / constant source) are
    // baked into working copies; per-frame edits below patch only the
    // source address bytes.
    std::vector<std::vector<uint8_t>> working;
    working.reserve(records.size());
    for (const auto& rec : records) working.push_back(apply_structural_edits(rec.bytes, config.edits));

    std::vector<int64_t> frameBits(working.size());
    std::vector<MacAddress> dsts(working.size());
    for (std::size_t i = 0; i < working.size(); ++i) {
        frameBits[i] = static_cast<int64_t>(wire_length_of_encoded(working[i].size())) * 8;
        std::memcpy(dsts[i].octets.data(), working[i].data() + kDstOffset, 6);
    }

    bool perPacketSrc = config.edits.src && config.edits.src->varies_per_packet();
    const bool realTime = config.pacing == PacingMode::RealTime;

    TxStats stats;
    stats.perSecond.reserve(config.schedule.durationSeconds);

    using Clock = std::chrono::steady_clock;
    const auto runStart = Clock::now();
    constexpr int64_t kSlotNanos = 1'000'000'000ll / kPacingSlotsPerSecond;

    int64_t carryBits = 0;
    uint64_t emitIdx = 0;

    for (uint32_t s = 0; s < config.schedule.durationSeconds; ++s) {
        const int64_t secBits = config.schedule.bits_for_second(s);
        TxSecondStats sec;
        sec.second = s;
        sec.scheduledBits = secBits;

        for (int slot = 0; slot < kPacingSlotsPerSecond; ++slot) {
            // Exact integer partition of the per-second budget across slots.
            int64_t slotBudget = secBits * (slot + 1) / kPacingSlotsPerSecond -
                                 secBits * slot / kPacingSlotsPerSecond;
            carryBits += slotBudget;

            const int64_t slotIndex = static_cast<int64_t>(s) * kPacingSlotsPerSecond + slot;
            uint64_t ts = static_cast<uint64_t>(slotIndex * kSlotNanos);
            if (realTime) {
                auto deadline = runStart + std::chrono::nanoseconds(slotIndex * kSlotNanos);
                std::this_thread::sleep_until(deadline);
                auto now = Clock::now();
                double overshootMs =
                    std::chrono::duration<double, std::milli>(now - deadline).count();
                if (overshootMs > stats.maxSlotOvershootMs) stats.maxSlotOvershootMs = overshootMs;
                ts = static_cast<uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(now - runStart).count());
            }

            while (carryBits >= frameBits[emitIdx % working.size()]) {
                std::size_t rec = emitIdx % working.size();
                auto& bytes = working[rec];
                if (perPacketSrc) {
                    MacAddress src = source_for(*config.edits.src, dsts[rec], emitIdx);
                    std::memcpy(bytes.data() + kSrcOffset, src.octets.data(), 6);
                }
                if (!port.send(bytes, ts)) {
                    stats.sendFailures++;
                    stats.aborted = true;
                    stats.perSecond.push_back(sec);
                    return stats;
                }
                carryBits -= frameBits[rec];
                sec.frames++;
                sec.wireBytes += static_cast<uint64_t>(frameBits[rec] / 8);
                sec.emittedBits += frameBits[rec];
                ++emitIdx;
            }
        }

        stats.totalFrames += sec.frames;
        stats.totalWireBytes += sec.wireBytes;
        stats.perSecond.push_back(sec);
    }
    port.flush();
    return stats;
}

} // namespace cufh
