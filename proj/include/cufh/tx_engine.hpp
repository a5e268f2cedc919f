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

#ifndef CUFH_TX_ENGINE_HPP
#define CUFH_TX_ENGINE_HPP

#include <cstdint>
#include <vector>

#include "cufh/forge.hpp"
#include "cufh/pcap.hpp"
#include "cufh/port.hpp"

namespace cufh {

/// Per-second volume plan: constant, or incremental ("start, then +step
/// Mbps every second").
struct RateSchedule {
    enum class Mode { Constant, Incremental };

    Mode mode = Mode::Constant;
    double startMbps = 0;
    double stepMbps = 0;
    uint32_t durationSeconds = 0;

    static RateSchedule constant(double mbps, uint32_t seconds) {
        return {Mode::Constant, mbps, 0, seconds};
    }
    static RateSchedule ramp(double startMbps, double stepMbps, uint32_t seconds) {
        return {Mode::Incremental, startMbps, stepMbps, seconds};
    }

    double mbps_for_second(uint32_t s) const {
        return mode == Mode::Constant ? startMbps : startMbps + stepMbps * s;
    }
    int64_t bits_for_second(uint32_t s) const;

    /// Throws std::invalid_argument unless every per-second rate is positive
    /// and the duration is at least one second.
    void validate() const;
};

/// Each second splits into this many equal pacing slots; the per-second bit
/// budget spreads across them. The burst shape within a second is not
/// otherwise specified, so the choice is isolated here.
constexpr int kPacingSlotsPerSecond = 100;

enum class PacingMode {
    SimClock, // no sleeping: loopback runs faster than real time
    RealTime, // slot deadlines on the steady clock
};

struct TxRunConfig {
    RateSchedule schedule;
    EditSet edits;
    PacingMode pacing = PacingMode::SimClock;
};

struct TxSecondStats {
    uint32_t second = 0;
    uint64_t frames = 0;
    uint64_t wireBytes = 0;
    int64_t scheduledBits = 0;
    int64_t emittedBits = 0;
};

struct TxStats {
    std::vector<TxSecondStats> perSecond;
    uint64_t totalFrames = 0;
    uint64_t totalWireBytes = 0;
    uint64_t sendFailures = 0;
    bool aborted = false;           // port failed mid-run; stats are partial
    double maxSlotOvershootMs = 0;  // real-time mode: worst deadline miss

    int64_t total_emitted_bits() const { return static_cast<int64_t>(totalWireBytes) * 8; }
};

/// Paced transmission: frames drawn cyclically from `records`, live edits
/// applied per emitted frame, token-bucket budget with carried remainder so
/// the cumulative emitted bit count tracks the schedule within one frame.
TxStats run_attack(const std::vector<PacketRecord>& records, const TxRunConfig& config,
                   TxPort& port);

} // namespace cufh

#endif
