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

// Compares the serial reference implementations against the OpenMP
// parallel paths: attack-record forging and batch classification.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cufh/forge.hpp"
#include "cufh/rx_meter.hpp"
#include "cufh/tx_engine.hpp"

using namespace cufh;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

uint64_t classify_batch_serial(const std::vector<PacketRecord>& records) {
    uint64_t fronthaul = 0;
    for (const auto& rec : records)
        if (classify(rec.bytes) != FrameClass::Other) fronthaul++;
    return fronthaul;
}

uint64_t classify_batch_parallel(const std::vector<PacketRecord>& records) {
    uint64_t fronthaul = 0;
#pragma omp parallel for schedule(static) reduction(+ : fronthaul)
    for (int64_t i = 0; i < static_cast<int64_t>(records.size()); ++i)
        if (classify(records[static_cast<std::size_t>(i)].bytes) != FrameClass::Other)
            fronthaul++;
    return fronthaul;
}

} // namespace

int main(int argc, char** argv) {
    double volumeMbit = argc > 1 ? std::atof(argv[1]) : 1000; // one second of the top tier
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel paths run serially\n");
#endif

    auto dst = *MacAddress::parse("02:aa:bb:00:00:01");
    auto peer = *MacAddress::parse("02:aa:bb:00:00:02");
    FrameTemplate tmpl = synthesize_template(FrameClass::CPlaneDL, 64, dst, peer);
    EditSet edits;
    SourceMacStrategy random;
    random.kind = SourceMacStrategy::Kind::RandomPerPacket;
    random.seed = 7;
    edits.src = random;

    std::printf("forging %.0f Mbit of 64-byte frames (%llu records)\n", volumeMbit,
                static_cast<unsigned long long>(attack_packet_count(volumeMbit, 64)));

    auto t0 = Clock::now();
    auto serial = build_attack_records_serial(tmpl, volumeMbit, edits);
    double tSerial = seconds_since(t0);

    t0 = Clock::now();
    auto parallel = build_attack_records(tmpl, volumeMbit, edits);
    double tParallel = seconds_since(t0);

    bool identical = serial == parallel;
    std::printf("forge   serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", tSerial,
                tParallel, tSerial / tParallel, identical ? "outputs identical" : "MISMATCH");

    t0 = Clock::now();
    uint64_t a = classify_batch_serial(serial);
    double tcSerial = seconds_since(t0);
    t0 = Clock::now();
    uint64_t b = classify_batch_parallel(serial);
    double tcParallel = seconds_since(t0);
    std::printf("classify serial %7.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", tcSerial,
                tcParallel, tcSerial / tcParallel, a == b ? "counts match" : "MISMATCH");

    return identical && a == b ? 0 : 1;
}
