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

#ifndef CUFH_PORT_HPP
#define CUFH_PORT_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "cufh/frame.hpp"

namespace cufh {

struct PortStats {
    uint64_t framesSent = 0;
    uint64_t wireBytesSent = 0; // includes FCS, consistent with rate accounting
    uint64_t sendFailures = 0;
};

/// Emission endpoint for the pacing loop. Frames are emitted in submission
/// order; one loop owns a port for the duration of a run.
class TxPort {
public:
    virtual ~TxPort() = default;

    /// Enqueues one frame. `tsNanos` is the emission timestamp: scheduled
    /// (virtual) time under sim-clock pacing, measured time under real-time
    /// pacing. Returns false on a send failure.
    virtual bool send(std::span<const uint8_t> frame, uint64_t tsNanos) = 0;

    virtual void flush() {}
    virtual PortStats stats() const = 0;
    virtual std::string description() const = 0;
};

struct RxFrame {
    std::vector<uint8_t> bytes;
    uint64_t tsNanos = 0;
};

using FrameSink = std::function<void(std::span<const uint8_t>, uint64_t)>;

/// In-process port: every sent frame is delivered exactly once to the
/// attached sink (synchronously), or buffered for drain() when no sink is
/// attached. This is the default backend for tests, verification, and any
/// run that needs no privileges.
class LoopbackPort : public TxPort {
public:
    /// Attach before the run starts; not thread-safe against concurrent send.
    void set_sink(FrameSink sink) { sink_ = std::move(sink); }

    bool send(std::span<const uint8_t> frame, uint64_t tsNanos) override;
    PortStats stats() const override;
    std::string description() const override { return "loopback"; }

    /// Removes and returns everything buffered so far (sink-less mode).
    std::vector<RxFrame> drain();

private:
    FrameSink sink_;
    mutable std::mutex mu_;
    std::deque<RxFrame> queue_;
    PortStats stats_;
};

/// L2 injection through an AF_PACKET socket. Requires CAP_NET_RAW and an
/// existing interface; construction throws std::system_error otherwise.
class RawLinkPort : public TxPort {
public:
    static std::unique_ptr<RawLinkPort> open(const std::string& ifname);
    ~RawLinkPort() override;

    bool send(std::span<const uint8_t> frame, uint64_t tsNanos) override;
    PortStats stats() const override;
    std::string description() const override { return "raw:" + ifname_; }

    /// Blocking receive with timeout for the live meter. Returns false on
    /// timeout. tsNanos is the local receive time.
    bool receive(std::vector<uint8_t>& out, uint64_t& tsNanos, int timeoutMs);

private:
    RawLinkPort(int fd, std::string ifname, int ifindex);

    int fd_ = -1;
    std::string ifname_;
    int ifindex_ = 0;
    PortStats stats_;
};

} // namespace cufh

#endif
