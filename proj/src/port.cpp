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

#include "cufh/port.hpp"

#include <cerrno>
#include <chrono>
#include <cstring>
#include <system_error>

#ifdef __linux__
#include <arpa/inet.h>
#include <linux/if_packet.h>
#include <net/ethernet.h>
#include <net/if.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>
#endif

namespace cufh {

bool LoopbackPort::send(std::span<const uint8_t> frame, uint64_t tsNanos) {
    stats_.framesSent++;
    stats_.wireBytesSent += wire_length_of_encoded(frame.size());
    if (sink_) {
        sink_(frame, tsNanos);
        return true;
    }
    std::lock_guard lock(mu_);
    queue_.push_back(RxFrame{{frame.begin(), frame.end()}, tsNanos});
    return true;
}

PortStats LoopbackPort::stats() const {
    return stats_;
}

std::vector<RxFrame> LoopbackPort::drain() {
    std::lock_guard lock(mu_);
    std::vector<RxFrame> out(std::make_move_iterator(queue_.begin()),
                             std::make_move_iterator(queue_.end()));
    queue_.clear();
    return out;
}

#ifdef __linux__

RawLinkPort::RawLinkPort(int fd, std::string ifname, int ifindex)
    : fd_(fd), ifname_(std::move(ifname)), ifindex_(ifindex) {}

RawLinkPort::~RawLinkPort() {
    if (fd_ >= 0) ::close(fd_);
}

std::unique_ptr<RawLinkPort> RawLinkPort::open(const std::string& ifname) {
    unsigned idx = if_nametoindex(ifname.c_str());
    if (idx == 0)
        throw std::system_error(errno, std::generic_category(),
                                "no such interface: " + ifname);
    int fd = ::socket(AF_PACKET, SOCK_RAW, htons(ETH_P_ALL));
    if (fd < 0)
        throw std::system_error(errno, std::generic_category(),
                                "cannot open raw socket (CAP_NET_RAW required)");
    sockaddr_ll addr{};
    addr.sll_family = AF_PACKET;
    addr.sll_protocol = htons(ETH_P_ALL);
    addr.sll_ifindex = static_cast<int>(idx);
    if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) < 0) {
        int err = errno;
        ::close(fd);
        throw std::system_error(err, std::generic_category(), "cannot bind to " + ifname);
    }
    return std::unique_ptr<RawLinkPort>(new RawLinkPort(fd, ifname, static_cast<int>(idx)));
}

bool RawLinkPort::send(std::span<const uint8_t> frame, uint64_t) {
    sockaddr_ll addr{};
    addr.sll_family = AF_PACKET;
    addr.sll_ifindex = ifindex_;
    addr.sll_halen = 6;
    std::memcpy(addr.sll_addr, frame.data(), 6);
    ssize_t n = ::sendto(fd_, frame.data(), frame.size(), 0,
                         reinterpret_cast<sockaddr*>(&addr), sizeof addr);
    if (n < 0 || static_cast<std::size_t>(n) != frame.size()) {
        stats_.sendFailures++;
        return false;
    }
    stats_.framesSent++;
    stats_.wireBytesSent += wire_length_of_encoded(frame.size());
    return true;
}

PortStats RawLinkPort::stats() const { return stats_; }

bool RawLinkPort::receive(std::vector<uint8_t>& out, uint64_t& tsNanos, int timeoutMs) {
    pollfd pfd{fd_, POLLIN, 0};
    int rc = ::poll(&pfd, 1, timeoutMs);
    if (rc <= 0) return false;
    out.resize(65536);
    ssize_t n = ::recv(fd_, out.data(), out.size(), 0);
    if (n <= 0) return false;
    out.resize(static_cast<std::size_t>(n));
    tsNanos = static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
    return true;
}

#else

RawLinkPort::RawLinkPort(int, std::string ifname, int) : ifname_(std::move(ifname)) {}
RawLinkPort::~RawLinkPort() = default;

std::unique_ptr<RawLinkPort> RawLinkPort::open(const std::string&) {
    throw std::system_error(std::make_error_code(std::errc::function_not_supported),
                            "raw link ports require Linux AF_PACKET");
}

bool RawLinkPort::send(std::span<const uint8_t>, uint64_t) { return false; }
PortStats RawLinkPort::stats() const { return stats_; }
bool RawLinkPort::receive(std::vector<uint8_t>&, uint64_t&, int) { return false; }

#endif

} // namespace cufh
