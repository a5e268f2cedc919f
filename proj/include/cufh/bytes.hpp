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

#ifndef CUFH_BYTES_HPP
#define CUFH_BYTES_HPP

#include <cstdint>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cufh {

/// Thrown on malformed or truncated wire data. Carries the byte offset at
/// which parsing could not continue.
class CodecError : public std::runtime_error {
public:
    CodecError(std::string msg, std::size_t offset)
        : std::runtime_error(msg + " (at byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Non-fatal decoder observations (e.g. nonzero pad bytes).
using CodecWarnings = std::vector<std::string>;

/// Big-endian byte appender. All multi-byte fields on the fronthaul wire are
/// network byte order.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }

    void u16be(uint16_t v) {
        buf_.push_back(static_cast<uint8_t>(v >> 8));
        buf_.push_back(static_cast<uint8_t>(v & 0xFF));
    }

    void u32be(uint32_t v) {
        buf_.push_back(static_cast<uint8_t>(v >> 24));
        buf_.push_back(static_cast<uint8_t>((v >> 16) & 0xFF));
        buf_.push_back(static_cast<uint8_t>((v >> 8) & 0xFF));
        buf_.push_back(static_cast<uint8_t>(v & 0xFF));
    }

    void bytes(std::span<const uint8_t> b) { buf_.insert(buf_.end(), b.begin(), b.end()); }

    void zeros(std::size_t n) { buf_.insert(buf_.end(), n, 0); }

    std::size_t size() const noexcept { return buf_.size(); }
    uint8_t& operator[](std::size_t i) { return buf_[i]; }

    std::vector<uint8_t> take() { return std::move(buf_); }
    const std::vector<uint8_t>& view() const noexcept { return buf_; }

private:
    std::vector<uint8_t> buf_;
};

/// Bounds-checked big-endian reader over a borrowed span.
class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    std::size_t offset() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return data_.size() - pos_; }

    uint8_t u8() {
        need(1, "u8");
        return data_[pos_++];
    }

    uint16_t u16be() {
        need(2, "u16");
        uint16_t v = static_cast<uint16_t>((data_[pos_] << 8) | data_[pos_ + 1]);
        pos_ += 2;
        return v;
    }

    uint32_t u32be() {
        need(4, "u32");
        uint32_t v = (static_cast<uint32_t>(data_[pos_]) << 24) |
                     (static_cast<uint32_t>(data_[pos_ + 1]) << 16) |
                     (static_cast<uint32_t>(data_[pos_ + 2]) << 8) |
                     static_cast<uint32_t>(data_[pos_ + 3]);
        pos_ += 4;
        return v;
    }

    std::span<const uint8_t> bytes(std::size_t n, const char* what = "bytes") {
        need(n, what);
        auto s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }

    std::span<const uint8_t> rest() {
        auto s = data_.subspan(pos_);
        pos_ = data_.size();
        return s;
    }

private:
    void need(std::size_t n, const char* what) {
        if (data_.size() - pos_ < n)
            throw CodecError(std::string("truncated input reading ") + what, data_.size());
    }

    std::span<const uint8_t> data_;
    std::size_t pos_ = 0;
};

/// MSB-first bit appender for sub-byte packed fields (beamforming weights).
class BitWriter {
public:
    /// Appends the low `bits` bits of `value`, most significant bit first.
    void put(uint32_t value, unsigned bits) {
        for (unsigned i = bits; i-- > 0;) {
            if (fill_ == 0) buf_.push_back(0);
            buf_.back() = static_cast<uint8_t>(buf_.back() | (((value >> i) & 1u) << (7 - fill_)));
            fill_ = (fill_ + 1) % 8;
        }
    }

    const std::vector<uint8_t>& bytes() const noexcept { return buf_; }

private:
    std::vector<uint8_t> buf_;
    unsigned fill_ = 0;
};

/// MSB-first bit reader over a borrowed span.
class BitReader {
public:
    explicit BitReader(std::span<const uint8_t> data) : data_(data) {}

    uint32_t get(unsigned bits) {
        uint32_t v = 0;
        for (unsigned i = 0; i < bits; ++i) {
            std::size_t byte = bit_ / 8;
            if (byte >= data_.size())
                throw CodecError("truncated bit field", data_.size());
            v = (v << 1) | ((data_[byte] >> (7 - bit_ % 8)) & 1u);
            ++bit_;
        }
        return v;
    }

    std::size_t bits_consumed() const noexcept { return bit_; }
    std::size_t bits_available() const noexcept { return data_.size() * 8 - bit_; }

private:
    std::span<const uint8_t> data_;
    std::size_t bit_ = 0;
};

/// Sign-extends the low `bits` bits of `v`.
inline int32_t sign_extend(uint32_t v, unsigned bits) {
    uint32_t mask = 1u << (bits - 1);
    return static_cast<int32_t>((v ^ mask) - mask);
}

std::string to_hex(std::span<const uint8_t> data);
std::vector<uint8_t> from_hex(const std::string& hex);

} // namespace cufh

#endif
