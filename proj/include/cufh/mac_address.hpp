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

#ifndef CUFH_MAC_ADDRESS_HPP
#define CUFH_MAC_ADDRESS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace cufh {

struct MacAddress {
    std::array<uint8_t, 6> octets{};

    static constexpr MacAddress broadcast() {
        return MacAddress{{0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF}};
    }

    /// I/G bit of the first octet.
    bool is_multicast() const noexcept { return (octets[0] & 0x01) != 0; }
    bool is_broadcast() const noexcept { return *this == broadcast(); }
    /// U/L bit of the first octet.
    bool is_locally_administered() const noexcept { return (octets[0] & 0x02) != 0; }
    bool is_unicast() const noexcept { return !is_multicast(); }

    std::string to_string() const;

    /// Parses "aa:bb:cc:dd:ee:ff" (also accepts '-' separators).
    static std::optional<MacAddress> parse(const std::string& text);

    auto operator<=>(const MacAddress&) const = default;
};

} // namespace cufh

#endif
