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

#ifndef CUFH_CLASSIFY_HPP
#define CUFH_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "cufh/frame.hpp"

namespace cufh {

enum class FrameClass : uint8_t {
    CPlaneDL = 0,
    CPlaneUL = 1,
    UPlaneDL = 2,
    UPlaneUL = 3,
    Other = 4,
};

constexpr std::size_t kFrameClassCount = 5;

std::string_view to_string(FrameClass c) noexcept;
std::optional<FrameClass> frame_class_from_string(std::string_view s) noexcept;

/// Total classification by eCPRI message type plus the application header's
/// direction bit. Anything that is not parseable eCPRI-over-Ethernet maps to
/// Other. Cheap: inspects headers only, never section bodies.
FrameClass classify(std::span<const uint8_t> frameBytes) noexcept;
FrameClass classify(const EthFrame& frame) noexcept;

/// Quick header peek used by the meter: class plus the stream id / sequence
/// byte without a full decode. Returns nullopt for class Other.
struct FlowKeyPeek {
    FrameClass cls;
    uint16_t eaxcId;
    uint8_t sequenceId;
};
std::optional<FlowKeyPeek> peek_flow_key(std::span<const uint8_t> frameBytes) noexcept;

} // namespace cufh

#endif
