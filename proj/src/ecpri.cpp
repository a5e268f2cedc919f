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

#include "cufh/ecpri.hpp"

namespace cufh {

void encode_ecpri_header(ByteWriter& w, const EcpriHeader& h) {
    w.u8(static_cast<uint8_t>((h.version & 0xF) << 4 | (h.reserved & 0x7) << 1 |
                              (h.concatenation ? 1 : 0)));
    w.u8(h.msgType);
    w.u16be(h.payloadSize);
    w.u16be(h.eaxcId);
    w.u8(h.seq.sequenceId);
    w.u8(static_cast<uint8_t>((h.seq.lastFragment ? 0x80 : 0) | (h.seq.subSequenceId & 0x7F)));
}

EcpriHeader decode_ecpri_header(ByteReader& r) {
    EcpriHeader h;
    uint8_t b0 = r.u8();
    h.version = b0 >> 4;
    h.reserved = (b0 >> 1) & 0x7;
    h.concatenation = (b0 & 1) != 0;
    h.msgType = r.u8();
    h.payloadSize = r.u16be();
    h.eaxcId = r.u16be();
    h.seq.sequenceId = r.u8();
    uint8_t b7 = r.u8();
    h.seq.lastFragment = (b7 & 0x80) != 0;
    h.seq.subSequenceId = b7 & 0x7F;
    return h;
}

} // namespace cufh
