#!/usr/bin/env python3
# Copyright (c) 2026 cufh toolkit authors.
# SPDX-License-Identifier: Apache-2.0
"""Independent byte-layout oracle for the fronthaul codec test fixtures.

Builds reference frames by summing documented bit widths with plain
struct/bit arithmetic -- deliberately sharing no code with the C++
implementation -- and writes hex fixtures plus a JSON field dump under
tests/golden/.  Run from the repository root:

    python3 tools/oracle/frame_layout_oracle.py

The generated fixtures are checked in; re-run only when reference messages
change, and re-validate per tests/golden/README.md.
"""

import json
import math
import os
import struct
import sys


class Bits:
    def __init__(self):
        self.bits = []

    def put(self, value, width):
        assert 0 <= value < (1 << width), (value, width)
        for i in reversed(range(width)):
            self.bits.append((value >> i) & 1)

    def bytes(self):
        assert len(self.bits) % 8 == 0
        out = bytearray()
        for i in range(0, len(self.bits), 8):
            b = 0
            for bit in self.bits[i:i + 8]:
                b = (b << 1) | bit
            out.append(b)
        return bytes(out)


def mac(text):
    return bytes(int(p, 16) for p in text.split(":"))


def ecpri_header(msg_type, payload_size, eaxc, seq, ebit=1, subseq=0, version=1):
    b = Bits()
    b.put(version, 4)
    b.put(0, 3)       # reserved
    b.put(0, 1)       # concatenation
    b.put(msg_type, 8)
    b.put(payload_size, 16)
    b.put(eaxc, 16)
    b.put(seq, 8)
    b.put(ebit, 1)
    b.put(subseq, 7)
    return b.bytes()


def cplane_app(direction, payload_ver, filter_idx, frame_id, subframe, slot,
               start_sym, sections, section_type=1, ud_iq_width=16, ud_comp=0):
    b = Bits()
    b.put(direction, 1)
    b.put(payload_ver, 3)
    b.put(filter_idx, 4)
    b.put(frame_id, 8)
    b.put(subframe, 4)
    b.put(slot, 6)
    b.put(start_sym, 6)
    b.put(len(sections), 8)
    b.put(section_type, 8)
    b.put(ud_iq_width % 16, 4)  # width nibble: 16 encodes as 0
    b.put(ud_comp, 4)
    b.put(0, 8)                 # reserved
    out = bytearray(b.bytes())
    for s in sections:
        out += s
    return bytes(out)


def csection1(section_id, rb, sym_inc, start_prbc, num_prbc, re_mask,
              num_symbol, beam_id, ext=None):
    b = Bits()
    b.put(section_id, 12)
    b.put(rb, 1)
    b.put(sym_inc, 1)
    b.put(start_prbc, 10)
    b.put(num_prbc, 8)
    b.put(re_mask, 12)
    b.put(num_symbol, 4)
    b.put(1 if ext is not None else 0, 1)  # ef
    b.put(beam_id, 15)
    out = bytearray(b.bytes())
    if ext is not None:
        out += ext
    return bytes(out)


def bfw_ext1(width, comp_meth, weights):
    weight_bits = 2 * width * len(weights)
    raw = 3 + math.ceil(weight_bits / 8)
    total = math.ceil(raw / 4) * 4
    b = Bits()
    b.put(0, 1)            # ef: last extension
    b.put(1, 7)            # extType 1
    b.put(total // 4, 8)   # extLen in words
    b.put(width % 16, 4)
    b.put(comp_meth, 4)
    mask = (1 << width) - 1
    for i, q in weights:
        b.put(i & mask, width)
        b.put(q & mask, width)
    out = bytearray(b.bytes())
    out += bytes(total - len(out))
    return bytes(out), total // 4


def uplane_app(direction, payload_ver, filter_idx, frame_id, subframe, slot,
               symbol, sections):
    b = Bits()
    b.put(direction, 1)
    b.put(payload_ver, 3)
    b.put(filter_idx, 4)
    b.put(frame_id, 8)
    b.put(subframe, 4)
    b.put(slot, 6)
    b.put(symbol, 6)
    out = bytearray(b.bytes())
    for s in sections:
        out += s
    return bytes(out)


def usection(section_id, rb, sym_inc, start_prbu, num_prbu, iq):
    assert len(iq) == 12 * num_prbu
    b = Bits()
    b.put(section_id, 12)
    b.put(rb, 1)
    b.put(sym_inc, 1)
    b.put(start_prbu, 10)
    b.put(num_prbu, 8)
    out = bytearray(b.bytes())
    for i, q in iq:
        out += struct.pack(">hh", i, q)
    return bytes(out)


def eth_frame(dst, src, ethertype, payload, vlan=None):
    out = bytearray(mac(dst) + mac(src))
    if vlan is not None:
        pcp, dei, vid = vlan
        out += struct.pack(">HH", 0x8100, (pcp << 13) | (dei << 12) | vid)
    out += struct.pack(">H", ethertype)
    out += payload
    if len(out) < 60:
        out += bytes(60 - len(out))
    return bytes(out)


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    golden = os.path.normpath(os.path.join(here, "..", "..", "tests", "golden"))
    os.makedirs(golden, exist_ok=True)

    odu = "02:aa:bb:00:00:01"
    oru = "02:aa:bb:00:00:02"

    # --- Reference 1: minimal C-Plane frame (1 section, no extension) -----
    sec = csection1(section_id=1, rb=0, sym_inc=0, start_prbc=0, num_prbc=4,
                    re_mask=0xFFF, num_symbol=14, beam_id=0)
    assert len(sec) == 8, len(sec)
    app = cplane_app(direction=1, payload_ver=1, filter_idx=0, frame_id=5,
                     subframe=2, slot=1, start_sym=0, sections=[sec])
    assert len(app) == 16, len(app)  # 8 header + 8 section
    pdu = ecpri_header(msg_type=2, payload_size=len(app), eaxc=1, seq=0) + app
    frame_min = eth_frame(oru, odu, 0xAEFE, pdu)
    assert len(frame_min) == 60, len(frame_min)
    wire = len(frame_min) + 4  # FCS
    assert wire == 64, wire

    # --- Reference 2: C-Plane with extType-1 (4 weight pairs, width 16) ---
    ext, ext_words = bfw_ext1(width=16, comp_meth=0,
                              weights=[(100, -100), (2000, -2000),
                                       (300, -1), (-32768, 32767)])
    assert ext_words == 5, ext_words  # 2 + 1 + 16 bytes -> 20 bytes -> 5 words
    sec_ext = csection1(section_id=2, rb=0, sym_inc=0, start_prbc=16,
                        num_prbc=8, re_mask=0xFFF, num_symbol=1,
                        beam_id=0x1234, ext=ext)
    app_ext = cplane_app(direction=1, payload_ver=1, filter_idx=0, frame_id=9,
                         subframe=3, slot=2, start_sym=7, sections=[sec_ext])
    pdu_ext = ecpri_header(msg_type=2, payload_size=len(app_ext), eaxc=0x0203,
                           seq=17) + app_ext
    frame_ext = eth_frame(oru, odu, 0xAEFE, pdu_ext)

    # --- Reference 3: U-Plane downlink, 1 section, numPrbu = 2 ------------
    iq = [(100 + k, -(100 + k)) for k in range(24)]
    usec = usection(section_id=1, rb=0, sym_inc=0, start_prbu=10, num_prbu=2, iq=iq)
    assert len(usec) == 4 + 96
    uapp = uplane_app(direction=1, payload_ver=1, filter_idx=0, frame_id=5,
                      subframe=2, slot=1, symbol=3, sections=[usec])
    updu = ecpri_header(msg_type=0, payload_size=len(uapp), eaxc=2, seq=7) + uapp
    frame_u = eth_frame(oru, odu, 0xAEFE, updu)

    # numPrbu = 1 puts 48 bytes of IQ after the 4-byte section header.
    one_prb = usection(1, 0, 0, 0, 1, [(0, 0)] * 12)
    assert len(one_prb) - 4 == 48

    # --- Reference 4: VLAN-tagged frame for the dissector cross-check -----
    frame_vlan = eth_frame(odu, oru, 0xAEFE, pdu, vlan=(5, 0, 564))
    fields_vlan = {
        "dst": odu,
        "src": oru,
        "vlan": {"pcp": 5, "dei": 0, "vid": 564},
        "ethertype": "0xaefe",
        "payload_hex": pdu.hex(),
    }

    fixtures = {
        "golden_cplane_min.hex": frame_min.hex(),
        "golden_cplane_ext.hex": frame_ext.hex(),
        "golden_uplane.hex": frame_u.hex(),
        "golden_vlan.hex": frame_vlan.hex(),
    }
    for name, hexstr in fixtures.items():
        with open(os.path.join(golden, name), "w") as f:
            f.write(hexstr + "\n")
    with open(os.path.join(golden, "golden_vlan_fields.json"), "w") as f:
        json.dump(fields_vlan, f, indent=2, sort_keys=True)
        f.write("\n")

    # Volume arithmetic spot checks used by the packet-count tests.
    assert math.ceil(10e6 / (64 * 8)) == 19532
    assert (30 * 10**7) // 512 == 585937
    assert 10**9 // 512 == 1953125

    print("wrote fixtures to", golden)
    for name, hexstr in fixtures.items():
        print(f"  {name}: {len(hexstr)//2} bytes")


if __name__ == "__main__":
    sys.exit(main())
