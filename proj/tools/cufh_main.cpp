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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cufh/campaign.hpp"
#include "cufh/cplane.hpp"
#include "cufh/forge.hpp"
#include "cufh/rx_meter.hpp"
#include "cufh/tx_engine.hpp"
#include "cufh/uplane.hpp"

namespace {

using namespace cufh;

MacAddress parse_mac_or_die(const std::string& text, const std::string& what) {
    auto mac = MacAddress::parse(text);
    if (!mac) throw CLI::ValidationError(what, "bad MAC address '" + text + "'");
    return *mac;
}

SourceMacStrategy parse_strategy_or_die(const std::string& text) {
    auto s = SourceMacStrategy::parse(text);
    if (!s)
        throw CLI::ValidationError(
            "--src", "expected spoof:<mac> | random[:seed] | broadcast | same-as-dst | fixed:<mac>");
    return *s;
}

FrameTemplate template_from_spec(const std::string& spec) {
    auto colon = spec.rfind(':');
    std::string clsText = colon == std::string::npos ? spec : spec.substr(0, colon);
    auto cls = frame_class_from_string(clsText);
    if (!cls || *cls == FrameClass::Other)
        throw CLI::ValidationError("--template",
                                   "expected <cplane-dl|uplane-dl|uplane-ul>[:wire-bytes]");
    std::size_t wire = min_template_wire_bytes(*cls);
    if (colon != std::string::npos) wire = std::stoul(spec.substr(colon + 1));
    return synthesize_template(*cls, wire, *MacAddress::parse("02:aa:bb:00:00:01"),
                               *MacAddress::parse("02:aa:bb:00:00:02"));
}

std::string resolve_calibration(const std::string& name) {
    namespace fs = std::filesystem;
    if (fs::exists(name)) return name;
    if (const char* dir = std::getenv("CUFH_CALIBRATION_DIR")) {
        fs::path p = fs::path(dir) / name;
        if (fs::exists(p)) return p.string();
    }
    return name; // let the loader produce the error
}

void dissect_frame(const std::vector<uint8_t>& bytes, std::size_t index, bool asJson,
                   std::ostream& os) {
    nlohmann::ordered_json j;
    j["index"] = index;
    j["stored_bytes"] = bytes.size();
    j["wire_bytes"] = wire_length_of_encoded(bytes.size());
    try {
        EthFrame frame = decode_frame(bytes);
        j["dst"] = frame.dst.to_string();
        j["src"] = frame.src.to_string();
        if (frame.vlan) {
            j["vlan"] = {{"pcp", frame.vlan->pcp},
                         {"dei", frame.vlan->dei},
                         {"vid", frame.vlan->vid}};
        }
        char et[8];
        std::snprintf(et, sizeof et, "0x%04x", frame.ethertype);
        j["ethertype"] = et;
        FrameClass cls = classify(frame);
        j["class"] = std::string(to_string(cls));
        CodecWarnings warnings;
        if (cls == FrameClass::CPlaneDL || cls == FrameClass::CPlaneUL) {
            CPlaneMessage m = decode_cplane(frame.payload, &warnings);
            j["cplane"] = {{"rtcid", m.rtcid},
                           {"seq", m.seq.sequenceId},
                           {"frame_id", m.frameId},
                           {"subframe", m.subframeId},
                           {"slot", m.slotId},
                           {"start_symbol", m.startSymbolId},
                           {"sections", m.sections.size()}};
            if (!m.sections.empty()) {
                const auto& s = m.sections.front();
                j["cplane"]["section0"] = {{"section_id", s.sectionId},
                                           {"start_prbc", s.startPrbc},
                                           {"num_prbc", s.numPrbc},
                                           {"num_symbol", s.numSymbol},
                                           {"beam_id", s.beamId},
                                           {"ext1", s.extension.has_value()}};
                if (s.extension)
                    j["cplane"]["section0"]["bfw_pairs"] = s.extension->weights.size();
            }
        } else if (cls == FrameClass::UPlaneDL || cls == FrameClass::UPlaneUL) {
            UPlaneMessage m = decode_uplane(frame.payload);
            j["uplane"] = {{"pcid", m.pcid},
                           {"seq", m.seq.sequenceId},
                           {"frame_id", m.frameId},
                           {"subframe", m.subframeId},
                           {"slot", m.slotId},
                           {"symbol", m.symbolId},
                           {"sections", m.sections.size()}};
            if (!m.sections.empty()) {
                const auto& s = m.sections.front();
                j["uplane"]["section0"] = {{"section_id", s.sectionId},
                                           {"start_prbu", s.startPrbu},
                                           {"num_prbu", s.numPrbu},
                                           {"iq_samples", s.iq.size()}};
            }
        }
        for (const auto& w : warnings) j["warnings"].push_back(w);
    } catch (const CodecError& e) {
        j["error"] = e.what();
    }
    if (asJson) {
        os << j.dump() << '\n';
    } else {
        os << "#" << index << " " << j["class"].get<std::string>() << " "
           << j.value("src", std::string("?")) << " -> " << j.value("dst", std::string("?"))
           << " (" << bytes.size() << " bytes";
        if (j.contains("vlan")) os << ", vlan " << j["vlan"]["vid"].get<int>();
        os << ")";
        if (j.contains("error")) os << "  ! " << j["error"].get<std::string>();
        os << '\n';
    }
}

EditSet gather_edits(const std::string& srcText, const std::string& dstText, int vlanId,
                     bool stripVlan) {
    EditSet edits;
    if (!srcText.empty()) edits.src = parse_strategy_or_die(srcText);
    if (!dstText.empty()) edits.dst = parse_mac_or_die(dstText, "--dst");
    if (vlanId >= 0) {
        VlanTag tag;
        tag.vid = static_cast<uint16_t>(vlanId);
        edits.vlan = tag;
    }
    edits.stripVlan = stripVlan;
    return edits;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    return file;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"O-RAN open-fronthaul C/U-Plane DoS test toolkit"};
    app.require_subcommand(1);

    // ---- forge ----------------------------------------------------------
    auto* forge = app.add_subcommand("forge", "build an attack capture from a template");
    std::string forgeTemplate, forgeIn, forgeSrc, forgeDst, forgeOut;
    double forgeVolume = 0;
    int forgePick = 0, forgeVlan = -1;
    bool forgeStrip = false, forgeSerial = false;
    forge->add_option("--template", forgeTemplate, "synthesize base frame: <class>[:wire-bytes]");
    forge->add_option("--in", forgeIn, "choose the base frame from this capture");
    forge->add_option("--pick", forgePick, "record index within --in (default 0)");
    forge->add_option("--volume", forgeVolume, "volume to generate in Mbit")->required();
    forge->add_option("--src", forgeSrc, "source MAC strategy");
    forge->add_option("--dst", forgeDst, "destination MAC");
    forge->add_option("--vlan", forgeVlan, "set 802.1Q VLAN id");
    forge->add_flag("--strip-vlan", forgeStrip, "remove any 802.1Q tag");
    forge->add_flag("--serial", forgeSerial, "use the single-threaded builder");
    forge->add_option("--out", forgeOut, "output capture path")->required();

    // ---- dissect --------------------------------------------------------
    auto* dissect = app.add_subcommand("dissect", "decode and print a capture");
    std::string dissectPath;
    bool dissectJson = false;
    std::size_t dissectMax = 0;
    dissect->add_option("capture", dissectPath, "capture file")->required();
    dissect->add_flag("--json", dissectJson, "one JSON object per packet");
    dissect->add_option("--max", dissectMax, "stop after this many packets (0 = all)");

    // ---- attack ---------------------------------------------------------
    auto* attack = app.add_subcommand("attack", "paced transmission of forged traffic");
    std::string atkPcap, atkTemplate, atkRamp, atkSrc, atkDst, atkPort = "loopback", atkOut;
    double atkRate = 0;
    uint32_t atkDuration = 30;
    int atkVlan = -1;
    bool atkStrip = false, atkRealtime = false, atkAuthorized = false, atkAllowBcast = false;
    attack->add_option("--pcap", atkPcap, "transmit records from this capture");
    attack->add_option("--template", atkTemplate, "or synthesize: <class>[:wire-bytes]");
    attack->add_option("--rate", atkRate, "constant rate in Mbps");
    attack->add_option("--ramp", atkRamp, "incremental rate <startMbps:stepMbps>");
    attack->add_option("--duration", atkDuration, "seconds to run (default 30)");
    attack->add_option("--src", atkSrc, "source MAC strategy");
    attack->add_option("--dst", atkDst, "destination MAC");
    attack->add_option("--vlan", atkVlan, "set 802.1Q VLAN id");
    attack->add_flag("--strip-vlan", atkStrip, "remove any 802.1Q tag");
    attack->add_option("--port", atkPort, "loopback or an interface name");
    attack->add_flag("--realtime", atkRealtime, "pace on the wall clock");
    attack->add_flag("--i-am-authorized", atkAuthorized,
                     "confirm authorization to emit on a real interface");
    attack->add_flag("--allow-broadcast-dst", atkAllowBcast,
                     "permit a broadcast destination on a real interface");
    attack->add_option("--out", atkOut, "write run stats JSON here");

    // ---- meter ----------------------------------------------------------
    auto* meterCmd = app.add_subcommand("meter", "receive-side classification and throughput");
    std::string meterPcap, meterPort, meterOut, meterFormat = "text";
    uint32_t meterDuration = 30;
    meterCmd->add_option("--pcap", meterPcap, "meter a capture offline");
    meterCmd->add_option("--port", meterPort, "meter a live interface");
    meterCmd->add_option("--duration", meterDuration, "live capture window in seconds");
    meterCmd->add_option("--out", meterOut, "output path (default stdout)");
    meterCmd->add_option("--format", meterFormat, "text | records");

    // ---- verify ---------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "tool compliance self-checks on loopback");
    bool verifyJson = false;
    uint32_t verifyTierSeconds = 30;
    verify->add_flag("--json", verifyJson, "machine-readable output");
    verify->add_option("--tier-seconds", verifyTierSeconds,
                       "schedule length for the tier checks");

    // ---- matrix ---------------------------------------------------------
    auto* matrix = app.add_subcommand("matrix", "run a PASS/FAIL campaign");
    std::string suite = "tifg722", backend, matrixOut = ".", matrixDst, matrixPeer;
    uint64_t matrixSeed = 1;
    int matrixRepeat = 1;
    uint32_t matrixAttackSeconds = 30;
    bool matrixBroadcast = false, matrixAuthorized = false;
    matrix->add_option("--suite", suite, "tifg722 | extended");
    matrix->add_option("--backend", backend, "sim:<calibration.cfg> | port:<ifname>")
        ->required();
    matrix->add_option("--out", matrixOut, "output directory");
    matrix->add_option("--seed", matrixSeed, "campaign seed");
    matrix->add_option("--repeat", matrixRepeat, "verdict stability sweep count");
    matrix->add_option("--attack-seconds", matrixAttackSeconds, "attack window per cell");
    matrix->add_flag("--include-broadcast", matrixBroadcast,
                     "add the broadcast source column (no ground truth)");
    matrix->add_option("--dst", matrixDst, "port backend: target MAC");
    matrix->add_option("--peer-mac", matrixPeer, "port backend: spoofed peer MAC");
    matrix->add_flag("--i-am-authorized", matrixAuthorized,
                     "confirm authorization for a port backend campaign");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*forge) {
            FrameTemplate tmpl;
            if (!forgeTemplate.empty()) {
                tmpl = template_from_spec(forgeTemplate);
            } else if (!forgeIn.empty()) {
                auto records = read_pcap(forgeIn);
                if (forgePick < 0 || static_cast<std::size_t>(forgePick) >= records.size())
                    throw CLI::ValidationError("--pick", "record index out of range");
                tmpl = FrameTemplate::from_record(records[static_cast<std::size_t>(forgePick)]);
            } else {
                throw CLI::ValidationError("forge", "need --template or --in");
            }
            EditSet edits = gather_edits(forgeSrc, forgeDst, forgeVlan, forgeStrip);
            auto records = forgeSerial ? build_attack_records_serial(tmpl, forgeVolume, edits)
                                       : build_attack_records(tmpl, forgeVolume, edits);
            write_pcap(forgeOut, records);
            std::cout << "wrote " << records.size() << " records ("
                      << wire_length_of_encoded(records.front().bytes.size())
                      << " wire bytes each) to " << forgeOut << '\n';
            return 0;
        }

        if (*dissect) {
            auto records = read_pcap(dissectPath);
            std::size_t n = records.size();
            if (dissectMax > 0 && dissectMax < n) n = dissectMax;
            for (std::size_t i = 0; i < n; ++i)
                dissect_frame(records[i].bytes, i, dissectJson, std::cout);
            if (n < records.size())
                std::cout << "... " << records.size() - n << " more records\n";
            return 0;
        }

        if (*attack) {
            std::vector<PacketRecord> records;
            if (!atkPcap.empty()) {
                records = read_pcap(atkPcap);
            } else if (!atkTemplate.empty()) {
                records.push_back(template_from_spec(atkTemplate).record);
            } else {
                throw CLI::ValidationError("attack", "need --pcap or --template");
            }

            RateSchedule schedule;
            if (!atkRamp.empty()) {
                auto colon = atkRamp.find(':');
                if (colon == std::string::npos)
                    throw CLI::ValidationError("--ramp", "expected <startMbps:stepMbps>");
                schedule = RateSchedule::ramp(std::stod(atkRamp.substr(0, colon)),
                                              std::stod(atkRamp.substr(colon + 1)), atkDuration);
            } else if (atkRate > 0) {
                schedule = RateSchedule::constant(atkRate, atkDuration);
            } else {
                throw CLI::ValidationError("attack", "need --rate or --ramp");
            }

            TxRunConfig cfg;
            cfg.schedule = schedule;
            cfg.edits = gather_edits(atkSrc, atkDst, atkVlan, atkStrip);
            cfg.pacing = atkRealtime ? PacingMode::RealTime : PacingMode::SimClock;

            std::unique_ptr<TxPort> owned;
            LoopbackPort loopback;
            Meter meter;
            TxPort* port = nullptr;
            if (atkPort == "loopback") {
                loopback.set_sink(meter.sink());
                port = &loopback;
            } else {
                if (!atkAuthorized)
                    throw CLI::ValidationError(
                        "--port", "live emission requires --i-am-authorized");
                if (cfg.edits.dst && cfg.edits.dst->is_broadcast() && !atkAllowBcast)
                    throw CLI::ValidationError(
                        "--dst", "broadcast destination refused (--allow-broadcast-dst)");
                owned = RawLinkPort::open(atkPort);
                port = owned.get();
                cfg.pacing = PacingMode::RealTime; // never blast a real link
            }

            TxStats stats = run_attack(records, cfg, *port);
            std::cout << "emitted " << stats.totalFrames << " frames, "
                      << stats.totalWireBytes * 8 << " wire bits over "
                      << stats.perSecond.size() << " s on " << port->description();
            if (stats.aborted) std::cout << " (ABORTED: port failure)";
            std::cout << '\n';
            if (atkPort == "loopback") {
                MeterReport m = meter.finish(atkDuration);
                std::cout << "loopback meter: " << m.totalFrames << " frames received\n";
            }
            if (!atkOut.empty()) {
                nlohmann::ordered_json j;
                j["total_frames"] = stats.totalFrames;
                j["total_wire_bytes"] = stats.totalWireBytes;
                j["aborted"] = stats.aborted;
                j["max_slot_overshoot_ms"] = stats.maxSlotOvershootMs;
                j["per_second"] = nlohmann::ordered_json::array();
                for (const auto& s : stats.perSecond)
                    j["per_second"].push_back({{"second", s.second},
                                               {"frames", s.frames},
                                               {"scheduled_bits", s.scheduledBits},
                                               {"emitted_bits", s.emittedBits}});
                std::ofstream out(atkOut);
                out << j.dump(2) << '\n';
            }
            return stats.aborted ? 1 : 0;
        }

        if (*meterCmd) {
            Meter meter;
            std::optional<uint32_t> duration;
            if (!meterPcap.empty()) {
                for (const auto& rec : read_pcap(meterPcap)) {
                    uint64_t ts = static_cast<uint64_t>(rec.tsSec) * 1'000'000'000ull +
                                  static_cast<uint64_t>(rec.tsUsec) * 1000ull;
                    meter.ingest(rec.bytes, ts);
                }
            } else if (!meterPort.empty()) {
                auto port = RawLinkPort::open(meterPort);
                duration = meterDuration;
                std::vector<uint8_t> buf;
                uint64_t ts = 0, t0 = 0;
                while (true) {
                    if (!port->receive(buf, ts, 100)) {
                        if (t0 && (ts - t0) / 1'000'000'000ull >= meterDuration) break;
                        continue;
                    }
                    if (!t0) t0 = ts;
                    uint64_t rel = ts - t0;
                    if (rel / 1'000'000'000ull >= meterDuration) break;
                    meter.ingest(buf, rel);
                }
            } else {
                throw CLI::ValidationError("meter", "need --pcap or --port");
            }
            MeterReport report = meter.finish(duration);
            std::ofstream file;
            std::ostream& os = open_out(file, meterOut);
            if (meterFormat == "records") write_meter_records(os, report);
            else write_meter_text(os, report);
            return 0;
        }

        if (*verify) {
            ComplianceReport report = verify_tool_compliance(verifyTierSeconds);
            if (verifyJson) write_compliance_json(std::cout, report);
            else write_compliance_text(std::cout, report);
            return report.all_pass() ? 0 : 1;
        }

        if (*matrix) {
            if (suite != "tifg722" && suite != "extended")
                throw CLI::ValidationError("--suite", "expected tifg722 or extended");

            namespace fs = std::filesystem;
            fs::create_directories(matrixOut);

            if (backend.rfind("sim:", 0) == 0) {
                CampaignConfig config;
                config.topology =
                    sim::TopologyConfig::load(resolve_calibration(backend.substr(4)));
                config.seed = matrixSeed;
                config.attackSeconds = matrixAttackSeconds;
                config.repeat = matrixRepeat;
                config.includeBroadcast = matrixBroadcast;
                MatrixReport report =
                    suite == "tifg722" ? run_tifg_722(config) : run_extended_matrix(config);

                fs::path txt = fs::path(matrixOut) / (suite + "_matrix.txt");
                fs::path json = fs::path(matrixOut) / (suite + "_matrix.json");
                {
                    std::ofstream os(txt);
                    write_matrix_text(os, report);
                }
                {
                    std::ofstream os(json);
                    write_matrix_json(os, report);
                }
                write_matrix_text(std::cout, report);
                std::cout << "\nwrote " << txt.string() << " and " << json.string() << '\n';
                return 0;
            }

            if (backend.rfind("port:", 0) == 0) {
                // Live campaigns emit the traffic; PASS/FAIL comes from
                // observing the system under test, which this host cannot
                // do. Rows record transmit statistics only.
                if (!matrixAuthorized)
                    throw CLI::ValidationError("--backend",
                                               "port backend requires --i-am-authorized");
                if (matrixDst.empty() || matrixPeer.empty())
                    throw CLI::ValidationError("--backend",
                                               "port backend needs --dst and --peer-mac");
                MacAddress dst = parse_mac_or_die(matrixDst, "--dst");
                if (dst.is_broadcast())
                    throw CLI::ValidationError("--dst", "broadcast destination refused");
                MacAddress peer = parse_mac_or_die(matrixPeer, "--peer-mac");

                auto port = RawLinkPort::open(backend.substr(5));
                std::vector<std::string> sources = {"peer", "random"};
                std::vector<FrameClass> traffics = {FrameClass::CPlaneDL};
                if (suite == "extended") {
                    sources.push_back("same-as-dst");
                    traffics.push_back(FrameClass::UPlaneDL);
                    traffics.push_back(FrameClass::UPlaneUL);
                }
                nlohmann::ordered_json log = nlohmann::ordered_json::array();
                for (FrameClass traffic : traffics)
                    for (const auto& srcLabel : sources)
                        for (double tier : {10.0, 100.0, 1000.0}) {
                            FrameTemplate tmpl = synthesize_template(
                                traffic, min_template_wire_bytes(traffic), dst, peer);
                            TxRunConfig cfg;
                            cfg.schedule = RateSchedule::constant(tier, matrixAttackSeconds);
                            cfg.pacing = PacingMode::RealTime;
                            SourceMacStrategy s;
                            if (srcLabel == "peer") {
                                s.kind = SourceMacStrategy::Kind::SpoofedPeer;
                                s.mac = peer;
                            } else if (srcLabel == "random") {
                                s.kind = SourceMacStrategy::Kind::RandomPerPacket;
                                s.seed = matrixSeed;
                            } else {
                                s.kind = SourceMacStrategy::Kind::SameAsDestination;
                            }
                            cfg.edits.src = s;
                            cfg.edits.dst = dst;
                            TxStats stats = run_attack({tmpl.record}, cfg, *port);
                            log.push_back({{"traffic", std::string(to_string(traffic))},
                                           {"src", srcLabel},
                                           {"tier_mbps", tier},
                                           {"frames", stats.totalFrames},
                                           {"aborted", stats.aborted}});
                            std::cout << to_string(traffic) << " " << srcLabel << " " << tier
                                      << " Mbps: " << stats.totalFrames << " frames emitted\n";
                        }
                std::ofstream os(fs::path(matrixOut) / (suite + "_live_log.json"));
                os << log.dump(2) << '\n';
                std::cout << "verdicts require observing the device under test; "
                             "see the sim backend for desk-scale PASS/FAIL\n";
                return 0;
            }

            throw CLI::ValidationError("--backend", "expected sim:<cfg> or port:<ifname>");
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
