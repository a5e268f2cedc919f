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

#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cufh/campaign.hpp"

namespace cufh {

namespace {

using nlohmann::ordered_json;

sim::Verdict verdict_from_string(const std::string& s) {
    if (s == "PASS") return sim::Verdict::Pass;
    if (s == "FAIL") return sim::Verdict::Fail;
    throw std::invalid_argument("bad verdict '" + s + "'");
}

sim::Severity severity_from_string(const std::string& s) {
    if (s == "none") return sim::Severity::None;
    if (s == "degraded-recovered") return sim::Severity::DegradedRecovered;
    if (s == "degraded-unrecovered") return sim::Severity::DegradedUnrecovered;
    if (s == "crash-restart") return sim::Severity::CrashRestart;
    throw std::invalid_argument("bad severity '" + s + "'");
}

} // namespace

void write_matrix_text(std::ostream& os, const MatrixReport& report) {
    os << "suite " << report.suite << ", backend " << report.backend;
    if (!report.calibration.empty()) os << ", calibration " << report.calibration;
    os << ", seed " << report.seed << ", attack window " << report.attackSeconds << " s\n";

    // Column order follows the result-grid convention: peer MAC first,
    // then random, then same-as-destination (then broadcast if present).
    std::vector<std::string> targets;
    std::vector<std::string> sources;
    std::vector<double> tiers;
    std::vector<FrameClass> traffics;
    for (const auto& row : report.rows) {
        if (std::find(targets.begin(), targets.end(), row.spec.target) == targets.end())
            targets.push_back(row.spec.target);
        if (std::find(sources.begin(), sources.end(), row.spec.srcLabel) == sources.end())
            sources.push_back(row.spec.srcLabel);
        if (std::find(tiers.begin(), tiers.end(), row.spec.tierMbps) == tiers.end())
            tiers.push_back(row.spec.tierMbps);
        if (std::find(traffics.begin(), traffics.end(), row.spec.trafficType) == traffics.end())
            traffics.push_back(row.spec.trafficType);
    }

    for (const auto& target : targets) {
        os << "\n==== destination: " << target << " ====\n";
        os << std::left << std::setw(12) << "source ->";
        for (const auto& src : sources) {
            std::string label = src;
            os << std::left << std::setw(7 * tiers.size()) << label;
        }
        os << '\n' << std::left << std::setw(12) << "tier (Mbps)";
        for (std::size_t i = 0; i < sources.size(); ++i)
            for (double tier : tiers) os << std::left << std::setw(7) << tier;
        os << '\n';
        for (FrameClass traffic : traffics) {
            os << std::left << std::setw(12) << to_string(traffic);
            for (const auto& src : sources)
                for (double tier : tiers) {
                    const MatrixCell* cell = report.cell(target, traffic, src, tier);
                    os << std::left << std::setw(7)
                       << (cell ? std::string(to_string(cell->verdict)) : std::string("-"));
                }
            os << '\n';
        }
    }
}

void write_matrix_json(std::ostream& os, const MatrixReport& report) {
    ordered_json j;
    j["suite"] = report.suite;
    j["backend"] = report.backend;
    j["calibration"] = report.calibration;
    j["seed"] = report.seed;
    j["attack_seconds"] = report.attackSeconds;
    j["cells"] = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json c;
        c["target"] = row.spec.target;
        c["traffic"] = std::string(to_string(row.spec.trafficType));
        c["src"] = row.spec.srcLabel;
        c["tier_mbps"] = row.spec.tierMbps;
        c["duration_seconds"] = row.spec.durationSeconds;
        c["verdict"] = std::string(to_string(row.verdict));
        c["severity"] = std::string(to_string(row.severity));
        if (row.firstDropSecond) c["first_drop_second"] = *row.firstDropSecond;
        else c["first_drop_second"] = nullptr;
        if (row.recoveredSecond) c["recovered_second"] = *row.recoveredSecond;
        else c["recovered_second"] = nullptr;
        c["verdict_stable"] = row.verdictStable;
        j["cells"].push_back(c);
    }
    os << j.dump(2) << '\n';
}

MatrixReport load_matrix_json(std::istream& is) {
    ordered_json j = ordered_json::parse(is);
    MatrixReport report;
    report.suite = j.at("suite").get<std::string>();
    report.backend = j.at("backend").get<std::string>();
    report.calibration = j.at("calibration").get<std::string>();
    report.seed = j.at("seed").get<uint64_t>();
    report.attackSeconds = j.at("attack_seconds").get<uint32_t>();
    for (const auto& c : j.at("cells")) {
        MatrixCell cell;
        cell.spec.target = c.at("target").get<std::string>();
        auto traffic = frame_class_from_string(c.at("traffic").get<std::string>());
        if (!traffic) throw std::invalid_argument("bad traffic class in report");
        cell.spec.trafficType = *traffic;
        cell.spec.srcLabel = c.at("src").get<std::string>();
        cell.spec.tierMbps = c.at("tier_mbps").get<double>();
        cell.spec.durationSeconds = c.at("duration_seconds").get<uint32_t>();
        cell.verdict = verdict_from_string(c.at("verdict").get<std::string>());
        cell.severity = severity_from_string(c.at("severity").get<std::string>());
        if (!c.at("first_drop_second").is_null())
            cell.firstDropSecond = c.at("first_drop_second").get<uint32_t>();
        if (!c.at("recovered_second").is_null())
            cell.recoveredSecond = c.at("recovered_second").get<uint32_t>();
        cell.verdictStable = c.at("verdict_stable").get<bool>();
        report.rows.push_back(cell);
    }
    return report;
}

void write_compliance_text(std::ostream& os, const ComplianceReport& report) {
    for (const auto& check : report.checks) {
        os << (check.pass ? "PASS" : "FAIL") << "  " << check.name << "\n      expected: "
           << check.expected << "\n      measured: " << check.measured << '\n';
    }
    os << (report.all_pass() ? "all compliance checks passed" : "compliance FAILURES present")
       << '\n';
}

void write_compliance_json(std::ostream& os, const ComplianceReport& report) {
    ordered_json j;
    j["checks"] = ordered_json::array();
    for (const auto& check : report.checks) {
        ordered_json c;
        c["name"] = check.name;
        c["expected"] = check.expected;
        c["measured"] = check.measured;
        c["pass"] = check.pass;
        j["checks"].push_back(c);
    }
    j["all_pass"] = report.all_pass();
    os << j.dump(2) << '\n';
}

} // namespace cufh
