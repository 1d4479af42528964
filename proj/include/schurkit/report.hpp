#pragma once

// Command reports: an echo of what ran, an op-specific payload, and a
// pass/fail ledger for verification suites, serializable as text or JSON.

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace schurkit {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string got;
    double millis = 0;
    std::string note;
};

struct CommandReport {
    std::string command;
    nlohmann::json data = nlohmann::json::object();
    std::vector<CheckResult> checks;
    double elapsed_ms = 0;
    bool suite_mode = false;  // always print the checks summary line

    bool ok() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
    std::size_t failed() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.pass ? 0 : 1;
        return n;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command;
        j["data"] = data;
        j["elapsed_ms"] = elapsed_ms;
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json cj{{"name", c.name}, {"pass", c.pass}, {"millis", c.millis}};
            if (!c.expected.empty()) cj["expected"] = c.expected;
            if (!c.got.empty()) cj["got"] = c.got;
            if (!c.note.empty()) cj["note"] = c.note;
            cs.push_back(std::move(cj));
        }
        j["checks"] = std::move(cs);
        j["ok"] = ok();
        return j;
    }

    static CommandReport from_json(const nlohmann::json& j) {
        CommandReport r;
        r.command = j.at("command").get<std::string>();
        r.data = j.at("data");
        r.elapsed_ms = j.at("elapsed_ms").get<double>();
        for (const auto& cj : j.at("checks")) {
            CheckResult c;
            c.name = cj.at("name").get<std::string>();
            c.pass = cj.at("pass").get<bool>();
            c.millis = cj.at("millis").get<double>();
            if (cj.contains("expected")) c.expected = cj.at("expected").get<std::string>();
            if (cj.contains("got")) c.got = cj.at("got").get<std::string>();
            if (cj.contains("note")) c.note = cj.at("note").get<std::string>();
            r.checks.push_back(std::move(c));
        }
        return r;
    }

    std::string to_text() const {
        std::ostringstream out;
        out << "# " << command << "\n";
        if (!data.empty()) {
            for (auto it = data.begin(); it != data.end(); ++it) {
                out << it.key() << ": " << render(it.value()) << "\n";
            }
        }
        for (const auto& c : checks) {
            out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
            if (!c.pass && (!c.expected.empty() || !c.got.empty())) {
                out << ": expected " << c.expected << ", got " << c.got;
            } else if (c.pass && !c.got.empty()) {
                out << ": " << c.got;
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f", c.millis);
            out << " (" << buf << " ms)";
            if (!c.note.empty()) out << "  -- " << c.note;
            out << "\n";
        }
        if (suite_mode || !checks.empty()) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f", elapsed_ms);
            out << checks.size() << " checks, " << failed() << " failed (" << buf << " ms)\n";
        }
        return out.str();
    }

  private:
    static std::string render(const nlohmann::json& v) {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    }
};

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace schurkit
