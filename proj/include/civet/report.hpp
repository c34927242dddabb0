#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace civet::report {

struct Section {
    enum class Status { Pass, Fail, Skip };

    std::string name;
    Status status = Status::Pass;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;  // per-failure: operation, inputs, expected, got

    void row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }

    void fail(const std::string& note) {
        status = Status::Fail;
        notes.push_back(note);
    }

    /// Record one check: pass leaves the status alone, fail flips it and
    /// stores the diagnostic.
    void check(bool ok, const std::string& note_on_fail) {
        if (!ok) fail(note_on_fail);
    }

    std::string status_token() const {
        switch (status) {
            case Status::Pass: return "PASS";
            case Status::Fail: return "FAIL";
            default: return "SKIP";
        }
    }
};

struct Report {
    std::string toolchain;
    std::uint64_t seed = 0;
    std::vector<Section> sections;

    bool all_pass() const {
        for (const auto& s : sections)
            if (s.status == Section::Status::Fail) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["toolchain"] = toolchain;
        j["seed"] = seed;
        j["sections"] = nlohmann::json::array();
        for (const auto& s : sections) {
            nlohmann::json js;
            js["name"] = s.name;
            js["status"] = s.status_token();
            js["columns"] = s.columns;
            js["rows"] = s.rows;
            js["notes"] = s.notes;
            j["sections"].push_back(std::move(js));
        }
        return j;
    }

    std::string to_json_string() const { return to_json().dump(2) + "\n"; }

    std::string to_markdown() const {
        std::string out;
        out += "# verification report\n\n";
        out += "- toolchain: " + toolchain + "\n";
        out += "- seed: " + std::to_string(seed) + "\n\n";
        for (const auto& s : sections) {
            out += "## " + s.name + " [" + s.status_token() + "]\n\n";
            if (!s.columns.empty()) {
                out += render_table(s.columns, s.rows);
                out += "\n";
            }
            for (const auto& n : s.notes) out += "- " + n + "\n";
            if (!s.notes.empty()) out += "\n";
        }
        std::string verdict = all_pass() ? "PASS" : "FAIL";
        out += "overall: " + verdict + "\n";
        return out;
    }

    static std::string render_table(const std::vector<std::string>& columns,
                                    const std::vector<std::vector<std::string>>& rows) {
        std::vector<size_t> width(columns.size());
        for (size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
        for (const auto& r : rows)
            for (size_t i = 0; i < r.size() && i < width.size(); ++i)
                width[i] = std::max(width[i], r[i].size());
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s = "|";
            for (size_t i = 0; i < width.size(); ++i) {
                std::string c = i < cells.size() ? cells[i] : "";
                s += " " + c + std::string(width[i] - c.size(), ' ') + " |";
            }
            return s + "\n";
        };
        std::string out = line(columns);
        std::string sep = "|";
        for (size_t i = 0; i < width.size(); ++i) sep += std::string(width[i] + 2, '-') + "|";
        out += sep + "\n";
        for (const auto& r : rows) out += line(r);
        return out;
    }
};

inline std::string toolchain_fingerprint() {
#if defined(__clang__)
    std::string cc = "clang " + std::to_string(__clang_major__) + "." +
                     std::to_string(__clang_minor__);
#elif defined(__GNUC__)
    std::string cc = "gcc " + std::to_string(__GNUC__) + "." + std::to_string(__GNUC_MINOR__) +
                     "." + std::to_string(__GNUC_PATCHLEVEL__);
#else
    std::string cc = "unknown-compiler";
#endif
    return cc + " c++" + std::to_string(__cplusplus / 100 % 100);
}

}  // namespace civet::report
