#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

namespace civet {

/// Sweep bounds for the verification sections. Defaults are sized for a
/// desk-scale run (well under a minute total); every bound can be overridden
/// from a line-oriented `key = value` config file.
struct SweepConfig {
    int bott_max_n = 5;
    int bott_max_twist = 10;

    int list_max_c = 4;
    int list_max_degree = 6;
    int list_max_n = 10;

    int wedge_max_n = 6;
    int wedge_max_c = 3;
    int wedge_max_degree = 5;
    int wedge_min_twist = -3;

    int hyp_max_n = 8;
    int hyp_min_degree = 3;
    int hyp_max_degree = 5;
    int hyp_min_twist = -12;

    int xi_grid = 20;
    int xi_random = 200;

    int lie_max_rank = 8;

    std::uint64_t seed = 42;

    void set(const std::string& key, long long value) {
        static const std::string known =
            "bott_max_n bott_max_twist list_max_c list_max_degree list_max_n wedge_max_n "
            "wedge_max_c wedge_max_degree wedge_min_twist hyp_max_n hyp_min_degree "
            "hyp_max_degree hyp_min_twist xi_grid xi_random lie_max_rank seed";
        if (key == "bott_max_n") bott_max_n = static_cast<int>(value);
        else if (key == "bott_max_twist") bott_max_twist = static_cast<int>(value);
        else if (key == "list_max_c") list_max_c = static_cast<int>(value);
        else if (key == "list_max_degree") list_max_degree = static_cast<int>(value);
        else if (key == "list_max_n") list_max_n = static_cast<int>(value);
        else if (key == "wedge_max_n") wedge_max_n = static_cast<int>(value);
        else if (key == "wedge_max_c") wedge_max_c = static_cast<int>(value);
        else if (key == "wedge_max_degree") wedge_max_degree = static_cast<int>(value);
        else if (key == "wedge_min_twist") wedge_min_twist = static_cast<int>(value);
        else if (key == "hyp_max_n") hyp_max_n = static_cast<int>(value);
        else if (key == "hyp_min_degree") hyp_min_degree = static_cast<int>(value);
        else if (key == "hyp_max_degree") hyp_max_degree = static_cast<int>(value);
        else if (key == "hyp_min_twist") hyp_min_twist = static_cast<int>(value);
        else if (key == "xi_grid") xi_grid = static_cast<int>(value);
        else if (key == "xi_random") xi_random = static_cast<int>(value);
        else if (key == "lie_max_rank") lie_max_rank = static_cast<int>(value);
        else if (key == "seed") seed = static_cast<std::uint64_t>(value);
        else
            throw std::invalid_argument("config: unknown key '" + key + "' (known: " + known +
                                        ")");
    }

    /// Parse `key = value` lines; '#' starts a comment, blank lines ignored.
    static SweepConfig from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("config: cannot open " + path);
        SweepConfig cfg;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto eq = line.find('=');
            if (eq == std::string::npos) {
                if (line.find_first_not_of(" \t\r") != std::string::npos)
                    throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                                " is not 'key = value'");
                continue;
            }
            auto trim = [](std::string s) {
                auto b = s.find_first_not_of(" \t\r");
                auto e = s.find_last_not_of(" \t\r");
                return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
            };
            std::string key = trim(line.substr(0, eq));
            std::string val = trim(line.substr(eq + 1));
            if (key.empty() || val.empty())
                throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                            " is not 'key = value'");
            cfg.set(key, std::stoll(val));
        }
        return cfg;
    }
};

}  // namespace civet
