// Acceptance suite: runs every verification criterion at its stated bound and
// prints one pass/fail line per criterion. Exit code is the failure count.

#include <chrono>
#include <cstdio>
#include <string>

#include "civet/verify.hpp"

namespace {

int failures = 0;
double total_ms = 0;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report_line(const std::string& name, bool ok, double ms,
                 const std::vector<std::string>& notes) {
    std::printf("%s %-28s (%.0f ms)\n", ok ? "PASS" : "FAIL", name.c_str(), ms);
    if (!ok) {
        ++failures;
        size_t shown = 0;
        for (const auto& n : notes) {
            std::printf("     %s\n", n.c_str());
            if (++shown == 8) {
                std::printf("     ... %zu further failures\n", notes.size() - shown);
                break;
            }
        }
    }
}

void run_section(const std::string& name, civet::report::Section (*fn)(const civet::SweepConfig&),
                 const civet::SweepConfig& cfg, double limit_ms) {
    auto t0 = Clock::now();
    civet::report::Section s = fn(cfg);
    double ms = ms_since(t0);
    total_ms += ms;
    bool ok = s.status == civet::report::Section::Status::Pass;
    if (limit_ms > 0 && ms > limit_ms) {
        ok = false;
        s.notes.push_back(name + ": exceeded the time budget of " +
                          std::to_string(static_cast<long long>(limit_ms)) + " ms");
    }
    report_line(name, ok, ms, s.notes);
}

}  // namespace

int main() {
    civet::SweepConfig cfg;  // the published sweep bounds

    run_section("1-bott-euler", civet::verify::bott_euler_consistency, cfg, 5000);
    run_section("2-serre-involution", civet::verify::serre_involution, cfg, 0);
    run_section("3-cohomology-lists", civet::verify::cohomology_lists, cfg, 0);
    run_section("4-restricted-forms", civet::verify::restricted_forms, cfg, 10000);
    run_section("5-ideal-quadrics", civet::verify::ideal_quadrics, cfg, 0);
    run_section("6-hypersurface-derivations", civet::verify::hypersurface_derivations, cfg, 0);
    run_section("7-conic-witness", civet::verify::conic_witness, cfg, 2000);
    run_section("8-lie-suite", civet::verify::lie_suite, cfg, 5000);
    run_section("9-hilbert-oracle", civet::verify::hilbert_spot, cfg, 0);

    // criterion 10: byte-identical reports under a fixed seed, within budget
    {
        auto t0 = Clock::now();
        civet::SweepConfig c = cfg;
        c.seed = 42;
        civet::report::Report a = civet::verify::build_report(c);
        civet::report::Report b = civet::verify::build_report(c);
        double ms = ms_since(t0);
        total_ms += ms;
        std::vector<std::string> notes;
        bool ok = true;
        if (a.to_json_string() != b.to_json_string()) {
            ok = false;
            notes.push_back("reproduce --seed 42: JSON outputs differ between two runs");
        }
        if (a.to_markdown() != b.to_markdown()) {
            ok = false;
            notes.push_back("reproduce --seed 42: markdown outputs differ between two runs");
        }
        if (!a.all_pass()) {
            ok = false;
            notes.push_back("reproduce --seed 42: report contains a failing section");
        }
        if (total_ms > 60000) {
            ok = false;
            notes.push_back("total runtime " + std::to_string(total_ms) + " ms exceeds 60 s");
        }
        report_line("10-determinism", ok, ms, notes);
    }

    std::printf("%s (%d criteria failed, %.0f ms total)\n", failures == 0 ? "PASS" : "FAIL",
                failures, total_ms);
    return failures;
}
