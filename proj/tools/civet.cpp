// civet - exact cohomology predicates, vanishing deduction, and classifier
// verdicts for complete intersections, with a self-verifying `reproduce`
// subcommand. Exit codes: 0 all checks pass, 1 a verification failed,
// 2 usage or domain error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "civet/bott.hpp"
#include "civet/classify.hpp"
#include "civet/deduce.hpp"
#include "civet/lie.hpp"
#include "civet/verify.hpp"

namespace {

std::vector<int> parse_degrees(const std::string& csv) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty() || cur == "-")
            throw std::invalid_argument("--degrees: bad entry in '" + csv +
                                        "' (expected comma-separated integers)");
        out.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char ch : csv + ",") {
        if (ch == ',') {
            flush();
        } else if ((ch >= '0' && ch <= '9') || (ch == '-' && cur.empty())) {
            cur += ch;
        } else {
            throw std::invalid_argument("--degrees: bad character '" + std::string(1, ch) +
                                        "' in '" + csv + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument("--degrees: no entries in '" + csv + "'");
    return out;
}

std::string resolve_out_path(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("CIVET_OUT_DIR");
    if (!dir || !*dir) return path;
    std::string d(dir);
    if (d.back() != '/') d += '/';
    return d + path;
}

void print_table_text(const civet::lie::Table& t) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : t.rows) rows.push_back(r.cells);
    std::cout << civet::report::Report::render_table(t.headers, rows);
}

void print_table_json(const civet::lie::Table& t) {
    nlohmann::json j;
    j["name"] = t.name;
    j["columns"] = t.headers;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : t.rows) j["rows"].push_back(r.cells);
    std::cout << j.dump(2) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact cohomology and classifier calculations for complete intersections"};
    app.require_subcommand(1);

    // ---- bott N r p q ----
    int b_n = 0, b_r = 0, b_p = 0, b_q = 0;
    auto* bott_cmd = app.add_subcommand("bott", "H^q(P^N, Omega^r(p)) verdict");
    bott_cmd->add_option("N", b_n, "ambient dimension")->required();
    bott_cmd->add_option("r", b_r, "form degree")->required();
    bott_cmd->add_option("p", b_p, "twist")->required();
    bott_cmd->add_option("q", b_q, "cohomological degree")->required();

    // ---- tableau N k p q ----
    int t_n = 0, t_k = 0, t_p = 0, t_q = 0;
    auto* tab_cmd = app.add_subcommand("tableau", "H^q(P^N, Omega^{T_k}(p)) verdict");
    tab_cmd->add_option("N", t_n, "ambient dimension")->required();
    tab_cmd->add_option("k", t_k, "tableau index")->required();
    tab_cmd->add_option("p", t_p, "twist")->required();
    tab_cmd->add_option("q", t_q, "cohomological degree")->required();

    // ---- endo N k q ----
    int e_n = 0, e_k = 0, e_q = 0;
    auto* endo_cmd = app.add_subcommand("endo", "H^q(P^N, T ox Omega(k)) verdict");
    endo_cmd->add_option("N", e_n, "ambient dimension")->required();
    endo_cmd->add_option("k", e_k, "twist")->required();
    endo_cmd->add_option("q", e_q, "cohomological degree")->required();

    // ---- koszul N m1,...,mc [--sheaf omega:r] [--twist t] ----
    int k_n = 0, k_t = 0;
    std::string k_degs, k_sheaf = "O";
    auto* koz_cmd = app.add_subcommand("koszul", "print the Koszul resolution of F|_Z(t)");
    koz_cmd->add_option("N", k_n, "ambient dimension")->required();
    koz_cmd->add_option("degrees", k_degs, "multi-degree m1,...,mc")->required();
    koz_cmd->add_option("--sheaf", k_sheaf, "coefficient sheaf: O or omega:r");
    koz_cmd->add_option("--twist", k_t, "twist t");

    // ---- chase <lemma> [params] [--trace] ----
    std::string c_name;
    civet::deduce::NamedParams cp;
    int c_amb = 0, c_d = 0, c_r = 0, c_p = 0, c_q = 0, c_t = 0;
    std::string c_degs;
    bool c_trace = false;
    auto* chase_cmd = app.add_subcommand("chase", "run a scripted derivation");
    std::string lemma_help;
    for (const auto& n : civet::deduce::named_derivations()) lemma_help += n + " ";
    chase_cmd->add_option("lemma", c_name, "one of: " + lemma_help)->required();
    auto* oa = chase_cmd->add_option("--ambient", c_amb, "ambient dimension N");
    auto* od = chase_cmd->add_option("--hyp-degree", c_d, "hypersurface degree d");
    auto* orr = chase_cmd->add_option("--form", c_r, "form degree r");
    auto* op = chase_cmd->add_option("--twist", c_p, "twist p or t");
    auto* oq = chase_cmd->add_option("--q", c_q, "cohomological degree q");
    auto* ot = chase_cmd->add_option("--t", c_t, "alias for --twist");
    chase_cmd->add_option("--degrees", c_degs, "multi-degree m1,...,mc");
    chase_cmd->add_flag("--trace", c_trace, "print the derivation tree");

    // ---- classify m1,...,mc --ambient N [...] ----
    std::string cl_degs;
    int cl_amb = 0;
    bool cl_lines = false;
    int cl_hyp = 0;
    auto* cls_cmd = app.add_subcommand("classify", "classifier verdicts for a multi-degree");
    cls_cmd->add_option("degrees", cl_degs, "multi-degree m1,...,mc")->required();
    cls_cmd->add_option("--ambient", cl_amb, "ambient dimension N")->required();
    cls_cmd->add_flag("--covered-by-lines", cl_lines, "assert Z is covered by lines");
    auto* cls_hyp_opt =
        cls_cmd->add_option("--in-hypersurface", cl_hyp, "degree d of a containing hypersurface");

    // ---- xi conic [--grid G] [--seed S] ----
    auto* xi_cmd = app.add_subcommand("xi", "exact witness checks");
    std::string xi_what;
    int xi_grid = 20;
    std::uint64_t xi_seed = 42;
    xi_cmd->add_option("what", xi_what, "only 'conic' is implemented")->required();
    xi_cmd->add_option("--grid", xi_grid, "grid side length");
    xi_cmd->add_option("--seed", xi_seed, "sampler seed");

    // ---- lie {table|dim|singular|ihss|check85} ----
    auto* lie_cmd = app.add_subcommand("lie", "root-system calculations");
    lie_cmd->require_subcommand(1);
    std::string lt_which, lt_format = "text";
    auto* lie_table = lie_cmd->add_subcommand("table", "emit the ihss or longest-root table");
    lie_table->add_option("which", lt_which, "ihss | longest")->required();
    lie_table->add_option("--format", lt_format, "text | json");

    std::string ld_type;
    int ld_rank = 0, ld_k = 0;
    std::string ld_weight;
    auto* lie_dim = lie_cmd->add_subcommand("dim", "Weyl dimension of V^{lambda_k}");
    lie_dim->add_option("type", ld_type, "A B C D E6 E7 E8 F4 G2")->required();
    lie_dim->add_option("rank", ld_rank, "rank")->required();
    auto* ld_k_opt = lie_dim->add_option("k", ld_k, "fundamental weight index");
    lie_dim->add_option("--weight", ld_weight, "full weight c1,...,cl");

    std::string ls_type, ls_weight;
    int ls_rank = 0;
    auto* lie_sing = lie_cmd->add_subcommand("singular", "singular-weight test");
    lie_sing->add_option("type", ls_type, "A B C D E6 E7 E8 F4 G2")->required();
    lie_sing->add_option("rank", ls_rank, "rank")->required();
    lie_sing->add_option("--weight", ls_weight, "weight c1,...,cl")->required();

    std::string li_type;
    int li_rank = 0;
    auto* lie_ihss = lie_cmd->add_subcommand("ihss", "Hermitian symmetric k and vanishing checks");
    lie_ihss->add_option("type", li_type, "A B C D E6 E7 E8 F4 G2")->required();
    lie_ihss->add_option("rank", li_rank, "rank")->required();

    std::string lc_family;
    int lc_n = 0;
    auto* lie_check = lie_cmd->add_subcommand("check85", "hyperplane family stabilizer check");
    lie_check->add_option("family", lc_family, "spinor | lagrangian")->required();
    lie_check->add_option("n", lc_n, "family parameter")->required();

    // ---- reproduce ----
    std::string rp_format = "md", rp_out, rp_config;
    std::uint64_t rp_seed = 42;
    auto* rep_cmd = app.add_subcommand("reproduce", "run all verification sections");
    rep_cmd->add_option("--format", rp_format, "json | md");
    rep_cmd->add_option("--out", rp_out, "output path (CIVET_OUT_DIR prefixes relative paths)");
    rep_cmd->add_option("--seed", rp_seed, "sampler seed");
    rep_cmd->add_option("--config", rp_config, "sweep-bound config file (key = value lines)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // one-line diagnostic naming the flag
        return 2;
    }

    if (bott_cmd->parsed()) {
        std::cout << civet::bott::omega(b_n, b_r, b_p, b_q).to_string() << "\n";
        return 0;
    }
    if (tab_cmd->parsed()) {
        std::cout << civet::bott::tableau(t_n, t_k, t_p, t_q).to_string() << "\n";
        return 0;
    }
    if (endo_cmd->parsed()) {
        std::cout << civet::bott::endo(e_n, e_k, e_q).to_string() << "\n";
        return 0;
    }
    if (koz_cmd->parsed()) {
        auto degs = parse_degrees(k_degs);
        auto z = civet::sheaf::Space::complete_intersection(k_n, degs);
        civet::sheaf::SheafExpr f;
        if (k_sheaf == "O") {
            f = civet::sheaf::SheafExpr::structure(civet::sheaf::Space::proj(k_n), 0);
        } else if (k_sheaf.rfind("omega:", 0) == 0) {
            int r = std::stoi(k_sheaf.substr(6));
            f = civet::sheaf::SheafExpr::intrinsic_forms(civet::sheaf::Space::proj(k_n), r, 0);
        } else {
            throw std::invalid_argument("--sheaf: expected O or omega:r, got '" + k_sheaf + "'");
        }
        std::cout << civet::deduce::koszul_complex(z, f, k_t).token() << "\n";
        return 0;
    }
    if (chase_cmd->parsed()) {
        if (*oa) cp.N = c_amb;
        if (*od) cp.d = c_d;
        if (*orr) cp.r = c_r;
        if (*op) cp.p = c_p, cp.t = c_p;
        if (*ot) cp.t = c_t, cp.p = c_t;
        if (*oq) cp.q = c_q;
        if (!c_degs.empty()) cp.degrees = parse_degrees(c_degs);
        civet::deduce::Rules rules;
        civet::deduce::Derivation d = civet::deduce::derive_named(c_name, cp, rules);
        std::cout << d.line() << "\n";
        if (c_trace) std::cout << d.trace();
        return 0;
    }
    if (cls_cmd->parsed()) {
        auto raw = parse_degrees(cl_degs);
        civet::classify::MultiDegree z(raw, cl_amb);
        std::optional<int> hyp;
        if (*cls_hyp_opt) hyp = cl_hyp;
        std::cout << "multi-degree (raw " << cl_degs << "): " << z.to_string() << " in P^"
                  << z.ambient_dim() << ", dim " << z.dim() << "\n";
        std::cout << "h0_tz1_nonzero  = " << (civet::classify::h0_tz1_nonzero(z) ? "true" : "false")
                  << "\n";
        std::cout << "h0_tz_nonzero   = " << (civet::classify::h0_tz_nonzero(z) ? "true" : "false")
                  << "\n";
        std::cout << "xi_prime_nonzero = "
                  << (civet::classify::xi_prime_nonzero(z) ? "true" : "false") << "\n";
        std::cout << "xi0_trivial     = " << (civet::classify::xi0_trivial(z) ? "true" : "false")
                  << "\n";
        auto mv = civet::classify::theorem_main_verdict(z, cl_lines, hyp);
        std::cout << "locally-flat    = " << mv.clause_name()
                  << (mv.locally_flat_concluded ? " (concluded)" : " (no conclusion)") << "\n";
        std::cout << "xi_equals_xi_V  = "
                  << (civet::classify::xi_equals_xiv_verdict(z, cl_lines, hyp) ? "true" : "false")
                  << "\n";
        if (cl_lines) {
            auto vm = civet::classify::vmrt_multidegree(z);
            std::cout << "vmrt            = " << vm.to_string() << " in P^" << vm.ambient_dim()
                      << "\n";
        }
        return 0;
    }
    if (xi_cmd->parsed()) {
        if (xi_what != "conic")
            throw std::invalid_argument("xi: only the conic witness is implemented");
        civet::SweepConfig cfg;
        cfg.xi_grid = xi_grid;
        cfg.seed = xi_seed;
        auto s = civet::verify::conic_witness(cfg);
        for (const auto& r : s.rows) std::cout << r[0] << ": " << r[1] << "\n";
        for (const auto& n : s.notes) std::cout << n << "\n";
        std::cout << s.status_token() << "\n";
        return s.status == civet::report::Section::Status::Pass ? 0 : 1;
    }
    if (lie_table->parsed()) {
        civet::lie::Table t;
        if (lt_which == "ihss") t = civet::lie::ihss_table();
        else if (lt_which == "longest") t = civet::lie::longest_root_table();
        else throw std::invalid_argument("lie table: expected 'ihss' or 'longest'");
        if (lt_format == "json") print_table_json(t);
        else print_table_text(t);
        return 0;
    }
    if (lie_dim->parsed()) {
        civet::lie::RootSystem g(civet::lie::parse_type(ld_type), ld_rank);
        civet::lie::WeightVec w;
        if (!ld_weight.empty()) {
            for (int c : parse_degrees(ld_weight)) w.push_back(c);
        } else if (*ld_k_opt) {
            w = g.fundamental(ld_k);
        } else {
            throw std::invalid_argument("lie dim: give k or --weight");
        }
        std::cout << g.weyl_dim(w).to_string() << "\n";
        return 0;
    }
    if (lie_sing->parsed()) {
        civet::lie::RootSystem g(civet::lie::parse_type(ls_type), ls_rank);
        civet::lie::WeightVec w;
        for (int c : parse_degrees(ls_weight)) w.push_back(c);
        std::cout << (g.is_singular(w) ? "singular" : "regular") << "\n";
        return 0;
    }
    if (lie_ihss->parsed()) {
        civet::lie::RootSystem g(civet::lie::parse_type(li_type), li_rank);
        auto ks = g.ihss_list();
        if (ks.empty()) {
            std::cout << g.name() << ": no Hermitian symmetric quotients\n";
            return 0;
        }
        for (int k : ks)
            std::cout << g.name() << " k=" << k << ": tangent(-1) vanishing = "
                      << (g.ihss_tangent_vanishing(k) ? "true" : "false") << "\n";
        return 0;
    }
    if (lie_check->parsed()) {
        civet::lie::Family f;
        if (lc_family == "spinor") f = civet::lie::Family::Spinor;
        else if (lc_family == "lagrangian") f = civet::lie::Family::Lagrangian;
        else throw std::invalid_argument("check85: expected 'spinor' or 'lagrangian'");
        bool ok = civet::lie::family_stabilizer_check(f, lc_n);
        std::cout << (ok ? "true" : "false") << "\n";
        return ok ? 0 : 1;
    }
    if (rep_cmd->parsed()) {
        civet::SweepConfig cfg;
        if (!rp_config.empty()) cfg = civet::SweepConfig::from_file(rp_config);
        cfg.seed = rp_seed;
        auto rep = civet::verify::build_report(cfg);
        std::string text =
            rp_format == "json" ? rep.to_json_string() : rep.to_markdown();
        if (rp_format != "json" && rp_format != "md")
            throw std::invalid_argument("--format: expected json or md, got '" + rp_format + "'");
        if (rp_out.empty()) {
            std::cout << text;
        } else {
            std::string path = resolve_out_path(rp_out);
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + path);
            out << text;
        }
        return rep.all_pass() ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
