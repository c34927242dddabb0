#pragma once

#include <optional>
#include <string>
#include <vector>

#include "civet/bigint.hpp"
#include "civet/sheaf.hpp"

namespace civet::deduce {

/// Conclusion of a derivation node about H^q(subject).
/// Unknown is a first-class answer: the engine never converts it to Zero.
struct Verdict {
    enum class Status { Zero, Nonzero, NonzeroDim, IsoTo, Unknown };

    Status status = Status::Unknown;
    std::optional<BigInt> dim;            // exact dimension when known
    std::optional<sheaf::SheafSum> iso;   // target of an Iso-to conclusion
    int iso_q = 0;                        // cohomological degree of the target

    static Verdict zero() { return {Status::Zero, BigInt(0), std::nullopt, 0}; }
    static Verdict nonzero() { return {Status::Nonzero, std::nullopt, std::nullopt, 0}; }
    static Verdict nonzero_dim(BigInt d) {
        return {Status::NonzeroDim, std::move(d), std::nullopt, 0};
    }
    static Verdict unknown() { return {}; }
    static Verdict iso_to(sheaf::SheafSum target, int q, std::optional<BigInt> d = std::nullopt) {
        return {Status::IsoTo, std::move(d), std::move(target), q};
    }

    bool is_zero() const { return status == Status::Zero; }
    bool is_unknown() const { return status == Status::Unknown; }
    bool certified_nonzero() const {
        return status == Status::Nonzero || status == Status::NonzeroDim ||
               (status == Status::IsoTo && dim && !dim->is_zero());
    }
    /// Treating Iso-to with known dimension 0 as a vanishing certificate.
    bool certified_zero() const {
        return is_zero() || (status == Status::IsoTo && dim && dim->is_zero());
    }

    std::string token() const {
        switch (status) {
            case Status::Zero: return "Zero";
            case Status::Nonzero: return "Nonzero";
            case Status::NonzeroDim: return "NonzeroDim:" + dim->to_string();
            case Status::IsoTo: {
                std::string s = "Iso:H^" + std::to_string(iso_q) + "(" + iso->token() + ")";
                if (dim) s += "=" + dim->to_string();
                return s;
            }
            default: return "Unknown";
        }
    }

    friend bool operator==(const Verdict& a, const Verdict& b) {
        if (a.status != b.status) return false;
        if (a.dim.has_value() != b.dim.has_value()) return false;
        if (a.dim && *a.dim != *b.dim) return false;
        if (a.iso.has_value() != b.iso.has_value()) return false;
        if (a.iso && (!(*a.iso == *b.iso) || a.iso_q != b.iso_q)) return false;
        return true;
    }
};

/// A replayable tree of rule applications. Each node states a fact about
/// H^q(subject); its premises are the facts the rule consumed. Leaves are
/// axiom citations. Value semantics keep the tree acyclic by construction.
struct Derivation {
    std::string rule;
    sheaf::SheafSum subject;
    int q = 0;
    Verdict verdict;
    std::vector<Derivation> premises;

    Derivation() = default;
    Derivation(std::string r, sheaf::SheafSum s, int qq, Verdict v,
               std::vector<Derivation> kids = {})
        : rule(std::move(r)),
          subject(std::move(s)),
          q(qq),
          verdict(std::move(v)),
          premises(std::move(kids)) {}

    std::string line() const {
        return rule + " " + subject.token() + " " + std::to_string(q) + " " + verdict.token();
    }

    /// Indented tree, one rule application per line: RULE sheaf q VERDICT.
    std::string trace() const {
        std::string out;
        trace_into(out, 0);
        return out;
    }

    size_t node_count() const {
        size_t n = 1;
        for (const auto& p : premises) n += p.node_count();
        return n;
    }

    int depth() const {
        int d = 0;
        for (const auto& p : premises) d = std::max(d, p.depth());
        return d + 1;
    }

private:
    void trace_into(std::string& out, int indent) const {
        out.append(static_cast<size_t>(indent) * 2, ' ');
        out += line();
        out += "\n";
        for (const auto& p : premises) p.trace_into(out, indent + 1);
    }
};

}  // namespace civet::deduce
