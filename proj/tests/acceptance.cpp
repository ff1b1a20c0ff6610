// Acceptance runner: one line per criterion, exit status 0 iff all pass.
// Runtime limits are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <weylchar/weylchar.hpp>

#include "properties.hpp"

using namespace weylchar;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    std::optional<double> limit_seconds;
    std::function<Outcome()> body;
};

Outcome require(bool ok, const std::string& what, Outcome o = {}) {
    if (!ok && o.pass) {
        o.pass = false;
        o.detail = what;
    }
    return o;
}

Outcome sl2_kostka_closed_form() {
    int checked = 0;
    for (int ell = 0; ell <= 8; ++ell)
        for (int k = 0; 2 * k <= ell; ++k) {
            ++checked;
            const Series a = sl2_kostka(ell, k), b = local_weyl_kostka(Weight{ell}, Partition{ell - k, k});
            if (a != b) return {false, "l=" + std::to_string(ell) + ", k=" + std::to_string(k) + ": " + a.str() + " vs " + b.str()};
        }
    return {true, std::to_string(checked) + " pairs"};
}

Outcome local_weyl_dimension() {
    for (int ell = 0; ell <= 12; ++ell) {
        const BigInt dim = local_weyl_character(Weight{ell}, 0).dimension_series().at_one();
        if (dim != (BigInt(1) << ell)) return {false, "l=" + std::to_string(ell) + ": dimension " + dim.str()};
    }
    for (int ell = 0; ell <= 4; ++ell) {
        const auto cmp = compare(local_weyl_oracle(ell), local_weyl_character(Weight{ell}, 0));
        if (!cmp.equal) return {false, "oracle differs at l=" + std::to_string(ell)};
    }
    return {true, "2^l for l <= 12; oracle agrees for l <= 4"};
}

Outcome theta_structure() {
    GradedCharacter expected = GradedCharacter::from_character(irr_character(Weight{2}));
    expected.add(Weight{0}, Series::monomial(1, 1));
    const GradedCharacter got = local_weyl_character(Weight{2}, 0);
    return require(got == expected, "got " + got.str(), {true, "ch V(2w) + u"});
}

Outcome global_weyl_oracle() {
    for (int ell = 0; ell <= 3; ++ell)
        for (int d = 0; d <= 6; ++d) {
            const auto cmp = compare(tensor_character(ell, d), global_weyl_character(Weight{ell}, 0, d));
            if (!cmp.equal) return {false, "l=" + std::to_string(ell) + ", D=" + std::to_string(d)};
        }
    return {true, "l <= 3, D <= 6"};
}

Outcome reciprocity() {
    std::ostringstream cut;
    for (int m = 0; m <= 4; ++m) {
        const VerificationReport r = verify_reciprocity(m, 10);
        if (!r.pass) {
            std::ostringstream os;
            os << r;
            return {false, os.str()};
        }
        cut << (m ? ", " : "") << "m=" << m << ": k <= " << r.cutoffs.front().second;
    }
    return {true, cut.str()};
}

Outcome symmetric_algebra() {
    const VerificationReport r = verify_symmetric_algebra(12);
    if (!r.pass) {
        std::ostringstream os;
        os << r;
        return {false, os.str()};
    }
    if (r.checks.size() != 2) return {false, "expected character and dimension checks"};
    const Series prefix = symmetric_algebra_character(1, 2).dimension_series();
    return require(prefix == Series::truncated({1, 3, 9}, 0, 2), "prefix " + prefix.str(),
                   {true, "character and dimension identities, cutoff m <= " + std::to_string(r.cutoffs.front().second) + ", prefix 1 + 3u + 9u^2"});
}

Outcome m_module() {
    for (const auto [k, ell] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 4}}) {
        const Series got = m_module_hilbert(k, ell, 6);
        const Series want = (sl2_kostka(ell, k) * hilbert_A(Weight{ell}, 6)).truncate(6);
        if (got != want) return {false, "(k,l)=(" + std::to_string(k) + "," + std::to_string(ell) + "): " + got.str() + " vs " + want.str()};
    }
    return {true, "(1,2), (1,3), (2,4) at D=6"};
}

Outcome negative_control() {
    const GradedCharacter prod = irr_character(Weight{1}) * global_weyl_character(Weight{1}, 0, 4);
    const BigInt tensor_u2 = prod.at(Weight{2}).coeff(2);
    const BigInt hilbert_u2 = hilbert_A(Weight{2}, 4).coeff(2);
    Outcome o{true, "u^2 coefficients " + tensor_u2.str() + " and " + hilbert_u2.str()};
    o = require(tensor_u2 == 1, "tensor side u^2 coefficient is " + tensor_u2.str(), o);
    return require(hilbert_u2 == 2, "H(A_2w) u^2 coefficient is " + hilbert_u2.str(), o);
}

Outcome conjecture_evidence() {
    std::string detail;
    bool labelled = true;
    for (const Weight& lam : {Weight{0, 0}, Weight{1, 0}}) {
        const VerificationReport r = verify_projective_expansion(lam, 4);
        labelled = labelled && r.label == "CONJECTURAL-EVIDENCE";
        detail += (detail.empty() ? "" : "; ") + std::string("lambda=") + lam.str() + " " + r.label + " pass=" + (r.pass ? "true" : "false");
    }
    return require(labelled, "missing CONJECTURAL-EVIDENCE label: " + detail, {true, detail});
}

Outcome property_suites() {
    const std::pair<const char*, wtest::PropertyResult> suites[] = {
        {"series ring axioms", wtest::series_ring_axioms()},
        {"decompose round trip", wtest::decompose_round_trip()},
        {"lowest-degree triangularity", wtest::lowest_degree_triangularity()},
        {"bracket_check samples", wtest::bracket_samples()},
        {"symmetrizer idempotence", wtest::symmetrizer_idempotence()},
    };
    std::string detail;
    for (const auto& [name, r] : suites) {
        if (!r.ok) return {false, std::string(name) + ": " + r.failure};
        detail += (detail.empty() ? "" : ", ") + std::string(name) + " " + std::to_string(r.cases);
    }
    return {true, detail};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "sl2 Kostka closed form", 10.0, sl2_kostka_closed_form},
        {2, "local Weyl dimension 2^l and oracle", 120.0, local_weyl_dimension},
        {3, "W_loc(theta,0) = ch V(2w) + u", std::nullopt, theta_structure},
        {4, "global Weyl character vs tensor oracle", 300.0, global_weyl_oracle},
        {5, "BGG reciprocity m=0..4, D=10", 60.0, reciprocity},
        {6, "symmetric algebra expansion D=12", 60.0, symmetric_algebra},
        {7, "M_{k,l} Hilbert series", 300.0, m_module},
        {8, "negative control: no Weyl flag", std::nullopt, negative_control},
        {9, "A_2 projective expansion evidence, D=4", std::nullopt, conjecture_evidence},
        {10, "property suites", 120.0, property_suites},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds && secs >= *c.limit_seconds) o = require(false, "exceeded the runtime limit", o);
        if (!o.pass) ++failed;

        char timing[64];
        if (c.limit_seconds)
            std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, *c.limit_seconds);
        else
            std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << "criterion " << (c.id < 10 ? " " : "") << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << timing << ")  "
                  << o.detail << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
    return failed ? 1 : 0;
}
