#ifndef WEYLCHAR_CHARACTERS_HPP
#define WEYLCHAR_CHARACTERS_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kostka.hpp"
#include "rootdata.hpp"
#include "series.hpp"
#include "weight.hpp"

namespace weylchar {

/// Graded character: a finite map from weights to series in u.
///
/// All stored series share the truncation degree trunc() (or are all
/// exact), and zero series are never stored. Adding a series truncated
/// lower than the character lowers the truncation of every entry.
class GradedCharacter {
public:
    explicit GradedCharacter(int rank = 1, std::optional<int> trunc = std::nullopt) : rank_(rank), trunc_(trunc) {
        if (rank < 1) throw std::invalid_argument("GradedCharacter: rank must be at least 1");
    }

    /// Ungraded character placed in a single degree.
    static GradedCharacter from_character(const Character& ch, int degree = 0, std::optional<int> trunc = std::nullopt) {
        GradedCharacter g(ch.rank(), trunc);
        for (const auto& [w, m] : ch.entries()) g.add(w, Series::monomial(m, degree));
        return g;
    }

    int rank() const { return rank_; }
    std::optional<int> trunc() const { return trunc_; }
    const std::map<Weight, Series>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// Series at w; zero (with the common truncation) when absent.
    Series at(const Weight& w) const {
        auto it = entries_.find(w);
        if (it != entries_.end()) return it->second;
        return trunc_ ? Series::zero_to(*trunc_) : Series();
    }

    void add(const Weight& w, const Series& s) {
        if (w.rank() != rank_) throw std::invalid_argument("GradedCharacter: rank mismatch at weight " + w.str());
        if (s.trunc() && (!trunc_ || *s.trunc() < *trunc_)) lower_truncation(*s.trunc());
        Series term = trunc_ ? s.truncate(*trunc_) : s;
        auto it = entries_.find(w);
        if (it == entries_.end()) {
            if (!term.is_zero()) entries_.emplace(w, std::move(term));
            return;
        }
        it->second += term;
        if (it->second.is_zero()) entries_.erase(it);
    }

    GradedCharacter truncate(int degree) const {
        GradedCharacter g = *this;
        g.lower_truncation(trunc_ ? std::min(*trunc_, degree) : degree);
        return g;
    }

    /// Ungraded character of the degree-d piece.
    Character slice(int d) const {
        Character ch(rank_);
        for (const auto& [w, s] : entries_) ch.add(w, s.coeff(d));
        return ch;
    }

    /// Graded dimension: the sum of all entries.
    Series dimension_series() const {
        Series total = trunc_ ? Series::zero_to(*trunc_) : Series();
        for (const auto& [w, s] : entries_) total += s;
        return total;
    }

    GradedCharacter& operator+=(const GradedCharacter& o) {
        check_rank(o);
        if (o.trunc_ && (!trunc_ || *o.trunc_ < *trunc_)) lower_truncation(*o.trunc_);
        for (const auto& [w, s] : o.entries_) add(w, s);
        return *this;
    }
    GradedCharacter& operator-=(const GradedCharacter& o) {
        check_rank(o);
        if (o.trunc_ && (!trunc_ || *o.trunc_ < *trunc_)) lower_truncation(*o.trunc_);
        for (const auto& [w, s] : o.entries_) add(w, -s);
        return *this;
    }
    friend GradedCharacter operator+(GradedCharacter a, const GradedCharacter& b) { return a += b; }
    friend GradedCharacter operator-(GradedCharacter a, const GradedCharacter& b) { return a -= b; }

    friend GradedCharacter operator*(const Series& s, const GradedCharacter& g) {
        GradedCharacter r(g.rank_, g.trunc_);
        if (s.trunc()) r.lower_truncation(r.trunc_ ? std::min(*r.trunc_, *s.trunc()) : *s.trunc());
        for (const auto& [w, t] : g.entries_) r.add(w, s * t);
        return r;
    }

    friend GradedCharacter operator*(const GradedCharacter& a, const GradedCharacter& b) {
        a.check_rank(b);
        std::optional<int> t = a.trunc_;
        if (b.trunc_) t = t ? std::min(*t, *b.trunc_) : *b.trunc_;
        GradedCharacter r(a.rank_, t);
        for (const auto& [wa, sa] : a.entries_)
            for (const auto& [wb, sb] : b.entries_) r.add(wa + wb, sa * sb);
        return r;
    }

    friend GradedCharacter operator*(const Character& c, const GradedCharacter& g) {
        return GradedCharacter::from_character(c) * g;
    }

    friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;

    void check_rank(const GradedCharacter& o) const {
        if (o.rank_ != rank_) throw std::invalid_argument("GradedCharacter: rank mismatch");
    }

    std::string str() const {
        std::string out;
        for (const auto& [w, s] : entries_) out += "  " + w.str() + ": " + s.str() + "\n";
        return out.empty() ? "  0\n" : out;
    }

private:
    void lower_truncation(int t) {
        trunc_ = t;
        for (auto it = entries_.begin(); it != entries_.end();) {
            it->second = it->second.truncate(t);
            if (it->second.is_zero())
                it = entries_.erase(it);
            else
                ++it;
        }
    }

    int rank_;
    std::optional<int> trunc_;
    std::map<Weight, Series> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const GradedCharacter& g) { return os << g.str(); }

/// Multiplicities [M : V(mu, s)] collected as series sum_s [M : V(mu,s)] u^s,
/// keyed by dominant mu.
struct MultiplicitySeries {
    int rank = 1;
    std::map<Weight, Series> entries;

    Series at(const Weight& w) const {
        auto it = entries.find(w);
        return it == entries.end() ? Series() : it->second;
    }

    friend bool operator==(const MultiplicitySeries&, const MultiplicitySeries&) = default;
};

/// Thrown by decompose() when its input cannot be the character of a module.
class NonCharacterError : public std::runtime_error {
public:
    NonCharacterError(const std::string& what, Weight weight) : std::runtime_error(what), weight_(std::move(weight)) {}
    const Weight& weight() const { return weight_; }

private:
    Weight weight_;
};

/// Multiplication of every entry by u^r.
inline GradedCharacter shift(const GradedCharacter& c, int r) {
    std::optional<int> t = c.trunc();
    if (t) *t += r;
    GradedCharacter out(c.rank(), t);
    for (const auto& [w, s] : c.entries()) out.add(w, s.shift(r));
    return out;
}

/// sum_mu m(mu) ch V(mu).
inline GradedCharacter compose(const MultiplicitySeries& m) {
    GradedCharacter out(m.rank);
    for (const auto& [mu, s] : m.entries) out += s * GradedCharacter::from_character(irr_character(mu));
    return out;
}

/// Graded character of the local Weyl module W_loc(lambda, r):
/// u^r sum_xi K(lambda, xi) ch V(mu_xi), with xi over partitions of
/// |lambda| into at most rank+1 parts.
inline GradedCharacter local_weyl_character(const Weight& lambda, int r) {
    if (!lambda.is_dominant()) throw std::invalid_argument("local_weyl_character: weight " + lambda.str() + " is not dominant");
    const int n = lambda.rank();
    GradedCharacter out(n);
    for (const Partition& xi : partitions_of(box_count(lambda), n + 1)) {
        Series k = local_weyl_kostka(lambda, xi);
        if (k.is_zero()) continue;
        out += k.shift(r) * GradedCharacter::from_character(irr_character(mu_of_xi(xi, n)));
    }
    return out;
}

/// ch_gr W(lambda, r) = ch_gr W_loc(lambda, r) H(A_lambda), truncated at D.
inline GradedCharacter global_weyl_character(const Weight& lambda, int r, int degree) {
    if (!lambda.is_dominant()) throw std::invalid_argument("global_weyl_character: weight " + lambda.str() + " is not dominant");
    if (degree < r) throw std::invalid_argument("global_weyl_character: truncation degree below the grade");
    const GradedCharacter local = local_weyl_character(lambda, 0);
    return shift(hilbert_A(lambda, degree - r) * local, r);
}

/// Graded character of S(g (x) t C[t]) truncated at D: the Euler product
/// prod_beta prod_{r>=1} (1 - e(beta) u^r)^{-1} over the adjoint weights.
inline GradedCharacter symmetric_algebra_character(int rank, int degree) {
    if (degree < 0) throw std::invalid_argument("symmetric_algebra_character: negative truncation degree");
    const auto len = static_cast<std::size_t>(degree) + 1;
    std::map<Weight, std::vector<BigInt>> f;
    f[Weight::zero(rank)] = std::vector<BigInt>(len, 0);
    f.begin()->second[0] = 1;

    const Character adjoint = adjoint_character(rank);
    for (const auto& [beta, mult] : adjoint.entries()) {
        for (int r = 1; r <= degree; ++r) {
            for (BigInt rep = 0; rep < mult; ++rep) {
                // f <- f / (1 - e(beta) u^r), degree by degree.
                for (int d = r; d <= degree; ++d) {
                    std::vector<std::pair<Weight, BigInt>> updates;
                    for (const auto& [w, coeffs] : f) {
                        const BigInt& c = coeffs[static_cast<std::size_t>(d - r)];
                        if (c != 0) updates.emplace_back(w + beta, c);
                    }
                    for (auto& [w, c] : updates) {
                        auto [it, inserted] = f.try_emplace(w, std::vector<BigInt>(len, 0));
                        it->second[static_cast<std::size_t>(d)] += c;
                    }
                }
            }
        }
    }

    GradedCharacter out(rank, degree);
    for (auto& [w, coeffs] : f) out.add(w, Series::truncated(std::move(coeffs), 0, degree));
    return out;
}

/// ch_gr P(lambda, r) = u^r ch V(lambda) ch_gr S(g (x) t C[t]), truncated at D.
inline GradedCharacter projective_character(const Weight& lambda, int r, int degree) {
    if (!lambda.is_dominant()) throw std::invalid_argument("projective_character: weight " + lambda.str() + " is not dominant");
    if (degree < r) return GradedCharacter(lambda.rank(), degree);
    return shift(irr_character(lambda) * symmetric_algebra_character(lambda.rank(), degree - r), r);
}

/// Unique expansion c = sum_mu m(mu) ch V(mu). Peels off a
/// dominance-maximal support weight (largest height, then largest
/// coordinates) at each step.
inline MultiplicitySeries decompose(const GradedCharacter& c) {
    MultiplicitySeries m{c.rank(), {}};
    GradedCharacter rest = c;
    while (!rest.empty()) {
        const Weight* best = nullptr;
        long long best_h = 0;
        for (const auto& [w, s] : rest.entries()) {
            const long long h = scaled_height(w);
            if (!best || h > best_h || (h == best_h && w > *best)) {
                best = &w;
                best_h = h;
            }
        }
        const Weight mu = *best;
        const Series s = rest.at(mu);
        if (!mu.is_dominant()) throw NonCharacterError("decompose: maximal weight " + mu.str() + " is not dominant", mu);
        if (!s.nonnegative()) throw NonCharacterError("decompose: negative multiplicity series " + s.str() + " at " + mu.str(), mu);
        m.entries.emplace(mu, s);
        rest -= s * GradedCharacter::from_character(irr_character(mu));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct CharacterMismatch {
    Weight weight;
    int degree = 0;
    BigInt lhs;
    BigInt rhs;
};

struct CharacterComparison {
    bool equal = true;
    std::optional<int> compared_up_to;
    std::optional<CharacterMismatch> first_mismatch;
};

/// Compares two graded characters on their common known degrees; the first
/// mismatch is the lowest degree, then the smallest weight.
inline CharacterComparison compare(const GradedCharacter& a, const GradedCharacter& b) {
    a.check_rank(b);
    CharacterComparison out;
    if (a.trunc() || b.trunc()) out.compared_up_to = std::min(a.trunc().value_or(std::numeric_limits<int>::max()), b.trunc().value_or(std::numeric_limits<int>::max()));
    const GradedCharacter diff = out.compared_up_to ? a.truncate(*out.compared_up_to) - b.truncate(*out.compared_up_to) : a - b;
    for (const auto& [w, s] : diff.entries()) {
        if (!out.first_mismatch || s.min_deg() < out.first_mismatch->degree) {
            out.first_mismatch = CharacterMismatch{w, s.min_deg(), 0, 0};
        }
    }
    if (out.first_mismatch) {
        out.equal = false;
        auto& mm = *out.first_mismatch;
        mm.lhs = a.at(mm.weight).coeff(mm.degree);
        mm.rhs = b.at(mm.weight).coeff(mm.degree);
    }
    return out;
}

/// Named pass/fail component of a report.
struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

/// Structured outcome of an identity check.
struct VerificationReport {
    std::string identity;
    /// The identity in words, so reports are self-describing.
    std::string statement;
    /// "THEOREM" when the identity is proved, "CONJECTURAL-EVIDENCE" otherwise.
    std::string label = "THEOREM";
    int truncation = 0;
    bool pass = true;
    std::optional<CharacterMismatch> first_mismatch;
    std::vector<std::pair<std::string, long long>> cutoffs;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    void record(CheckResult c) {
        if (!c.pass) pass = false;
        checks.push_back(std::move(c));
    }
    void record_comparison(const std::string& name, const CharacterComparison& cmp) {
        CheckResult c{name, cmp.equal, ""};
        if (!cmp.equal && !first_mismatch) first_mismatch = cmp.first_mismatch;
        if (cmp.first_mismatch) {
            const auto& mm = *cmp.first_mismatch;
            c.detail = "first mismatch at weight " + mm.weight.str() + ", degree " + std::to_string(mm.degree) + ": " +
                       mm.lhs.str() + " vs " + mm.rhs.str();
        }
        record(std::move(c));
    }
};

inline std::ostream& operator<<(std::ostream& os, const VerificationReport& r) {
    os << r.identity << " [" << r.label << "] truncation D=" << r.truncation << ": " << (r.pass ? "pass" : "FAIL") << "\n";
    os << "  identity: " << r.statement << "\n";
    for (const auto& c : r.checks) os << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    for (const auto& [name, v] : r.cutoffs) os << "  cutoff " << name << " <= " << v << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    return os;
}

/// Character form of BGG reciprocity for sl2:
/// ch_gr P(m w, 0) = sum_k sum_s n(m,k,s) ch_gr W((m+2k) w, s), with
/// n(m,k,s) read off the decomposition of ch_gr W_loc((m+2k) w, 0).
inline VerificationReport verify_reciprocity(int m, int degree) {
    if (m < 0) throw std::invalid_argument("verify_reciprocity: m must be nonnegative");
    VerificationReport rep;
    rep.identity = "reciprocity";
    rep.statement = "ch_gr P(m w, 0) = sum_{k>=0} sum_s n(m,k,s) ch_gr W((m+2k) w, s), "
                    "n(m,k,s) = [W_loc((m+2k) w, 0) : V(m w, s)], m = " + std::to_string(m);
    rep.truncation = degree;

    const Weight top{m};
    const GradedCharacter lhs = projective_character(top, 0, degree);
    GradedCharacter rhs(1, degree);
    int cutoff = -1;
    for (int k = 0;; ++k) {
        const Weight lam{m + 2 * k};
        const Series n = decompose(local_weyl_character(lam, 0)).at(top);
        if (!n.is_zero() && n.min_deg() < k) {
            rep.record({"lowest grade of term k=" + std::to_string(k), false,
                        "multiplicity series " + n.str() + " starts below u^" + std::to_string(k)});
        }
        if (n.is_zero() || n.min_deg() > degree) {
            cutoff = k - 1;
            break;
        }
        const GradedCharacter global0 = global_weyl_character(lam, 0, degree);
        for (int s = n.min_deg(); s <= std::min(n.max_deg(), degree); ++s) {
            const BigInt c = n.coeff(s);
            if (c != 0) rhs += Series::constant(c) * shift(global0.truncate(degree - s), s);
        }
    }
    rep.cutoffs.emplace_back("k", cutoff);
    rep.notes.push_back("sum over k stopped at the first term with no V(m w) component in degrees <= D");
    rep.record_comparison("character identity", compare(lhs, rhs));
    return rep;
}

/// Both forms of the sl2 expansion of ch_gr S(g (x) t C[t]): the character
/// identity and its graded-dimension specialization.
inline VerificationReport verify_symmetric_algebra(int degree) {
    VerificationReport rep;
    rep.identity = "symmetric-algebra";
    rep.statement = "ch_gr S(sl2 (x) t C[t]) = sum_{r,m} K_{2m,(m,m)}(u) K_{2m,(2m-r,r)}(u) H(A_{2m}) ch V(2m-2r); "
                    "prod_r (1-u^r)^{-3} = sum_{r,m} (2m-2r+1) K_{2m,(m,m)} K_{2m,(2m-r,r)} H(A_{2m})";
    rep.truncation = degree;

    const GradedCharacter lhs = symmetric_algebra_character(1, degree);
    std::vector<std::pair<int, int>> cube;
    for (int r = 1; r <= degree; ++r) cube.emplace_back(r, 3);
    const Series lhs_dim = geometric_inverse_product(cube, degree);

    GradedCharacter rhs(1, degree);
    Series rhs_dim = Series::zero_to(degree);
    int m = 0;
    for (;; ++m) {
        const Series outer = sl2_kostka(2 * m, m);
        if (outer.min_deg() < m) {
            rep.record({"lowest grade of term m=" + std::to_string(m), false, "K_{2m,(m,m)} = " + outer.str() + " starts below u^m"});
        }
        if (outer.min_deg() > degree) break;
        const Series h = hilbert_A(Weight{2 * m}, degree);
        for (int r = 0; r <= m; ++r) {
            const Series coeff = outer * sl2_kostka(2 * m, r) * h;
            rhs += coeff * GradedCharacter::from_character(irr_character(Weight{2 * m - 2 * r}));
            rhs_dim += Series::constant(2 * m - 2 * r + 1) * coeff;
        }
    }
    rep.cutoffs.emplace_back("m", m - 1);
    rep.record_comparison("character identity", compare(lhs, rhs));

    const SeriesComparison dim = compare(lhs_dim, rhs_dim);
    CheckResult dc{"dimension identity", dim.equal, ""};
    if (!dim.equal) {
        dc.detail = "first mismatch at degree " + std::to_string(*dim.first_mismatch) + ": " +
                    lhs_dim.coeff(*dim.first_mismatch).str() + " vs " + rhs_dim.coeff(*dim.first_mismatch).str();
    }
    rep.record(std::move(dc));
    return rep;
}

/// Expansion of ch_gr P(lambda, 0) over global Weyl modules:
/// sum_mu [W_loc(mu,0) : V(lambda)](u) ch_gr W_loc(mu, 0) H(A_mu).
///
/// Terms are taken over dominant mu = lambda + (positive root combination)
/// of height at most rank * D: a degree-s vector of P(lambda, 0) has weight
/// at most s highest roots above a weight of V(lambda). For sl2 the identity
/// is proved; for higher rank the report is labelled CONJECTURAL-EVIDENCE.
inline VerificationReport verify_projective_expansion(const Weight& lambda, int degree, int max_rank = 2) {
    if (!lambda.is_dominant()) throw std::invalid_argument("verify_projective_expansion: weight " + lambda.str() + " is not dominant");
    const int n = lambda.rank();
    if (n > max_rank) throw std::invalid_argument("verify_projective_expansion: rank " + std::to_string(n) + " exceeds the configured limit " + std::to_string(max_rank));
    VerificationReport rep;
    rep.identity = "conjecture";
    rep.statement = "ch_gr P(lambda, 0) = sum_mu [W_loc(mu,0) : V(lambda)](u) ch_gr W_loc(mu, 0) H(A_mu), lambda = " + lambda.str();
    rep.label = n == 1 ? "THEOREM" : "CONJECTURAL-EVIDENCE";
    rep.truncation = degree;

    const GradedCharacter lhs = projective_character(lambda, 0, degree);
    GradedCharacter rhs(n, degree);
    const int max_height = n * degree;
    int terms = 0;
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    auto visit = [&](auto&& self, std::size_t i, int budget) -> void {
        if (i == c.size()) {
            Weight mu = lambda;
            int height = 0;
            for (int j = 0; j < n; ++j) {
                mu += c[static_cast<std::size_t>(j)] * simple_root(n, j + 1);
                height += c[static_cast<std::size_t>(j)];
            }
            if (!mu.is_dominant()) return;
            const Series k = decompose(local_weyl_character(mu, 0)).at(lambda);
            if (k.is_zero()) return;
            const int bound = (height + n - 1) / n;
            if (k.min_deg() < bound) {
                rep.record({"lowest grade of term mu=" + mu.str(), false,
                            "multiplicity " + k.str() + " starts below u^" + std::to_string(bound)});
            }
            if (k.min_deg() > degree) return;
            ++terms;
            rhs += k * global_weyl_character(mu, 0, degree);
            return;
        }
        for (int v = 0; v <= budget; ++v) {
            c[i] = v;
            self(self, i + 1, budget - v);
        }
        c[i] = 0;
    };
    visit(visit, 0, max_height);
    rep.cutoffs.emplace_back("height(mu - lambda)", max_height);
    rep.cutoffs.emplace_back("contributing terms", terms);
    rep.record_comparison("character identity", compare(lhs, rhs));
    return rep;
}

}  // namespace weylchar

#endif  // WEYLCHAR_CHARACTERS_HPP
