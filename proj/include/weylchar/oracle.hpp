#ifndef WEYLCHAR_ORACLE_HPP
#define WEYLCHAR_ORACLE_HPP

// Brute-force sl2 realizations over exact rationals. Everything here is
// computed from the tensor space V(w)^{(x)l} (x) C[t_1..t_l] and plain linear
// algebra, independently of the Kostka/Freudenthal formula engine, so the two
// can be cross-checked.

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "characters.hpp"
#include "linalg.hpp"
#include "series.hpp"
#include "weight.hpp"

namespace weylchar {

/// Thrown when a request exceeds the configured desk-scale bounds.
class OracleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Size bounds for an oracle call; force disables them.
struct OracleLimits {
    int max_ell = 6;
    int max_degree = 10;
    bool force = false;

    void check(const std::string& op, int ell, int degree) const {
        if (force) return;
        if (ell > max_ell)
            throw OracleLimitError(op + ": ell = " + std::to_string(ell) + " exceeds the bound " + std::to_string(max_ell) +
                                   " (use --force; cost grows like ell!)");
        if (degree > max_degree)
            throw OracleLimitError(op + ": degree " + std::to_string(degree) + " exceeds the bound " +
                                   std::to_string(max_degree) + " (use --force)");
    }
};

namespace limits {
inline constexpr OracleLimits invariant_basis{6, 10, false};
inline constexpr OracleLimits tensor_character{4, 8, false};
inline constexpr OracleLimits local_weyl{4, 10, false};
inline constexpr OracleLimits m_module{5, 8, false};
inline constexpr OracleLimits theta{1, 8, false};
}  // namespace limits

inline OracleLimits forced(OracleLimits l) {
    l.force = true;
    return l;
}

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

/// Basis monomial e_{s_1} (x) ... (x) e_{s_l} (x) t_1^{a_1} ... t_l^{a_l};
/// bit j of minus is set when factor j is e_-.
struct TensorKey {
    std::uint32_t minus = 0;
    std::vector<int> exps;

    friend auto operator<=>(const TensorKey&, const TensorKey&) = default;
    friend bool operator==(const TensorKey&, const TensorKey&) = default;

    int ell() const { return static_cast<int>(exps.size()); }
    bool is_minus(int j) const { return (minus >> j) & 1U; }
    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    int weight() const { return ell() - 2 * std::popcount(minus); }

    std::string str() const {
        std::string s;
        for (int j = 0; j < ell(); ++j) s += is_minus(j) ? '-' : '+';
        s += "|";
        for (std::size_t j = 0; j < exps.size(); ++j) s += (j ? "," : "") + std::to_string(exps[j]);
        return s;
    }
};

/// Element of V(w)^{(x)l} (x) A_l.
class TensorVector {
public:
    explicit TensorVector(int ell = 0) : ell_(ell) {
        if (ell < 0 || ell > 31) throw std::invalid_argument("TensorVector: ell out of range");
    }

    static TensorVector basis(std::uint32_t minus, std::vector<int> exps, Rational c = 1) {
        TensorVector v(static_cast<int>(exps.size()));
        v.add(TensorKey{minus, std::move(exps)}, c);
        return v;
    }

    /// e_+^{(x)l} (x) 1.
    static TensorVector highest(int ell) { return basis(0, std::vector<int>(static_cast<std::size_t>(ell), 0)); }

    int ell() const { return ell_; }
    const SparseVector<TensorKey>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const TensorKey& k, const Rational& c) {
        if (k.ell() != ell_) throw std::invalid_argument("TensorVector: term has the wrong number of factors");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, 0);
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    Rational coeff(const TensorKey& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    TensorVector& operator+=(const TensorVector& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    TensorVector& operator-=(const TensorVector& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    TensorVector& operator*=(const Rational& s) {
        if (s == 0) terms_.clear();
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
    friend TensorVector operator*(const Rational& s, TensorVector v) { return v *= s; }
    friend bool operator==(const TensorVector&, const TensorVector&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) s += (s.empty() ? "" : " + ") + c.str() + "[" + k.str() + "]";
        return s;
    }

private:
    void check(const TensorVector& o) const {
        if (o.ell_ != ell_) throw std::invalid_argument("TensorVector: ell mismatch");
    }

    int ell_;
    SparseVector<TensorKey> terms_;
};

/// Element of A_l = C[t_1..t_l], keyed by exponent tuples.
class PolyVector {
public:
    explicit PolyVector(int ell = 0) : ell_(ell) {}

    static PolyVector one(int ell) {
        PolyVector p(ell);
        p.add(std::vector<int>(static_cast<std::size_t>(ell), 0), 1);
        return p;
    }
    /// t_i^r, i is 1-based.
    static PolyVector variable_power(int ell, int i, int r) {
        std::vector<int> e(static_cast<std::size_t>(ell), 0);
        e.at(static_cast<std::size_t>(i - 1)) = r;
        PolyVector p(ell);
        p.add(e, 1);
        return p;
    }

    int ell() const { return ell_; }
    const SparseVector<std::vector<int>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const std::vector<int>& e, const Rational& c) {
        if (static_cast<int>(e.size()) != ell_) throw std::invalid_argument("PolyVector: exponent tuple has the wrong length");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, 0);
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    PolyVector& operator+=(const PolyVector& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    PolyVector& operator-=(const PolyVector& o) {
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    friend PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
    friend PolyVector operator-(PolyVector a, const PolyVector& b) { return a -= b; }
    friend PolyVector operator*(const PolyVector& a, const PolyVector& b) {
        if (a.ell_ != b.ell_) throw std::invalid_argument("PolyVector: ell mismatch");
        PolyVector p(a.ell_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                p.add(e, ca * cb);
            }
        return p;
    }
    friend bool operator==(const PolyVector&, const PolyVector&) = default;

private:
    int ell_;
    SparseVector<std::vector<int>> terms_;
};

/// v * f: multiplies the polynomial part of every term by f.
inline TensorVector operator*(const TensorVector& v, const PolyVector& f) {
    if (v.ell() != f.ell()) throw std::invalid_argument("TensorVector * PolyVector: ell mismatch");
    TensorVector out(v.ell());
    for (const auto& [k, c] : v.terms())
        for (const auto& [e, d] : f.terms()) {
            TensorKey key = k;
            for (std::size_t i = 0; i < e.size(); ++i) key.exps[i] += e[i];
            out.add(key, c * d);
        }
    return out;
}

/// Monomial symmetric polynomial m_nu in l variables (zero if nu has more than l parts).
inline PolyVector monomial_symmetric(int ell, const Partition& nu) {
    PolyVector p(ell);
    if (nu.length() > ell) return p;
    std::vector<int> e(static_cast<std::size_t>(ell), 0);
    for (int i = 0; i < nu.length(); ++i) e[static_cast<std::size_t>(i)] = nu.parts()[static_cast<std::size_t>(i)];
    std::sort(e.begin(), e.end());
    do {
        p.add(e, 1);
    } while (std::next_permutation(e.begin(), e.end()));
    return p;
}

/// Basis {m_nu : nu |- e, at most l parts} of A_l^{S_l}[e].
inline std::vector<PolyVector> symmetric_monomial_basis(int ell, int e) {
    std::vector<PolyVector> out;
    for (const Partition& nu : partitions_of(e, ell)) out.push_back(monomial_symmetric(ell, nu));
    return out;
}

// ---------------------------------------------------------------------------
// sl2[t] action
// ---------------------------------------------------------------------------

enum class Gen { XPlus, XMinus, H };

/// z (x) t^power with z in {x+, x-, h}.
struct Generator {
    Gen kind = Gen::H;
    int power = 0;

    friend bool operator==(const Generator&, const Generator&) = default;

    std::string str() const {
        const char* z = kind == Gen::XPlus ? "x+" : kind == Gen::XMinus ? "x-" : "h";
        return std::string(z) + "(x)t^" + std::to_string(power);
    }
};

/// Linear combination of generators.
using GeneratorCombination = std::vector<std::pair<Rational, Generator>>;

/// [a (x) t^r, b (x) t^s] = [a, b] (x) t^{r+s}.
inline GeneratorCombination lie_bracket(const Generator& a, const Generator& b) {
    const int p = a.power + b.power;
    auto one = [&](int c, Gen g) { return GeneratorCombination{{Rational(c), Generator{g, p}}}; };
    if (a.kind == b.kind) return {};
    if (a.kind == Gen::XPlus && b.kind == Gen::XMinus) return one(1, Gen::H);
    if (a.kind == Gen::XMinus && b.kind == Gen::XPlus) return one(-1, Gen::H);
    if (a.kind == Gen::H && b.kind == Gen::XPlus) return one(2, Gen::XPlus);
    if (a.kind == Gen::XPlus && b.kind == Gen::H) return one(-2, Gen::XPlus);
    if (a.kind == Gen::H && b.kind == Gen::XMinus) return one(-2, Gen::XMinus);
    return one(2, Gen::XMinus);  // [x-, h]
}

/// (z (x) t^r) . (v_1 (x) ... (x) v_l (x) f) = sum_j v_1 (x) ... z v_j ... (x) t_j^r f.
inline TensorVector act(const Generator& g, const TensorVector& v) {
    if (g.power < 0) throw std::invalid_argument("act: negative power of t");
    TensorVector out(v.ell());
    for (const auto& [k, c] : v.terms()) {
        for (int j = 0; j < v.ell(); ++j) {
            TensorKey key = k;
            key.exps[static_cast<std::size_t>(j)] += g.power;
            const bool minus = k.is_minus(j);
            switch (g.kind) {
                case Gen::XPlus:
                    if (!minus) continue;
                    key.minus &= ~(1U << j);
                    out.add(key, c);
                    break;
                case Gen::XMinus:
                    if (minus) continue;
                    key.minus |= 1U << j;
                    out.add(key, c);
                    break;
                case Gen::H:
                    out.add(key, minus ? Rational(-c) : c);
                    break;
            }
        }
    }
    return out;
}

inline TensorVector act(const GeneratorCombination& combo, const TensorVector& v) {
    TensorVector out(v.ell());
    for (const auto& [c, g] : combo) out += c * act(g, v);
    return out;
}

struct BracketCheck {
    bool ok = true;
    /// First sample vector on which the relation failed.
    std::optional<TensorVector> witness;
    explicit operator bool() const { return ok; }
};

/// Checks a(b v) - b(a v) = [a, b] v on every sample vector.
inline BracketCheck bracket_check(const Generator& a, const Generator& b, const std::vector<TensorVector>& sample) {
    const GeneratorCombination ab = lie_bracket(a, b);
    for (const TensorVector& v : sample) {
        if (act(a, act(b, v)) - act(b, act(a, v)) != act(ab, v)) return {false, v};
    }
    return {};
}

// ---------------------------------------------------------------------------
// Symmetrization and invariants
// ---------------------------------------------------------------------------

/// sigma . v: factor j and variable t_j move to position sigma(j).
inline TensorVector permute(const TensorVector& v, const std::vector<int>& sigma) {
    TensorVector out(v.ell());
    for (const auto& [k, c] : v.terms()) {
        TensorKey key{0, std::vector<int>(k.exps.size(), 0)};
        for (int j = 0; j < v.ell(); ++j) {
            const int to = sigma[static_cast<std::size_t>(j)];
            if (k.is_minus(j)) key.minus |= 1U << to;
            key.exps[static_cast<std::size_t>(to)] = k.exps[static_cast<std::size_t>(j)];
        }
        out.add(key, c);
    }
    return out;
}

/// Average over all l! permutations acting diagonally on factors and variables.
inline TensorVector symmetrize(const TensorVector& v) {
    std::vector<int> sigma(static_cast<std::size_t>(v.ell()));
    std::iota(sigma.begin(), sigma.end(), 0);
    TensorVector sum(v.ell());
    do {
        sum += permute(v, sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return Rational(1, factorial(v.ell())) * sum;
}

/// A basis of a graded piece together with its echelon certificate.
struct GradedSubspace {
    int ell = 0;
    int weight = 0;
    int degree = 0;
    std::vector<TensorVector> basis;
    RowEchelon<TensorKey> echelon;

    std::size_t dim() const { return basis.size(); }
    bool contains(const TensorVector& v) const { return echelon.contains(v.terms()); }
};

namespace detail {

/// Monomials e_{s} (x) t^{a} of weight m and degree d whose (sign, exponent)
/// pairs are weakly increasing: one per S_l-orbit.
inline std::vector<TensorKey> orbit_representatives(int ell, int m, int d) {
    const int minus_count = (ell - m) / 2;
    std::vector<TensorKey> out;
    std::vector<std::pair<int, int>> seq;  // (sign, exponent), sign 0 = e_+
    std::function<void(int, int)> rec = [&](int minus_left, int deg_left) {
        const int pos = static_cast<int>(seq.size());
        if (pos == ell) {
            if (minus_left == 0 && deg_left == 0) {
                TensorKey k;
                for (int j = 0; j < ell; ++j) {
                    if (seq[static_cast<std::size_t>(j)].first) k.minus |= 1U << j;
                    k.exps.push_back(seq[static_cast<std::size_t>(j)].second);
                }
                out.push_back(std::move(k));
            }
            return;
        }
        const std::pair<int, int> lo = seq.empty() ? std::pair<int, int>{0, 0} : seq.back();
        for (int s = lo.first; s <= 1; ++s) {
            if (s == 1 && minus_left == 0) continue;
            // Remaining plus slots must fit: once signs switch to 1 they stay 1.
            const int plus_left = (ell - pos) - minus_left;
            if (s == 1 && plus_left > 0) continue;
            if (s == 0 && plus_left == 0) continue;
            for (int a = (s == lo.first ? lo.second : 0); a <= deg_left; ++a) {
                seq.emplace_back(s, a);
                rec(minus_left - s, deg_left - a);
                seq.pop_back();
            }
        }
    };
    rec(minus_count, d);
    return out;
}

}  // namespace detail

/// Basis of ((V(w)^{(x)l} (x) A_l)^{S_l})_{m w}[d], by symmetrizing one
/// monomial per orbit and reducing.
inline GradedSubspace invariant_basis(int ell, int m, int d, const OracleLimits& lim = limits::invariant_basis) {
    if (ell < 0 || d < 0) throw std::invalid_argument("invariant_basis: ell and d must be nonnegative");
    lim.check("invariant_basis", ell, d);
    GradedSubspace out;
    out.ell = ell;
    out.weight = m;
    out.degree = d;
    if (std::abs(m) > ell || (ell - m) % 2 != 0) return out;
    for (const TensorKey& k : detail::orbit_representatives(ell, m, d)) {
        TensorVector v = symmetrize(TensorVector::basis(k.minus, k.exps));
        if (out.echelon.insert(v.terms())) out.basis.push_back(std::move(v));
    }
    return out;
}

/// Graded character of (V(w)^{(x)l} (x) A_l)^{S_l} in degrees <= D.
inline GradedCharacter tensor_character(int ell, int degree, const OracleLimits& lim = limits::tensor_character) {
    lim.check("tensor_character", ell, degree);
    GradedCharacter out(1, degree);
    for (int m = -ell; m <= ell; m += 2)
        for (int d = 0; d <= degree; ++d) {
            const auto dim = invariant_basis(ell, m, d, forced(lim)).dim();
            if (dim) out.add(Weight{m}, Series::monomial(static_cast<long long>(dim), d));
        }
    return out;
}

/// Local Weyl module W_loc(l w, 0) as the quotient of the invariant space by
/// A_l^{S_l}_+ : in each weight and degree, dim W[d] minus the rank of
/// W[d-e] * m_nu (nu |- e, e >= 1). Stops when the total reaches 2^l.
inline GradedCharacter local_weyl_oracle(int ell, const OracleLimits& lim = limits::local_weyl) {
    lim.check("local_weyl_oracle", ell, 0);
    const BigInt target = BigInt(1) << ell;
    GradedCharacter out(1);
    BigInt total = 0;
    std::map<std::pair<int, int>, GradedSubspace> cache;  // (m, d)
    auto space = [&](int m, int d) -> const GradedSubspace& {
        auto it = cache.find({m, d});
        if (it == cache.end()) it = cache.emplace(std::pair{m, d}, invariant_basis(ell, m, d, forced(lim))).first;
        return it->second;
    };
    std::map<int, std::vector<PolyVector>> sym;
    for (int d = 0; total < target; ++d) {
        if (d > ell * ell) throw std::logic_error("local_weyl_oracle: dimension did not reach 2^ell");
        for (int e = 1; e <= d; ++e)
            if (!sym.count(e)) sym[e] = symmetric_monomial_basis(ell, e);
        for (int m = -ell; m <= ell; m += 2) {
            const GradedSubspace& w = space(m, d);
            if (w.dim() == 0) continue;
            RowEchelon<TensorKey> sub;
            for (int e = 1; e <= d; ++e)
                for (const TensorVector& b : space(m, d - e).basis)
                    for (const PolyVector& f : sym[e]) sub.insert((b * f).terms());
            if (sub.rank() > w.dim()) throw std::logic_error("local_weyl_oracle: submodule larger than the ambient space");
            const auto q = static_cast<long long>(w.dim() - sub.rank());
            if (q) {
                out.add(Weight{m}, Series::monomial(q, d));
                total += q;
            }
        }
        if (total > target)
            throw std::logic_error("local_weyl_oracle: cumulative dimension " + total.str() + " exceeds 2^" + std::to_string(ell));
    }
    return out;
}

/// p(r) = sum_{sigma in S_k} prod_i (t_{m+2i-1}^{r_sigma(i)} - t_{m+2i}^{r_sigma(i)}), m = l - 2k.
inline PolyVector p_of_r(int ell, const std::vector<int>& r) {
    const int k = static_cast<int>(r.size());
    const int m = ell - 2 * k;
    if (m < 0) throw std::invalid_argument("p_of_r: 2k exceeds ell");
    std::vector<int> sigma(static_cast<std::size_t>(k));
    std::iota(sigma.begin(), sigma.end(), 0);
    PolyVector sum(ell);
    do {
        PolyVector term = PolyVector::one(ell);
        for (int i = 0; i < k; ++i) {
            const int ri = r[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
            term = term * (PolyVector::variable_power(ell, m + 2 * i + 1, ri) - PolyVector::variable_power(ell, m + 2 * i + 2, ri));
        }
        sum += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return sum;
}

/// Hilbert series, truncated at D, of the A_l^{S_l}-submodule of A_l
/// generated by {p(r) : r in Z_+^k}.
inline Series m_module_hilbert(int k, int ell, int degree, const OracleLimits& lim = limits::m_module) {
    if (k < 0 || 2 * k > ell) throw std::invalid_argument("m_module_hilbert: need 0 <= 2k <= ell");
    if (degree < 0) throw std::invalid_argument("m_module_hilbert: negative truncation degree");
    lim.check("m_module_hilbert", ell, degree);

    // All r in Z_+^k with |r| <= D, grouped by |r|.
    std::map<int, std::vector<std::vector<int>>> rs;
    std::vector<int> r(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k) {
            rs[std::accumulate(r.begin(), r.end(), 0)].push_back(r);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            r[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, degree);

    std::vector<BigInt> coeffs;
    for (int d = 0; d <= degree; ++d) {
        RowEchelon<std::vector<int>> span;
        for (int s = 0; s <= d; ++s)
            for (const auto& rr : rs[s]) {
                const PolyVector p = p_of_r(ell, rr);
                if (p.is_zero()) continue;
                for (const PolyVector& f : symmetric_monomial_basis(ell, d - s)) span.insert((p * f).terms());
            }
        coeffs.emplace_back(static_cast<long long>(span.rank()));
    }
    return Series::truncated(std::move(coeffs), 0, degree);
}

// ---------------------------------------------------------------------------
// The module (g + tau_1 C) (x) C[t] for g = sl2
// ---------------------------------------------------------------------------

namespace detail {

/// Basis labels of the theta module: y (x) t^s for y in {x+, x-, h}, and c (x) t^s.
enum class ThetaBasis { XPlus, XMinus, H, C };

using ThetaKey = std::pair<ThetaBasis, int>;
using ThetaVector = std::map<ThetaKey, Rational>;

inline void theta_add(ThetaVector& v, const ThetaKey& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = v.try_emplace(k, 0);
    it->second += c;
    if (it->second == 0) v.erase(it);
}

inline int theta_degree(const ThetaKey& k) { return k.first == ThetaBasis::C ? k.second + 1 : k.second; }

inline int theta_weight(ThetaBasis b) { return b == ThetaBasis::XPlus ? 2 : b == ThetaBasis::XMinus ? -2 : 0; }

inline ThetaBasis as_basis(Gen g) { return g == Gen::XPlus ? ThetaBasis::XPlus : g == Gen::XMinus ? ThetaBasis::XMinus : ThetaBasis::H; }

/// (x (x) t^r)(y (x) f, a (x) g) = ([x, y] (x) t^r f, 0) + r (0, <x, y> t^{r-1} f),
/// with the trace form <x+, x-> = 1, <h, h> = 2.
inline ThetaVector theta_act(const Generator& g, const ThetaVector& v) {
    ThetaVector out;
    for (const auto& [k, c] : v) {
        if (k.first == ThetaBasis::C) continue;
        const Generator y{k.first == ThetaBasis::XPlus ? Gen::XPlus : k.first == ThetaBasis::XMinus ? Gen::XMinus : Gen::H, 0};
        const Generator x{g.kind, 0};
        for (const auto& [b, z] : lie_bracket(x, y)) theta_add(out, {as_basis(z.kind), k.second + g.power}, b * c);
        int form = 0;
        if ((g.kind == Gen::XPlus && y.kind == Gen::XMinus) || (g.kind == Gen::XMinus && y.kind == Gen::XPlus)) form = 1;
        if (g.kind == Gen::H && y.kind == Gen::H) form = 2;
        if (form && g.power > 0) theta_add(out, {ThetaBasis::C, g.power - 1 + k.second}, Rational(g.power * form) * c);
    }
    return out;
}

}  // namespace detail

/// Checks the module (g + tau_1 C) (x) C[t] for g = sl2 on its degree <= D
/// slice: the bracket relations, the graded character against
/// ch_gr W_loc(2w, 0) / (1 - u), and generation by x+ (x) 1.
inline VerificationReport theta_module_check(int degree, const OracleLimits& lim = limits::theta) {
    using namespace detail;
    if (degree < 0) throw std::invalid_argument("theta_module_check: negative truncation degree");
    lim.check("theta_module_check", 1, degree);
    VerificationReport rep;
    rep.identity = "theta";
    rep.statement = "W^(theta,0) = (g + tau_1 C) (x) C[t]: brackets hold, ch_gr = ch_gr W_loc(theta,0) H(A_1), generated by x+ (x) 1";
    rep.truncation = degree;

    std::vector<ThetaKey> slice;
    for (int s = 0; s <= degree; ++s)
        for (ThetaBasis b : {ThetaBasis::XPlus, ThetaBasis::XMinus, ThetaBasis::H, ThetaBasis::C})
            if (theta_degree({b, s}) <= degree) slice.emplace_back(b, s);
    std::vector<Generator> gens;
    for (int r = 0; r <= degree; ++r)
        for (Gen g : {Gen::XPlus, Gen::XMinus, Gen::H}) gens.push_back({g, r});

    // 1. [X, Y] v = X Y v - Y X v wherever the result stays in the slice.
    {
        CheckResult c{"bracket relations", true, ""};
        long long checked = 0;
        for (const Generator& a : gens)
            for (const Generator& b : gens)
                for (const ThetaKey& k : slice) {
                    if (theta_degree(k) + a.power + b.power > degree) continue;
                    const ThetaVector v{{k, Rational(1)}};
                    ThetaVector lhs = theta_act(a, theta_act(b, v));
                    for (const auto& [key, x] : theta_act(b, theta_act(a, v))) theta_add(lhs, key, -x);
                    ThetaVector rhs;
                    for (const auto& [x, z] : lie_bracket(a, b))
                        for (const auto& [key, y] : theta_act(z, v)) theta_add(rhs, key, x * y);
                    ++checked;
                    if (lhs != rhs && c.pass) {
                        c.pass = false;
                        c.detail = "[" + a.str() + ", " + b.str() + "] fails on basis vector of degree " + std::to_string(theta_degree(k));
                    }
                }
        if (c.pass) c.detail = std::to_string(checked) + " relations";
        rep.record(std::move(c));
    }

    // 2. Graded character of the slice.
    {
        GradedCharacter ch(1, degree);
        for (const ThetaKey& k : slice) ch.add(Weight{theta_weight(k.first)}, Series::monomial(1, theta_degree(k)));
        std::vector<std::pair<int, int>> a1{{1, 1}};
        const GradedCharacter expected = geometric_inverse_product(a1, degree) * local_weyl_character(Weight{2}, 0);
        rep.record_comparison("graded character", compare(ch, expected));
    }

    // 3. Closure of x+ (x) 1 under the generators, restricted to degrees <= D.
    {
        RowEchelon<ThetaKey> span;
        std::vector<ThetaVector> queue{{{{ThetaBasis::XPlus, 0}, Rational(1)}}};
        span.insert(queue.front());
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const int deg = theta_degree(queue[i].begin()->first);
            for (const Generator& g : gens) {
                if (deg + g.power > degree) continue;
                ThetaVector w = theta_act(g, queue[i]);
                if (!w.empty() && span.insert(w)) queue.push_back(std::move(w));
            }
        }
        const bool full = span.rank() == slice.size();
        rep.record({"generated by x+ (x) 1", full,
                    "span " + std::to_string(span.rank()) + " of " + std::to_string(slice.size()) + " in degrees <= " + std::to_string(degree)});
    }
    return rep;
}

}  // namespace weylchar

#endif  // WEYLCHAR_ORACLE_HPP
