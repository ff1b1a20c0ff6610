#ifndef WEYLCHAR_ROOTDATA_HPP
#define WEYLCHAR_ROOTDATA_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "weight.hpp"

namespace weylchar {

// ---------------------------------------------------------------------------
// Cartan data of A_n
// ---------------------------------------------------------------------------

inline std::vector<std::vector<int>> cartan_matrix(int rank) {
    if (rank < 1) throw std::invalid_argument("cartan_matrix: rank must be at least 1");
    const auto n = static_cast<std::size_t>(rank);
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 2;
        if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
}

/// Simple root alpha_i (1-based) in fundamental coordinates: row i of the
/// Cartan matrix.
inline Weight simple_root(int rank, int i) {
    if (i < 1 || i > rank) throw std::invalid_argument("simple_root: index out of range");
    return Weight(cartan_matrix(rank)[static_cast<std::size_t>(i - 1)]);
}

/// Coordinates of w in the simple-root basis, found by exact Gaussian
/// elimination on A x = w.
inline std::vector<Rational> root_coordinates(const Weight& w) {
    const auto n = static_cast<std::size_t>(w.rank());
    const auto a = cartan_matrix(w.rank());
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        // Symmetric matrix: x_j alpha_j summed gives column j, so solve A^T x = w.
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[j][i];
        m[i][n] = w[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("root_coordinates: singular Cartan matrix");
        std::swap(m[piv], m[col]);
        const Rational p = m[col][col];
        for (std::size_t j = col; j <= n; ++j) m[col][j] /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

/// (rank+1) times the height of w (sum of its root coordinates), as an
/// integer. Uses (rank+1) A^{-1}_{ij} = min(i,j) (rank+1-max(i,j)).
inline long long scaled_height(const Weight& w) {
    const int n = w.rank();
    long long h = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) h += static_cast<long long>(std::min(i, j)) * (n + 1 - std::max(i, j)) * w[static_cast<std::size_t>(j - 1)];
    return h;
}

/// True iff lam - mu is a nonnegative integer combination of simple roots.
inline bool dominance_leq(const Weight& mu, const Weight& lam) {
    mu.check_rank(lam);
    for (const auto& c : root_coordinates(lam - mu)) {
        if (c < 0 || denominator_of(c) != 1) return false;
    }
    return true;
}

/// A positive root of A_n: alpha_i + ... + alpha_j.
struct PositiveRoot {
    std::vector<int> root_coords;
    Weight weight;
};

inline std::vector<PositiveRoot> positive_roots(int rank) {
    std::vector<PositiveRoot> roots;
    const auto a = cartan_matrix(rank);
    const auto n = static_cast<std::size_t>(rank);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            std::vector<int> rc(n, 0), fc(n, 0);
            for (std::size_t k = i; k <= j; ++k) {
                rc[k] = 1;
                for (std::size_t c = 0; c < n; ++c) fc[c] += a[k][c];
            }
            roots.push_back({std::move(rc), Weight(std::move(fc))});
        }
    }
    return roots;
}

/// Highest root theta = omega_1 + omega_n (2 omega for sl2).
inline Weight highest_root(int rank) {
    if (rank < 1) throw std::invalid_argument("highest_root: rank must be at least 1");
    if (rank == 1) return Weight{2};
    return Weight::fundamental(rank, 1) + Weight::fundamental(rank, rank);
}

/// Simple reflection s_i (1-based).
inline Weight reflect(const Weight& w, int i) {
    const int c = w[static_cast<std::size_t>(i - 1)];
    return w - c * simple_root(w.rank(), i);
}

inline Weight dominant_conjugate(Weight w) {
    for (;;) {
        int bad = 0;
        for (int i = 1; i <= w.rank(); ++i)
            if (w[static_cast<std::size_t>(i - 1)] < 0) {
                bad = i;
                break;
            }
        if (bad == 0) return w;
        w = reflect(w, bad);
    }
}

inline std::vector<Weight> weyl_orbit(const Weight& w) {
    std::set<Weight> seen{w};
    std::vector<Weight> stack{w};
    while (!stack.empty()) {
        Weight v = stack.back();
        stack.pop_back();
        for (int i = 1; i <= v.rank(); ++i) {
            Weight s = reflect(v, i);
            if (seen.insert(s).second) stack.push_back(std::move(s));
        }
    }
    return {seen.begin(), seen.end()};
}

/// Weyl dimension formula for A_n.
inline BigInt weyl_dimension(const Weight& lam) {
    if (!lam.is_dominant()) throw std::invalid_argument("weyl_dimension: weight " + lam.str() + " is not dominant");
    const int n = lam.rank();
    Rational d = 1;
    for (int i = 0; i < n; ++i) {
        int s = 0;
        for (int j = i; j < n; ++j) {
            s += lam[static_cast<std::size_t>(j)] + 1;
            d *= Rational(s, j - i + 1);
        }
    }
    return numerator_of(d);
}

// ---------------------------------------------------------------------------
// Characters
// ---------------------------------------------------------------------------

/// Finite formal sum of weights with integer coefficients.
class Character {
public:
    explicit Character(int rank = 1) : rank_(rank) {
        if (rank < 1) throw std::invalid_argument("Character: rank must be at least 1");
    }

    static Character of_weight(const Weight& w, BigInt mult = 1) {
        Character c(w.rank());
        c.add(w, std::move(mult));
        return c;
    }

    int rank() const { return rank_; }
    const std::map<Weight, BigInt>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    BigInt mult(const Weight& w) const {
        auto it = entries_.find(w);
        return it == entries_.end() ? BigInt(0) : it->second;
    }

    void add(const Weight& w, const BigInt& c) {
        if (w.rank() != rank_) throw std::invalid_argument("Character: rank mismatch at weight " + w.str());
        if (c == 0) return;
        auto [it, inserted] = entries_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) entries_.erase(it);
        }
    }

    BigInt dimension() const {
        BigInt s = 0;
        for (const auto& [w, m] : entries_) s += m;
        return s;
    }

    Character& operator+=(const Character& o) {
        check_rank(o);
        for (const auto& [w, m] : o.entries_) add(w, m);
        return *this;
    }
    Character& operator-=(const Character& o) {
        check_rank(o);
        for (const auto& [w, m] : o.entries_) add(w, -m);
        return *this;
    }
    friend Character operator+(Character a, const Character& b) { return a += b; }
    friend Character operator-(Character a, const Character& b) { return a -= b; }

    /// Character of the tensor product.
    friend Character operator*(const Character& a, const Character& b) {
        a.check_rank(b);
        Character r(a.rank_);
        for (const auto& [wa, ma] : a.entries_)
            for (const auto& [wb, mb] : b.entries_) r.add(wa + wb, ma * mb);
        return r;
    }
    friend Character operator*(const BigInt& k, Character a) {
        if (k == 0) return Character(a.rank_);
        for (auto& [w, m] : a.entries_) m *= k;
        return a;
    }

    friend bool operator==(const Character&, const Character&) = default;

    void check_rank(const Character& o) const {
        if (o.rank_ != rank_) throw std::invalid_argument("Character: rank mismatch");
    }

    std::string str() const {
        std::string s;
        for (const auto& [w, m] : entries_) {
            if (!s.empty()) s += " + ";
            s += m.str() + "*e" + w.str();
        }
        return s.empty() ? "0" : s;
    }

private:
    int rank_;
    std::map<Weight, BigInt> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const Character& c) { return os << c.str(); }

/// Dominant weights mu <= lam, listed by increasing depth (sum of the root
/// coordinates of lam - mu).
inline std::vector<Weight> dominant_weights_below(const Weight& lam) {
    const auto top = root_coordinates(lam);
    const int n = lam.rank();
    std::vector<int> bound(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Rational& c = top[static_cast<std::size_t>(i)];
        bound[static_cast<std::size_t>(i)] = static_cast<int>(numerator_of(c) / denominator_of(c));
    }
    std::vector<std::pair<int, Weight>> found;
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (;;) {
        Weight mu = lam;
        int depth = 0;
        for (int i = 0; i < n; ++i) {
            mu -= c[static_cast<std::size_t>(i)] * simple_root(n, i + 1);
            depth += c[static_cast<std::size_t>(i)];
        }
        if (mu.is_dominant()) found.emplace_back(depth, mu);
        int i = 0;
        while (i < n && ++c[static_cast<std::size_t>(i)] > bound[static_cast<std::size_t>(i)]) c[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first < y.first : x.second > y.second;
    });
    std::vector<Weight> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

/// Character of the irreducible module V(lam), by Freudenthal's
/// multiplicity recursion over the dominant weights below lam.
inline Character irr_character(const Weight& lam) {
    if (!lam.is_dominant()) throw std::invalid_argument("irr_character: weight " + lam.str() + " is not dominant");
    const int n = lam.rank();
    const auto roots = positive_roots(n);
    Weight rho = Weight(std::vector<int>(static_cast<std::size_t>(n), 1));

    // (n+1) times the invariant form; (omega_i, omega_j) = A^{-1}_{ij}.
    auto form = [n](const Weight& x, const Weight& y) {
        long long s = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                s += static_cast<long long>(std::min(i, j)) * (n + 1 - std::max(i, j)) * x[static_cast<std::size_t>(i - 1)] * y[static_cast<std::size_t>(j - 1)];
        return s;
    };

    std::map<Weight, BigInt> dom;
    const Weight lr = lam + rho;
    const long long top = form(lr, lr);
    for (const Weight& mu : dominant_weights_below(lam)) {
        if (mu == lam) {
            dom[mu] = 1;
            continue;
        }
        BigInt num = 0;
        for (const auto& root : roots) {
            for (int k = 1;; ++k) {
                const Weight nu = mu + k * root.weight;
                auto it = dom.find(dominant_conjugate(nu));
                if (it == dom.end()) break;
                // (nu, alpha) pairs fundamental coordinates with root coordinates.
                long long pairing = 0;
                for (int i = 0; i < n; ++i) pairing += static_cast<long long>(root.root_coords[static_cast<std::size_t>(i)]) * nu[static_cast<std::size_t>(i)];
                num += 2 * (n + 1) * pairing * it->second;
            }
        }
        const Weight mr = mu + rho;
        const long long den = top - form(mr, mr);
        if (den <= 0 || num % den != 0) throw std::logic_error("irr_character: Freudenthal recursion produced a non-integral multiplicity");
        BigInt m = num / den;
        if (m != 0) dom[mu] = m;
    }

    Character ch(n);
    for (const auto& [mu, m] : dom)
        for (const Weight& w : weyl_orbit(mu)) ch.add(w, m);
    return ch;
}

/// Weights of the adjoint representation with multiplicity (ch V(theta)).
inline Character adjoint_character(int rank) { return irr_character(highest_root(rank)); }

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

/// Weight sum_i (xi_i - xi_{i+1}) omega_i attached to a partition with at
/// most rank+1 parts.
inline Weight mu_of_xi(const Partition& xi, int rank) {
    if (xi.length() > rank + 1) {
        throw std::invalid_argument("mu_of_xi: partition " + xi.str() + " has more than " + std::to_string(rank + 1) + " parts");
    }
    std::vector<int> c(static_cast<std::size_t>(rank));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = xi[i] - xi[i + 1];
    return Weight(std::move(c));
}

/// All partitions of r with at most max_parts parts, in reverse
/// lexicographic order: (4), (3,1), (2,2), ...
inline std::vector<Partition> partitions_of(int r, int max_parts) {
    std::vector<Partition> out;
    if (r < 0 || max_parts < 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int largest) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int p = std::min(remaining, largest); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, r, r);
    return out;
}

/// Partition whose columns are the heights of the fundamental weights in
/// lam = sum r_i omega_i: r_i columns of height i. Its size is sum i r_i.
inline Partition column_partition(const Weight& lam) {
    if (!lam.is_dominant()) throw std::invalid_argument("column_partition: weight " + lam.str() + " is not dominant");
    std::vector<int> parts;
    for (int i = lam.rank(); i >= 1; --i)
        for (int k = 0; k < lam[static_cast<std::size_t>(i - 1)]; ++k) parts.push_back(i);
    return Partition(std::move(parts));
}

/// Number of boxes of lam viewed as a Young diagram, sum i r_i.
inline int box_count(const Weight& lam) {
    int s = 0;
    for (int i = 1; i <= lam.rank(); ++i) s += i * lam[static_cast<std::size_t>(i - 1)];
    return s;
}

}  // namespace weylchar

#endif  // WEYLCHAR_ROOTDATA_HPP
