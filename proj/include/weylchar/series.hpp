#ifndef WEYLCHAR_SERIES_HPP
#define WEYLCHAR_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "weight.hpp"

namespace weylchar {

/// Integer-coefficient Laurent polynomial in u, or a power series known
/// only up to a truncation degree.
///
/// Storage is dense from min_deg: coeffs()[i] is the coefficient of
/// u^(min_deg + i). The first and last stored coefficients are nonzero,
/// and zero is the empty list. When trunc() is set, coefficients of u^d
/// for d > trunc are unknown; arithmetic never invents them.
class Series {
public:
    Series() = default;

    static Series exact(std::vector<BigInt> coeffs, int min_deg = 0) {
        Series s;
        s.coeffs_ = std::move(coeffs);
        s.min_deg_ = min_deg;
        s.canonicalize();
        return s;
    }
    static Series truncated(std::vector<BigInt> coeffs, int min_deg, int trunc) {
        Series s;
        s.coeffs_ = std::move(coeffs);
        s.min_deg_ = min_deg;
        s.trunc_ = trunc;
        s.canonicalize();
        return s;
    }
    static Series monomial(BigInt c, int deg) { return exact({std::move(c)}, deg); }
    static Series constant(BigInt c) { return monomial(std::move(c), 0); }
    static Series one() { return constant(1); }
    /// Zero known up to degree trunc.
    static Series zero_to(int trunc) { return truncated({}, 0, trunc); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_exact() const { return !trunc_.has_value(); }
    std::optional<int> trunc() const { return trunc_; }
    int min_deg() const { return min_deg_; }
    /// Highest stored degree; meaningless for zero.
    int max_deg() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool known(int d) const { return !trunc_ || d <= *trunc_; }

    /// Coefficient of u^d; throws std::out_of_range past the truncation degree.
    BigInt coeff(int d) const {
        if (!known(d)) {
            throw std::out_of_range("Series: coefficient of u^" + std::to_string(d) +
                                    " is beyond truncation degree " + std::to_string(*trunc_));
        }
        if (is_zero() || d < min_deg_ || d > max_deg()) return 0;
        return coeffs_[static_cast<std::size_t>(d - min_deg_)];
    }

    Series truncate(int degree) const {
        Series s = *this;
        s.trunc_ = trunc_ ? std::min(*trunc_, degree) : degree;
        s.canonicalize();
        return s;
    }

    /// Multiplication by u^r.
    Series shift(int r) const {
        Series s = *this;
        if (!s.is_zero()) s.min_deg_ += r;
        if (s.trunc_) *s.trunc_ += r;
        return s;
    }

    /// Value at u = 1; only defined for exact series.
    BigInt at_one() const {
        if (!is_exact()) throw std::logic_error("Series: evaluation at u=1 needs an exact series");
        BigInt s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    bool nonnegative() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
    }

    Series operator-() const {
        Series s = *this;
        for (auto& c : s.coeffs_) c = -c;
        return s;
    }

    Series& operator+=(const Series& o) { return *this = add(*this, o, 1); }
    Series& operator-=(const Series& o) { return *this = add(*this, o, -1); }
    Series& operator*=(const Series& o) { return *this = mul(*this, o); }
    Series& operator*=(const BigInt& k) {
        if (k == 0) {
            coeffs_.clear();
            min_deg_ = 0;
        } else {
            for (auto& c : coeffs_) c *= k;
        }
        return *this;
    }

    friend Series operator+(const Series& a, const Series& b) { return add(a, b, 1); }
    friend Series operator-(const Series& a, const Series& b) { return add(a, b, -1); }
    friend Series operator*(const Series& a, const Series& b) { return mul(a, b); }
    friend Series operator*(Series a, const BigInt& k) { return a *= k; }
    friend Series operator*(const BigInt& k, Series a) { return a *= k; }

    /// Structural equality: same truncation and same coefficients. Use
    /// compare() for equality on the common known range.
    friend bool operator==(const Series&, const Series&) = default;

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const BigInt& c = coeffs_[i];
            if (c == 0) continue;
            const int d = min_deg_ + static_cast<int>(i);
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (d == 0) {
                os << mag;
                continue;
            }
            if (mag != 1) os << mag;
            os << 'u';
            if (d != 1) os << '^' << d;
        }
        if (first) os << '0';
        if (trunc_) os << " + O(u^" << (*trunc_ + 1) << ')';
        return os.str();
    }

private:
    static constexpr long long kInf = std::numeric_limits<int>::max();

    // Lowest degree that may carry a nonzero coefficient.
    long long low() const {
        if (!is_zero()) return min_deg_;
        return trunc_ ? static_cast<long long>(*trunc_) + 1 : kInf;
    }
    long long trunc_or_inf() const { return trunc_ ? *trunc_ : kInf; }

    static Series add(const Series& a, const Series& b, int sign) {
        Series r;
        if (a.trunc_ || b.trunc_) r.trunc_ = static_cast<int>(std::min(a.trunc_or_inf(), b.trunc_or_inf()));
        if (a.is_zero() && b.is_zero()) return r;
        int lo = a.is_zero() ? b.min_deg_ : (b.is_zero() ? a.min_deg_ : std::min(a.min_deg_, b.min_deg_));
        int hi = a.is_zero() ? b.max_deg() : (b.is_zero() ? a.max_deg() : std::max(a.max_deg(), b.max_deg()));
        if (r.trunc_) hi = std::min(hi, *r.trunc_);
        if (hi < lo) return r;
        r.min_deg_ = lo;
        r.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
        auto accumulate = [&](const Series& s, int sg) {
            for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
                const int d = s.min_deg_ + static_cast<int>(i);
                if (d > hi) break;
                if (sg > 0)
                    r.coeffs_[static_cast<std::size_t>(d - lo)] += s.coeffs_[i];
                else
                    r.coeffs_[static_cast<std::size_t>(d - lo)] -= s.coeffs_[i];
            }
        };
        accumulate(a, 1);
        accumulate(b, sign);
        r.canonicalize();
        return r;
    }

    static Series mul(const Series& a, const Series& b) {
        Series r;
        if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) return r;
        if (a.trunc_ || b.trunc_) {
            // Pessimistic min of the operands, tightened when negative
            // degrees let unknown terms reach lower.
            long long t = std::min(a.trunc_or_inf(), b.trunc_or_inf());
            if (a.trunc_) t = std::min(t, a.trunc_or_inf() + b.low());
            if (b.trunc_) t = std::min(t, b.trunc_or_inf() + a.low());
            r.trunc_ = static_cast<int>(t);
        }
        if (a.is_zero() || b.is_zero()) return r;
        int hi = a.max_deg() + b.max_deg();
        if (r.trunc_) hi = std::min(hi, *r.trunc_);
        const int lo = a.min_deg_ + b.min_deg_;
        if (hi < lo) return r;
        r.min_deg_ = lo;
        r.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            const int di = a.min_deg_ + static_cast<int>(i);
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                const int d = di + b.min_deg_ + static_cast<int>(j);
                if (d > hi) break;
                r.coeffs_[static_cast<std::size_t>(d - lo)] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        r.canonicalize();
        return r;
    }

    void canonicalize() {
        if (trunc_) {
            const long long keep = static_cast<long long>(*trunc_) - min_deg_ + 1;
            if (keep <= 0)
                coeffs_.clear();
            else if (static_cast<long long>(coeffs_.size()) > keep)
                coeffs_.resize(static_cast<std::size_t>(keep));
        }
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
            min_deg_ += static_cast<int>(lead);
        }
        if (coeffs_.empty()) min_deg_ = 0;
    }

    int min_deg_ = 0;
    std::vector<BigInt> coeffs_;
    std::optional<int> trunc_;
};

inline std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.str(); }

/// Outcome of comparing two series on their common known range.
struct SeriesComparison {
    bool equal = true;
    /// Highest compared degree; empty when both series are exact.
    std::optional<int> compared_up_to;
    std::optional<int> first_mismatch;
};

inline SeriesComparison compare(const Series& a, const Series& b) {
    SeriesComparison out;
    if (a.trunc() || b.trunc()) {
        out.compared_up_to = std::min(a.trunc().value_or(std::numeric_limits<int>::max()),
                                      b.trunc().value_or(std::numeric_limits<int>::max()));
    }
    const Series diff = out.compared_up_to ? a.truncate(*out.compared_up_to) - b.truncate(*out.compared_up_to) : a - b;
    if (!diff.is_zero()) {
        out.equal = false;
        out.first_mismatch = diff.min_deg();
    }
    return out;
}

/// prod_j (1 - u^{e_j})^{-m_j}, truncated at degree D.
inline Series geometric_inverse_product(const std::vector<std::pair<int, int>>& factors, int degree) {
    if (degree < 0) throw std::invalid_argument("geometric_inverse_product: negative truncation degree");
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, 0);
    c[0] = 1;
    for (const auto& [e, m] : factors) {
        if (e <= 0 || m <= 0) throw std::invalid_argument("geometric_inverse_product: exponents and multiplicities must be positive");
        for (int rep = 0; rep < m; ++rep)
            for (int d = e; d <= degree; ++d) c[static_cast<std::size_t>(d)] += c[static_cast<std::size_t>(d - e)];
    }
    return Series::truncated(std::move(c), 0, degree);
}

/// Hilbert series of the invariant ring attached to a dominant weight
/// sum r_i omega_i: prod_i prod_{j=1}^{r_i} (1 - u^j)^{-1}, truncated at D.
inline Series hilbert_A(const Weight& lambda, int degree) {
    if (!lambda.is_dominant()) throw std::invalid_argument("hilbert_A: weight " + lambda.str() + " is not dominant");
    std::vector<std::pair<int, int>> factors;
    for (int r : lambda.coords())
        for (int j = 1; j <= r; ++j) factors.emplace_back(j, 1);
    return geometric_inverse_product(factors, degree);
}

/// [n]_u = 1 + u + ... + u^{n-1}; zero for n <= 0.
inline Series q_integer(int n) {
    if (n <= 0) return {};
    return Series::exact(std::vector<BigInt>(static_cast<std::size_t>(n), 1));
}

/// Gaussian binomial [n choose k]_u; zero when k < 0 or k > n.
inline Series q_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return {};
    // q-Pascal: [n,j] = [n-1,j-1] + u^j [n-1,j].
    std::vector<Series> row{Series::one()};
    for (int m = 1; m <= n; ++m) {
        std::vector<Series> next(static_cast<std::size_t>(m) + 1);
        next[0] = Series::one();
        next[static_cast<std::size_t>(m)] = Series::one();
        for (int j = 1; j < m; ++j)
            next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shift(j);
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

/// sl2 Kostka polynomial K_{ell,(ell-k >= k)}(u) as a difference of
/// Gaussian binomials; zero outside 0 <= 2k <= ell.
inline Series sl2_kostka(int ell, int k) {
    if (ell < 0 || k < 0 || 2 * k > ell) return {};
    return q_binomial(ell, k) - q_binomial(ell, k - 1);
}

}  // namespace weylchar

#endif  // WEYLCHAR_SERIES_HPP
