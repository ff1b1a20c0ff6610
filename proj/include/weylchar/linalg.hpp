#ifndef WEYLCHAR_LINALG_HPP
#define WEYLCHAR_LINALG_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace weylchar {

/// Sparse vector with exact rational coefficients over an ordered key type.
template <class Key>
using SparseVector = std::map<Key, Rational>;

/// Incremental row-echelon form over Z for sparse vectors.
///
/// Rows are kept primitive (content 1, positive pivot) and each has a
/// distinct leading key, so the stored rows are always independent and the
/// row count is the rank of everything inserted. Reduction is fraction-free:
/// r <- p*r - c*row, then divide out the content.
template <class Key>
class RowEchelon {
public:
    using Row = std::map<Key, BigInt>;

    /// Adds v to the span; returns true when v was independent.
    bool insert(const SparseVector<Key>& v) {
        Row r = reduce(to_integer(v));
        if (r.empty()) return false;
        const Key lead = r.begin()->first;
        rows_.emplace(lead, std::move(r));
        return true;
    }

    bool contains(const SparseVector<Key>& v) const { return reduce(to_integer(v)).empty(); }

    std::size_t rank() const { return rows_.size(); }
    const std::map<Key, Row>& rows() const { return rows_; }

private:
    static Row to_integer(const SparseVector<Key>& v) {
        BigInt den = 1;
        for (const auto& [k, c] : v)
            if (c != 0) den = lcm(den, denominator_of(c));
        Row r;
        for (const auto& [k, c] : v)
            if (c != 0) r.emplace(k, numerator_of(c) * (den / denominator_of(c)));
        normalize(r);
        return r;
    }

    static void normalize(Row& r) {
        if (r.empty()) return;
        BigInt g = 0;
        for (const auto& [k, c] : r) g = gcd(g, c);
        if (r.begin()->second < 0) g = -g;
        for (auto& [k, c] : r) c /= g;
    }

    Row reduce(Row r) const {
        while (!r.empty()) {
            auto pivot = rows_.find(r.begin()->first);
            if (pivot == rows_.end()) break;
            const Row& p = pivot->second;
            const BigInt a = p.begin()->second;  // pivot of the stored row, > 0
            const BigInt b = r.begin()->second;
            for (auto& [k, c] : r) c *= a;
            for (const auto& [k, c] : p) {
                auto [it, inserted] = r.try_emplace(k, 0);
                it->second -= b * c;
                if (it->second == 0) r.erase(it);
            }
            normalize(r);
        }
        return r;
    }

    std::map<Key, Row> rows_;
};

}  // namespace weylchar

#endif  // WEYLCHAR_LINALG_HPP
