#ifndef WEYLCHAR_KOSTKA_HPP
#define WEYLCHAR_KOSTKA_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rootdata.hpp"
#include "series.hpp"
#include "weight.hpp"

namespace weylchar {

/// Semistandard Young tableau with entries 1, 2, ...
struct Tableau {
    std::vector<std::vector<int>> rows;
    Partition shape;
    /// content[j] = number of entries equal to j+1.
    std::vector<int> content;

    /// Rows read top to bottom, each row right to left. Charge is defined
    /// on this word.
    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (const auto& row : rows) w.insert(w.end(), row.rbegin(), row.rend());
        return w;
    }

    /// Rows concatenated top to bottom, left to right; the enumeration
    /// order key.
    std::vector<int> row_word() const {
        std::vector<int> w;
        for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
        return w;
    }

    bool is_semistandard() const {
        if (static_cast<int>(rows.size()) != shape.length()) return false;
        std::vector<int> seen;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != shape[i]) return false;
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                const int v = rows[i][j];
                if (v < 1) return false;
                if (j > 0 && rows[i][j - 1] > v) return false;
                if (i > 0 && rows[i - 1][j] >= v) return false;
                if (static_cast<std::size_t>(v) > seen.size()) seen.resize(static_cast<std::size_t>(v), 0);
                ++seen[static_cast<std::size_t>(v - 1)];
            }
        }
        std::vector<int> c = content;
        while (!c.empty() && c.back() == 0) c.pop_back();
        return seen == c;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

namespace detail {

// Builds every SSYT of the given shape and content by placing the copies of
// each letter as a horizontal strip. visit(rows) is called once per tableau
// with the rows as a reused buffer.
template <class Visit>
class SsytFiller {
public:
    SsytFiller(const Partition& shape, const std::vector<int>& content, Visit& visit)
        : shape_(shape.parts()), content_(content), visit_(visit), rows_(shape_.size()), len_(shape_.size(), 0) {
        // strip() holds references into saved_ across deeper letters.
        saved_.reserve(content_.size() + 1);
    }

    void run() {
        if (shape_.empty()) {
            if (std::all_of(content_.begin(), content_.end(), [](int c) { return c == 0; })) visit_(rows_);
            return;
        }
        letter(0);
    }

private:
    void letter(std::size_t v) {
        if (v == content_.size()) {
            visit_(rows_);
            return;
        }
        saved_.push_back(len_);
        strip(v, 0, content_[v]);
        saved_.pop_back();
    }

    void strip(std::size_t v, std::size_t row, int remaining) {
        if (remaining == 0) {
            letter(v + 1);
            return;
        }
        // Letter v+1 can only sit in rows 0..v; nothing left to place into.
        if (row >= rows_.size() || row > v) return;
        const std::vector<int>& old = saved_.back();
        int room = shape_[row] - len_[row];
        if (row > 0) room = std::min(room, old[row - 1] - len_[row]);
        room = std::min(room, remaining);
        for (int c = room; c >= 0; --c) {
            for (int k = 0; k < c; ++k) rows_[row].push_back(static_cast<int>(v) + 1);
            len_[row] += c;
            strip(v, row + 1, remaining - c);
            len_[row] -= c;
            rows_[row].resize(rows_[row].size() - static_cast<std::size_t>(c));
        }
    }

    const std::vector<int>& shape_;
    const std::vector<int>& content_;
    Visit& visit_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> len_;
    std::vector<std::vector<int>> saved_;
};

inline void check_sizes(const Partition& shape, const std::vector<int>& content) {
    for (int c : content)
        if (c < 0) throw std::invalid_argument("SSYT content has a negative entry");
    const int total = std::accumulate(content.begin(), content.end(), 0);
    if (total != shape.size()) {
        throw std::invalid_argument("SSYT size mismatch: shape " + shape.str() + " has " + std::to_string(shape.size()) +
                                    " boxes but content sums to " + std::to_string(total));
    }
}

}  // namespace detail

/// Calls visit(rows) for every semistandard tableau of the given shape and
/// content. The rows buffer is reused between calls.
template <class Visit>
void for_each_ssyt(const Partition& shape, const std::vector<int>& content, Visit&& visit) {
    detail::check_sizes(shape, content);
    detail::SsytFiller<std::remove_reference_t<Visit>> filler(shape, content, visit);
    filler.run();
}

/// All semistandard tableaux of the given shape and content, ordered
/// lexicographically by their row words.
inline std::vector<Tableau> enum_ssyt(const Partition& shape, const std::vector<int>& content) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, content, [&](const std::vector<std::vector<int>>& rows) { out.push_back({rows, shape, content}); });
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) { return a.row_word() < b.row_word(); });
    return out;
}

/// Lascoux-Schutzenberger charge of a word whose content is a partition.
///
/// Words are read as reading_word() produces them (rows top to bottom, each
/// row right to left). Standard subwords are extracted by taking the
/// leftmost unused 1, then scanning right (cyclically) to the next unused 2,
/// and so on. Within a standard subword 1 has index 0 and r+1 has the index
/// of r, plus one when it lies to the left of r (the scan wrapped). Charge
/// is the total of all indices.
class ChargeCalculator {
public:
    int operator()(std::span<const int> word) {
        int letters = 0;
        for (int v : word) {
            if (v < 1) throw std::invalid_argument("charge: letters must be positive");
            letters = std::max(letters, v);
        }
        positions_.resize(static_cast<std::size_t>(letters));
        for (auto& p : positions_) p.clear();
        for (std::size_t i = 0; i < word.size(); ++i) positions_[static_cast<std::size_t>(word[i] - 1)].push_back(static_cast<int>(i));
        for (std::size_t v = 0; v < positions_.size(); ++v) {
            if (positions_[v].empty() || (v > 0 && positions_[v].size() > positions_[v - 1].size()))
                throw std::invalid_argument("charge: content of the word is not a partition");
        }

        int total = 0;
        std::size_t remaining = word.size();
        while (remaining > 0) {
            std::size_t k = 0;
            while (k < positions_.size() && !positions_[k].empty()) ++k;
            int p = positions_[0].front();
            positions_[0].erase(positions_[0].begin());
            int index = 0;
            for (std::size_t r = 1; r < k; ++r) {
                auto& ps = positions_[r];
                // First occurrence to the right of p, else wrap to the leftmost.
                auto it = std::upper_bound(ps.begin(), ps.end(), p);
                if (it == ps.end()) {
                    it = ps.begin();
                    ++index;
                }
                p = *it;
                ps.erase(it);
                total += index;
            }
            remaining -= k;
        }
        return total;
    }

private:
    std::vector<std::vector<int>> positions_;
};

inline int charge_of_word(std::span<const int> word) {
    ChargeCalculator calc;
    return calc(word);
}

inline int charge(const Tableau& t) {
    const auto w = t.reading_word();
    return charge_of_word(w);
}

/// Kostka-Foulkes polynomial K_{shape,content}(u) = sum over SSYT of
/// u^charge.
inline Series kostka_poly(const Partition& shape, const Partition& content) {
    detail::check_sizes(shape, content.parts());
    std::vector<BigInt> hist;
    std::vector<long long> counts;
    ChargeCalculator calc;
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(shape.size()));
    for_each_ssyt(shape, content.parts(), [&](const std::vector<std::vector<int>>& rows) {
        word.clear();
        for (const auto& row : rows) word.insert(word.end(), row.rbegin(), row.rend());
        const auto c = static_cast<std::size_t>(calc(word));
        if (c >= counts.size()) counts.resize(c + 1, 0);
        ++counts[c];
    });
    hist.reserve(counts.size());
    for (long long c : counts) hist.emplace_back(c);
    return Series::exact(std::move(hist));
}

/// u^{n(content)} K(1/u), the cocharge form of a Kostka-Foulkes polynomial.
inline Series reflect_to_cocharge(const Series& k, const Partition& content) {
    if (k.is_zero()) return k;
    const int top = content.n_statistic();
    std::vector<BigInt> c(static_cast<std::size_t>(top) + 1, 0);
    for (int d = k.min_deg(); d <= k.max_deg(); ++d) c[static_cast<std::size_t>(top - d)] = k.coeff(d);
    return Series::exact(std::move(c));
}

// ---------------------------------------------------------------------------
// Indexing used in the graded character of local Weyl modules
// ---------------------------------------------------------------------------

/// Which partition fills a slot of K_{shape,content}: the summation index xi
/// or the column partition c(lambda), each possibly transposed.
enum class KostkaSlot { Xi, XiTranspose, Columns, ColumnsTranspose };
enum class KostkaStatistic { Charge, Cocharge };

struct KostkaConvention {
    KostkaSlot shape;
    KostkaSlot content;
    KostkaStatistic statistic;

    friend bool operator==(const KostkaConvention&, const KostkaConvention&) = default;
};

inline std::string to_string(KostkaSlot s) {
    switch (s) {
        case KostkaSlot::Xi: return "xi";
        case KostkaSlot::XiTranspose: return "xi'";
        case KostkaSlot::Columns: return "c";
        case KostkaSlot::ColumnsTranspose: return "c'";
    }
    return "?";
}

inline std::string to_string(const KostkaConvention& c) {
    return "K_{" + to_string(c.shape) + "," + to_string(c.content) + "}" +
           (c.statistic == KostkaStatistic::Charge ? " (charge)" : " (cocharge)");
}

/// Every convention pairing xi with c(lambda), in either slot, either
/// transposed, under either statistic (16 in total).
inline std::vector<KostkaConvention> all_kostka_conventions() {
    std::vector<KostkaConvention> out;
    const std::array xis{KostkaSlot::Xi, KostkaSlot::XiTranspose};
    const std::array cols{KostkaSlot::Columns, KostkaSlot::ColumnsTranspose};
    for (auto stat : {KostkaStatistic::Charge, KostkaStatistic::Cocharge}) {
        for (auto x : xis)
            for (auto c : cols) {
                out.push_back({x, c, stat});
                out.push_back({c, x, stat});
            }
    }
    return out;
}

/// The convention that reproduces the sl2 closed form and the tensor
/// product dimension count: K_{xi', c(lambda)}(u) under charge, where
/// c(lambda) has r_i columns of height i. For sl2 this is
/// K_{xi',(1^ell)} = cocharge K_{xi,(1^ell)}.
inline constexpr KostkaConvention kLocalWeylConvention{KostkaSlot::XiTranspose, KostkaSlot::Columns, KostkaStatistic::Charge};

inline Series kostka_by_convention(const Weight& lambda, const Partition& xi, const KostkaConvention& conv) {
    const Partition c = column_partition(lambda);
    auto pick = [&](KostkaSlot s) {
        switch (s) {
            case KostkaSlot::Xi: return xi;
            case KostkaSlot::XiTranspose: return xi.transpose();
            case KostkaSlot::Columns: return c;
            case KostkaSlot::ColumnsTranspose: return c.transpose();
        }
        return xi;
    };
    const Partition shape = pick(conv.shape);
    const Partition content = pick(conv.content);
    if (shape.size() != content.size()) return {};
    Series k = kostka_poly(shape, content);
    return conv.statistic == KostkaStatistic::Charge ? k : reflect_to_cocharge(k, content);
}

/// Coefficient polynomial of ch V(mu_xi) in the graded character of the
/// local Weyl module W_loc(lambda, 0).
///
/// xi is a partition of |lambda| = sum i r_i with at most rank+1 parts. For
/// sl2 with lambda = ell omega and xi = (ell-k, k) this equals
/// sl2_kostka(ell, k).
inline Series local_weyl_kostka(const Weight& lambda, const Partition& xi) {
    if (!lambda.is_dominant()) throw std::invalid_argument("local_weyl_kostka: weight " + lambda.str() + " is not dominant");
    if (xi.length() > lambda.rank() + 1) {
        throw std::invalid_argument("local_weyl_kostka: partition " + xi.str() + " has more than " + std::to_string(lambda.rank() + 1) + " parts");
    }
    if (xi.size() != box_count(lambda)) {
        throw std::invalid_argument("local_weyl_kostka: partition " + xi.str() + " is not a partition of " + std::to_string(box_count(lambda)));
    }
    return kostka_by_convention(lambda, xi, kLocalWeylConvention);
}

}  // namespace weylchar

#endif  // WEYLCHAR_KOSTKA_HPP
