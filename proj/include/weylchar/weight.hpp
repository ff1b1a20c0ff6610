#ifndef WEYLCHAR_WEIGHT_HPP
#define WEYLCHAR_WEIGHT_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylchar {

/// Integral weight of A_n written in the fundamental-weight basis
/// (coords[i] is the coefficient of omega_{i+1}). The rank is the number
/// of coordinates and is always at least one.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw std::invalid_argument("Weight: rank must be at least 1");
    }
    Weight(std::initializer_list<int> coords) : Weight(std::vector<int>(coords)) {}

    static Weight zero(int rank) {
        if (rank < 1) throw std::invalid_argument("Weight: rank must be at least 1");
        return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0));
    }
    static Weight fundamental(int rank, int i) {
        Weight w = zero(rank);
        if (i < 1 || i > rank) throw std::invalid_argument("Weight: fundamental index out of range");
        w.coords_[static_cast<std::size_t>(i - 1)] = 1;
        return w;
    }

    int rank() const { return static_cast<int>(coords_.size()); }
    const std::vector<int>& coords() const { return coords_; }
    int operator[](std::size_t i) const { return coords_[i]; }

    bool is_dominant() const {
        return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
    }
    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
    }

    Weight& operator+=(const Weight& o) {
        check_rank(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        check_rank(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    Weight& operator*=(int k) {
        for (auto& c : coords_) c *= k;
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int k, Weight a) { return a *= k; }
    friend Weight operator-(Weight a) { return a *= -1; }

    // Lexicographic on coordinates; this is the canonical iteration order.
    friend auto operator<=>(const Weight&, const Weight&) = default;
    friend bool operator==(const Weight&, const Weight&) = default;

    void check_rank(const Weight& o) const {
        if (o.rank() != rank()) {
            throw std::invalid_argument("Weight: rank mismatch (" + std::to_string(rank()) + " vs " +
                                        std::to_string(o.rank()) + ")");
        }
    }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
        os << ')';
        return os.str();
    }

private:
    std::vector<int> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

/// Integer partition in canonical form (weakly decreasing, no zero parts).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }
    /// Part i (0-based); zero past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition transpose() const {
        std::vector<int> t;
        if (!parts_.empty()) {
            t.assign(static_cast<std::size_t>(parts_.front()), 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
        }
        return Partition(std::move(t));
    }

    /// n(lambda) = sum (i-1) lambda_i.
    int n_statistic() const {
        int s = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<int>(i) * parts_[i];
        return s;
    }

    /// Dominance order on partitions of the same size.
    bool dominated_by(const Partition& o) const {
        if (size() != o.size()) return false;
        int a = 0, b = 0;
        const std::size_t len = std::max(parts_.size(), o.parts_.size());
        for (std::size_t i = 0; i < len; ++i) {
            a += (*this)[i];
            b += o[i];
            if (a > b) return false;
        }
        return true;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << ')';
        return os.str();
    }

private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

}  // namespace weylchar

#endif  // WEYLCHAR_WEIGHT_HPP
