#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gordonlab {

/// Integer partition, stored as a weakly decreasing sequence of positive parts.
/// The empty partition (weight 0) is a valid value.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// Number of parts.
    int length() const { return static_cast<int>(parts_.size()); }

    /// Sum of parts.
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    int multiplicity(int value) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
    }

    /// Distinct part values with multiplicities, largest value first.
    std::map<int, int, std::greater<int>> multiplicities() const {
        std::map<int, int, std::greater<int>> m;
        for (int p : parts_) ++m[p];
        return m;
    }

    /// profile[v] = multiplicity of v, for v = 0..max_part (profile[0] == 0).
    std::vector<int> multiplicity_profile() const {
        std::vector<int> profile(static_cast<std::size_t>(max_part()) + 1, 0);
        for (int p : parts_) ++profile[static_cast<std::size_t>(p)];
        return profile;
    }

    /// Comma-separated parts, e.g. "2,1,1,1"; the empty partition renders as "()".
    std::string to_string() const {
        if (parts_.empty()) return "()";
        std::ostringstream out;
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (k) out << ',';
            out << parts_[k];
        }
        return out.str();
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Parses "2,1,1,1" (whitespace around parts tolerated). "" and "()" give the
/// empty partition. Throws std::invalid_argument on malformed input or parts
/// that are not weakly decreasing.
inline Partition parse_partition(const std::string& text) {
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed == "()") return Partition{};

    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= trimmed.size()) {
        std::size_t comma = trimmed.find(',', pos);
        std::string token = trimmed.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad partition part: '" + token + "'");
        long value = std::stol(token);
        if (value < 1 || value > 1'000'000)
            throw std::invalid_argument("partition part out of range: " + token);
        parts.push_back(static_cast<int>(value));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));  // rechecks monotonicity
}

/// All partitions of n, ordered lexicographically decreasing on part sequences
/// (e.g. for n=5: 5; 4,1; 3,2; 3,1,1; 2,2,1; 2,1,1,1; 1,1,1,1,1).
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("partition weight must be >= 0");
    std::vector<Partition> out;
    std::vector<int> stack;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(stack);
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            stack.push_back(p);
            rec(remaining - p, p);
            stack.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

/// Partitions of n whose multiplicities obey m(1) <= bound_one and
/// m(v) <= bound_rest for v >= 2, in the same order as enumerate_partitions.
inline std::vector<Partition> enumerate_partitions_bounded(int n, int bound_one, int bound_rest) {
    if (n < 0) throw std::invalid_argument("partition weight must be >= 0");
    if (bound_one < 0 || bound_rest < 0) throw std::invalid_argument("multiplicity bounds must be >= 0");
    std::vector<Partition> out;
    std::vector<int> stack;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(stack);
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            int bound = (p == 1) ? bound_one : bound_rest;
            int already = (!stack.empty() && stack.back() == p)
                              ? static_cast<int>(std::count(stack.rbegin(), stack.rend(), p))
                              : 0;
            if (already >= bound) continue;
            stack.push_back(p);
            rec(remaining - p, p);
            stack.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

}  // namespace gordonlab
