#pragma once

#include "gordonlab/hypergraph.hpp"
#include "gordonlab/partition.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gordonlab {

/// Tagged family of partition classes the CLI and the verifiers enumerate.
struct PartitionClass {
    enum class Tag { All, Neighborly, GordonB, GordonA, DistinctR };

    Tag tag = Tag::All;
    int r = 0;
    int i = 0;

    static PartitionClass all() { return {Tag::All, 0, 0}; }
    static PartitionClass neighborly(int r, int i) {
        detail::check_ri(r, i);
        return {Tag::Neighborly, r, i};
    }
    static PartitionClass gordon_b(int r, int i) {
        detail::check_ri(r, i);
        if (r < 2) throw std::invalid_argument("gordon_b requires r >= 2");
        return {Tag::GordonB, r, i};
    }
    static PartitionClass gordon_a(int r, int i) {
        detail::check_ri(r, i);
        if (r < 2) throw std::invalid_argument("gordon_a requires r >= 2");
        return {Tag::GordonA, r, i};
    }
    static PartitionClass distinct_r(int r, int i) {
        detail::check_ri(r, i);
        return {Tag::DistinctR, r, i};
    }

    std::string name() const {
        switch (tag) {
            case Tag::All: return "all";
            case Tag::Neighborly: return "neighborly";
            case Tag::GordonB: return "gordon-b";
            case Tag::GordonA: return "gordon-a";
            case Tag::DistinctR: return "distinct-r";
        }
        return "?";
    }
};

/// (r,i)-neighborly test.
///
/// InducedNoIsolated: multiplicity bounds hold and the partition's hypergraph
/// (see build_H_lambda) has no isolated vertex.
///
/// DefinitionConditions: multiplicity bounds hold and every part sits in some
/// window of r consecutive parts whose values differ by at most 1; parts equal
/// to 1 are exempt when m(1) = i.
inline bool is_neighborly(const Partition& p, int r, int i, Interpretation interp) {
    detail::check_ri(r, i);
    if (!satisfies_neighborly_bounds(p, r, i)) return false;
    if (p.empty()) return true;

    if (interp == Interpretation::InducedNoIsolated)
        return build_H_lambda(p, r, i, interp).isolated_vertices().empty();

    const std::vector<int>& parts = p.parts();
    const int len = p.length();
    const bool ones_exempt = (p.multiplicity(1) == i);
    for (int j = 0; j < len; ++j) {
        if (parts[j] == 1 && ones_exempt) continue;
        bool covered = false;
        for (int k = std::max(0, j - r + 1); k <= j && k + r - 1 < len; ++k) {
            if (parts[k] - parts[k + r - 1] <= 1) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

/// Gordon class B: m(1) <= i - 1 and any r consecutive parts span at least 2,
/// i.e. parts[k] - parts[k + r - 1] >= 2.
inline bool is_gordon_b(const Partition& p, int r, int i) {
    detail::check_ri(r, i);
    if (r < 2) throw std::invalid_argument("is_gordon_b requires r >= 2");
    if (p.multiplicity(1) > i - 1) return false;
    const std::vector<int>& parts = p.parts();
    for (int k = 0; k + r - 1 < p.length(); ++k)
        if (parts[k] - parts[k + r - 1] < 2) return false;
    return true;
}

/// Gordon class A: no part congruent to 0, i, or -i modulo 2r+1.
inline bool is_gordon_a(const Partition& p, int r, int i) {
    detail::check_ri(r, i);
    if (r < 2) throw std::invalid_argument("is_gordon_a requires r >= 2");
    const int mod = 2 * r + 1;
    for (int part : p.parts()) {
        int res = part % mod;
        if (res == 0 || res == i || res == mod - i) return false;
    }
    return true;
}

/// Distinct parts, each congruent to 0, i, or -i modulo 2r+1.
inline bool is_distinct_r(const Partition& p, int r, int i) {
    detail::check_ri(r, i);
    const int mod = 2 * r + 1;
    const std::vector<int>& parts = p.parts();
    for (int k = 0; k < p.length(); ++k) {
        if (k + 1 < p.length() && parts[k] == parts[k + 1]) return false;
        int res = parts[k] % mod;
        if (!(res == 0 || res == i || res == mod - i)) return false;
    }
    return true;
}

inline bool in_class(const Partition& p, const PartitionClass& cls, Interpretation interp) {
    switch (cls.tag) {
        case PartitionClass::Tag::All: return true;
        case PartitionClass::Tag::Neighborly: return is_neighborly(p, cls.r, cls.i, interp);
        case PartitionClass::Tag::GordonB: return is_gordon_b(p, cls.r, cls.i);
        case PartitionClass::Tag::GordonA: return is_gordon_a(p, cls.r, cls.i);
        case PartitionClass::Tag::DistinctR: return is_distinct_r(p, cls.r, cls.i);
    }
    throw std::logic_error("unreachable");
}

/// Members of the class among partitions of n, in enumerate_partitions order.
/// Every class contains the empty partition at n = 0.
inline std::vector<Partition> enumerate_class(int n, const PartitionClass& cls,
                                              Interpretation interp = Interpretation::InducedNoIsolated) {
    std::vector<Partition> candidates =
        cls.tag == PartitionClass::Tag::Neighborly
            ? enumerate_partitions_bounded(n, cls.i, cls.r)
            : enumerate_partitions(n);
    std::vector<Partition> out;
    for (Partition& p : candidates)
        if (in_class(p, cls, interp)) out.push_back(std::move(p));
    return out;
}

inline long long count_class(int n, const PartitionClass& cls,
                             Interpretation interp = Interpretation::InducedNoIsolated) {
    return static_cast<long long>(enumerate_class(n, cls, interp).size());
}

/// Number of partitions of n into distinct parts congruent to 0, +-i mod 2r+1,
/// each counted with sign (-1)^(number of parts).
inline long long signed_count_R(int n, int r, int i) {
    long long total = 0;
    for (const Partition& p : enumerate_class(n, PartitionClass::distinct_r(r, i)))
        total += (p.length() % 2 == 0) ? 1 : -1;
    return total;
}

}  // namespace gordonlab
