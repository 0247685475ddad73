#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgadget/bitvec.hpp"
#include "cgadget/rational.hpp"

namespace cgadget {

/// Collection of bit-packed points sharing one dimension.
struct PointSet {
    std::size_t dim = 0;
    std::vector<BitVec> points;

    std::size_t size() const { return points.size(); }
    void push(BitVec p) {
        if (p.size() != dim) throw DimensionMismatchError("point dimension mismatch");
        points.push_back(std::move(p));
    }

    bool operator==(const PointSet& other) const = default;
};

enum class InstanceKind { OV, CP, BCP, MIP, BMIP, EditCP };

std::string instance_kind_name(InstanceKind kind);
InstanceKind parse_instance_kind(const std::string& name);
bool is_bichromatic(InstanceKind kind);

/// A problem instance: one point set for CP/MIP/EditCP, two for OV/BCP/BMIP,
/// plus the decision threshold alpha (absent for OV).
struct Instance {
    InstanceKind kind = InstanceKind::CP;
    PointSet a;
    PointSet b; // empty unless bichromatic
    std::optional<std::int64_t> alpha;

    bool operator==(const Instance& other) const = default;
};

enum class Metric { Hamming, Edit };

/// Optimum value plus the witness index pair (0-based). Ties resolve to the
/// lexicographically smallest pair.
struct Witness {
    std::uint64_t value = 0;
    std::size_t i = 0;
    std::size_t j = 0;
};

/// First (i, j) with <a_i, b_j> = 0 in lexicographic order, if any.
std::optional<std::pair<std::size_t, std::size_t>> solve_ov(const PointSet& a, const PointSet& b);

/// Minimum distance over distinct index pairs i < j.
Witness solve_cp(const PointSet& p, Metric metric = Metric::Hamming);

/// Minimum Hamming distance over A x B.
Witness solve_bcp(const PointSet& a, const PointSet& b);

/// Maximum inner product over distinct index pairs i < j.
Witness solve_mip(const PointSet& p);

/// Maximum inner product over A x B.
Witness solve_bmip(const PointSet& a, const PointSet& b);

enum class GapVerdict { Yes, No, Indeterminate };

std::string gap_verdict_name(GapVerdict v);

/// Decides the promise problem for the instance's kind:
///   distance kinds  YES if optimum <= alpha, NO if optimum > (1+gap)*alpha;
///   MIP kinds       YES if optimum >= alpha, NO if optimum < alpha/gap.
/// Anything strictly between is a promise violation and reported as such.
GapVerdict decide_gap(const Instance& instance, const Rational& gap);

/// Additive variant for inner products: NO requires optimum < alpha - gamma.
GapVerdict decide_gap_additive(const Instance& instance, std::int64_t gamma);

} // namespace cgadget
