#include "cgadget/instancegen.hpp"

#include <algorithm>
#include <numeric>

namespace cgadget {

namespace {

BitVec random_bits(std::size_t d, std::mt19937_64& rng) {
    BitVec p(d);
    std::uint64_t word = 0;
    unsigned left = 0;
    for (std::size_t i = 0; i < d; ++i) {
        if (left == 0) {
            word = rng();
            left = 64;
        }
        if (word & 1) p.set(i);
        word >>= 1;
        --left;
    }
    return p;
}

std::vector<std::size_t> pick_positions(std::size_t d, std::size_t count, std::mt19937_64& rng) {
    std::vector<std::size_t> all(d);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, d - 1);
        std::swap(all[i], all[pick(rng)]);
    }
    all.resize(count);
    return all;
}

} // namespace

PointSet random_points(std::size_t n, std::size_t d, std::mt19937_64& rng) {
    PointSet set;
    set.dim = d;
    set.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) set.points.push_back(random_bits(d, rng));
    return set;
}

std::pair<PointSet, PointSet> random_bichromatic(std::size_t n, std::size_t d, std::mt19937_64& rng) {
    PointSet a = random_points(n, d, rng);
    PointSet b = random_points(n, d, rng);
    return {std::move(a), std::move(b)};
}

std::pair<PointSet, PointSet> bcp_no_promise(std::size_t n, std::size_t d,
                                             std::uint64_t min_cross_exclusive, std::mt19937_64& rng) {
    PointSet a = random_points(n, d, rng);
    PointSet b;
    b.dim = d;
    b.points.reserve(n);
    while (b.size() < n) {
        BitVec cand = random_bits(d, rng);
        bool ok = true;
        for (const auto& p : a.points) {
            if (hamming(p, cand) <= min_cross_exclusive) { ok = false; break; }
        }
        if (ok) b.points.push_back(std::move(cand));
    }
    return {std::move(a), std::move(b)};
}

std::pair<PointSet, PointSet> bmip_no_promise(std::size_t n, std::size_t d,
                                              std::uint64_t max_ip_exclusive, std::mt19937_64& rng) {
    PointSet a = random_points(n, d, rng);
    PointSet b;
    b.dim = d;
    b.points.reserve(n);
    while (b.size() < n) {
        BitVec cand = random_bits(d, rng);
        bool ok = true;
        for (const auto& p : a.points) {
            if (inner_product(p, cand) >= max_ip_exclusive) { ok = false; break; }
        }
        if (ok) b.points.push_back(std::move(cand));
    }
    return {std::move(a), std::move(b)};
}

std::pair<std::size_t, std::size_t> plant_cross_pair_at_distance(PointSet& a, PointSet& b,
                                                                 std::uint64_t distance,
                                                                 std::mt19937_64& rng) {
    if (distance > a.dim) throw BadParametersError("planted distance exceeds dimension");
    std::uniform_int_distribution<std::size_t> pick_a(0, a.size() - 1), pick_b(0, b.size() - 1);
    const std::size_t i = pick_a(rng);
    const std::size_t j = pick_b(rng);
    BitVec planted = a.points[i];
    for (std::size_t pos : pick_positions(a.dim, static_cast<std::size_t>(distance), rng))
        planted.set(pos, !planted.get(pos));
    b.points[j] = std::move(planted);
    return {i, j};
}

std::pair<std::size_t, std::size_t> plant_cross_pair_at_ip(PointSet& a, PointSet& b, std::uint64_t ip,
                                                           std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick_a(0, a.size() - 1), pick_b(0, b.size() - 1);
    const std::size_t j = pick_b(rng);
    for (std::size_t attempt = 0; attempt < 10000; ++attempt) {
        const std::size_t i = pick_a(rng);
        std::vector<std::size_t> ones;
        for (std::size_t pos = 0; pos < a.dim; ++pos)
            if (a.points[i].get(pos)) ones.push_back(pos);
        if (ones.size() < ip) continue;
        std::shuffle(ones.begin(), ones.end(), rng);
        BitVec planted(a.dim);
        for (std::size_t k = 0; k < ip; ++k) planted.set(ones[k]);
        b.points[j] = std::move(planted);
        return {i, j};
    }
    throw BadParametersError("no point with enough ones to plant the inner product");
}

} // namespace cgadget
