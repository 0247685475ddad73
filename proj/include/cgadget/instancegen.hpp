#pragma once

#include <random>
#include <utility>

#include "cgadget/solver.hpp"

namespace cgadget {

/// Seeded instance generators shared by the benchmark harness and the test
/// suites. Everything is a pure function of the generator state.

PointSet random_points(std::size_t n, std::size_t d, std::mt19937_64& rng);

std::pair<PointSet, PointSet> random_bichromatic(std::size_t n, std::size_t d, std::mt19937_64& rng);

/// Two sets whose cross Hamming distances all exceed `min_cross_exclusive`;
/// points violating the promise are resampled.
std::pair<PointSet, PointSet> bcp_no_promise(std::size_t n, std::size_t d,
                                             std::uint64_t min_cross_exclusive, std::mt19937_64& rng);

/// Two sets whose cross inner products all stay below `max_ip_exclusive`.
std::pair<PointSet, PointSet> bmip_no_promise(std::size_t n, std::size_t d,
                                              std::uint64_t max_ip_exclusive, std::mt19937_64& rng);

/// Overwrites b[j] with a copy of a[i] at exactly `distance` flipped
/// coordinates; returns the planted index pair.
std::pair<std::size_t, std::size_t> plant_cross_pair_at_distance(PointSet& a, PointSet& b,
                                                                 std::uint64_t distance,
                                                                 std::mt19937_64& rng);

/// Overwrites b[j] so that <a[i], b[j]> is exactly `ip`; requires a[i] to
/// have at least `ip` ones. Returns the planted index pair.
std::pair<std::size_t, std::size_t> plant_cross_pair_at_ip(PointSet& a, PointSet& b, std::uint64_t ip,
                                                           std::mt19937_64& rng);

} // namespace cgadget
