#include "cgadget/solver.hpp"

#include "cgadget/editembed.hpp"

namespace cgadget {

std::string instance_kind_name(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::OV: return "ov";
        case InstanceKind::CP: return "cp";
        case InstanceKind::BCP: return "bcp";
        case InstanceKind::MIP: return "mip";
        case InstanceKind::BMIP: return "bmip";
        case InstanceKind::EditCP: return "editcp";
    }
    throw BadParametersError("unknown instance kind");
}

InstanceKind parse_instance_kind(const std::string& name) {
    if (name == "ov") return InstanceKind::OV;
    if (name == "cp") return InstanceKind::CP;
    if (name == "bcp") return InstanceKind::BCP;
    if (name == "mip") return InstanceKind::MIP;
    if (name == "bmip") return InstanceKind::BMIP;
    if (name == "editcp") return InstanceKind::EditCP;
    throw ParseError("unknown instance kind: " + name);
}

bool is_bichromatic(InstanceKind kind) {
    return kind == InstanceKind::OV || kind == InstanceKind::BCP || kind == InstanceKind::BMIP;
}

namespace {

void check_cross(const PointSet& a, const PointSet& b) {
    if (a.dim != b.dim) throw DimensionMismatchError("point sets have different dimensions");
    if (a.size() == 0 || b.size() == 0) throw TooFewPointsError("empty point set");
}

} // namespace

std::optional<std::pair<std::size_t, std::size_t>> solve_ov(const PointSet& a, const PointSet& b) {
    check_cross(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (inner_product(a.points[i], b.points[j]) == 0) return std::make_pair(i, j);
    return std::nullopt;
}

Witness solve_cp(const PointSet& p, Metric metric) {
    if (p.size() < 2) throw TooFewPointsError("closest pair needs at least two points");
    Witness best;
    bool have = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const std::uint64_t d = metric == Metric::Hamming
                                        ? hamming(p.points[i], p.points[j])
                                        : edit_distance(p.points[i], p.points[j]);
            if (!have || d < best.value) {
                best = Witness{d, i, j};
                have = true;
            }
        }
    }
    return best;
}

Witness solve_bcp(const PointSet& a, const PointSet& b) {
    check_cross(a, b);
    Witness best;
    bool have = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            const std::uint64_t d = hamming(a.points[i], b.points[j]);
            if (!have || d < best.value) {
                best = Witness{d, i, j};
                have = true;
            }
        }
    }
    return best;
}

Witness solve_mip(const PointSet& p) {
    if (p.size() < 2) throw TooFewPointsError("maximum inner product needs at least two points");
    Witness best;
    bool have = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const std::uint64_t v = inner_product(p.points[i], p.points[j]);
            if (!have || v > best.value) {
                best = Witness{v, i, j};
                have = true;
            }
        }
    }
    return best;
}

Witness solve_bmip(const PointSet& a, const PointSet& b) {
    check_cross(a, b);
    Witness best;
    bool have = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            const std::uint64_t v = inner_product(a.points[i], b.points[j]);
            if (!have || v > best.value) {
                best = Witness{v, i, j};
                have = true;
            }
        }
    }
    return best;
}

std::string gap_verdict_name(GapVerdict v) {
    switch (v) {
        case GapVerdict::Yes: return "YES";
        case GapVerdict::No: return "NO";
        case GapVerdict::Indeterminate: return "INDETERMINATE";
    }
    throw BadParametersError("unknown verdict");
}

namespace {

std::uint64_t optimum_of(const Instance& instance) {
    switch (instance.kind) {
        case InstanceKind::CP: return solve_cp(instance.a, Metric::Hamming).value;
        case InstanceKind::EditCP: return solve_cp(instance.a, Metric::Edit).value;
        case InstanceKind::BCP: return solve_bcp(instance.a, instance.b).value;
        case InstanceKind::MIP: return solve_mip(instance.a).value;
        case InstanceKind::BMIP: return solve_bmip(instance.a, instance.b).value;
        case InstanceKind::OV: throw BadParametersError("OV has no threshold to decide against");
    }
    throw BadParametersError("unknown instance kind");
}

} // namespace

GapVerdict decide_gap(const Instance& instance, const Rational& gap) {
    if (!instance.alpha) throw BadParametersError("instance has no alpha");
    const std::int64_t alpha = *instance.alpha;
    const Rational optimum(static_cast<long long>(optimum_of(instance)));
    const bool distance_kind = instance.kind == InstanceKind::CP || instance.kind == InstanceKind::BCP ||
                               instance.kind == InstanceKind::EditCP;
    if (distance_kind) {
        if (gap.is_negative()) throw BadParametersError("distance gap must be >= 0");
        if (optimum <= Rational(alpha)) return GapVerdict::Yes;
        if (optimum > (Rational(1) + gap) * Rational(alpha)) return GapVerdict::No;
        return GapVerdict::Indeterminate;
    }
    if (gap < Rational(1)) throw BadParametersError("multiplicative gap must be >= 1");
    if (optimum >= Rational(alpha)) return GapVerdict::Yes;
    if (optimum < Rational(alpha) / gap) return GapVerdict::No;
    return GapVerdict::Indeterminate;
}

GapVerdict decide_gap_additive(const Instance& instance, std::int64_t gamma) {
    if (!instance.alpha) throw BadParametersError("instance has no alpha");
    if (instance.kind != InstanceKind::MIP && instance.kind != InstanceKind::BMIP)
        throw BadParametersError("additive gap applies to inner-product instances");
    const auto optimum = static_cast<std::int64_t>(optimum_of(instance));
    if (optimum >= *instance.alpha) return GapVerdict::Yes;
    if (optimum < *instance.alpha - gamma) return GapVerdict::No;
    return GapVerdict::Indeterminate;
}

} // namespace cgadget
