#include "cgadget/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cgadget {

namespace {

std::string next_token_line(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return line;
    }
    throw ParseError("unexpected end of file");
}

PointSet read_rows(std::istream& is, std::size_t n, std::size_t d) {
    PointSet set;
    set.dim = d;
    set.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string row = next_token_line(is);
        if (row.size() != d) throw ParseError("row " + std::to_string(i) + " has wrong length");
        set.points.push_back(BitVec::from_string(row));
    }
    return set;
}

} // namespace

void write_instance(std::ostream& os, const Instance& instance) {
    os << instance_kind_name(instance.kind) << ' ' << instance.a.size() << ' ' << instance.a.dim;
    if (instance.alpha) os << ' ' << *instance.alpha;
    os << '\n';
    for (const auto& p : instance.a.points) os << p.to_string() << '\n';
    if (is_bichromatic(instance.kind))
        for (const auto& p : instance.b.points) os << p.to_string() << '\n';
}

Instance read_instance(std::istream& is) {
    const std::string header = next_token_line(is);
    std::istringstream hs(header);
    std::string kind_name;
    std::size_t n = 0, d = 0;
    if (!(hs >> kind_name >> n >> d)) throw ParseError("bad instance header: " + header);
    Instance instance;
    instance.kind = parse_instance_kind(kind_name);
    std::int64_t alpha = 0;
    if (hs >> alpha) instance.alpha = alpha;
    if (n == 0) throw ParseError("instance must have at least one point");
    instance.a = read_rows(is, n, d);
    if (is_bichromatic(instance.kind)) instance.b = read_rows(is, n, d);
    return instance;
}

void write_gadget(std::ostream& os, const BipartiteGadget& gadget) {
    os << gadget_kind_name(gadget.kind) << ' ' << gadget.provenance.q << ' ' << gadget.provenance.k1 << ' '
       << gadget.provenance.k2 << ' ' << gadget.n << ' ' << gadget.dim << ' ' << gadget.beta << ' '
       << gadget.mu.num() << ' ' << gadget.mu.den() << '\n';
    for (const auto& p : gadget.side_a) os << p.to_string() << '\n';
    for (const auto& p : gadget.side_b) os << p.to_string() << '\n';
    for (const auto& row : gadget.adjacency) os << row.to_string() << '\n';
}

BipartiteGadget read_gadget(std::istream& is) {
    const std::string header = next_token_line(is);
    std::istringstream hs(header);
    std::string kind_name;
    BipartiteGadget g;
    long long mu_num = 0, mu_den = 1;
    if (!(hs >> kind_name >> g.provenance.q >> g.provenance.k1 >> g.provenance.k2 >> g.n >> g.dim >> g.beta >>
          mu_num >> mu_den))
        throw ParseError("bad gadget header: " + header);
    g.kind = parse_gadget_kind(kind_name);
    g.mu = Rational(mu_num, mu_den);
    auto read_block = [&](std::size_t width) {
        std::vector<BitVec> rows;
        rows.reserve(g.n);
        for (std::size_t i = 0; i < g.n; ++i) {
            const std::string row = next_token_line(is);
            if (row.size() != width) throw ParseError("gadget row has wrong length");
            rows.push_back(BitVec::from_string(row));
        }
        return rows;
    };
    g.side_a = read_block(g.dim);
    g.side_b = read_block(g.dim);
    g.adjacency = read_block(g.n);
    return g;
}

bool gadget_equal(const BipartiteGadget& lhs, const BipartiteGadget& rhs) {
    return lhs.kind == rhs.kind && lhs.n == rhs.n && lhs.dim == rhs.dim && lhs.beta == rhs.beta &&
           lhs.mu == rhs.mu && lhs.provenance.q == rhs.provenance.q && lhs.provenance.k1 == rhs.provenance.k1 &&
           lhs.provenance.k2 == rhs.provenance.k2 && lhs.side_a == rhs.side_a && lhs.side_b == rhs.side_b &&
           lhs.adjacency == rhs.adjacency;
}

void write_cover(std::ostream& os, const PermutationCover& cover) {
    os << cover.n << ' ' << cover.k() << '\n';
    for (const auto& perm : cover.perms) {
        for (std::size_t i = 0; i < perm.a_img.size(); ++i) os << (i ? " " : "") << perm.a_img[i];
        os << '\n';
        for (std::size_t i = 0; i < perm.b_img.size(); ++i) os << (i ? " " : "") << perm.b_img[i];
        os << '\n';
    }
}

PermutationCover read_cover(std::istream& is) {
    PermutationCover cover;
    std::size_t k = 0;
    if (!(is >> cover.n >> k)) throw ParseError("bad cover header");
    cover.perms.resize(k);
    for (auto& perm : cover.perms) {
        perm.a_img.resize(cover.n);
        perm.b_img.resize(cover.n);
        for (auto& x : perm.a_img)
            if (!(is >> x) || x >= cover.n) throw ParseError("bad cover permutation entry");
        for (auto& x : perm.b_img)
            if (!(is >> x) || x >= cover.n) throw ParseError("bad cover permutation entry");
    }
    return cover;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
}

} // namespace cgadget
