#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "cgadget/instancegen.hpp"
#include "cgadget/io.hpp"

using namespace cgadget;

namespace {

template <class T, class W, class R>
T round_trip(const T& value, W&& write, R&& read) {
    std::ostringstream os;
    write(os, value);
    std::istringstream is(os.str());
    T back = read(is);
    // and the re-serialization is byte-identical
    std::ostringstream os2;
    write(os2, back);
    REQUIRE(os.str() == os2.str());
    return back;
}

} // namespace

TEST_CASE("instance round trip, monochromatic") {
    std::mt19937_64 rng(1);
    Instance inst;
    inst.kind = InstanceKind::CP;
    inst.a = random_points(7, 12, rng);
    inst.alpha = 3;
    const Instance back = round_trip(inst, write_instance, read_instance);
    CHECK(back == inst);
}

TEST_CASE("instance round trip, bichromatic without alpha") {
    std::mt19937_64 rng(2);
    Instance inst;
    inst.kind = InstanceKind::OV;
    auto [a, b] = random_bichromatic(5, 9, rng);
    inst.a = a;
    inst.b = b;
    const Instance back = round_trip(inst, write_instance, read_instance);
    CHECK(back == inst);
    CHECK_FALSE(back.alpha.has_value());
}

TEST_CASE("instance parse errors") {
    auto parse = [](const std::string& text) {
        std::istringstream is(text);
        return read_instance(is);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("cp 2 3\n010\n01\n"), ParseError);       // short row
    CHECK_THROWS_AS(parse("cp 2 3\n010\n01x\n"), ParseError);      // bad character
    CHECK_THROWS_AS(parse("what 2 3\n010\n011\n"), ParseError);    // unknown kind
    CHECK_THROWS_AS(parse("cp 3 3\n010\n011\n"), ParseError);      // missing row
}

TEST_CASE("gadget round trip") {
    const BipartiteGadget g = build_cd_gadget(7, 1);
    std::ostringstream os;
    write_gadget(os, g);
    std::istringstream is(os.str());
    const BipartiteGadget back = read_gadget(is);
    CHECK(gadget_equal(back, g));
    std::ostringstream os2;
    write_gadget(os2, back);
    CHECK(os.str() == os2.str());
    // the loaded gadget still verifies
    CHECK(verify_gadget(back).ok());
}

TEST_CASE("gap gadget round trip keeps mu exact") {
    const BipartiteGadget g = build_gap_cd_gadget(11, 1, 4);
    std::ostringstream os;
    write_gadget(os, g);
    std::istringstream is(os.str());
    const BipartiteGadget back = read_gadget(is);
    CHECK(back.mu == Rational(1, 4));
    CHECK(gadget_equal(back, g));
}

TEST_CASE("cover round trip") {
    const BipartiteGadget g = build_cd_gadget(7, 1);
    const PermutationCover cover = cover_biclique(g.adjacency);
    std::ostringstream os;
    write_cover(os, cover);
    std::istringstream is(os.str());
    const PermutationCover back = read_cover(is);
    REQUIRE(back.k() == cover.k());
    CHECK(back.n == cover.n);
    for (std::size_t t = 0; t < cover.k(); ++t) {
        CHECK(back.perms[t].a_img == cover.perms[t].a_img);
        CHECK(back.perms[t].b_img == cover.perms[t].b_img);
    }
    CHECK(verify_cover(back, g.adjacency).ok());
}

TEST_CASE("cover parse rejects out-of-range images") {
    std::istringstream is("2 1\n0 2\n0 1\n");
    CHECK_THROWS_AS(read_cover(is), ParseError);
}
