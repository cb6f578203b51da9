#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace quif5;
using namespace quif5::testing;

namespace {

Quiver q1() {
    Quiver q;
    int v = q.add_vertex("v");
    q.add_arrow("x", v, v);
    return q;
}

Quiver q2() {
    Quiver q;
    int u = q.add_vertex("u");
    int v = q.add_vertex("v");
    q.add_arrow("a", u, v);
    q.add_arrow("b", v, u);
    return q;
}

}  // namespace

TEST_CASE("compose examples") {
    Quiver q = q1();
    Path x = q.arrow_path(0);
    auto xx = q.compose(x, x);
    REQUIRE(xx.has_value());
    CHECK(xx->degree() == 2);

    Path one = q.trivial_path(0);
    CHECK(*q.compose(one, x) == x);
    CHECK(*q.compose(x, one) == x);

    Quiver q_ = q2();
    Path a = q_.arrow_path(0);
    CHECK(!q_.compose(a, a).has_value());
}

TEST_CASE("prefix and complement examples") {
    Quiver q = q1();
    Path x = q.arrow_path(0);
    Path xx = *q.compose(x, x);
    CHECK(q.is_prefix(x, xx));
    CHECK(q.complement(x, xx) == x);
    CHECK(!q.is_prefix(xx, x));
    CHECK_THROWS_AS(q.complement(xx, x), NotADivisor);

    Quiver q_ = q2();
    Path a = q_.arrow_path(0), b = q_.arrow_path(1);
    Path aba = *q_.compose(*q_.compose(a, b), a);
    Path ba = *q_.compose(b, a);
    CHECK(q_.is_prefix(a, aba));
    CHECK(q_.complement(a, aba) == ba);
}

TEST_CASE("duplicate ids rejected") {
    Quiver q;
    q.add_vertex("v");
    CHECK_THROWS_AS(q.add_vertex("v"), SemanticError);
    q.add_arrow("x", 0, 0);
    CHECK_THROWS_AS(q.add_arrow("x", 0, 0), SemanticError);
    CHECK_THROWS_AS(q.add_arrow("y", 0, 1), SemanticError);
}

TEST_CASE("compose associativity on random triples") {
    Quiver q = q2();
    std::vector<Path> paths = all_paths(q, 4);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> d(0, paths.size() - 1);
    for (int t = 0; t < 500; ++t) {
        const Path &a = paths[d(rng)], &b = paths[d(rng)], &c = paths[d(rng)];
        auto ab = q.compose(a, b);
        auto bc = q.compose(b, c);
        auto left = ab ? q.compose(*ab, c) : std::nullopt;
        auto right = bc ? q.compose(a, *bc) : std::nullopt;
        CHECK(left == right);
    }
}

TEST_CASE("unique path factorization: one prefix per length") {
    Quiver q = q2();
    for (const Path& target : all_paths(q, 4)) {
        int count = 0;
        for (const Path& p : all_paths(q, 4))
            if (q.is_prefix(p, target)) {
                ++count;
                CHECK(*q.compose(p, q.complement(p, target)) == target);
            }
        CHECK(count == target.degree() + 1);
    }
}
