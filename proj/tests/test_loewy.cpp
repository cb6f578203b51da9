#include <doctest.h>

#include "helpers.hpp"

using namespace quif5;
using namespace quif5::testing;

namespace {

struct Fx {
    BasicAlgebra alg;
    FreeModule F1;
    int one, x, xx;
    Fx()
        : alg(BasicAlgebra::build(a1_spec())),
          F1(alg, {{"m1", 0}}),
          one(mono(alg, "id(v)")),
          x(mono(alg, "x")),
          xx(mono(alg, "x*x")) {}
};

}  // namespace

TEST_CASE_FIXTURE(Fx, "layer_basis thresholds on the A1 running example") {
    F5Result r = f5_stdbasis(F1, {F1.monomial(0, x)});
    CHECK(layer_basis(F1, r.basis, 0).size() == 2);  // dim M = 2
    CHECK(layer_basis(F1, r.basis, 1).size() == 1);  // dim Rad M = 1
    CHECK(layer_basis(F1, r.basis, 5).empty());
}

TEST_CASE_FIXTURE(Fx, "loewy layers examples") {
    F5Result r = f5_stdbasis(F1, {F1.monomial(0, x)});
    auto layers = loewy_layers(F1, r.basis);
    REQUIRE(layers.size() == 2);
    CHECK(layers[0].basis.size() == 1);
    CHECK(layers[1].basis.size() == 1);
    CHECK(layers[0].basis[0] == F1.monomial(0, x));
    CHECK(layers[1].basis[0] == F1.monomial(0, xx));

    // whole projective: dims [1, 1, 1]
    F5Result full = f5_stdbasis(F1, {F1.monomial(0, one)});
    auto l2 = loewy_layers(F1, full.basis);
    REQUIRE(l2.size() == 3);
    for (const LoewyLayer& l : l2) CHECK(l.basis.size() == 1);

    // A2 at u, M = <a>: a*b = 0 so Rad M = 0, dims [1]
    BasicAlgebra a2 = BasicAlgebra::build(a2_spec());
    FreeModule F(a2, {{"m1", 0}});
    F5Result ra = f5_stdbasis(F, {F.monomial(0, mono(a2, "a"))});
    auto la = loewy_layers(F, ra.basis);
    REQUIRE(la.size() == 1);
    CHECK(la[0].basis.size() == 1);
}

TEST_CASE_FIXTURE(Fx, "minimal generators examples") {
    F5Result r = f5_stdbasis(F1, {F1.monomial(0, x)});
    auto mg = minimal_generators(F1, r.basis);
    REQUIRE(mg.size() == 1);
    CHECK(mg[0] == F1.monomial(0, x));

    // rank 2: two independent heads
    FreeModule F2(alg, {{"m1", 0}, {"m2", 0}});
    ModuleElement g1 = F2.add(F2.monomial(0, x), F2.monomial(1, x));
    ModuleElement g2 = F2.monomial(1, x);
    F5Result r2 = f5_stdbasis(F2, {g1, g2});
    CHECK(minimal_generators(F2, r2.basis).size() == 2);

    // redundant generators {x, x^2}: still one minimal generator
    F5Result r3 = f5_stdbasis(F1, {F1.monomial(0, x), F1.monomial(0, xx)});
    CHECK(minimal_generators(F1, r3.basis).size() == 1);
}

TEST_CASE("wrong ordering rejected") {
    AlgebraSpec pos = a1_spec();
    pos.order_mode = OrderMode::PositiveDegree;
    BasicAlgebra alg = BasicAlgebra::build(pos);
    FreeModule F(alg, {{"m1", 0}});
    F5Result r = f5_stdbasis(F, {F.monomial(0, mono(alg, "x"))});
    CHECK_THROWS_AS(loewy_layers(F, r.basis), WrongOrdering);
    CHECK_THROWS_AS(minimal_generators(F, r.basis), WrongOrdering);
    CHECK_THROWS_AS(layer_basis(F, r.basis, 0), WrongOrdering);
}

TEST_CASE("loewy dims match oracle radical filtration on random instances") {
    for (int seed = 0; seed < 20; ++seed) {
        RandomInstance inst = random_instance(7000 + seed);
        const FreeModule& F = *inst.built.module;
        F5Result r = f5_stdbasis(F, inst.built.generators);
        auto layers = loewy_layers(F, r.basis);
        Oracle oracle(F);
        std::vector<int> rad = oracle.radical_filtration(inst.built.generators);
        REQUIRE(rad.size() == layers.size() + 1);
        int total = 0;
        for (std::size_t d = 0; d < layers.size(); ++d) {
            CHECK(static_cast<int>(layers[d].basis.size()) == rad[d] - rad[d + 1]);
            total += static_cast<int>(layers[d].basis.size());
        }
        CHECK(total == rad[0]);  // layer dims sum to dim M

        // |mingens| = dim M - dim Rad M
        int head = rad.size() >= 2 ? rad[0] - rad[1] : rad[0];
        CHECK(static_cast<int>(minimal_generators(F, r.basis).size()) == head);

        // layer_basis dims match dim Rad^d M for every d
        for (std::size_t d = 0; d < rad.size(); ++d)
            CHECK(static_cast<int>(layer_basis(F, r.basis, static_cast<int>(d)).size()) ==
                  rad[d]);
    }
}

TEST_CASE("minimal generators regenerate the module") {
    for (int seed = 0; seed < 10; ++seed) {
        RandomInstance inst = random_instance(7700 + seed);
        const FreeModule& F = *inst.built.module;
        F5Result r = f5_stdbasis(F, inst.built.generators);
        auto mg = minimal_generators(F, r.basis);
        Oracle oracle(F);
        CHECK(oracle.module_echelon(mg).dim == oracle.module_echelon(inst.built.generators).dim);
    }
}
