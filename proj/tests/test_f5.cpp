#include <doctest.h>

#include <set>

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

TEST_CASE_FIXTURE(Fx, "is_standard_relative examples") {
    SyzygyLMSet L;
    Signature s_x2{0, alg.mono_path(xx)};
    CHECK(is_standard_relative(alg, s_x2, L));
    L.insert(Signature{0, alg.mono_path(x)});
    CHECK(!is_standard_relative(alg, s_x2, L));  // x prefix of x^2
    Signature other{1, alg.mono_path(xx)};
    CHECK(is_standard_relative(alg, other, L));  // index mismatch
}

TEST_CASE_FIXTURE(Fx, "f5_reducer_exists examples") {
    std::vector<SignedElement> G{
        {F1.monomial(0, x), Signature{0, alg.quiver().trivial_path(0)}}};
    // sig e1*x: candidate c = x, small; product v1*x^2 sig-irreducible
    CHECK(f5_reducer_exists(F1, Signature{0, alg.mono_path(x)}, G));
    // index absent
    CHECK(!f5_reducer_exists(F1, Signature{1, alg.mono_path(x)}, G));
    // sig = sigma(g) itself with trivial cofactor
    CHECK(f5_reducer_exists(F1, Signature{0, alg.quiver().trivial_path(0)}, G));
    // sig e1*x^2: complement x^2 is not a small cofactor of x
    CHECK(!f5_reducer_exists(F1, Signature{0, alg.mono_path(xx)}, G));
}

TEST_CASE_FIXTURE(Fx, "signed_interreduce removes signature-compatible multiples") {
    Signature s0{0, alg.quiver().trivial_path(0)};
    Signature sx{0, alg.mono_path(x)};
    SyzygyLMSet L;
    auto r = signed_interreduce(
        F1, {{F1.monomial(0, x), s0}, {F1.monomial(0, xx), sx}}, L);
    REQUIRE(r.size() == 1);
    CHECK(r[0].poly == F1.monomial(0, x));
    CHECK(L.entries().empty());

    SyzygyLMSet L2;
    auto single = signed_interreduce(F1, {{F1.monomial(0, x), s0}}, L2);
    CHECK(single.size() == 1);
}

TEST_CASE_FIXTURE(Fx, "f5 on A1 running example") {
    F5Result r = f5_stdbasis(F1, {F1.monomial(0, x)});
    REQUIRE(r.basis.size() == 1);
    CHECK(r.basis[0].poly == F1.monomial(0, x));
    CHECK(r.basis[0].sig == Signature{0, alg.quiver().trivial_path(0)});
    REQUIRE(r.syzygies.entries().size() == 1);
    CHECK(r.syzygies.entries()[0] == Signature{0, alg.mono_path(xx)});
    CHECK(r.stats.zero_reductions == 1);
    CHECK(f5_certificate(F1, r));
}

TEST_CASE_FIXTURE(Fx, "f5 with a unit generator returns immediately") {
    F5Result r = f5_stdbasis(F1, {F1.monomial(0, one)});
    REQUIRE(r.basis.size() == 1);
    CHECK(r.basis[0].poly == F1.monomial(0, one));
    CHECK(r.stats.pairs_considered == 0);  // minimal_topplings(1_v) is empty
}

TEST_CASE_FIXTURE(Fx, "f5 rank-2 LM set matches oracle") {
    FreeModule F2(alg, {{"m1", 0}, {"m2", 0}});
    ModuleElement g1 = F2.add(F2.monomial(0, x), F2.monomial(1, x));
    ModuleElement g2 = F2.monomial(1, x);
    F5Result r = f5_stdbasis(F2, {g1, g2});
    std::set<std::pair<int, int>> lms;
    for (const SignedElement& g : r.basis) lms.insert({g.poly.lm().gen, g.poly.lm().mono});
    CHECK(lms == std::set<std::pair<int, int>>{{0, x}, {1, x}});
    std::vector<ModuleElement> polys;
    for (const SignedElement& g : r.basis) polys.push_back(g.poly);
    CHECK(Oracle(F2).verify_standard_basis({g1, g2}, polys));
}

TEST_CASE("f5 random instances: certificate, distinct signatures, oracle") {
    for (int seed = 0; seed < 20; ++seed) {
        RandomInstance inst = random_instance(9000 + seed);
        const FreeModule& F = *inst.built.module;
        F5Result r = f5_stdbasis(F, inst.built.generators);

        // rewritten criterion: processed signature log has no duplicates
        std::set<std::pair<int, Path>> seen;
        for (const Signature& s : r.processed_log)
            CHECK(seen.insert({s.gen, s.path}).second);

        // sigma(g) pairwise distinct in G
        std::set<std::pair<int, Path>> sigs;
        for (const SignedElement& g : r.basis)
            CHECK(sigs.insert({g.sig.gen, g.sig.path}).second);

        CHECK(f5_certificate(F, r));

        std::vector<ModuleElement> polys;
        for (const SignedElement& g : r.basis) polys.push_back(g.poly);
        CHECK(Oracle(F).verify_standard_basis(inst.built.generators, polys));
    }
}

TEST_CASE("LMdistinct: irreducible products have pairwise distinct LMs") {
    for (int seed = 0; seed < 10; ++seed) {
        RandomInstance inst = random_instance(1200 + seed);
        const FreeModule& F = *inst.built.module;
        const BasicAlgebra& alg = F.algebra();
        F5Result r = f5_stdbasis(F, inst.built.generators);
        std::set<std::pair<int, int>> lms;
        for (const SignedElement& g : r.basis) {
            const ModMono& lm = g.poly.lm();
            for (int c : alg.small_cofactors(lm.mono)) {
                Signature sc = sig_times_path(g.sig, alg.mono_path(c));
                Path prod = *alg.quiver().compose(alg.mono_path(lm.mono), alg.mono_path(c));
                ModMono plm{lm.gen, alg.mono_index(prod)};
                if (is_sig_reducible(F, plm, sc, r.basis)) continue;
                CHECK(lms.insert({plm.gen, plm.mono}).second);
            }
        }
    }
}

TEST_CASE("every syzygy signature is standard and genuinely unreachable") {
    for (int seed = 0; seed < 10; ++seed) {
        RandomInstance inst = random_instance(4200 + seed);
        const FreeModule& F = *inst.built.module;
        F5Result r = f5_stdbasis(F, inst.built.generators);
        for (const Signature& s : r.syzygies.entries())
            CHECK(F.algebra().is_standard(s.path));
    }
}
