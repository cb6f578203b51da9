#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace quif5;
using namespace quif5::testing;

namespace {

struct Fx {
    BasicAlgebra alg;
    FreeModule F;
    int one, x, xx;
    Fx()
        : alg(BasicAlgebra::build(a1_spec())),
          F(alg, {{"m1", 0}}),
          one(mono(alg, "id(v)")),
          x(mono(alg, "x")),
          xx(mono(alg, "x*x")) {}
};

ModuleElement replay(const FreeModule& F, const std::vector<ModuleElement>& G,
                     const StandardRepresentation& rep) {
    ModuleElement sum;
    for (const RepStep& s : rep.steps)
        sum = F.add(sum, F.act_mono(G[s.g_index], s.cofactor), s.coeff);
    return sum;
}

}  // namespace

TEST_CASE_FIXTURE(Fx, "normal form examples") {
    std::vector<ModuleElement> G{F.monomial(0, x)};
    auto r = normal_form(F, F.monomial(0, xx), G);
    CHECK(r.nf.is_zero());
    REQUIRE(r.rep.steps.size() == 1);
    CHECK(r.rep.steps[0].coeff == 1);
    CHECK(r.rep.steps[0].g_index == 0);
    CHECK(r.rep.steps[0].cofactor == x);

    CHECK(normal_form(F, ModuleElement{}, G).nf.is_zero());

    auto r2 = normal_form(F, F.monomial(0, one), G);
    CHECK(r2.nf == F.monomial(0, one));  // x does not strictly divide 1_v
    CHECK(r2.rep.steps.empty());
}

TEST_CASE_FIXTURE(Fx, "signed normal form respects the signature bound") {
    std::vector<SignedElement> G{{F.monomial(0, x), Signature{0, alg.quiver().trivial_path(0)}}};
    Signature s_x2{0, alg.mono_path(xx)};
    // reducing v1*x^2 needs sigma(g)*x = e1*x, which is NOT < e1*x^2 under
    // negative degree: irreducible
    auto r = signed_normal_form(F, F.monomial(0, xx), G, s_x2);
    CHECK(r.nf == F.monomial(0, xx));
    CHECK(r.rep.steps.empty());

    Signature s_one{0, alg.quiver().trivial_path(0)};
    auto r2 = signed_normal_form(F, F.monomial(0, xx), G, s_one);
    CHECK(r2.nf.is_zero());
    REQUIRE(r2.rep.steps.size() == 1);
    CHECK(r2.rep.steps[0].cofactor == x);

    CHECK(signed_normal_form(F, ModuleElement{}, G, s_one).nf.is_zero());
}

TEST_CASE("replay identity and irreducibility on random instances") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 25; ++i) {
        RandomInstance inst = random_instance(1000 + i);
        const FreeModule& F = *inst.built.module;
        std::vector<ModuleElement> G = interreduce(F, inst.built.generators);
        if (G.empty()) continue;
        for (int t = 0; t < 20; ++t) {
            ModuleElement f = random_element(F, rng);
            auto r = normal_form(F, f, G);
            // replay: f = nf + sum alpha_i * g_i * c_i
            CHECK(F.add(r.nf, replay(F, G, r.rep)) == f);
            // nf irreducible by exhaustive scan
            if (!r.nf.is_zero())
                for (const ModuleElement& g : G)
                    CHECK(F.strict_divides(g.lm(), r.nf.lm()) == -1);
            // every recorded cofactor is small and ordering-bounded
            const Order& ord = F.algebra().order();
            for (const RepStep& s : r.rep.steps) {
                const ModMono& glm = G[s.g_index].lm();
                CHECK(F.algebra().classify_cofactor(glm.mono, s.cofactor).kind ==
                      CofactorClass::Small);
                Path prod = *F.algebra().quiver().compose(
                    F.algebra().mono_path(glm.mono), F.algebra().mono_path(s.cofactor));
                if (!f.is_zero())
                    CHECK(ord.compare_indexed(glm.gen, prod, f.lm().gen,
                                              F.algebra().mono_path(f.lm().mono)) <= 0);
            }
        }
    }
}

TEST_CASE("signed replay identity on random instances") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 15; ++i) {
        RandomInstance inst = random_instance(3000 + i);
        const FreeModule& F = *inst.built.module;
        F5Result fr = f5_stdbasis(F, inst.built.generators);
        if (fr.basis.empty()) continue;
        const Order& ord = F.algebra().order();
        std::vector<ModuleElement> polys;
        for (const SignedElement& g : fr.basis) polys.push_back(g.poly);
        for (int t = 0; t < 20; ++t) {
            ModuleElement f = random_element(F, rng);
            // bound by a mid-degree signature of slot 0
            Signature s = fr.basis[t % fr.basis.size()].sig;
            auto r = signed_normal_form(F, f, fr.basis, s);
            CHECK(F.add(r.nf, replay(F, polys, r.rep)) == f);
            // s-irreducibility: no admissible reducer remains
            if (!r.nf.is_zero())
                for (const SignedElement& g : fr.basis) {
                    int cof = F.strict_divides(g.poly.lm(), r.nf.lm());
                    if (cof < 0) continue;
                    Signature sc = sig_times_path(g.sig, F.algebra().mono_path(cof));
                    CHECK(compare_signatures(ord, sc, s) >= 0);
                }
            for (const RepStep& st : r.rep.steps) {
                Signature sc = sig_times_path(fr.basis[st.g_index].sig,
                                              F.algebra().mono_path(st.cofactor));
                CHECK(compare_signatures(ord, sc, s) < 0);
            }
        }
    }
}
