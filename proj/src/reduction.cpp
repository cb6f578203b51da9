#include "quif5/reduction.hpp"

namespace quif5 {

namespace {

// Shared reduction loop; `admit` filters candidate reducers by index and
// cofactor. Candidates are compared by LM(g); the strict-divisor cofactor is
// automatically small because the concatenated path is standard.
template <typename LmOf, typename Admit>
NormalFormResult reduce_loop(const FreeModule& F, const ModuleElement& f, std::size_t n,
                             LmOf lm_of, Admit admit) {
    const BasicAlgebra& alg = F.algebra();
    NormalFormResult res;
    res.nf = f;
    while (!res.nf.is_zero()) {
        const ModMono& lm = res.nf.lm();
        int best = -1, best_cof = -1;
        for (std::size_t i = 0; i < n; ++i) {
            const ModuleElement* g = lm_of(i);
            if (!g || g->is_zero()) continue;
            int cof = F.strict_divides(g->lm(), lm);
            if (cof < 0) continue;
            if (!admit(i, cof)) continue;
            if (best < 0 || mod_mono_greater(g->lm(), lm_of(best)->lm())) {
                best = static_cast<int>(i);
                best_cof = cof;
            }
        }
        if (best < 0) break;
        const ModuleElement& g = *lm_of(best);
        std::int64_t coeff = alg.field().div(res.nf.lc(), g.lc());
        ModuleElement sub = F.act_mono(g, best_cof);
        ModuleElement next = F.add(res.nf, sub, alg.field().neg(coeff));
        if (!next.is_zero() && !mod_mono_greater(lm, next.lm()))
            throw InternalError("reduction step did not decrease the leading monomial");
        res.nf = std::move(next);
        res.rep.steps.push_back(RepStep{coeff, best, best_cof});
    }
    return res;
}

}  // namespace

NormalFormResult normal_form(const FreeModule& F, const ModuleElement& f,
                             const std::vector<ModuleElement>& G) {
    return reduce_loop(
        F, f, G.size(), [&](std::size_t i) { return &G[i]; },
        [](std::size_t, int) { return true; });
}

NormalFormResult signed_normal_form(const FreeModule& F, const ModuleElement& f,
                                    const std::vector<SignedElement>& G, const Signature& s) {
    const Order& ord = F.algebra().order();
    return reduce_loop(
        F, f, G.size(), [&](std::size_t i) { return &G[i].poly; },
        [&](std::size_t i, int cof) {
            Signature sc = sig_times_path(G[i].sig, F.algebra().mono_path(cof));
            return compare_signatures(ord, sc, s) < 0;
        });
}

}  // namespace quif5
