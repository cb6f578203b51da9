#include "quif5/buchberger.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>
#include <utility>

namespace quif5 {

std::vector<ModuleElement> interreduce(const FreeModule& F, std::vector<ModuleElement> G) {
    G.erase(std::remove_if(G.begin(), G.end(),
                           [](const ModuleElement& g) { return g.is_zero(); }),
            G.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            std::vector<ModuleElement> rest;
            for (std::size_t j = 0; j < G.size(); ++j)
                if (j != i) rest.push_back(G[j]);
            ModuleElement nf = normal_form(F, G[i], rest).nf;
            if (nf == G[i]) continue;
            changed = true;
            if (nf.is_zero()) {
                G.erase(G.begin() + static_cast<long>(i));
                --i;
            } else {
                G[i] = std::move(nf);
            }
        }
    }
    return G;
}

BuchbergerResult buchberger_stdbasis(const FreeModule& F,
                                     const std::vector<ModuleElement>& gens) {
    const BasicAlgebra& alg = F.algebra();
    BuchbergerResult res;
    res.basis = interreduce(F, gens);

    // done-keys: (LM monomial, toppling cofactor) pairs already processed
    std::set<std::tuple<int, int, int>> done;
    auto seed_queue = [&]() {
        std::deque<std::pair<int, int>> queue;  // (basis index, cofactor)
        for (std::size_t i = 0; i < res.basis.size(); ++i) {
            const ModMono& lm = res.basis[i].lm();
            for (const MinimalToppling& t : alg.minimal_topplings(lm.mono)) {
                if (done.count({lm.gen, lm.mono, t.cofactor})) continue;
                queue.emplace_back(static_cast<int>(i), t.cofactor);
            }
        }
        return queue;
    };

    std::deque<std::pair<int, int>> queue = seed_queue();
    while (!queue.empty()) {
        auto [gi, cof] = queue.front();
        queue.pop_front();
        const ModMono& lm = res.basis[gi].lm();
        done.insert({lm.gen, lm.mono, cof});
        ++res.stats.topplings_processed;
        ModuleElement prod = F.act_mono(res.basis[gi], cof);
        ModuleElement nf = normal_form(F, prod, res.basis).nf;
        if (nf.is_zero()) {
            ++res.stats.zero_reductions;
        } else {
            res.basis.push_back(std::move(nf));
            res.basis = interreduce(F, res.basis);
            queue = seed_queue();
        }
    }
    return res;
}

}  // namespace quif5
