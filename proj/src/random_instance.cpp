#include "quif5/random_instance.hpp"

#include <random>
#include <string>
#include <vector>

namespace quif5 {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// All paths of degree exactly d, as arrow-name factor lists.
void paths_of_degree(const Quiver& q, int d, std::vector<Path>& out) {
    std::vector<Path> cur;
    for (int v = 0; v < q.num_vertices(); ++v) cur.push_back(q.trivial_path(v));
    for (int k = 0; k < d; ++k) {
        std::vector<Path> next;
        for (const Path& p : cur)
            for (int a : q.arrows_from(p.end)) next.push_back(q.extend(p, a));
        cur = std::move(next);
    }
    out = std::move(cur);
}

std::vector<PathFactor> to_factors(const Quiver& q, const Path& p) {
    std::vector<PathFactor> f;
    if (p.trivial()) {
        f.push_back(PathFactor{true, q.vertex_name(p.start)});
        return f;
    }
    for (int a : p.arrows) f.push_back(PathFactor{false, q.arrow(a).name});
    return f;
}

bool try_instance(std::mt19937_64& rng, RandomInstance& out) {
    static const std::int64_t kPrimes[] = {2, 3, 5};
    ProblemFile pf;
    pf.p = kPrimes[pick(rng, 0, 2)];

    int nv = pick(rng, 1, 3);
    for (int v = 0; v < nv; ++v) pf.vertices.push_back("v" + std::to_string(v + 1));
    int na = pick(rng, 1, 4);
    static const char* kArrowNames[] = {"a", "b", "c", "d"};
    Quiver q;
    for (const std::string& v : pf.vertices) q.add_vertex(v);
    for (int a = 0; a < na; ++a) {
        ArrowDecl d{kArrowNames[a], pf.vertices[static_cast<std::size_t>(pick(rng, 0, nv - 1))],
                    pf.vertices[static_cast<std::size_t>(pick(rng, 0, nv - 1))]};
        q.add_arrow(d.name, q.find_vertex(d.src), q.find_vertex(d.tgt));
        pf.arrows.push_back(std::move(d));
    }

    int N = pick(rng, 2, 4);
    std::vector<Path> top;
    paths_of_degree(q, N, top);
    for (const Path& p : top)
        pf.relations.push_back(RelPoly{{RelTerm{1, to_factors(q, p)}}});

    // extra non-monomial relations of lower degree, vertex-homogeneous
    int extra = pick(rng, 0, 2);
    for (int e = 0; e < extra && N > 2; ++e) {
        int d = pick(rng, 2, N - 1);
        std::vector<Path> cand;
        paths_of_degree(q, d, cand);
        if (cand.empty()) break;
        const Path& p1 = cand[static_cast<std::size_t>(pick(rng, 0, (int)cand.size() - 1))];
        RelPoly rel{{RelTerm{1, to_factors(q, p1)}}};
        std::vector<const Path*> mates;
        for (const Path& p2 : cand)
            if (p2.start == p1.start && p2.end == p1.end && !(p2 == p1)) mates.push_back(&p2);
        if (!mates.empty() && pick(rng, 0, 1)) {
            const Path& p2 = *mates[static_cast<std::size_t>(pick(rng, 0, (int)mates.size() - 1))];
            rel.terms.push_back(
                RelTerm{pick(rng, 1, static_cast<int>(pf.p) - 1), to_factors(q, p2)});
        }
        pf.relations.push_back(std::move(rel));
    }

    pf.nilpotency = extra == 0 && pick(rng, 0, 1) ? std::optional<int>() : std::optional<int>(N);
    pf.order_mode = "negdeglex";

    BuiltProblem alg_only;
    try {
        alg_only = build_problem(pf);
    } catch (const Error&) {
        return false;
    }
    if (alg_only.algebra->dim() > 16) return false;
    const BasicAlgebra& alg = *alg_only.algebra;

    int rank = pick(rng, 1, 3);
    for (int g = 0; g < rank; ++g)
        pf.module_gens.push_back(ModGenDecl{
            "m" + std::to_string(g + 1),
            pf.vertices[static_cast<std::size_t>(pick(rng, 0, nv - 1))]});

    int ngens = pick(rng, 1, 4);
    for (int g = 0; g < ngens; ++g) {
        ModPoly poly;
        int nterms = pick(rng, 1, 3);
        for (int t = 0; t < nterms; ++t) {
            int gi = pick(rng, 0, rank - 1);
            int v = q.find_vertex(pf.module_gens[static_cast<std::size_t>(gi)].vertex);
            std::vector<int> monos;
            for (int m = 0; m < alg.dim(); ++m)
                if (alg.mono_start(m) == v) monos.push_back(m);
            const Path& p =
                alg.mono_path(monos[static_cast<std::size_t>(pick(rng, 0, (int)monos.size() - 1))]);
            ModTerm term;
            term.coeff = pick(rng, 1, static_cast<int>(pf.p) - 1);
            term.gen = pf.module_gens[static_cast<std::size_t>(gi)].name;
            if (!p.trivial()) term.factors = to_factors(q, p);
            poly.terms.push_back(std::move(term));
        }
        pf.generators.push_back(GenDecl{"g" + std::to_string(g + 1), std::move(poly)});
    }

    try {
        out.built = build_problem(pf);
    } catch (const Error&) {
        return false;
    }
    bool any = false;
    for (const ModuleElement& g : out.built.generators) any = any || !g.is_zero();
    if (!any) return false;
    out.file = std::move(pf);
    return true;
}

}  // namespace

RandomInstance random_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RandomInstance inst;
    while (!try_instance(rng, inst)) {
    }
    return inst;
}

}  // namespace quif5
