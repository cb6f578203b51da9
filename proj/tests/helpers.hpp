#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quif5/buchberger.hpp"
#include "quif5/f5.hpp"
#include "quif5/loewy.hpp"
#include "quif5/oracle.hpp"
#include "quif5/parser.hpp"
#include "quif5/random_instance.hpp"

namespace quif5::testing {

// A1 = F_2[x]/(x^3) as a one-vertex quiver algebra.
inline AlgebraSpec a1_spec() {
    AlgebraSpec s;
    int v = s.quiver.add_vertex("v");
    int x = s.quiver.add_arrow("x", v, v);
    Path x3 = s.quiver.arrow_path(x);
    x3 = s.quiver.extend(s.quiver.extend(x3, x), x);
    s.relations.push_back({{1, x3}});
    return s;
}

// A2: vertices u, w; a: u -> w, b: w -> u; relations ab, ba.
inline AlgebraSpec a2_spec() {
    AlgebraSpec s;
    int u = s.quiver.add_vertex("u");
    int w = s.quiver.add_vertex("w");
    int a = s.quiver.add_arrow("a", u, w);
    int b = s.quiver.add_arrow("b", w, u);
    s.relations.push_back({{1, *s.quiver.compose(s.quiver.arrow_path(a), s.quiver.arrow_path(b))}});
    s.relations.push_back({{1, *s.quiver.compose(s.quiver.arrow_path(b), s.quiver.arrow_path(a))}});
    return s;
}

// Parse a path like "x*x" or "id(v)" over a quiver.
inline Path path_of(const Quiver& q, const std::string& text) {
    if (text.rfind("id(", 0) == 0) {
        int v = q.find_vertex(text.substr(3, text.size() - 4));
        return q.trivial_path(v);
    }
    Path p;
    bool first = true;
    std::istringstream in(text);
    std::string name;
    while (std::getline(in, name, '*')) {
        int a = q.find_arrow(name);
        Path ap = q.arrow_path(a);
        p = first ? ap : *q.compose(p, ap);
        first = false;
    }
    return p;
}

inline int mono(const BasicAlgebra& alg, const std::string& text) {
    return alg.mono_index(path_of(alg.quiver(), text));
}

// All paths over q of degree <= max_degree (for property sampling).
inline std::vector<Path> all_paths(const Quiver& q, int max_degree) {
    std::vector<Path> out, cur;
    for (int v = 0; v < q.num_vertices(); ++v) cur.push_back(q.trivial_path(v));
    out = cur;
    for (int d = 0; d < max_degree; ++d) {
        std::vector<Path> next;
        for (const Path& p : cur)
            for (int a : q.arrows_from(p.end)) next.push_back(q.extend(p, a));
        out.insert(out.end(), next.begin(), next.end());
        cur = std::move(next);
    }
    return out;
}

// Random nonzero-ish module element supported on valid monomials.
inline ModuleElement random_element(const FreeModule& F, std::mt19937_64& rng) {
    const BasicAlgebra& alg = F.algebra();
    std::vector<std::pair<ModMono, std::int64_t>> terms;
    std::uniform_int_distribution<int> nt(1, 4);
    int n = nt(rng);
    for (int t = 0; t < n; ++t) {
        int g = std::uniform_int_distribution<int>(0, F.rank() - 1)(rng);
        std::vector<int> monos;
        for (int m = 0; m < alg.dim(); ++m)
            if (alg.mono_start(m) == F.gen(g).vertex) monos.push_back(m);
        if (monos.empty()) continue;
        int m = monos[std::uniform_int_distribution<std::size_t>(0, monos.size() - 1)(rng)];
        std::int64_t c =
            std::uniform_int_distribution<std::int64_t>(1, alg.field().p() - 1)(rng);
        terms.push_back({ModMono{g, m}, c});
    }
    return F.make(std::move(terms));
}

// Random element of the submodule spanned by gens (for membership-true cases).
inline ModuleElement random_member(const FreeModule& F, const std::vector<ModuleElement>& gens,
                                   std::mt19937_64& rng) {
    const BasicAlgebra& alg = F.algebra();
    ModuleElement f;
    for (const ModuleElement& g : gens) {
        int m = std::uniform_int_distribution<int>(0, alg.dim() - 1)(rng);
        std::int64_t c = std::uniform_int_distribution<std::int64_t>(0, alg.field().p() - 1)(rng);
        f = F.add(f, F.act_mono(g, m), c);
    }
    return f;
}

}  // namespace quif5::testing
