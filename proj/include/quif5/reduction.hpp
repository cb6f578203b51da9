#pragma once

#include <vector>

#include "quif5/module.hpp"

namespace quif5 {

/// Leading monomial in E = P^m of a preimage under ev. The path lives in P
/// and starts at the vertex of the corresponding signature slot.
struct Signature {
    int gen = -1;
    Path path;
    bool operator==(const Signature&) const = default;
};

struct SignedElement {
    ModuleElement poly;
    Signature sig;
};

inline int compare_signatures(const Order& o, const Signature& a, const Signature& b) {
    return o.compare_indexed(a.gen, a.path, b.gen, b.path);
}

/// sigma(g) * lambda(c); endpoints must compose.
inline Signature sig_times_path(const Signature& s, const Path& c) {
    if (s.path.end != c.start)
        throw InternalError("signature path does not compose with the cofactor");
    Signature r{s.gen, s.path};
    r.path.arrows.insert(r.path.arrows.end(), c.arrows.begin(), c.arrows.end());
    r.path.end = c.end;
    return r;
}

/// One recorded reduction step: f_r -= coeff * g * cofactor.
struct RepStep {
    std::int64_t coeff;
    int g_index;   // position in the basis list passed to the normal form
    int cofactor;  // standard index; always a small cofactor of LM(g)
};

struct StandardRepresentation {
    std::vector<RepStep> steps;
};

struct NormalFormResult {
    ModuleElement nf;
    StandardRepresentation rep;
};

/// Head reduction until no LM(g) strictly divides LM(nf). Reducer tie-break:
/// greatest LM(g), then list position.
NormalFormResult normal_form(const FreeModule& F, const ModuleElement& f,
                             const std::vector<ModuleElement>& G);

/// Head reduction admitting g only when sigma(g)*lambda(c) < s.
NormalFormResult signed_normal_form(const FreeModule& F, const ModuleElement& f,
                                    const std::vector<SignedElement>& G, const Signature& s);

}  // namespace quif5
