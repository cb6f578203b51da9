#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quif5/module.hpp"

namespace quif5 {

// Raw problem-file AST. Purely textual; ids are resolved by build_problem.

struct PathFactor {
    bool is_vertex = false;  // true: "id(name)", false: arrow name
    std::string name;
    bool operator==(const PathFactor&) const = default;
};

struct RelTerm {
    std::int64_t coeff = 1;  // sign folded in; 1 when the coefficient is omitted
    std::vector<PathFactor> factors;
    bool operator==(const RelTerm&) const = default;
};

struct RelPoly {
    std::vector<RelTerm> terms;
    bool operator==(const RelPoly&) const = default;
};

struct ArrowDecl {
    std::string name, src, tgt;
    bool operator==(const ArrowDecl&) const = default;
};

struct ModGenDecl {
    std::string name, vertex;
    bool operator==(const ModGenDecl&) const = default;
};

struct ModTerm {
    std::int64_t coeff = 1;
    std::string gen;
    std::vector<PathFactor> factors;  // empty: the generator itself
    bool operator==(const ModTerm&) const = default;
};

struct ModPoly {
    std::vector<ModTerm> terms;
    bool operator==(const ModPoly&) const = default;
};

struct GenDecl {
    std::string name;
    ModPoly value;
    bool operator==(const GenDecl&) const = default;
};

struct ProblemFile {
    std::int64_t p = 0;
    std::vector<std::string> vertices;
    std::vector<ArrowDecl> arrows;
    std::vector<RelPoly> relations;
    std::optional<int> nilpotency;  // nullopt = auto
    std::string order_mode = "negdeglex";
    std::vector<std::string> precedence;
    std::vector<ModGenDecl> module_gens;
    std::vector<GenDecl> generators;
    bool operator==(const ProblemFile&) const = default;
};

/// Recursive-descent parse; throws ParseError with line:column.
ProblemFile parse_problem(const std::string& text);

/// Canonical text form; parse_problem(print_problem(pf)) == pf.
std::string print_problem(const ProblemFile& pf);

/// Fully resolved problem: the algebra, the free module, and the submodule
/// generators in file order. Heap-held so the module's back-pointer into the
/// algebra survives moves.
struct BuiltProblem {
    std::unique_ptr<BasicAlgebra> algebra;
    std::unique_ptr<FreeModule> module;
    std::vector<std::string> gen_names;
    std::vector<ModuleElement> generators;
    std::vector<std::string> warnings;
};

BuiltProblem build_problem(const ProblemFile& pf, int degree_cap = 64);

}  // namespace quif5
