#pragma once

#include <cstdint>

#include "quif5/parser.hpp"

namespace quif5 {

/// A randomly generated desk-size problem, both as text-form AST and fully
/// built. Deterministic per seed.
struct RandomInstance {
    ProblemFile file;
    BuiltProblem built;
};

/// p in {2,3,5}; at most 3 vertices, 4 arrows, dim A <= 16, rank <= 3,
/// at most 4 submodule generators.
RandomInstance random_instance(std::uint64_t seed);

}  // namespace quif5
