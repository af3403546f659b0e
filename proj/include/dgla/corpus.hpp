#ifndef DGLA_CORPUS_HPP
#define DGLA_CORPUS_HPP

#include <string>
#include <vector>

#include "dgla/dgla.hpp"

namespace dgla {

/// Names of the built-in DGLAs, "E0" .. "E4".
const std::vector<std::string>& builtin_names();

/// E0 abelian2, E1 curl, E2 ce3, E3 obst, E4 gauge2. Throws
/// std::invalid_argument for any other name.
///
/// E2 is the Nijenhuis-Richardson algebra of alternating multilinear maps
/// on k^3: degree n-1 holds Hom(Lambda^n k^3, k^3), n = 0..3, with zero
/// differential. Generator "phi[ij>k]" sends e_i ^ e_j to e_k.
Dgla builtin_example(const std::string& name);

/// Name of the E2 generator sending e_{inputs} (1-based, increasing) to e_output.
std::string ce3_generator(const std::vector<int>& inputs, int output);

}  // namespace dgla

#endif  // DGLA_CORPUS_HPP
