#ifndef UMBRA_LINALG_HPP
#define UMBRA_LINALG_HPP

#include <optional>
#include <vector>

#include "umbra/rational.hpp"

namespace umbra::detail {

/// Solves A·x = b exactly by Gaussian elimination. A may be rectangular
/// (rows × cols with rows ≥ cols). Returns the unique solution, or nullopt
/// when the system is inconsistent or underdetermined.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b);

}  // namespace umbra::detail

#endif
