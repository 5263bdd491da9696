#pragma once

#include <vector>

#include "qschub/perms.hpp"
#include "qschub/shapes.hpp"

namespace qschub {

/// All partitions inside (cols^rows), in increasing lex order of parts.
std::vector<Partition> partitions_in_box(int rows, int cols);
/// Those of a fixed size.
std::vector<Partition> partitions_in_box(int rows, int cols, int size);

/// S_n in lex order of windows.
std::vector<Permutation> all_permutations(int n);

/// Grassmann permutations with descent set contained in {j}.
std::vector<Permutation> grassmann_permutations(int j, int n);

}  // namespace qschub
