#pragma once

#include <vector>

#include "mixbraid/braid_word.hpp"
#include "mixbraid/manifold.hpp"
#include "mixbraid/mixed_word.hpp"

namespace mixbraid {

/// The fixed braid with a parallel copy attached to the right of each
/// fixed strand in `followed` (1-based top positions), on m + n + c strands.
/// At top and bottom the strands are parked as: fixed strands, the n
/// original moving strands, then the c parallels. The parallels are pulled
/// into place over everything in between and pushed back the same way, so
/// the result is a parted braid ready for part_braid.
BraidWord cable_parallel(const ManifoldSpec& spec,
                         const std::vector<int>& followed, int n);

/// Substitute for a_i^sign when a band runs parallel to the strands in
/// `followed`: the first moving strand loops around fixed strand i together
/// with its parallel (if any), read in B_{m, n + c}.
MixedBraidWord cabled_loop_substitute(int m, int n,
                                      const std::vector<int>& followed, int i,
                                      int sign);

}  // namespace mixbraid
