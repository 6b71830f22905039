#pragma once

#include "tabinv/filling.hpp"

// Worked examples used as test fixtures throughout the suites.

namespace fixtures {

using tabinv::Filling;

// row-standard, inversion pairs (1,2), (5,7), (6,8)
inline Filling inverted_example_a() {
    return Filling({{4, 7, 8, 9}, {2, 3, 6}, {1, 5}});
}

// row-standard, inversion pairs (1,2), (1,3), (4,5), (4,5)
inline Filling inverted_example_b() {
    return Filling({{3, 5, 6, 7}, {1, 5, 8, 9}, {2, 4, 8}});
}

// the pair of one-column fillings with identical value-level inversion sets
inline Filling column_pair_a() { return Filling({{2}, {1}, {1}, {2}}); }
inline Filling column_pair_b() { return Filling({{1}, {2}, {2}, {1}}); }

// semistandard tableau whose chi is 1 + 6q + 19q^2 + ... + q^10
inline Filling semistandard_example() {
    return Filling({{1, 2, 6, 10}, {2, 5, 8, 10}, {3, 5, 9}, {4, 7}});
}

// transposition-chain example: T, the three intermediates, and the target
inline Filling chain_start() { return Filling({{1, 4, 6}, {2, 5, 7}, {3, 5}}); }
inline Filling chain_step1() { return Filling({{2, 5, 6}, {1, 4, 7}, {3, 5}}); }
inline Filling chain_step2() { return Filling({{2, 5, 6}, {3, 5, 7}, {1, 4}}); }
inline Filling chain_step3() { return Filling({{1, 5, 6}, {3, 5, 7}, {2, 4}}); }
inline Filling chain_final() { return Filling({{3, 5, 6}, {1, 5, 7}, {2, 4}}); }

// two-row standard tableau whose Dyck path is 1,1,2,2,1,2,1
inline Filling two_row_example() { return Filling({{1, 2, 5, 7}, {3, 4, 6}}); }

}  // namespace fixtures
