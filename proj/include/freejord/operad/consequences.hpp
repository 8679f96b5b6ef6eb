#pragma once

#include <vector>

#include "freejord/operad/normal.hpp"
#include "freejord/operad/straighten.hpp"
#include "freejord/operad/tree.hpp"

namespace freejord::operad {

/// The multilinear Jordan identity on x_1..x_4.
inline TreeCombination base_identity() { return jordan_identity(leaf(0), leaf(1), leaf(2), leaf(3)); }

/// Degree raising moves applied to identities of degree n - 1: every argument x_i
/// replaced by x_i x_n, and the external product with x_n. Yields n identities per input.
inline std::vector<TreeCombination> raise(const std::vector<TreeCombination>& identities, int n) {
    std::vector<TreeCombination> out;
    out.reserve(identities.size() * static_cast<std::size_t>(n));
    const Tree fresh = leaf(n - 1);
    for (const auto& f : identities) {
        for (int i = 0; i + 1 < n; ++i) out.push_back(substitute(f, i, product(leaf(i), fresh)));
        out.push_back(multiply(f, fresh));
    }
    return out;
}

/// j_n = n!/24 identities generating the degree-n multilinear part of the T-ideal; empty below 4.
inline std::vector<TreeCombination> consequence_trees(int n) {
    if (n < 4) return {};
    std::vector<TreeCombination> cur{base_identity()};
    for (int k = 5; k <= n; ++k) cur = raise(cur, k);
    return cur;
}

/// consequence_trees(n) written in normal monomials.
inline std::vector<MultilinearElement> consequences(int n) {
    std::vector<MultilinearElement> out;
    for (const auto& c : consequence_trees(n)) out.push_back(straighten(c));
    return out;
}

}  // namespace freejord::operad
