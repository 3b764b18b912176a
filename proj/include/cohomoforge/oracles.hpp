#pragma once

#include "cohomoforge/gmodule.hpp"

// Brute-force reference computations for the acceptance suite. Nothing here
// touches the Smith-normal-form path: groups are handled as raw value tables,
// cocycles by enumeration, and invariant factors by peeling maximal-order
// cyclic summands. The engine never calls into this module.

namespace cf::oracle {

// invariant factors of an abelian group given by an addition table
std::vector<Int> raw_invariant_factors(int n, const std::vector<int>& add);

// H^1 by enumerating every map G -> A against the derivation identity
std::vector<Int> brute_h1(const GModule& m, long long enumeration_cap = 1 << 22);

// H^2 by enumerating 2-cochains against the cocycle identity, with forced
// values propagated through triples whose other slots are already assigned
std::vector<Int> brute_h2(const GModule& m, long long leaf_cap = 1 << 22);

}  // namespace cf::oracle
