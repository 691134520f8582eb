#pragma once

#include "pavsec/dyck.hpp"
#include "pavsec/pattern.hpp"
#include "pavsec/rng.hpp"

namespace pavsec {

// Order of the suffix values in a low permutation; the position of the best
// item is unaffected.
enum class LowCompletion { increasing, decreasing };

Permutation sample_uniform(int n, RandomSource& rng);

// Exactly uniform over the C_n Dyck paths via the cycle lemma: shuffle n ups
// and n+1 downs, rotate to the unique cyclic shift whose proper prefixes stay
// nonnegative, drop the final down.
DyckPath sample_dyck(int n, RandomSource& rng);

// Stack decode of a Dyck path into a 231-avoider: an up pushes the next
// position, the k-th down pops a position and writes value k there.
Permutation dyck_to_231(const DyckPath& path);

// Exactly uniform over the eta-avoiding class. One uniform Dyck path is
// decoded through dyck_to_231 or dyck_to_321 and carried to the requested
// class by reverse/complement, which are bijections between the classes.
Permutation sample_avoiding(int n, Pattern eta, RandomSource& rng);

// sigma^{n;j}: identity prefix 1..j-1, the best item at position j, leftover
// values complete the suffix.
Permutation low_permutation(int n, int j,
                            LowCompletion completion = LowCompletion::increasing);

// Uniform position j in 1..n, then low_permutation(n, j, completion).
Permutation sample_low(int n, RandomSource& rng,
                       LowCompletion completion = LowCompletion::increasing);

}  // namespace pavsec
