#pragma once

#include "torelli/braid.hpp"
#include "torelli/laurent.hpp"

namespace torelli {

// The reduced Burau representation of B_n in dimension n-1, under the
// convention: s_i maps to the identity except for row i, where
//   (i,i) = -t,   (i,i-1) = t  (when i > 1),   (i,i+1) = 1  (when i < n-1).
// The inverse generator maps to the exact matrix inverse, which again
// differs from the identity only in row i:
//   (i,i) = -t^-1, (i,i-1) = 1 (when i > 1), (i,i+1) = t^-1 (when i < n-1).
LaurentMatrix burau_generator(int strands, int index, int sign);

// Image of a braid word: product of generator matrices in word order.
LaurentMatrix burau(const BraidWord& w);

// Image specialized at t0 (must be +-1; t0 = -1 is the case of interest).
IntMatrix burau_at(const BraidWord& w, int t0 = -1);

// Membership in K_n: pure braids whose reduced Burau image at t = -1 is
// the identity. Sound for braid words as given; equality of braids up to
// braid relations is not decided here.
bool in_burau_kernel(const BraidWord& w);

}  // namespace torelli
