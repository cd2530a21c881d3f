#pragma once

#include <string>
#include <vector>

#include "torelli/laurent.hpp"
#include "torelli/word.hpp"

namespace torelli {

// Formal integer combination of the relative arc classes b_1..b_{2g+1}.
class BetaVector {
public:
  explicit BetaVector(int genus);  // zero
  BetaVector(int genus, std::vector<Int> coords);
  static BetaVector basis(int genus, int k);  // b_k

  int genus() const noexcept { return genus_; }
  int size() const noexcept { return static_cast<int>(coords_.size()); }
  const Int& coord(int k) const;  // 1-based
  const std::vector<Int>& coords() const noexcept { return coords_; }

  friend bool operator==(const BetaVector&, const BetaVector&) = default;

  std::string str() const;   // "b3 - 2b1", zero is "0"
  std::string json() const;  // integer array

private:
  int genus_;
  std::vector<Int> coords_;
};

// Action of the letter z_i^{+-1} on the span of the b_k: the involution
// I - 2 e_i 1^T, sending b_k to b_k - 2 b_i (so b_i to -b_i). The letter's
// own sign is irrelevant.
IntMatrix letter_action(int genus, int index);

// Matrix of the word action on column vectors, leftmost letter acting
// first: for w = l_1 ... l_m this is M(l_m) ... M(l_1). Any parity is
// accepted; for even words the result is I - 2 c 1^T with c = epsilon(w)
// carried to the b-basis. Consequently even-word action matrices commute
// and action_matrix(u v) = action_matrix(v) * action_matrix(u) in general.
IntMatrix action_matrix(const Word& w);

BetaVector apply_action(const IntMatrix& m, const BetaVector& v);

// True iff w is even and fixes the class b_1; agrees with in_ker_epsilon
// on every input.
bool in_torelli_kernel(const Word& w);

}  // namespace torelli
