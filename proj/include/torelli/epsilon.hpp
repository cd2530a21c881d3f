#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torelli/word.hpp"

namespace torelli {

// For odd rank 2g+1 >= 3 returns g; other ranks are rejected (the epsilon
// layer only makes sense for the zeta-alphabet of genus g >= 1).
int genus_for_rank(int rank);

// Element of the balanced lattice: integer vector of length 2g+1 with
// coordinate sum zero.
class BalancedVector {
public:
  explicit BalancedVector(int genus);  // zero vector
  BalancedVector(int genus, std::vector<long long> coords);
  static BalancedVector basis_difference(int genus, int i, int j);  // e_i - e_j

  int genus() const noexcept { return genus_; }
  int size() const noexcept { return static_cast<int>(coords_.size()); }
  long long coord(int i) const;  // 1-based
  const std::vector<long long>& coords() const noexcept { return coords_; }

  bool is_zero() const;
  long long height() const;  // sum of |coordinates|; always even

  friend BalancedVector operator+(const BalancedVector&, const BalancedVector&);
  friend BalancedVector operator-(const BalancedVector&, const BalancedVector&);
  BalancedVector operator-() const;
  friend bool operator==(const BalancedVector&, const BalancedVector&) = default;

  std::string str() const;   // "e1 - e2", "2e3 - e1 - e2", zero is "0"
  std::string json() const;  // integer array

private:
  int genus_;
  std::vector<long long> coords_;
};

// All balanced vectors of the given genus with height <= max_height, in
// lexicographic coordinate order. max_height is rounded down to even
// implicitly (odd heights do not occur).
std::vector<BalancedVector> balanced_vectors_up_to_height(int genus,
                                                          long long max_height);

// The sign-alternating, exponent-blind homomorphism on the even subgroup:
// the j-th letter of the reduced word contributes (-1)^(j+1) e_{i_j},
// regardless of the letter's own exponent. Rejects odd words.
BalancedVector epsilon(const Word& w);

// True iff w is even and epsilon(w) = 0.
bool in_ker_epsilon(const Word& w);

// Canonical transversal word s(v) = prod_{i=2}^{2g+1} (z_i z_1)^{v_i},
// factors in increasing i. Satisfies epsilon(section(v)) = v.
Word section(const BalancedVector& v);

struct SplitResult {
  Word kernel_part;      // w * section(epsilon(w))^-1, lies in ker epsilon
  BalancedVector image;  // epsilon(w)
};

// Decomposition w = k * s(v) realizing the semidirect splitting. Rejects
// odd words.
SplitResult split(const Word& w);

// Greedy height descent: writes v as a sum of exactly height(v)/2 terms
// e_i - e_j. Each step pairs the smallest index with negative coordinate
// against the smallest index with positive coordinate; the returned pair
// (i, j) means e_i - e_j with i the positive and j the negative index.
std::vector<std::pair<int, int>> balanced_decompose(const BalancedVector& v);

// Schreier generators of ker epsilon over the transversal {section(v)}:
// for every balanced v with height(v)/2 <= radius and every free basis
// letter x of the even subgroup ({z_i z_1^-1 (i>=2), z_1 z_i (i>=1)} and
// inverses), the reduced word section(v) x section(epsilon(section(v) x))^-1.
// Deduplicated, identity omitted. Counts grow strictly with the radius
// (the kernel is an infinitely generated free group).
std::vector<Word> schreier_generators(int genus, int radius);

// The normal generators of ker epsilon: squares z_i^2 and commutators
// [z_i z_1, z_j z_1] (i, j >= 2, i != j), lifted from the defining
// relators of the balanced lattice.
class NormalGenerator {
public:
  enum class Kind { square, comm };

  static NormalGenerator square(int i);
  static NormalGenerator comm(int i, int j);

  Kind kind() const noexcept { return kind_; }
  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }

  Word expand(int rank) const;
  std::string str() const;  // "sq:i" or "comm:i:j"
  friend bool operator==(const NormalGenerator&, const NormalGenerator&) =
      default;

private:
  NormalGenerator(Kind kind, int i, int j) : kind_(kind), i_(i), j_(j) {}
  Kind kind_;
  int i_;
  int j_;
};

struct FactorEntry {
  Word conjugator;
  NormalGenerator generator;
  int exponent;  // +1 or -1

  friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

// Ordered product of conjugated normal generators; expanding each entry as
// conjugator * generator^exponent * conjugator^-1 and multiplying in order
// reproduces the factored word.
using Factorization = std::vector<FactorEntry>;

Word expand(const Factorization& f, int rank);

// Writes a kernel word as a product of conjugated normal generators.
// The factorization is not canonical; the contract is the round trip
// verify_factorization(w, factor_kernel_word(w)). Rejects words outside
// ker epsilon.
Factorization factor_kernel_word(const Word& w);

// True iff the reduced expansion of f equals w. Never throws: malformed
// entries (rank mismatch, bad indices, bad exponent) simply fail.
bool verify_factorization(const Word& w, const Factorization& f);

// [{"conj":"z1^-1","gen":"sq:1","exp":1}, ...]
std::string factorization_json(const Factorization& f);

}  // namespace torelli
