#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "torelli/word.hpp"

namespace torelli {

// Word in the braid generators s_1..s_{n-1} of the braid group on n
// strands. Stored freely reduced (adjacent s_i s_i^-1 cancelled); braid
// relations are NOT applied, so equal braids may have distinct words.
class BraidWord {
public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::span<const Letter> raw);
  BraidWord(int strands, std::initializer_list<Letter> raw);

  // Grammar: tokens `s<k>` / `s<k>^-1`, whitespace separated.
  static BraidWord parse(std::string_view text, int strands);

  int strands() const noexcept { return strands_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  BraidWord inverse() const;
  friend BraidWord operator*(const BraidWord&, const BraidWord&);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  std::string str() const;

private:
  int strands_;
  std::vector<Letter> letters_;
};

// Bijection of {1..n}.
class Permutation {
public:
  explicit Permutation(int degree);  // identity
  static Permutation transposition(int degree, int i);  // swaps i, i+1

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int image_of(int x) const;  // 1-based
  bool is_identity() const;

  // Composite that applies *this first, then next.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  std::vector<int> images() const;  // 1-based image list
  std::string str() const;          // cycle notation; identity is "()"

private:
  std::vector<int> images_;  // 0-based internally
};

// Induced permutation: s_i acts as the transposition (i, i+1), letters act
// left to right, so permutation(u*v) = permutation(u).then(permutation(v)).
Permutation permutation(const BraidWord& w);
bool is_pure(const BraidWord& w);

// Full twist (s_1 s_2 ... s_{n-1})^n, generating the center of B_n.
BraidWord center_word(int strands);

// Standard pure-braid generator A_{ij} (1 <= i < j <= n): the conjugate
// (s_{j-1} ... s_{i+1}) s_i^2 (s_{j-1} ... s_{i+1})^-1.
BraidWord pure_generator(int strands, int i, int j);

}  // namespace torelli
