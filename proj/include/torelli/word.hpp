#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace torelli {

// A letter of a free-group word, encoded as a signed generator index:
// +i is the i-th generator, -i its inverse. Indices are 1-based.
using Letter = std::int32_t;

constexpr int letter_index(Letter l) noexcept { return l < 0 ? -l : l; }
constexpr int letter_sign(Letter l) noexcept { return l < 0 ? -1 : +1; }

// Raised by the text parsers; token_pos is the 1-based position of the
// offending token in the input stream.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& msg, std::size_t token_pos)
      : std::invalid_argument(msg), token_pos_(token_pos) {}
  std::size_t token_pos() const noexcept { return token_pos_; }

private:
  std::size_t token_pos_;
};

// Free reduction of a raw letter sequence: cancels adjacent x x^-1 pairs
// until none remain. Single left-to-right stack pass.
std::vector<Letter> reduce_letters(std::span<const Letter> raw);

// An element of the free group of the given rank, stored freely reduced.
// Every constructor reduces; all operations return reduced words. Values
// are immutable after construction.
class Word {
public:
  // Identity word.
  explicit Word(int rank);
  // Reduces the given letter sequence. Letters must be nonzero with
  // |letter| <= rank.
  Word(int rank, std::span<const Letter> raw);
  Word(int rank, std::initializer_list<Letter> raw);

  // Grammar: whitespace-separated tokens `z<k>` or `z<k>^-1`; the empty
  // stream is the identity. Malformed tokens and out-of-range indices
  // raise ParseError with the token position.
  static Word parse(std::string_view text, int rank);

  int rank() const noexcept { return rank_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  long long exponent_sum() const noexcept;
  bool is_even() const noexcept { return length() % 2 == 0; }

  Word inverse() const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;

  // Grammar form; the identity prints as the empty string.
  std::string str() const;

private:
  int rank_;
  std::vector<Letter> letters_;
};

Word conjugate(const Word& w, const Word& c);   // c w c^-1
Word commutator(const Word& u, const Word& v);  // u v u^-1 v^-1
Word power(const Word& w, long long k);

// Total order on letters used by the enumerator: z1 < z1^-1 < z2 < ...
constexpr int letter_order(Letter l) noexcept {
  return 2 * (letter_index(l) - 1) + (l < 0 ? 1 : 0);
}

namespace detail {
template <typename Visitor>
bool visit_reduced_words(int rank, int target_len, std::vector<Letter>& buf,
                         Visitor&& visit) {
  if (buf.size() == static_cast<std::size_t>(target_len)) {
    return visit(std::as_const(buf));
  }
  for (int ord = 0; ord < 2 * rank; ++ord) {
    Letter l = (ord % 2 == 0) ? (ord / 2 + 1) : -(ord / 2 + 1);
    if (!buf.empty() && buf.back() == -l) continue;  // keep it reduced
    buf.push_back(l);
    if (!visit_reduced_words(rank, target_len, buf, visit)) return false;
    buf.pop_back();
  }
  return true;
}
}  // namespace detail

// Visits every reduced word with even exponent sum and length <= max_len,
// exactly once, in length-lexicographic order (z1 < z1^-1 < z2 < ...).
// The visitor receives the letter sequence and returns false to stop.
// Even parity of a reduced word is equivalent to even length.
template <typename Visitor>
void for_each_even_word(int rank, int max_len, Visitor&& visit) {
  if (rank < 1) throw std::invalid_argument("for_each_even_word: rank must be positive");
  if (max_len < 0) throw std::invalid_argument("for_each_even_word: max_len must be >= 0");
  std::vector<Letter> buf;
  for (int len = 0; len <= max_len; len += 2) {
    buf.clear();
    if (!detail::visit_reduced_words(rank, len, buf, visit)) return;
  }
}

std::vector<Word> enumerate_even_words(int rank, int max_len);

}  // namespace torelli
