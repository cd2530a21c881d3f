#include "torelli/word.hpp"

#include <algorithm>

#include "letters_io.hpp"

namespace torelli {

std::vector<Letter> reduce_letters(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

namespace {

void check_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("Word: rank must be positive");
}

void check_letters(int rank, std::span<const Letter> raw) {
  for (Letter l : raw) {
    if (l == 0 || letter_index(l) > rank) {
      throw std::invalid_argument("Word: letter index out of range 1.." +
                                  std::to_string(rank));
    }
  }
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::span<const Letter> raw) : rank_(rank) {
  check_rank(rank);
  check_letters(rank, raw);
  letters_ = reduce_letters(raw);
}

Word::Word(int rank, std::initializer_list<Letter> raw)
    : Word(rank, std::span<const Letter>(raw.begin(), raw.size())) {}

Word Word::parse(std::string_view text, int rank) {
  check_rank(rank);
  return Word(rank, detail::parse_letters(text, rank, 'z'));
}

long long Word::exponent_sum() const noexcept {
  long long sum = 0;
  for (Letter l : letters_) sum += letter_sign(l);
  return sum;
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(-*it);
  return w;
}

Word operator*(const Word& u, const Word& v) {
  if (u.rank_ != v.rank_)
    throw std::invalid_argument("Word: rank mismatch in product");
  Word w(u.rank_);
  w.letters_ = u.letters_;
  for (Letter l : v.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -l) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

std::string Word::str() const { return detail::print_letters(letters_, 'z'); }

Word conjugate(const Word& w, const Word& c) { return c * w * c.inverse(); }

Word commutator(const Word& u, const Word& v) {
  return u * v * u.inverse() * v.inverse();
}

Word power(const Word& w, long long k) {
  Word base = k < 0 ? w.inverse() : w;
  long long reps = k < 0 ? -k : k;
  Word acc(w.rank());
  for (long long i = 0; i < reps; ++i) acc = acc * base;
  return acc;
}

std::vector<Word> enumerate_even_words(int rank, int max_len) {
  std::vector<Word> out;
  for_each_even_word(rank, max_len, [&](std::span<const Letter> ls) {
    out.emplace_back(rank, ls);
    return true;
  });
  return out;
}

}  // namespace torelli
