#include "letters_io.hpp"

#include <cctype>

namespace torelli::detail {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

[[noreturn]] void bad_token(std::string_view token, std::size_t pos,
                            const std::string& why) {
  throw ParseError("token " + std::to_string(pos) + " ('" +
                       std::string(token) + "'): " + why,
                   pos);
}

Letter parse_token(std::string_view tok, int max_index, char head,
                   std::size_t pos) {
  std::size_t i = 0;
  if (i >= tok.size() || tok[i] != head)
    bad_token(tok, pos, std::string("expected '") + head + "<k>' or '" + head +
                            "<k>^-1'");
  ++i;
  if (i >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[i])))
    bad_token(tok, pos, "missing generator index");
  long long index = 0;
  while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
    index = index * 10 + (tok[i] - '0');
    if (index > max_index) index = max_index + 1;  // clamp, range check below
    ++i;
  }
  if (index < 1 || index > max_index)
    bad_token(tok, pos,
              "generator index out of range 1.." + std::to_string(max_index));
  int sign = +1;
  if (i < tok.size()) {
    if (tok.substr(i) != "^-1") bad_token(tok, pos, "malformed exponent");
    sign = -1;
    i = tok.size();
  }
  return static_cast<Letter>(sign * index);
}

}  // namespace

std::vector<Letter> parse_letters(std::string_view text, int max_index,
                                  char head) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  std::size_t token_pos = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    ++token_pos;
    letters.push_back(
        parse_token(text.substr(start, i - start), max_index, head, token_pos));
  }
  return letters;
}

std::string print_letters(const std::vector<Letter>& letters, char head) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out += ' ';
    out += head;
    out += std::to_string(letter_index(letters[i]));
    if (letters[i] < 0) out += "^-1";
  }
  return out;
}

}  // namespace torelli::detail
