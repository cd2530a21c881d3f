#pragma once

// Shared tokenizer/printer for the word grammar `z<k>[^-1]` and the braid
// grammar `s<k>[^-1]`. Internal to the library.

#include <string>
#include <string_view>
#include <vector>

#include "torelli/word.hpp"

namespace torelli::detail {

// Parses whitespace-separated tokens `<head><k>` / `<head><k>^-1` into
// letters. Throws ParseError (with 1-based token position) on malformed
// tokens or indices outside 1..max_index.
std::vector<Letter> parse_letters(std::string_view text, int max_index,
                                  char head);

std::string print_letters(const std::vector<Letter>& letters, char head);

}  // namespace torelli::detail
