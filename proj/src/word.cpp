#include "hk/word.hpp"

#include <algorithm>

namespace hk {

std::string word_to_string(const Word& w,
                           const std::vector<std::string>& labels) {
  bool single = std::all_of(labels.begin(), labels.end(),
                            [](const std::string& s) { return s.size() == 1; });
  if (w.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto ix = static_cast<std::size_t>(static_cast<unsigned char>(w[i]));
    if (ix >= labels.size())
      throw std::invalid_argument("word_to_string: letter out of range");
    if (!single && i > 0)
      out += '.';
    out += labels[ix];
  }
  return out;
}

Word parse_word(std::string_view text, const std::vector<std::string>& labels) {
  Word out;
  if (text == "1" || text.empty())
    return out;
  auto index_of = [&](std::string_view tok) -> Letter {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == tok)
        return static_cast<Letter>(i);
    throw std::invalid_argument("parse_word: unknown label '" +
                                std::string(tok) + "'");
  };
  if (text.find('.') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t dot = text.find('.', pos);
      if (dot == std::string_view::npos)
        dot = text.size();
      if (dot == pos)
        throw std::invalid_argument("parse_word: empty label component");
      out.push_back(index_of(text.substr(pos, dot - pos)));
      pos = dot + 1;
    }
    return out;
  }
  bool single = std::all_of(labels.begin(), labels.end(),
                            [](const std::string& s) { return s.size() == 1; });
  if (!single)
    throw std::invalid_argument(
        "parse_word: multi-character labels require dot-separated words");
  for (char c : text)
    out.push_back(index_of(std::string_view(&c, 1)));
  return out;
}

}  // namespace hk
