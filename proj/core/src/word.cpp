#include "ginprod/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace ginprod {

Word Word::parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Word::parse: empty word");
  std::vector<Token> tokens;
  tokens.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case 'x': case 'X': tokens.push_back(Token::X); break;
      case 'd': case 'D': tokens.push_back(Token::XDag); break;
      default:
        throw std::invalid_argument(std::string("Word::parse: invalid character '") + c +
                                    "' (expected 'x' or 'd')");
    }
  }
  return Word{std::move(tokens)};
}

Word Word::xd_power(int m) {
  std::vector<Token> tokens;
  tokens.reserve(2 * m);
  for (int i = 0; i < m; ++i) {
    tokens.push_back(Token::X);
    tokens.push_back(Token::XDag);
  }
  return Word{std::move(tokens)};
}

Word Word::x_then_d(int a, int b) {
  std::vector<Token> tokens;
  tokens.reserve(a + b);
  tokens.insert(tokens.end(), a, Token::X);
  tokens.insert(tokens.end(), b, Token::XDag);
  return Word{std::move(tokens)};
}

int Word::count_x() const {
  return static_cast<int>(std::count(tokens_.begin(), tokens_.end(), Token::X));
}

int Word::count_xdag() const {
  return static_cast<int>(std::count(tokens_.begin(), tokens_.end(), Token::XDag));
}

Word Word::rotated(int r) const {
  if (tokens_.empty()) return *this;
  const int n = size();
  r = ((r % n) + n) % n;
  std::vector<Token> out(tokens_.begin() + r, tokens_.end());
  out.insert(out.end(), tokens_.begin(), tokens_.begin() + r);
  return Word{std::move(out)};
}

Word Word::conjugate_reversed() const {
  std::vector<Token> out(tokens_.rbegin(), tokens_.rend());
  for (Token& t : out) t = (t == Token::X) ? Token::XDag : Token::X;
  return Word{std::move(out)};
}

bool Word::cyclic_equal(const Word& other) const {
  if (size() != other.size()) return false;
  for (int r = 0; r < size(); ++r)
    if (rotated(r) == other) return true;
  return size() == 0;
}

Word Word::canonical_rotation() const {
  Word best = *this;
  for (int r = 1; r < size(); ++r) {
    Word w = rotated(r);
    if (w < best) best = std::move(w);  // Token::X < Token::XDag
  }
  return best;
}

std::string Word::str() const {
  std::string s;
  s.reserve(tokens_.size());
  for (Token t : tokens_) s += (t == Token::X) ? 'x' : 'd';
  return s;
}

}  // namespace ginprod
