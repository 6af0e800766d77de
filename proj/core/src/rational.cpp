#include "ginprod/rational.hpp"

#include <sstream>

namespace ginprod {

std::string to_string(const BigRational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

std::string NLaurent::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest power of N first
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const int e = it->first;
    BigRational c = it->second;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      os << "-";
      c = -c;
    }
    first = false;

    const bool unit = (c == 1);
    if (e == 0) {
      os << to_string(c);
    } else if (e > 0) {
      if (!unit) os << to_string(c) << "*";
      os << "N";
      if (e != 1) os << "^" << e;
    } else {
      os << to_string(c) << "/N";
      if (e != -1) os << "^" << -e;
    }
  }
  return os.str();
}

}  // namespace ginprod
