#include "k72/rational.hpp"

#include <stdexcept>

namespace k72 {

std::string rat_to_string(const Rat& x) {
  const Int num = numerator(x);
  const Int den = denominator(x);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

Rat rat_from_string(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("rat_from_string: empty input");
  }
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(text));
    }
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator");
    }
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("rat_from_string: malformed rational '" + text + "'");
  }
}

bool rat_is_integer(const Rat& x) { return denominator(x) == 1; }

Int rat_to_int(const Rat& x) {
  if (!rat_is_integer(x)) {
    throw std::invalid_argument("rat_to_int: " + rat_to_string(x) + " is not an integer");
  }
  return numerator(x);
}

}  // namespace k72
