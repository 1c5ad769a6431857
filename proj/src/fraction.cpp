#include "sofic/fraction.hpp"

#include <cstdlib>

namespace sofic {

Fraction Fraction::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long n = std::stoll(text, &used);
      if (used != text.size()) throw ParseError("trailing characters");
      return Fraction(n, 1);
    }
    long long n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw ParseError("trailing characters");
    const std::string den_part = text.substr(slash + 1);
    long long d = std::stoll(den_part, &used);
    if (used != den_part.size()) throw ParseError("trailing characters");
    return Fraction(n, d);
  } catch (const ParseError&) {
    throw ParseError("cannot parse fraction: '" + text + "'");
  } catch (const std::exception&) {
    throw ParseError("cannot parse fraction: '" + text + "'");
  }
}

}  // namespace sofic
