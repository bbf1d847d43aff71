#include "torusgreen/textio.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace torusgreen {

namespace {

double parse_real(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) {
    throw std::invalid_argument("malformed number '" + text + "'");
  }
  return v;
}

// "", "+", "-" denote the implicit unit imaginary coefficient
double parse_imag_coeff(const std::string& text) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  if (s.back() != 'i' && s.back() != 'I') {
    return Complex{parse_real(s), 0.0};
  }
  s.pop_back();
  // split at the last +/- that does not follow an exponent marker
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    return Complex{0.0, parse_imag_coeff(s)};
  }
  return Complex{parse_real(s.substr(0, split)), parse_imag_coeff(s.substr(split))};
}

std::string format_complex(Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace torusgreen
