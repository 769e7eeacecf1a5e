#include "nfp/parse.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nfp::parse {

namespace {

double real_number(const std::string& text, const std::string& whole) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse number '" + whole + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument("cannot parse number '" + whole + "'");
  return v;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t;
    for (char ch : item)
      if (ch != ' ') t += ch;
    if (t.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    out.push_back(t);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

}  // namespace

CNum complex_number(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (text.front() == '@') return std::polar(1.0, real_number(text.substr(1), text));
  if (text.back() != 'i') return {real_number(text, text), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  // Split before the sign of the imaginary part; skip exponent signs.
  std::size_t cut = 0;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      cut = k;
      break;
    }
  const std::string re = body.substr(0, cut);
  const std::string im = body.substr(cut);
  double imag = 0.0;
  if (im.empty() || im == "+") imag = 1.0;
  else if (im == "-") imag = -1.0;
  else imag = real_number(im, text);
  return {re.empty() ? 0.0 : real_number(re, text), imag};
}

std::vector<CNum> complex_list(const std::string& text) {
  std::vector<CNum> out;
  for (const auto& item : split(text)) out.push_back(complex_number(item));
  return out;
}

std::vector<long> integer_list(const std::string& text) {
  std::vector<long> out;
  for (const auto& item : split(text)) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse integer '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("cannot parse integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace nfp::parse
