#include "blinded/rational.hpp"

#include <cctype>

#include "blinded/errors.hpp"

namespace blinded {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat rat_parse(const std::string& text) {
  std::size_t slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den)) {
    throw ParseError("bad rational: '" + text + "'");
  }
  Rat r;
  if (r.set_str(num + "/" + den, 10) != 0) {
    throw ParseError("bad rational: '" + text + "'");
  }
  if (r.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_vec_str(const std::vector<Rat>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_str(v[i]);
  }
  return out;
}

double rat_double(const Rat& r) { return r.get_d(); }

}  // namespace blinded
