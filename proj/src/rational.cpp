#include "upl/rational.hpp"

#include <cctype>
#include <sstream>

namespace upl {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) throw ParseError("empty rational literal: '" + text + "'");

  Rat value;
  auto slash = s.find('/');
  auto point = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational literal: '" + text + "'");
    }
    mpz_class p(num), q(den);
    if (q == 0) throw ParseError("zero denominator: '" + text + "'");
    value = Rat(p, q);
    value.canonicalize();
  } else if (point != std::string::npos) {
    std::string intpart = s.substr(0, point);
    std::string frac = s.substr(point + 1);
    if (intpart.empty()) intpart = "0";
    if (!all_digits(intpart) || (!frac.empty() && !all_digits(frac))) {
      throw ParseError("malformed decimal literal: '" + text + "'");
    }
    mpz_class scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class p = mpz_class(intpart) * scale + (frac.empty() ? mpz_class(0) : mpz_class(frac));
    value = Rat(p, scale);
    value.canonicalize();
  } else {
    if (!all_digits(s)) throw ParseError("malformed integer literal: '" + text + "'");
    value = Rat(mpz_class(s));
  }
  if (negative) value = -value;
  return value;
}

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  std::ostringstream os;
  os << c;
  return os.str();
}

std::string rat_decimal(const Rat& r, int significant_digits) {
  mpf_class approx(0, 256);
  mpf_set_q(approx.get_mpf_t(), r.get_mpq_t());
  char buf[128];
  gmp_snprintf(buf, sizeof buf, "%.*Fg", significant_digits, approx.get_mpf_t());
  return buf;
}

Rat rat_sum(const RatVec& v) {
  Rat s = 0;
  for (const Rat& x : v) s += x;
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace upl
