#include "crn/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace crn {

Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  bool invert = e < 0;
  unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (invert && sign_of(base) == 0) throw std::domain_error("pow_rat: zero base with negative exponent");
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), n);
  if (invert) return 1 / r;
  return r;
}

std::optional<Rat> rat_root(const Rat& x, unsigned long n) {
  if (n == 0) throw std::domain_error("rat_root: zeroth root");
  if (sign_of(x) <= 0) return std::nullopt;
  Int rn, rd;
  int exact_n = mpz_root(rn.get_mpz_t(), x.get_num_mpz_t(), n);
  int exact_d = mpz_root(rd.get_mpz_t(), x.get_den_mpz_t(), n);
  if (!exact_n || !exact_d) return std::nullopt;
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    for (size_t i = 0; i < num.size(); ++i)
      if (!(std::isdigit(static_cast<unsigned char>(num[i])) || (i == 0 && (num[i] == '+' || num[i] == '-'))))
        return std::nullopt;
    for (char c : den)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    Int p, q;
    if (p.set_str(num[0] == '+' ? num.substr(1) : num, 10) != 0) return std::nullopt;
    if (q.set_str(den, 10) != 0) return std::nullopt;
    if (q == 0) return std::nullopt;
    Rat r(p, q);
    r.canonicalize();
    return r;
  }

  // Integer or decimal, with an optional exponent part.
  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = (s[i] == '-'), ++i;
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      break;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;
  long exp10 = 0;
  if (i < s.size()) {  // exponent part
    std::string e = s.substr(i + 1);
    if (e.empty()) return std::nullopt;
    size_t j = (e[0] == '+' || e[0] == '-') ? 1 : 0;
    if (j == e.size()) return std::nullopt;
    for (size_t k = j; k < e.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(e[k]))) return std::nullopt;
    exp10 = std::strtol(e.c_str(), nullptr, 10);
  }
  Int mantissa;
  if (mantissa.set_str(digits, 10) != 0) return std::nullopt;
  if (neg) mantissa = -mantissa;
  long shift = exp10 - frac_digits;
  Int pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rat r = shift < 0 ? Rat(mantissa, pow10) : Rat(mantissa * pow10);
  r.canonicalize();
  return r;
}

}  // namespace crn
