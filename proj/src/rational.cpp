#include "sl12/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sl12 {

Rat rat_pow(const Rat& q, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (is_zero(q)) throw std::invalid_argument("rat_pow: 0 to negative power");
    return 1 / rat_pow(q, -e);
  }
  Rat base = q, acc = 1;
  long n = e;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // mpq_class accepts whitespace and hex-ish things we do not want; validate
  // the shape by hand: [-+]?digits(/digits)?
  size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) return std::nullopt;
  if (i != s.size()) {
    if (s[i] != '/') return std::nullopt;
    ++i;
    size_t den_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != s.size()) return std::nullopt;
  }
  Rat q;
  if (q.set_str(s, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace sl12
