#include "mftop/rat.hpp"

#include <vector>

namespace mftop {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = text.find('/');
  if (slash != std::string::npos &&
      (slash == 0 || slash + 1 == text.size())) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw std::invalid_argument("malformed rational: " + text);
  }
  Rat q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

unsigned long rat_height(const Rat& q) {
  mpz_class den = q.get_den();
  return den.get_ui();
}

Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  // Continued-fraction descent: the simplest fraction in an open interval
  // (a/b, c/d) is an integer if one fits, otherwise recurse on the
  // reciprocal fractional parts and fold the coefficients back up.
  // Upper bound with d == 0 stands for +infinity (arises when a recursion
  // step lands on an integer lower endpoint).
  mpz_class a = lo.get_num(), b = lo.get_den();
  mpz_class c = hi.get_num(), d = hi.get_den();
  std::vector<mpz_class> coeffs;
  while (true) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_class next_int = f + 1;
    if (d == 0 || next_int * d < c) {
      coeffs.push_back(next_int);
      break;
    }
    coeffs.push_back(f);
    mpz_class na = d, nb = c - f * d, nc = b, nd = a - f * b;
    a = na;
    b = nb;
    c = nc;
    d = nd;
  }
  mpz_class num = coeffs.back(), den = 1;
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
    mpz_class nn = *it * num + den;  // x -> coeff + 1/x
    den = num;
    num = nn;
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace mftop
