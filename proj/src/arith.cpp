#include "cannonball/arith.hpp"

#include <stdexcept>

#include "cannonball/fixed_width.hpp"

namespace cannonball {

Integer exact_div(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::logic_error("exact_div: division by zero");
  Integer q;
  Integer r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (sgn(r) != 0)
    throw std::logic_error("exact_div: " + to_string(den) + " does not divide " + to_string(num));
  return q;
}

Integer sum_squares(const Integer& a, const Integer& M, SumMode mode) {
  if (a < 1) throw std::invalid_argument("sum_squares: start a must be >= 1");
  if (M < 1) throw std::invalid_argument("sum_squares: length M must be >= 1");

  if (mode == SumMode::direct) {
    Integer total = 0;
    Integer x = a;
    for (Integer i = 0; i < M; ++i, ++x) total += x * x;
    return total;
  }

  Integer k = 2 * a + M - 1;
  Integer numerator = M * (3 * k * k + M * M - 1);
  return exact_div(numerator, 12);
}

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw std::invalid_argument("isqrt: negative argument");
  if (n < 2) return n;

  // Start above √n; the Newton iterates then decrease monotonically to the floor.
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer x = Integer{1} << static_cast<mp_bitcnt_t>((bits + 1) / 2);
  while (true) {
    Integer y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  // Floor correction.
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

std::optional<Integer> is_perfect_square(const Integer& n) {
  if (sgn(n) < 0) return std::nullopt;
  if (!detail::passes_square_filters(mpz_fdiv_ui(n.get_mpz_t(), 64), mpz_fdiv_ui(n.get_mpz_t(), 63),
                                     mpz_fdiv_ui(n.get_mpz_t(), 65), mpz_fdiv_ui(n.get_mpz_t(), 11)))
    return std::nullopt;
  Integer r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

Integer parse_integer(const std::string& text) {
  Integer n;
  if (text.empty() || n.set_str(text, 10) != 0)
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  return n;
}

std::string to_string(const Integer& n) { return n.get_str(10); }

}  // namespace cannonball
