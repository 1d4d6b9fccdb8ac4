#include "trig/counting.hpp"

#include <string>

namespace trig {

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class catalan(long s) {
  if (s < 0) throw DomainError("catalan: negative index");
  return binomial(2 * s, s) / (s + 1);
}

mpz_class zariski_count(long m) {
  if (m < 8) throw DomainError("zariski_count: degree must be >= 8");
  long k = (m - 2) / 2;
  long eps = m - 2 * k - 2;
  return catalan(k - 1) * binomial(k, k / 2) * binomial(k / 2, eps);
}

mpz_class reducible_count(long m) {
  if (m < 8) throw DomainError("reducible_count: degree must be >= 8");
  return binomial(2 * m - 12, m - 6) / (m - 5);
}

std::optional<RealCount> real_count_irreducible(long m) {
  if (m < 10 || (m - 2) % 8 != 0) return std::nullopt;
  long t = (m - 2) / 8;
  // Z(4t+2) evaluated by its defining product: k = 2t, eps = 0.
  mpz_class value = catalan(2 * t - 1) * binomial(2 * t, t);
  return RealCount{value, 4 * t + 2 < 8};
}

std::optional<RealCount> real_count_reducible(long m) {
  if (m % 2 == 0) return std::nullopt;
  long t = (m - 1) / 2;
  if (t < 3) return std::nullopt;
  // R(t+3) evaluated by its Catalan form.
  return RealCount{catalan(t - 3), t + 3 < 8};
}

mpz_class arithmetic_lower_bound(long m) {
  if (m < 5 || m % 2 == 0) throw DomainError("arithmetic_lower_bound: m must be odd and >= 5");
  long k = (m - 1) / 2;
  return binomial(2 * k - 2, k - 1) / 2;
}

std::pair<mpz_class, mpq_class> surface_counts(long s) {
  if (s < 1) throw DomainError("surface_counts: s must be >= 1");
  mpz_class families = catalan(2 * s - 1);
  mpq_class bound(families, 2 * s + 1);
  bound.canonicalize();
  return {families, bound};
}

mpz_class real_subclass_count(long t) {
  if (t < 1) throw DomainError("real_subclass_count: t must be >= 1");
  return mpz_class(t) * t;
}

OneSig round_one_significant(const mpz_class& v) {
  if (v <= 0) throw DomainError("round_one_significant: positive values only");
  std::string digits = v.get_str();
  int d = digits[0] - '0';
  long exp = static_cast<long>(digits.size()) - 1;
  if (digits.size() > 1 && digits[1] >= '5') ++d;
  if (d == 10) {
    d = 1;
    ++exp;
  }
  return {d, exp};
}

}  // namespace trig
