#ifndef TRIG_COUNTING_HPP
#define TRIG_COUNTING_HPP

#include <gmpxx.h>

#include <optional>
#include <utility>

#include "trig/braid.hpp"

namespace trig {

mpz_class binomial(long n, long k);
mpz_class catalan(long s);

// Number of equisingular deformation families sharing one set of
// singularities in degree m; the factors count the tree, the contracted
// special fibers, and the off-curve blow-up centers.
mpz_class zariski_count(long m);     // m >= 8
mpz_class reducible_count(long m);   // m >= 8

struct RealCount {
  mpz_class value;
  bool below_table_domain;  // the referenced count sits below the m >= 8 domain
};

// Families containing real curves. Present only for m = 8t+2 (irreducible
// series) respectively odd m (reducible series).
std::optional<RealCount> real_count_irreducible(long m);
std::optional<RealCount> real_count_reducible(long m);

mpz_class arithmetic_lower_bound(long m);  // odd m = 2k+1 >= 5

// (families of elliptic surfaces, stated lower bound for the one-fiber
// variant; the bound is an exact rational and need not be integral)
std::pair<mpz_class, mpq_class> surface_counts(long s);

mpz_class real_subclass_count(long t);  // t >= 1

// Decimal rounding to one significant digit, round half up.
struct OneSig {
  int digit;
  long exponent;
};
OneSig round_one_significant(const mpz_class& v);

}  // namespace trig

#endif
