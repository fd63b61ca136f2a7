#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

namespace pi1lat {

// Every computation in this library runs over exact arbitrary-precision
// integers; nothing is ever rounded.
using Int = mpz_class;
using Index = Eigen::Index;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Returns true when d divides a, with the convention 0 | a iff a = 0.
inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

inline std::string to_decimal(const Int& a) { return a.get_str(); }

}  // namespace pi1lat

namespace Eigen {

// Lets Eigen dense types carry pi1lat::Int entries. Only storage-level
// functionality is used (products, transposes, blocks); no decompositions.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen
