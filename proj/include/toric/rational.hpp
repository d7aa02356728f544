#ifndef TORIC_RATIONAL_HPP
#define TORIC_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;

using Vec = std::vector<Int>;   // lattice vector
using QVec = std::vector<Rat>;  // rational vector

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// p-adic valuation of a nonzero integer
inline long valuation(Int n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    long v = 0;
    n = abs(n);
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

// v_p of a nonzero rational
inline long valuation(const Rat& q, const Int& p) {
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

// primes of n collected into out (trial division; inputs in this toolkit
// stay well inside the 64-bit range where this is instant)
void prime_support(Int n, std::vector<Int>& out);

// primes dividing numerator or denominator of any coordinate
std::vector<Int> support_primes(const QVec& coords);

// deterministic primes below bound
std::vector<long> primes_below(long bound);

// parse "4/9" or "-3" as an exact rational
Rat parse_rational(const std::string& s);

// parse comma-separated rational tuple "4/9,6"
QVec parse_point(const std::string& s);

}  // namespace toric

#endif
