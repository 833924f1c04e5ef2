#pragma once

// Genus-bound combinatorics: the Castelnuovo–Harris function pi(r,n,d), its
// companion pibar(r,n,delta), the degree bound and the scroll threshold
// theta. Everything is exact integer / rational arithmetic.

#include "jck/rational.hpp"

#include <stdexcept>
#include <vector>

namespace jck {
namespace bounds {

struct BoundQuery {
    long r = 0, n = 0, delta = 0;
    long rho = 0, m = 0, m_prime = 0;
};

// Derived quantities rho = floor(delta/(n-1)), m = delta - rho(n-1) + 1,
// m' = n-1-m; requires delta >= n-1.
BoundQuery derive(long r, long n, long delta);

// pi(r,n,d) = sum_{s>=0} C(s+r-1, s) (d - (s+r)(n-1) - 1)^+
Int pi(long r, long n, long d);

// pibar(r,n,delta) = m C(r+rho+1, r+1) + m' C(r+rho, r+1)
Int pibar(long r, long n, long delta);

struct EqualityWitness {
    Int value;
    long d = 0;
    bool equal = false;
};

// pibar(r,n,delta) = pi(r,n,d) with d = delta + r(n-1) + 2.
EqualityWitness pibar_equals_pi(long r, long n, long delta);

// delta^{r+1} / (n-1)^r, exact.
Rational degree_bound(long r, long n, long delta);

// theta = (n-1+k)^{r+1} - (n-1)^r (n + k(r+1) - 2)
Int theta(long r, long n, long k);

struct TableRow {
    long r, n, delta, d;
    Int pibar_value, pi_value;
    bool equal;
};

std::vector<TableRow> table(long r_lo, long r_hi, long n_lo, long n_hi, long delta_hi);

} // namespace bounds
} // namespace jck
