#include "jck/bounds.hpp"

#include "jck/errors.hpp"

namespace jck {
namespace bounds {

BoundQuery derive(long r, long n, long delta) {
    if (r < 1) throw InputError("bounds: r must be >= 1");
    if (n < 2) throw InputError("bounds: n must be >= 2");
    if (delta < n - 1) throw InputError("bounds: delta must be >= n-1");
    BoundQuery q;
    q.r = r;
    q.n = n;
    q.delta = delta;
    q.rho = delta / (n - 1);
    q.m = delta - q.rho * (n - 1) + 1;
    q.m_prime = n - 1 - q.m;
    return q;
}

Int pi(long r, long n, long d) {
    if (r < 1) throw InputError("bounds: r must be >= 1");
    if (n < 2) throw InputError("bounds: n must be >= 2");
    if (d < 1) throw InputError("bounds: d must be >= 1");
    Int total(0);
    // terms vanish once (sigma+r)(n-1)+1 >= d
    long cap = (d - 1) / (n - 1) - r; // safety bound on the loop
    for (long sigma = 0; sigma <= std::max(0L, cap); ++sigma) {
        Int pos(d - (sigma + r) * (n - 1) - 1);
        if (pos <= 0) break;
        total += binomial(sigma + r - 1, sigma) * pos;
    }
    return total;
}

Int pibar(long r, long n, long delta) {
    BoundQuery q = derive(r, n, delta);
    return Int(q.m) * binomial(q.r + q.rho + 1, q.r + 1) +
           Int(q.m_prime) * binomial(q.r + q.rho, q.r + 1);
}

EqualityWitness pibar_equals_pi(long r, long n, long delta) {
    EqualityWitness w;
    w.d = delta + r * (n - 1) + 2;
    Int a = pibar(r, n, delta);
    Int b = pi(r, n, w.d);
    w.equal = (a == b);
    w.value = a;
    return w;
}

Rational degree_bound(long r, long n, long delta) {
    if (n < 2) throw InputError("bounds: n must be >= 2");
    if (delta < n - 1) throw InputError("bounds: delta must be >= n-1");
    return Rational(ipow(Int(delta), unsigned(r + 1)), ipow(Int(n - 1), unsigned(r)));
}

Int theta(long r, long n, long k) {
    if (r < 1 || n < 2 || k < 1) throw InputError("bounds: need r >= 1, n >= 2, k >= 1");
    return ipow(Int(n - 1 + k), unsigned(r + 1)) -
           ipow(Int(n - 1), unsigned(r)) * Int(n + k * (r + 1) - 2);
}

std::vector<TableRow> table(long r_lo, long r_hi, long n_lo, long n_hi, long delta_hi) {
    std::vector<TableRow> rows;
    for (long r = r_lo; r <= r_hi; ++r)
        for (long n = n_lo; n <= n_hi; ++n)
            for (long delta = n - 1; delta <= delta_hi; ++delta) {
                auto w = pibar_equals_pi(r, n, delta);
                rows.push_back({r, n, delta, w.d, pibar(r, n, delta), pi(r, n, w.d), w.equal});
            }
    return rows;
}

} // namespace bounds
} // namespace jck
