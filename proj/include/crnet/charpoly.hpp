#pragma once

// Characteristic polynomial of the nontrivial quotient spectrum at the
// weights w_k = 1/(n_{ceil(k/2)} + 1), built from the three-term recursion
//
//   f_1 = 1,  f_2 = (n_1+1) s,
//   f_{2i}   = (n_i+1) s f_{2i-1} - sqrt(n_{i-1} n_i) f_{2i-2},
//   f_{2i+1} = ((n_i+1) s f_{2i} - f_{2i-1}) / sqrt(n_i n_{i+1}),
//
// closed by ((n_m+1)^2 s^2 - 1) f_{2m-1} = s (n_m+1) sqrt(n_{m-1} n_m) f_{2m-2}.
//
// Rescaling f_j by the running product of the square roots makes every
// coefficient an integer, so the whole recursion runs in exact arithmetic.

#include "crnet/topology.hpp"

#include <cstdint>
#include <vector>

namespace crnet {

// Polynomial in s with only even powers, stored in u = s^2.
class EvenPolynomial {
public:
    EvenPolynomial() = default;
    // u_coefficients lowest power first.
    explicit EvenPolynomial(std::vector<std::int64_t> u_coefficients);
    // Throws InconsistencyError if an odd power is nonzero.
    static EvenPolynomial from_s_coefficients(const std::vector<std::int64_t>& s_coefficients);

    const std::vector<std::int64_t>& u_coefficients() const noexcept { return u_; }
    std::vector<std::int64_t> s_coefficients() const;
    int degree_s() const noexcept { return 2 * (static_cast<int>(u_.size()) - 1); }

    long double eval_u(long double u) const;
    long double eval_s(long double s) const { return eval_u(s * s); }

    friend bool operator==(const EvenPolynomial&, const EvenPolynomial&) = default;

private:
    std::vector<std::int64_t> u_;
};

// Requires m >= 2 (UnsupportedOrder otherwise). Throws InconsistencyError
// on int64 overflow.
EvenPolynomial charpoly(const ChainSpec& spec);

// All 2m real roots in s, descending. Root isolation by Sturm counts on
// the polynomial in u, then bisection. Throws InconsistencyError when the
// polynomial has a root outside (-1, 1) beyond tol or a non-real root.
std::vector<double> charpoly_roots(const EvenPolynomial& p, double tol = 1e-12);

// Real roots of a real polynomial in u (lowest power first) inside (lo, hi].
std::vector<long double> real_roots_between(const std::vector<long double>& coefficients, long double lo,
                                            long double hi);

}  // namespace crnet
