#include "crnet/charpoly.hpp"

#include "crnet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace crnet {

namespace {

using IntPoly = std::vector<std::int64_t>;  // in s, lowest power first

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw InconsistencyError("characteristic polynomial overflowed int64");
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) throw InconsistencyError("characteristic polynomial overflowed int64");
    return out;
}

// c * s^shift * p
IntPoly scaled_shift(const IntPoly& p, std::int64_t c, int shift) {
    IntPoly out(p.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t i = 0; i < p.size(); ++i) out[i + static_cast<std::size_t>(shift)] = checked_mul(c, p[i]);
    return out;
}

IntPoly minus(const IntPoly& a, const IntPoly& b) {
    IntPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::int64_t x = i < a.size() ? a[i] : 0;
        const std::int64_t y = i < b.size() ? b[i] : 0;
        out[i] = checked_sub(x, y);
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

using RealPoly = std::vector<long double>;  // lowest power first

void trim(RealPoly& p) {
    long double scale = 0;
    for (long double c : p) scale = std::max(scale, std::abs(c));
    while (p.size() > 1 && std::abs(p.back()) <= scale * 1e-30L) p.pop_back();
}

long double horner(const RealPoly& p, long double x) {
    long double acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RealPoly derivative(const RealPoly& p) {
    RealPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(static_cast<long double>(i) * p[i]);
    if (d.empty()) d.push_back(0);
    return d;
}

// Negated remainder of a / b.
RealPoly neg_remainder(RealPoly a, const RealPoly& b) {
    const std::size_t db = b.size() - 1;
    if (db == 0) return {0};
    while (a.size() > db) {
        const long double factor = a.back() / b.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= factor * b[i];
        a.pop_back();
    }
    for (auto& c : a) c = -c;
    trim(a);
    return a;
}

std::vector<RealPoly> sturm_chain(const RealPoly& p) {
    std::vector<RealPoly> chain{p, derivative(p)};
    auto normalise = [](RealPoly& q) {
        long double scale = 0;
        for (long double c : q) scale = std::max(scale, std::abs(c));
        // Power-of-two scaling is exact, so exact roots of p stay exact zeros.
        if (scale > 0) {
            int exponent = 0;
            std::frexp(scale, &exponent);
            for (auto& c : q) c = std::ldexp(c, -exponent);
        }
    };
    normalise(chain[0]);
    normalise(chain[1]);
    while (chain.back().size() > 1) {
        RealPoly next = neg_remainder(chain[chain.size() - 2], chain.back());
        if (next.size() == 1 && next[0] == 0) break;
        normalise(next);
        chain.push_back(std::move(next));
    }
    return chain;
}

int sign_changes(const std::vector<RealPoly>& chain, long double x) {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        const long double v = horner(q, x);
        const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

EvenPolynomial::EvenPolynomial(std::vector<std::int64_t> u_coefficients) : u_(std::move(u_coefficients)) {
    while (u_.size() > 1 && u_.back() == 0) u_.pop_back();
    if (u_.empty()) u_.push_back(0);
}

EvenPolynomial EvenPolynomial::from_s_coefficients(const std::vector<std::int64_t>& s_coefficients) {
    std::vector<std::int64_t> u;
    for (std::size_t i = 0; i < s_coefficients.size(); ++i) {
        if (i % 2 == 1) {
            if (s_coefficients[i] != 0) {
                throw InconsistencyError("polynomial has a nonzero odd-power coefficient at s^" + std::to_string(i));
            }
        } else {
            u.push_back(s_coefficients[i]);
        }
    }
    return EvenPolynomial(std::move(u));
}

std::vector<std::int64_t> EvenPolynomial::s_coefficients() const {
    std::vector<std::int64_t> s(2 * u_.size() - 1, 0);
    for (std::size_t i = 0; i < u_.size(); ++i) s[2 * i] = u_[i];
    return s;
}

long double EvenPolynomial::eval_u(long double u) const {
    long double acc = 0;
    for (auto it = u_.rbegin(); it != u_.rend(); ++it) acc = acc * u + static_cast<long double>(*it);
    return acc;
}

EvenPolynomial charpoly(const ChainSpec& spec) {
    const int m = spec.rhombus_count();
    if (m < 2) throw UnsupportedOrder("the characteristic-polynomial recursion needs m >= 2");
    auto n = [&spec](int i) { return static_cast<std::int64_t>(spec.order(i - 1)); };  // 1-based
    auto a = [&n](int i) { return n(i) + 1; };

    // p[j] holds f_j rescaled to integer coefficients.
    std::vector<IntPoly> p(static_cast<std::size_t>(2 * m));
    p[1] = {1};
    p[2] = {0, a(1)};
    for (int i = 1; i <= m - 1; ++i) {
        p[static_cast<std::size_t>(2 * i + 1)] =
            minus(scaled_shift(p[static_cast<std::size_t>(2 * i)], a(i), 1), p[static_cast<std::size_t>(2 * i - 1)]);
        if (i + 1 <= m - 1) {
            p[static_cast<std::size_t>(2 * i + 2)] =
                minus(scaled_shift(p[static_cast<std::size_t>(2 * i + 1)], a(i + 1), 1),
                      scaled_shift(p[static_cast<std::size_t>(2 * i)], checked_mul(n(i), n(i + 1)), 0));
        }
    }
    const IntPoly& odd = p[static_cast<std::size_t>(2 * m - 1)];
    const IntPoly& even = p[static_cast<std::size_t>(2 * m - 2)];
    const std::int64_t am = a(m);
    const IntPoly lhs = minus(scaled_shift(odd, checked_mul(am, am), 2), odd);
    const IntPoly rhs = scaled_shift(even, checked_mul(am, checked_mul(n(m - 1), n(m))), 1);
    return EvenPolynomial::from_s_coefficients(minus(lhs, rhs));
}

std::vector<long double> real_roots_between(const std::vector<long double>& coefficients, long double lo,
                                            long double hi) {
    RealPoly p = coefficients;
    trim(p);
    if (p.size() <= 1) return {};
    const auto chain = sturm_chain(p);
    auto count = [&chain](long double a, long double b) { return sign_changes(chain, a) - sign_changes(chain, b); };

    std::vector<long double> roots;
    std::function<void(long double, long double, int, int)> isolate = [&](long double a, long double b, int k,
                                                                           int depth) {
        if (k <= 0) return;
        const long double mid = 0.5L * (a + b);
        if (k == 1 || depth > 200 || mid <= a || mid >= b) {
            // Single root in (a, b]: bisect on the sign of p.
            long double fa = horner(p, a);
            long double x0 = a;
            long double x1 = b;
            if (horner(p, b) == 0) {
                roots.push_back(b);
                return;
            }
            for (int iter = 0; iter < 400; ++iter) {
                const long double xm = 0.5L * (x0 + x1);
                if (xm <= x0 || xm >= x1) break;
                const long double fm = horner(p, xm);
                if (fm == 0) {
                    x0 = x1 = xm;
                    break;
                }
                if ((fm < 0) == (fa < 0)) {
                    x0 = xm;
                    fa = fm;
                } else {
                    x1 = xm;
                }
            }
            for (int i = 0; i < k; ++i) roots.push_back(0.5L * (x0 + x1));
            return;
        }
        const int left = count(a, mid);
        isolate(a, mid, left, depth + 1);
        isolate(mid, b, k - left, depth + 1);
    };
    isolate(lo, hi, count(lo, hi), 0);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<double> charpoly_roots(const EvenPolynomial& p, double tol) {
    const auto& c = p.u_coefficients();
    const std::size_t degree = c.size() - 1;
    if (degree == 0) return {};

    RealPoly coeffs(c.begin(), c.end());
    long double bound = 1;
    for (std::size_t i = 0; i < degree; ++i) bound = std::max(bound, 1 + std::abs(coeffs[i] / coeffs[degree]));
    const auto u_roots = real_roots_between(coeffs, -bound, bound);
    if (u_roots.size() != degree) {
        std::ostringstream msg;
        msg << "polynomial in u has " << u_roots.size() << " real roots, expected " << degree;
        throw InconsistencyError(msg.str());
    }

    const long double upper = (1.0L + tol) * (1.0L + tol);
    std::vector<double> s_roots;
    s_roots.reserve(2 * degree);
    for (long double u : u_roots) {
        if (u <= 0 || u > upper) {
            std::ostringstream msg;
            msg << "root u = " << static_cast<double>(u) << " gives s outside (-1, 1)";
            throw InconsistencyError(msg.str());
        }
        const double s = static_cast<double>(std::sqrt(u));
        s_roots.push_back(s);
        s_roots.push_back(-s);
    }
    std::sort(s_roots.begin(), s_roots.end(), std::greater<>());
    return s_roots;
}

}  // namespace crnet
