#pragma once

#include <cstdint>

namespace indexlab {

inline constexpr int kMaxDegree = 7;

/* Rings usable with berkowitz(): they expose value_type plus add, sub, mul,
 * neg, zero, one and from_int. No division is ever needed, so the same
 * routine runs over Z, over Z/2^32 with wrapping arithmetic, over Z/q, and
 * over SIMD lane vectors of any of those. IntegerRing lives in integer.hpp
 * so this header stays free of GMP for the vector kernels. */

struct Wrap32Ring {
    using value_type = std::uint32_t;
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const { return static_cast<std::uint32_t>(v); }
    value_type add(value_type a, value_type b) const { return a + b; }
    value_type sub(value_type a, value_type b) const { return a - b; }
    value_type mul(value_type a, value_type b) const { return a * b; }
    value_type neg(value_type a) const { return 0u - a; }
};

/// Z/q for q < 2^32, residues kept in [0, q).
struct ModRing {
    std::uint64_t q;
    using value_type = std::uint64_t;
    value_type zero() const { return 0; }
    value_type one() const { return 1 % q; }
    value_type from_int(long v) const
    {
        long r = v % static_cast<long>(q);
        return static_cast<value_type>(r < 0 ? r + static_cast<long>(q) : r);
    }
    value_type add(value_type a, value_type b) const { return (a + b) % q; }
    value_type sub(value_type a, value_type b) const { return (a + q - b) % q; }
    value_type mul(value_type a, value_type b) const { return (a * b) % q; }
    value_type neg(value_type a) const { return (q - a) % q; }
};

/* Characteristic polynomial det(xI - A) of the n x n row-major matrix `a`,
 * written to out[0..n] in ascending order (out[n] = 1).
 *
 * Samuelson-Berkowitz recurrence: with A_{r+1} = [[A_r, C], [R, a_rr]],
 * chi_{r+1} = T * chi_r where T is the lower-triangular Toeplitz matrix with
 * first column (1, -a_rr, -R C, -R A_r C, ..., -R A_r^{r-1} C). */
template <class Ring>
void berkowitz(const Ring& ring, const typename Ring::value_type* a, int n, typename Ring::value_type* out)
{
    using V = typename Ring::value_type;
    V poly[kMaxDegree + 1];  // descending coefficients of chi_r
    V next[kMaxDegree + 1];
    V q[kMaxDegree + 2];
    V v[kMaxDegree];
    V w[kMaxDegree];
    poly[0] = ring.one();
    poly[1] = ring.neg(a[0]);
    for (int r = 1; r < n; ++r) {
        q[0] = ring.one();
        q[1] = ring.neg(a[r * n + r]);
        for (int i = 0; i < r; ++i) v[i] = a[i * n + r];
        for (int k = 2; k <= r + 1; ++k) {
            V dot = ring.zero();
            for (int i = 0; i < r; ++i) dot = ring.add(dot, ring.mul(a[r * n + i], v[i]));
            q[k] = ring.neg(dot);
            if (k == r + 1) break;
            for (int i = 0; i < r; ++i) {
                V acc = ring.zero();
                for (int j = 0; j < r; ++j) acc = ring.add(acc, ring.mul(a[i * n + j], v[j]));
                w[i] = acc;
            }
            for (int i = 0; i < r; ++i) v[i] = w[i];
        }
        for (int i = 0; i <= r + 1; ++i) {
            V acc = ring.zero();
            for (int j = 0; j <= r && j <= i; ++j) acc = ring.add(acc, ring.mul(q[i - j], poly[j]));
            next[i] = acc;
        }
        for (int i = 0; i <= r + 1; ++i) poly[i] = next[i];
    }
    for (int i = 0; i <= n; ++i) out[i] = poly[n - i];
}

}  // namespace indexlab
