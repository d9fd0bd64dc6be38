#pragma once

// Shared by the scalar and AVX2 translation units; keep it free of
// anything with external linkage besides templates instantiated on
// TU-local ring types.

#include <cstddef>
#include <cstdint>

#include "indexlab/berkowitz.hpp"

namespace indexlab::kernels::detail {

/// F(0..n) for one element; `table` holds ring values, `c` the coordinates.
template <class Ring>
inline void char_values_one(const Ring& ring, int n, const typename Ring::value_type* table,
                            const typename Ring::value_type* c, typename Ring::value_type* values)
{
    using V = typename Ring::value_type;
    V m[kMaxDegree * kMaxDegree];
    for (int jk = 0; jk < n * n; ++jk) m[jk] = ring.zero();
    for (int i = 0; i < n; ++i) {
        const V* slab = table + i * n * n;
        for (int jk = 0; jk < n * n; ++jk) m[jk] = ring.add(m[jk], ring.mul(c[i], slab[jk]));
    }
    V chi[kMaxDegree + 1];
    berkowitz(ring, m, n, chi);
    for (int x = 0; x <= n; ++x) {
        const V vx = ring.from_int(x);
        V acc = chi[n];
        for (int d = n - 1; d >= 0; --d) acc = ring.add(ring.mul(acc, vx), chi[d]);
        values[x] = acc;
    }
}

}  // namespace indexlab::kernels::detail

extern "C" {
// Raw entry points; defined in separate TUs so that only one of them is
// compiled with -mavx2.
void indexlab_char_values_wrap32_scalar(int n, const std::uint32_t* table, const std::uint32_t* coords, std::size_t count,
                                        std::uint32_t* out);
void indexlab_char_values_wrap32_avx2(int n, const std::uint32_t* table, const std::uint32_t* coords, std::size_t count,
                                      std::uint32_t* out);
void indexlab_char_values_mod_scalar(int n, std::uint32_t q, const std::uint32_t* table, const std::uint32_t* coords,
                                     std::size_t count, std::uint32_t* out);
}
