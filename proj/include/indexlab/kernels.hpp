#pragma once

#include <cstddef>
#include <cstdint>

namespace indexlab::kernels {

/* Batched characteristic-polynomial values for the residue-class search.
 *
 * For an element with integral-basis coordinates c, the multiplication
 * matrix is M[j][k] = sum_i c_i T[(i*n + j)*n + k]; the kernels form M, take
 * its characteristic polynomial F by Berkowitz and write F(0), ..., F(n).
 * Layout is structure-of-arrays: coordinate i of element e is
 * coords[i*count + e], and F_e(x) goes to out[x*count + e].
 *
 * The wrap32 variants compute in Z/2^32, which is all the 2-adic search
 * needs. The scalar code is the reference; the AVX2 code runs eight lanes
 * at once and must agree bit for bit. */

enum class Backend { Scalar, Avx2 };

/// Compiled in and supported by the running CPU.
bool avx2_available();

/// Avx2 when available unless INDEXLAB_SIMD=scalar is set.
Backend default_backend();

const char* backend_name(Backend b);

/// table: n^3 structure constants mod 2^32. Requesting Avx2 when it is not
/// available falls back to the scalar path.
void char_values_wrap32(Backend b, int n, const std::uint32_t* table, const std::uint32_t* coords, std::size_t count,
                        std::uint32_t* out);

inline void char_values_wrap32(int n, const std::uint32_t* table, const std::uint32_t* coords, std::size_t count,
                               std::uint32_t* out)
{
    char_values_wrap32(default_backend(), n, table, coords, count, out);
}

/// Same computation in Z/q for 1 < q < 2^31; table and coords reduced mod q.
void char_values_mod(int n, std::uint32_t q, const std::uint32_t* table, const std::uint32_t* coords, std::size_t count,
                     std::uint32_t* out);

}  // namespace indexlab::kernels
