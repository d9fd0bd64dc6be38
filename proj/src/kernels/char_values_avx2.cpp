// Compiled with -mavx2. Only reached after a runtime CPU check.

#include <immintrin.h>

#include "char_values.hpp"

namespace {

struct Avx2Wrap32Ring {
    using value_type = __m256i;
    value_type zero() const { return _mm256_setzero_si256(); }
    value_type one() const { return _mm256_set1_epi32(1); }
    value_type from_int(long v) const { return _mm256_set1_epi32(static_cast<int>(v)); }
    value_type add(value_type a, value_type b) const { return _mm256_add_epi32(a, b); }
    value_type sub(value_type a, value_type b) const { return _mm256_sub_epi32(a, b); }
    value_type mul(value_type a, value_type b) const { return _mm256_mullo_epi32(a, b); }
    value_type neg(value_type a) const { return _mm256_sub_epi32(_mm256_setzero_si256(), a); }
};

constexpr int kLanes = 8;
constexpr int kMax = indexlab::kMaxDegree;

}  // namespace

extern "C" void indexlab_char_values_wrap32_avx2(int n, const std::uint32_t* table, const std::uint32_t* coords,
                                                 std::size_t count, std::uint32_t* out)
{
    const Avx2Wrap32Ring ring;
    __m256i t[kMax * kMax * kMax];
    for (int i = 0; i < n * n * n; ++i) t[i] = _mm256_set1_epi32(static_cast<int>(table[i]));

    std::size_t e = 0;
    __m256i c[kMax], v[kMax + 1];
    for (; e + kLanes <= count; e += kLanes) {
        for (int i = 0; i < n; ++i)
            c[i] = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(coords + static_cast<std::size_t>(i) * count + e));
        indexlab::kernels::detail::char_values_one(ring, n, t, c, v);
        for (int x = 0; x <= n; ++x)
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + static_cast<std::size_t>(x) * count + e), v[x]);
    }
    if (e == count) return;

    // Tail: pad a lane block with zeros.
    alignas(32) std::uint32_t cbuf[kMax][kLanes] = {};
    alignas(32) std::uint32_t vbuf[kMax + 1][kLanes];
    const std::size_t rest = count - e;
    for (int i = 0; i < n; ++i)
        for (std::size_t l = 0; l < rest; ++l) cbuf[i][l] = coords[static_cast<std::size_t>(i) * count + e + l];
    for (int i = 0; i < n; ++i) c[i] = _mm256_load_si256(reinterpret_cast<const __m256i*>(cbuf[i]));
    indexlab::kernels::detail::char_values_one(ring, n, t, c, v);
    for (int x = 0; x <= n; ++x) {
        _mm256_store_si256(reinterpret_cast<__m256i*>(vbuf[x]), v[x]);
        for (std::size_t l = 0; l < rest; ++l) out[static_cast<std::size_t>(x) * count + e + l] = vbuf[x][l];
    }
}
