#include <cstdlib>
#include <cstring>

#include "char_values.hpp"
#include "indexlab/kernels.hpp"

namespace indexlab::kernels {

bool avx2_available()
{
#if defined(INDEXLAB_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
#else
    return false;
#endif
}

Backend default_backend()
{
    const char* env = std::getenv("INDEXLAB_SIMD");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

void char_values_wrap32(Backend b, int n, const std::uint32_t* table, const std::uint32_t* coords, std::size_t count,
                        std::uint32_t* out)
{
#ifdef INDEXLAB_HAVE_AVX2
    if (b == Backend::Avx2 && avx2_available()) {
        indexlab_char_values_wrap32_avx2(n, table, coords, count, out);
        return;
    }
#else
    (void)b;
#endif
    indexlab_char_values_wrap32_scalar(n, table, coords, count, out);
}

void char_values_mod(int n, std::uint32_t q, const std::uint32_t* table, const std::uint32_t* coords, std::size_t count,
                     std::uint32_t* out)
{
    indexlab_char_values_mod_scalar(n, q, table, coords, count, out);
}

}  // namespace indexlab::kernels
