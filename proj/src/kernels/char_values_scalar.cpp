#include "char_values.hpp"

using indexlab::kMaxDegree;
using indexlab::kernels::detail::char_values_one;

extern "C" void indexlab_char_values_wrap32_scalar(int n, const std::uint32_t* table, const std::uint32_t* coords,
                                                   std::size_t count, std::uint32_t* out)
{
    const indexlab::Wrap32Ring ring;
    std::uint32_t c[kMaxDegree], v[kMaxDegree + 1];
    for (std::size_t e = 0; e < count; ++e) {
        for (int i = 0; i < n; ++i) c[i] = coords[static_cast<std::size_t>(i) * count + e];
        char_values_one(ring, n, table, c, v);
        for (int x = 0; x <= n; ++x) out[static_cast<std::size_t>(x) * count + e] = v[x];
    }
}

extern "C" void indexlab_char_values_mod_scalar(int n, std::uint32_t q, const std::uint32_t* table,
                                                const std::uint32_t* coords, std::size_t count, std::uint32_t* out)
{
    const indexlab::ModRing ring{q};
    std::uint64_t t[kMaxDegree * kMaxDegree * kMaxDegree];
    for (int i = 0; i < n * n * n; ++i) t[i] = table[i];
    std::uint64_t c[kMaxDegree], v[kMaxDegree + 1];
    for (std::size_t e = 0; e < count; ++e) {
        for (int i = 0; i < n; ++i) c[i] = coords[static_cast<std::size_t>(i) * count + e];
        char_values_one(ring, n, t, c, v);
        for (int x = 0; x <= n; ++x) out[static_cast<std::size_t>(x) * count + e] = static_cast<std::uint32_t>(v[x]);
    }
}
