#include "kernels_internal.hpp"

namespace polyprod::kernels::scalar {

void axpy_mod_p(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                std::size_t n) {
    const std::uint64_t f = factor;
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
}

void xor_rows(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] ^= src[i];
}

std::size_t slice_filter(const std::uint64_t* faces, std::size_t n, std::uint64_t sigma,
                         std::uint64_t allowed, std::uint64_t* out) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t f = faces[i];
        if ((f & sigma) == sigma && (f & ~allowed) == 0)
            out[k++] = f & ~sigma;
    }
    return k;
}

}  // namespace polyprod::kernels::scalar
