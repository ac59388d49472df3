#pragma once

#include "polyprod/kernels/kernels.hpp"

namespace polyprod::kernels {

namespace scalar {
void axpy_mod_p(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                std::size_t n);
void xor_rows(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
std::size_t slice_filter(const std::uint64_t* faces, std::size_t n, std::uint64_t sigma,
                         std::uint64_t allowed, std::uint64_t* out);
}  // namespace scalar

#if defined(POLYPROD_HAVE_AVX2)
namespace avx2 {
void axpy_mod_p(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                std::size_t n);
void xor_rows(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
std::size_t slice_filter(const std::uint64_t* faces, std::size_t n, std::uint64_t sigma,
                         std::uint64_t allowed, std::uint64_t* out);
}  // namespace avx2
#endif

}  // namespace polyprod::kernels
