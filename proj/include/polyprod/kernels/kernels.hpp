#pragma once

// Data-parallel inner loops with a scalar reference implementation and
// optional SIMD variants. The active table is chosen once at startup from the
// CPU features (override with POLYPROD_ISA=scalar|avx2).

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace polyprod::kernels {

/// Largest modulus accepted by axpy_mod_p. Keeps factor*src + dst below 2^52
/// so the floating-point reduction in the SIMD path is exact.
inline constexpr std::uint32_t kMaxKernelPrime = (1U << 26) - 1;

enum class Isa { scalar, avx2 };

struct KernelTable {
    Isa isa;
    /// dst[i] = (dst[i] + factor * src[i]) mod p, entries in [0, p).
    void (*axpy_mod_p)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor,
                       std::uint32_t p, std::size_t n);
    /// dst[i] ^= src[i]
    void (*xor_rows)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    /// Writes f & ~sigma for every face f with sigma ⊆ f ⊆ allowed, preserving
    /// order; returns the number written. `out` must hold n entries.
    std::size_t (*slice_filter)(const std::uint64_t* faces, std::size_t n, std::uint64_t sigma,
                                std::uint64_t allowed, std::uint64_t* out);
};

const KernelTable& scalar_kernels();
/// nullptr when the variant was not compiled in or the CPU lacks the features.
const KernelTable* avx2_kernels();

const KernelTable& active();
/// Switches the process-wide table; throws if the ISA is unavailable.
void select(Isa isa);

std::string_view isa_name(Isa isa);

}  // namespace polyprod::kernels
