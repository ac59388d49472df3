#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace polyprod::kernels {
namespace {

constexpr KernelTable kScalar{Isa::scalar, &scalar::axpy_mod_p, &scalar::xor_rows, &scalar::slice_filter};

#if defined(POLYPROD_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::avx2, &avx2::axpy_mod_p, &avx2::xor_rows, &avx2::slice_filter};

bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}
#endif

const KernelTable* pick_default() {
    const char* forced = std::getenv("POLYPROD_ISA");
    if (forced != nullptr && std::string(forced) == "scalar")
        return &kScalar;
    if (const KernelTable* t = avx2_kernels())
        return t;
    return &kScalar;
}

std::atomic<const KernelTable*>& slot() {
    static std::atomic<const KernelTable*> table{pick_default()};
    return table;
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable* avx2_kernels() {
#if defined(POLYPROD_HAVE_AVX2)
    static const bool ok = cpu_has_avx2();
    return ok ? &kAvx2 : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() { return *slot().load(std::memory_order_relaxed); }

void select(Isa isa) {
    if (isa == Isa::scalar) {
        slot().store(&kScalar);
        return;
    }
    const KernelTable* t = avx2_kernels();
    if (t == nullptr)
        throw std::runtime_error("avx2 kernels are not available on this build or CPU");
    slot().store(t);
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

}  // namespace polyprod::kernels
