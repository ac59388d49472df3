#include "polyprod/coefficients.hpp"

#include <charconv>

#include "polyprod/errors.hpp"

namespace polyprod {
namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

}  // namespace

Coefficients Coefficients::prime_field(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
        throw InputError("coefficient modulus " + std::to_string(p) + " is not a prime below 2^32");
    return Coefficients(Kind::prime, static_cast<std::uint32_t>(p));
}

Coefficients Coefficients::parse(std::string_view text) {
    if (text == "z" || text == "Z")
        return integers();
    if (text == "q" || text == "Q")
        return rationals();
    if (text.size() > 2 && (text[0] == 'p' || text[0] == 'P') && text[1] == ':') {
        std::uint64_t p = 0;
        const auto digits = text.substr(2);
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc{} && ptr == digits.data() + digits.size())
            return prime_field(p);
    }
    throw InputError("unknown coefficients '" + std::string(text) + "' (expected z, q or p:<prime>)");
}

std::string Coefficients::to_string() const {
    switch (kind_) {
        case Kind::integers:
            return "z";
        case Kind::rationals:
            return "q";
        case Kind::prime:
            return "p:" + std::to_string(prime_);
    }
    return "z";
}

}  // namespace polyprod
