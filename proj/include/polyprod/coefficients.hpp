#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace polyprod {

/// Coefficient ring for (co)homology: the integers, the rationals or F_p.
class Coefficients {
public:
    enum class Kind { integers, rationals, prime };

    static Coefficients integers() { return Coefficients(Kind::integers, 0); }
    static Coefficients rationals() { return Coefficients(Kind::rationals, 0); }
    /// Throws InputError unless p is a prime below 2^32.
    static Coefficients prime_field(std::uint64_t p);
    /// "z", "q" or "p:<prime>".
    static Coefficients parse(std::string_view text);

    Coefficients() = default;

    Kind kind() const { return kind_; }
    std::uint32_t prime() const { return prime_; }
    bool is_field() const { return kind_ != Kind::integers; }
    std::string to_string() const;

    friend bool operator==(const Coefficients&, const Coefficients&) = default;

private:
    Coefficients(Kind k, std::uint32_t p) : kind_(k), prime_(p) {}

    Kind kind_ = Kind::integers;
    std::uint32_t prime_ = 0;
};

}  // namespace polyprod
