#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace podpart {

// Exact integer used for every coefficient and count in the library.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

// Throws std::invalid_argument on malformed input.
inline BigInt from_decimal(std::string_view s) { return BigInt(std::string(s), 10); }

inline bool divisible_by(const BigInt& v, const BigInt& u)
{
    return mpz_divisible_p(v.get_mpz_t(), u.get_mpz_t()) != 0;
}

}  // namespace podpart
