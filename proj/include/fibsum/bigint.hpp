#pragma once

#include <gmpxx.h>

#include <string>

namespace fibsum {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

}  // namespace fibsum
