#pragma once

#include <gmpxx.h>

namespace ihara {

using BigInt = mpz_class;
using Rational = mpq_class;

} // namespace ihara
