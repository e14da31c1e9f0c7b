// Extended-precision real scalar (113-bit mantissa) for the analytic checks.
#ifndef MPART_REAL_HPP
#define MPART_REAL_HPP

#include <boost/multiprecision/float128.hpp>

#include <string>

#include "mpart/numbers.hpp"

namespace mpart {

using Real = boost::multiprecision::float128;

inline Real to_real(const Integer& z) { return Real(z.get_str()); }

inline Real to_real(const Rational& q) { return to_real(q.get_num()) / to_real(q.get_den()); }

/// Scientific notation with enough digits to round-trip a double plus margin.
inline std::string to_string(const Real& x, int digits = 25) {
  return x.str(digits, std::ios_base::scientific);
}

}  // namespace mpart

#endif  // MPART_REAL_HPP
