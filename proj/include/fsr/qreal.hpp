// Math shims so the numeric kernels can be instantiated with __float128.
// The truncation-error probe needs it: the h^5/h^6 residual signals of the
// fifth/sixth-order schemes on fine grids sit below double round-off.
//
// std::abs already covers __float128 in GNU mode; the transcendentals come
// from libquadmath. Unqualified calls in namespace fsr resolve to these
// overloads for quad and to the std functions (via using or ADL) for
// double, long double and std::complex.
#pragma once

#include <cmath>

#if defined(__GNUC__) && defined(__x86_64__) && !defined(FSR_NO_QUADMATH)
#define FSR_HAVE_QUAD 1
extern "C" {
__float128 sqrtq(__float128);
__float128 sinq(__float128);
__float128 cosq(__float128);
__float128 powq(__float128, __float128);
__float128 expq(__float128);
__float128 logq(__float128);
}

namespace fsr {
using quad = __float128;
inline quad sqrt(quad x) { return sqrtq(x); }
inline quad sin(quad x) { return sinq(x); }
inline quad cos(quad x) { return cosq(x); }
inline quad pow(quad x, quad y) { return powq(x, y); }
inline quad exp(quad x) { return expq(x); }
inline quad log(quad x) { return logq(x); }
} // namespace fsr
#else
#define FSR_HAVE_QUAD 0
#endif

namespace fsr {
using std::abs;
using std::cos;
using std::exp;
using std::log;
using std::pow;
using std::sin;
using std::sqrt;
} // namespace fsr
