#include "support/bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace gzp {

std::string BigFloat::str(size_t digits) const {
    if (is_nan()) return "nan";
    if (!is_finite()) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    if (digits == 0) digits = static_cast<size_t>(prec() * 0.30103) + 2;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    bool neg = !m.empty() && m[0] == '-';
    if (neg) m.erase(0, 1);
    while (m.size() > 1 && m.back() == '0') m.pop_back();
    // m is the mantissa, value = 0.m * 10^e
    std::string out;
    long ex = static_cast<long>(e);
    if (ex > 0 && ex <= static_cast<long>(m.size())) {
        out = m.substr(0, ex);
        if (ex < static_cast<long>(m.size())) out += "." + m.substr(ex);
    } else if (ex <= 0 && ex > -6) {
        out = "0." + std::string(static_cast<size_t>(-ex), '0') + m;
    } else {
        out = m.substr(0, 1);
        if (m.size() > 1) out += "." + m.substr(1);
        out += "e" + std::to_string(ex - 1);
    }
    return neg ? "-" + out : out;
}

}  // namespace gzp
