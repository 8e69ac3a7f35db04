#pragma once

#include "support/bigcomplex.hpp"
#include "support/rational.hpp"

namespace gzp {

template <class K>
struct ScalarOps;

template <>
struct ScalarOps<GQ> {
    static constexpr bool exact = true;
    static GQ zero() { return GQ(); }
    static GQ one() { return GQ(1); }
    static GQ from_long(long n) { return GQ(n); }
    static bool is_zero(const GQ& x) { return x.is_zero(); }
    static BC to_complex(const GQ& x, long prec) { return BC::of(x, prec); }
    static std::string str(const GQ& x) { return to_string(x); }
};

template <>
struct ScalarOps<BC> {
    static constexpr bool exact = false;
    static BC zero() { return BC(); }
    static BC one() { return BC::of(1.0); }
    static BC from_long(long n) { return BC::of(static_cast<double>(n)); }
    static bool is_zero(const BC& x) { return x.is_zero(); }
    static BC to_complex(const BC& x, long prec) { return {x.re.with_prec(prec), x.im.with_prec(prec)}; }
    static std::string str(const BC& x) { return x.str(); }
};

}  // namespace gzp
