#include "hyperpi/catalog.hpp"

namespace hyperpi {

// The shipped catalog. Every entry is re-verified at load time, so editing
// a constant here cannot silently ship a wrong identity.
std::string_view builtin_catalog_text() {
    static const char text[] = R"cat(# Built-in catalog of weighted hypergeometric identities for 1/pi and the
# algebraic transformations that connect them.
#
# The field tag groups entries by the singular-value field their constants
# live in. Translation refuses to move an identity through a transformation
# with a different tag.

# Bauer's series (1859): sum (1 + 4n) (1/2)_n^3 / n!^3 (-1)^n = 2/pi.
[identity bauer]
upper = 1/2, 1/2, 1/2
lower = 1, 1
a = 1
b = 4
x0 = -1
mu_q = 2
mu_d = 1
field = 2

# From Ramanujan's 1914 list: the terms are (3 + 40n) (4n)! / (n!^4 28^(4n)),
# since (4n)!/(256^n n!^4) is the (1/4, 1/2, 3/4) coefficient and
# 256 * 2401 = 28^4. The value is 49 sqrt(3) / (9 pi).
[identity ramanujan42]
upper = 1/4, 1/2, 3/4
lower = 1, 1
a = 3
b = 40
x0 = 1/2401
mu_q = 49/9
mu_d = 3
field = 2

# sum (1 + 6n) (1/2)_n^3 / n!^3 (1/4)^n = 4/pi.
[identity sixn4pi]
upper = 1/2, 1/2, 1/2
lower = 1, 1
a = 1
b = 6
x0 = 1/4
mu_q = 4
mu_d = 1
field = 3

# Chudnovsky brothers' series: (6n)!/((3n)! n!^3) are the (1/6, 1/2, 5/6)
# coefficients scaled by 1728^n, and 1728 * 151931373056000 = 640320^3.
# Delivers about 14 digits per term.
[identity chudnovsky]
upper = 1/6, 1/2, 5/6
lower = 1, 1
a = 13591409
b = 545140134
x0 = -1/151931373056000
mu_q = 426880
mu_d = 10005
field = 163

# Quartic pullback eq6: writes the (1/2, 1/2, 1/2) series F as
# r(x) * G(y(x)) with G the (1/4, 1/2, 3/4) series. The modular curve
# below pins y and r as algebraic functions of x; the parametrization
# gives them exactly, with p0 the parameter value over x = -1, where the
# y-curve's fiber degenerates to a node at y = 1/2401.
[transformation eq6]
source_upper = 1/4, 1/2, 3/4
source_lower = 1, 1
target_upper = 1/2, 1/2, 1/2
target_lower = 1, 1
field = 2
curve_y = 1*x^0*w^4 + 262144*x^1*w^1 + -319488*x^1*w^2 + 77328*x^1*w^3 + -776*x^1*w^4 + -294912*x^2*w^1 + 59879520*x^2*w^2 + 32464800*x^2*w^3 + 225820*x^2*w^4 + 57600*x^3*w^1 + -368357760*x^3*w^2 + 766436080*x^3*w^3 + -29207864*x^3*w^4 + 256*x^4*w^0 + -512*x^4*w^1 + 621134400*x^4*w^2 + -1484710208*x^4*w^3 + 1416920134*x^4*w^4 + 57600*x^5*w^1 + -368357760*x^5*w^2 + 766436080*x^5*w^3 + -29207864*x^5*w^4 + -294912*x^6*w^1 + 59879520*x^6*w^2 + 32464800*x^6*w^3 + 225820*x^6*w^4 + 262144*x^7*w^1 + -319488*x^7*w^2 + 77328*x^7*w^3 + -776*x^7*w^4 + 1*x^8*w^4
curve_r = 531441*x^0*w^0 + -551124*x^0*w^2 + 19926*x^0*w^4 + -244*x^0*w^6 + 1*x^0*w^8 + 551124*x^1*w^2 + -319788*x^1*w^4 + -102948*x^1*w^6 + -388*x^1*w^8 + 19926*x^2*w^4 + 102948*x^2*w^6 + 37638*x^2*w^8 + 244*x^3*w^6 + -388*x^3*w^8 + 1*x^4*w^8
seed_y = 0, 0, 0, -1/1024
seed_r = 1, 1/8, 27/512
param_x = ( -32*p^1 + -16*p^2 + 72*p^3 + 20*p^4 + -56*p^5 + 16*p^7 + -4*p^8 ) / ( 1*p^0 + -12*p^1 + 60*p^2 + -160*p^3 + 240*p^4 + -192*p^5 + 64*p^6 )
param_y = ( 32*p^3 + -208*p^4 + 480*p^5 + -384*p^6 + -192*p^7 + 528*p^8 + -320*p^9 + 64*p^10 ) / ( 1*p^0 + -8*p^1 + 24*p^2 + -16*p^3 + -88*p^4 + 240*p^5 + -128*p^6 + -416*p^7 + 792*p^8 + -224*p^9 + -800*p^10 + 960*p^11 + -160*p^12 + -448*p^13 + 384*p^14 + -128*p^15 + 16*p^16 )
param_r = ( 1*p^0 + -6*p^1 + 12*p^2 + -8*p^3 ) / ( 1*p^0 + -2*p^1 + 4*p^3 + -2*p^4 )
p0 = /(-(1,sqrt(-(45,*(18,sqrt(6))))),2)
)cat";
    return text;
}

} // namespace hyperpi
