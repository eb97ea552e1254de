"""Published closed forms, typed in by hand, used as comparison targets.

Everything computed by the package is derived independently; the strings
here are only ever compared against derived values.  Where the printed
grouping is unbalanced or mixes weights, the reading chosen is recorded in
``SUSPECT_READINGS`` so reports can label it.

Symbols ``U0, U1, U2`` stand for ``x0**d, x1**d, x2**d`` in the forms that
are symbolic in the exponent ``d``.
"""

# Total Hecke operator T(p^d) of genus 2 in spherical variables, two
# printed shapes; both carry the factor p^-1 * x0^d in front.
TOTAL_HECKE_DENOMINATOR = ["1 - x1", "1 - x2", "1 - x1*x2", "x1 - x2"]

TOTAL_HECKE_EXPANDED = (
    "p^-1*U0*(p*x1^3*U1*x2 - p*x1^2*U1 - p*x1^3*U1*x2^2*U2 + p*x1^2*U1*x2^3*U2"
    " - p*x1*x2^3*U2 + p*x2^2*U2 + p*x1 - p*x2 - x1^2*U1*x2^2 + x1*U1*x2"
    " + x1^2*U1*x2*U2 - x1*U1*x2^2*U2 + x1^2*x2^2*U2 - x1*x2*U2 - x1^2*x2 + x1*x2^2)"
)

TOTAL_HECKE_GROUPED = (
    "-p^-1*U0*((1 - x1*x2)*(p*x1 - x2)*x1*U1 + (1 - x1*x2)*(x1 - p*x2)*x2*U2"
    " - (1 - p*x1*x2)*(x1 - x2)*x1*x2*U1*U2 - (p - x1*x2)*(x1 - x2))"
)

# The sixteen-term Rankin sum: (sign, numerator, denominator factors).
# The last denominator factor of each term is its pole.
_XA = ["p^2", "1 - x1", "1 - x2", "x1 - x2"]
_XB = ["p^2", "1 - x1", "1 - x2", "1 - x1*x2"]
_YA = ["1 - y1", "1 - y2", "y1 - y2"]
_YB = ["1 - y1", "1 - y2", "1 - y1*y2"]

RANKIN_TERMS = [
    (-1, "(p*x1 - x2)*(1 - p*y1*y2)*x1*y1*y2", _XA + _YB + ["1 - x0*x1*y0*y1*y2*X"]),
    (+1, "x2*y1*(x1 - p*x2)*(p*y1 - y2)", _XA + _YA + ["1 - x0*x2*y0*y1*X"]),
    (+1, "x2*y2*(x1 - p*x2)*(y1 - p*y2)",
     ["p^2", "1 - x1", "1 - x2", "x1 - x1"] + _YA + ["1 - x0*y0*x2*y2*X"]),
    (-1, "x2*y1*y2*(x1 - p*x2)*(1 - p*y1*y2)", _XA + _YB + ["1 - x0*x2*y0*y1*y2*X"]),
    (-1, "x1*(p*x1 - x2)*(p - y1*y2)", _XA + _YB + ["1 - x0*x1*y0*X"]),
    (-1, "x1*x2*y1*(1 - p*x1*x2)*(p*y1 - y2)", _XB + _YA + ["1 - x0*x1*x2*y0*y1*X"]),
    (-1, "x1*x2*y2*(1 - p*x1*x2)*(y1 - p*y2)", _XB + _YA + ["1 - x0*x1*x2*y0*y2*X"]),
    (+1, "y1*y2*(p - x1*x2)*(1 - p*y1*y2)", _XB + _YB + ["1 - x0*y0*y1*y2*X"]),
    (+1, "x1*x2*(1 - p*x1*x2)*(p - y1*y2)", _XB + _YB + ["1 - x0*x1*x2*y0*X"]),
    (-1, "x1*y1*(p*x1 - x2)*(p*y1 - y2)", _XA + _YA + ["1 - x0*x1*y0*y1*X"]),
    (+1, "x1*y2*(p*x1 - x2)*(y1 - p*y2)", _XA + _YA + ["1 - x0*x1*y0*y2*X"]),
    (-1, "x2*(x1 - p*x2)*(p - y1*y2)", _XA + _YB + ["1 - x0*x2*y0*X"]),
    (+1, "x1*x2*y1*y2*(1 - p*x1*x2)*(1 - p*y1*y2)", _XB + _YB + ["1 - x0*x1*x2*y0*y1*y2*X"]),
    (+1, "(p - x1*x2)*(p - y1*y2)", _XB + _YB + ["1 - x0*y0*X"]),
    (-1, "y1*(p - x1*x2)*(p*y1 - y2)", _XB + _YA + ["1 - x0*y0*y1*X"]),
    (-1, "y2*(p - x1*x2)*(y1 - p*y2)", _XB + _YA + ["1 - x0*y0*y2*X"]),
]

# Index of the printed term whose denominator repeats x1 and the corrected factor.
RANKIN_TYPO = (2, "x1 - x1", "x1 - x2")

RANKIN_DENOMINATOR = [
    "1 - x0*y0*X", "1 - x0*y0*x1*X", "1 - x0*y0*y1*X", "1 - x0*y0*x2*X", "1 - x0*y0*y2*X",
    "1 - x0*y0*x1*y1*X", "1 - x0*y0*x1*x2*X", "1 - x0*y0*x1*y2*X", "1 - x0*y0*y1*x2*X",
    "1 - x0*y0*y1*y2*X", "1 - x0*y0*x2*y2*X", "1 - x0*y0*x1*y1*x2*X", "1 - x0*y0*x1*y1*y2*X",
    "1 - x0*y0*x1*x2*y2*X", "1 - x0*y0*y1*x2*y2*X", "1 - x0*y0*x1*y1*x2*y2*X",
]
RANKIN_QUADRATIC_FACTOR = "1 - x0^2*y0^2*x1*y1*x2*y2*X^2"
RANKIN_LEADING_TERM = "p^-2*x0^12*y0^12*x1^6*x2^6*y1^6*y2^6*X^12"

# Genus-1 Rankin sum, four-term and closed shapes.
GENUS1_RANKIN_TERMS = [
    (+1, "1", ["1 - x1", "1 - y1", "1 - x0*y0*X"]),
    (-1, "y1", ["1 - x1", "1 - y1", "1 - x0*y0*y1*X"]),
    (-1, "x1", ["1 - x1", "1 - y1", "1 - x0*y0*x1*X"]),
    (+1, "x1*y1", ["1 - x1", "1 - y1", "1 - x0*y0*x1*y1*X"]),
]
GENUS1_RANKIN_CLOSED = (
    "1 - x0^2*y0^2*x1*y1*X^2",
    ["1 - x0*y0*x1*y1*X", "1 - x0*y0*x1*X", "1 - x0*y0*y1*X", "1 - x0*y0*X"],
)

# Genus-1 tensor series in Hecke generators: numerator and denominator by power of X.
GENUS1_TENSOR_NUMERATOR = ["1", "0", "-p^2 P⊗P"]
GENUS1_TENSOR_DENOMINATOR = [
    "1", "-T⊗T", "p(T^2⊗P + P⊗T^2) - 2p^2 P⊗P", "-p^2 TP⊗TP", "p^4 P^2⊗P^2",
]

SYMMETRIC_SQUARE = (
    "(1 + x0^2*x1*X + x0^2*x2*X + 2*x0^2*x1*x2*X + x0^2*x1*x2^2*X + x0^2*x1^2*x2*X"
    " + x0^4*x1^2*x2^2*X^2)*(1 - x0^2*x1*x2*p^-1*X)",
    ["1 - x0^2*x1^2*x2^2*X", "1 - x0^2*x1^2*X", "1 - x0^2*x2^2*X", "1 - x0^2*X"],
)

CUBIC = (
    "p^-1*(-p + x0^6*x1^4*x2^2*X^2 + x0^6*x1^2*x2^4*X^2 + 2*x0^6*x1^2*x2^3*X^2"
    " - p*x0^6*x1^4*x2^4*X^2 - p*x0^6*x1^2*x2^4*X^2 - 2*p*x0^3*x1^2*x2*X + x0^6*x1*x2^3*X^2"
    " + x0^6*x1^3*x2*X^2 + x0^6*x1^3*x2^5*X^2 + x0^6*x1^5*x2^3*X^2 + 3*x0^6*x1^3*x2^3*X^2"
    " + x0^6*x1^2*x2^2*X^2 + 2*x0^6*x1^3*x2^2*X^2 - p*x0^3*x1^2*X - p*x0^3*x2^2*X"
    " - p*x0^6*x1^4*x2^2*X^2 - 2*p*x0^3*x1*x2^2*X - p*x0^6*x1^2*x2^2*X^2 + x0^3*x1^2*x2*X"
    " + x0^3*x1*x2*X - p*x0^6*x1^2*x2^3*X^2 - p*x0^6*x1^3*x2^2*X^2 - p*x0^3*x1^2*x2^3*X"
    " - p*x0^3*x1^3*x2^2*X - 2*p*x0^3*x1^2*x2^2*X - p*x0^3*x1^3*x2*X + x0^3*x1^2*x2*X"
    " + x0^9*x1^4*x2^4*X^3 - 2*p*x0^6*x1^3*x2^3*X^2 - 2*p*x0^3*x1*x2*X + x0^9*x1^4*x2^5*X^3"
    " + x0^9*x1^5*x2^4*X^3 - p*x0^6*x1^3*x2^4*X^2 + x0^3*x1*x2^2*X + x0^9*x1^5*x2^5*X^3"
    " + x0^6*x1^4*x2^4*X^2 - p*x0^6*x1^4*x2^3*X^2 - p*x0^3*x1*x2^3*X - p*x0^3*x2*X"
    " - p*x0^3*x1*X + 2*x0^6*x1^4*x2^3*X^2 + 2*x0^6*x1^3*x2^4*X^2)",
    ["1 - x0^3*X", "1 - x0^3*x1^3*X", "1 - x0^3*x2^3*X", "1 - x0^3*x1^3*x2^3*X"],
)

# Coefficients of R(X) and S(X) in tensor notation (T = T(p), T1 = T_1(p^2),
# P = [p]).  Juxtaposition multiplies; each "A ⊗ B" is one tensor monomial.
R_COEFFS = {
    2: "p^2((2p-1)(p^2+1)P⊗P - (p^2-p+1)(T1⊗P + P⊗T1)"
       " - (T1⊗T1 + T^2⊗P + P⊗T^2))",
    3: "p^3(p+1)(2P⊗P + T1⊗P + P⊗T1)T⊗T",
    4: "-p^5((p^7+2p^6-2p^5+6p^4+p^3+6p^2+p+2)P^2⊗P^2"
       " - (p^2+1)(p^3-3p^2-p-3)(T1⊗P + P⊗T1)P⊗P + (p+4)(p^2+1)T1P⊗T1P"
       " - (p^3-p^2-1)(T1^2⊗P^2 + P^2⊗T1^2) + (T1⊗P + P⊗T1)T1⊗T1"
       " - p(p^3+2p^2-p+2)(T^2⊗P + P⊗T^2)P⊗P - 2p(T^2⊗T1 + T1⊗T^2)P⊗P"
       " + p^2(T^2T1⊗P^2 + P^2⊗T^2T1) + (p+2)T^2P⊗T^2P)",
    5: "-p^7((2(p+1)(2p^4 - p^3 + p^2 - 1)P⊗P + (p+1)(p-2)(T1⊗P + P⊗T1)"
       " - 2T1⊗T1 - p(p+1)(T^2⊗P + P⊗T^2))TP⊗TP)",
    6: "-p^10(p(p^2+1)(p^5 - 2p^3 - 8p^2 - p - 4)P^3⊗P^3"
       " - p(p^5 + 4p^4 + 2p^3 + 12p^2 + p + 6)(T1⊗P + P⊗T1)P^2⊗P^2"
       " + p(p-4)(p^2+1)T1P^2⊗T1P^2 - p(p+4)(p^2+1)(T1^2⊗P^2 + P^2⊗T1^2)P⊗P"
       " - p(T1⊗P + P⊗T1)T1P⊗T1P - p(T1^3⊗P^3 + P^3⊗T1^3)"
       " - (p^5 - 4p^2 - p - 2)(T^2⊗P + P⊗T^2)P^2⊗P^2"
       " + (p^2 + 3)(T^2⊗T1 + T1⊗T^2)P^2⊗P^2 + (T^2P⊗T1^2 + T1^2⊗T^2P)P⊗P"
       " + (p^3 + 3p^2 + p + 1)(T^2T1⊗P^2 + P^2⊗T^2T1)P⊗P"
       " + (T^2⊗P + P⊗T^2)T1P⊗T1P + (p^2 + 1)T^2P^2⊗T^2P^2)",
    7: "-p^13((2(p+1)(p^3 + p - 1)P⊗P - (p+1)(p^2 - 2p + 2)(T1⊗P + P⊗T1)"
       " - 2T1⊗T1 - (p+1)(T^2⊗P + P⊗T^2))TP^2⊗TP^2)",
    8: "-p^16((p(2p^6 + 3p^5 + 6p^4 - p^3 + 6p^2 - p + 2)P^2⊗P^2"
       " + p(p^2+1)(p^3 + 3p^2 - p + 3)(T1⊗P + P⊗T1)P⊗P + p(p+4)(p^2+1)T1P⊗T1P"
       " + p(p^2 - p + 1)(T1^2⊗P^2 + P^2⊗T1^2) + p(T1⊗P + P⊗T1)T1⊗T1"
       " - p(2p^3 + p^2 + 2p - 1)(T^2⊗P + P⊗T^2)P⊗P - 2p^2(T^2⊗T1 + T1⊗T^2)P⊗P"
       " + p(T^2T1⊗P^2 + P^2⊗T^2T1) + (2p+1)T^2P⊗T^2P)P^2⊗P^2)",
    9: "p^20(p+1)(2P⊗P + T1⊗P + P⊗T1)TP^3⊗TP^3",
    10: "p^24((p^2+1)(p^4 + 2p^3 - p^2 - 1)P⊗P + (p^3 - p^2 - 1)(T1⊗P + P⊗T1)"
        " - T1⊗T1 - p^2(T^2⊗P + P⊗T^2))P^4⊗P^4",
    11: "0",
    12: "p^34P^6⊗P^6",
}

S_COEFFS = {
    1: "-T⊗T",
    2: "-p(2p(p^2 + 1)^2 P⊗P + 2p(p^2 + 1)(T1⊗P + P⊗T1) + 2pT1⊗T1"
       " - (p^2 + 1)(T^2⊗P + P⊗T^2) - (T^2⊗T1 + T1⊗T^2))",
    3: "p^2(((2p^4 + 4p^2 - 1)P⊗P + (2p^2 - 1)(T1⊗P + P⊗T1) - T1⊗T1"
       " - p(T^2⊗P + P⊗T^2))T⊗T)",
    4: "p^4((p^8 + 12p^6 + 10p^4 + 4p^2 + 1)P^2⊗P^2"
       " + 2(3p^6 + 5p^4 + 3p^2 + 1)(T1⊗P + P⊗T1)P⊗P + 4(p^2 + 1)^2 T1P⊗T1P"
       " + (3p^4 + 2p^2 + 1)(T1^2⊗P^2 + P^2⊗T1^2) + 2(p^2 + 1)(T1⊗P + P⊗T1)T1⊗T1"
       " + T1^2⊗T1^2 - 2p(p^4 + 4p^2 + 1)(T^2⊗P + P⊗T^2)P⊗P"
       " - 4p(p^2 + 1)(T^2⊗T1 + T1⊗T^2)P⊗P - 2p(T^2P⊗T1^2 + T1^2⊗T^2P)"
       " - 4p^3(T^2T1⊗P^2 + P^2⊗T^2T1) + (p^2 + 2)T^2P⊗T^2P"
       " + (T1⊗P + P⊗T1)T^2⊗T^2 + p^2(T^4⊗P^2 + P^2⊗T^4))",
    5: "-p^6(((6p^6 + 2p^4 - p^2 + 2)P^2⊗P^2 + (p^4 - p^2 + 3)(T1⊗P + P⊗T1)P⊗P"
       " + (3p^2 + 4)T1P⊗T1P - (2p^2 - 1)(T1^2⊗P^2 + P^2⊗T1^2)"
       " + (T1⊗P + P⊗T1)T1⊗T1 - p(2p^2 + 1)(T^2⊗P + P⊗T^2)P⊗P"
       " - 2p(T^2⊗T1 + T1⊗T^2)P⊗P + p(T^2T1⊗P^2 + P^2⊗T^2T1) + T^2P⊗T^2P)T⊗T)",
    6: "-p^8(2p^2(p^8 + 6p^6 + 11p^4 + 8p^2 + 2)P^3⊗P^3"
       " + 2p^2(5p^4 + 12p^2 + 6)T1P^2⊗T1P^2 + (3p^4 + 10p^2 - 1)T^2P^2⊗T^2P^2"
       " - T^2T1P⊗T^2T1P + 2p^2(3p^6 + 11p^4 + 12p^2 + 4)(T1⊗P + P⊗T1)P^2⊗P^2"
       " + 6p^2(p^2 + 1)^2(T1^2⊗P^2 + P^2⊗T1^2)P⊗P"
       " + 6p^2(p^2 + 1)(T1⊗P + P⊗T1)T1P⊗T1P + 2p^2(p^2 + 1)(T1^3⊗P^3 + P^3⊗T1^3)"
       " + 2p^2(T1^2⊗P^2 + P^2⊗T1^2)T1⊗T1"
       " - p(5p^6 + 13p^4 + 10p^2 + 2)(T^2⊗P + P⊗T^2)P^2⊗P^2"
       " - p(7p^4 + 12p^2 + 4)(T^2⊗T1 + T1⊗T^2)P^2⊗P^2"
       " - 3p(p^2 + 1)(T^2P⊗T1^2 + T1^2⊗T^2P)P⊗P - p(T^2P^2⊗T1^3 + T1^3⊗T^2P^2)"
       " - 2p(3p^4 + 4p^2 + 1)(T^2T1⊗P^2 + P^2⊗T^2T1)P⊗P"
       " - 2p(3p^2 + 1)(T^2⊗P + P⊗T^2)T1P⊗T1P"
       " - p(p^2 + 1)(T^2T1^2⊗P^3 + P^3⊗T^2T1^2) - p(T^2T1⊗P^2 + P^2⊗T^2T1)T1⊗T1"
       " + (5p^2 - 1)(T1⊗P + P⊗T1)T^2P⊗T^2P + 2p^2(p^2 + 1)(T^4⊗P^2 + P^2⊗T^4)P⊗P"
       " + 2p^2(T^4⊗T1P + T1P⊗T^4)P⊗P - p(T^4⊗T^4P + T^4P⊗T^4)P⊗P)",
    7: "p^11(p(5p^6 - 2p^4 + 2)TP^3⊗TP^3 + 8pTT1P^2⊗TT1P^2 + pT^3P^2⊗T^3P^2"
       " - p(p^4 - 3)(T1⊗P + P⊗T1)TP^2⊗TP^2 - p(T1^2⊗P^2 + P^2⊗T1^2)TP⊗TP"
       " + 2p(T1⊗P + P⊗T1)TT1P⊗TT1P - p(T1^3⊗P^3 + P^3⊗T1^3)T⊗T"
       " - (3p^4 - 3p^2 + 2)(T^2⊗P + P⊗T^2)TP^2⊗TP^2"
       " + (p^2 - 3)(T^2⊗T1 + T1⊗T^2)TP^2⊗TP^2 - (T^2P⊗T1^2 + T1^2⊗T^2P)TP⊗TP"
       " + (2p^2 - 1)(T^2T1⊗P^2 + P^2⊗T^2T1)TP⊗TP - (T^2⊗P + P⊗T^2)TT1P⊗TT1P)",
    8: "p^14(2p^2(2p^8 + 4p^6 + 14p^4 + 12p^2 + 3)P^4⊗P^4"
       " + 4p^2(p^6 + 7p^4 + 9p^2 + 3)(T1⊗P + P⊗T1)P^3⊗P^3 + 16p^2(p^2 + 1)^2 T1P^3⊗T1P^3"
       " + 2p^2(3p^4 + 10p^2 + 5)(T1^2⊗P^2 + P^2⊗T1^2)P^2⊗P^2"
       " + 8p^2(p^2 + 1)(T1⊗P + P⊗T1)T1P^2⊗T1P^2 + 4p^2 T1^2P^2⊗T1^2P^2"
       " + 4p^2(p^2 + 1)(T1^3⊗P^3 + P^3⊗T1^3)P⊗P + p^2(T1^4⊗P^4 + P^4⊗T1^4)"
       " - 4p(2p^6 + 3p^4 + 4p^2 + 1)(T^2⊗P + P⊗T^2)P^3⊗P^3"
       " - 8p(p^2 + 1)^2(T^2⊗T1 + T1⊗T^2)P^3⊗P^3"
       " - 4p(p^2 + 1)(T^2P⊗T1^2 + T1^2⊗T^2P)P^2⊗P^2"
       " - 4p(p^4 + 4p^2 + 1)(T^2T1⊗P^2 + P^2⊗T^2T1)P^2⊗P^2"
       " - 8p(p^2 + 1)(T^2⊗P + P⊗T^2)T1P^2⊗T1P^2 - 4p(T^2⊗T1 + T1⊗T^2)T1P^2⊗T1P^2"
       " - 4p^3(T^2T1^2⊗P^3 + P^3⊗T^2T1^2)P⊗P"
       " + 2(5p^4 + 2p^2 + 2)T^2P^3⊗T^2P^3 + 2(p^2 + 2)(T1⊗P + P⊗T1)T^2P^2⊗T^2P^2"
       " + 2T^2T1P^2⊗T^2T1P^2 + (T1^2⊗P^2 + P^2⊗T1^2)T^2P⊗T^2P"
       " + (3p^4 + 2p^2 + 1)(T^4⊗P^2 + P^2⊗T^4)P^2⊗P^2"
       " + 2(p^2 + 1)(T^4⊗T1P + T1P⊗T^4)P^2⊗P^2 + (T^4⊗T1^2 + T1^2⊗T^4)P^2⊗P^2"
       " - 2p(T^2⊗P + P⊗T^2)T^2P^2⊗T^2P^2)",
}

# Alternative readings of spots whose printed grouping is unbalanced or
# ambiguous; the key is (series, index).
ALTERNATIVE_READINGS = {
    ("R", 2): "p^2((2p-1)(p^2+1)P⊗P - (p^2-p+1)(T1⊗P + P⊗T1))"
              " - (T1⊗T1 + T^2⊗P + P⊗T^2)",
    ("R", 8): R_COEFFS[8].replace("-p^16((p(", "-p^16(p(").replace(
        "(2p+1)T^2P⊗T^2P)P^2⊗P^2)", "(2p+1)(T^2P⊗T^2P)(P^2⊗P^2))"),
    ("S", 6): S_COEFFS[6].replace("- p(T^4⊗T^4P + T^4P⊗T^4)P⊗P)",
                                  "- p(T^4⊗T^2P + T^2P⊗T^4)P⊗P)"),
    ("S", 8): S_COEFFS[8].replace("- 4p^3(T^2T1^2⊗P^3 + P^3⊗T^2T1^2)P⊗P",
                                  "- 4p^3(T^2T1^2⊗P^3 + P^3⊗T^2T1^2) + P⊗P"),
}

SUSPECT_READINGS = {
    ("R", 2): "closing parenthesis missing; read as enclosing every group",
    ("R", 5): "unbalanced and mixed weight; bracket read as multiplying TP⊗TP",
    ("R", 7): "mixed weight; bracket read as multiplying TP^2⊗TP^2",
    ("R", 8): "two tensor monomials run together and mixed weight; trailing P^2⊗P^2 "
              "read as multiplying the whole bracket",
    ("S", 2): "closing parenthesis missing; read as enclosing every group",
    ("S", 3): "mixed weight; bracket read as multiplying T⊗T",
    ("S", 5): "mixed weight and run-together monomials; bracket read as multiplying T⊗T",
    ("S", 6): "closing parenthesis missing; last term mixes weights as printed "
              "(alternative reads T^4⊗T^2P + T^2P⊗T^4)",
    ("S", 7): "closing parenthesis missing; read as enclosing every group",
    ("S", 8): "stray '+ P⊗P' read as a factor of the preceding term",
}

# Hodge type of the tensor product of two genus-2 spinor motives of weights
# k and l, row by row as printed; the third entry is the diagonal tag.
HODGE_TENSOR_PRINTED = [
    ("0", "2k+2l-6", ""), ("l-2", "2k+l-4", ""), ("l-1", "2k+l-5", ""), ("2l-3", "2k-3", ""),
    ("k-2", "k+2l-4", ""), ("k+l-4", "k+l-2", ""), ("k+l-3", "k+l-3", "+"), ("k+2l-5", "k-1", ""),
    ("k-1", "k+2l-5", ""), ("k+l-3", "k+l-3", "-"), ("k+l-2", "k+l-4", ""), ("k+2l-4", "k-2", ""),
    ("2k-3", "2l-3", ""), ("2k+l-5", "l-1", ""), ("2k+l-4", "l-2", ""), ("2k+2l-6", "0", ""),
]
HODGE_SPINOR_GENUS2 = [("0", "2k-3"), ("k-2", "k-1"), ("k-1", "k-2"), ("2k-3", "0")]
