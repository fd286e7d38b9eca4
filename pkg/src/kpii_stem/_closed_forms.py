"""Derived closed-form stem geometry tables.

Generated by tools/generate_closed_forms.py; do not edit by hand.

VERTEX[case][key](k1, k2, k3, p3) -> (xt, xL, yt, yL): the meeting point
of the three tau-function terms named by `key` sits at
(xt*t + xL*log_a12, yt*t + yL*log_a12) for the first constraint branch
with zero phase constants.  SEGMENT[case][(edge, ends)] -> (st, sL, g):
the separation of the two junctions flanking `edge` has length
|st*t + sL*log_a12| * sqrt(g).  Keys are sorted tuples of term
exponent vectors over (xi1, xi2, xi3).
"""

from math import sqrt  # noqa: F401  (kept for generated expressions)

def _v0(k1, k2, k3, p3):
    xt = -(-4*k1**2*k2*k3**2 - 4*k1**2*k3**3 + 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 - 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3**3 - 4*k2**2*k3*p3 - 9*k2*k3**4 - 6*k2*k3**2*p3 + 3*k2*p3**2 - 6*k3**5 + 6*k3*p3**2)/(k3**2*(k1 + k2 + 2*k3))
    xL = 0
    yt = 2*(2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 - 3*k2*k3**2 + 3*k2*p3 + 6*k3*p3)/(k3*(k1 + k2 + 2*k3))
    yL = 0
    return (xt, xL, yt, yL)

def _v1(k1, k2, k3, p3):
    xt = -(-4*k1**2*k2*k3**2 - 4*k1**2*k3**3 + 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 - 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3**3 - 4*k2**2*k3*p3 - 9*k2*k3**4 - 6*k2*k3**2*p3 + 3*k2*p3**2 - 6*k3**5 + 6*k3*p3**2)/(k3**2*(k1 + k2 + 2*k3))
    xL = -(k1*k3 + k3**2 + p3)/(k2*k3*(k1 + k2 + 2*k3))
    yt = 2*(2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 - 3*k2*k3**2 + 3*k2*p3 + 6*k3*p3)/(k3*(k1 + k2 + 2*k3))
    yL = 1/(k2*(k1 + k2 + 2*k3))
    return (xt, xL, yt, yL)

def _v2(k1, k2, k3, p3):
    xt = -(-4*k1*k2*k3**2 + 4*k1*k3*p3 - 4*k2*k3**3 - 4*k2*k3*p3 - k3**4 + 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = -(k1*k3 + k3**2 + p3)/(k3*(k2 + k3)*(k1 + k2 + k3))
    yt = 2*(2*k1*k3 - 2*k2*k3 + k3**2 + 3*p3)/k3
    yL = 1/((k2 + k3)*(k1 + k2 + k3))
    return (xt, xL, yt, yL)

def _v3(k1, k2, k3, p3):
    xt = -(-4*k1**2*k2*k3**2 - 4*k1**2*k3**3 + 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 - 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3**3 - 4*k2**2*k3*p3 - 9*k2*k3**4 - 6*k2*k3**2*p3 + 3*k2*p3**2 - 6*k3**5 + 6*k3*p3**2)/(k3**2*(k1 + k2 + 2*k3))
    xL = (-k2*k3 - k3**2 + p3)/(k1*k3*(k1 + k2 + 2*k3))
    yt = 2*(2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 - 3*k2*k3**2 + 3*k2*p3 + 6*k3*p3)/(k3*(k1 + k2 + 2*k3))
    yL = -1/(k1*(k1 + k2 + 2*k3))
    return (xt, xL, yt, yL)

def _v4(k1, k2, k3, p3):
    xt = -(-4*k1*k2*k3**2 - 4*k1*k3**3 + 4*k1*k3*p3 - 4*k2*k3*p3 - k3**4 - 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = (-k2*k3 - k3**2 + p3)/(k3*(k1 + k3)*(k1 + k2 + k3))
    yt = 2*(2*k1*k3 - 2*k2*k3 - k3**2 + 3*p3)/k3
    yL = -1/((k1 + k3)*(k1 + k2 + k3))
    return (xt, xL, yt, yL)

def _v5(k1, k2, k3, p3):
    xt = -(4*k1**2*k3*p3 - 4*k1*k2*k3*p3 - k1*k3**4 + 2*k1*k3**2*p3 + 3*k1*p3**2 + 4*k2**2*k3*p3 + k2*k3**4 + 2*k2*k3**2*p3 - 3*k2*p3**2)/(k3**2*(k1 - k2))
    xL = p3/(k3*(k1 - k2)*(k1 + k2 + k3))
    yt = 2*(2*k1**2*k3 - 2*k1*k2*k3 + k1*k3**2 + 3*k1*p3 + 2*k2**2*k3 + k2*k3**2 - 3*k2*p3)/(k3*(k1 - k2))
    yL = -1/((k1 - k2)*(k1 + k2 + k3))
    return (xt, xL, yt, yL)

def _v6(k1, k2, k3, p3):
    xt = -(-4*k1**2*k2*k3**2 - 4*k1**2*k3**3 + 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 - 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3**3 - 4*k2**2*k3*p3 - 9*k2*k3**4 - 6*k2*k3**2*p3 + 3*k2*p3**2 - 6*k3**5 + 6*k3*p3**2)/(k3**2*(k1 + k2 + 2*k3))
    xL = -(k1**2*k3 + k1*k3**2 + k1*p3 + k2**2*k3 + k2*k3**2 - k2*p3)/(k1*k2*k3*(k1 + k2 + 2*k3))
    yt = 2*(2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 - 3*k2*k3**2 + 3*k2*p3 + 6*k3*p3)/(k3*(k1 + k2 + 2*k3))
    yL = (k1 - k2)/(k1*k2*(k1 + k2 + 2*k3))
    return (xt, xL, yt, yL)

def _v7(k1, k2, k3, p3):
    xt = -(-4*k1**2*k2*k3**2 + 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 - 4*k1*k2*k3**3 - k1*k3**4 + 2*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3*p3 - k2*k3**4 - 2*k2*k3**2*p3 + 3*k2*p3**2)/(k3**2*(k1 + k2))
    xL = -(k1**2*k3 + k1*k3**2 + k1*p3 + k2**2*k3 + k2*k3**2 - k2*p3)/(k3*(k1 + k2)*(k1 + k3)*(k2 + k3))
    yt = 2*(2*k1**2*k3 + k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 - k2*k3**2 + 3*k2*p3)/(k3*(k1 + k2))
    yL = (k1 - k2)/((k1 + k2)*(k1 + k3)*(k2 + k3))
    return (xt, xL, yt, yL)

def _v8(k1, k2, k3, p3):
    xt = -(-4*k2*k3*p3 - k3**4 - 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = -p3/(k2*k3*(k2 + k3))
    yt = 2*(-2*k2*k3 - k3**2 + 3*p3)/k3
    yL = 1/(k2*(k2 + k3))
    return (xt, xL, yt, yL)

def _v9(k1, k2, k3, p3):
    xt = -(4*k1*k3*p3 - k3**4 + 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = p3/(k1*k3*(k1 + k3))
    yt = 2*(2*k1*k3 + k3**2 + 3*p3)/k3
    yL = -1/(k1*(k1 + k3))
    return (xt, xL, yt, yL)

def _s10(k1, k2, k3, p3):
    st = 0
    sL = 1/(k1*k2*(k1 + k2 + 2*k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s11(k1, k2, k3, p3):
    st = 4*k3*(k1 + k3)/(k1*(k1 + k2 + 2*k3))
    sL = 1/(k1*(k2 + k3)*(k1 + k2 + k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s12(k1, k2, k3, p3):
    st = 4*k3*(k1 + k3)/(k1*(k1 + k2 + 2*k3))
    sL = -k3*(k1 + k3)/(k1*k2*(k2 + k3)*(k1 + k2 + k3)*(k1 + k2 + 2*k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s13(k1, k2, k3, p3):
    st = 0
    sL = -1/(k1*k2*(k1 + k2 + 2*k3))
    g = k2**2*(k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s14(k1, k2, k3, p3):
    st = -4*k3*(k2 + k3)/(k2*(k1 + k2 + 2*k3))
    sL = -1/(k2*(k1 + k3)*(k1 + k2 + k3))
    g = k2**2*(k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s15(k1, k2, k3, p3):
    st = -4*k3*(k2 + k3)/(k2*(k1 + k2 + 2*k3))
    sL = k3*(k2 + k3)/(k1*k2*(k1 + k3)*(k1 + k2 + k3)*(k1 + k2 + 2*k3))
    g = k2**2*(k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s16(k1, k2, k3, p3):
    st = 0
    sL = -1/(k1*k2*(k1 + k2 + 2*k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 - 2*k1**2*k2**2*k3**2 - 2*k1**2*k2*k3**3 + 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 - 2*k1*k2**2*k3**3 - 2*k1*k2**2*k3*p3 - 2*k1*k2*k3**4 + 2*k1*k2*k3**2 + 2*k1*k2*p3**2 + k2**4*k3**2 + 2*k2**3*k3**3 - 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s17(k1, k2, k3, p3):
    st = 4*(k1 + k3)*(k2 + k3)/((k1 - k2)*(k1 + k2 + 2*k3))
    sL = -(k1 + k3)/(k2*(k1 - k2)*(k1 + k2 + k3)*(k1 + k2 + 2*k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 - 2*k1**2*k2**2*k3**2 - 2*k1**2*k2*k3**3 + 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 - 2*k1*k2**2*k3**3 - 2*k1*k2**2*k3*p3 - 2*k1*k2*k3**4 + 2*k1*k2*k3**2 + 2*k1*k2*p3**2 + k2**4*k3**2 + 2*k2**3*k3**3 - 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s18(k1, k2, k3, p3):
    st = 4*(k1 + k3)*(k2 + k3)/((k1 - k2)*(k1 + k2 + 2*k3))
    sL = -(k2 + k3)/(k1*(k1 - k2)*(k1 + k2 + k3)*(k1 + k2 + 2*k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 - 2*k1**2*k2**2*k3**2 - 2*k1**2*k2*k3**3 + 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 - 2*k1*k2**2*k3**3 - 2*k1*k2**2*k3*p3 - 2*k1*k2*k3**4 + 2*k1*k2*k3**2 + 2*k1*k2*p3**2 + k2**4*k3**2 + 2*k2**3*k3**3 - 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s19(k1, k2, k3, p3):
    st = -4*k3/(k1 + k2 + k3)
    sL = -(k1 + k2 + 2*k3)/((k1 + k3)*(k2 + k3)*(k1 + k2 + k3)**2)
    g = (k1 + k2 + k3)**2*(k1**2*k3**2 - 2*k1*k2*k3**2 + 2*k1*k3*p3 + k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s20(k1, k2, k3, p3):
    st = 4*k2*(k1 + k3)/((k1 - k2)*(k1 + k2 + k3))
    sL = -(k1 + k3)/((k1 - k2)*(k2 + k3)*(k1 + k2 + k3)**2)
    g = (k1 + k2 + k3)**2*(k1**2*k3**2 - 2*k1*k2*k3**2 + 2*k1*k3*p3 + k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s21(k1, k2, k3, p3):
    st = 4*k1*(k2 + k3)/((k1 - k2)*(k1 + k2 + k3))
    sL = -(k2 + k3)/((k1 - k2)*(k1 + k3)*(k1 + k2 + k3)**2)
    g = (k1 + k2 + k3)**2*(k1**2*k3**2 - 2*k1*k2*k3**2 + 2*k1*k3*p3 + k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s22(k1, k2, k3, p3):
    st = 0
    sL = -1/(k1*k2*(k1 + k2 + 2*k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 + 2*k1**2*k2**2*k3**2 + 2*k1**2*k2*k3**3 - 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 + 2*k1*k2**2*k3**3 + 2*k1*k2**2*k3*p3 + 2*k1*k2*k3**4 - 2*k1*k2*k3**2 - 2*k1*k2*p3**2 + k2**4*k3**2 + 2*k2**3*k3**3 - 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s23(k1, k2, k3, p3):
    st = -4*k3*(k1 + k2 + k3)/((k1 + k2)*(k1 + k2 + 2*k3))
    sL = -1/((k1 + k2)*(k1 + k3)*(k2 + k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 + 2*k1**2*k2**2*k3**2 + 2*k1**2*k2*k3**3 - 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 + 2*k1*k2**2*k3**3 + 2*k1*k2**2*k3*p3 + 2*k1*k2*k3**4 - 2*k1*k2*k3**2 - 2*k1*k2*p3**2 + k2**4*k3**2 + 2*k2**3*k3**3 - 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s24(k1, k2, k3, p3):
    st = -4*k3*(k1 + k2 + k3)/((k1 + k2)*(k1 + k2 + 2*k3))
    sL = k3*(k1**2 + k1*k3 + k2**2 + k2*k3)/(k1*k2*(k1 + k2)*(k1 + k3)*(k2 + k3)*(k1 + k2 + 2*k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 + 2*k1**2*k2**2*k3**2 + 2*k1**2*k2*k3**3 - 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 + 2*k1*k2**2*k3**3 + 2*k1*k2**2*k3*p3 + 2*k1*k2*k3**4 - 2*k1*k2*k3**2 - 2*k1*k2*p3**2 + k2**4*k3**2 + 2*k2**3*k3**3 - 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s25(k1, k2, k3, p3):
    st = 0
    sL = -1/(k1*k2*(k1 + k2 + 2*k3))
    g = k2**2*(k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s26(k1, k2, k3, p3):
    st = -4*(k1 + k3)*(k1 + k2 + k3)/(k2*(k1 + k2 + 2*k3))
    sL = (k1 + k3)/(k2**2*(k2 + k3)*(k1 + k2 + 2*k3))
    g = k2**2*(k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s27(k1, k2, k3, p3):
    st = -4*(k1 + k3)*(k1 + k2 + k3)/(k2*(k1 + k2 + 2*k3))
    sL = (k1**2 + k1*k3 + k2**2 + k2*k3)/(k1*k2**2*(k2 + k3)*(k1 + k2 + 2*k3))
    g = k2**2*(k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s28(k1, k2, k3, p3):
    st = -4*k2*k3/((k1 + k2)*(k2 + k3))
    sL = -k2*(k1 + k2 + 2*k3)/((k1 + k2)*(k1 + k3)*(k2 + k3)**2*(k1 + k2 + k3))
    g = (k2 + k3)**2*(k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s29(k1, k2, k3, p3):
    st = -4*(k1 + k3)/(k2 + k3)
    sL = (k1 + k3)/(k2*(k2 + k3)**2*(k1 + k2 + k3))
    g = (k2 + k3)**2*(k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s30(k1, k2, k3, p3):
    st = -4*k1*(k1 + k2 + k3)/((k1 + k2)*(k2 + k3))
    sL = (k1**2 + k1*k3 + k2**2 + k2*k3)/(k2*(k1 + k2)*(k1 + k3)*(k2 + k3)**2)
    g = (k2 + k3)**2*(k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s31(k1, k2, k3, p3):
    st = 0
    sL = 1/(k1*k2*(k1 + k2 + 2*k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s32(k1, k2, k3, p3):
    st = 4*(k2 + k3)*(k1 + k2 + k3)/(k1*(k1 + k2 + 2*k3))
    sL = -(k2 + k3)/(k1**2*(k1 + k3)*(k1 + k2 + 2*k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s33(k1, k2, k3, p3):
    st = 4*(k2 + k3)*(k1 + k2 + k3)/(k1*(k1 + k2 + 2*k3))
    sL = -(k1**2 + k1*k3 + k2**2 + k2*k3)/(k1**2*k2*(k1 + k3)*(k1 + k2 + 2*k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s34(k1, k2, k3, p3):
    st = 4*k1*k3/((k1 + k2)*(k1 + k3))
    sL = k1*(k1 + k2 + 2*k3)/((k1 + k2)*(k1 + k3)**2*(k2 + k3)*(k1 + k2 + k3))
    g = (k1 + k3)**2*(k1**2*k3**2 + 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s35(k1, k2, k3, p3):
    st = 4*(k2 + k3)/(k1 + k3)
    sL = -(k2 + k3)/(k1*(k1 + k3)**2*(k1 + k2 + k3))
    g = (k1 + k3)**2*(k1**2*k3**2 + 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s36(k1, k2, k3, p3):
    st = 4*k2*(k1 + k2 + k3)/((k1 + k2)*(k1 + k3))
    sL = -(k1**2 + k1*k3 + k2**2 + k2*k3)/(k1*(k1 + k2)*(k1 + k3)**2*(k2 + k3))
    g = (k1 + k3)**2*(k1**2*k3**2 + 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s37(k1, k2, k3, p3):
    st = -4*k1*(k1 + k3)/(k3*(k1 - k2))
    sL = k1*(k1 + k3)/(k2*k3*(k1 - k2)*(k2 + k3)*(k1 + k2 + k3))
    g = k3**2 + p3**2
    return (st, sL, g)

def _s38(k1, k2, k3, p3):
    st = -4*k2*(k2 + k3)/(k3*(k1 - k2))
    sL = k2*(k2 + k3)/(k1*k3*(k1 - k2)*(k1 + k3)*(k1 + k2 + k3))
    g = k3**2 + p3**2
    return (st, sL, g)

def _s39(k1, k2, k3, p3):
    st = 4*(k1 + k2 + k3)/k3
    sL = -(k1**2 + k1*k3 + k2**2 + k2*k3)/(k1*k2*k3*(k1 + k3)*(k2 + k3))
    g = k3**2 + p3**2
    return (st, sL, g)

def _v40(k1, k2, k3, p3):
    xt = -(-4*k2*k3*p3 - k3**4 - 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(-2*k2*k3 - k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _v41(k1, k2, k3, p3):
    xt = -(-4*k1*k2*k3**2 - 4*k1*k3**3 + 4*k1*k3*p3 - 4*k2*k3*p3 - k3**4 - 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = (-k2*k3 - k3**2 + p3)/(k3*(k1 + k3)*(k1 + k2 + k3))
    yt = 2*(2*k1*k3 - 2*k2*k3 - k3**2 + 3*p3)/k3
    yL = -1/((k1 + k3)*(k1 + k2 + k3))
    return (xt, xL, yt, yL)

def _v42(k1, k2, k3, p3):
    xt = -(-4*k1*k2*k3**2 + 4*k1*k3*p3 - 4*k2*k3**3 - 4*k2*k3*p3 - k3**4 + 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = (-k2*k3 + p3)/(k1*k3*(k1 + k2 + k3))
    yt = 2*(2*k1*k3 - 2*k2*k3 + k3**2 + 3*p3)/k3
    yL = -1/(k1*(k1 + k2 + k3))
    return (xt, xL, yt, yL)

def _v43(k1, k2, k3, p3):
    xt = -(4*k1*k3*p3 - k3**4 + 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = p3/(k1*k3*(k1 + k3))
    yt = 2*(2*k1*k3 + k3**2 + 3*p3)/k3
    yL = -1/(k1*(k1 + k3))
    return (xt, xL, yt, yL)

def _s44(k1, k2, k3, p3):
    st = 4*k1/k2
    sL = -1/(k2*(k1 + k3)*(k1 + k2 + k3))
    g = k2**2*(k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s45(k1, k2, k3, p3):
    st = 4*(k1 + k3)/(k2 + k3)
    sL = -1/(k1*(k2 + k3)*(k1 + k2 + k3))
    g = (k2 + k3)**2*(k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s46(k1, k2, k3, p3):
    st = 4*k3/(k1 + k2 + k3)
    sL = -k3/(k1*(k1 + k3)*(k1 + k2 + k3)**2)
    g = (k1 + k2 + k3)**2*(k1**2*k3**2 - 2*k1*k2*k3**2 + 2*k1*k3*p3 + k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s47(k1, k2, k3, p3):
    st = 4*(k1 + k2 + k3)/k3
    sL = -1/(k1*k3*(k1 + k3))
    g = k3**2 + p3**2
    return (st, sL, g)

def _s48(k1, k2, k3, p3):
    st = 4*(k2 + k3)/(k1 + k3)
    sL = -(k2 + k3)/(k1*(k1 + k3)**2*(k1 + k2 + k3))
    g = (k1 + k3)**2*(k1**2*k3**2 + 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s49(k1, k2, k3, p3):
    st = 4*k2/k1
    sL = -k2/(k1**2*(k1 + k3)*(k1 + k2 + k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _v50(k1, k2, k3, p3):
    xt = -(4*k1*k3*p3 - k3**4 + 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(2*k1*k3 + k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _v51(k1, k2, k3, p3):
    xt = -(-4*k1*k2*k3**2 + 4*k1*k3*p3 - 4*k2*k3**3 - 4*k2*k3*p3 - k3**4 + 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = -(k1*k3 + k3**2 + p3)/(k3*(k2 + k3)*(k1 + k2 + k3))
    yt = 2*(2*k1*k3 - 2*k2*k3 + k3**2 + 3*p3)/k3
    yL = 1/((k2 + k3)*(k1 + k2 + k3))
    return (xt, xL, yt, yL)

def _v52(k1, k2, k3, p3):
    xt = -(-4*k1*k2*k3**2 - 4*k1*k3**3 + 4*k1*k3*p3 - 4*k2*k3*p3 - k3**4 - 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = -(k1*k3 + p3)/(k2*k3*(k1 + k2 + k3))
    yt = 2*(2*k1*k3 - 2*k2*k3 - k3**2 + 3*p3)/k3
    yL = 1/(k2*(k1 + k2 + k3))
    return (xt, xL, yt, yL)

def _v53(k1, k2, k3, p3):
    xt = -(-4*k2*k3*p3 - k3**4 - 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = -p3/(k2*k3*(k2 + k3))
    yt = 2*(-2*k2*k3 - k3**2 + 3*p3)/k3
    yL = 1/(k2*(k2 + k3))
    return (xt, xL, yt, yL)

def _s54(k1, k2, k3, p3):
    st = -4*k2/k1
    sL = 1/(k1*(k2 + k3)*(k1 + k2 + k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s55(k1, k2, k3, p3):
    st = -4*(k2 + k3)/(k1 + k3)
    sL = 1/(k2*(k1 + k3)*(k1 + k2 + k3))
    g = (k1 + k3)**2*(k1**2*k3**2 + 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s56(k1, k2, k3, p3):
    st = -4*k3/(k1 + k2 + k3)
    sL = k3/(k2*(k2 + k3)*(k1 + k2 + k3)**2)
    g = (k1 + k2 + k3)**2*(k1**2*k3**2 - 2*k1*k2*k3**2 + 2*k1*k3*p3 + k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s57(k1, k2, k3, p3):
    st = -4*(k1 + k2 + k3)/k3
    sL = 1/(k2*k3*(k2 + k3))
    g = k3**2 + p3**2
    return (st, sL, g)

def _s58(k1, k2, k3, p3):
    st = -4*(k1 + k3)/(k2 + k3)
    sL = (k1 + k3)/(k2*(k2 + k3)**2*(k1 + k2 + k3))
    g = (k2 + k3)**2*(k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s59(k1, k2, k3, p3):
    st = -4*k1/k2
    sL = k1/(k2**2*(k2 + k3)*(k1 + k2 + k3))
    g = k2**2*(k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _v60(k1, k2, k3, p3):
    xt = -(4*k1*k3*p3 - k3**4 + 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(2*k1*k3 + k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _v61(k1, k2, k3, p3):
    xt = -(-4*k2*k3*p3 - k3**4 - 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(-2*k2*k3 - k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _v62(k1, k2, k3, p3):
    xt = -(4*k1**2*k3*p3 - 4*k1*k2*k3*p3 - k1*k3**4 + 2*k1*k3**2*p3 + 3*k1*p3**2 + 4*k2**2*k3*p3 + k2*k3**4 + 2*k2*k3**2*p3 - 3*k2*p3**2)/(k3**2*(k1 - k2))
    xL = p3/(k3*(k1 - k2)*(k1 + k2 + k3))
    yt = 2*(2*k1**2*k3 - 2*k1*k2*k3 + k1*k3**2 + 3*k1*p3 + 2*k2**2*k3 + k2*k3**2 - 3*k2*p3)/(k3*(k1 - k2))
    yL = -1/((k1 - k2)*(k1 + k2 + k3))
    return (xt, xL, yt, yL)

def _v63(k1, k2, k3, p3):
    xt = -(-4*k1**2*k2*k3**2 + 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 - 4*k1*k2*k3**3 - k1*k3**4 + 2*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3*p3 - k2*k3**4 - 2*k2*k3**2*p3 + 3*k2*p3**2)/(k3**2*(k1 + k2))
    xL = 0
    yt = 2*(2*k1**2*k3 + k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 - k2*k3**2 + 3*k2*p3)/(k3*(k1 + k2))
    yL = 0
    return (xt, xL, yt, yL)

def _v64(k1, k2, k3, p3):
    xt = -(-4*k1*k2*k3**2 - 4*k1*k3**3 + 4*k1*k3*p3 - 4*k2*k3*p3 - k3**4 - 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = -(k1*k3 + p3)/(k2*k3*(k1 + k2 + k3))
    yt = 2*(2*k1*k3 - 2*k2*k3 - k3**2 + 3*p3)/k3
    yL = 1/(k2*(k1 + k2 + k3))
    return (xt, xL, yt, yL)

def _v65(k1, k2, k3, p3):
    xt = -(-4*k1*k2*k3**2 + 4*k1*k3*p3 - 4*k2*k3**3 - 4*k2*k3*p3 - k3**4 + 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = (-k2*k3 + p3)/(k1*k3*(k1 + k2 + k3))
    yt = 2*(2*k1*k3 - 2*k2*k3 + k3**2 + 3*p3)/k3
    yL = -1/(k1*(k1 + k2 + k3))
    return (xt, xL, yt, yL)

def _v66(k1, k2, k3, p3):
    xt = -(-4*k1**2*k2*k3**2 - 4*k1**2*k3**3 + 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 - 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3**3 - 4*k2**2*k3*p3 - 9*k2*k3**4 - 6*k2*k3**2*p3 + 3*k2*p3**2 - 6*k3**5 + 6*k3*p3**2)/(k3**2*(k1 + k2 + 2*k3))
    xL = 0
    yt = 2*(2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 - 3*k2*k3**2 + 3*k2*p3 + 6*k3*p3)/(k3*(k1 + k2 + 2*k3))
    yL = 0
    return (xt, xL, yt, yL)

def _v67(k1, k2, k3, p3):
    xt = -(-4*k1**2*k2*k3**2 - 4*k1**2*k3**3 + 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 - 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3**3 - 4*k2**2*k3*p3 - 9*k2*k3**4 - 6*k2*k3**2*p3 + 3*k2*p3**2 - 6*k3**5 + 6*k3*p3**2)/(k3**2*(k1 + k2 + 2*k3))
    xL = -(k1*k3 + k3**2 + p3)/(k2*k3*(k1 + k2 + 2*k3))
    yt = 2*(2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 - 3*k2*k3**2 + 3*k2*p3 + 6*k3*p3)/(k3*(k1 + k2 + 2*k3))
    yL = 1/(k2*(k1 + k2 + 2*k3))
    return (xt, xL, yt, yL)

def _v68(k1, k2, k3, p3):
    xt = -(-4*k1**2*k2*k3**2 - 4*k1**2*k3**3 + 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 - 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3**3 - 4*k2**2*k3*p3 - 9*k2*k3**4 - 6*k2*k3**2*p3 + 3*k2*p3**2 - 6*k3**5 + 6*k3*p3**2)/(k3**2*(k1 + k2 + 2*k3))
    xL = (-k2*k3 - k3**2 + p3)/(k1*k3*(k1 + k2 + 2*k3))
    yt = 2*(2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 - 3*k2*k3**2 + 3*k2*p3 + 6*k3*p3)/(k3*(k1 + k2 + 2*k3))
    yL = -1/(k1*(k1 + k2 + 2*k3))
    return (xt, xL, yt, yL)

def _v69(k1, k2, k3, p3):
    xt = -(-4*k1**2*k2*k3**2 - 4*k1**2*k3**3 + 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 - 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3**3 - 4*k2**2*k3*p3 - 9*k2*k3**4 - 6*k2*k3**2*p3 + 3*k2*p3**2 - 6*k3**5 + 6*k3*p3**2)/(k3**2*(k1 + k2 + 2*k3))
    xL = -(k1**2*k3 + k1*k3**2 + k1*p3 + k2**2*k3 + k2*k3**2 - k2*p3)/(k1*k2*k3*(k1 + k2 + 2*k3))
    yt = 2*(2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 - 3*k2*k3**2 + 3*k2*p3 + 6*k3*p3)/(k3*(k1 + k2 + 2*k3))
    yL = (k1 - k2)/(k1*k2*(k1 + k2 + 2*k3))
    return (xt, xL, yt, yL)

def _s70(k1, k2, k3, p3):
    st = -4*(k1 + k2 + k3)/k3
    sL = 0
    g = k3**2 + p3**2
    return (st, sL, g)

def _s71(k1, k2, k3, p3):
    st = 4*k2*(k2 + k3)/(k3*(k1 - k2))
    sL = -1/(k3*(k1 - k2)*(k1 + k2 + k3))
    g = k3**2 + p3**2
    return (st, sL, g)

def _s72(k1, k2, k3, p3):
    st = 4*k1*(k1 + k3)/(k3*(k1 - k2))
    sL = -1/(k3*(k1 - k2)*(k1 + k2 + k3))
    g = k3**2 + p3**2
    return (st, sL, g)

def _s73(k1, k2, k3, p3):
    st = -4*k2*(k1 + k2 + k3)/((k1 + k2)*(k1 + k3))
    sL = 0
    g = (k1 + k3)**2*(k1**2*k3**2 + 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s74(k1, k2, k3, p3):
    st = -4*(k2 + k3)/(k1 + k3)
    sL = 1/(k2*(k1 + k3)*(k1 + k2 + k3))
    g = (k1 + k3)**2*(k1**2*k3**2 + 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s75(k1, k2, k3, p3):
    st = -4*k1*k3/((k1 + k2)*(k1 + k3))
    sL = 1/(k2*(k1 + k3)*(k1 + k2 + k3))
    g = (k1 + k3)**2*(k1**2*k3**2 + 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s76(k1, k2, k3, p3):
    st = 4*k1*(k1 + k2 + k3)/((k1 + k2)*(k2 + k3))
    sL = 0
    g = (k2 + k3)**2*(k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s77(k1, k2, k3, p3):
    st = 4*(k1 + k3)/(k2 + k3)
    sL = -1/(k1*(k2 + k3)*(k1 + k2 + k3))
    g = (k2 + k3)**2*(k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s78(k1, k2, k3, p3):
    st = 4*k2*k3/((k1 + k2)*(k2 + k3))
    sL = -1/(k1*(k2 + k3)*(k1 + k2 + k3))
    g = (k2 + k3)**2*(k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s79(k1, k2, k3, p3):
    st = -4*k1*(k2 + k3)/((k1 - k2)*(k1 + k2 + k3))
    sL = k1/(k2*(k1 - k2)*(k1 + k2 + k3)**2)
    g = (k1 + k2 + k3)**2*(k1**2*k3**2 - 2*k1*k2*k3**2 + 2*k1*k3*p3 + k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s80(k1, k2, k3, p3):
    st = -4*k2*(k1 + k3)/((k1 - k2)*(k1 + k2 + k3))
    sL = k2/(k1*(k1 - k2)*(k1 + k2 + k3)**2)
    g = (k1 + k2 + k3)**2*(k1**2*k3**2 - 2*k1*k2*k3**2 + 2*k1*k3*p3 + k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s81(k1, k2, k3, p3):
    st = 4*k3/(k1 + k2 + k3)
    sL = -(k1 + k2)/(k1*k2*(k1 + k2 + k3)**2)
    g = (k1 + k2 + k3)**2*(k1**2*k3**2 - 2*k1*k2*k3**2 + 2*k1*k3*p3 + k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s82(k1, k2, k3, p3):
    st = -4*(k2 + k3)*(k1 + k2 + k3)/(k1*(k1 + k2 + 2*k3))
    sL = 0
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s83(k1, k2, k3, p3):
    st = -4*(k2 + k3)*(k1 + k2 + k3)/(k1*(k1 + k2 + 2*k3))
    sL = 1/(k1*k2*(k1 + k2 + 2*k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s84(k1, k2, k3, p3):
    st = 0
    sL = 1/(k1*k2*(k1 + k2 + 2*k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s85(k1, k2, k3, p3):
    st = 4*(k1 + k3)*(k1 + k2 + k3)/(k2*(k1 + k2 + 2*k3))
    sL = 0
    g = k2**2*(k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s86(k1, k2, k3, p3):
    st = 4*(k1 + k3)*(k1 + k2 + k3)/(k2*(k1 + k2 + 2*k3))
    sL = -1/(k1*k2*(k1 + k2 + 2*k3))
    g = k2**2*(k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s87(k1, k2, k3, p3):
    st = 0
    sL = -1/(k1*k2*(k1 + k2 + 2*k3))
    g = k2**2*(k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s88(k1, k2, k3, p3):
    st = -4*(k1 + k3)*(k2 + k3)/((k1 - k2)*(k1 + k2 + 2*k3))
    sL = (k1 + k3)/(k2*(k1 - k2)*(k1 + k2 + k3)*(k1 + k2 + 2*k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 - 2*k1**2*k2**2*k3**2 - 2*k1**2*k2*k3**3 + 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 - 2*k1*k2**2*k3**3 - 2*k1*k2**2*k3*p3 - 2*k1*k2*k3**4 + 2*k1*k2*k3**2 + 2*k1*k2*p3**2 + k2**4*k3**2 + 2*k2**3*k3**3 - 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s89(k1, k2, k3, p3):
    st = -4*(k1 + k3)*(k2 + k3)/((k1 - k2)*(k1 + k2 + 2*k3))
    sL = (k2 + k3)/(k1*(k1 - k2)*(k1 + k2 + k3)*(k1 + k2 + 2*k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 - 2*k1**2*k2**2*k3**2 - 2*k1**2*k2*k3**3 + 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 - 2*k1*k2**2*k3**3 - 2*k1*k2**2*k3*p3 - 2*k1*k2*k3**4 + 2*k1*k2*k3**2 + 2*k1*k2*p3**2 + k2**4*k3**2 + 2*k2**3*k3**3 - 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s90(k1, k2, k3, p3):
    st = 0
    sL = -1/(k1*k2*(k1 + k2 + 2*k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 - 2*k1**2*k2**2*k3**2 - 2*k1**2*k2*k3**3 + 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 - 2*k1*k2**2*k3**3 - 2*k1*k2**2*k3*p3 - 2*k1*k2*k3**4 + 2*k1*k2*k3**2 + 2*k1*k2*p3**2 + k2**4*k3**2 + 2*k2**3*k3**3 - 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s91(k1, k2, k3, p3):
    st = 4*k3*(k1 + k2 + k3)/((k1 + k2)*(k1 + k2 + 2*k3))
    sL = 0
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 + 2*k1**2*k2**2*k3**2 + 2*k1**2*k2*k3**3 - 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 + 2*k1*k2**2*k3**3 + 2*k1*k2**2*k3*p3 + 2*k1*k2*k3**4 - 2*k1*k2*k3**2 - 2*k1*k2*p3**2 + k2**4*k3**2 + 2*k2**3*k3**3 - 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s92(k1, k2, k3, p3):
    st = 4*k3*(k1 + k2 + k3)/((k1 + k2)*(k1 + k2 + 2*k3))
    sL = -1/(k1*k2*(k1 + k2 + 2*k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 + 2*k1**2*k2**2*k3**2 + 2*k1**2*k2*k3**3 - 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 + 2*k1*k2**2*k3**3 + 2*k1*k2**2*k3*p3 + 2*k1*k2*k3**4 - 2*k1*k2*k3**2 - 2*k1*k2*p3**2 + k2**4*k3**2 + 2*k2**3*k3**3 - 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s93(k1, k2, k3, p3):
    st = 0
    sL = -1/(k1*k2*(k1 + k2 + 2*k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 + 2*k1**2*k2**2*k3**2 + 2*k1**2*k2*k3**3 - 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 + 2*k1*k2**2*k3**3 + 2*k1*k2**2*k3*p3 + 2*k1*k2*k3**4 - 2*k1*k2*k3**2 - 2*k1*k2*p3**2 + k2**4*k3**2 + 2*k2**3*k3**3 - 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s94(k1, k2, k3, p3):
    st = 4*k3*(k2 + k3)/(k2*(k1 + k2 + 2*k3))
    sL = -k3/(k2**2*(k1 + k2 + k3)*(k1 + k2 + 2*k3))
    g = k2**2*(k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s95(k1, k2, k3, p3):
    st = 4*k3*(k2 + k3)/(k2*(k1 + k2 + 2*k3))
    sL = -(k1 + k2)*(k2 + k3)/(k1*k2**2*(k1 + k2 + k3)*(k1 + k2 + 2*k3))
    g = k2**2*(k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s96(k1, k2, k3, p3):
    st = 0
    sL = -1/(k1*k2*(k1 + k2 + 2*k3))
    g = k2**2*(k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s97(k1, k2, k3, p3):
    st = -4*k3*(k1 + k3)/(k1*(k1 + k2 + 2*k3))
    sL = k3/(k1**2*(k1 + k2 + k3)*(k1 + k2 + 2*k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s98(k1, k2, k3, p3):
    st = -4*k3*(k1 + k3)/(k1*(k1 + k2 + 2*k3))
    sL = (k1 + k2)*(k1 + k3)/(k1**2*k2*(k1 + k2 + k3)*(k1 + k2 + 2*k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s99(k1, k2, k3, p3):
    st = 0
    sL = 1/(k1*k2*(k1 + k2 + 2*k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _v100(k1, k2, k3, p3):
    xt = -(-4*k1**2*k2*k3**2 + 4*k1**2*k3**3 - 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 + 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 + 4*k2**2*k3**3 + 4*k2**2*k3*p3 - 9*k2*k3**4 - 6*k2*k3**2*p3 + 3*k2*p3**2 + 6*k3**5 - 6*k3*p3**2)/(k3**2*(k1 + k2 - 2*k3))
    xL = 0
    yt = 2*(-2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 + 2*k2**2*k3 - 3*k2*k3**2 + 3*k2*p3 - 6*k3*p3)/(k3*(k1 + k2 - 2*k3))
    yL = 0
    return (xt, xL, yt, yL)

def _v101(k1, k2, k3, p3):
    xt = -(-4*k1*k3*p3 - k3**4 + 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(-2*k1*k3 + k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _v102(k1, k2, k3, p3):
    xt = -(-4*k1**2*k2*k3**2 + 4*k1**2*k3**3 - 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 + 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 + 4*k2**2*k3**3 + 4*k2**2*k3*p3 - 9*k2*k3**4 - 6*k2*k3**2*p3 + 3*k2*p3**2 + 6*k3**5 - 6*k3*p3**2)/(k3**2*(k1 + k2 - 2*k3))
    xL = (-k1*k3 + k3**2 + p3)/(k2*k3*(k1 + k2 - 2*k3))
    yt = 2*(-2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 + 2*k2**2*k3 - 3*k2*k3**2 + 3*k2*p3 - 6*k3*p3)/(k3*(k1 + k2 - 2*k3))
    yL = -1/(k2*(k1 + k2 - 2*k3))
    return (xt, xL, yt, yL)

def _v103(k1, k2, k3, p3):
    xt = -(4*k2*k3*p3 - k3**4 - 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(2*k2*k3 - k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _v104(k1, k2, k3, p3):
    xt = -(-4*k1**2*k2*k3**2 + 4*k1**2*k3**3 - 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 + 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 + 4*k2**2*k3**3 + 4*k2**2*k3*p3 - 9*k2*k3**4 - 6*k2*k3**2*p3 + 3*k2*p3**2 + 6*k3**5 - 6*k3*p3**2)/(k3**2*(k1 + k2 - 2*k3))
    xL = -(k2*k3 - k3**2 + p3)/(k1*k3*(k1 + k2 - 2*k3))
    yt = 2*(-2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 + 2*k2**2*k3 - 3*k2*k3**2 + 3*k2*p3 - 6*k3*p3)/(k3*(k1 + k2 - 2*k3))
    yL = 1/(k1*(k1 + k2 - 2*k3))
    return (xt, xL, yt, yL)

def _v105(k1, k2, k3, p3):
    xt = -(-4*k1**2*k3*p3 + 4*k1*k2*k3*p3 - k1*k3**4 + 2*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3*p3 + k2*k3**4 + 2*k2*k3**2*p3 - 3*k2*p3**2)/(k3**2*(k1 - k2))
    xL = -p3/(k3*(k1 - k2)*(k1 + k2 - k3))
    yt = 2*(-2*k1**2*k3 + 2*k1*k2*k3 + k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 + k2*k3**2 - 3*k2*p3)/(k3*(k1 - k2))
    yL = 1/((k1 - k2)*(k1 + k2 - k3))
    return (xt, xL, yt, yL)

def _v106(k1, k2, k3, p3):
    xt = -(-4*k1**2*k2*k3**2 - 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 + 4*k1*k2*k3**3 - k1*k3**4 + 2*k1*k3**2*p3 + 3*k1*p3**2 + 4*k2**2*k3*p3 - k2*k3**4 - 2*k2*k3**2*p3 + 3*k2*p3**2)/(k3**2*(k1 + k2))
    xL = 0
    yt = 2*(-2*k1**2*k3 + k1*k3**2 + 3*k1*p3 + 2*k2**2*k3 - k2*k3**2 + 3*k2*p3)/(k3*(k1 + k2))
    yL = 0
    return (xt, xL, yt, yL)

def _v107(k1, k2, k3, p3):
    xt = -(-4*k1**2*k2*k3**2 + 4*k1**2*k3**3 - 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 + 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 + 4*k2**2*k3**3 + 4*k2**2*k3*p3 - 9*k2*k3**4 - 6*k2*k3**2*p3 + 3*k2*p3**2 + 6*k3**5 - 6*k3*p3**2)/(k3**2*(k1 + k2 - 2*k3))
    xL = (-k1**2*k3 + k1*k3**2 + k1*p3 - k2**2*k3 + k2*k3**2 - k2*p3)/(k1*k2*k3*(k1 + k2 - 2*k3))
    yt = 2*(-2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 + 2*k2**2*k3 - 3*k2*k3**2 + 3*k2*p3 - 6*k3*p3)/(k3*(k1 + k2 - 2*k3))
    yL = -(k1 - k2)/(k1*k2*(k1 + k2 - 2*k3))
    return (xt, xL, yt, yL)

def _v108(k1, k2, k3, p3):
    xt = -(-4*k1*k2*k3**2 + 4*k1*k3**3 - 4*k1*k3*p3 + 4*k2*k3*p3 - k3**4 - 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = (-k1*k3 + p3)/(k2*k3*(k1 + k2 - k3))
    yt = 2*(-2*k1*k3 + 2*k2*k3 - k3**2 + 3*p3)/k3
    yL = -1/(k2*(k1 + k2 - k3))
    return (xt, xL, yt, yL)

def _v109(k1, k2, k3, p3):
    xt = -(-4*k1*k2*k3**2 - 4*k1*k3*p3 + 4*k2*k3**3 + 4*k2*k3*p3 - k3**4 + 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = -(k2*k3 + p3)/(k1*k3*(k1 + k2 - k3))
    yt = 2*(-2*k1*k3 + 2*k2*k3 + k3**2 + 3*p3)/k3
    yL = 1/(k1*(k1 + k2 - k3))
    return (xt, xL, yt, yL)

def _s110(k1, k2, k3, p3):
    st = -4*(k2 - k3)*(k1 + k2 - k3)/(k1*(k1 + k2 - 2*k3))
    sL = 0
    g = k1**2*(k1**2*k3**2 - 2*k1*k3**3 - 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s111(k1, k2, k3, p3):
    st = 0
    sL = -1/(k1*k2*(k1 + k2 - 2*k3))
    g = k1**2*(k1**2*k3**2 - 2*k1*k3**3 - 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s112(k1, k2, k3, p3):
    st = 4*(k2 - k3)*(k1 + k2 - k3)/(k1*(k1 + k2 - 2*k3))
    sL = -1/(k1*k2*(k1 + k2 - 2*k3))
    g = k1**2*(k1**2*k3**2 - 2*k1*k3**3 - 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s113(k1, k2, k3, p3):
    st = 4*(k1 - k3)*(k1 + k2 - k3)/(k2*(k1 + k2 - 2*k3))
    sL = 0
    g = k2**2*(k2**2*k3**2 - 2*k2*k3**3 + 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s114(k1, k2, k3, p3):
    st = 0
    sL = 1/(k1*k2*(k1 + k2 - 2*k3))
    g = k2**2*(k2**2*k3**2 - 2*k2*k3**3 + 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s115(k1, k2, k3, p3):
    st = -4*(k1 - k3)*(k1 + k2 - k3)/(k2*(k1 + k2 - 2*k3))
    sL = 1/(k1*k2*(k1 + k2 - 2*k3))
    g = k2**2*(k2**2*k3**2 - 2*k2*k3**3 + 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s116(k1, k2, k3, p3):
    st = 4*(k1 + k2 - k3)/k3
    sL = 0
    g = k3**2 + p3**2
    return (st, sL, g)

def _s117(k1, k2, k3, p3):
    st = -4*k2*(k2 - k3)/(k3*(k1 - k2))
    sL = 1/(k3*(k1 - k2)*(k1 + k2 - k3))
    g = k3**2 + p3**2
    return (st, sL, g)

def _s118(k1, k2, k3, p3):
    st = -4*k1*(k1 - k3)/(k3*(k1 - k2))
    sL = 1/(k3*(k1 - k2)*(k1 + k2 - k3))
    g = k3**2 + p3**2
    return (st, sL, g)

def _s119(k1, k2, k3, p3):
    st = 0
    sL = 1/(k1*k2*(k1 + k2 - 2*k3))
    g = (k1**4*k3**2 - 2*k1**3*k3**3 - 2*k1**3*k3*p3 - 2*k1**2*k2**2*k3**2 + 2*k1**2*k2*k3**3 - 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 + 2*k1*k2**2*k3**3 + 2*k1*k2**2*k3*p3 - 2*k1*k2*k3**4 + 2*k1*k2*k3**2 + 2*k1*k2*p3**2 + k2**4*k3**2 - 2*k2**3*k3**3 + 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s120(k1, k2, k3, p3):
    st = -4*(k1 - k3)*(k2 - k3)/((k1 - k2)*(k1 + k2 - 2*k3))
    sL = (k1 - k3)/(k2*(k1 - k2)*(k1 + k2 - 2*k3)*(k1 + k2 - k3))
    g = (k1**4*k3**2 - 2*k1**3*k3**3 - 2*k1**3*k3*p3 - 2*k1**2*k2**2*k3**2 + 2*k1**2*k2*k3**3 - 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 + 2*k1*k2**2*k3**3 + 2*k1*k2**2*k3*p3 - 2*k1*k2*k3**4 + 2*k1*k2*k3**2 + 2*k1*k2*p3**2 + k2**4*k3**2 - 2*k2**3*k3**3 + 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s121(k1, k2, k3, p3):
    st = -4*(k1 - k3)*(k2 - k3)/((k1 - k2)*(k1 + k2 - 2*k3))
    sL = (k2 - k3)/(k1*(k1 - k2)*(k1 + k2 - 2*k3)*(k1 + k2 - k3))
    g = (k1**4*k3**2 - 2*k1**3*k3**3 - 2*k1**3*k3*p3 - 2*k1**2*k2**2*k3**2 + 2*k1**2*k2*k3**3 - 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 + 2*k1*k2**2*k3**3 + 2*k1*k2**2*k3*p3 - 2*k1*k2*k3**4 + 2*k1*k2*k3**2 + 2*k1*k2*p3**2 + k2**4*k3**2 - 2*k2**3*k3**3 + 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s122(k1, k2, k3, p3):
    st = -4*k3*(k1 + k2 - k3)/((k1 + k2)*(k1 + k2 - 2*k3))
    sL = 0
    g = (k1**4*k3**2 - 2*k1**3*k3**3 - 2*k1**3*k3*p3 + 2*k1**2*k2**2*k3**2 - 2*k1**2*k2*k3**3 + 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 - 2*k1*k2**2*k3**3 - 2*k1*k2**2*k3*p3 + 2*k1*k2*k3**4 - 2*k1*k2*k3**2 - 2*k1*k2*p3**2 + k2**4*k3**2 - 2*k2**3*k3**3 + 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s123(k1, k2, k3, p3):
    st = 0
    sL = 1/(k1*k2*(k1 + k2 - 2*k3))
    g = (k1**4*k3**2 - 2*k1**3*k3**3 - 2*k1**3*k3*p3 + 2*k1**2*k2**2*k3**2 - 2*k1**2*k2*k3**3 + 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 - 2*k1*k2**2*k3**3 - 2*k1*k2**2*k3*p3 + 2*k1*k2*k3**4 - 2*k1*k2*k3**2 - 2*k1*k2*p3**2 + k2**4*k3**2 - 2*k2**3*k3**3 + 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s124(k1, k2, k3, p3):
    st = 4*k3*(k1 + k2 - k3)/((k1 + k2)*(k1 + k2 - 2*k3))
    sL = 1/(k1*k2*(k1 + k2 - 2*k3))
    g = (k1**4*k3**2 - 2*k1**3*k3**3 - 2*k1**3*k3*p3 + 2*k1**2*k2**2*k3**2 - 2*k1**2*k2*k3**3 + 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 - 2*k1*k2**2*k3**3 - 2*k1*k2**2*k3*p3 + 2*k1*k2*k3**4 - 2*k1*k2*k3**2 - 2*k1*k2*p3**2 + k2**4*k3**2 - 2*k2**3*k3**3 + 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s125(k1, k2, k3, p3):
    st = -4*k2*(k1 + k2 - k3)/((k1 + k2)*(k1 - k3))
    sL = 0
    g = (k1 - k3)**2*(k1**2*k3**2 - 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s126(k1, k2, k3, p3):
    st = -4*(k2 - k3)/(k1 - k3)
    sL = 1/(k2*(k1 - k3)*(k1 + k2 - k3))
    g = (k1 - k3)**2*(k1**2*k3**2 - 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s127(k1, k2, k3, p3):
    st = 4*k1*k3/((k1 + k2)*(k1 - k3))
    sL = 1/(k2*(k1 - k3)*(k1 + k2 - k3))
    g = (k1 - k3)**2*(k1**2*k3**2 - 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s128(k1, k2, k3, p3):
    st = 0
    sL = 1/(k1*k2*(k1 + k2 - 2*k3))
    g = k2**2*(k2**2*k3**2 - 2*k2*k3**3 + 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s129(k1, k2, k3, p3):
    st = -4*k3*(k2 - k3)/(k2*(k1 + k2 - 2*k3))
    sL = k3/(k2**2*(k1 + k2 - 2*k3)*(k1 + k2 - k3))
    g = k2**2*(k2**2*k3**2 - 2*k2*k3**3 + 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s130(k1, k2, k3, p3):
    st = -4*k3*(k2 - k3)/(k2*(k1 + k2 - 2*k3))
    sL = -(k1 + k2)*(k2 - k3)/(k1*k2**2*(k1 + k2 - 2*k3)*(k1 + k2 - k3))
    g = k2**2*(k2**2*k3**2 - 2*k2*k3**3 + 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s131(k1, k2, k3, p3):
    st = 4*k1*(k1 + k2 - k3)/((k1 + k2)*(k2 - k3))
    sL = 0
    g = (k2 - k3)**2*(k2**2*k3**2 + 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s132(k1, k2, k3, p3):
    st = 4*(k1 - k3)/(k2 - k3)
    sL = -1/(k1*(k2 - k3)*(k1 + k2 - k3))
    g = (k2 - k3)**2*(k2**2*k3**2 + 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s133(k1, k2, k3, p3):
    st = -4*k2*k3/((k1 + k2)*(k2 - k3))
    sL = -1/(k1*(k2 - k3)*(k1 + k2 - k3))
    g = (k2 - k3)**2*(k2**2*k3**2 + 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s134(k1, k2, k3, p3):
    st = 0
    sL = -1/(k1*k2*(k1 + k2 - 2*k3))
    g = k1**2*(k1**2*k3**2 - 2*k1*k3**3 - 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s135(k1, k2, k3, p3):
    st = 4*k3*(k1 - k3)/(k1*(k1 + k2 - 2*k3))
    sL = -k3/(k1**2*(k1 + k2 - 2*k3)*(k1 + k2 - k3))
    g = k1**2*(k1**2*k3**2 - 2*k1*k3**3 - 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s136(k1, k2, k3, p3):
    st = 4*k3*(k1 - k3)/(k1*(k1 + k2 - 2*k3))
    sL = (k1 + k2)*(k1 - k3)/(k1**2*k2*(k1 + k2 - 2*k3)*(k1 + k2 - k3))
    g = k1**2*(k1**2*k3**2 - 2*k1*k3**3 - 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s137(k1, k2, k3, p3):
    st = 4*k1*(k2 - k3)/((k1 - k2)*(k1 + k2 - k3))
    sL = -k1/(k2*(k1 - k2)*(k1 + k2 - k3)**2)
    g = (k1 + k2 - k3)**2*(k1**2*k3**2 - 2*k1*k2*k3**2 - 2*k1*k3*p3 + k2**2*k3**2 + 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s138(k1, k2, k3, p3):
    st = 4*k2*(k1 - k3)/((k1 - k2)*(k1 + k2 - k3))
    sL = -k2/(k1*(k1 - k2)*(k1 + k2 - k3)**2)
    g = (k1 + k2 - k3)**2*(k1**2*k3**2 - 2*k1*k2*k3**2 - 2*k1*k3*p3 + k2**2*k3**2 + 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s139(k1, k2, k3, p3):
    st = 4*k3/(k1 + k2 - k3)
    sL = (k1 + k2)/(k1*k2*(k1 + k2 - k3)**2)
    g = (k1 + k2 - k3)**2*(k1**2*k3**2 - 2*k1*k2*k3**2 - 2*k1*k3*p3 + k2**2*k3**2 + 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _v140(k1, k2, k3, p3):
    xt = -(4*k1**2*k2*k3**2 - 4*k1**2*k3**3 + 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 + 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3**3 - 4*k2**2*k3*p3 + 9*k2*k3**4 + 6*k2*k3**2*p3 - 3*k2*p3**2 - 6*k3**5 + 6*k3*p3**2)/(k3**2*(k1 - k2 + 2*k3))
    xL = 0
    yt = 2*(2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 + 3*k2*k3**2 - 3*k2*p3 + 6*k3*p3)/(k3*(k1 - k2 + 2*k3))
    yL = 0
    return (xt, xL, yt, yL)

def _v141(k1, k2, k3, p3):
    xt = -(4*k1**2*k2*k3**2 - 4*k1**2*k3**3 + 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 + 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3**3 - 4*k2**2*k3*p3 + 9*k2*k3**4 + 6*k2*k3**2*p3 - 3*k2*p3**2 - 6*k3**5 + 6*k3*p3**2)/(k3**2*(k1 - k2 + 2*k3))
    xL = -(k1*k3 + k3**2 + p3)/(k2*k3*(k1 - k2 + 2*k3))
    yt = 2*(2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 + 3*k2*k3**2 - 3*k2*p3 + 6*k3*p3)/(k3*(k1 - k2 + 2*k3))
    yL = 1/(k2*(k1 - k2 + 2*k3))
    return (xt, xL, yt, yL)

def _v142(k1, k2, k3, p3):
    xt = -(4*k1*k3*p3 - k3**4 + 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(2*k1*k3 + k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _v143(k1, k2, k3, p3):
    xt = -(4*k1**2*k2*k3**2 - 4*k1**2*k3**3 + 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 + 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3**3 - 4*k2**2*k3*p3 + 9*k2*k3**4 + 6*k2*k3**2*p3 - 3*k2*p3**2 - 6*k3**5 + 6*k3*p3**2)/(k3**2*(k1 - k2 + 2*k3))
    xL = (k2*k3 - k3**2 + p3)/(k1*k3*(k1 - k2 + 2*k3))
    yt = 2*(2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 + 3*k2*k3**2 - 3*k2*p3 + 6*k3*p3)/(k3*(k1 - k2 + 2*k3))
    yL = -1/(k1*(k1 - k2 + 2*k3))
    return (xt, xL, yt, yL)

def _v144(k1, k2, k3, p3):
    xt = -(4*k1*k2*k3**2 - 4*k1*k3**3 + 4*k1*k3*p3 + 4*k2*k3*p3 - k3**4 - 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(2*k1*k3 + 2*k2*k3 - k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _v145(k1, k2, k3, p3):
    xt = -(4*k1**2*k2*k3**2 + 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 + 4*k1*k2*k3**3 - k1*k3**4 + 2*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3*p3 + k2*k3**4 + 2*k2*k3**2*p3 - 3*k2*p3**2)/(k3**2*(k1 - k2))
    xL = -(k1*k3 + p3)/(k3*(k1 - k2)*(k2 - k3))
    yt = 2*(2*k1**2*k3 + k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 + k2*k3**2 - 3*k2*p3)/(k3*(k1 - k2))
    yL = 1/((k1 - k2)*(k2 - k3))
    return (xt, xL, yt, yL)

def _v146(k1, k2, k3, p3):
    xt = -(4*k1**2*k2*k3**2 - 4*k1**2*k3**3 + 4*k1**2*k3*p3 - 4*k1*k2**2*k3**2 + 12*k1*k2*k3**3 - 9*k1*k3**4 + 6*k1*k3**2*p3 + 3*k1*p3**2 - 4*k2**2*k3**3 - 4*k2**2*k3*p3 + 9*k2*k3**4 + 6*k2*k3**2*p3 - 3*k2*p3**2 - 6*k3**5 + 6*k3*p3**2)/(k3**2*(k1 - k2 + 2*k3))
    xL = -(k1**2*k3 + k1*k3**2 + k1*p3 - k2**2*k3 + k2*k3**2 - k2*p3)/(k1*k2*k3*(k1 - k2 + 2*k3))
    yt = 2*(2*k1**2*k3 + 3*k1*k3**2 + 3*k1*p3 - 2*k2**2*k3 + 3*k2*k3**2 - 3*k2*p3 + 6*k3*p3)/(k3*(k1 - k2 + 2*k3))
    yL = (k1 - k2)/(k1*k2*(k1 - k2 + 2*k3))
    return (xt, xL, yt, yL)

def _v147(k1, k2, k3, p3):
    xt = -(4*k1**2*k3*p3 + 4*k1*k2*k3*p3 - k1*k3**4 + 2*k1*k3**2*p3 + 3*k1*p3**2 + 4*k2**2*k3*p3 - k2*k3**4 - 2*k2*k3**2*p3 + 3*k2*p3**2)/(k3**2*(k1 + k2))
    xL = 0
    yt = 2*(2*k1**2*k3 + 2*k1*k2*k3 + k1*k3**2 + 3*k1*p3 + 2*k2**2*k3 - k2*k3**2 + 3*k2*p3)/(k3*(k1 + k2))
    yL = 0
    return (xt, xL, yt, yL)

def _v148(k1, k2, k3, p3):
    xt = -(4*k2*k3*p3 - k3**4 - 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = p3/(k2*k3*(k2 - k3))
    yt = 2*(2*k2*k3 - k3**2 + 3*p3)/k3
    yL = -1/(k2*(k2 - k3))
    return (xt, xL, yt, yL)

def _v149(k1, k2, k3, p3):
    xt = -(4*k1*k2*k3**2 + 4*k1*k3*p3 + 4*k2*k3**3 + 4*k2*k3*p3 - k3**4 + 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = -(k1*k3 + k2*k3 + p3)/(k1*k3*(k2 - k3))
    yt = 2*(2*k1*k3 + 2*k2*k3 + k3**2 + 3*p3)/k3
    yL = 1/(k1*(k2 - k3))
    return (xt, xL, yt, yL)

def _s150(k1, k2, k3, p3):
    st = 0
    sL = 1/(k1*k2*(k1 - k2 + 2*k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s151(k1, k2, k3, p3):
    st = -4*(k2 - k3)*(k1 - k2 + k3)/(k1*(k1 - k2 + 2*k3))
    sL = 0
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s152(k1, k2, k3, p3):
    st = -4*(k2 - k3)*(k1 - k2 + k3)/(k1*(k1 - k2 + 2*k3))
    sL = -1/(k1*k2*(k1 - k2 + 2*k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s153(k1, k2, k3, p3):
    st = 0
    sL = -1/(k1*k2*(k1 - k2 + 2*k3))
    g = k2**2*(k2**2*k3**2 - 2*k2*k3**3 + 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s154(k1, k2, k3, p3):
    st = 4*k3*(k2 - k3)/(k2*(k1 - k2 + 2*k3))
    sL = 0
    g = k2**2*(k2**2*k3**2 - 2*k2*k3**3 + 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s155(k1, k2, k3, p3):
    st = 4*k3*(k2 - k3)/(k2*(k1 - k2 + 2*k3))
    sL = 1/(k1*k2*(k1 - k2 + 2*k3))
    g = k2**2*(k2**2*k3**2 - 2*k2*k3**3 + 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s156(k1, k2, k3, p3):
    st = 0
    sL = -1/(k1*k2*(k1 - k2 + 2*k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 + 2*k1**2*k2**2*k3**2 - 2*k1**2*k2*k3**3 + 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 + 2*k1*k2**2*k3**3 + 2*k1*k2**2*k3*p3 - 2*k1*k2*k3**4 + 2*k1*k2*k3**2 + 2*k1*k2*p3**2 + k2**4*k3**2 - 2*k2**3*k3**3 + 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s157(k1, k2, k3, p3):
    st = 4*k3*(k1 - k2 + k3)/((k1 - k2)*(k1 - k2 + 2*k3))
    sL = k3/(k2*(k1 - k2)*(k2 - k3)*(k1 - k2 + 2*k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 + 2*k1**2*k2**2*k3**2 - 2*k1**2*k2*k3**3 + 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 + 2*k1*k2**2*k3**3 + 2*k1*k2**2*k3*p3 - 2*k1*k2*k3**4 + 2*k1*k2*k3**2 + 2*k1*k2*p3**2 + k2**4*k3**2 - 2*k2**3*k3**3 + 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s158(k1, k2, k3, p3):
    st = 4*k3*(k1 - k2 + k3)/((k1 - k2)*(k1 - k2 + 2*k3))
    sL = (k1 - k2 + k3)/(k1*(k1 - k2)*(k2 - k3)*(k1 - k2 + 2*k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 + 2*k1**2*k2**2*k3**2 - 2*k1**2*k2*k3**3 + 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 + 2*k1*k2**2*k3**3 + 2*k1*k2**2*k3*p3 - 2*k1*k2*k3**4 + 2*k1*k2*k3**2 + 2*k1*k2*p3**2 + k2**4*k3**2 - 2*k2**3*k3**3 + 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s159(k1, k2, k3, p3):
    st = 4*(k2 - k3)/(k1 + k3)
    sL = 0
    g = (k1 + k3)**2*(k1**2*k3**2 + 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s160(k1, k2, k3, p3):
    st = 4*k2*(k1 - k2 + k3)/((k1 - k2)*(k1 + k3))
    sL = 1/((k1 - k2)*(k1 + k3)*(k2 - k3))
    g = (k1 + k3)**2*(k1**2*k3**2 + 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s161(k1, k2, k3, p3):
    st = 4*k1*k3/((k1 - k2)*(k1 + k3))
    sL = 1/((k1 - k2)*(k1 + k3)*(k2 - k3))
    g = (k1 + k3)**2*(k1**2*k3**2 + 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s162(k1, k2, k3, p3):
    st = 0
    sL = -1/(k1*k2*(k1 - k2 + 2*k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 - 2*k1**2*k2**2*k3**2 + 2*k1**2*k2*k3**3 - 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 - 2*k1*k2**2*k3**3 - 2*k1*k2**2*k3*p3 + 2*k1*k2*k3**4 - 2*k1*k2*k3**2 - 2*k1*k2*p3**2 + k2**4*k3**2 - 2*k2**3*k3**3 + 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s163(k1, k2, k3, p3):
    st = 4*(k1 + k3)*(k2 - k3)/((k1 + k2)*(k1 - k2 + 2*k3))
    sL = 0
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 - 2*k1**2*k2**2*k3**2 + 2*k1**2*k2*k3**3 - 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 - 2*k1*k2**2*k3**3 - 2*k1*k2**2*k3*p3 + 2*k1*k2*k3**4 - 2*k1*k2*k3**2 - 2*k1*k2*p3**2 + k2**4*k3**2 - 2*k2**3*k3**3 + 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s164(k1, k2, k3, p3):
    st = 4*(k1 + k3)*(k2 - k3)/((k1 + k2)*(k1 - k2 + 2*k3))
    sL = 1/(k1*k2*(k1 - k2 + 2*k3))
    g = (k1**4*k3**2 + 2*k1**3*k3**3 + 2*k1**3*k3*p3 - 2*k1**2*k2**2*k3**2 + 2*k1**2*k2*k3**3 - 2*k1**2*k2*k3*p3 + k1**2*k3**4 + 2*k1**2*k3**2*p3 + k1**2*k3**2 + k1**2*p3**2 - 2*k1*k2**2*k3**3 - 2*k1*k2**2*k3*p3 + 2*k1*k2*k3**4 - 2*k1*k2*k3**2 - 2*k1*k2*p3**2 + k2**4*k3**2 - 2*k2**3*k3**3 + 2*k2**3*k3*p3 + k2**2*k3**4 - 2*k2**2*k3**2*p3 + k2**2*k3**2 + k2**2*p3**2)/k3**2
    return (st, sL, g)

def _s165(k1, k2, k3, p3):
    st = 0
    sL = -1/(k1*k2*(k1 - k2 + 2*k3))
    g = k2**2*(k2**2*k3**2 - 2*k2*k3**3 + 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s166(k1, k2, k3, p3):
    st = -4*(k1 + k3)*(k1 - k2 + k3)/(k2*(k1 - k2 + 2*k3))
    sL = -(k1 + k3)/(k2**2*(k2 - k3)*(k1 - k2 + 2*k3))
    g = k2**2*(k2**2*k3**2 - 2*k2*k3**3 + 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s167(k1, k2, k3, p3):
    st = -4*(k1 + k3)*(k1 - k2 + k3)/(k2*(k1 - k2 + 2*k3))
    sL = -(k1 + k2)*(k1 - k2 + k3)/(k1*k2**2*(k2 - k3)*(k1 - k2 + 2*k3))
    g = k2**2*(k2**2*k3**2 - 2*k2*k3**3 + 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s168(k1, k2, k3, p3):
    st = 4*k2*(k2 - k3)/(k3*(k1 + k2))
    sL = 0
    g = k3**2 + p3**2
    return (st, sL, g)

def _s169(k1, k2, k3, p3):
    st = -4*(k1 - k2 + k3)/k3
    sL = -1/(k2*k3*(k2 - k3))
    g = k3**2 + p3**2
    return (st, sL, g)

def _s170(k1, k2, k3, p3):
    st = -4*k1*(k1 + k3)/(k3*(k1 + k2))
    sL = -1/(k2*k3*(k2 - k3))
    g = k3**2 + p3**2
    return (st, sL, g)

def _s171(k1, k2, k3, p3):
    st = 0
    sL = 1/(k1*k2*(k1 - k2 + 2*k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s172(k1, k2, k3, p3):
    st = 4*k3*(k1 + k3)/(k1*(k1 - k2 + 2*k3))
    sL = (k1 + k3)/(k1**2*(k2 - k3)*(k1 - k2 + 2*k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s173(k1, k2, k3, p3):
    st = 4*k3*(k1 + k3)/(k1*(k1 - k2 + 2*k3))
    sL = k3*(k1 + k2)/(k1**2*k2*(k2 - k3)*(k1 - k2 + 2*k3))
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 + 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s174(k1, k2, k3, p3):
    st = -4*k1*(k2 - k3)/((k1 + k2)*(k1 - k2 + k3))
    sL = 0
    g = (k1 - k2 + k3)**2*(k1**2*k3**2 + 2*k1*k2*k3**2 + 2*k1*k3*p3 + k2**2*k3**2 + 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s175(k1, k2, k3, p3):
    st = 4*k3/(k1 - k2 + k3)
    sL = 1/(k1*(k2 - k3)*(k1 - k2 + k3))
    g = (k1 - k2 + k3)**2*(k1**2*k3**2 + 2*k1*k2*k3**2 + 2*k1*k3*p3 + k2**2*k3**2 + 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s176(k1, k2, k3, p3):
    st = 4*k2*(k1 + k3)/((k1 + k2)*(k1 - k2 + k3))
    sL = 1/(k1*(k2 - k3)*(k1 - k2 + k3))
    g = (k1 - k2 + k3)**2*(k1**2*k3**2 + 2*k1*k2*k3**2 + 2*k1*k3*p3 + k2**2*k3**2 + 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s177(k1, k2, k3, p3):
    st = 4*k1*(k1 - k2 + k3)/((k1 - k2)*(k2 - k3))
    sL = k1/(k2*(k1 - k2)*(k2 - k3)**2)
    g = (k2 - k3)**2*(k2**2*k3**2 + 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s178(k1, k2, k3, p3):
    st = 4*k2*k3/((k1 - k2)*(k2 - k3))
    sL = k2/(k1*(k1 - k2)*(k2 - k3)**2)
    g = (k2 - k3)**2*(k2**2*k3**2 + 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s179(k1, k2, k3, p3):
    st = -4*(k1 + k3)/(k2 - k3)
    sL = -(k1 + k2)/(k1*k2*(k2 - k3)**2)
    g = (k2 - k3)**2*(k2**2*k3**2 + 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _v180(k1, k2, k3, p3):
    xt = -(4*k1*k2*k3**2 - 4*k1*k3**3 - 4*k1*k3*p3 - 4*k2*k3**3 - 4*k2*k3*p3 + 3*k3**4 + 6*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(-2*k1*k3 - 2*k2*k3 + 3*k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _v181(k1, k2, k3, p3):
    xt = -(-4*k1*k3*p3 - k3**4 + 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(-2*k1*k3 + k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _v182(k1, k2, k3, p3):
    xt = -(-4*k2*k3*p3 - k3**4 + 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(-2*k2*k3 + k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _v183(k1, k2, k3, p3):
    xt = -(4*k1*k2*k3**2 - 4*k1*k3*p3 - 4*k2*k3*p3 - k3**4 + 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(-2*k1*k3 - 2*k2*k3 + k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _s184(k1, k2, k3, p3):
    st = 4*(k2 - k3)/k1
    sL = 0
    g = k1**2*(k1**2*k3**2 - 2*k1*k3**3 - 2*k1*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s185(k1, k2, k3, p3):
    st = 4*(k1 - k3)/k2
    sL = 0
    g = k2**2*(k2**2*k3**2 - 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s186(k1, k2, k3, p3):
    st = 4*(k1 - k2)/k3
    sL = 0
    g = k3**2 + p3**2
    return (st, sL, g)

def _s187(k1, k2, k3, p3):
    st = 4*k3/(k1 - k2)
    sL = 0
    g = (k1 - k2)**2*(k1**2*k3**2 + 2*k1*k2*k3**2 - 2*k1*k3**3 - 2*k1*k3*p3 + k2**2*k3**2 - 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 + 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s188(k1, k2, k3, p3):
    st = 4*k2/(k1 - k3)
    sL = 0
    g = (k1 - k3)**2*(k1**2*k3**2 - 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s189(k1, k2, k3, p3):
    st = 4*k1/(k2 - k3)
    sL = 0
    g = (k2 - k3)**2*(k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _v190(k1, k2, k3, p3):
    xt = -(-4*k1*k3*p3 - k3**4 - 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(-2*k1*k3 - k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _v191(k1, k2, k3, p3):
    xt = -(-4*k2*k3*p3 - k3**4 - 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(-2*k2*k3 - k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _v192(k1, k2, k3, p3):
    xt = -(4*k1*k2*k3**2 - 4*k1*k3*p3 - 4*k2*k3*p3 - k3**4 - 2*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(-2*k1*k3 - 2*k2*k3 - k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _v193(k1, k2, k3, p3):
    xt = -(4*k1*k2*k3**2 + 4*k1*k3**3 - 4*k1*k3*p3 + 4*k2*k3**3 - 4*k2*k3*p3 + 3*k3**4 - 6*k3**2*p3 + 3*p3**2)/k3**2
    xL = 0
    yt = 2*(-2*k1*k3 - 2*k2*k3 - 3*k3**2 + 3*p3)/k3
    yL = 0
    return (xt, xL, yt, yL)

def _s194(k1, k2, k3, p3):
    st = 4*(k1 - k2)/k3
    sL = 0
    g = k3**2 + p3**2
    return (st, sL, g)

def _s195(k1, k2, k3, p3):
    st = -4*k2/(k1 + k3)
    sL = 0
    g = (k1 + k3)**2*(k1**2*k3**2 - 2*k1*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s196(k1, k2, k3, p3):
    st = -4*k1/(k2 + k3)
    sL = 0
    g = (k2 + k3)**2*(k2**2*k3**2 - 2*k2*k3*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s197(k1, k2, k3, p3):
    st = -4*(k2 + k3)/k1
    sL = 0
    g = k1**2*(k1**2*k3**2 + 2*k1*k3**3 - 2*k1*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s198(k1, k2, k3, p3):
    st = -4*(k1 + k3)/k2
    sL = 0
    g = k2**2*(k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

def _s199(k1, k2, k3, p3):
    st = 4*k3/(k1 - k2)
    sL = 0
    g = (k1 - k2)**2*(k1**2*k3**2 + 2*k1*k2*k3**2 + 2*k1*k3**3 - 2*k1*k3*p3 + k2**2*k3**2 + 2*k2*k3**3 - 2*k2*k3*p3 + k3**4 - 2*k3**2*p3 + k3**2 + p3**2)/k3**2
    return (st, sL, g)

VERTEX = {
    'c2_1': {
        ((0, 0, 0), (0, 1, 0), (1, 0, 0)): _v0,
        ((0, 0, 0), (1, 0, 0), (1, 1, 0)): _v1,
        ((0, 0, 0), (1, 0, 0), (1, 1, 1)): _v2,
        ((0, 0, 0), (0, 1, 0), (1, 1, 0)): _v3,
        ((0, 0, 0), (0, 1, 0), (1, 1, 1)): _v4,
        ((0, 0, 0), (1, 1, 0), (1, 1, 1)): _v5,
        ((0, 1, 0), (1, 0, 0), (1, 1, 0)): _v6,
        ((0, 1, 0), (1, 0, 0), (1, 1, 1)): _v7,
        ((1, 0, 0), (1, 1, 0), (1, 1, 1)): _v8,
        ((0, 1, 0), (1, 1, 0), (1, 1, 1)): _v9,
    },
    'c2_2': {
        ((0, 0, 0), (0, 1, 0), (0, 1, 1)): _v40,
        ((0, 0, 0), (0, 1, 0), (1, 1, 1)): _v41,
        ((0, 0, 0), (0, 1, 1), (1, 1, 1)): _v42,
        ((0, 1, 0), (0, 1, 1), (1, 1, 1)): _v43,
    },
    'c2_3': {
        ((0, 0, 0), (1, 0, 0), (1, 0, 1)): _v50,
        ((0, 0, 0), (1, 0, 0), (1, 1, 1)): _v51,
        ((0, 0, 0), (1, 0, 1), (1, 1, 1)): _v52,
        ((1, 0, 0), (1, 0, 1), (1, 1, 1)): _v53,
    },
    'c2_4': {
        ((0, 0, 0), (0, 0, 1), (1, 0, 1)): _v60,
        ((0, 0, 0), (0, 0, 1), (0, 1, 1)): _v61,
        ((0, 0, 0), (0, 0, 1), (1, 1, 1)): _v62,
        ((0, 0, 0), (0, 1, 1), (1, 0, 1)): _v63,
        ((0, 0, 0), (1, 0, 1), (1, 1, 1)): _v64,
        ((0, 0, 0), (0, 1, 1), (1, 1, 1)): _v65,
        ((0, 0, 1), (0, 1, 1), (1, 0, 1)): _v66,
        ((0, 0, 1), (1, 0, 1), (1, 1, 1)): _v67,
        ((0, 0, 1), (0, 1, 1), (1, 1, 1)): _v68,
        ((0, 1, 1), (1, 0, 1), (1, 1, 1)): _v69,
    },
    'w2': {
        ((0, 0, 0), (0, 1, 0), (1, 0, 0)): _v100,
        ((0, 0, 0), (0, 0, 1), (1, 0, 0)): _v101,
        ((0, 0, 0), (1, 0, 0), (1, 1, 0)): _v102,
        ((0, 0, 0), (0, 0, 1), (0, 1, 0)): _v103,
        ((0, 0, 0), (0, 1, 0), (1, 1, 0)): _v104,
        ((0, 0, 0), (0, 0, 1), (1, 1, 0)): _v105,
        ((0, 0, 1), (0, 1, 0), (1, 0, 0)): _v106,
        ((0, 1, 0), (1, 0, 0), (1, 1, 0)): _v107,
        ((0, 0, 1), (1, 0, 0), (1, 1, 0)): _v108,
        ((0, 0, 1), (0, 1, 0), (1, 1, 0)): _v109,
    },
    'm2': {
        ((0, 0, 0), (0, 1, 0), (1, 0, 0)): _v140,
        ((0, 0, 0), (1, 0, 0), (1, 1, 0)): _v141,
        ((0, 0, 0), (1, 0, 0), (1, 0, 1)): _v142,
        ((0, 0, 0), (0, 1, 0), (1, 1, 0)): _v143,
        ((0, 0, 0), (0, 1, 0), (1, 0, 1)): _v144,
        ((0, 0, 0), (1, 0, 1), (1, 1, 0)): _v145,
        ((0, 1, 0), (1, 0, 0), (1, 1, 0)): _v146,
        ((0, 1, 0), (1, 0, 0), (1, 0, 1)): _v147,
        ((1, 0, 0), (1, 0, 1), (1, 1, 0)): _v148,
        ((0, 1, 0), (1, 0, 1), (1, 1, 0)): _v149,
    },
    'c3_1': {
        ((0, 0, 0), (0, 1, 0), (1, 0, 0)): _v180,
        ((0, 0, 0), (0, 0, 1), (1, 0, 0)): _v181,
        ((0, 0, 0), (0, 0, 1), (0, 1, 0)): _v182,
        ((0, 0, 1), (0, 1, 0), (1, 0, 0)): _v183,
    },
    'c3_2': {
        ((0, 0, 0), (0, 0, 1), (1, 0, 1)): _v190,
        ((0, 0, 0), (0, 0, 1), (0, 1, 1)): _v191,
        ((0, 0, 0), (0, 1, 1), (1, 0, 1)): _v192,
        ((0, 0, 1), (0, 1, 1), (1, 0, 1)): _v193,
    },
}

SEGMENT = {
    'c2_1': {
        (((0, 0, 0), (1, 0, 0)), ((0, 1, 0), (1, 1, 0))): _s10,
        (((0, 0, 0), (1, 0, 0)), ((0, 1, 0), (1, 1, 1))): _s11,
        (((0, 0, 0), (1, 0, 0)), ((1, 1, 0), (1, 1, 1))): _s12,
        (((0, 0, 0), (0, 1, 0)), ((1, 0, 0), (1, 1, 0))): _s13,
        (((0, 0, 0), (0, 1, 0)), ((1, 0, 0), (1, 1, 1))): _s14,
        (((0, 0, 0), (0, 1, 0)), ((1, 1, 0), (1, 1, 1))): _s15,
        (((0, 0, 0), (1, 1, 0)), ((0, 1, 0), (1, 0, 0))): _s16,
        (((0, 0, 0), (1, 1, 0)), ((1, 0, 0), (1, 1, 1))): _s17,
        (((0, 0, 0), (1, 1, 0)), ((0, 1, 0), (1, 1, 1))): _s18,
        (((0, 0, 0), (1, 1, 1)), ((0, 1, 0), (1, 0, 0))): _s19,
        (((0, 0, 0), (1, 1, 1)), ((1, 0, 0), (1, 1, 0))): _s20,
        (((0, 0, 0), (1, 1, 1)), ((0, 1, 0), (1, 1, 0))): _s21,
        (((0, 1, 0), (1, 0, 0)), ((0, 0, 0), (1, 1, 0))): _s22,
        (((0, 1, 0), (1, 0, 0)), ((0, 0, 0), (1, 1, 1))): _s23,
        (((0, 1, 0), (1, 0, 0)), ((1, 1, 0), (1, 1, 1))): _s24,
        (((1, 0, 0), (1, 1, 0)), ((0, 0, 0), (0, 1, 0))): _s25,
        (((1, 0, 0), (1, 1, 0)), ((0, 0, 0), (1, 1, 1))): _s26,
        (((1, 0, 0), (1, 1, 0)), ((0, 1, 0), (1, 1, 1))): _s27,
        (((1, 0, 0), (1, 1, 1)), ((0, 0, 0), (0, 1, 0))): _s28,
        (((1, 0, 0), (1, 1, 1)), ((0, 0, 0), (1, 1, 0))): _s29,
        (((1, 0, 0), (1, 1, 1)), ((0, 1, 0), (1, 1, 0))): _s30,
        (((0, 1, 0), (1, 1, 0)), ((0, 0, 0), (1, 0, 0))): _s31,
        (((0, 1, 0), (1, 1, 0)), ((0, 0, 0), (1, 1, 1))): _s32,
        (((0, 1, 0), (1, 1, 0)), ((1, 0, 0), (1, 1, 1))): _s33,
        (((0, 1, 0), (1, 1, 1)), ((0, 0, 0), (1, 0, 0))): _s34,
        (((0, 1, 0), (1, 1, 1)), ((0, 0, 0), (1, 1, 0))): _s35,
        (((0, 1, 0), (1, 1, 1)), ((1, 0, 0), (1, 1, 0))): _s36,
        (((1, 1, 0), (1, 1, 1)), ((0, 0, 0), (1, 0, 0))): _s37,
        (((1, 1, 0), (1, 1, 1)), ((0, 0, 0), (0, 1, 0))): _s38,
        (((1, 1, 0), (1, 1, 1)), ((0, 1, 0), (1, 0, 0))): _s39,
    },
    'c2_2': {
        (((0, 0, 0), (0, 1, 0)), ((0, 1, 1), (1, 1, 1))): _s44,
        (((0, 0, 0), (0, 1, 1)), ((0, 1, 0), (1, 1, 1))): _s45,
        (((0, 0, 0), (1, 1, 1)), ((0, 1, 0), (0, 1, 1))): _s46,
        (((0, 1, 0), (0, 1, 1)), ((0, 0, 0), (1, 1, 1))): _s47,
        (((0, 1, 0), (1, 1, 1)), ((0, 0, 0), (0, 1, 1))): _s48,
        (((0, 1, 1), (1, 1, 1)), ((0, 0, 0), (0, 1, 0))): _s49,
    },
    'c2_3': {
        (((0, 0, 0), (1, 0, 0)), ((1, 0, 1), (1, 1, 1))): _s54,
        (((0, 0, 0), (1, 0, 1)), ((1, 0, 0), (1, 1, 1))): _s55,
        (((0, 0, 0), (1, 1, 1)), ((1, 0, 0), (1, 0, 1))): _s56,
        (((1, 0, 0), (1, 0, 1)), ((0, 0, 0), (1, 1, 1))): _s57,
        (((1, 0, 0), (1, 1, 1)), ((0, 0, 0), (1, 0, 1))): _s58,
        (((1, 0, 1), (1, 1, 1)), ((0, 0, 0), (1, 0, 0))): _s59,
    },
    'c2_4': {
        (((0, 0, 0), (0, 0, 1)), ((0, 1, 1), (1, 0, 1))): _s70,
        (((0, 0, 0), (0, 0, 1)), ((1, 0, 1), (1, 1, 1))): _s71,
        (((0, 0, 0), (0, 0, 1)), ((0, 1, 1), (1, 1, 1))): _s72,
        (((0, 0, 0), (1, 0, 1)), ((0, 0, 1), (0, 1, 1))): _s73,
        (((0, 0, 0), (1, 0, 1)), ((0, 0, 1), (1, 1, 1))): _s74,
        (((0, 0, 0), (1, 0, 1)), ((0, 1, 1), (1, 1, 1))): _s75,
        (((0, 0, 0), (0, 1, 1)), ((0, 0, 1), (1, 0, 1))): _s76,
        (((0, 0, 0), (0, 1, 1)), ((0, 0, 1), (1, 1, 1))): _s77,
        (((0, 0, 0), (0, 1, 1)), ((1, 0, 1), (1, 1, 1))): _s78,
        (((0, 0, 0), (1, 1, 1)), ((0, 0, 1), (1, 0, 1))): _s79,
        (((0, 0, 0), (1, 1, 1)), ((0, 0, 1), (0, 1, 1))): _s80,
        (((0, 0, 0), (1, 1, 1)), ((0, 1, 1), (1, 0, 1))): _s81,
        (((0, 0, 1), (1, 0, 1)), ((0, 0, 0), (0, 1, 1))): _s82,
        (((0, 0, 1), (1, 0, 1)), ((0, 0, 0), (1, 1, 1))): _s83,
        (((0, 0, 1), (1, 0, 1)), ((0, 1, 1), (1, 1, 1))): _s84,
        (((0, 0, 1), (0, 1, 1)), ((0, 0, 0), (1, 0, 1))): _s85,
        (((0, 0, 1), (0, 1, 1)), ((0, 0, 0), (1, 1, 1))): _s86,
        (((0, 0, 1), (0, 1, 1)), ((1, 0, 1), (1, 1, 1))): _s87,
        (((0, 0, 1), (1, 1, 1)), ((0, 0, 0), (1, 0, 1))): _s88,
        (((0, 0, 1), (1, 1, 1)), ((0, 0, 0), (0, 1, 1))): _s89,
        (((0, 0, 1), (1, 1, 1)), ((0, 1, 1), (1, 0, 1))): _s90,
        (((0, 1, 1), (1, 0, 1)), ((0, 0, 0), (0, 0, 1))): _s91,
        (((0, 1, 1), (1, 0, 1)), ((0, 0, 0), (1, 1, 1))): _s92,
        (((0, 1, 1), (1, 0, 1)), ((0, 0, 1), (1, 1, 1))): _s93,
        (((1, 0, 1), (1, 1, 1)), ((0, 0, 0), (0, 0, 1))): _s94,
        (((1, 0, 1), (1, 1, 1)), ((0, 0, 0), (0, 1, 1))): _s95,
        (((1, 0, 1), (1, 1, 1)), ((0, 0, 1), (0, 1, 1))): _s96,
        (((0, 1, 1), (1, 1, 1)), ((0, 0, 0), (0, 0, 1))): _s97,
        (((0, 1, 1), (1, 1, 1)), ((0, 0, 0), (1, 0, 1))): _s98,
        (((0, 1, 1), (1, 1, 1)), ((0, 0, 1), (1, 0, 1))): _s99,
    },
    'w2': {
        (((0, 0, 0), (1, 0, 0)), ((0, 0, 1), (0, 1, 0))): _s110,
        (((0, 0, 0), (1, 0, 0)), ((0, 1, 0), (1, 1, 0))): _s111,
        (((0, 0, 0), (1, 0, 0)), ((0, 0, 1), (1, 1, 0))): _s112,
        (((0, 0, 0), (0, 1, 0)), ((0, 0, 1), (1, 0, 0))): _s113,
        (((0, 0, 0), (0, 1, 0)), ((1, 0, 0), (1, 1, 0))): _s114,
        (((0, 0, 0), (0, 1, 0)), ((0, 0, 1), (1, 1, 0))): _s115,
        (((0, 0, 0), (0, 0, 1)), ((0, 1, 0), (1, 0, 0))): _s116,
        (((0, 0, 0), (0, 0, 1)), ((1, 0, 0), (1, 1, 0))): _s117,
        (((0, 0, 0), (0, 0, 1)), ((0, 1, 0), (1, 1, 0))): _s118,
        (((0, 0, 0), (1, 1, 0)), ((0, 1, 0), (1, 0, 0))): _s119,
        (((0, 0, 0), (1, 1, 0)), ((0, 0, 1), (1, 0, 0))): _s120,
        (((0, 0, 0), (1, 1, 0)), ((0, 0, 1), (0, 1, 0))): _s121,
        (((0, 1, 0), (1, 0, 0)), ((0, 0, 0), (0, 0, 1))): _s122,
        (((0, 1, 0), (1, 0, 0)), ((0, 0, 0), (1, 1, 0))): _s123,
        (((0, 1, 0), (1, 0, 0)), ((0, 0, 1), (1, 1, 0))): _s124,
        (((0, 0, 1), (1, 0, 0)), ((0, 0, 0), (0, 1, 0))): _s125,
        (((0, 0, 1), (1, 0, 0)), ((0, 0, 0), (1, 1, 0))): _s126,
        (((0, 0, 1), (1, 0, 0)), ((0, 1, 0), (1, 1, 0))): _s127,
        (((1, 0, 0), (1, 1, 0)), ((0, 0, 0), (0, 1, 0))): _s128,
        (((1, 0, 0), (1, 1, 0)), ((0, 0, 0), (0, 0, 1))): _s129,
        (((1, 0, 0), (1, 1, 0)), ((0, 0, 1), (0, 1, 0))): _s130,
        (((0, 0, 1), (0, 1, 0)), ((0, 0, 0), (1, 0, 0))): _s131,
        (((0, 0, 1), (0, 1, 0)), ((0, 0, 0), (1, 1, 0))): _s132,
        (((0, 0, 1), (0, 1, 0)), ((1, 0, 0), (1, 1, 0))): _s133,
        (((0, 1, 0), (1, 1, 0)), ((0, 0, 0), (1, 0, 0))): _s134,
        (((0, 1, 0), (1, 1, 0)), ((0, 0, 0), (0, 0, 1))): _s135,
        (((0, 1, 0), (1, 1, 0)), ((0, 0, 1), (1, 0, 0))): _s136,
        (((0, 0, 1), (1, 1, 0)), ((0, 0, 0), (1, 0, 0))): _s137,
        (((0, 0, 1), (1, 1, 0)), ((0, 0, 0), (0, 1, 0))): _s138,
        (((0, 0, 1), (1, 1, 0)), ((0, 1, 0), (1, 0, 0))): _s139,
    },
    'm2': {
        (((0, 0, 0), (1, 0, 0)), ((0, 1, 0), (1, 1, 0))): _s150,
        (((0, 0, 0), (1, 0, 0)), ((0, 1, 0), (1, 0, 1))): _s151,
        (((0, 0, 0), (1, 0, 0)), ((1, 0, 1), (1, 1, 0))): _s152,
        (((0, 0, 0), (0, 1, 0)), ((1, 0, 0), (1, 1, 0))): _s153,
        (((0, 0, 0), (0, 1, 0)), ((1, 0, 0), (1, 0, 1))): _s154,
        (((0, 0, 0), (0, 1, 0)), ((1, 0, 1), (1, 1, 0))): _s155,
        (((0, 0, 0), (1, 1, 0)), ((0, 1, 0), (1, 0, 0))): _s156,
        (((0, 0, 0), (1, 1, 0)), ((1, 0, 0), (1, 0, 1))): _s157,
        (((0, 0, 0), (1, 1, 0)), ((0, 1, 0), (1, 0, 1))): _s158,
        (((0, 0, 0), (1, 0, 1)), ((0, 1, 0), (1, 0, 0))): _s159,
        (((0, 0, 0), (1, 0, 1)), ((1, 0, 0), (1, 1, 0))): _s160,
        (((0, 0, 0), (1, 0, 1)), ((0, 1, 0), (1, 1, 0))): _s161,
        (((0, 1, 0), (1, 0, 0)), ((0, 0, 0), (1, 1, 0))): _s162,
        (((0, 1, 0), (1, 0, 0)), ((0, 0, 0), (1, 0, 1))): _s163,
        (((0, 1, 0), (1, 0, 0)), ((1, 0, 1), (1, 1, 0))): _s164,
        (((1, 0, 0), (1, 1, 0)), ((0, 0, 0), (0, 1, 0))): _s165,
        (((1, 0, 0), (1, 1, 0)), ((0, 0, 0), (1, 0, 1))): _s166,
        (((1, 0, 0), (1, 1, 0)), ((0, 1, 0), (1, 0, 1))): _s167,
        (((1, 0, 0), (1, 0, 1)), ((0, 0, 0), (0, 1, 0))): _s168,
        (((1, 0, 0), (1, 0, 1)), ((0, 0, 0), (1, 1, 0))): _s169,
        (((1, 0, 0), (1, 0, 1)), ((0, 1, 0), (1, 1, 0))): _s170,
        (((0, 1, 0), (1, 1, 0)), ((0, 0, 0), (1, 0, 0))): _s171,
        (((0, 1, 0), (1, 1, 0)), ((0, 0, 0), (1, 0, 1))): _s172,
        (((0, 1, 0), (1, 1, 0)), ((1, 0, 0), (1, 0, 1))): _s173,
        (((0, 1, 0), (1, 0, 1)), ((0, 0, 0), (1, 0, 0))): _s174,
        (((0, 1, 0), (1, 0, 1)), ((0, 0, 0), (1, 1, 0))): _s175,
        (((0, 1, 0), (1, 0, 1)), ((1, 0, 0), (1, 1, 0))): _s176,
        (((1, 0, 1), (1, 1, 0)), ((0, 0, 0), (1, 0, 0))): _s177,
        (((1, 0, 1), (1, 1, 0)), ((0, 0, 0), (0, 1, 0))): _s178,
        (((1, 0, 1), (1, 1, 0)), ((0, 1, 0), (1, 0, 0))): _s179,
    },
    'c3_1': {
        (((0, 0, 0), (1, 0, 0)), ((0, 0, 1), (0, 1, 0))): _s184,
        (((0, 0, 0), (0, 1, 0)), ((0, 0, 1), (1, 0, 0))): _s185,
        (((0, 0, 0), (0, 0, 1)), ((0, 1, 0), (1, 0, 0))): _s186,
        (((0, 1, 0), (1, 0, 0)), ((0, 0, 0), (0, 0, 1))): _s187,
        (((0, 0, 1), (1, 0, 0)), ((0, 0, 0), (0, 1, 0))): _s188,
        (((0, 0, 1), (0, 1, 0)), ((0, 0, 0), (1, 0, 0))): _s189,
    },
    'c3_2': {
        (((0, 0, 0), (0, 0, 1)), ((0, 1, 1), (1, 0, 1))): _s194,
        (((0, 0, 0), (1, 0, 1)), ((0, 0, 1), (0, 1, 1))): _s195,
        (((0, 0, 0), (0, 1, 1)), ((0, 0, 1), (1, 0, 1))): _s196,
        (((0, 0, 1), (1, 0, 1)), ((0, 0, 0), (0, 1, 1))): _s197,
        (((0, 0, 1), (0, 1, 1)), ((0, 0, 0), (1, 0, 1))): _s198,
        (((0, 1, 1), (1, 0, 1)), ((0, 0, 0), (0, 0, 1))): _s199,
    },
}
