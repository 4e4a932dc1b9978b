"""Worked elements shared by several test modules."""

EUCLIDEAN = dict(
    field="GF(2)",
    group="C5xC3:inner=2",
    a="e + y2 + x2 + x2y2 + x3y + x3y2 + x4y + x4y2",
    a_T="e + y + x3 + x3y + x2y + x2y2 + xy + xy2",
)

# rotation named b, reflection named a
HERMITIAN = dict(
    field="GF(9)",
    group="D5:names=b,a",
    a="1 + w5*b + 2*b2 + w6*b3 + w3*b4 + w2*a + w6*ab + w7*ab2 + w7*ab3 + w7*ab4",
    a_p="1 + w7*b + 2*b2 + w2*b3 + w*b4 + w6*a + w2*ab + w5*ab2 + w5*ab3 + w5*ab4",
    a_p_T="1 + w*b + w2*b2 + 2*b3 + w7*b4 + w6*a + w2*ab + w5*ab2 + w5*ab3 + w5*ab4",
)

SYMPLECTIC = dict(
    field="GF(3)",
    group="D11:names=b,a",
    a="b2 + 2*b4 + b5 + 2*b6 + 2*b7 + 2*b8 + 2*b9 + 2*b10 + 2*a + 2*ab + 2*ab2 + 2*ab3"
    " + 2*ab4 + 2*ab5 + 2*ab6 + 2*ab7 + 2*ab8 + 2*ab9 + 2*ab10",
    a_T="2*b + 2*b2 + 2*b3 + 2*b4 + 2*b5 + b6 + 2*b7 + b9 + 2*a + 2*ab + 2*ab2 + 2*ab3"
    " + 2*ab4 + 2*ab5 + 2*ab6 + 2*ab7 + 2*ab8 + 2*ab9 + 2*ab10",
)

PAIR = dict(
    field="GF(2)",
    group="D5:names=b,a",
    a="1 + b + b2 + b3 + ab + ab2",
    b="1 + a + ab + ab3",
    a_T="1 + b4 + b3 + b2 + ab + ab2",
    b_T="1 + a + ab + ab3",
)

TWOD_G = "x4y4 + x4y2 + x4 + x3y4 + x3y2 + x3 + y4 + y2 + 1"
TWOD_H = (
    "x11y8 + x11y6 + x11y2 + x11 + x10y8 + x10y6 + x10y2 + x10 + x9y8 + x9y6 + x9y2 + x9"
    " + x8y8 + x8y6 + x8y2 + x8 + x6y8 + x6y6 + x6y2 + x6 + x4y8 + x4y6 + x4y2 + x4"
    " + x3y8 + x3y6 + x3y2 + x3 + y8 + y6 + y2 + 1"
)
TWOD_HSTAR = (
    "x^11y^8 + x^11y^6 + x^11y^2 + x^11 + x^8y^8 + x^8y^6 + x^8y^2 + x^8 + x^7y^8 + x^7y^6"
    " + x^7y^2 + x^7 + x^5y^8 + x^5y^6 + x^5y^2 + x^5 + x^3y^8 + x^3y^6 + x^3y^2 + x^3"
    " + x^2y^8 + x^2y^6 + x^2y^2 + x^2 + xy^8 + xy^6 + xy^2 + x + y^8 + y^6 + y^2 + 1"
)
TWOD_GSTAR = "x4y4 + x4y2 + x4 + xy4 + xy2 + x + y4 + y2 + 1"
TWOD_GGSTAR = (
    "x8y8 + x8y4 + x8 + x7y8 + x7y4 + x7 + x5y8 + x5y4 + x5 + x4y8 + x4y4 + x4"
    " + x3y8 + x3y4 + x3 + xy8 + xy4 + x + y8 + y4 + 1"
)

REMARK = dict(
    l=8,
    m=6,
    f1="x5y4 + x5y2 + x5",
    f2="x6y5 + x6y4 + y4",
    f1f2="x11y9 + x11y8 + x11y7 + x11y6 + x11y5 + x11y4 + x5y8 + x5y6 + x5y4",
    f1f2_mod="x5y4 + x5y2 + x5 + x3y5 + x3y4 + x3y3 + x3y2 + x3y + x3",
    f1s="y4 + y2 + 1",
    f2s="x6y + y + 1",
    f1sf2s="x6y5 + x6y3 + x6y + y5 + y4 + y3 + y2 + y + 1",
    f1f2_mod_s="x2y5 + x2y4 + x2y3 + x2y2 + x2y + x2 + y5 + y3 + y",
    f1f2_s="x6y5 + x6y3 + x6y + y5 + y4 + y3 + y2 + y + 1",
)
