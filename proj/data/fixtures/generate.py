"""Writes the built-in fixture files sl2q.json and sl2c6.json.

Everything is computed with Fractions, independently of the C++ library.
Run from any directory: python3 data/fixtures/generate.py
"""
import json
import re
from fractions import Fraction as F
from pathlib import Path

HERE = Path(__file__).resolve().parent


def s(q):
    q = F(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def zeros(n):
    return [[F(0)] * n for _ in range(n)]


def matmul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def transpose(a):
    return [list(r) for r in zip(*a)]


def add(a, b, cb=1):
    return [[x + cb * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c, a):
    return [[c * x for x in r] for r in a]


def dump(m):
    return [[s(x) for x in r] for r in m]


def map_from_images(images, n):
    """images[j] is the coordinate vector of the image of e_j."""
    m = zeros(n)
    for j, v in enumerate(images):
        for i in range(n):
            m[i][j] = F(v[i])
    return m


def wedge(n, a, b):
    t = zeros(n)
    for i in range(n):
        for j in range(n):
            t[i][j] = F(a[i]) * b[j] - F(b[i]) * a[j]
    return t


# sl2 with basis x, h, y: [x,y] = h, [h,x] = 2x, [h,y] = -2y.
SL2 = {(0, 1): [-2, 0, 0], (0, 2): [0, 1, 0], (1, 2): [0, 0, -2]}
SL2_GRAM = [[0, 0, 1], [0, 2, 0], [1, 0, 0]]
X, H, Y = [1, 0, 0], [0, 1, 0], [0, 0, 1]
XPY = [1, 0, 1]


def sl2q():
    n = 3
    return {
        "name": "sl2q",
        "algebra": {
            "dim": n,
            "basis": ["x", "h", "y"],
            "field": {"kind": "Q"},
            "brackets": [{"i": i, "j": j, "coeffs": [s(c) for c in v]} for (i, j), v in sorted(SL2.items())],
        },
        "form": {"matrix": dump(map_from_images(SL2_GRAM, n))},
        "tensors": {
            "r1": {"coeffs": dump(wedge(n, H, X))},
            "r2": {"coeffs": dump(wedge(n, X, Y))},
            "r3": {"coeffs": dump(wedge(n, H, XPY))},
        },
        "maps": {"id": {"matrix": dump(map_from_images([[1 if i == j else 0 for i in range(n)] for j in range(n)], n))}},
    }


def sl2c6():
    n = 6
    # [a, b] = c, [ia, b] = [a, ib] = ic, [ia, ib] = -c
    brackets = {}
    for (i, j), v in SL2.items():
        real = list(v) + [0, 0, 0]
        im = [0, 0, 0] + list(v)
        brackets[(i, j)] = real
        brackets[(i, 3 + j)] = im
        brackets[(3 + i, 3 + j)] = [-c for c in real]
    for (i, j), v in SL2.items():
        # [i e_j, e_i] = i [e_j, e_i] = -i [e_i, e_j]  => [e_i, i e_j] entry already set;
        # the pair (j, 3+i) with j > i needs [e_j, i e_i] = i [e_j, e_i] = -im
        brackets[(j, 3 + i)] = [0, 0, 0] + [-c for c in v]
    gram = zeros(n)
    for i in range(3):
        for j in range(3):
            gram[i][j] = F(SL2_GRAM[i][j])
            gram[3 + i][3 + j] = -F(SL2_GRAM[i][j])

    def emb(v, imag=False):
        return [0, 0, 0] + list(v) if imag else list(v) + [0, 0, 0]

    ident = map_from_images([[1 if i == j else 0 for i in range(n)] for j in range(n)], n)
    # phi(a + ib) = ia - b
    phi = map_from_images([emb(X, True), emb(H, True), emb(Y, True),
                           [-c for c in emb(X)], [-c for c in emb(H)], [-c for c in emb(Y)]], n)
    # psi(a + ib) = a - ib
    psi = map_from_images([emb(X), emb(H), emb(Y),
                           [-c for c in emb(X, True)], [-c for c in emb(H, True)], [-c for c in emb(Y, True)]], n)
    minus_h = [-c for c in emb(H)]
    two_xpy = [2 * c for c in emb(XPY)]
    R = map_from_images([minus_h, two_xpy, minus_h,
                         [-c for c in emb(H, True)], [2 * c for c in emb(XPY, True)], [-c for c in emb(H, True)]], n)
    B = scale(F(1, 2), add(R, scale(2, phi), -1))
    # B(x) = -h/2 - ix, B(y) = -h/2 - iy, B(h) = x + y - ih, B(ia) = iB(a)
    Bx = [0, F(-1, 2), 0, -1, 0, 0]
    By = [0, F(-1, 2), 0, 0, 0, -1]
    Bh = [1, 0, 1, 0, -1, 0]
    for j, v in enumerate([Bx, Bh, By]):
        assert [B[i][j] for i in range(n)] == [F(c) for c in v]
        iv = [F(c) for c in v]
        i_of = [-iv[3], -iv[4], -iv[5], iv[0], iv[1], iv[2]]
        assert [B[i][3 + j] for i in range(n)] == i_of

    w = wedge(n, emb(H), emb(XPY))
    w_imag = wedge(n, emb(H, True), emb(XPY, True))
    r = add(w, w_imag, -1)  # (i (x) i)(h ^ (x + y)) = ih ^ (ix + iy)

    # r_B = -(id (x) phi + phi (x) id)(h(x)h/2 + x(x)y + y(x)x) + (id(x)id - phi(x)phi)(h ^ (x+y))/2
    C = zeros(n)
    C[1][1] = F(1, 2)
    C[0][2] = F(1)
    C[2][0] = F(1)
    sym = scale(-1, add(matmul(C, transpose(phi)), matmul(phi, C)))
    skew = scale(F(1, 2), add(w, matmul(matmul(phi, w), transpose(phi)), -1))
    rB = add(sym, skew)

    return {
        "name": "sl2c6",
        "algebra": {
            "dim": n,
            "basis": ["x", "h", "y", "ix", "ih", "iy"],
            "field": {"kind": "Q"},
            "brackets": [{"i": i, "j": j, "coeffs": [s(c) for c in v]} for (i, j), v in sorted(brackets.items())],
        },
        "form": {"matrix": dump(gram)},
        "tensors": {"r": {"coeffs": dump(r)}, "rB": {"coeffs": dump(rB)}},
        "maps": {
            "id": {"matrix": dump(ident)},
            "phi": {"matrix": dump(phi)},
            "2phi": {"matrix": dump(scale(2, phi))},
            "psi": {"matrix": dump(psi)},
            "R": {"matrix": dump(R)},
            "B": {"matrix": dump(B)},
        },
    }


if __name__ == "__main__":
    for fx in (sl2q(), sl2c6()):
        text = json.dumps(fx, indent=1)
        # keep rows of scalars on one line
        text = re.sub(r"\[\s*((?:\"[^\"]*\",?\s*)+)\]", lambda m: "[" + ", ".join(re.findall(r'"[^"]*"', m.group(1))) + "]", text)
        (HERE / f"{fx['name']}.json").write_text(text + "\n")
