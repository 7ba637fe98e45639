"""Exact alpha-Hurwitz complex continued fractions.

Thin convenience layer over the compiled core: exact values travel as
decimal strings inside the extension and come back out as ``int`` and
``fractions.Fraction``. Parameters and points are pairs of anything
``Fraction`` accepts ("2/3", Fraction(2, 3), 0.5, ...).
"""

from fractions import Fraction

from . import _hurwitz as _core

__all__ = [
    "in_domain",
    "expand",
    "expand_float",
    "evaluate",
    "convergents",
    "gauss",
    "nearest",
    "real_convergents",
    "best_approx_check",
    "partition",
    "circles",
    "verify",
    "cell_count",
    "render_svg",
]


def _s(value):
    return str(Fraction(value))


def _pair(alpha):
    a1, a2 = alpha
    return _s(a1), _s(a2)


def in_domain(alpha, z):
    """Half-open membership of the exact point z in the domain square."""
    a1, a2 = _pair(alpha)
    re, im = z
    return _core.in_domain(a1, a2, _s(re), _s(im))


def expand(alpha, z, max_steps=4096):
    """Exact expansion of z; returns (digits, terminated).

    Digits are (re, im) integer pairs. A rational argument always
    terminates well before the default step cap.
    """
    a1, a2 = _pair(alpha)
    re, im = z
    out = _core.expand_exact(a1, a2, _s(re), _s(im), max_steps)
    return [(int(r), int(i)) for r, i in out["digits"]], out["terminated"]


def expand_float(alpha, z, max_steps=64, zero_epsilon=1e-12):
    """Floating-point expansion of complex z; returns (digits, terminated)."""
    a1, a2 = _pair(alpha)
    z = complex(z)
    out = _core.expand_float(a1, a2, z.real, z.imag, max_steps, zero_epsilon)
    return [(int(r), int(i)) for r, i in out["digits"]], out["terminated"]


def evaluate(digits):
    """Exact value of a finite digit string as a (Fraction, Fraction) pair."""
    re, im = _core.evaluate_cf([(str(r), str(i)) for r, i in digits])
    return Fraction(re), Fraction(im)


def convergents(digits):
    """Convergent numerators and denominators as ((re, im), (re, im)) pairs."""
    out = _core.convergents([(str(r), str(i)) for r, i in digits])
    return [((int(p[0]), int(p[1])), (int(q[0]), int(q[1]))) for p, q in out]


def gauss(x, max_steps=64):
    """Regular continued fraction digits of a rational x in (0, 1)."""
    f = Fraction(x)
    return [int(a) for a in _core.gauss_expand(str(f.numerator), str(f.denominator), max_steps)]


def nearest(x, max_steps=64):
    """Nearest-integer continued fraction digits of a rational x."""
    f = Fraction(x)
    return [int(a) for a in _core.nearest_int_expand(str(f.numerator), str(f.denominator), max_steps)]


def real_convergents(digits):
    """(p, q) integer pairs for a real digit string."""
    return [(int(p), int(q)) for p, q in _core.real_convergents([str(a) for a in digits])]


def best_approx_check(x, p, q, q_bound):
    """Is p/q optimal for x among all denominators up to q_bound?"""
    return _core.best_approx_check(float(x), p, q, q_bound)


def partition(alpha, max_depth=64, workers=1):
    """Run the closure for alpha and return its report dict (counts as int)."""
    a1, a2 = _pair(alpha)
    rep = _core.partition(a1, a2, max_depth, workers)
    for key in ("n_alpha", "b_norm_sq_max"):
        if rep[key] is not None:
            rep[key] = int(rep[key])
    return rep


def circles(alpha):
    """Stabilized circle set as dicts of Fraction coefficients."""
    a1, a2 = _pair(alpha)
    out = []
    for d in _core.circles(a1, a2):
        out.append({
            "a": Fraction(d["a"]),
            "b": (Fraction(d["b_re"]), Fraction(d["b_im"])),
            "c": Fraction(d["c"]),
            "is_line": d["is_line"],
        })
    return out


def verify(alpha):
    """Closure stabilizes and every node satisfies the exact invariants."""
    a1, a2 = _pair(alpha)
    return _core.verify_invariants(a1, a2)


def cell_count(alpha, grid=500):
    """Number of connected components the circle set cuts the square into."""
    a1, a2 = _pair(alpha)
    return _core.cell_count(a1, a2, grid)


def render_svg(alpha, width=900, height=900):
    """SVG drawing of the partition, as a string."""
    a1, a2 = _pair(alpha)
    return _core.render_svg(a1, a2, width, height)
