"""Symmetric logistic-type maps of the complex plane.

Three members of the family are supported::

    DIHEDRAL     f(z) = (a + b|z|^2) z + d conj(z)^(m-1)
    CYCLIC       f(z) = (a + b|z|^2 + c i) z + d conj(z)^(m-1)
    DIHEDRAL_RE  f(z) = (a + b|z|^2 + gamma Re(z^n)) z + d conj(z)^(m-1)

Every map can be evaluated in complex arithmetic (:func:`evaluate`) or from
its expanded real polynomials (:func:`evaluate_cartesian`).  The expansion is
generated symbolically from binomial identities, see :func:`cartesian_terms`.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass
from math import comb

import numpy as np

__all__ = [
    "MapKind",
    "MapSpec",
    "evaluate",
    "evaluate_cartesian",
    "cartesian_terms",
    "format_polynomial",
    "dihedral_d3",
    "cyclic_c4",
    "dihedral_re_d6",
]


class MapKind(str, enum.Enum):
    DIHEDRAL = "dihedral"
    CYCLIC = "cyclic"
    DIHEDRAL_RE = "dihedral-re"


@dataclass(frozen=True)
class MapSpec:
    """Parameters of one map; ``c`` is used only by CYCLIC, ``gamma`` and
    ``n_power`` only by DIHEDRAL_RE."""

    kind: MapKind
    m: int
    a: float
    b: float
    d: float
    c: float = 0.0
    gamma: float = 0.0
    n_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", MapKind(self.kind))
        for name in ("a", "b", "c", "d", "gamma"):
            object.__setattr__(self, name, float(getattr(self, name)))
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "n_power", int(self.n_power))
        if self.m < 2:
            raise ValueError(f"m must be >= 2 (conj(z)^(m-1) is constant for m = 1), got {self.m}")
        if self.kind is MapKind.DIHEDRAL:
            if self.c != 0.0 or self.gamma != 0.0:
                raise ValueError("dihedral map requires c = 0 and gamma = 0")
        elif self.kind is MapKind.CYCLIC:
            if self.c == 0.0:
                raise ValueError("cyclic map requires c != 0")
            if self.gamma != 0.0:
                raise ValueError("cyclic map requires gamma = 0")
        else:
            if self.c != 0.0:
                raise ValueError("dihedral-re map requires c = 0")
            if self.gamma == 0.0:
                raise ValueError("dihedral-re map requires gamma != 0")
            if self.n_power < 1:
                raise ValueError("dihedral-re map requires n_power >= 1")

    def replace(self, **changes) -> MapSpec:
        fields = asdict(self)
        fields.update(changes)
        return MapSpec(**fields)

    def __call__(self, z):
        return evaluate(self, z)

    # plain-text key = value block
    def to_config(self) -> str:
        lines = [f"kind = {self.kind.value}", f"m = {self.m}"]
        for name in ("a", "b", "c", "d", "gamma"):
            lines.append(f"{name} = {getattr(self, name)!r}")
        lines.append(f"n_power = {self.n_power}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_config(cls, text: str) -> MapSpec:
        values = parse_key_values(text)
        known = {"kind", "m", "a", "b", "c", "d", "gamma", "n_power"}
        unknown = set(values) - known
        if unknown:
            raise ValueError(f"unknown map keys: {sorted(unknown)}")
        missing = {"kind", "m", "a", "b", "d"} - set(values)
        if missing:
            raise ValueError(f"missing map keys: {sorted(missing)}")
        return cls(
            kind=MapKind(values["kind"]),
            m=int(values["m"]),
            a=float(values["a"]),
            b=float(values["b"]),
            d=float(values["d"]),
            c=float(values.get("c", 0.0)),
            gamma=float(values.get("gamma", 0.0)),
            n_power=int(values.get("n_power", 0)),
        )


def parse_key_values(text: str) -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment, blank lines skipped."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


def dihedral_d3() -> MapSpec:
    """D_3 map with a = -1.804, b = 1, d = 0.5."""
    return MapSpec(MapKind.DIHEDRAL, m=3, a=-1.804, b=1.0, d=0.5)


def cyclic_c4() -> MapSpec:
    """C_4 map with a = -1.86, b = 2.1, c = 0.1, d = -1."""
    return MapSpec(MapKind.CYCLIC, m=4, a=-1.86, b=2.1, c=0.1, d=-1.0)


def dihedral_re_d6() -> MapSpec:
    """D_6 map with alpha = -2.584, beta = 5, gamma = -2, delta = -1, n = 6."""
    return MapSpec(MapKind.DIHEDRAL_RE, m=6, a=-2.584, b=5.0, d=-1.0, gamma=-2.0, n_power=6)


def evaluate(spec: MapSpec, z):
    """f(z) in complex arithmetic; works on scalars and numpy arrays."""
    if isinstance(z, np.ndarray):
        zc = np.conj(z)
        modsq = (z * zc).real
        tail = spec.d * zc ** (spec.m - 1)
    else:
        z = complex(z)
        zc = z.conjugate()
        modsq = (z * zc).real
        try:
            tail = spec.d * zc ** (spec.m - 1)
        except OverflowError:
            return complex(float("nan"), float("nan"))
    coef = spec.a + spec.b * modsq
    if spec.kind is MapKind.CYCLIC:
        coef = coef + 1j * spec.c
    elif spec.kind is MapKind.DIHEDRAL_RE:
        try:
            zn = z ** spec.n_power
        except OverflowError:
            return complex(float("nan"), float("nan"))
        coef = coef + spec.gamma * ((zn + zn.conjugate()) / 2).real
    return coef * z + tail


# A real polynomial is a dict {(i, j): coefficient} for the monomial x^i y^j.
Poly = dict


def _add(p: Poly, q: Poly, scale: float = 1.0) -> Poly:
    out = dict(p)
    for key, val in q.items():
        out[key] = out.get(key, 0.0) + scale * val
    return {k: v for k, v in out.items() if v != 0.0}


def _mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for (i1, j1), v1 in p.items():
        for (i2, j2), v2 in q.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0.0) + v1 * v2
    return {k: v for k, v in out.items() if v != 0.0}


def _power_parts(p: int, conjugate: bool) -> tuple[Poly, Poly]:
    """Real and imaginary parts of z^p (or conj(z)^p) by the binomial theorem."""
    re: Poly = {}
    im: Poly = {}
    for k in range(p + 1):
        # (i y)^k = i^k y^k; conjugation flips the sign of y
        coef = float(comb(p, k)) * (-1.0) ** (k if conjugate else 0)
        unit = k % 4  # i^k cycles 1, i, -1, -i
        if unit == 0:
            re[(p - k, k)] = re.get((p - k, k), 0.0) + coef
        elif unit == 1:
            im[(p - k, k)] = im.get((p - k, k), 0.0) + coef
        elif unit == 2:
            re[(p - k, k)] = re.get((p - k, k), 0.0) - coef
        else:
            im[(p - k, k)] = im.get((p - k, k), 0.0) - coef
    return re, im


def cartesian_terms(spec: MapSpec) -> tuple[Poly, Poly]:
    """Expanded polynomials (f1, f2) with f = f1 + i f2."""
    x: Poly = {(1, 0): 1.0}
    y: Poly = {(0, 1): 1.0}
    # real scalar factor multiplying z
    radial: Poly = {(0, 0): spec.a}
    radial = _add(radial, {(2, 0): spec.b, (0, 2): spec.b})
    if spec.kind is MapKind.DIHEDRAL_RE:
        re_zn, _ = _power_parts(spec.n_power, conjugate=False)
        radial = _add(radial, re_zn, spec.gamma)
    radial = {k: v for k, v in radial.items() if v != 0.0}

    f1 = _mul(radial, x)
    f2 = _mul(radial, y)
    if spec.kind is MapKind.CYCLIC:
        f1 = _add(f1, y, -spec.c)
        f2 = _add(f2, x, spec.c)
    re_tail, im_tail = _power_parts(spec.m - 1, conjugate=True)
    f1 = _add(f1, re_tail, spec.d)
    f2 = _add(f2, im_tail, spec.d)
    return f1, f2


def _eval_poly(poly: Poly, x, y):
    total = 0.0
    for (i, j), coef in poly.items():
        total = total + coef * x**i * y**j
    return total


def evaluate_cartesian(spec: MapSpec, x, y):
    """(f1(x, y), f2(x, y)) from the expanded real polynomials."""
    f1, f2 = cartesian_terms(spec)
    return _eval_poly(f1, x, y), _eval_poly(f2, x, y)


def format_polynomial(poly: Poly, precision: int = 6) -> str:
    """Human-readable form, highest total degree first."""
    terms = []
    for (i, j), coef in sorted(poly.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
        mono = "".join(
            name if p == 1 else f"{name}^{p}" for name, p in (("x", i), ("y", j)) if p
        )
        value = f"{abs(coef):.{precision}g}"
        if mono and value == "1":
            value = ""
        sign = "-" if coef < 0 else "+"
        terms.append(f"{sign} {value}{mono}".rstrip())
    if not terms:
        return "0"
    text = " ".join(terms)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]
