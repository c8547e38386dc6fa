"""Deterministic rendering: monomials, scalars, polynomials, vector fields,
and the machine/human report wrapper emitted by the CLI.

The deformation parameter prints as "t", the nilpotent as "eps", sqrt(-1)
as "i". Byte output is a pure function of the data: terms are ordered by
descending exponent vectors, JSON uses sorted keys.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .cocycles import CechCocycle, RationalFunction, VectorField
from .ring import Gaussian, Polynomial, Scalar


def frac_str(q: Fraction) -> str:
    return str(q)


def gaussian_str(g: Gaussian) -> str:
    if g.im == 0:
        return frac_str(g.re)
    if g.re == 0:
        if g.im == 1:
            return "i"
        if g.im == -1:
            return "-i"
        return f"{frac_str(g.im)}*i"
    im = "i" if g.im == 1 else ("-i" if g.im == -1 else f"{frac_str(g.im)}*i")
    joiner = "+" if not im.startswith("-") else ""
    return f"({frac_str(g.re)}{joiner}{im})"


def _lambda_poly_parts(coeffs, suffix: str) -> list[str]:
    parts = []
    for power, g in enumerate(coeffs):
        if not g:
            continue
        names = []
        if power == 1:
            names.append("t")
        elif power > 1:
            names.append(f"t^{power}")
        if suffix:
            names.append(suffix)
        gs = gaussian_str(g)
        if not names:
            parts.append(gs)
        elif gs == "1":
            parts.append("*".join(names))
        elif gs == "-1":
            parts.append("-" + "*".join(names))
        else:
            parts.append("*".join([gs] + names))
    return parts


def scalar_str(c: Scalar) -> str:
    parts = _lambda_poly_parts(c.base, "") + _lambda_poly_parts(c.eps, "eps")
    if not parts:
        return "0"
    if len(parts) == 1:
        return parts[0]
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return f"({out})"


def monomial_str(exps, one: str = "1") -> str:
    nums = []
    dens = []
    for i, e in enumerate(exps):
        name = f"x{i + 1}"
        if e > 0:
            nums.append(name if e == 1 else f"{name}^{e}")
        elif e < 0:
            dens.append(name if e == -1 else f"{name}^{-e}")
    num = "*".join(nums) if nums else one
    if not dens:
        return num
    return f"{num}/({'*'.join(dens)})"


def term_str(exps, c: Scalar) -> str:
    cs = scalar_str(c)
    ms = monomial_str(exps)
    if ms == "1":
        return cs
    if cs == "1":
        return ms
    if cs == "-1":
        return f"-{ms}"
    return f"{cs}*{ms}"


def polynomial_str(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    parts = [term_str(e, c) for e, c in p.sorted_terms()]
    out = parts[0]
    for part in parts[1:]:
        out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
    return out


def rational_function_str(r: RationalFunction) -> str:
    num = polynomial_str(r.num)
    if r.den == Polynomial.one(r.den.nvars):
        return num
    return f"({num})/({polynomial_str(r.den)})"


def vector_field_str(v: VectorField) -> str:
    if v.is_zero():
        return "0"
    parts = []
    for i in sorted(v.components):
        parts.append(f"({rational_function_str(v.components[i])})*d{i + 1}")
    return " + ".join(parts)


def cocycle_entries_payload(coc: CechCocycle) -> dict:
    out = {}
    seen = set()
    for a in coc.charts:
        for b in coc.charts:
            if a == b or (b, a) in seen:
                continue
            seen.add((a, b))
            out[f"{_chart_key(a)}|{_chart_key(b)}"] = vector_field_str(coc.entry(a, b))
    return out


def _chart_key(chart) -> str:
    if isinstance(chart, tuple):
        return "(" + ",".join(str(x + 1) if i == 0 else str(x)
                              for i, x in enumerate(chart)) + ")"
    return str(chart + 1) if isinstance(chart, int) else str(chart)


@dataclass
class Report:
    command: str
    payload: dict

    def to_json(self) -> str:
        return json.dumps(self.payload, sort_keys=True, indent=2,
                          separators=(",", ": ")) + "\n"

    def to_text(self) -> str:
        lines = [f"toric-deform {self.command}"]
        lines.extend(_text_lines(self.payload, ""))
        return "\n".join(lines) + "\n"


def _text_lines(value, indent: str) -> list[str]:
    lines = []
    if isinstance(value, dict):
        for key in sorted(value):
            sub = value[key]
            if isinstance(sub, (dict, list)):
                lines.append(f"{indent}{key}:")
                lines.extend(_text_lines(sub, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {sub}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{indent}-")
                lines.extend(_text_lines(item, indent + "  "))
            else:
                lines.append(f"{indent}- {item}")
    else:
        lines.append(f"{indent}{value}")
    return lines
