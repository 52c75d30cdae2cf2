"""Named parameter substitutions for known minus-one families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .errors import InvalidParams
from .field import Scalar, as_scalar
from .recurrence import continuous_to_rst, rst_params
from .seqs import ParamSet

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ResolvedPreset:
    name: str
    args: dict
    params: ParamSet
    shift: Scalar | None = None
    continuous: dict | None = None  # (y1, y2, w1, w2) for the continuous family


@dataclass(frozen=True)
class PresetInfo:
    name: str
    arg_names: tuple
    anchor: str
    build: Callable[..., tuple]


def _bannai_ito(alpha, beta, gamma, delta):
    p = ParamSet(
        a1=alpha + beta + gamma + delta + Fraction(3, 2),
        a2=1,
        b1=1 + 2 * beta,
        b2=1,
        d1=2 * gamma * delta - 2 * alpha * beta - beta + gamma + delta + _HALF,
        d2=-1 - 2 * alpha,
    )
    return p, None


def _big_jacobi(alpha, beta, c):
    if c == -1:
        raise InvalidParams("big-q-jacobi-limit needs c != -1")
    inv = 1 / (1 + c)
    p = ParamSet(
        a1=(1 + alpha + beta) * inv / 2,
        a2=inv,
        b1=c,
        b2=0,
        d1=(1 + alpha + beta) * inv / 2 - (1 + alpha) / 2,
        d2=inv,
    )
    return p, None


def _little_jacobi(alpha, beta):
    p = ParamSet(a1=(1 + alpha + beta) / 2, a2=1, b1=0, b2=0, d1=alpha / 2, d2=1)
    return p, None


def _chebyshev(a2, sign):
    if a2 == 0:
        raise InvalidParams("chebyshev-like needs a2 != 0")
    return ParamSet(a1=a2 / 2, a2=a2, b1=0, b2=0, d1=0, d2=sign * a2), None


def _zero_beta():
    return ParamSet(a1=_HALF, a2=1, b1=_HALF, b2=1, d1=Fraction(1, 4), d2=-_HALF), None


def _complementary(r1, r2, rho1, rho2):
    p = ParamSet(
        a1=rho1 + rho2 - r1 - r2 + _HALF,
        a2=1,
        b0=-_HALF,
        b1=-2 * r2 - _HALF,
        b2=1,
        d1=(1 - 2 * r1) * rho1 + (2 * r2 + 2) * rho2 - 2 * r1 + 1,
        d2=-2 * rho2,
    )
    return p, p.b0 + p.b1


def _complementary_alt(r1, r2, rho1, rho2):
    p = ParamSet(
        a1=rho1 + rho2 - r1 - r2 + _HALF,
        a2=1,
        b0=-_HALF,
        b1=2 * rho1 + _HALF,
        b2=1,
        d1=2 * r1 * r2 + (1 - 2 * rho1) * rho2 - r1 + _HALF,
        d2=-2 * rho2,
    )
    return p, p.b0 + p.b1


def _complementary_tilde(r1, r2, rho1, rho2):
    p = ParamSet(
        a1=rho1 + rho2 - r1 - r2 + _HALF,
        a2=1,
        b0=-_HALF,
        b1=2 * rho2 + _HALF,
        b2=1,
        d1=2 * r1 * r2 - 2 * rho1 * rho2 - r1 - r2 + rho1 + _HALF,
        d2=-2 * rho1,
    )
    return p, -p.d2 / p.a2


def continuous_bi_values(alpha, beta, gamma, delta) -> dict:
    return {
        "y1": 1 + 2 * (alpha + gamma),
        "y2": 2 * (beta + delta),
        "w1": 2 * (gamma - alpha),
        "w2": 2 * (delta - beta),
    }


_CONTINUOUS = object()


def _continuous_bi(alpha, beta, gamma, delta):
    ys = continuous_bi_values(alpha, beta, gamma, delta)
    r, s, t1, t2, b2 = continuous_to_rst(ys["y1"], ys["y2"], ys["w1"], ys["w2"])
    return rst_params(r, s, t1, t2, b2), _CONTINUOUS


PRESETS: dict[str, PresetInfo] = {
    info.name: info
    for info in (
        PresetInfo("bannai-ito", ("alpha", "beta", "gamma", "delta"),
                   "Bannai-Ito polynomials", _bannai_ito),
        PresetInfo("big-q-jacobi-limit", ("alpha", "beta", "c"),
                   "q -> -1 limit of the big q-Jacobi polynomials", _big_jacobi),
        PresetInfo("little-q-jacobi-limit", ("alpha", "beta"),
                   "q -> -1 limit of the little q-Jacobi polynomials", _little_jacobi),
        PresetInfo("chebyshev-like", ("a2", "sign"),
                   "family expanded in monic Chebyshev polynomials of the first kind", _chebyshev),
        PresetInfo("zero-beta", (),
                   "beta_n = 0, alpha_n = -n^2/4; generators of the zero-constant algebra", _zero_beta),
        PresetInfo("complementary-bi", ("r1", "r2", "rho1", "rho2"),
                   "complementary Bannai-Ito, Darboux shift w = b0 + b1", _complementary),
        PresetInfo("complementary-bi-alt", ("r1", "r2", "rho1", "rho2"),
                   "complementary Bannai-Ito, symmetric variant, shift w = b0 + b1 = 2 rho1", _complementary_alt),
        PresetInfo("complementary-bi-tilde", ("r1", "r2", "rho1", "rho2"),
                   "complementary Bannai-Ito in the dual gauge, shift w = -d2/a2 = 2 rho1", _complementary_tilde),
        PresetInfo("continuous-bi", ("alpha", "beta", "gamma", "delta"),
                   "continuous Bannai-Ito polynomials (b2 = i)", _continuous_bi),
    )
}


def _parse_sign(value) -> int:
    if isinstance(value, int) and not isinstance(value, bool) and value in (1, -1):
        return value
    text = str(value).strip()
    if text in ("+", "+1", "1", "plus"):
        return 1
    if text in ("-", "-1", "−", "minus"):
        return -1
    raise InvalidParams(f"sign must be '+' or '-', got {value!r}")


def preset(name: str, args: Mapping[str, object] | None = None) -> ResolvedPreset:
    """Resolve a named substitution; ``args`` maps argument names to scalars."""
    info = PRESETS.get(name)
    if info is None:
        raise InvalidParams(f"unknown preset {name!r}; known: {', '.join(sorted(PRESETS))}")
    args = dict(args or {})
    unknown = set(args) - set(info.arg_names)
    if unknown:
        raise InvalidParams(f"preset {name} does not take {', '.join(sorted(unknown))}")
    missing = [a for a in info.arg_names if a not in args]
    if missing:
        raise InvalidParams(f"preset {name} needs {', '.join(missing)}")
    values = {}
    for key in info.arg_names:
        values[key] = _parse_sign(args[key]) if key == "sign" else as_scalar(args[key])
    params, shift = info.build(*values.values())
    continuous = None
    if shift is _CONTINUOUS:
        shift = None
        continuous = continuous_bi_values(*values.values())
    return ResolvedPreset(name, values, params, shift, continuous)
