"""Formulas as originally printed that disagree with the direct construction.

Each function here evaluates a printed closed form verbatim. They exist so
the test suite and ``verify --suite errata`` can show, reproducibly, that
the printed expression fails the generic construction while the corrected
closed form in :mod:`induced_uncertainty.uncertainty` passes it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import quantum as q
from .distributions import DistributionLike, as_distribution, certain, make_distribution
from .divergences import DivergenceSpec
from .uncertainty import MeasureId, closed_form, u_down, u_up


def printed_js_uncertainty(p: DistributionLike) -> float:
    """Jensen-Shannon uncertainty with the printed constant log2(4n^2/(n+1)^((1+n)/n))."""
    p = as_distribution(p).probs
    n = p.size
    const = math.log2(4 * n * n / (n + 1) ** ((1 + n) / n))
    pos = p[p > 0]
    m = (n * p + 1) / 2
    return float(const - np.sum(pos * np.log2(pos)) + (2 / n) * np.sum(m * np.log2(m)))


def printed_hellinger_uncertainty(p: DistributionLike) -> float:
    """The printed Hellinger result ``1 - sum p^2``."""
    p = as_distribution(p).probs
    return float(1.0 - np.sum(p ** 2))


def printed_down_tsallis(beta: float, p: DistributionLike) -> float:
    """``(1 - n^b - sum p^(1-b)) / (n^b (b - 1))``, the printed down-Tsallis form."""
    p = as_distribution(p).probs
    n = p.size
    s = np.sum(p[p > 0] ** (1.0 - beta))
    return float((1.0 - n ** beta - s) / (n ** beta * (beta - 1.0)))


def printed_down_renyi_relation(alpha: float, p: DistributionLike) -> float:
    """``(alpha - 1)/alpha`` times the Renyi entropy of order alpha."""
    return (alpha - 1.0) / alpha * closed_form(MeasureId.renyi(alpha), p)


def printed_tsallis_divergence(beta: float, p: DistributionLike, qd: DistributionLike) -> float:
    """Tsallis divergence with the ``-1`` inside the sum, as printed."""
    p, qq = as_distribution(p).probs, as_distribution(qd).probs
    pos = p > 0
    with np.errstate(divide="ignore"):
        terms = np.where(pos, np.where(pos, p, 1.0) ** beta * qq ** (1.0 - beta), 0.0)
    return float(np.sum((terms - 1.0) / (beta - 1.0)))


def printed_bures_uncertainty(rho) -> float:
    """``(tr sqrt(rho) - 1)/sqrt(d)``, the printed Bures/Hellinger mixedness."""
    r = q.as_density_matrix(rho)
    return float((np.sum(np.sqrt(r.eigenvalues)) - 1.0) / math.sqrt(r.dim))


def printed_quantum_tsallis(beta: float, rho) -> float:
    """``-(tr rho^b - 1) / (d^(1-b) (1 - b))``, the printed quantum Tsallis mixedness."""
    r = q.as_density_matrix(rho)
    lam = r.eigenvalues
    tr = float(np.sum(lam[lam > 0] ** beta))
    return -1.0 / r.dim ** (1.0 - beta) * (tr - 1.0) / (1.0 - beta)


@dataclass(frozen=True)
class Erratum:
    """One printed-versus-direct comparison."""

    name: str
    where: str
    printed: float
    direct: float
    corrected: float
    reproduced: bool

    def describe(self) -> str:
        return (f"{self.name}: {self.where}: printed={self.printed:.9g} "
                f"direct={self.direct:.9g} corrected={self.corrected:.9g} "
                f"gap={self.printed - self.direct:.9g}")


def _js() -> Erratum:
    c = certain(2, 0)
    printed = printed_js_uncertainty(c)
    direct = u_up(DivergenceSpec.jensen_shannon(), c)
    corrected = closed_form(MeasureId.jensen_shannon(), c)
    ok = abs(printed - 2.0) <= 1e-9 and abs(direct) <= 1e-12 and abs(corrected) <= 1e-12
    return Erratum("js-constant", "U_JS at {1,0}", printed, direct, corrected, ok)


def _hellinger() -> Erratum:
    p = make_distribution([0.75, 0.25])
    printed = printed_hellinger_uncertainty(p)
    direct = u_up(DivergenceSpec.hellinger(), p)
    corrected = closed_form(MeasureId.hellinger(), p)
    ok = (abs(printed - 0.375) <= 1e-12 and abs(direct - 0.517638090205) <= 1e-9
          and abs(corrected - direct) <= 1e-12)
    return Erratum("hellinger-form", "U_H at {0.75,0.25}", printed, direct, corrected, ok)


def _down_tsallis(beta: float = 0.5) -> Erratum:
    c = certain(3, 0)
    printed = printed_down_tsallis(beta, c)
    direct = u_down(DivergenceSpec.tsallis(beta), c)
    corrected = closed_form(MeasureId.down_tsallis(beta), c)
    ok = (abs(printed - 1.0 / (1.0 - beta)) <= 1e-12 and abs(direct) <= 1e-12
          and abs(corrected) <= 1e-12)
    return Erratum("down-tsallis", f"U_down Tsallis(beta={beta:g}) at certain",
                   printed, direct, corrected, ok)


def _down_renyi(alpha: float = 0.5) -> Erratum:
    p = make_distribution([0.75, 0.25])
    printed = printed_down_renyi_relation(alpha, p)
    direct = u_down(DivergenceSpec.renyi(alpha), p)
    gamma = 1.0 - alpha
    corrected = (1.0 - gamma) / gamma * closed_form(MeasureId.renyi(gamma), p)
    ok = printed < 0 and direct > 0 and abs(corrected - direct) <= 1e-12
    return Erratum("down-renyi-relation", f"U_down Renyi(alpha={alpha:g}) at {{0.75,0.25}}",
                   printed, direct, corrected, ok)


def _bures() -> Erratum:
    rho = q.maximally_mixed(2)
    spec = q.QDistanceSpec.bures()
    printed = printed_bures_uncertainty(rho)
    direct = q.induced_quantum_uncertainty(spec, rho)
    corrected = q.quantum_closed_form(spec, rho)
    ok = abs(direct - 2.0 * printed) <= 1e-9 and abs(corrected - direct) <= 1e-9
    return Erratum("bures-factor", "Bures mixedness at I/2", printed, direct, corrected, ok)


def _quantum_tsallis(beta: float = 2.0) -> Erratum:
    rho = q.maximally_mixed(2)
    spec = q.QDistanceSpec.gen_tsallis(beta)
    printed = printed_quantum_tsallis(beta, rho)
    direct = q.induced_quantum_uncertainty(spec, rho)
    corrected = q.quantum_closed_form(spec, rho)
    ok = printed < 0 < direct and abs(corrected - direct) <= 1e-9
    return Erratum("quantum-tsallis-sign", f"generalized Tsallis(beta={beta:g}) at I/2",
                   printed, direct, corrected, ok)


CLASSICAL_ERRATA = (_js, _hellinger, _down_tsallis)
EXTRA_ERRATA = (_down_renyi, _bures, _quantum_tsallis)


def collect_errata() -> list[Erratum]:
    """Evaluate every erratum; the first three are the classical closed forms."""
    return [f() for f in CLASSICAL_ERRATA + EXTRA_ERRATA]
