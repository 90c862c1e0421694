"""Exhaustive information-theoretic audit of a dealt scheme instance.

For every participant subset A (up to size t), every secret index j, and
every set T of other secret indices assumed known, the auditor
enumerates the exact set of coefficient vectors consistent with A's
shares and tallies the conditional distribution of s_j.  Verdicts come
from exact integer counts, never floating point:

* determined - a point mass (the subset pins the secret down),
* uniform    - literally equal counts over the whole coefficient domain,
* leaky      - anything in between: the subset's shares shift the
               distribution without determining the value.

The audit passes only when authorized subsets are determined at the
dealt value and unauthorized ones stay exactly uniform for every T.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

from . import linalg
from .coalition import privileged_rank_oracle
from .errors import CapacityError, ParameterError
from .scheme import SchemeConfig, SecretVector, SharePairs, deal, _normalize_pairs
from .symfun import Track

FULL_FIELD = "full-field"  # secrets range over F_p, blinding nonzero
ALL_NONZERO = "all-nonzero"  # every coefficient nonzero
DOMAINS = (FULL_FIELD, ALL_NONZERO)

ENUMERATION_GUARD = 10**8  # p**t above this is not desk-scale


def _check_capacity(cfg: SchemeConfig) -> None:
    size = cfg.field.p**cfg.t
    if size > ENUMERATION_GUARD:
        raise CapacityError(
            f"p^t = {cfg.field.p}^{cfg.t} = {size} exceeds the "
            f"{ENUMERATION_GUARD} enumeration guard"
        )


def _check_domain(domain: str) -> None:
    if domain not in DOMAINS:
        raise ParameterError(f"unknown coefficient domain {domain!r}")


def _admissible(vec: tuple[int, ...], domain: str) -> bool:
    if domain == FULL_FIELD:
        return vec[-1] != 0
    return all(vec)


def consistent_polynomials(
    shares: SharePairs | Mapping[int, int],
    cfg: SchemeConfig,
    domain: str = FULL_FIELD,
) -> Iterator[tuple[int, ...]]:
    """All coefficient vectors in the domain matching the given shares.

    The share equations carve an affine subspace out of F_p^t; the
    subspace is enumerated directly (one kernel coordinate per missing
    constraint) and filtered by the domain predicate.  Inconsistent
    shares yield an empty stream.
    """
    _check_capacity(cfg)
    _check_domain(domain)
    pairs = _normalize_pairs(shares)
    known = set(cfg.identities)
    for i, _ in pairs:
        if i not in known:
            raise ParameterError(f"identity {i} is not a participant")
    t, p = cfg.t, cfg.field.p
    rows = [[pow(i, v, p) for v in range(t)] for i, _ in pairs]
    rhs = [y % p for _, y in pairs]
    solution = linalg.solve_affine(rows, rhs, p, t)
    if solution is None:
        return
    particular, basis = solution
    if not basis:
        vec = tuple(particular)
        if _admissible(vec, domain):
            yield vec
        return
    for alphas in itertools.product(range(p), repeat=len(basis)):
        vec = list(particular)
        for a, kvec in zip(alphas, basis):
            if a:
                for idx, coord in enumerate(kvec):
                    vec[idx] = (vec[idx] + a * coord) % p
        tvec = tuple(vec)
        if _admissible(tvec, domain):
            yield tvec


def conditional_distribution(
    shares: SharePairs | Mapping[int, int],
    j: int,
    known_secrets: Mapping[int, int],
    cfg: SchemeConfig,
    domain: str = FULL_FIELD,
) -> dict[int, int]:
    """Exact histogram of s_j given the shares and the known secrets.

    known_secrets maps secret indices (0..t-2, excluding j) to their
    values; the count for each candidate value of s_j is the number of
    consistent coefficient vectors realizing it.
    """
    if not 0 <= j <= cfg.t - 2:
        raise ParameterError(f"secret index {j} outside [0, {cfg.t - 2}]")
    for idx in known_secrets:
        if not 0 <= idx <= cfg.t - 2:
            raise ParameterError(f"known-secret index {idx} outside [0, {cfg.t - 2}]")
        if idx == j:
            raise ParameterError(f"index {j} cannot be both target and known")
    hist: dict[int, int] = {}
    items = tuple(known_secrets.items())
    for vec in consistent_polynomials(shares, cfg, domain):
        if all(vec[idx] == val for idx, val in items):
            hist[vec[j]] = hist.get(vec[j], 0) + 1
    return hist


DETERMINED = "determined"
UNIFORM = "uniform"
LEAKY = "leaky"


def _classify(hist: dict[int, int], p: int, domain: str) -> str:
    support = [v for v, c in hist.items() if c]
    if len(support) == 1:
        return DETERMINED
    full = range(p) if domain == FULL_FIELD else range(1, p)
    counts = {hist.get(v, 0) for v in full}
    if len(counts) == 1 and 0 not in counts:
        return UNIFORM
    return LEAKY


@dataclass(frozen=True)
class AuditCell:
    """Verdict for one (subset, secret index, known-set) combination."""

    subset: Track
    j: int
    known: tuple[int, ...]
    authorized: bool
    verdict: str
    histogram: tuple[tuple[int, int], ...] | None = None

    def to_dict(self) -> dict:
        out = {
            "subset": list(self.subset),
            "j": self.j,
            "known": list(self.known),
            "authorized": self.authorized,
            "verdict": self.verdict,
        }
        if self.histogram is not None:
            out["histogram"] = [list(pair) for pair in self.histogram]
        return out


@dataclass(frozen=True)
class AuditReport:
    config: SchemeConfig
    domain: str
    secret_vector: SecretVector
    passed: bool
    cells: tuple[AuditCell, ...]
    violations: tuple[AuditCell, ...]
    notes: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "version": 1,
            "t": self.config.t,
            "p": self.config.field.p,
            "identities": list(self.config.identities),
            "domain": self.domain,
            "secrets": list(self.secret_vector.secrets),
            "blinding": self.secret_vector.blinding,
            "passed": self.passed,
            "cells_checked": len(self.cells),
            "violations": [c.to_dict() for c in self.violations],
            "notes": list(self.notes),
        }


def perfectness_report(
    cfg: SchemeConfig,
    secret_vector: SecretVector | None = None,
    domain: str = FULL_FIELD,
    seed: int = 0,
) -> AuditReport:
    """Audit one dealt instance exhaustively.

    Deals the given secret vector (or a seed-derived one), then checks
    every (subset, j, known-set) cell.  Under the full-field domain the
    report passes only if authorized subsets are determined at the dealt
    value and unauthorized ones are exactly uniform for every known-set;
    under the all-nonzero domain uniformity deviations are recorded as
    notes without failing, since the restricted domain is not a product
    space and exact uniformity is not to be expected.
    """
    _check_capacity(cfg)
    _check_domain(domain)
    t, field = cfg.t, cfg.field
    p = field.p
    sv = secret_vector if secret_vector is not None else SecretVector.random(field, t, seed)
    table = deal(cfg, sv)
    dealt = sv.coefficients
    secret_indices = range(t - 1)

    cells: list[AuditCell] = []
    violations: list[AuditCell] = []
    notes: list[str] = []

    for size in range(0, t + 1):
        for subset in itertools.combinations(cfg.identities, size):
            pairs = table.subset(subset)
            vectors = list(consistent_polynomials(pairs, cfg, domain))
            if not vectors:
                notes.append(f"subset {subset}: no consistent polynomial (tampered shares?)")
                violations.append(
                    AuditCell(subset=subset, j=-1, known=(), authorized=False, verdict=LEAKY)
                )
                continue
            for j in secret_indices:
                authorized = size == t or privileged_rank_oracle(subset, t, j, field)
                others = [i for i in secret_indices if i != j]
                for ksize in range(len(others) + 1):
                    for known in itertools.combinations(others, ksize):
                        hist: dict[int, int] = {}
                        for vec in vectors:
                            if all(vec[idx] == dealt[idx] for idx in known):
                                hist[vec[j]] = hist.get(vec[j], 0) + 1
                        verdict = _classify(hist, p, domain)
                        ok = True
                        if authorized:
                            ok = verdict == DETERMINED and hist.get(dealt[j], 0) == sum(
                                hist.values()
                            )
                        elif domain == FULL_FIELD:
                            ok = verdict == UNIFORM
                        elif verdict != UNIFORM:
                            notes.append(
                                f"subset {subset} j={j} known={known}: "
                                f"non-uniform under {ALL_NONZERO} (informational)"
                            )
                        cell = AuditCell(
                            subset=subset,
                            j=j,
                            known=known,
                            authorized=authorized,
                            verdict=verdict,
                            histogram=tuple(sorted(hist.items())) if not ok else None,
                        )
                        cells.append(cell)
                        if not ok:
                            violations.append(cell)

    return AuditReport(
        config=cfg,
        domain=domain,
        secret_vector=sv,
        passed=not violations,
        cells=tuple(cells),
        violations=tuple(violations),
        notes=tuple(notes),
    )


def ideality_check(cfg: SchemeConfig, share_components: int = 1) -> bool:
    """Shares and secrets live in domains of the same size.

    Every secret is one residue mod p and every participant holds
    share_components residues; the scheme is ideal exactly when a share
    is a single residue.
    """
    if share_components < 1:
        raise ParameterError("a share has at least one component")
    return cfg.field.p**share_components == cfg.field.p
