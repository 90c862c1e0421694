"""The multi-secret sharing scheme: dealing, access structures, recovery.

The dealer hides t-1 secrets s_0..s_{t-2} as the low coefficients of a
degree-(t-1) polynomial whose top coefficient is a nonzero blinding
value, and hands participant i the evaluation at its public identity.
Any t participants recover the whole coefficient vector by solving the
Vandermonde system; a privileged coalition of r < t participants
recovers its coefficient through a cofactor expansion in which the
terms needing the missing t-r shares provably vanish.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import linalg
from .coalition import is_minimal_privileged, is_unextended, privileged_rank_oracle, valid_lengths
from .errors import AuthorizationError, ParameterError
from .field import PrimeField
from .symfun import Track, as_track, elem_sym, poly_eval, vandermonde_det

SharePairs = Sequence[tuple[int, int]]


@dataclass(frozen=True)
class SchemeConfig:
    """Threshold t, the prime field, and the participants' public identities."""

    t: int
    field: PrimeField
    identities: Track

    def __post_init__(self) -> None:
        object.__setattr__(self, "identities", as_track(self.identities, self.field))
        if self.t < 2:
            raise ParameterError(f"threshold t = {self.t} must be at least 2")
        if self.t > self.field.p:
            raise ParameterError(
                f"threshold t = {self.t} exceeds the field order {self.field.p}"
            )
        if len(self.identities) < self.t:
            raise ParameterError(
                f"{len(self.identities)} participants cannot support threshold {self.t}"
            )

    @property
    def n(self) -> int:
        return len(self.identities)


@dataclass(frozen=True)
class SecretVector:
    """The t-1 secrets plus the nonzero blinding coefficient a_{t-1}."""

    secrets: tuple[int, ...]
    blinding: int
    field: PrimeField

    def __post_init__(self) -> None:
        object.__setattr__(self, "secrets", tuple(int(s) for s in self.secrets))
        for s in self.secrets:
            if not 0 <= s < self.field.p:
                raise ParameterError(f"secret {s} is not a residue mod {self.field.p}")
        if not 1 <= self.blinding < self.field.p:
            raise ParameterError("the blinding coefficient must be a nonzero residue")

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Ascending-power coefficient vector (s_0, ..., s_{t-2}, blinding)."""
        return self.secrets + (self.blinding,)

    @classmethod
    def random(cls, field: PrimeField, t: int, seed: int) -> "SecretVector":
        """Deterministic pseudo-random vector for a given seed.

        Reproducibility is the point here; the generator is not a CSPRNG,
        so real deployments should supply their own secrets.
        """
        rng = random.Random(seed)
        secrets = tuple(rng.randrange(field.p) for _ in range(t - 1))
        return cls(secrets=secrets, blinding=rng.randrange(1, field.p), field=field)


@dataclass(frozen=True)
class ShareTable:
    """One share per participant, keyed by public identity."""

    config: SchemeConfig
    entries: tuple[tuple[int, int], ...]

    def share(self, identity: int) -> int:
        for ident, value in self.entries:
            if ident == identity:
                return value
        raise ParameterError(f"identity {identity} holds no share")

    def subset(self, identities: Iterable[int]) -> list[tuple[int, int]]:
        return [(i, self.share(i)) for i in sorted(set(identities))]

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


@dataclass(frozen=True)
class AuthorizedSet:
    """A minimal authorized identity set, tagged by how it qualifies."""

    members: Track
    kind: str  # "threshold" | "privileged" | "unextended"


@dataclass(frozen=True)
class AccessStructure:
    """Per secret index j, the family of minimal authorized sets."""

    config: SchemeConfig
    per_index: tuple[tuple[AuthorizedSet, ...], ...]

    def minimal_sets(self, j: int) -> tuple[AuthorizedSet, ...]:
        if not 0 <= j <= self.config.t - 2:
            raise ParameterError(f"secret index {j} outside [0, {self.config.t - 2}]")
        return self.per_index[j]

    def to_dict(self) -> dict:
        return {
            "version": 1,
            "t": self.config.t,
            "p": self.config.field.p,
            "identities": list(self.config.identities),
            "structure": {
                str(j): [
                    {"members": list(a.members), "kind": a.kind}
                    for a in sets
                ]
                for j, sets in enumerate(self.per_index)
            },
        }


def derive_access_structure(cfg: SchemeConfig) -> AccessStructure:
    """Minimal authorized sets for every secret index.

    For j = 0 these are exactly the t-subsets of participants.  For
    1 <= j <= t-2 they are the minimal privileged coalitions among the
    participants plus any unextended t-subsets (t-subsets containing no
    privileged coalition, which are therefore minimally authorized).
    """
    t, field, ids = cfg.t, cfg.field, cfg.identities
    per_index: list[tuple[AuthorizedSet, ...]] = []
    per_index.append(
        tuple(
            AuthorizedSet(members=sub, kind="threshold")
            for sub in itertools.combinations(ids, t)
        )
    )
    for j in range(1, t - 1):
        sets: list[AuthorizedSet] = []
        for r in valid_lengths(t, j):
            if r > len(ids):
                continue
            for sub in itertools.combinations(ids, r):
                if is_minimal_privileged(sub, t, j, field):
                    assert privileged_rank_oracle(sub, t, j, field)
                    sets.append(AuthorizedSet(members=sub, kind="privileged"))
        for sub in itertools.combinations(ids, t):
            if is_unextended(sub, t, j, field):
                sets.append(AuthorizedSet(members=sub, kind="unextended"))
        per_index.append(tuple(sets))
    return AccessStructure(config=cfg, per_index=tuple(per_index))


def deal(cfg: SchemeConfig, sv: SecretVector) -> ShareTable:
    """Evaluate the scheme polynomial at every participant identity."""
    if sv.field.p != cfg.field.p:
        raise ParameterError("secret vector and configuration use different fields")
    if len(sv.secrets) != cfg.t - 1:
        raise ParameterError(
            f"{len(sv.secrets)} secrets supplied; threshold {cfg.t} needs {cfg.t - 1}"
        )
    coeffs = sv.coefficients
    entries = tuple((i, poly_eval(coeffs, i, cfg.field)) for i in cfg.identities)
    return ShareTable(config=cfg, entries=entries)


def _normalize_pairs(shares: SharePairs | Mapping[int, int]) -> list[tuple[int, int]]:
    pairs = sorted(shares.items()) if isinstance(shares, Mapping) else sorted(shares)
    ids = [i for i, _ in pairs]
    if len(set(ids)) != len(ids):
        raise ParameterError("duplicate identity among the supplied shares")
    return pairs


def solve_shares(shares: SharePairs | Mapping[int, int], cfg: SchemeConfig) -> tuple[int, ...]:
    """Solve the full t x t system by elimination; returns the coefficient vector."""
    pairs = _normalize_pairs(shares)
    t, p = cfg.t, cfg.field.p
    if len(pairs) != t:
        raise ParameterError(f"full recovery needs exactly t = {t} shares, got {len(pairs)}")
    rows = []
    for i, _ in pairs:
        row = [1] * t
        for v in range(1, t):
            row[v] = row[v - 1] * i % p
        rows.append(row)
    rhs = [y % p for _, y in pairs]
    solution = linalg.solve_square(rows, rhs, p)
    assert solution is not None, "distinct identities give a nonsingular system"
    return tuple(solution)


def recover_full(shares: SharePairs | Mapping[int, int], j: int, cfg: SchemeConfig) -> int:
    """Coefficient a_j from exactly t shares (j = t-1 yields the blinding)."""
    if not 0 <= j <= cfg.t - 1:
        raise ParameterError(f"coefficient index {j} outside [0, {cfg.t - 1}]")
    return solve_shares(shares, cfg)[j]


def extension_track(track: Track, t: int, field: PrimeField) -> Track:
    """The t-r smallest nonzero residues disjoint from the track."""
    need = t - len(track)
    taken = set(track)
    out = [x for x in range(1, field.p) if x not in taken][:need]
    if len(out) < need:
        raise ParameterError(
            f"field of order {field.p} has too few residues for a disjoint extension"
        )
    return tuple(out)


def recover_privileged(
    shares: SharePairs | Mapping[int, int],
    t: int,
    j: int,
    field: PrimeField,
    extension: Track | None = None,
) -> int:
    """Recover a_j from a privileged coalition of r < t shares.

    Extends the coalition by a disjoint track u (the smallest free
    residues unless one is supplied), then evaluates the cofactor
    expansion of the Cramer determinant for column j along that column.
    The cofactors of the rows belonging to u carry a factor
    tau_{t-1-j}(coalition + u-minus-one), which vanishes for a privileged
    coalition, so only the coalition's own shares enter the sum.  The
    result is identical for every admissible u.
    """
    pairs = _normalize_pairs(shares)
    track = as_track([i for i, _ in pairs], field)
    ys = [y % field.p for _, y in pairs]
    r = len(track)
    if r >= t:
        raise ParameterError(f"coalition recovery needs fewer than t = {t} shares")
    if not privileged_rank_oracle(track, t, j, field):
        raise AuthorizationError(
            f"coalition {track} cannot determine coefficient {j}"
        )
    if extension is None:
        ext = extension_track(track, t, field)
    else:
        ext = tuple(extension)
        if len(ext) != t - r:
            raise ParameterError(
                f"extension length {len(ext)} differs from t - r = {t - r}"
            )
        if len(set(ext)) != len(ext) or set(ext) & set(track):
            raise ParameterError("extension must be disjoint from the coalition")
        for v in ext:
            if not 1 <= v <= field.p - 1:
                raise ParameterError(f"extension element {v} outside [1, {field.p - 1}]")
    p = field.p
    b = t - 1 - j
    for m in range(len(ext)):
        dropped = track + ext[:m] + ext[m + 1 :]
        assert elem_sym(dropped, b, field) == 0, "missing-share coefficient must vanish"
    total = 0
    for k in range(r):
        seq = track[:k] + track[k + 1 :] + ext
        minor = vandermonde_det(seq, field) * elem_sym(seq, b, field) % p
        if (k + j) % 2:
            minor = -minor
        total = (total + minor * ys[k]) % p
    return total * field.inv(vandermonde_det(track + ext, field)) % p


def recover(shares: SharePairs | Mapping[int, int], j: int, cfg: SchemeConfig) -> int:
    """Recover secret s_j from any authorized subset of shares.

    With at least t shares the t lexicographically smallest identities
    are solved directly; otherwise the subset itself must be a privileged
    coalition for index j (privilege is monotone, so if any subtrack
    qualifies the whole subset does).
    """
    pairs = _normalize_pairs(shares)
    known = set(cfg.identities)
    for i, _ in pairs:
        if i not in known:
            raise ParameterError(f"identity {i} is not a participant")
    if not 0 <= j <= cfg.t - 1:
        raise ParameterError(f"coefficient index {j} outside [0, {cfg.t - 1}]")
    if len(pairs) >= cfg.t:
        return recover_full(pairs[: cfg.t], j, cfg)
    track = tuple(i for i, _ in pairs)
    if not privileged_rank_oracle(track, cfg.t, j, cfg.field):
        raise AuthorizationError(
            f"subset {track} is not authorized for secret index {j}"
        )
    return recover_privileged(pairs, cfg.t, j, cfg.field)
