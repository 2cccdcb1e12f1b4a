"""The Conrad relation: diagnostics, meets/joins, orthogonality, segments."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analysis import (
    CheckResult,
    PASS,
    _fail,
    central_cover,
    classify,
    cover_ids_strict,
    cover_table,
    CentralCoverTable,
    zero_product_matrix,
)
from .errors import CoverAbsentError, PreconditionError, VerificationError
from .rings import StarRing, _frozen


def leq_bruteforce(ring: StarRing, a: int, b: int) -> bool:
    """a <= b iff a·r·b = a·r·a for every r."""
    a = ring.check(a)
    b = ring.check(b)
    M = ring.multiplication
    row = M[M[a]]
    return bool((row[:, b] == row[:, a]).all())


def leq_star_bruteforce(ring: StarRing, a: int, b: int) -> bool:
    """The starred variant: a*·r·b = a*·r·a for every r."""
    a = ring.check(a)
    b = ring.check(b)
    M = ring.multiplication
    row = M[M[ring.involution[a]]]
    return bool((row[:, b] == row[:, a]).all())


def leq_cover(ring: StarRing, a: int, b: int) -> bool:
    """a <= b via the cover characterization: a = C(a)·b."""
    a = ring.check(a)
    b = ring.check(b)
    c = central_cover(ring, a)
    if c is None:
        raise CoverAbsentError(f"{ring.label}: element {a} has no central cover")
    return int(ring.multiplication[c, b]) == a


def leq_matrix(ring: StarRing) -> np.ndarray:
    def build():
        M = ring.multiplication
        n = ring.order
        out = np.empty((n, n), dtype=bool)
        for a in range(n):
            t = M[M[a]]  # t[r, b] = (a·r)·b
            out[a] = (t == t[:, a][:, None]).all(axis=0)
        return _frozen(out)

    return ring.memo("leq_matrix", build)


def star_leq_matrix(ring: StarRing) -> np.ndarray:
    def build():
        M = ring.multiplication
        n = ring.order
        out = np.empty((n, n), dtype=bool)
        for a in range(n):
            t = M[M[ring.involution[a]]]
            out[a] = (t == t[:, a][:, None]).all(axis=0)
        return _frozen(out)

    return ring.memo("star_leq_matrix", build)


def cover_leq_matrix(ring: StarRing) -> np.ndarray:
    def build():
        covers = cover_ids_strict(ring)
        n = ring.order
        return _frozen(
            ring.multiplication[covers] == np.arange(n)[:, None]
        )

    return ring.memo("cover_leq_matrix", build)


def cub_matrix(ring: StarRing) -> np.ndarray:
    """cub[a, b] iff some c satisfies a <= c and b <= c."""

    def build():
        leq = leq_matrix(ring).astype(np.int32)
        return _frozen((leq @ leq.T) > 0)

    return ring.memo("cub_matrix", build)


@dataclass(frozen=True)
class AxiomCheck:
    holds: bool
    witness: tuple[int, ...] | None

    def to_json_dict(self) -> dict:
        return {
            "holds": self.holds,
            "witness": list(self.witness) if self.witness else None,
        }


@dataclass(frozen=True)
class OrderDiagnostics:
    reflexive: AxiomCheck
    antisymmetric: AxiomCheck
    transitive: AxiomCheck

    @property
    def all_pass(self) -> bool:
        return (
            self.reflexive.holds
            and self.antisymmetric.holds
            and self.transitive.holds
        )

    def first_failure(self) -> tuple[str, tuple[int, ...]] | None:
        for name in ("reflexive", "antisymmetric", "transitive"):
            check = getattr(self, name)
            if not check.holds:
                return name, check.witness
        return None

    def to_json_dict(self) -> dict:
        return {
            "reflexive": self.reflexive.to_json_dict(),
            "antisymmetric": self.antisymmetric.to_json_dict(),
            "transitive": self.transitive.to_json_dict(),
        }


@dataclass(frozen=True)
class OrderStructure:
    label: str
    order: int
    leq: np.ndarray
    diagnostics: OrderDiagnostics
    cub: np.ndarray
    covers: CentralCoverTable

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "order": self.order,
            "leq": [[bool(v) for v in row] for row in self.leq],
            "diagnostics": self.diagnostics.to_json_dict(),
            "cub": [[bool(v) for v in row] for row in self.cub],
            "covers": self.covers.to_json_dict()["cover"],
        }


def _diagnose(leq: np.ndarray) -> OrderDiagnostics:
    n = leq.shape[0]
    eye = np.eye(n, dtype=bool)

    refl_bad = np.flatnonzero(~leq[np.arange(n), np.arange(n)])
    reflexive = AxiomCheck(refl_bad.size == 0, (int(refl_bad[0]),) if refl_bad.size else None)

    anti = leq & leq.T & ~eye
    hits = np.argwhere(anti)
    antisymmetric = AxiomCheck(
        hits.size == 0, tuple(int(v) for v in hits[0]) if hits.size else None
    )

    reach = (leq.astype(np.int32) @ leq.astype(np.int32)) > 0
    viol = reach & ~leq
    witness = None
    if viol.any():
        a = int(np.flatnonzero(viol.any(axis=1))[0])
        for b in np.flatnonzero(leq[a]):
            cs = np.flatnonzero(leq[b] & ~leq[a])
            if cs.size:
                witness = (a, int(b), int(cs[0]))
                break
    transitive = AxiomCheck(witness is None, witness)
    return OrderDiagnostics(reflexive, antisymmetric, transitive)


def build_order(ring: StarRing) -> OrderStructure:
    """Fill the relation by brute force and diagnose the order axioms."""

    def build():
        leq = leq_matrix(ring)
        return OrderStructure(
            ring.label,
            ring.order,
            leq,
            _diagnose(leq),
            cub_matrix(ring),
            cover_table(ring),
        )

    return ring.memo("order_structure", build)


def has_cub(ring: StarRing, a: int, b: int, structure: OrderStructure | None = None) -> bool:
    """Common-upper-bound test via the cover formula a·C(b) = b·C(a)."""
    a = ring.check(a)
    b = ring.check(b)
    ca = central_cover(ring, a)
    cb = central_cover(ring, b)
    if ca is None or cb is None:
        raise CoverAbsentError(f"{ring.label}: cover absent for {a} or {b}")
    M = ring.multiplication
    result = int(M[a, cb]) == int(M[b, ca])
    if structure is not None and result != bool(structure.cub[a, b]):
        raise VerificationError(
            f"{ring.label}: cover formula and upper-bound scan disagree at ({a}, {b})"
        )
    return result


@dataclass(frozen=True)
class PairTables:
    """Per-pair meet/join values with order-theoretic verification bits.

    ``meet``/``join`` hold a·C(b) and a+b-a·C(b); ``meet_ok``/``join_ok``
    record whether an order-theoretic glb/lub exists (the formula value is
    replaced by a scanned one if the formula candidate fails, so a value
    differing from the formula is itself a finding).
    """

    cub: np.ndarray
    meet: np.ndarray
    meet_ok: np.ndarray
    join: np.ndarray
    join_ok: np.ndarray


def _glb_scan(leq: np.ndarray, a: int, b: int) -> int | None:
    lb = np.flatnonzero(leq[:, a] & leq[:, b])
    if not lb.size:
        return None
    block = leq[np.ix_(lb, lb)]
    hits = np.flatnonzero(block.all(axis=0))
    return int(lb[hits[0]]) if hits.size else None


def _lub_scan(leq: np.ndarray, a: int, b: int) -> int | None:
    ub = np.flatnonzero(leq[a] & leq[b])
    if not ub.size:
        return None
    block = leq[np.ix_(ub, ub)]
    hits = np.flatnonzero(block.all(axis=1))
    return int(ub[hits[0]]) if hits.size else None


def pair_tables(ring: StarRing) -> PairTables:
    def build():
        n = ring.order
        M = ring.multiplication
        A = ring.addition
        S = ring.sub_table()
        leq = leq_matrix(ring)
        covers = cover_ids_strict(ring)
        idx = np.arange(n)

        mv = M[:, covers].copy()      # mv[a, b] = a·C(b)
        jv = S[A, mv].copy()          # jv[a, b] = (a+b) - mv
        meet_ok = leq[mv, idx[:, None]] & leq[mv, idx[None, :]]
        join_ok = leq[idx[:, None], jv] & leq[idx[None, :], jv]
        for a in range(n):
            lower = leq[:, a][:, None] & leq       # [d, b]: d <= a and d <= b
            meet_ok[a] &= ~(lower & ~leq[:, mv[a]]).any(axis=0)
            upper = leq[a][:, None] & leq.T        # [d, b]: a <= d and b <= d
            join_ok[a] &= ~(upper & ~leq[jv[a]].T).any(axis=0)

        cub = cub_matrix(ring)
        # The formula candidates are expected to verify wherever a common
        # upper bound exists; fall back to a raw scan if one does not.
        for a, b in np.argwhere(cub & ~(meet_ok & join_ok)):
            g = _glb_scan(leq, int(a), int(b))
            if g is not None:
                mv[a, b] = g
                meet_ok[a, b] = True
            l = _lub_scan(leq, int(a), int(b))
            if l is not None:
                jv[a, b] = l
                join_ok[a, b] = True
        return PairTables(cub, _frozen(mv), _frozen(meet_ok), _frozen(jv), _frozen(join_ok))

    return ring.memo("pair_tables", build)


def _verify_glb(ring: StarRing, a: int, b: int, m: int) -> None:
    leq = leq_matrix(ring)
    if not (leq[m, a] and leq[m, b]):
        raise VerificationError(
            f"{ring.label}: meet formula value {m} is not a lower bound of ({a}, {b})"
        )
    lower = leq[:, a] & leq[:, b]
    if (lower & ~leq[:, m]).any():
        raise VerificationError(
            f"{ring.label}: meet formula value {m} is not greatest for ({a}, {b})"
        )


def _verify_lub(ring: StarRing, a: int, b: int, j: int) -> None:
    leq = leq_matrix(ring)
    if not (leq[a, j] and leq[b, j]):
        raise VerificationError(
            f"{ring.label}: join formula value {j} is not an upper bound of ({a}, {b})"
        )
    upper = leq[a] & leq[b]
    if (upper & ~leq[j]).any():
        raise VerificationError(
            f"{ring.label}: join formula value {j} is not least for ({a}, {b})"
        )


def meet(ring: StarRing, a: int, b: int) -> int | None:
    """a∧b = a·C(b), verified order-theoretically; None marks no-CUB."""
    a = ring.check(a)
    b = ring.check(b)
    if not has_cub(ring, a, b):
        return None
    m = int(ring.multiplication[a, central_cover(ring, b)])
    _verify_glb(ring, a, b, m)
    return m


def join(ring: StarRing, a: int, b: int) -> int | None:
    """a∨b = a+b-a∧b, verified order-theoretically; None marks no-CUB."""
    a = ring.check(a)
    b = ring.check(b)
    if not has_cub(ring, a, b):
        return None
    m = int(ring.multiplication[a, central_cover(ring, b)])
    _verify_glb(ring, a, b, m)
    j = int(ring.sub_table()[ring.addition[a, b], m])
    _verify_lub(ring, a, b, j)
    return j


def is_lattice(ring: StarRing) -> CheckResult:
    """Lattice criterion: a·C(b) = b·C(a) for all pairs."""
    covers = cover_ids_strict(ring)
    ac = ring.multiplication[:, covers]
    hits = np.argwhere(ac != ac.T)
    if hits.size:
        return _fail(hits[0])
    return PASS


def is_pseudo_lattice(ring: StarRing) -> CheckResult:
    """Every pair with a common upper bound has a verified meet and join."""
    pt = pair_tables(ring)
    bad = pt.cub & ~(pt.meet_ok & pt.join_ok)
    hits = np.argwhere(bad)
    if hits.size:
        return _fail(hits[0])
    return PASS


def subtractivity_check(ring: StarRing) -> tuple[CheckResult, CheckResult | None]:
    """Forward: a <= b implies C(b-a) = C(b) - C(a), checked on all pairs.

    Returns (forward, biconditional); the biconditional is only evaluated
    when 2 is invertible, and is None otherwise.
    """
    report = classify(ring)
    if not report.is_pq_baer_star:
        raise PreconditionError(f"{ring.label} is not a p.q.-Baer *-ring")
    covers = cover_ids_strict(ring)
    S = ring.sub_table()
    leq = leq_matrix(ring)
    cov_diff = covers[S.T]                      # C(b-a) at [a, b]
    rhs = S[covers[None, :], covers[:, None]]   # C(b)-C(a) at [a, b]
    eq = cov_diff == rhs
    hits = np.argwhere(leq & ~eq)
    forward = _fail(hits[0]) if hits.size else PASS
    if not report.is_two_invertible:
        return forward, None
    hits = np.argwhere(eq != leq)
    bicond = _fail(hits[0]) if hits.size else PASS
    return forward, bicond


def orthogonal(ring: StarRing, a: int, b: int) -> bool:
    """a ⊥ b iff a·r·b = 0 for every r."""
    a = ring.check(a)
    b = ring.check(b)
    M = ring.multiplication
    return not M[M[a], b].any()


def orthogonality_axioms(ring: StarRing) -> CheckResult:
    """Symmetry, downward inheritance, and 0 ⊥ x, checked exhaustively."""
    Z = zero_product_matrix(ring)
    leq = leq_matrix(ring)
    n = ring.order
    hits = np.argwhere(Z != Z.T)
    if hits.size:
        return _fail(hits[0], "symmetry")
    for x in range(n):
        viol = leq[x][:, None] & Z & ~Z[x][None, :]  # [y, z]
        if viol.any():
            y, z = np.argwhere(viol)[0]
            return _fail((x, y, z), "descends")
    bad = np.flatnonzero(~Z[0])
    if bad.size:
        return _fail((0, int(bad[0])), "zero-orthogonal")
    return PASS


def _require_pq(ring: StarRing) -> None:
    if not classify(ring).is_pq_baer_star:
        raise PreconditionError(f"{ring.label} is not a p.q.-Baer *-ring")


def ortho_join_check(ring: StarRing) -> CheckResult:
    """Orthogonal pairs have a common upper bound, meet 0, and join a+b."""
    _require_pq(ring)
    Z = zero_product_matrix(ring)
    pt = pair_tables(ring)
    good = pt.cub & pt.meet_ok & (pt.meet == 0) & pt.join_ok & (pt.join == ring.addition)
    hits = np.argwhere(Z & ~good)
    if hits.size:
        return _fail(hits[0])
    return PASS


def orthomodular_decomposition(ring: StarRing, a: int, b: int) -> int:
    """For a <= b return c = b - a, verified orthogonal to a with b = a+c = a∨c."""
    a = ring.check(a)
    b = ring.check(b)
    if not leq_bruteforce(ring, a, b):
        raise PreconditionError(f"{ring.label}: {a} <= {b} does not hold")
    c = int(ring.sub_table()[b, a])
    if not orthogonal(ring, a, c):
        raise VerificationError(
            f"{ring.label}: decomposition {b} = {a} + {c} is not orthogonal"
        )
    if int(ring.addition[a, c]) != b or join(ring, a, c) != b:
        raise VerificationError(
            f"{ring.label}: decomposition of {b} over {a} does not rejoin"
        )
    return c


def cancellation_check(ring: StarRing) -> CheckResult:
    """x ⊥ y, x ⊥ z, y <= x∨z imply y <= z, over all triples."""
    _require_pq(ring)
    Z = zero_product_matrix(ring)
    pt = pair_tables(ring)
    leq = leq_matrix(ring)
    n = ring.order
    for x in range(n):
        zs = Z[x] & pt.cub[x] & pt.join_ok[x]
        viol = Z[x][:, None] & leq[:, pt.join[x]] & ~leq  # [y, z]
        viol &= zs[None, :]
        if viol.any():
            y, z = np.argwhere(viol)[0]
            return _fail((x, y, z), "cancellation")
    return PASS


def quasi_orthomodular_check(ring: StarRing) -> CheckResult:
    """Orthogonal joins exist, decompositions exist, and cancellation holds."""
    _require_pq(ring)
    Z = zero_product_matrix(ring)
    pt = pair_tables(ring)
    leq = leq_matrix(ring)
    S = ring.sub_table()
    n = ring.order

    hits = np.argwhere(Z & ~(pt.cub & pt.join_ok))
    if hits.size:
        return _fail(hits[0], "join-exists")

    for x in range(n):
        ys = np.flatnonzero(leq[x])
        zc = S[ys, x]
        good = (
            Z[x, zc]
            & pt.cub[x, zc]
            & pt.join_ok[x, zc]
            & (pt.join[x, zc] == ys)
        )
        for i in np.flatnonzero(~good):
            y = int(ys[i])
            alt = np.flatnonzero(
                Z[x] & pt.cub[x] & pt.join_ok[x] & (pt.join[x] == y)
            )
            if not alt.size:
                return _fail((x, y), "decomposition")

    return cancellation_check(ring)


# ---------------------------------------------------------------------------
# Initial segments.


@dataclass(frozen=True)
class SegmentPoset:
    """The initial segment [0, m] with complement a -> m - a."""

    label: str
    top: int
    elements: tuple[int, ...]
    leq: np.ndarray              # induced order over positions in `elements`
    complement: tuple[int, ...]  # m - a, aligned with `elements`
    orthocomplemented: bool
    orthomodular: bool
    locality: bool
    witness: dict | None

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "top": self.top,
            "elements": list(self.elements),
            "leq": [[bool(v) for v in row] for row in self.leq],
            "complement": list(self.complement),
            "orthocomplemented": self.orthocomplemented,
            "orthomodular": self.orthomodular,
            "locality": self.locality,
            "witness": self.witness,
        }


def _seg_glb(L: np.ndarray, i: int, j: int) -> int | None:
    lb = np.flatnonzero(L[:, i] & L[:, j])
    if not lb.size:
        return None
    block = L[np.ix_(lb, lb)]
    hits = np.flatnonzero(block.all(axis=0))
    return int(lb[hits[0]]) if hits.size else None


def _seg_lub(L: np.ndarray, i: int, j: int) -> int | None:
    ub = np.flatnonzero(L[i] & L[j])
    if not ub.size:
        return None
    block = L[np.ix_(ub, ub)]
    hits = np.flatnonzero(block.all(axis=1))
    return int(ub[hits[0]]) if hits.size else None


def initial_segment(ring: StarRing, m: int) -> SegmentPoset:
    """Build [0, m] and verify orthocomplementation, orthomodularity, and
    agreement of segment orthogonality with ring orthogonality."""
    m = ring.check(m)
    cover_ids_strict(ring)
    leq = leq_matrix(ring)
    Z = zero_product_matrix(ring)
    S = ring.sub_table()

    elems = np.flatnonzero(leq[:, m])
    s = elems.size
    comp_raw = S[m, elems]
    L = leq[np.ix_(elems, elems)]

    def make(orthoc, orthom, local, witness):
        return SegmentPoset(
            ring.label,
            m,
            tuple(int(e) for e in elems),
            _frozen(L),
            tuple(int(c) for c in comp_raw),
            orthoc,
            orthom,
            local,
            witness,
        )

    def wit(axiom, parts):
        return {"axiom": axiom, "elements": [int(v) for v in parts]}

    pos = np.full(ring.order, -1, dtype=np.int64)
    pos[elems] = np.arange(s)
    comp = pos[comp_raw]
    outside = np.flatnonzero(comp < 0)
    if outside.size:
        a = int(elems[outside[0]])
        return make(False, False, False, wit("complement-in-segment", (a,)))

    top = int(pos[m])
    bottom = int(pos[0])
    witness = None

    # Orthocomplementation: a∧a' = 0, a∨a' = m, involution, antitone.
    orthoc = True
    for i in range(s):
        ci = int(comp[i])
        if _seg_glb(L, i, ci) != bottom:
            orthoc, witness = False, wit("complement-meet-zero", (elems[i],))
            break
        if _seg_lub(L, i, ci) != top:
            orthoc, witness = False, wit("complement-join-top", (elems[i],))
            break
    if orthoc:
        bad = np.flatnonzero(comp[comp] != np.arange(s))
        if bad.size:
            orthoc = False
            witness = wit("complement-involution", (elems[bad[0]],))
    if orthoc:
        anti = L & ~L[comp][:, comp].T  # i <= j but not comp(j) <= comp(i)
        hits = np.argwhere(anti)
        if hits.size:
            i, j = hits[0]
            orthoc = False
            witness = wit("complement-antitone", (elems[i], elems[j]))

    # Orthomodularity over the segment orthogonality a ⊥ b iff a <= b'.
    orthom = orthoc
    if orthom:
        for i in range(s):
            for j in np.flatnonzero(L[i, comp]):  # i <= comp(j)
                if _seg_lub(L, i, int(j)) is None:
                    orthom = False
                    witness = wit("orthogonal-join-exists", (elems[i], elems[j]))
                    break
            if not orthom:
                break
    if orthom:
        for i in range(s):
            for j in np.flatnonzero(L[i]):  # i <= j
                c = int(pos[S[elems[j], elems[i]]])
                if c >= 0 and L[c, comp[i]] and _seg_lub(L, i, c) == j:
                    continue
                found = False
                for c in range(s):
                    if L[c, comp[i]] and _seg_lub(L, i, c) == j:
                        found = True
                        break
                if not found:
                    orthom = False
                    witness = wit("orthomodular-decomposition", (elems[i], elems[j]))
                    break
            if not orthom:
                break

    # Locality: segment orthogonality coincides with ring orthogonality.
    local_mat = L[:, comp]
    ring_mat = Z[np.ix_(elems, elems)]
    hits = np.argwhere(local_mat != ring_mat)
    locality = hits.size == 0
    if not locality and witness is None:
        i, j = hits[0]
        witness = wit("segment-locality", (elems[i], elems[j]))

    return make(orthoc, orthom, locality, witness)


# ---------------------------------------------------------------------------
# Problem 2 and the Hasse diagram.


def problem2_check(ring: StarRing, include_left: bool = False) -> CheckResult:
    """a <= c, b <= c, aR ∩ bR = {0} imply a+b <= c, over all triples.

    With ``include_left`` the hypothesis also requires Ra ∩ Rb = {0}.
    """
    _require_pq(ring)
    M = ring.multiplication
    A = ring.addition
    leq = leq_matrix(ring)
    n = ring.order

    right = np.zeros((n, n), dtype=bool)
    left = np.zeros((n, n), dtype=bool)
    for a in range(n):
        right[a, M[a]] = True
        left[a, M[:, a]] = True
    rnz = right[:, 1:]
    lnz = left[:, 1:]
    for a in range(n):
        disjoint = ~(rnz[a][None, :] & rnz).any(axis=1)
        if include_left:
            disjoint &= ~(lnz[a][None, :] & lnz).any(axis=1)
        viol = leq[a][None, :] & leq & ~leq[A[a]]  # [b, c]
        viol &= disjoint[:, None]
        if viol.any():
            b, c = np.argwhere(viol)[0]
            return _fail((a, b, c))
    return PASS


def covering_matrix(leq: np.ndarray) -> np.ndarray:
    """b covers a iff a < b with nothing strictly between."""
    n = leq.shape[0]
    strict = leq & ~np.eye(n, dtype=bool)
    via = (strict.astype(np.int32) @ strict.astype(np.int32)) > 0
    return strict & ~via


def hasse_dot(ring: StarRing) -> str:
    """Deterministic DOT rendering of the covering relation."""
    structure = build_order(ring)
    if not structure.diagnostics.all_pass:
        name, witness = structure.diagnostics.first_failure()
        raise PreconditionError(
            f"{ring.label}: the relation is not a partial order "
            f"({name} fails at {witness})"
        )
    lines = [f'digraph "{ring.label}" {{', "  rankdir=BT;"]
    for i in range(ring.order):
        lines.append(f'  {i} [label="{ring.name_of(i)}"];')
    for a, b in np.argwhere(covering_matrix(structure.leq)):
        lines.append(f"  {int(a)} -> {int(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
