"""Integer cohomology of the two slope families via Mayer-Vietoris.

For the family with quaternion group ``H`` and all slopes odd (``P``), the
cokernel of the Mayer-Vietoris map in degree 4 is the cokernel of

    [[ (pm^2+qm^2)/2, -(pp^2+qp^2)/2 ],
     [ (pm^2-qm^2)/8, -(pp^2-qp^2)/8 ]]

whose determinant is ``(pm^2 qp^2 - pp^2 qm^2)/8``.  For the family with
``H = Z4+Z2`` and ``pp`` even (``N``) the matrix is

    [[ (pm^2+qm^2)/2, -(pp^2+qp^2) ],
     [ (pm^2-qm^2)/2, -(pp^2-qp^2) ]]

with determinant ``pm^2 qp^2 - pp^2 qm^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diagram import Diagram
from .errors import FamilyMismatch, InternalInconsistency, NonIntegralEntry

__all__ = [
    "IntMatrix2",
    "SNFResult",
    "TopologyInvariants",
    "mv_matrix_P",
    "mv_matrix_N",
    "smith_normal_form",
    "invariants",
    "family_slopes",
    "family_invariants",
    "det2",
]

IntMatrix2 = tuple[tuple[int, int], tuple[int, int]]


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegralEntry(f"{what} = {num}/{den} is not an integer")
    return q


def _require_coprime(p: int, q: int):
    if gcd(p, q) != 1:
        raise NonIntegralEntry(f"slope pair ({p},{q}) is not coprime")


def mv_matrix_P(pm: int, qm: int, pp: int, qp: int) -> IntMatrix2:
    """Mayer-Vietoris matrix for the all-odd family."""
    if not all(x % 2 for x in (pm, qm, pp, qp)):
        raise NonIntegralEntry(f"all slopes must be odd, got ({pm},{qm}),({pp},{qp})")
    _require_coprime(pm, qm)
    _require_coprime(pp, qp)
    m2, n2 = pm * pm, qm * qm
    a2, b2 = pp * pp, qp * qp
    return (
        (_exact_div(m2 + n2, 2, "(pm^2+qm^2)/2"), -_exact_div(a2 + b2, 2, "(pp^2+qp^2)/2")),
        (_exact_div(m2 - n2, 8, "(pm^2-qm^2)/8"), -_exact_div(a2 - b2, 8, "(pp^2-qp^2)/8")),
    )


def mv_matrix_N(pm: int, qm: int, pp: int, qp: int) -> IntMatrix2:
    """Mayer-Vietoris matrix for the family with ``pp`` even and the rest odd."""
    if pp % 2 or not (pm % 2 and qm % 2 and qp % 2):
        raise NonIntegralEntry(
            f"need pm, qm, qp odd and pp even, got ({pm},{qm}),({pp},{qp})"
        )
    _require_coprime(pm, qm)
    _require_coprime(pp, qp)
    m2, n2 = pm * pm, qm * qm
    a2, b2 = pp * pp, qp * qp
    return (
        (_exact_div(m2 + n2, 2, "(pm^2+qm^2)/2"), -(a2 + b2)),
        (_exact_div(m2 - n2, 2, "(pm^2-qm^2)/2"), -(a2 - b2)),
    )


def det2(A: IntMatrix2) -> int:
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]


def matmul2(A, B) -> IntMatrix2:
    return tuple(
        tuple(sum(A[r][k] * B[k][c] for k in range(2)) for c in range(2)) for r in range(2)
    )


@dataclass(frozen=True)
class SNFResult:
    d1: int
    d2: int
    U: IntMatrix2
    V: IntMatrix2

    def diagonal(self) -> IntMatrix2:
        return ((self.d1, 0), (0, self.d2))

    def verify(self, A: IntMatrix2) -> bool:
        return (
            matmul2(matmul2(self.U, A), self.V) == self.diagonal()
            and abs(det2(self.U)) == 1
            and abs(det2(self.V)) == 1
        )


def smith_normal_form(A: IntMatrix2) -> SNFResult:
    """Smith normal form ``U A V = diag(d1, d2)`` with ``d1 | d2``, both >= 0."""
    M = [list(A[0]), list(A[1])]
    U = [[1, 0], [0, 1]]
    V = [[1, 0], [0, 1]]

    def row_op(i, j, k):  # row_i -= k row_j
        for c in range(2):
            M[i][c] -= k * M[j][c]
            U[i][c] -= k * U[j][c]

    def col_op(i, j, k):  # col_i -= k col_j
        for r in range(2):
            M[r][i] -= k * M[r][j]
            V[r][i] -= k * V[r][j]

    def swap_rows():
        M[0], M[1] = M[1], M[0]
        U[0], U[1] = U[1], U[0]

    def swap_cols():
        for X in (M, V):
            for r in range(2):
                X[r][0], X[r][1] = X[r][1], X[r][0]

    while True:
        entries = [(abs(M[r][c]), r, c) for r in range(2) for c in range(2) if M[r][c]]
        if not entries:
            break
        _, r, c = min(entries)
        if r:
            swap_rows()
        if c:
            swap_cols()
        # clear the first column and row by Euclidean steps on the pivot
        if M[1][0]:
            row_op(1, 0, M[1][0] // M[0][0])
            if M[1][0]:
                continue
        if M[0][1]:
            col_op(1, 0, M[0][1] // M[0][0])
            if M[0][1]:
                continue
        if M[1][1] % M[0][0]:
            # pull the offending entry into row 0 and repeat
            row_op(0, 1, -1)
            continue
        break
    for i in range(2):
        if M[i][i] < 0:
            for c in range(2):
                U[i][c] = -U[i][c]
            M[i][i] = -M[i][i]
    if M[0][0] == 0 and M[1][1] != 0:
        swap_rows()
        swap_cols()
    result = SNFResult(M[0][0], M[1][1], tuple(map(tuple, U)), tuple(map(tuple, V)))
    if not result.verify(tuple(map(tuple, A))):
        raise InternalInconsistency(f"Smith normal form reconstruction failed for {A}")
    return result


def _group(n: int) -> str:
    if n == 0:
        return "Z"
    if n == 1:
        return "0"
    return f"Z_{n}"


@dataclass(frozen=True)
class TopologyInvariants:
    family: str
    slopes: tuple[int, int, int, int]
    matrix: IntMatrix2
    det: int
    snf: tuple[int, int]
    two_connected: bool
    H2: str
    H3: str
    H4: str
    pi3: str | None = None
    caveat: str | None = None

    @property
    def det_abs(self) -> int:
        return abs(self.det)

    def to_json(self) -> dict:
        out = {"family": self.family, "slopes": list(self.slopes), "det": self.det, "snf": list(self.snf)}
        if self.family == "P":
            out["pi3"] = self.pi3
            out["H3"] = self.H3
            out["H4"] = self.H4
        else:
            out.update(H2=self.H2, H3=self.H3, H4=self.H4)
        if self.caveat:
            out["caveat"] = self.caveat
        return out

    def summary(self) -> str:
        if self.family == "P":
            text = f"pi3 = {self.pi3}"
        else:
            text = f"H2 = {self.H2}, H3 = {self.H3}, H4 = {self.H4}"
        if self.caveat:
            text += f"  ({self.caveat})"
        return text


def family_invariants(family: str, pm: int, qm: int, pp: int, qp: int) -> TopologyInvariants:
    """Invariants from raw slopes; ``family`` is ``P`` or ``N``."""
    if family == "P":
        A = mv_matrix_P(pm, qm, pp, qp)
        closed = pm * pm * qp * qp - pp * pp * qm * qm
        if closed % 8:
            raise InternalInconsistency(f"closed form {closed} not divisible by 8")
        closed //= 8
    elif family == "N":
        A = mv_matrix_N(pm, qm, pp, qp)
        closed = pm * pm * qp * qp - pp * pp * qm * qm
    else:
        raise FamilyMismatch(f"unknown family {family!r}")
    det = det2(A)
    if det != closed:
        raise InternalInconsistency(f"det {det} differs from closed form {closed}")
    snf = smith_normal_form(A)
    torsion = snf.d1 * snf.d2
    slopes = (pm, qm, pp, qp)
    if family == "P":
        if det == 0:
            return TopologyInvariants("P", slopes, A, 0, (snf.d1, snf.d2), True, "0", "Z", "Z", pi3="Z")
        g = _group(torsion)
        return TopologyInvariants("P", slopes, A, det, (snf.d1, snf.d2), True, "0", "0", g, pi3=g)
    if det == 0:
        return TopologyInvariants(
            "N", slopes, A, 0, (snf.d1, snf.d2), False, "Z", "Z", "Z",
            caveat="degenerate slopes; the free-rank rule of the P family is applied",
        )
    return TopologyInvariants("N", slopes, A, det, (snf.d1, snf.d2), False, "Z", "0", _group(torsion))


def family_slopes(d: Diagram) -> tuple[str, tuple[int, int, int, int]]:
    """Recognize the family of ``d`` and return slopes in that family's convention.

    ``N``-family slopes are arranged so that ``pp`` is even: if the even
    entry of the ``K+`` pair sits second, both pairs are factor-swapped.
    """
    if not (d.Kminus.is_circle and d.Kplus.is_circle):
        raise FamilyMismatch("both isotropy groups must be circle type")
    (pm, qm), (pp, qp) = d.Kminus.circle.slopes, d.Kplus.circle.slopes
    structure = d.H.structure()
    if structure == "Q":
        if not all(x % 2 for x in (pm, qm, pp, qp)):
            raise FamilyMismatch("P family needs all slopes odd")
        return "P", (pm, qm, pp, qp)
    if structure == "Z4+Z2":
        if (pp % 2) and not (pm % 2 == 0 or qm % 2 == 0):
            pm, qm, pp, qp = qm, pm, qp, pp
        if pp % 2 == 0 and pm % 2 and qm % 2 and qp % 2:
            return "N", (pm, qm, pp, qp)
        raise FamilyMismatch("N family needs K- slopes odd and one even K+ slope")
    raise FamilyMismatch(f"H of type {structure} matches neither family")


def invariants(d: Diagram) -> TopologyInvariants:
    family, slopes = family_slopes(d)
    return family_invariants(family, *slopes)
