"""Handle presentations of Weinstein domains and their boundary topology.

The boundary engine is dimension generic: for a compact handlebody W of
total dimension d with handle indices <= m < d, the long exact sequence of
(W, Y = boundary W) plus Poincare-Lefschetz duality H^k(W, Y) = H_{d-k}(W)
gives, over Q,

    dim H^k(Y) = (dim H^k(W) - r_k) + (dim H_{d-k-1}(W) - r_{k+1}),

where r_j is the rank of the intersection pairing H_{d-j}(W) x H_j(W) -> Q.
r_j is forced to 0 whenever either side has rank 0; the remaining ranks
cannot be read off the chain complex (they encode attaching framings), so
they are caller data, and degrees depending on missing ranks are reported
as undetermined rather than guessed.
"""

from dataclasses import dataclass, field

from .graded import (
    ChainComplex,
    GradedGroup,
    cohomology_from_homology,
    euler_characteristic,
    homology,
    semi_characteristic,
)
from .serialize import SCHEMA_VERSION, SchemaError, check_schema, matrix_from_json, matrix_to_json
from .snf import smith_normal_form


class HandlePresentation:
    """A Weinstein domain W^{2n} as handles plus integer boundary matrices.

    handles: iterable of indices, or of (index, label) pairs.  All indices
    must lie in [0, n] and there must be exactly one 0-handle unless
    allow_many_zero_handles is set.  intersection_form, when given, is the
    integer matrix of the middle-dimensional pairing on the n-handles
    (framing data; not derivable from the chain complex).
    """

    def __init__(self, n, handles, boundaries=None, intersection_form=None,
                 allow_many_zero_handles=False):
        self.n = int(n)
        if self.n < 1:
            raise ValueError(f"half-dimension n must be >= 1, got {n}")
        norm = []
        for i, h in enumerate(handles):
            if isinstance(h, int):
                norm.append((h, f"h{h}.{i}"))
            else:
                k, label = h
                norm.append((int(k), str(label)))
        self.handles = tuple(norm)
        for k, label in self.handles:
            if not 0 <= k <= self.n:
                raise ValueError(
                    f"handle {label!r} has index {k}, outside [0, {self.n}]")
        counts = {}
        for k, _ in self.handles:
            counts[k] = counts.get(k, 0) + 1
        if counts.get(0, 0) != 1 and not allow_many_zero_handles:
            raise ValueError(
                f"expected exactly one 0-handle, got {counts.get(0, 0)} "
                "(pass allow_many_zero_handles to override)")
        self.chain = ChainComplex(counts, boundaries or {})
        if counts.get(0, 0) == 1 and self.chain.boundary(1) is not None:
            raise ValueError(
                "with a single 0-handle every 1-handle boundary is zero")
        self.intersection_form = None
        if intersection_form is not None:
            m = [[int(x) for x in row] for row in intersection_form]
            nn = counts.get(self.n, 0)
            if len(m) != nn or any(len(r) != nn for r in m):
                raise ValueError(
                    f"intersection form must be {nn}x{nn} for {nn} {self.n}-handles")
            self.intersection_form = m

    @property
    def total_dim(self):
        return 2 * self.n

    def handle_counts(self):
        return dict(self.chain.dims)

    def homology(self) -> GradedGroup:
        return homology(self.chain)

    def cohomology(self) -> GradedGroup:
        return cohomology_from_homology(self.homology())

    def euler_characteristic(self) -> int:
        return self.chain.euler_characteristic()

    def to_json(self):
        doc = {
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "handles": [{"index": k, "label": label} for k, label in self.handles],
            "boundary_matrices": {str(k): matrix_to_json(m)
                                  for k, m in sorted(self.chain.boundaries.items())},
        }
        if self.intersection_form is not None:
            doc["intersection_form"] = matrix_to_json(self.intersection_form)
        return doc

    @staticmethod
    def from_json(doc):
        check_schema(doc, "HandlePresentation")
        try:
            n = int(doc["n"])
            handles = [(int(h["index"]), str(h.get("label", f"h{i}")))
                       for i, h in enumerate(doc["handles"])]
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"HandlePresentation: {exc}") from None
        boundaries = {int(k): matrix_from_json(m)
                      for k, m in (doc.get("boundary_matrices") or {}).items()}
        form = doc.get("intersection_form")
        if form is not None:
            form = matrix_from_json(form)
        try:
            return HandlePresentation(n, handles, boundaries, form,
                                      allow_many_zero_handles=bool(
                                          doc.get("allow_many_zero_handles", False)))
        except ValueError as exc:
            raise SchemaError(f"HandlePresentation: {exc}") from None


def cohomology(p: HandlePresentation):
    """(H_*(W;Z), H^*(W;Z)) of the domain; cohomology via universal coefficients."""
    h = p.homology()
    return h, cohomology_from_homology(h)


@dataclass(frozen=True)
class BoundaryHomologyReport:
    """Q-dimensions (and forced integral groups) of the boundary Y of a handlebody.

    q_dims holds only the determined degrees; degrees whose value needs a
    missing pairing rank are listed in undetermined.  integral_homology maps
    degree j to the forced H_j(Y;Z) descriptor (rank, invariant factors).
    """
    boundary_dim: int
    q_dims: dict
    undetermined: tuple
    integral_homology: dict
    euler: int
    notes: tuple = field(default=())

    def dim(self, k):
        """dim_Q H_k(Y), or None when undetermined."""
        if k in self.undetermined:
            return None
        return self.q_dims.get(k, 0)

    @property
    def fully_determined(self):
        return not self.undetermined

    def graded_q(self):
        if self.undetermined:
            raise ValueError(
                f"boundary dimensions undetermined in degrees {self.undetermined}; "
                "supply intersection-pairing data")
        return dict(self.q_dims)

    def semi_characteristic(self):
        if self.boundary_dim % 2 == 0:
            raise ValueError("semi-characteristic needs an odd-dimensional boundary")
        half = (self.boundary_dim - 1) // 2
        for k in range(half + 1):
            if k in self.undetermined:
                raise ValueError(f"degree {k} undetermined")
        return sum(self.q_dims.get(k, 0) for k in range(half + 1)) % 2

    def to_json(self):
        return {
            "schema": SCHEMA_VERSION,
            "boundary_dim": self.boundary_dim,
            "q_dims": {str(k): v for k, v in sorted(self.q_dims.items())},
            "undetermined": list(self.undetermined),
            "integral_homology": {
                str(k): {"rank": r, "torsion": [str(f) for f in t]}
                for k, (r, t) in sorted(self.integral_homology.items())},
            "euler": self.euler,
            "notes": list(self.notes),
        }


def _is_zero(h: GradedGroup, k):
    return h.rank(k) == 0 and h.torsion(k) == ()


def _is_free(h: GradedGroup, k):
    return h.torsion(k) == ()


def handlebody_boundary_homology(chain: ChainComplex, total_dim,
                                 pairing_ranks=None) -> BoundaryHomologyReport:
    """Boundary homology of a d-dimensional handlebody with the given chain data.

    pairing_ranks: {degree j: rank of the pairing H_{d-j} x H_j -> Q} for
    degrees where both sides are nonzero; symmetrized automatically.
    """
    d = int(total_dim)
    if d < 2:
        raise ValueError(f"total dimension must be >= 2, got {d}")
    m = chain.top_degree
    if m >= d:
        raise ValueError(
            f"handle indices reach {m} >= total dimension {d}: no boundary left")
    h = homology(chain)
    hstar = cohomology_from_homology(h)
    b = {k: h.rank(k) for k in range(d + 1)}

    ranks = {}
    notes = []
    for j, r in (pairing_ranks or {}).items():
        j, r = int(j), int(r)
        cap = min(b.get(j, 0), b.get(d - j, 0))
        if not 0 <= r <= cap:
            raise ValueError(
                f"pairing rank {r} at degree {j} exceeds min(b_{j}, b_{d - j}) = {cap}")
        for jj in (j, d - j):
            if jj in ranks and ranks[jj] != r:
                raise ValueError(f"conflicting pairing ranks at degree {jj}")
            ranks[jj] = r

    def pairing_rank(j):
        """Known rank of H_{d-j} x H_j pairing, or None."""
        if b.get(j, 0) == 0 or b.get(d - j, 0) == 0:
            return 0
        return ranks.get(j)

    q_dims = {}
    undetermined = []
    for k in range(d):
        rk = pairing_rank(k)
        rk1 = pairing_rank(k + 1)
        if rk is None or rk1 is None:
            undetermined.append(k)
            continue
        q_dims[k] = (b.get(k, 0) - rk) + (b.get(d - k - 1, 0) - rk1)
    if undetermined:
        notes.append(
            "intersection-pairing ranks missing in degrees "
            + ", ".join(str(k) for k in sorted({min(j, d - j) for j in (
                set(undetermined) | {u + 1 for u in undetermined})
                if pairing_rank(j) is None}))
            + "; affected boundary degrees reported undetermined")

    # Q-Poincare duality of Y, degreewise, on the determined part
    for k, v in q_dims.items():
        dual = d - 1 - k
        if dual in q_dims and q_dims[dual] != v:
            raise AssertionError("boundary duality violated: engine bug")

    # forced integral cohomology H^k(Y;Z), then H_j(Y;Z) = H^{d-1-j}(Y;Z)
    forced_coh = {}
    for k in range(d):
        rel_k_zero = _is_zero(h, d - k)          # H^k(W,Y) = H_{d-k}(W)
        rel_k1_zero = _is_zero(h, d - k - 1)     # H^{k+1}(W,Y) = H_{d-k-1}(W)
        coh_k1_zero = _is_zero(hstar, k + 1)
        if rel_k_zero and rel_k1_zero:
            forced_coh[k] = (hstar.rank(k), hstar.torsion(k))
        elif _is_zero(hstar, k) and coh_k1_zero:
            forced_coh[k] = (h.rank(d - k - 1), h.torsion(d - k - 1))
        elif rel_k_zero and coh_k1_zero and _is_free(h, d - k - 1):
            forced_coh[k] = (hstar.rank(k) + h.rank(d - k - 1), hstar.torsion(k))
    integral = {d - 1 - k: v for k, v in forced_coh.items()}

    euler = (1 + (-1) ** (d - 1)) * chain.euler_characteristic()
    if d % 2 == 0:
        assert euler == 0
    elif not undetermined:
        assert euler == sum((-1) ** k * v for k, v in q_dims.items())

    return BoundaryHomologyReport(
        boundary_dim=d - 1,
        q_dims=q_dims,
        undetermined=tuple(sorted(undetermined)),
        integral_homology=integral,
        euler=euler,
        notes=tuple(notes),
    )


def boundary_homology(p: HandlePresentation) -> BoundaryHomologyReport:
    """Boundary homology of a Weinstein presentation (total dimension 2n).

    The only possibly-nonzero pairing rank sits in the middle degree n; it
    is read from p.intersection_form when present.
    """
    if p.n < 2:
        raise ValueError(f"boundary homology needs n >= 2, got n = {p.n}")
    ranks = None
    if p.intersection_form is not None:
        ranks = {p.n: smith_normal_form(p.intersection_form).rank}
    return handlebody_boundary_homology(p.chain, 2 * p.n, ranks)


def intersection_form_rank(p: HandlePresentation) -> int:
    """rank = dim H^n(W;Q) + dim H^{n-1}(W;Q) - dim H^n(Y;Q)."""
    if p.n < 2:
        raise ValueError(f"intersection form rank needs n >= 2, got n = {p.n}")
    report = boundary_homology(p)
    hn_y = report.dim(p.n)
    if hn_y is None:
        raise ValueError(
            "dim H^n(Y;Q) undetermined without middle framing data; "
            "set intersection_form on the presentation")
    hstar = p.cohomology()
    return hstar.rank(p.n) + hstar.rank(p.n - 1) - hn_y


@dataclass(frozen=True)
class OmegaVerdict:
    member: bool
    reason: str

    def __bool__(self):
        return self.member


def omega_membership(h, n, closed=False, simply_connected=False,
                     stably_parallelizable=False) -> OmegaVerdict:
    """Membership in the class of closed, simply connected, stably
    parallelizable n-manifolds with chi = 2 (n even) or chi_{1/2} = 1 (n odd).

    h: GradedGroup, or {degree: dim_Q} table.  The three flags are caller
    assertions; they are not derivable from homology.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if isinstance(h, dict):
        h = GradedGroup.free(h)
    missing = [name for name, val in (
        ("closed", closed), ("simply_connected", simply_connected),
        ("stably_parallelizable", stably_parallelizable)) if not val]
    if missing:
        return OmegaVerdict(False, "flags not asserted: " + ", ".join(missing))
    if n % 2 == 0:
        chi = euler_characteristic(h)
        if chi == 2:
            return OmegaVerdict(True, f"n even and chi = {chi} = 2")
        return OmegaVerdict(False, f"n even but chi = {chi} != 2")
    s = semi_characteristic(h, n)
    if s == 1:
        return OmegaVerdict(True, "n odd and semi-characteristic = 1")
    return OmegaVerdict(False, "n odd but semi-characteristic = 0")


def boundary_connect_sum(p: HandlePresentation,
                         q: HandlePresentation) -> HandlePresentation:
    """Boundary connected sum: merge along the (unique) 0-handles."""
    if p.n != q.n:
        raise ValueError(f"half-dimensions differ: {p.n} != {q.n}")
    for side, name in ((p, "left"), (q, "right")):
        if side.chain.dim(0) != 1:
            raise ValueError(f"{name} summand must have exactly one 0-handle")
    handles = [(0, "h0")]
    handles += [(k, f"L.{label}") for k, label in p.handles if k > 0]
    handles += [(k, f"R.{label}") for k, label in q.handles if k > 0]

    boundaries = {}
    for k in set(p.chain.boundaries) | set(q.chain.boundaries):
        rows = (1 if k == 1 else p.chain.dim(k - 1) + q.chain.dim(k - 1))
        cols = p.chain.dim(k) + q.chain.dim(k)
        block = [[0] * cols for _ in range(rows)]
        a = p.chain.boundary(k)
        if a and k > 1:
            for i, row in enumerate(a):
                block[i][: len(row)] = row
        bm = q.chain.boundary(k)
        if bm and k > 1:
            r0, c0 = p.chain.dim(k - 1), p.chain.dim(k)
            for i, row in enumerate(bm):
                for j, x in enumerate(row):
                    block[r0 + i][c0 + j] = x
        boundaries[k] = block

    form = None
    pn, qn = p.chain.dim(p.n), q.chain.dim(q.n)
    if pn == 0 and qn == 0:
        form = []
    elif qn == 0:
        form = p.intersection_form
    elif pn == 0:
        form = q.intersection_form
    elif p.intersection_form is not None and q.intersection_form is not None:
        size = pn + qn
        form = [[0] * size for _ in range(size)]
        for i in range(pn):
            form[i][:pn] = p.intersection_form[i]
        for i in range(qn):
            for j in range(qn):
                form[pn + i][pn + j] = q.intersection_form[i][j]
    return HandlePresentation(p.n, handles, boundaries, form)


@dataclass(frozen=True)
class C1HandleNote:
    index: int
    label: str
    applies: bool
    note: str


@dataclass(frozen=True)
class C1Report:
    n: int
    entries: tuple
    all_apply: bool

    def to_json(self):
        return {
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "all_apply": self.all_apply,
            "entries": [{"index": e.index, "label": e.label,
                         "applies": e.applies, "note": e.note}
                        for e in self.entries],
        }


def c1_propagation_check(p: HandlePresentation) -> C1Report:
    """Per handle: does attaching it preserve the equivalence 'c_1 = 0 before
    iff after'?  It does except across index-2 handles, where the framing
    enters the relative degree-2 cohomology; the whole checklist needs n >= 3.
    """
    entries = []
    for k, label in p.handles:
        if p.n < 3:
            entries.append(C1HandleNote(k, label, False,
                                        "hypothesis n >= 3 fails"))
        elif k == 2:
            entries.append(C1HandleNote(k, label, False,
                                        "index-2 handle: framing contributes to "
                                        "relative degree-2 cohomology"))
        else:
            entries.append(C1HandleNote(k, label, True,
                                        "no relative degree-2 cohomology"))
    return C1Report(p.n, tuple(entries), all(e.applies for e in entries))
