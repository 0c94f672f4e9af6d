"""Positive symplectic/wrapped invariants from vanishing, and distinguishers.

Nothing here computes Floer theory.  Every operation starts from an asserted
vanishing (SH = 0, WH = 0) or from user-supplied dimension tables, and pushes
cohomology through the degree reindexings those vanishing results force.
Distinguisher verdicts are three-valued: fired, inconclusive, or invalid
input; "the two are the same" is never claimed.
"""

from dataclasses import dataclass

from .graded import GradedGroup
from .serialize import SCHEMA_VERSION, SchemaError, check_schema


@dataclass(frozen=True)
class Verdict:
    """Outcome of a test; fired means the obstruction/distinction holds."""
    outcome: str
    fired: bool
    witness: dict = None
    coefficients: str = "Z"

    def __bool__(self):
        return self.fired

    def to_json(self):
        return {
            "schema": SCHEMA_VERSION,
            "outcome": self.outcome,
            "fired": self.fired,
            "witness": self.witness,
            "coefficients": self.coefficients,
        }


INDISTINGUISHABLE = "indistinguishable by this invariant"


@dataclass(frozen=True)
class SHPlusProfile:
    """Graded profile of a positive-symplectic or wrapped invariant.

    group holds integral descriptors; provenance records whether the entries
    came out of a vanishing formula or straight from the caller.
    """
    group: GradedGroup
    provenance: str = "formula"

    def __post_init__(self):
        if self.provenance not in ("formula", "user-supplied"):
            raise ValueError(f"unknown provenance {self.provenance!r}")

    @property
    def support(self):
        return self.group.support

    def dim(self, k, coeff="Q"):
        return self.group.dim(k, coeff)

    def to_json(self):
        return {
            "schema": SCHEMA_VERSION,
            "profile": self.group.to_json()["graded_group"],
            "provenance": self.provenance,
        }

    @staticmethod
    def from_json(doc):
        check_schema(doc, "SHPlusProfile")
        try:
            group = GradedGroup.from_json(
                {"schema": SCHEMA_VERSION, "graded_group": doc["profile"]})
            return SHPlusProfile(group, doc.get("provenance", "user-supplied"))
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"SHPlusProfile: {exc}") from None


def sh_plus_from_vanishing(hstar_w: GradedGroup, n, weinstein=True) -> SHPlusProfile:
    """SH_k+ = H^{n-k+1}(W;Z), valid once the caller asserts SH(W) = 0.

    With weinstein=True the input must be supported in degrees [0, n] (a
    domain built from handles of index <= n), which pins the profile inside
    [1, n+1]; in particular nothing survives in degrees k <= 0.
    """
    parts = {}
    for j in hstar_w.support:
        k = n - j + 1
        parts[k] = (hstar_w.rank(j), hstar_w.torsion(j))
    group = GradedGroup.from_dict(parts)
    if weinstein:
        bad = [k for k in group.support if k <= 0 or k > n + 1]
        if bad:
            raise ValueError(
                f"cohomology reaches outside degrees [0, {n}]; "
                f"profile would be supported at k = {sorted(bad)}")
    return SHPlusProfile(group, "formula")


def sh_plus_reindex_back(profile: SHPlusProfile, n) -> GradedGroup:
    """Inverse of the SH+ reindexing: degree k back to cohomological n-k+1."""
    parts = {}
    for k in profile.support:
        g = profile.group
        parts[n - k + 1] = (g.rank(k), g.torsion(k))
    return GradedGroup.from_dict(parts)


def taut_les_bounds(known_dims, hstar_dims, n):
    """Per-degree interval for the partner dimension in the tautological
    exact sequence relating SH and SH+.

    |dim SH_k - dim SH_k+| <= B_k with B_k = dim H^{n-k} + dim H^{n-k+1},
    so from either one of the pair the other lies in
    [max(0, s - B_k), s + B_k].  Both directions use the same window.
    """
    for table, name in ((known_dims, "known_dims"), (hstar_dims, "hstar_dims")):
        for k, v in table.items():
            if v < 0:
                raise ValueError(f"{name}[{k}] = {v} is negative")
    degrees = set(known_dims)
    degrees.update(n - j for j in hstar_dims)
    degrees.update(n - j + 1 for j in hstar_dims)
    out = {}
    for k in sorted(degrees):
        s = known_dims.get(k, 0)
        b = hstar_dims.get(n - k, 0) + hstar_dims.get(n - k + 1, 0)
        out[k] = (max(0, s - b), s + b)
    return out


def distinguish_flexible_fillings(hstar_a: GradedGroup, hstar_b: GradedGroup,
                                  n) -> Verdict:
    """Contact-distinguish two boundaries of flexible domains (c_1 = 0
    asserted by the caller) through their filling cohomologies."""
    if n < 3:
        raise ValueError(f"flexibility needs n >= 3, got n = {n}")
    if hstar_a == hstar_b:
        return Verdict(INDISTINGUISHABLE, False)
    diff = sorted(set(hstar_a.support) | set(hstar_b.support))
    witness = next(
        k for k in diff
        if (hstar_a.rank(k), hstar_a.torsion(k)) != (hstar_b.rank(k), hstar_b.torsion(k)))
    return Verdict("non-contactomorphic", True, witness={
        "degree": witness,
        "left": {"rank": hstar_a.rank(witness),
                 "torsion": [str(t) for t in hstar_a.torsion(witness)]},
        "right": {"rank": hstar_b.rank(witness),
                  "torsion": [str(t) for t in hstar_b.torsion(witness)]},
    })


def cem_flexible_obstruction(k, dim_h1_mod2) -> bool:
    """True ("no flexible filling possible") iff k >= dim H^1(Y;Z/2) + 2.

    A flexible filling would force the boundary connect-sum count k of
    copies to satisfy k <= dim H^1(Y;Z/2) + 1.
    """
    if k < 1:
        raise ValueError(f"copy count must be >= 1, got {k}")
    if dim_h1_mod2 < 0:
        raise ValueError(f"dimension must be >= 0, got {dim_h1_mod2}")
    return k >= dim_h1_mod2 + 2


def flexible_support_test(support, n) -> Verdict:
    """Flexible fillings force SH+ support inside [1, n+1]; anything at
    k <= 0 or k >= n+2 rules a flexible filling out."""
    offenders = sorted(k for k in support if k <= 0 or k >= n + 2)
    if offenders:
        return Verdict("no flexible filling", True, witness={
            "degree": offenders[0],
            "allowed_range": [1, n + 1],
        })
    return Verdict("inconclusive", False,
                   witness={"allowed_range": [1, n + 1]})


class LoopHomologyTable:
    """Finite table of dim_Q H_k of a free loop space, with its base manifold.

    dims: {degree: dim} complete up to the declared horizon; base: the
    manifold's own Betti numbers.  Constant loops include into the loop
    space, so dims must dominate base degreewise; violations mean the
    input data is wrong and are rejected here.
    """

    def __init__(self, dims, base, horizon=None):
        self.dims = {int(k): int(v) for k, v in dims.items() if int(v) != 0}
        self.base = {int(k): int(v) for k, v in base.items() if int(v) != 0}
        keys = set(self.dims) | set(self.base)
        self.horizon = int(horizon) if horizon is not None else max(keys, default=0)
        for table, name in ((self.dims, "dims"), (self.base, "base")):
            for k, v in table.items():
                if k < 0 or v < 0:
                    raise ValueError(f"{name} has negative entry at degree {k}")
                if k > self.horizon:
                    raise ValueError(
                        f"{name} entry at degree {k} beyond horizon {self.horizon}")
        for k in range(self.horizon + 1):
            if self.dims.get(k, 0) < self.base.get(k, 0):
                raise ValueError(
                    f"constant loops violated at degree {k}: "
                    f"dim {self.dims.get(k, 0)} < base {self.base.get(k, 0)}")

    def dim(self, k):
        return self.dims.get(k, 0)

    def __eq__(self, other):
        return (isinstance(other, LoopHomologyTable)
                and self.dims == other.dims and self.base == other.base
                and self.horizon == other.horizon)

    def to_json(self):
        return {
            "schema": SCHEMA_VERSION,
            "dims": {str(k): v for k, v in sorted(self.dims.items())},
            "base": {str(k): v for k, v in sorted(self.base.items())},
            "horizon": self.horizon,
        }

    @staticmethod
    def from_json(doc):
        check_schema(doc, "LoopHomologyTable")
        try:
            return LoopHomologyTable(doc["dims"], doc["base"], doc.get("horizon"))
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"LoopHomologyTable: {exc}") from None


def boundedinfinite_distinguisher(lm: LoopHomologyTable, ln: LoopHomologyTable,
                                  hy_dims, n) -> Verdict:
    """Separate two contact boundaries by loop-space homology growth.

    Fires at the first degree k (up to the common horizon) where
    |dim H_k(LM) - dim H_k(LN)| > 2 dim H^{n-k}(Y) + 2 dim H^{n-k+1}(Y).
    """
    horizon = min(lm.horizon, ln.horizon)
    for k in range(horizon + 1):
        lhs = abs(lm.dim(k) - ln.dim(k))
        rhs = 2 * hy_dims.get(n - k, 0) + 2 * hy_dims.get(n - k + 1, 0)
        if lhs > rhs:
            return Verdict("non-contactomorphic", True, coefficients="Q",
                           witness={"degree": k, "gap": lhs, "bound": rhs})
    return Verdict(INDISTINGUISHABLE, False, coefficients="Q",
                   witness={"horizon": horizon})


def wh_plus_from_vanishing(hstar_l: GradedGroup, n) -> SHPlusProfile:
    """WH_k+ = H^{n-k-1}(L;Z) for an exact filling L, once WH(L,L) = 0."""
    parts = {}
    for j in hstar_l.support:
        parts[n - j - 1] = (hstar_l.rank(j), hstar_l.torsion(j))
    return SHPlusProfile(GradedGroup.from_dict(parts), "formula")


def wrapped_loop_grading(h_omega: GradedGroup, n) -> SHPlusProfile:
    """WH_k of a cotangent fiber = H_{k-n+2} of the based loop space."""
    parts = {}
    for j in h_omega.support:
        parts[j + n - 2] = (h_omega.rank(j), h_omega.torsion(j))
    return SHPlusProfile(GradedGroup.from_dict(parts), "formula")


def nearby_conclusion(hl: GradedGroup, hm: GradedGroup,
                      degree_pm1) -> Verdict:
    """Isomorphism verdict for the projection of an exact Lagrangian to the
    zero section.

    With a single transverse intersection point (degree_pm1) the induced
    map is a degree +-1 surjection; a surjective endomorphism of a finitely
    generated abelian group is an isomorphism, so equal descriptors settle it.
    """
    if isinstance(hl, dict):
        hl = GradedGroup.free(hl)
    if isinstance(hm, dict):
        hm = GradedGroup.free(hm)
    if not degree_pm1:
        return Verdict("inconclusive", False,
                       witness={"reason": "projection degree not +-1"})
    if hl == hm:
        return Verdict("homology projection is an isomorphism", True)
    diff = sorted(set(hl.support) | set(hm.support))
    witness = next(
        k for k in diff
        if (hl.rank(k), hl.torsion(k)) != (hm.rank(k), hm.torsion(k)))
    return Verdict("inconclusive", False,
                   witness={"reason": "homology descriptors differ",
                            "degree": witness})


def sh_support_adc_obstruction(support, n) -> Verdict:
    """Asymptotically dynamically convex boundaries have SH_k+ = 0 in
    degrees k <= 3 - n; support there rules the property out."""
    offenders = sorted(k for k in support if k <= 3 - n)
    if offenders:
        return Verdict("not ADC", True, witness={
            "degree": offenders[0], "vanishing_range": f"k <= {3 - n}"})
    return Verdict("inconclusive", False,
                   witness={"vanishing_range": f"k <= {3 - n}"})
