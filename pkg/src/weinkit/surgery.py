"""Cyclic-word enumeration over chord alphabets, orbit spectra of surgered
contact manifolds, and ADC certificates with their transformations.

Contact forms are modeled by positive scale factors relative to stage 1:
every check performed here (monotonicity, rescaling transport, the 4^k
bookkeeping) factors through scales and per-step bound constants.  Actions
are exact rationals throughout; nothing is compared in floating point.
"""

from dataclasses import dataclass
from fractions import Fraction

from .chords import ChordRecord, ChordSpectrum, choose_Q, min_positive_N, stabilize
from .floer import Verdict
from .serialize import (
    SCHEMA_VERSION,
    SchemaError,
    check_schema,
    frac_from_str,
    frac_to_str,
)


def canonical_rotation(seq):
    """Lexicographically least rotation; the identity of a cyclic word."""
    seq = tuple(seq)
    if not seq:
        raise ValueError("empty word has no canonical rotation")
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


@dataclass(frozen=True)
class CyclicWord:
    """A cyclic equivalence class of chord ids with its total degree and
    action.  letters always stores the canonical (least) rotation."""
    letters: tuple
    degree: int
    action: Fraction

    def __post_init__(self):
        object.__setattr__(self, "letters", canonical_rotation(self.letters))
        object.__setattr__(self, "action", Fraction(self.action))

    def __len__(self):
        return len(self.letters)

    @staticmethod
    def from_chords(records):
        records = tuple(records)
        return CyclicWord(
            tuple(r.id for r in records),
            sum(r.degree for r in records),
            sum((r.action for r in records), Fraction(0)))

    def label(self):
        return ".".join(self.letters)


def enumerate_words(spectrum: ChordSpectrum, bound,
                    skip_non_null_homotopic=False):
    """All cyclic words over the chord alphabet with total action < bound,
    one representative per rotation class, sorted by (length, letters).

    Non-null-homotopic chords carry no canonical grading, so their presence
    is an error unless skip_non_null_homotopic drops them instead.
    Termination is guaranteed by positivity of actions.
    """
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError(f"word action bound must be positive, got {bound}")
    alphabet = []
    for c in spectrum.chords:
        if not c.null_homotopic:
            if skip_non_null_homotopic:
                continue
            raise ValueError(
                f"chord {c.id!r} is not null-homotopic and has no canonical "
                "grading (pass skip_non_null_homotopic to drop such chords)")
        alphabet.append(c)
    alphabet.sort(key=lambda c: c.id)
    by_id = {c.id: c for c in alphabet}

    words = []
    # a canonical rotation starts with a minimal letter, so fix the first
    # letter and only append letters >= it; filter true canonicity at emit
    for i, start in enumerate(alphabet):
        allowed = alphabet[i:]
        stack = [((start.id,), start.action)]
        while stack:
            seq, act = stack.pop()
            if seq == canonical_rotation(seq):
                words.append(CyclicWord(
                    seq,
                    sum(by_id[cid].degree for cid in seq),
                    act))
            for c in allowed:
                nact = act + c.action
                if nact < bound:
                    stack.append((seq + (c.id,), nact))
    words.sort(key=lambda w: (len(w.letters), w.letters))
    return tuple(words)


@dataclass(frozen=True)
class OrbitRecord:
    """One closed orbit: degree, positive rational action, provenance
    (pre-existing, a chord word, or a belt-sphere iterate), and whether it
    is contractible.  Non-contractible orbits have no canonical degree and
    are skipped by positivity checks."""
    degree: int
    action: Fraction
    origin: str = "old"
    contractible: bool = True

    def __post_init__(self):
        object.__setattr__(self, "action", Fraction(self.action))
        if self.action <= 0:
            raise ValueError("orbit action must be positive")
        o = self.origin
        if o == "old" or (o.startswith("word:") and len(o) > 5):
            return
        if o.startswith("belt:"):
            try:
                j = int(o[5:])
            except ValueError:
                j = 0
            if j >= 1:
                return
            raise ValueError(f"belt origin needs iterate >= 1, got {o!r}")
        raise ValueError(f"bad origin {o!r}: use 'old', 'word:<ids>', 'belt:<j>'")

    @staticmethod
    def from_word(word: CyclicWord, n):
        return OrbitRecord(word.degree + n - 3, word.action,
                           "word:" + word.label(), True)

    def to_json(self):
        return {
            "degree": self.degree,
            "action": frac_to_str(self.action),
            "origin": self.origin,
            "contractible": self.contractible,
        }

    @staticmethod
    def from_json(doc):
        try:
            return OrbitRecord(int(doc["degree"]), frac_from_str(doc["action"]),
                               str(doc.get("origin", "old")),
                               bool(doc.get("contractible", True)))
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"OrbitRecord: {exc}") from None


@dataclass(frozen=True)
class OrbitSpectrum:
    """All closed orbits with action below the bound; finite by genericity,
    which is a caller assertion carried as the generic flag."""
    n: int
    orbits: tuple
    bound: Fraction
    generic: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"half-dimension must be >= 1, got {self.n}")
        object.__setattr__(self, "orbits", tuple(self.orbits))
        object.__setattr__(self, "bound", Fraction(self.bound))
        if self.bound <= 0:
            raise ValueError("action bound must be positive")
        for r in self.orbits:
            if r.action >= self.bound:
                raise ValueError(
                    f"orbit action {r.action} >= bound {self.bound}")

    def degrees(self):
        return tuple(r.degree for r in self.orbits)

    def to_json(self):
        return {
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "bound": frac_to_str(self.bound),
            "generic": self.generic,
            "orbits": [r.to_json() for r in self.orbits],
        }

    @staticmethod
    def from_json(doc):
        check_schema(doc, "OrbitSpectrum")
        try:
            orbits = tuple(OrbitRecord.from_json(r) for r in doc["orbits"])
            return OrbitSpectrum(int(doc["n"]), orbits,
                                 frac_from_str(doc["bound"]),
                                 bool(doc.get("generic", True)))
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"OrbitSpectrum: {exc}") from None


def orbits_after_surgery(old: OrbitSpectrum, chords: ChordSpectrum,
                         bound) -> OrbitSpectrum:
    """Orbit spectrum after attaching the handle along the chords' Legendrian:
    the old orbits below the bound plus one orbit per cyclic chord word w,
    graded |w| + n - 3."""
    n = old.n
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if chords.n != n:
        raise ValueError(f"half-dimensions differ: {chords.n} != {n}")
    bound = Fraction(bound)
    if bound > old.bound:
        raise ValueError(
            f"requested bound {bound} exceeds the known orbit window {old.bound}")
    kept = [r for r in old.orbits if r.action < bound]
    new = [OrbitRecord.from_word(w, n) for w in enumerate_words(chords, bound)]
    return OrbitSpectrum(n, tuple(kept + new), bound, old.generic)


def subcritical_surgery(spectrum: OrbitSpectrum, n, k, iterates, eps,
                        hypotheses_asserted=False) -> OrbitSpectrum:
    """Orbits created by an index-k subcritical handle: iterate j of the
    handle's core orbit has degree 2n - k - 4 + 2j (always positive) and is
    contractible; actions are eps * j for the handle-shrinking parameter eps.

    k = 2 changes pi_1 and needs the extra contractibility hypotheses
    asserted by the caller.
    """
    if n != spectrum.n:
        raise ValueError(f"n = {n} does not match spectrum n = {spectrum.n}")
    if not 1 <= k < n:
        raise ValueError(f"subcritical needs 1 <= k < n, got k = {k}, n = {n}")
    if k == 2 and not hypotheses_asserted:
        raise ValueError(
            "index-2 surgery changes pi_1; pass hypotheses_asserted=True "
            "after checking contractibility of the relevant orbits")
    if iterates < 0:
        raise ValueError("iterate horizon must be >= 0")
    if iterates == 0:
        return spectrum
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("handle-shrinking parameter must be positive")
    if eps * iterates >= spectrum.bound:
        raise ValueError(
            f"eps * iterates = {eps * iterates} >= bound {spectrum.bound}; "
            "shrink the handle further")
    new = [OrbitRecord(2 * n - k - 4 + 2 * j, eps * j, f"belt:{j}", True)
           for j in range(1, iterates + 1)]
    return OrbitSpectrum(spectrum.n, spectrum.orbits + tuple(new),
                         spectrum.bound, spectrum.generic)


def add_surgery_chord(spectrum: ChordSpectrum, k,
                      new_action=None) -> ChordSpectrum:
    """Chord spectrum after an index-k ambient (or simultaneous) surgery on
    the Legendrian: one new short chord of degree n - k - 1 near the belt.

    Critical-index surgery (k = n - 1) would create a degree-0 chord and is
    excluded outright.
    """
    n = spectrum.n
    if not 1 <= k < n - 1:
        raise ValueError(
            f"need 1 <= k < n - 1 = {n - 1}, got k = {k}"
            + (": critical surgery creates degree-0 chords" if k == n - 1 else ""))
    action = Fraction(new_action) if new_action is not None \
        else spectrum.bound / 1000
    if not 0 < action < spectrum.bound:
        raise ValueError(f"new chord action must lie in (0, {spectrum.bound})")
    cid = "surg"
    used = {c.id for c in spectrum.chords}
    while cid in used:
        cid += "_"
    new = ChordRecord(cid, n - k - 1, action)
    return ChordSpectrum(n, spectrum.chords + (new,), spectrum.bound)


def belt_sphere_chords(spectrum: ChordSpectrum, bound=None) -> ChordSpectrum:
    """Chords of the belt sphere after critical surgery along the alphabet's
    Legendrian: one chord per cyclic word w, graded |w| + n - 2."""
    n = spectrum.n
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    bound = Fraction(bound) if bound is not None else spectrum.bound
    if bound > spectrum.bound:
        raise ValueError(
            f"requested bound {bound} exceeds the known chord window "
            f"{spectrum.bound}")
    chords = tuple(
        ChordRecord("w:" + w.label(), w.degree + n - 2, w.action)
        for w in enumerate_words(spectrum, bound))
    return ChordSpectrum(n, chords, bound)


def nonsimultaneous_words(s_minus: ChordSpectrum, aux: ChordSpectrum,
                          connector_in: ChordRecord, connector_out: ChordRecord,
                          zigzag_action=None) -> ChordSpectrum:
    """Chord spectrum when the auxiliary Legendrian sits in the complement:
    the original chords survive unchanged, and every mixed word
    connector_in . c_1 ... c_k . connector_out (c_i from the auxiliary
    alphabet, k >= 0, linear not cyclic) becomes a chord.

    The auxiliary alphabet is zig-zag stabilized to positive degrees first,
    so with positive-degree connectors all mixed chords have positive degree.
    """
    n = s_minus.n
    if aux.n != n:
        raise ValueError(f"half-dimensions differ: {aux.n} != {n}")
    for c, name in ((connector_in, "connector_in"), (connector_out, "connector_out")):
        if c.degree <= 0:
            raise ValueError(
                f"{name} has degree {c.degree} <= 0; stabilize the complement "
                "presentation until connectors are positive")
    if min_positive_N(aux) > 0:
        eps = Fraction(zigzag_action) if zigzag_action is not None \
            else min(Fraction(1), aux.bound) / 2
        aux = stabilize(aux, min_positive_N(aux), choose_Q(n), eps)

    bound = s_minus.bound
    base_action = connector_in.action + connector_out.action
    base_degree = connector_in.degree + connector_out.degree
    alphabet = sorted(aux.chords, key=lambda c: c.id)
    mixed = []
    stack = [((), Fraction(0), 0)]
    while stack:
        seq, act, deg = stack.pop()
        if base_action + act < bound:
            mixed.append((seq, base_action + act, base_degree + deg))
            for c in alphabet:
                stack.append((seq + (c.id,), act + c.action, deg + c.degree))
    mixed.sort(key=lambda m: (len(m[0]), m[0]))
    null = connector_in.null_homotopic and connector_out.null_homotopic
    out = list(s_minus.chords)
    used = {c.id for c in out}
    for seq, act, deg in mixed:
        cid = "mix:" + ".".join((connector_in.id,) + seq + (connector_out.id,))
        while cid in used:
            cid += "_"
        used.add(cid)
        out.append(ChordRecord(cid, deg, act, None, null))
    return ChordSpectrum(n, tuple(out), bound)


def legendrian_surgery_rules(kind, **params):
    """Dispatch a named surgery rule; kinds: ambient, simultaneous, belt,
    nonsimultaneous."""
    rules = {
        "ambient": add_surgery_chord,
        "simultaneous": add_surgery_chord,
        "belt": belt_sphere_chords,
        "nonsimultaneous": nonsimultaneous_words,
    }
    if kind not in rules:
        raise ValueError(f"unknown surgery rule {kind!r}; "
                         f"known: {sorted(rules)}")
    return rules[kind](**params)


def rescale(x, s):
    """Scale transport: actions and bound multiply by s, degrees unchanged.
    Works on chord and orbit spectra alike; rescale(s) o rescale(t) is
    rescale(s*t) and s = 1 is the identity."""
    s = Fraction(s)
    if s <= 0:
        raise ValueError(f"scale must be positive, got {s}")
    if isinstance(x, ChordSpectrum):
        return ChordSpectrum(
            x.n,
            tuple(ChordRecord(c.id, c.degree, c.action * s, c.front,
                              c.null_homotopic) for c in x.chords),
            x.bound * s)
    if isinstance(x, OrbitSpectrum):
        return OrbitSpectrum(
            x.n,
            tuple(OrbitRecord(r.degree, r.action * s, r.origin, r.contractible)
                  for r in x.orbits),
            x.bound * s, x.generic)
    raise TypeError(f"cannot rescale {type(x).__name__}")


@dataclass(frozen=True)
class Stage:
    """One stage of a certificate: a contact form (as a scale relative to
    stage 1), its action bound, and the orbit spectrum below that bound."""
    scale: Fraction
    bound: Fraction
    spectrum: OrbitSpectrum

    def __post_init__(self):
        object.__setattr__(self, "scale", Fraction(self.scale))
        object.__setattr__(self, "bound", Fraction(self.bound))
        if self.scale <= 0:
            raise ValueError("stage scale must be positive")
        if self.bound != self.spectrum.bound:
            raise ValueError(
                f"stage bound {self.bound} != spectrum bound {self.spectrum.bound}")

    def to_json(self):
        return {
            "scale": frac_to_str(self.scale),
            "bound": frac_to_str(self.bound),
            "spectrum": self.spectrum.to_json(),
        }

    @staticmethod
    def from_json(doc):
        try:
            return Stage(frac_from_str(doc["scale"]), frac_from_str(doc["bound"]),
                         OrbitSpectrum.from_json(doc["spectrum"]))
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"Stage: {exc}") from None


@dataclass(frozen=True)
class ADCCertificate:
    """Stages witnessing asymptotic dynamical convexity.  The constructor
    checks each stage locally; the cross-stage monotonicity conditions are
    the business of adc_check, so partially built or failing certificates
    can be represented and reported on."""
    stages: tuple

    def __post_init__(self):
        object.__setattr__(self, "stages", tuple(self.stages))
        ns = {st.spectrum.n for st in self.stages}
        if len(ns) > 1:
            raise ValueError(f"stages mix half-dimensions {sorted(ns)}")

    @property
    def n(self):
        return self.stages[0].spectrum.n if self.stages else None

    def to_json(self):
        return {
            "schema": SCHEMA_VERSION,
            "stages": [st.to_json() for st in self.stages],
        }

    @staticmethod
    def from_json(doc):
        check_schema(doc, "ADCCertificate")
        try:
            stages = tuple(Stage.from_json(s) for s in doc["stages"])
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"ADCCertificate: {exc}") from None
        return ADCCertificate(stages)


def adc_check(cert: ADCCertificate) -> Verdict:
    """Pass iff scales never increase, bounds strictly increase, and every
    contractible orbit in every stage has positive degree.  The witness is
    the first violation in stage order; an empty certificate passes
    vacuously."""
    prev = None
    for idx, st in enumerate(cert.stages, start=1):
        if prev is not None:
            if st.scale > prev.scale:
                return Verdict("ADC certificate invalid", False, witness={
                    "stage": idx, "violation": "scale increased",
                    "scale": frac_to_str(st.scale),
                    "previous": frac_to_str(prev.scale)})
            if st.bound <= prev.bound:
                return Verdict("ADC certificate invalid", False, witness={
                    "stage": idx, "violation": "bound not strictly increasing",
                    "bound": frac_to_str(st.bound),
                    "previous": frac_to_str(prev.bound)})
        for ridx, r in enumerate(st.spectrum.orbits):
            if r.contractible and r.degree <= 0:
                return Verdict("ADC certificate invalid", False, witness={
                    "stage": idx, "violation": "nonpositive contractible orbit",
                    "record": ridx, "degree": r.degree,
                    "action": frac_to_str(r.action), "origin": r.origin})
        prev = st
    return Verdict("ADC certificate valid", True,
                   witness={"stages": len(cert.stages)})


def normalize_certificate(cert: ADCCertificate, eps) -> ADCCertificate:
    """Sharpen a valid certificate so consecutive scales drop by a factor
    eps and consecutive bounds grow by 1/eps: greedily take a subsequence
    with D_{next} >= D_current / eps^2, then multiply stage m by eps^m.

    Single-stage certificates are returned unchanged.
    """
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError(f"need 0 < eps < 1, got {eps}")
    verdict = adc_check(cert)
    if not verdict.fired:
        raise ValueError(f"input certificate fails: {verdict.witness}")
    if len(cert.stages) <= 1:
        return cert
    chosen = [0]
    need = cert.stages[0].bound / (eps * eps)
    for j in range(1, len(cert.stages)):
        if cert.stages[j].bound >= need:
            chosen.append(j)
            need = cert.stages[j].bound / (eps * eps)
    if len(chosen) < 2:
        raise ValueError(
            "certificate too short: no later stage has bound >= "
            f"{need} = D_1 / eps^2")
    out = []
    for m, j in enumerate(chosen, start=1):
        st = cert.stages[j]
        factor = eps ** m
        out.append(Stage(st.scale * factor, st.bound * factor,
                         rescale(st.spectrum, factor)))
    result = ADCCertificate(tuple(out))
    for a, b in zip(result.stages, result.stages[1:]):
        assert b.scale <= eps * a.scale
        assert b.bound >= a.bound / eps
    assert adc_check(result).fired
    return result


def flexible_surgery_certificate(cert: ADCCertificate, chords, n,
                                 zigzag_action=None) -> ADCCertificate:
    """Transport an ADC certificate through critical surgery along a loose
    Legendrian (n >= 3): greedily pick stages with D > k*4^k, window each
    to k*4^k, stabilize the stage's chord alphabet to positive degrees if
    needed, adjoin the word orbits (degree |w| + n - 3), and rescale stage
    k by 4^{-k} so the output bounds are exactly 1, 2, 3, ...

    chords: one ChordSpectrum per input stage, a single spectrum used for
    every stage, or None for no chords at all.
    """
    if n < 3:
        raise ValueError(f"flexibility needs n >= 3, got n = {n}")
    if cert.stages and cert.n != n:
        raise ValueError(f"certificate has n = {cert.n}, expected {n}")
    verdict = adc_check(cert)
    if not verdict.fired:
        raise ValueError(f"input certificate fails: {verdict.witness}")
    if chords is None or isinstance(chords, ChordSpectrum):
        chords = [chords] * len(cert.stages)
    elif len(chords) != len(cert.stages):
        raise ValueError(
            f"need one chord spectrum per stage ({len(cert.stages)}), "
            f"got {len(chords)}")

    out = []
    next_input = 0
    k = 0
    while True:
        k += 1
        window = Fraction(k * 4 ** k)
        while (next_input < len(cert.stages)
               and cert.stages[next_input].bound <= window):
            next_input += 1
        if next_input >= len(cert.stages):
            break
        st = cert.stages[next_input]
        s = chords[next_input]
        next_input += 1

        if s is None:
            s = ChordSpectrum(n, (), window)
        else:
            if s.n != n:
                raise ValueError(f"chord spectrum has n = {s.n}, expected {n}")
            if s.bound < window:
                raise ValueError(
                    f"stage {k}: chord data only reaches action {s.bound}, "
                    f"need {window}")
            s = ChordSpectrum(n, tuple(c for c in s.chords if c.action < window),
                              window)
        pos = min_positive_N(s)
        if pos > 0:
            eps = Fraction(zigzag_action) if zigzag_action is not None \
                else min(Fraction(1), window) / 2
            s = stabilize(s, pos, choose_Q(n), eps)

        merged = orbits_after_surgery(st.spectrum, s, window)
        factor = Fraction(1, 4 ** k)
        out.append(Stage(st.scale * factor, window * factor,
                         rescale(merged, factor)))

    if not out:
        raise ValueError(
            "bound condition unsatisfiable: no stage has bound > k*4^k "
            "for any k >= 1")
    result = ADCCertificate(tuple(out))
    assert [st.bound for st in result.stages] == \
        [Fraction(i) for i in range(1, len(out) + 1)]
    final = adc_check(result)
    assert final.fired, f"pipeline postcondition failed: {final.witness}"
    return result
