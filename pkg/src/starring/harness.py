"""Element generation, sweep orchestration, and counterexample reporting.

Streams are fully deterministic: an identical GeneratorSpec (including the
seed) reproduces the identical element sequence, and sweep reports are
byte-identical apart from the wallTime field.  Counterexamples are data,
never exceptions; a correct build reports none.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .classify import is_projection, is_sep
from .geninv import InverseBundle
from .matrix import MAX_DIMENSION, Matrix
from .starfield import FieldDescriptor, FieldKind
from .theorems import (
    Kind,
    TheoremEntry,
    Verdict,
    check_left_right_duality,
    check_projection_sandwich,
    evaluate,
    registry,
    registry_map,
)

REPORT_SCHEMA = "starring-report/1"

#: ceiling on fieldSize^(n^2) for exhaustive enumeration
EXHAUSTIVE_BUDGET = 10**6

#: ceiling on ordered (e, a) pairs fed to the L3.1 duality check
PAIR_BUDGET = 10**4


class InvalidSpecError(ValueError):
    """The generator spec is not satisfiable."""


class BudgetExceededError(InvalidSpecError):
    """Exhaustive enumeration would exceed the configured budget."""


class UnknownEntryError(ValueError):
    """A requested theorem ID is not in the registry."""


class Mode(Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"
    CONSTRUCTED_SEP = "constructed-sep"
    CONSTRUCTED_EP = "constructed-ep"
    CONSTRUCTED_PI = "constructed-pi"


_CONSTRUCTED = (Mode.CONSTRUCTED_SEP, Mode.CONSTRUCTED_EP, Mode.CONSTRUCTED_PI)


@dataclass(frozen=True)
class GeneratorSpec:
    mode: Mode
    field: FieldDescriptor
    dim: int
    sample_count: int = 0
    seed: int | None = None

    def validate(self):
        if not 1 <= self.dim <= MAX_DIMENSION:
            raise InvalidSpecError(f"dimension {self.dim} outside 1..{MAX_DIMENSION}")
        if self.mode is Mode.EXHAUSTIVE:
            size = self.field.size()
            if size is None:
                raise InvalidSpecError("exhaustive mode needs a finite field")
            if size ** (self.dim * self.dim) > EXHAUSTIVE_BUDGET:
                raise BudgetExceededError(
                    f"{size}^{self.dim * self.dim} exceeds the budget {EXHAUSTIVE_BUDGET}")
            return
        if self.seed is None:
            raise InvalidSpecError(f"{self.mode.value} mode needs a seed")
        if self.sample_count < 1:
            raise InvalidSpecError("sample count must be positive")
        if self.mode is Mode.CONSTRUCTED_EP and not _non_unitary_scalars(self.field):
            raise InvalidSpecError(
                f"{self.field.name} has no invertible scalar of norm != 1; "
                "no strictly-EP diagonal core exists")
        if self.mode is Mode.CONSTRUCTED_PI and self.dim < 2:
            raise InvalidSpecError("shift patterns need dimension >= 2")

    def echo(self) -> dict:
        return {
            "mode": self.mode.value,
            "ring": self.field.kind.value,
            "p": self.field.p,
            "dim": self.dim,
            "sampleCount": self.sample_count,
            "seed": self.seed,
        }


# -- scalar pools -------------------------------------------------------------

def _unitary_scalars(field: FieldDescriptor) -> list:
    """Invertible u with u star(u) = 1; diagonal cores of SEP elements."""
    kind = field.kind
    if kind is FieldKind.RATIONAL:
        return [field.one(), -field.one()]
    if kind is FieldKind.GAUSSIAN_RATIONAL:
        units = [field.one(), -field.one(),
                 field.gaussian(0, 1), field.gaussian(0, -1)]
        for a, b, c in ((3, 4, 5), (5, 12, 13)):
            for sa in (1, -1):
                for sb in (1, -1):
                    units.append(field.gaussian(sa * a, sb * b, c, c))
        return units
    one = field.one()
    return [u for u in field.elements()
            if not u.is_zero() and u * u.star() == one]


def _non_unitary_scalars(field: FieldDescriptor) -> list:
    """Invertible u with u star(u) != 1; these break partial isometry."""
    kind = field.kind
    if kind is FieldKind.RATIONAL:
        return [field.rational(2), field.rational(-2), field.rational(3),
                field.rational(1, 2), field.rational(-3, 2), field.rational(5, 3)]
    if kind is FieldKind.GAUSSIAN_RATIONAL:
        return [field.gaussian(2, 0), field.gaussian(0, 2), field.gaussian(1, 1),
                field.gaussian(1, -1), field.gaussian(1, 2),
                field.gaussian(1, 1, 2, 2), field.gaussian(3, 0)]
    one = field.one()
    return [u for u in field.elements()
            if not u.is_zero() and u * u.star() != one]


_ROTATIONS = ((3, 4, 5), (5, 12, 13), (8, 15, 17))


def _random_unitary(field: FieldDescriptor, n: int, rng: random.Random) -> Matrix:
    """A unit-scaled permutation, optionally twisted by a rational rotation."""
    perm = list(range(n))
    rng.shuffle(perm)
    units = _unitary_scalars(field)
    zero = field.zero()
    rows = [[zero] * n for _ in range(n)]
    for i, j in enumerate(perm):
        rows[i][j] = rng.choice(units)
    v = Matrix(field, rows)
    if (field.kind in (FieldKind.RATIONAL, FieldKind.GAUSSIAN_RATIONAL)
            and n >= 2 and rng.random() < 0.75):
        i, j = sorted(rng.sample(range(n), 2))
        a, b, c = _ROTATIONS[rng.randrange(len(_ROTATIONS))]
        cos, sin = Fraction(a, c), Fraction(b, c)
        rot_rows = [[field.one() if r == s else zero for s in range(n)]
                    for r in range(n)]
        rot_rows[i][i] = field.rational(cos.numerator, cos.denominator)
        rot_rows[i][j] = field.rational(sin.numerator, sin.denominator)
        rot_rows[j][i] = field.rational(-sin.numerator, sin.denominator)
        rot_rows[j][j] = field.rational(cos.numerator, cos.denominator)
        v = Matrix(field, rot_rows) * v
    return v


def _random_scalar(field: FieldDescriptor, rng: random.Random):
    kind = field.kind
    if kind is FieldKind.RATIONAL:
        return field.rational(rng.randint(-3, 3), rng.randint(1, 3))
    if kind is FieldKind.GAUSSIAN_RATIONAL:
        re = (rng.randint(-3, 3), rng.randint(1, 3))
        im = (rng.randint(-3, 3), rng.randint(1, 3))
        return field.gaussian(re[0], im[0], re[1], im[1])
    return field.element_at(rng.randrange(field.size()))


# -- element streams -----------------------------------------------------------

def _exhaustive_element(field: FieldDescriptor, dim: int, index: int) -> Matrix:
    """Element number `index` in lexicographic entry order (entry (0,0) is
    the most significant digit)."""
    q = field.size()
    cells = dim * dim
    digits = []
    rem = index
    for _ in range(cells):
        rem, d = divmod(rem, q)
        digits.append(d)
    digits.reverse()
    scalars = [field.element_at(d) for d in digits]
    return Matrix(field, [scalars[i * dim:(i + 1) * dim] for i in range(dim)])


def _constructed_core(spec: GeneratorSpec, rng: random.Random) -> Matrix:
    field, n = spec.field, spec.dim
    if spec.mode is Mode.CONSTRUCTED_PI:
        # nonzero strictly-upper shift pattern with unitary weights: always a
        # partial isometry, never group invertible (nonzero nilpotent)
        units = _unitary_scalars(field)
        cells = [(i, j) for i in range(n) for j in range(i + 1, n)]
        rng.shuffle(cells)
        want = rng.randint(1, n - 1)
        zero = field.zero()
        rows = [[zero] * n for _ in range(n)]
        used_rows, used_cols = set(), set()
        for i, j in cells:
            if len(used_rows) == want:
                break
            if i in used_rows or j in used_cols:
                continue
            rows[i][j] = rng.choice(units)
            used_rows.add(i)
            used_cols.add(j)
        return Matrix(field, rows)

    if spec.mode is Mode.CONSTRUCTED_SEP:
        rank = rng.randint(0, n)
        pool = _unitary_scalars(field)
        diag = [rng.choice(pool) for _ in range(rank)]
    else:
        rank = rng.randint(1, n)
        non_unitary = _non_unitary_scalars(field)
        invertible = non_unitary + _unitary_scalars(field)
        # first core entry breaks unitarity, so the element is never SEP
        diag = [rng.choice(non_unitary)]
        diag += [rng.choice(invertible) for _ in range(rank - 1)]
    diag += [spec.field.zero()] * (n - rank)
    core = Matrix.diagonal(field, diag)
    v = _random_unitary(field, n, rng)
    return v * core * v.star()


def generate(spec: GeneratorSpec):
    """The deterministic element stream described by the spec."""
    spec.validate()
    field, n = spec.field, spec.dim
    if spec.mode is Mode.EXHAUSTIVE:
        total = field.size() ** (n * n)
        for index in range(total):
            yield _exhaustive_element(field, n, index)
        return
    rng = random.Random(spec.seed)
    if spec.mode is Mode.RANDOM:
        for _ in range(spec.sample_count):
            yield Matrix(field, [[_random_scalar(field, rng) for _ in range(n)]
                                 for _ in range(n)])
        return
    for _ in range(spec.sample_count):
        yield _constructed_core(spec, rng)


# -- sweeping --------------------------------------------------------------------

def resolve_entries(entry_ids) -> list[TheoremEntry]:
    """Map CLI-style entry selectors to registry entries ('all' = everything)."""
    if isinstance(entry_ids, str):
        entry_ids = [entry_ids]
    ids = list(entry_ids)
    if ids == ["all"]:
        return registry()
    table = registry_map()
    out = []
    for i in ids:
        if i not in table:
            raise UnknownEntryError(f"unknown theorem entry {i!r}")
        out.append(table[i])
    return out


def _serialize_matrix(m: Matrix) -> list[list[str]]:
    return m.to_tokens()


def _sort_key(record: dict) -> str:
    return json.dumps(record, sort_keys=True)


@dataclass
class VerificationReport:
    spec: GeneratorSpec
    entry_ids: list[str]
    totals: dict
    per_theorem: dict
    informational: dict
    lemmas: dict
    wall_time: float

    def counterexample_count(self) -> int:
        """Gated counterexamples plus lemma violations (informational entries
        never count)."""
        n = sum(len(t["counterexamples"]) for t in self.per_theorem.values())
        n += sum(len(l["violations"]) for l in self.lemmas.values())
        return n

    def to_dict(self) -> dict:
        spec_echo = self.spec.echo()
        spec_echo["entries"] = list(self.entry_ids)
        return {
            "schema": REPORT_SCHEMA,
            "spec": spec_echo,
            "totals": self.totals,
            "perTheorem": self.per_theorem,
            "informational": self.informational,
            "lemmas": self.lemmas,
            "wallTime": self.wall_time,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _pair_indices(total: int):
    """Up to PAIR_BUDGET ordered-pair indices out of total^2, strided
    deterministically across the full product when over budget."""
    npairs = total * total
    if npairs <= PAIR_BUDGET:
        return range(npairs)
    return (k * npairs // PAIR_BUDGET for k in range(PAIR_BUDGET))


def sweep(spec: GeneratorSpec, entry_ids="all") -> VerificationReport:
    """Run every requested entry over the stream and collect the evidence.

    Elements outside R^# intersect R^+ are excluded from SEP-kind evaluation
    but still count toward membership totals, feed X3 when MP-invertible,
    and participate in both lemma checks.
    """
    spec.validate()
    entries = resolve_entries(entry_ids)
    t0 = time.perf_counter()

    sep_entries = [e for e in entries if e.kind is Kind.SEP and e.gated]
    info_entries = [e for e in entries if not e.gated]
    pi_entries = [e for e in entries if e.kind is Kind.PI]

    tallies = {e.id: {"checked": 0, "consistent": 0, "counterexamples": []}
               for e in entries if e.gated}
    info_tallies = {e.id: {"checked": 0, "agreeing": 0, "mismatches": []}
                    for e in info_entries}

    exhaustive = spec.mode is Mode.EXHAUSTIVE
    stream = None if exhaustive else list(generate(spec))

    # pass 1: projections, cheaply (no inverses needed)
    projections = []
    seen = set()
    for m in (generate(spec) if exhaustive else stream):
        if m not in seen and is_projection(m):
            projections.append(m)
            seen.add(m)

    totals = {"generated": 0, "mpInvertible": 0, "groupInvertible": 0,
              "bothInvertible": 0, "sep": 0}
    sandwich = {"checked": 0, "vacuous": 0, "violations": []}

    def record(entry, bundle):
        case = evaluate(entry, bundle)
        if entry.gated:
            t = tallies[entry.id]
            t["checked"] += 1
            if case.verdict is Verdict.CONSISTENT:
                t["consistent"] += 1
            else:
                t["counterexamples"].append({
                    "element": _serialize_matrix(case.element),
                    "conditionHolds": case.condition_holds,
                    "sepHolds": case.sep_holds,
                })
        else:
            t = info_tallies[entry.id]
            t["checked"] += 1
            if case.condition_holds == case.sep_holds:
                t["agreeing"] += 1
            else:
                t["mismatches"].append({
                    "element": _serialize_matrix(case.element),
                    "conditionHolds": case.condition_holds,
                    "sepHolds": case.sep_holds,
                })

    # pass 2: bundles, theorem entries, and the L2.8 implication
    for m in (generate(spec) if exhaustive else stream):
        bundle = InverseBundle.compute(m)
        totals["generated"] += 1
        if bundle.has_mp:
            totals["mpInvertible"] += 1
        if bundle.has_group:
            totals["groupInvertible"] += 1
        both = bundle.has_mp and bundle.has_group
        if both:
            totals["bothInvertible"] += 1
            if is_sep(bundle):
                totals["sep"] += 1
            for entry in sep_entries:
                record(entry, bundle)
            for entry in info_entries:
                record(entry, bundle)
        if bundle.has_mp:
            for entry in pi_entries:
                record(entry, bundle)
            for x in projections:
                verdict = check_projection_sandwich(bundle, x)
                sandwich["checked"] += 1
                if verdict is Verdict.VACUOUS:
                    sandwich["vacuous"] += 1
                elif verdict is Verdict.COUNTEREXAMPLE:
                    sandwich["violations"].append({
                        "a": _serialize_matrix(m), "x": _serialize_matrix(x)})

    # pass 3: L3.1 duality over ordered element pairs
    duality = {"checked": 0, "violations": []}
    total = totals["generated"]
    if exhaustive:
        for idx in _pair_indices(total):
            ia, ib = divmod(idx, total)
            e = _exhaustive_element(spec.field, spec.dim, ia)
            a = _exhaustive_element(spec.field, spec.dim, ib)
            duality["checked"] += 1
            if check_left_right_duality(e, a) is Verdict.COUNTEREXAMPLE:
                duality["violations"].append(
                    {"e": _serialize_matrix(e), "a": _serialize_matrix(a)})
    else:
        pair_rng = random.Random((spec.seed or 0) * 2654435761 + 97)
        for _ in range(min(PAIR_BUDGET, total * total)):
            e = stream[pair_rng.randrange(total)]
            a = stream[pair_rng.randrange(total)]
            duality["checked"] += 1
            if check_left_right_duality(e, a) is Verdict.COUNTEREXAMPLE:
                duality["violations"].append(
                    {"e": _serialize_matrix(e), "a": _serialize_matrix(a)})

    for t in tallies.values():
        t["counterexamples"].sort(key=_sort_key)
    for t in info_tallies.values():
        t["mismatches"].sort(key=_sort_key)
    sandwich["violations"].sort(key=_sort_key)
    duality["violations"].sort(key=_sort_key)

    return VerificationReport(
        spec=spec,
        entry_ids=[e.id for e in entries],
        totals=totals,
        per_theorem=tallies,
        informational=info_tallies,
        lemmas={"L3.1": duality, "L2.8": sandwich},
        wall_time=round(time.perf_counter() - t0, 6),
    )
