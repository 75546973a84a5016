"""The classification tables as machine-checkable data, plus the verifier.

Four universes are covered: a single length-3 pattern together with one
length-4 pattern (144 sets), two length-3 patterns plus one length-4 (360),
three plus one (480), and at least four plus one (528).  Each table row is
either a predicate (evaluated with the containment test, never a hand-kept
pair list) or a union of symmetry-class orbits of listed representatives.

Known misprints in the printed tables are pre-registered findings: the row
encodings below already carry the corrected members, and ``verify`` recomputes
the evidence for every correction so the report documents exactly how the
printed version fails.  Known corrections:

* the C(n,2)+1 block lists {213,312,1324}, whose extra pattern contains 213,
  so the set really counts 2^(n-1); the class of {132,213,3421} (oracle count
  C(n,2)+1) is missing from the block but is needed for its claimed size 118;
* the count-n row of the three-plus-one table merges two distinct T classes;
  it is encoded as "T any count-n triple, extra pattern containing a member"
  plus the class of {123,132,213,3412};
* the count-4 row of that table prints {123,231,312,...} representatives whose
  extra pattern contains 231 (those sets count n); the proven representatives
  are {123,132,213,3421} and {123,132,213,4231};
* several explicit avoider lists print an ascending witness where only the
  descending one avoids (and vice versa), the two 4-element lists are swapped
  between their extra patterns, and the two five-triple singleton rows have
  their conclusion sets swapped;
* the last table's zero and count-2 rows claim 348 and 100 sets; the stated
  conditions reach 250 and 198.  The claimed total 504 of 528 is met exactly
  when the zero row keeps its strict-subset premise, which leaves the 24 sets
  containing all six length-3 patterns uncovered; they are surfaced with
  oracle counts instead of being silently absorbed.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import formulas
from .enumeration import CountTable, count_table, count_tables, enumerate_avoiders
from .formulas import (
    BinomialPoly,
    Catalan,
    Constant,
    CountFormula,
    ExplicitFamily,
    FibonacciForm,
    Linear,
    PowerLinear,
    RationalGF,
    TribonacciForm,
    ZeroBeyond,
    evaluate,
    render,
)
from .perms import (
    PatternSet,
    Perm,
    contains,
    format_pattern_set,
    parse_pattern_set,
    pattern_set_key,
    sym_group,
)
from .symmetry import orbit

P123, P132, P213, P231, P312, P321 = (
    (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1),
)
P1234 = (1, 2, 3, 4)
P4321 = (4, 3, 2, 1)

S3 = sorted(sym_group(3))
S4 = sorted(sym_group(4))


class CatalogIntegrityError(RuntimeError):
    """A pattern set satisfied two contradictory table rows."""


def _threes(s: PatternSet) -> frozenset[Perm]:
    return frozenset(p for p in s if len(p) == 3)


def _tau(s: PatternSet) -> Optional[Perm]:
    fours = [p for p in s if len(p) == 4]
    return fours[0] if len(fours) == 1 else None


def _tau_contains_member(s: PatternSet) -> bool:
    tau = _tau(s)
    return any(contains(tau, a) for a in _threes(s))


def _orbit_union(*literals: str) -> frozenset[PatternSet]:
    members: set[PatternSet] = set()
    for lit in literals:
        members |= orbit(parse_pattern_set(lit)).members
    return frozenset(members)


# Wilf classes of the small subsets of S_3, by orbit closure from one seed per
# class (10 pairs count 2^(n-1), 4 pairs C(n,2)+1, 1 pair eventually zero;
# 14 triples count n, 2 triples are the Fibonacci class, 4 contain 123 & 321).
_POW2_PAIRS = _orbit_union("123;132", "132;213", "132;231")
_NN2_PAIRS = _orbit_union("123;231")
_FIB_TRIPLES = _orbit_union("123;132;213")
_N_TRIPLES = frozenset(
    frozenset(c)
    for c in itertools.combinations(S3, 3)
    if not {P123, P321} <= frozenset(c)
) - _FIB_TRIPLES

assert len(_POW2_PAIRS) == 10 and len(_NN2_PAIRS) == 4
assert len(_FIB_TRIPLES) == 2 and len(_N_TRIPLES) == 14


# --- explicit avoider families ----------------------------------------------

def _dn(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def _an(n: int) -> Perm:
    return tuple(range(1, n + 1))


def _down(n: int, stop: int) -> Perm:
    # (n, n-1, ..., stop); empty when stop > n
    return tuple(range(n, stop - 1, -1))


_FAMILY_BUILDERS: dict[str, Callable[[int], frozenset]] = {
    "123;132;231;3214": lambda n: frozenset({_down(n, 4) + (2, 1, 3), _down(n, 3) + (1, 2), _dn(n)}),
    "123;132;231;4312": lambda n: frozenset({_down(n - 1, 1) + (n,), (n,) + _down(n - 2, 1) + (n - 1,), _dn(n)}),
    "123;132;231;4213": lambda n: frozenset({_down(n - 1, 1) + (n,), _down(n, 3) + (1, 2), _dn(n)}),
    "123;231;312;1432": lambda n: frozenset({_down(n - 2, 1) + (n, n - 1), _down(n - 1, 1) + (n,), _dn(n)}),
    "123;231;312;2143": lambda n: frozenset({(1,) + _down(n, 2), _down(n - 1, 1) + (n,), _dn(n)}),
    "132;213;231;1234": lambda n: frozenset({_down(n, 4) + (1, 2, 3), _down(n, 3) + (1, 2), _dn(n)}),
    "132;213;231;4123": lambda n: frozenset({_dn(n), _down(n, 3) + (1, 2), _an(n)}),
    "132;213;231;4312": lambda n: frozenset({_dn(n), (n,) + _an(n - 1), _an(n)}),
    "132;213;231;4321": lambda n: frozenset({_an(n), (n,) + _an(n - 1), (n, n - 1) + _an(n - 2)}),
    "123;132;213;3421": lambda n: frozenset(
        {_dn(n), _down(n, 3) + (1, 2), _down(n, 4) + (2, 3, 1), _down(n, 5) + (3, 4, 1, 2)}
    ),
    "123;132;213;4231": lambda n: frozenset(
        {_dn(n), (n - 1, n) + _down(n - 2, 1), _down(n, 3) + (1, 2), (n - 1, n) + _down(n - 2, 3) + (1, 2)}
    ),
    "123;132;213;231;4312": lambda n: frozenset({_dn(n)}),
    "123;132;231;312;3214": lambda n: frozenset({_dn(n)}),
    "123;213;231;312;1432": lambda n: frozenset({_dn(n)}),
    "132;213;231;312;1234": lambda n: frozenset({_dn(n)}),
}

formulas.FAMILY_REGISTRY.update(_FAMILY_BUILDERS)

EXPLICIT_FAMILY_SETS: dict[PatternSet, str] = {
    parse_pattern_set(lit): lit for lit in _FAMILY_BUILDERS
}


# --- table rows --------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    table: int
    row_id: str
    representative: str
    claimed_size: int
    citation: str
    formula: CountFormula
    valid_from: int
    matches: Callable[[PatternSet], bool] = field(compare=False)
    explicit_sets: bool = False
    per_set: Optional[Callable[[PatternSet], tuple[CountFormula, int]]] = field(
        default=None, compare=False
    )


def _member_of(members: frozenset[PatternSet]) -> Callable[[PatternSet], bool]:
    return lambda s: s in members


def _t2_zero_matches(s: PatternSet) -> bool:
    t3, tau = _threes(s), _tau(s)
    return ({P123, P321} <= t3) or (P123 in t3 and tau == P4321) or (P321 in t3 and tau == P1234)


def _t34_zero_matches(s: PatternSet, strict: bool) -> bool:
    t3, tau = _threes(s), _tau(s)
    if strict and len(t3) == 6:
        return False
    return ({P123, P321} <= t3) or (P123 in t3 and tau == P4321) or (P321 in t3 and tau == P1234)


_NN2_ORBITS = _orbit_union(
    "123;132;3412", "123;132;4231", "123;213;3412", "123;213;4231",
    "132;213;3412", "132;231;1234", "132;231;2134", "132;231;3124",
    "132;231;3214", "213;312;2341", "231;312;1324", "132;213;4321",
    "132;213;3421",  # corrected member, see module docstring
)
_2N2_ORBITS = _orbit_union(
    "123;312;1432", "123;312;2143", "123;312;2431",
    "123;312;3214", "123;312;3241", "123;312;3421",
)
_FIB2_ORBITS = _orbit_union("123;132;3241", "132;213;2341")
_3N5_ORBITS = _orbit_union("123;132;3421", "123;213;3421")
_TRIB_ORBITS = _orbit_union("123;132;3214", "123;213;1432", "132;213;1234")
_N_SPECIAL_ORBIT = _orbit_union("123;132;213;3412")
_THREE_ORBITS = _orbit_union(
    "123;132;231;3214", "123;132;231;4312", "123;132;231;4213",
    "123;213;231;1432", "123;213;231;4132", "123;213;231;4312",
    "123;231;312;1432", "123;231;312;2143", "123;231;312;3214",
    "132;213;231;1234", "132;213;231;4123", "132;213;231;4321",
    "132;213;231;4312",
)
_FOUR_ORBITS = _orbit_union("123;132;213;3421", "123;132;213;4231")
_SINGLETON_ORBITS = _orbit_union(
    "123;132;213;231;4312", "123;132;231;312;3214",
    "123;213;231;312;1432", "132;213;231;312;1234",
)
# the stated zero threshold n >= 6 for three-triple sets fails for exactly
# these four: each keeps one avoider at n = 6 and dies at n = 7
_ZERO6_EXCEPTIONS = _orbit_union("123;132;213;4321", "123;231;312;4321")

assert len(_NN2_ORBITS) == 50 and len(_2N2_ORBITS) == 24
assert len(_THREE_ORBITS) == 46 and len(_FOUR_ORBITS) == 6
assert len(_SINGLETON_ORBITS) == 10


TABLE_ROWS: tuple[TableRow, ...] = (
    # ---- one length-3 pattern plus one length-4 pattern (144 sets)
    TableRow(1, "1.catalan", "{a,t}: t contains a", 60,
             "Knuth; containment reduction", Catalan(), 1,
             matches=_tau_contains_member),
    TableRow(1, "1.fibonacci-even", "cls{123,1432} and 8 companion classes", 46,
             "West", FibonacciForm(2, -1, 0), 1,
             matches=_member_of(_orbit_union(
                 "123;1432", "123;2143", "123;2413", "132;1234", "132;2134",
                 "132;2314", "132;2341", "132;3241", "132;3412"))),
    TableRow(1, "1.power-linear", "cls{132,3421}, cls{132,4231}", 12,
             "West; Guibert", PowerLinear(1, -1, -2, (), 1), 1,
             matches=_member_of(_orbit_union("132;3421", "132;4231"))),
    TableRow(1, "1.pow2-minus-triangle", "cls{123,2431}", 8,
             "West", PowerLinear(0, 3, -1, ((-1, 1, 2),), -1), 1,
             matches=_member_of(_orbit_union("123;2431"))),
    TableRow(1, "1.quartic-poly", "cls{123,3421}", 4,
             "West", BinomialPoly(((1, 0, 4), (2, 0, 3), (1, 0, 1)), 0), 1,
             matches=_member_of(_orbit_union("123;3421"))),
    TableRow(1, "1.rational-gf", "cls{132,3214}", 4,
             "West", RationalGF((1, -3, 3, -1), (1, -4, 5, -3)), 1,
             matches=_member_of(_orbit_union("132;3214"))),
    TableRow(1, "1.quartic-poly-b", "cls{132,4321}", 4,
             "West", BinomialPoly(((1, 0, 4), (1, 1, 4), (1, 0, 2)), 1), 1,
             matches=_member_of(_orbit_union("132;4321"))),
    TableRow(1, "1.zero", "cls{123,4321}", 2,
             "Erdos-Szekeres", ZeroBeyond(7), 7,
             matches=_member_of(_orbit_union("123;4321"))),
    TableRow(1, "1.pow2-minus-cubic", "cls{123,3412}", 2,
             "Billey-Jockusch-Stanley", PowerLinear(0, 1, 1, ((-1, 1, 3), (-2, 0, 1)), -1), 1,
             matches=_member_of(_orbit_union("123;3412"))),
    TableRow(1, "1.quintic-poly", "cls{123,4231}", 2,
             "West", BinomialPoly(((1, 0, 5), (2, 0, 4), (1, 0, 3), (1, 0, 2)), 1), 1,
             matches=_member_of(_orbit_union("123;4231"))),

    # ---- two length-3 patterns plus one length-4 pattern (360 sets)
    TableRow(2, "2.pow2", "pair in the 2^(n-1) class, t contains a member", 160,
             "Simion-Schmidt; containment reduction", PowerLinear(0, 1, -1, (), 0), 1,
             matches=lambda s: _threes(s) in _POW2_PAIRS and _tau_contains_member(s)),
    TableRow(2, "2.nn2", "pair in the C(n,2)+1 class with t containing a member, "
                         "or one of 13 listed classes (one corrected)", 118,
             "Simion-Schmidt; direct recurrences", BinomialPoly(((1, 0, 2),), 1), 1,
             matches=lambda s: (_threes(s) in _NN2_PAIRS and _tau_contains_member(s))
             or s in _NN2_ORBITS),
    TableRow(2, "2.zero", "{123,321,t}; {123,a,4321}; {321,a,1234}", 32,
             "Erdos-Szekeres", ZeroBeyond(5), 5,
             matches=_t2_zero_matches,
             per_set=lambda s: (ZeroBeyond(5), 5) if {P123, P321} <= _threes(s) else (ZeroBeyond(7), 7)),
    TableRow(2, "2.linear-2n", "cls{123,312,t}, t in {1432,2143,2431,3214,3241,3421}", 24,
             "direct recurrences", Linear(2, -2), 2,
             matches=_member_of(_2N2_ORBITS)),
    TableRow(2, "2.fibonacci", "cls{123,132,3241}, cls{132,213,2341}", 12,
             "direct recurrences", FibonacciForm(1, 2, -1), 1,
             matches=_member_of(_FIB2_ORBITS)),
    TableRow(2, "2.linear-3n", "cls{123,132,3421}, cls{123,213,3421}", 8,
             "direct recurrences", Linear(3, -5), 3,
             matches=_member_of(_3N5_ORBITS)),
    TableRow(2, "2.tribonacci", "cls{123,132,3214}, cls{123,213,1432}, cls{132,213,1234}", 6,
             "three-term recurrence", TribonacciForm(0), 1,
             matches=_member_of(_TRIB_ORBITS)),

    # ---- three length-3 patterns plus one length-4 pattern (480 sets)
    TableRow(3, "3.linear-n", "T a count-n triple with t containing a member, "
                              "or cls{123,132,213,3412}", 282,
             "Simion-Schmidt; direct recurrence", Linear(1, 0), 1,
             matches=lambda s: (_threes(s) in _N_TRIPLES and _tau_contains_member(s))
             or s in _N_SPECIAL_ORBIT),
    TableRow(3, "3.zero", "123,321 in T; or 123 in T and t=4321; or 321 in T and t=1234", 108,
             "Erdos-Szekeres", ZeroBeyond(6), 6,
             matches=lambda s: _t34_zero_matches(s, strict=False),
             per_set=lambda s: (ZeroBeyond(7), 7) if s in _ZERO6_EXCEPTIONS else (ZeroBeyond(6), 6)),
    TableRow(3, "3.three", "13 listed classes (10 orbits)", 46,
             "explicit avoider lists", Constant(3, 3), 3,
             matches=_member_of(_THREE_ORBITS), explicit_sets=True),
    TableRow(3, "3.fibonacci", "T in the Fibonacci class, t contains a member", 38,
             "Simion-Schmidt; containment reduction", FibonacciForm(1, 1, 0), 1,
             matches=lambda s: _threes(s) in _FIB_TRIPLES and _tau_contains_member(s)),
    TableRow(3, "3.four", "cls{123,132,213,3421}, cls{123,132,213,4231} (corrected reps)", 6,
             "explicit avoider lists", Constant(4, 4), 4,
             matches=_member_of(_FOUR_ORBITS), explicit_sets=True),

    # ---- at least four length-3 patterns plus one length-4 pattern (528 sets)
    TableRow(4, "4.zero", "strict subsets T with 123,321 in T; or 123 in T and t=4321; "
                          "or 321 in T and t=1234", 348,
             "Erdos-Szekeres", ZeroBeyond(6), 6,
             matches=lambda s: _t34_zero_matches(s, strict=True)),
    TableRow(4, "4.two", "|T|=4 without {123,321}, t contains a member", 100,
             "Simion-Schmidt; containment reduction", Constant(2, 2), 2,
             matches=lambda s: len(_threes(s)) == 4
             and not {P123, P321} <= _threes(s) and _tau_contains_member(s)),
    TableRow(4, "4.one", "|T|=5 with 123 (resp. 321) missing and t != 1234 (resp. 4321), "
                         "or one of 4 listed singleton classes", 56,
             "explicit avoider lists", Constant(1, 3), 3,
             matches=lambda s: (len(_threes(s)) == 5
                                and ((P123 not in _threes(s) and _tau(s) != P1234)
                                     or (P321 not in _threes(s) and _tau(s) != P4321)))
             or s in _SINGLETON_ORBITS,
             explicit_sets=True,
             per_set=lambda s: (Constant(1, 3), 3) if len(_threes(s)) == 5 else (Constant(1, 4), 4)),
)


@dataclass(frozen=True)
class CatalogEntry:
    representative: PatternSet
    claimed_class_size: int
    formula: CountFormula
    valid_from: int
    source_table: int
    citation: str
    row_id: str
    family: Optional[str] = None


def expand_universe(table_id: int) -> list[PatternSet]:
    """All pattern sets of a table's universe, in canonical order."""
    if table_id == 1:
        sizes = (1,)
    elif table_id == 2:
        sizes = (2,)
    elif table_id == 3:
        sizes = (3,)
    elif table_id == 4:
        sizes = (4, 5, 6)
    else:
        raise ValueError(f"unknown table id {table_id}")
    sets = [
        frozenset(threes) | {tau}
        for k in sizes
        for threes in itertools.combinations(S3, k)
        for tau in S4
    ]
    return sorted(sets, key=pattern_set_key)


def table_of(s: PatternSet) -> Optional[int]:
    """Which table universe a set belongs to, if any."""
    threes = _threes(s)
    fours = [p for p in s if len(p) == 4]
    if len(fours) != 1 or not threes or len(threes) + 1 != len(s):
        return None
    return min(len(threes), 4)


def _entry_for(row: TableRow, s: PatternSet) -> CatalogEntry:
    formula, valid_from = row.formula, row.valid_from
    if row.per_set is not None:
        formula, valid_from = row.per_set(s)
    family = None
    if row.explicit_sets:
        family = EXPLICIT_FAMILY_SETS.get(s)
        if family is not None:
            formula = ExplicitFamily(family)
    return CatalogEntry(
        representative=orbit(s).representative,
        claimed_class_size=row.claimed_size,
        formula=formula,
        valid_from=valid_from,
        source_table=row.table,
        citation=row.citation,
        row_id=row.row_id,
        family=family,
    )


def assign_entries(universe: Iterable[PatternSet]) -> dict[PatternSet, Optional[CatalogEntry]]:
    """Map each set to the entry whose row condition it satisfies (or None)."""
    out: dict[PatternSet, Optional[CatalogEntry]] = {}
    for s in universe:
        tid = table_of(s)
        if tid is None:
            out[s] = None
            continue
        hits = [row for row in TABLE_ROWS if row.table == tid and row.matches(s)]
        if len(hits) > 1:
            ids = ", ".join(r.row_id for r in hits)
            raise CatalogIntegrityError(f"{format_pattern_set(s)} matches contradictory rows: {ids}")
        out[s] = _entry_for(hits[0], s) if hits else None
    return out


def classify(t: Iterable[Perm], n_max: int) -> tuple[Optional[CatalogEntry], CountTable]:
    """Catalog entry (if the set is in a covered universe) plus oracle counts."""
    s = frozenset(tuple(p) for p in t)
    table = count_table(s, n_max)
    if table_of(s) is None:
        return None, table
    return assign_entries([s])[s], table


# --- verification ------------------------------------------------------------

CALIBRATION = {
    "fibonacci_convention": "f(1)=f(2)=1",
    "tribonacci_seeds": "t(1)=1, t(2)=2, t(3)=4 (oracle counts at n=1..3)",
    "rows": {
        "1.fibonacci-even": {
            "index_map": "f(2n-1)",
            "printed_index": "f(2n-2)",
            "note": "printed index presumes f(0)=f(1)=1; calibrated against the oracle at n=2..5",
        },
        "2.fibonacci": {"index_map": "f(n+2)-1"},
        "3.fibonacci": {"index_map": "f(n+1)"},
        "2.tribonacci": {"index_map": "t(n)"},
    },
    "gf_anchor": "a3 = 5 = |S_3(132)| pins the coefficient indexing",
}


@dataclass
class PairCheck:
    pattern_set: PatternSet
    row_id: Optional[str]
    valid_from: Optional[int]
    counts: tuple[int, ...]
    formula_values: Optional[tuple[int, ...]]  # aligned with n = 1..n_max
    verdict: str  # match | mismatch | uncovered
    mismatch_ns: tuple[int, ...] = ()
    skipped_below: int = 0
    sets_checked: Optional[bool] = None
    sharp_at_threshold: Optional[bool] = None
    conjecture: Optional[str] = None

    @property
    def literal(self) -> str:
        return format_pattern_set(self.pattern_set)


@dataclass
class RowAudit:
    row_id: str
    table: int
    representative: str
    claimed_size: int
    computed_size: int
    formula: str
    citation: str
    matches: int
    mismatches: int

    def to_json_dict(self) -> dict:
        return {
            "row_id": self.row_id,
            "representative": self.representative,
            "claimed_size": self.claimed_size,
            "computed_size": self.computed_size,
            "formula": self.formula,
            "citation": self.citation,
            "verdicts": {"match": self.matches, "mismatch": self.mismatches},
        }


@dataclass
class TableAudit:
    table_id: int
    universe: int
    covered: int
    claimed_total: int
    rows: list[RowAudit]
    uncovered: list[PairCheck]

    def to_json_dict(self) -> dict:
        return {
            "id": self.table_id,
            "rows": [r.to_json_dict() for r in self.rows],
            "coverage": {
                "universe": self.universe,
                "covered": self.covered,
                "claimed_total": self.claimed_total,
                "uncovered": [
                    {
                        "set": p.literal,
                        "counts": list(p.counts),
                        "conjecture": p.conjecture,
                    }
                    for p in self.uncovered
                ],
            },
        }


@dataclass
class VerificationReport:
    n_max: int
    jobs: Optional[int]
    elapsed_seconds: float
    tables: list[TableAudit]
    findings: list[dict]
    pairs: dict[PatternSet, PairCheck]
    calibration: dict

    @property
    def unexpected_mismatches(self) -> list[PairCheck]:
        return [p for p in self.pairs.values() if p.verdict == "mismatch"]

    def table(self, table_id: int) -> TableAudit:
        return next(t for t in self.tables if t.table_id == table_id)

    def to_json_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "jobs": self.jobs,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
            "tables": [t.to_json_dict() for t in self.tables],
            "findings": self.findings,
            "calibration": self.calibration,
            "unexpected_mismatches": [p.literal for p in self.unexpected_mismatches],
        }

    def to_csv_rows(self) -> list[list]:
        rows: list[list] = [["table", "row_id", "set", "n", "oracle", "formula", "verdict"]]
        for s in sorted(self.pairs, key=pattern_set_key):
            p = self.pairs[s]
            tid = table_of(s)
            for n in range(1, self.n_max + 1):
                if p.verdict == "uncovered":
                    rows.append([tid, "", p.literal, n, p.counts[n], "", "uncovered"])
                elif n < (p.valid_from or 1):
                    rows.append([tid, p.row_id, p.literal, n, p.counts[n], "", "below-threshold-skipped"])
                else:
                    val = p.formula_values[n - 1]
                    verdict = "match" if p.counts[n] == val else "mismatch"
                    rows.append([tid, p.row_id, p.literal, n, p.counts[n], val, verdict])
        return rows


def _fit_conjecture(counts: tuple[int, ...]) -> Optional[str]:
    # label an uncovered pair with a matching closed form, if a simple variant
    # fits exactly with at least three confirming values
    n_max = len(counts) - 1
    candidates: list[tuple[CountFormula, int]] = [(Catalan(), 1), (PowerLinear(0, 1, -1, (), 0), 1)]
    for n0 in range(1, n_max - 1):
        if all(c == 0 for c in counts[n0:]):
            candidates.insert(0, (ZeroBeyond(n0), n0))
            break
    for n0 in range(1, n_max - 1):
        if counts[n0] != 0 and len(set(counts[n0:])) == 1:
            candidates.append((Constant(counts[n0], n0), n0))
            break
    a = counts[n_max] - counts[n_max - 1]
    candidates.append((Linear(a, counts[n_max] - a * n_max), max(1, n_max - 4)))
    for formula, n0 in candidates:
        if n_max - n0 < 2:
            continue
        if all(evaluate(formula, n) == counts[n] for n in range(n0, n_max + 1)):
            prefix = f"for n>={n0}: " if n0 > 1 else ""
            return f"conjecture: {prefix}{render(formula)}"
    return None


def _check_pair(s: PatternSet, entry: Optional[CatalogEntry], n_max: int) -> PairCheck:
    counts = count_table(s, n_max).counts
    if entry is None:
        return PairCheck(
            pattern_set=s, row_id=None, valid_from=None, counts=counts,
            formula_values=None, verdict="uncovered",
            conjecture=_fit_conjecture(counts),
        )
    values = tuple(evaluate(entry.formula, n) for n in range(1, n_max + 1))
    lo = max(1, entry.valid_from)
    mismatch_ns = tuple(n for n in range(lo, n_max + 1) if values[n - 1] != counts[n])
    sets_ok = None
    if entry.family is not None:
        fam = formulas.FAMILY_REGISTRY[entry.family]
        sets_ok = all(
            frozenset(enumerate_avoiders(n, s)) == fam(n) for n in range(lo, n_max + 1)
        )
    sharp = None
    if isinstance(entry.formula, ZeroBeyond) and 1 <= entry.valid_from - 1 <= n_max:
        sharp = counts[entry.valid_from - 1] > 0
    verdict = "match" if not mismatch_ns and sets_ok in (None, True) else "mismatch"
    return PairCheck(
        pattern_set=s, row_id=entry.row_id, valid_from=entry.valid_from,
        counts=counts, formula_values=values, verdict=verdict,
        mismatch_ns=mismatch_ns, skipped_below=max(0, min(lo - 1, n_max)),
        sets_checked=sets_ok, sharp_at_threshold=sharp,
    )


def verify(n_max: int = 9, jobs: Optional[int] = None) -> VerificationReport:
    """Compare every covered pair against the oracle and audit the tables."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    started = time.perf_counter()
    universes = {tid: expand_universe(tid) for tid in (1, 2, 3, 4)}
    assignments = {tid: assign_entries(u) for tid, u in universes.items()}
    all_sets = [s for u in universes.values() for s in u]
    count_tables(all_sets, n_max, jobs)

    pairs: dict[PatternSet, PairCheck] = {}
    audits: list[TableAudit] = []
    for tid, universe in universes.items():
        assignment = assignments[tid]
        row_stats = {
            row.row_id: RowAudit(
                row_id=row.row_id, table=tid, representative=row.representative,
                claimed_size=row.claimed_size, computed_size=0,
                formula=render(row.formula), citation=row.citation,
                matches=0, mismatches=0,
            )
            for row in TABLE_ROWS
            if row.table == tid
        }
        uncovered: list[PairCheck] = []
        covered = 0
        for s in universe:
            check = _check_pair(s, assignment[s], n_max)
            pairs[s] = check
            if check.row_id is None:
                uncovered.append(check)
                continue
            covered += 1
            stats = row_stats[check.row_id]
            stats.computed_size += 1
            if check.verdict == "match":
                stats.matches += 1
            else:
                stats.mismatches += 1
        audits.append(TableAudit(
            table_id=tid,
            universe=len(universe),
            covered=covered,
            claimed_total=sum(r.claimed_size for r in TABLE_ROWS if r.table == tid),
            rows=list(row_stats.values()),
            uncovered=uncovered,
        ))

    findings = _build_findings(n_max, audits)
    for check in pairs.values():
        if check.verdict == "mismatch":
            findings.append({
                "id": f"unexpected-mismatch:{check.literal}",
                "kind": "unexpected-mismatch",
                "printed": check.row_id,
                "resolution": "formula disagrees with the oracle; investigate",
                "evidence": {"set": check.literal, "mismatch_ns": list(check.mismatch_ns)},
                "status": "open",
            })

    return VerificationReport(
        n_max=n_max,
        jobs=jobs,
        elapsed_seconds=time.perf_counter() - started,
        tables=audits,
        findings=findings,
        pairs=pairs,
        calibration=CALIBRATION,
    )


def _counts_for(literal: str, n_max: int) -> list[int]:
    return list(count_table(parse_pattern_set(literal), n_max).counts)


def format_permutation_survivor(literal: str) -> str:
    avoiders = enumerate_avoiders(6, parse_pattern_set(literal))
    return ";".join("".join(map(str, p)) for p in avoiders)


def _build_findings(n_max: int, audits: list[TableAudit]) -> list[dict]:
    """Pre-registered misprint findings, each with recomputed evidence."""
    nn2 = lambda n: n * (n - 1) // 2 + 1
    findings: list[dict] = []

    findings.append({
        "id": "containment-wording",
        "kind": "definition-wording",
        "printed": "the defining sentence introduces 'avoids' with the clause that defines containment",
        "resolution": "standard semantics implemented: containment = an order-isomorphic subsequence exists",
        "evidence": {"S4_avoiders_of_132": _counts_for("132", 4)[4]},
        "status": "confirmed",
    })

    r_image = format_pattern_set(frozenset({(3, 1, 2), (2, 3, 1), (1, 2, 3, 4)}))
    findings.append({
        "id": "reversal-image-misprint",
        "kind": "misprint",
        "printed": "one printed derivation states r({213,132,4321}) = {132,213,4231}",
        "resolution": f"direct reversal gives {{{r_image}}}; both classes count C(n,2)+1 so the conclusion stands",
        "evidence": {
            "recomputed_r_image": r_image,
            "counts_printed_image": _counts_for("132;213;4231", 6),
            "counts_recomputed_image": _counts_for("1234;231;312", 6),
        },
        "status": "confirmed",
    })

    findings.append({
        "id": "nn2-lists-contained-tau",
        "kind": "row-correction",
        "printed": "{213,312,1324} listed under the C(n,2)+1 block",
        "resolution": "1324 contains 213, so the set counts 2^(n-1) and belongs to the 2^(n-1) predicate row",
        "evidence": {
            "counts": _counts_for("1324;213;312", 6),
            "expected_if_nn2": [nn2(n) for n in range(7)],
            "expected_pow2": [0] + [2 ** (n - 1) for n in range(1, 7)],
        },
        "status": "confirmed",
    })

    findings.append({
        "id": "nn2-missing-class",
        "kind": "row-correction",
        "printed": "the C(n,2)+1 block claims 118 sets but its printed members reach only 114",
        "resolution": "the class of {132,213,3421} (4 sets) counts C(n,2)+1 for n <= %d and completes the block"
                      % n_max,
        "evidence": {
            "counts": _counts_for("132;213;3421", n_max),
            "expected": [nn2(n) if n else 1 for n in range(n_max + 1)],
            "class_members": sorted(
                format_pattern_set(m) for m in orbit(parse_pattern_set("132;213;3421")).members
            ),
        },
        "status": "confirmed",
    })

    taus_nn2 = [
        format_pattern_set(frozenset({tau}))
        for tau in S4
        if all(
            count_table(frozenset({P213, P321, tau}), 6).counts[n] == nn2(n)
            for n in range(1, 7)
        )
    ]
    findings.append({
        "id": "nn2-duplicate-tau-item",
        "kind": "misprint",
        "printed": "the tau list printed for T={213,321} reads {1324,2314,1324} (a duplicate)",
        "resolution": "every tau containing 213 or 321 gives C(n,2)+1 for that T; full list recomputed",
        "evidence": {"taus_with_nn2_counts_n_le_6": taus_nn2},
        "status": "confirmed",
    })

    findings.append({
        "id": "2n2-item-prints-3412",
        "kind": "misprint",
        "printed": "one C(n,2)+1 item names (213,312,3412)",
        "resolution": "3412 contains 312, so that set counts 2^(n-1); the proven class is {213,312,2341}",
        "evidence": {
            "counts_printed": _counts_for("213;312;3412", 6),
            "counts_proven": _counts_for("213;312;2341", 6),
        },
        "status": "confirmed",
    })

    findings.append({
        "id": "pow2-duplicate-pair",
        "kind": "misprint",
        "printed": "the 2^(n-1) item lists the pair (132,231) twice",
        "resolution": "the three 2^(n-1) pair classes are derived by orbit closure (10 pairs)",
        "evidence": {"pairs": sorted(format_pattern_set(p) for p in _POW2_PAIRS)},
        "status": "confirmed",
    })

    findings.append({
        "id": "n-row-merged-conditions",
        "kind": "row-correction",
        "printed": "the count-n row names one T class with 'tau contains a member or tau=3412'",
        "resolution": "encoded as every count-n triple with containing tau, plus cls{123,132,213,3412} "
                      "(the 3412 case belongs to the Fibonacci triple, not the printed class)",
        "evidence": {
            "counts_special": _counts_for("123;132;213;3412", n_max),
            "counts_special_mirror": _counts_for("2143;231;312;321", n_max),
        },
        "status": "confirmed",
    })

    findings.append({
        "id": "three-row-unproven-class",
        "kind": "misprint",
        "printed": "the count-3 row lists {123,231,312,3214}, a class no explicit avoider list covers",
        "resolution": "oracle confirms count 3 from n = 3",
        "evidence": {"counts": _counts_for("123;231;312;3214", n_max)},
        "status": "confirmed",
    })

    findings.append({
        "id": "four-row-reps",
        "kind": "row-correction",
        "printed": "the count-4 row prints representatives {123,231,312,3421} and {123,231,312,4231}",
        "resolution": "3421 contains 231 (count n by redundancy); the proven classes are "
                      "{123,132,213,3421} and {123,132,213,4231}",
        "evidence": {
            "counts_printed_rep": _counts_for("123;231;312;3421", 6),
            "counts_corrected_rep": _counts_for("123;132;213;3421", 6),
        },
        "status": "confirmed",
    })

    findings.append({
        "id": "explicit3-witness-typos",
        "kind": "misprint",
        "printed": "several 3-element avoider lists print the ascending witness delta_n where T "
                   "forbids it (items with 123 in T, and the 1234 item); one item prints "
                   "(2,1,n,...,3) and the 4321 item prints the descending witness",
        "resolution": "corrected witnesses encoded per family; set equality verified against the "
                      "enumerator on the full validity range",
        "evidence": {
            "example": "123;132;231;3214",
            "avoiders_n5": sorted(
                format_pattern_set(frozenset({p}))
                for p in enumerate_avoiders(5, parse_pattern_set("123;132;231;3214"))
            ),
        },
        "status": "confirmed",
    })

    findings.append({
        "id": "explicit4-lists-swapped",
        "kind": "misprint",
        "printed": "the two 4-element avoider lists are printed under each other's extra pattern "
                   "(and one member repeats 'n-1')",
        "resolution": "lists swapped back and the garbled member read as (n-1,n,n-2,...,3,1,2); "
                      "oracle confirms both families",
        "evidence": {
            "avoiders_3421_n4": sorted(
                format_pattern_set(frozenset({p}))
                for p in enumerate_avoiders(4, parse_pattern_set("123;132;213;3421"))
            ),
            "avoiders_4231_n4": sorted(
                format_pattern_set(frozenset({p}))
                for p in enumerate_avoiders(4, parse_pattern_set("123;132;213;4231"))
            ),
        },
        "status": "confirmed",
    })

    findings.append({
        "id": "singleton-conclusions-swapped",
        "kind": "misprint",
        "printed": "the five-triple singleton rows conclude {(n,...,1)} when 123 is missing and "
                   "{(1,...,n)} when 321 is missing",
        "resolution": "conclusions swapped: forbidding everything but 123 leaves the ascending "
                      "permutation, and vice versa",
        "evidence": {
            "avoiders_missing123_n5": [
                format_pattern_set(frozenset({p}))
                for p in enumerate_avoiders(5, frozenset(set(S3) - {P123}) | {(2, 1, 4, 3)})
            ],
        },
        "status": "confirmed",
    })

    findings.append({
        "id": "three-zero-threshold-exception",
        "kind": "claim-correction",
        "printed": "the claimed zero threshold for three-triple sets is n >= 6 whenever 123 is in "
                   "T and t = 4321 (or the mirror condition)",
        "resolution": "false for the classes of {123,132,213,4321} and {123,231,312,4321}: one "
                      "avoider survives at n = 6 and the count is zero only from n = 7; the four "
                      "affected sets carry threshold 7",
        "evidence": {
            "counts_fib_triple": _counts_for("123;132;213;4321", 7),
            "counts_other_triple": _counts_for("123;231;312;4321", 7),
            "survivor_n6_fib_triple": format_permutation_survivor("123;132;213;4321"),
            "survivor_n6_other_triple": format_permutation_survivor("123;231;312;4321"),
        },
        "status": "confirmed",
    })

    findings.append({
        "id": "fibonacci-indexing",
        "kind": "threshold-calibration",
        "printed": "the pair-table Fibonacci row prints f(2n-2) with no initial conditions",
        "resolution": "under f(1)=f(2)=1 the matching index is f(2n-1) (equivalently the printed "
                      "index under f(0)=f(1)=1); calibrated against the oracle at n=2..5",
        "evidence": {
            "counts_123_1432": _counts_for("123;1432", 5),
            "f_2n_minus_1": [formulas.fibonacci(2 * n - 1) for n in range(1, 6)],
        },
        "status": "confirmed",
    })

    t4 = next(a for a in audits if a.table_id == 4)
    sizes = {r.row_id: (r.claimed_size, r.computed_size) for r in t4.rows}
    findings.append({
        "id": "table4-claimed-sizes",
        "kind": "claimed-size-mismatch",
        "printed": "the last table claims row sizes 348, 100 and 56 (sum 504 of a 528-set universe)",
        "resolution": "the stated zero-row and count-2-row conditions reach 250 and 198 sets; the "
                      "claimed total 504 is met exactly under the strict-subset premise, leaving "
                      "the 24 sets with all six length-3 patterns uncovered (surfaced with oracle "
                      "counts)",
        "evidence": {
            "claimed_vs_computed": sizes,
            "covered": t4.covered,
            "uncovered": len(t4.uncovered),
        },
        "status": "confirmed",
    })

    return findings
