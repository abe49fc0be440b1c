"""Reproduction report: every published value, checked with a pass/fail line."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from . import reference as ref
from .algebra import alexander_tribracket, validate
from .coloring import count_colorings, enhancement
from .diagram import crossing_relations, faces
from .enumeration import enumerate_tables, polynomial_spectrum
from .fixtures import Z8_LINKS, fixture_path, load_pd, load_tensor_fixture
from .formats import loads_tensor
from .polynomial import canonical_string, subtribracket_polynomial, tribracket_polynomial

__all__ = ["CheckResult", "check_ids", "run_checks"]

#: tensors as transcribed from the published examples
PRINTED_TENSORS = (
    "example3", "example5a", "example5b_printed", "example6", "example7",
    "order4", "order5_printed",
)
#: the tensors used for computation; two transcriptions needed a repair
REPAIRED_TENSORS = (
    "example3", "example5a", "example5b", "example6", "example7", "example10",
    "order4", "order5",
)


@dataclass
class CheckResult:
    id: str
    criterion: int
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        return f"[{mark}] {self.id} ({self.seconds:.2f}s): {self.detail}"

    def to_json(self) -> dict:
        return asdict(self)


_CHECKS: list = []


def _check(cid: str, criterion: int, full_only: bool = False):
    def deco(fn: Callable):
        _CHECKS.append((cid, criterion, full_only, fn))
        return fn
    return deco


def _diagram(name):
    return faces(load_pd(name))


def _multiset_detail(got: dict, want: dict) -> tuple:
    ok = got == want
    if ok:
        return True, f"{sum(got.values())} colorings, multiset matches"
    return False, f"got {got}, expected {want}"


# criterion 1 --------------------------------------------------------------

def _load_raw(name):
    return loads_tensor(fixture_path(name, ".tensor").read_text())


@_check("axioms", 1)
def _axioms():
    rejected = []
    for name in PRINTED_TENSORS:
        rep = validate(_load_raw(name))
        if not rep.ok:
            axiom, witness = rep.failures[0]
            rejected.append(f"{name} ({axiom} at {witness})")
    if rejected:
        return False, "printed tensors rejected: " + "; ".join(rejected)
    return True, f"{len(PRINTED_TENSORS)} printed tensors valid"


@_check("axioms-repaired", 1)
def _axioms_repaired():
    bad = [name for name in REPAIRED_TENSORS if not validate(_load_raw(name)).ok]
    if bad:
        return False, f"rejected: {bad}"
    return True, f"{len(REPAIRED_TENSORS)} tensors valid"


@_check("mutations", 1)
def _mutations():
    total = 0
    for name in REPAIRED_TENSORS:
        t = np.array(_load_raw(name))
        n = t.shape[0]
        for idx in np.ndindex(t.shape):
            for v in range(1, n + 1):
                if v == t[idx]:
                    continue
                m = t.copy()
                m[idx] = v
                rep = validate(m)
                total += 1
                if rep.ok or not any(a.startswith("uniqueness") for a, _ in rep.failures):
                    return False, f"{name} with entry {tuple(i + 1 for i in idx)} set to {v} accepted"
    return True, f"all {total} single-entry mutations rejected with a line repeat"


# criterion 2 --------------------------------------------------------------

@_check("polynomial-phi", 2)
def _phi():
    got = canonical_string(tribracket_polynomial(load_tensor_fixture("example7")))
    return got == ref.EXAMPLE_POLYNOMIAL, f"phi = {got}"


@_check("polynomial-subphi", 2)
def _subphi():
    got = canonical_string(subtribracket_polynomial(load_tensor_fixture("example10"), [1]))
    return got == ref.EXAMPLE_SUBPOLYNOMIAL, f"phi({{1}}) = {got}"


# criterion 3 --------------------------------------------------------------

def _table_check(n):
    def fn():
        got = set(polynomial_spectrum(n).polynomials)
        want = set(ref.SPECTRUM_TABLE[n])
        if got == want:
            return True, f"{len(got)} polynomials match"
        missing = sorted(want - got)
        extra = sorted(got - want)
        return False, (f"{len(got)} found vs {len(want)} listed; "
                       f"missing {missing}; not listed {extra}")
    return fn


for _n in range(1, 6):
    _check(f"table-n{_n}", 3)(_table_check(_n))


@_check("enumeration-n6", 3, full_only=True)
def _n6():
    from .algebra import Tribracket, permutations, relabel

    reps = enumerate_tables(6, up_to_iso=True)
    allt = enumerate_tables(6)
    total = 0
    for r in reps:
        X = Tribracket(r.astype(np.int64))
        orbit = {relabel(X, perm).table.tobytes() for perm in permutations(6)}
        total += len(orbit)
    ok = total == len(allt)
    return ok, f"{len(allt)} structures, {len(reps)} classes, orbit sizes sum to {total}"


# criterion 4 --------------------------------------------------------------

def _count_check(tensor, diagram, want):
    def fn():
        X = tensor()
        got = count_colorings(X, _diagram(diagram))
        return got == want, f"{got} colorings (expected {want})"
    return fn


_example6 = lambda: load_tensor_fixture("example6")  # noqa: E731
_order4 = lambda: load_tensor_fixture("order4")  # noqa: E731
_order5 = lambda: load_tensor_fixture("order5")  # noqa: E731
_z18 = lambda: alexander_tribracket(18, 5, 13)  # noqa: E731
_z8 = lambda: alexander_tribracket(8, 3, 5)  # noqa: E731

_check("count-hopf", 4)(_count_check(_example6, "hopf", ref.HOPF_COUNT))
_check("count-unlink", 4)(_count_check(_example6, "unlink2", ref.UNLINK_COUNT))
_check("count-L7a3", 4)(_count_check(_order4, "L7a3", ref.L7_COUNT))
_check("count-L7a7", 4)(_count_check(_order4, "L7a7", ref.L7_COUNT))
_check("count-granny", 4)(_count_check(_z18, "granny", ref.Z18_COUNT))
_check("count-6_1", 4)(_count_check(_z18, "6_1", ref.Z18_COUNT))


# criterion 5 --------------------------------------------------------------

def _enh_check(tensor, diagram, want):
    def fn():
        got = dict(enhancement(tensor(), _diagram(diagram)).entries)
        return _multiset_detail(got, want)
    return fn


for _name, _want in ref.ENH_L7.items():
    _check(f"enh-{_name}", 5)(_enh_check(_order4, _name, _want))
for _name, _want in ref.ENH_Z18.items():
    _check(f"enh-{_name}", 5)(_enh_check(_z18, _name, _want))
for _name, _want in ref.ENH_L11.items():
    _check(f"enh-{_name}", 5)(_enh_check(_order5, _name, _want))


@_check("enh-L10n9", 5)
def _l10n9():
    X = _order5()
    got = [dict(enhancement(X, _diagram(f"L10n9_{o}")).entries) for o in "01"]
    want = list(ref.ENH_L10N9.values())
    key = lambda d: sorted(d.items())  # noqa: E731
    ok = sorted(map(key, got)) == sorted(map(key, want))
    return ok, f"orientations give {got[0]} and {got[1]}; expected the pair {want[0]} and {want[1]}"


for _name in Z8_LINKS:
    _check(f"enh-z8-{_name}", 5)(_enh_check(_z8, _name, ref.ENH_Z8[_name]))


# criterion 7 --------------------------------------------------------------

@_check("calibration", 7)
def _calibration():
    """The stored crossing rule must meet the Hopf, L7 and 6_1 counts together."""
    hopf = _diagram("hopf")
    rels = [tuple(r) for r in crossing_relations(hopf)]
    # [x,y,z] = w = [x,z,y]
    (a1, b1, c1, d1), (a2, b2, c2, d2) = rels
    shape = a1 == a2 and d1 == d2 and (b1, c1) == (c2, b2)
    counts = {
        "hopf": count_colorings(_example6(), hopf),
        "L7a3": count_colorings(_order4(), _diagram("L7a3")),
        "L7a7": count_colorings(_order4(), _diagram("L7a7")),
        "6_1": count_colorings(_z18(), _diagram("6_1")),
    }
    want = {"hopf": 9, "L7a3": 64, "L7a7": 64, "6_1": 2916}
    ok = shape and counts == want
    return ok, f"Hopf system [x,y,z]=w=[x,z,y]: {shape}; counts {counts}"


def check_ids(full: bool = True) -> list:
    return [cid for cid, _, fo, _ in _CHECKS if full or not fo]


def _selected(cid: str, only) -> bool:
    if not only:
        return True
    return any(cid == o or cid.startswith(o + "-") for o in only)


def run_checks(only=None, full: bool = False, criteria=None) -> list:
    """Run the registered checks, optionally filtered by id or id prefix."""
    if isinstance(only, str):
        only = [only]
    results = []
    for cid, crit, full_only, fn in _CHECKS:
        if full_only and not full and not (only and cid in only):
            continue
        if not _selected(cid, only):
            continue
        if criteria is not None and crit not in criteria:
            continue
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # report, do not abort the run
            ok, detail = False, f"error: {exc!r}"
        results.append(CheckResult(cid, crit, bool(ok), detail, time.perf_counter() - t0))
    return results
