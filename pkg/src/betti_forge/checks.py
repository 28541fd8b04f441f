"""Run the bundled worked examples end to end.

Each fixture directory has a ``manifest.json`` naming table files (text grid
and JSON), expected decompositions and optional closed-form cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import ferrers, gorenstein, monomial
from .decompose import check_integrality, greedy_decompose, self_dual_pairing
from .diagrams import pure_diagram, table_stats
from .errors import BettiForgeError
from .formats import (
    decomposition_from_json,
    hypergraph_from_json,
    ideal_from_json,
    load_json,
    params_from_json,
    parse_table_text,
    render_table,
    table_from_json,
)


@dataclass(frozen=True)
class CheckResult:
    fixture: str
    name: str
    ok: bool
    detail: str = ""


def default_fixture_dir() -> Path:
    return Path(str(resources.files("betti_forge") / "fixtures"))


class _Recorder:
    def __init__(self, fixture):
        self.fixture = fixture
        self.results = []

    def __call__(self, name, ok, detail=""):
        self.results.append(CheckResult(self.fixture, name, bool(ok), detail))

    def run(self, name, fn):
        """Record ``fn()`` as a check; domain errors count as failures."""
        try:
            ok, detail = fn()
        except BettiForgeError as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        self(name, ok, detail)


def check_fixture(entry: dict, root: Path) -> list[CheckResult]:
    rec = _Recorder(entry["name"])
    if "table" in entry:
        _check_table_fixture(entry, root, rec)
    if "ideal" in entry:
        _check_ideal_fixture(entry, root, rec)
    return rec.results


def _check_table_fixture(entry, root, rec):
    text = (root / entry["table"]).read_text(encoding="utf-8")
    table = parse_table_text(text)
    if "json" in entry:
        rec("text == json", table == table_from_json(load_json(root / entry["json"])))
    rec("render round trip", render_table(table) == text and parse_table_text(render_table(table)) == table)

    expected = decomposition_from_json({"terms": entry["decomposition"]})

    def greedy():
        got = greedy_decompose(table)
        return got == expected, f"got {_fmt(got)}"

    rec.run("greedy decomposition", greedy)
    rec("integral coefficients", check_integrality(expected))

    if "pure" in entry:
        rec("pure diagram entries", pure_diagram(entry["pure"]).table == table)
    if "lead_denominators" in entry:
        dens = [pure_diagram(s).value(0).denominator for s in expected.sequences]
        rec("lead denominators", dens == entry["lead_denominators"], f"got {dens}")
    if "self_dual" in entry:
        m = entry["self_dual"]["shift"]
        pairs = tuple(tuple(p) for p in entry["self_dual"]["pairs"])
        rec("duality shift", table_stats(table).duality_shift == m)
        rec.run("self-dual pairing", lambda: (self_dual_pairing(expected, m).pairs == pairs, ""))

    form = entry.get("closed_form")
    if form in ("ferrers_ideal", "ferrers_quotient"):
        F = hypergraph_from_json(load_json(root / entry["hypergraph"]))
        if form == "ferrers_ideal":
            rec("ideal Betti numbers", ferrers.ideal_betti(F) == table)
            rec("ideal closed form", ferrers.ideal_decomposition(F) == expected)
        else:
            rec("quotient Betti numbers", ferrers.quotient_betti(F) == table)
            rec("quotient closed form", ferrers.quotient_decomposition(F) == expected)
            rec("curious identity", ferrers.ferrers_identity(F) == F.d)
    elif form == "gorenstein":
        p = params_from_json(load_json(root / entry["params"]))
        rec("Gorenstein Betti numbers", gorenstein.gorenstein_betti(p) == table)
        rec("Gorenstein closed form", gorenstein.gorenstein_decomposition(p) == expected)
        if "stacked" in entry:
            st = entry["stacked"]
            rec("stacked polytope form", gorenstein.stacked_decomposition(st["c"], st["d"]) == expected)


def _check_ideal_fixture(entry, root, rec):
    I = ideal_from_json(load_json(root / entry["ideal"]))
    rec("strongly stable", monomial.is_strongly_stable(I))
    F = monomial.strongly_stable_to_ferrers(I)
    cells = {tuple(c) for c in entry["ferrers_cells"]}
    rec("Ferrers image", F.cells == cells, f"got {sorted(F.cells)}")
    rec("Betti numbers preserved", monomial.ek_betti(I) == ferrers.ideal_betti(F))


def run_checks(root=None) -> list[CheckResult]:
    root = Path(root) if root is not None else default_fixture_dir()
    manifest = load_json(root / "manifest.json")
    results = []
    for entry in manifest["fixtures"]:
        results.extend(check_fixture(entry, root))
    return results


def _fmt(d):
    return " + ".join(f"{c}*pi{s}" for c, s in d.terms)
