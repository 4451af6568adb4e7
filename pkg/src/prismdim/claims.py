"""Audit of the claimed landmark sets and representation tables.

Claim data lives in ``data/theorem2.yaml`` as verbatim LaTeX strings.  Each
row is parsed here into affine expressions in ``xi`` and ``k``
(``n = 4k + residue``); rows that cannot be parsed into four components are
ill-formed and are reported, never repaired.

Claimed tuples have four components while the claimed landmark sets have
three.  The audit compares against the hypothesised ordered set
``(a1, a2, a3, b_m)`` and separately reports what the stated 3-set does.
"""

from __future__ import annotations

import ast
import re
from collections import Counter
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Any, Callable, NamedTuple

import yaml

from prismdim.errors import BudgetExceeded, GraphError, NotApplicable, TooSmall
from prismdim.families import EdgeVariant, parse_prism_label, prism_label, prism_petersen, prism_vertex
from prismdim.graph import DistanceMatrix, all_pairs_distances
from prismdim.resolving import is_fault_tolerant, is_resolving, representation, unresolved_pairs
from prismdim.search import Budget, min_resolving_set

MATCH = "MATCH"
MISMATCH = "MISMATCH"
ARITY_MISMATCH = "ARITY_MISMATCH"
ILL_FORMED = "ILL_FORMED"
OUT_OF_RANGE = "OUT_OF_RANGE"
VERDICTS = (MATCH, MISMATCH, ARITY_MISMATCH, ILL_FORMED, OUT_OF_RANGE)

CLAIMED_DIMENSION_STATEMENT = 3
CLAIMED_DIMENSION_CONCLUSION = 4

DEFAULT_BUDGET = Budget(max_subsets=2_000_000)

NOTES = (
    "the landmark ordering (a1, a2, a3, b_m) is a hypothesis: claimed tuples have "
    "4 components but the claimed landmark sets have 3 elements",
    "the layer each row describes is taken from its target label (a_, b_, c_); "
    "printed block headings are kept verbatim in each verdict and may disagree",
    "vertex indices are reduced mod n into 1..n; a row whose index falls outside "
    "1..n before reduction is reported OUT_OF_RANGE",
)

Expr = Callable[[int, int], int]


# -- expression parsing ------------------------------------------------------


class ParseError(ValueError):
    pass


def _latex_to_python(text: str) -> str:
    s = text.replace("\\xi", "xi").replace(" ", "")
    return re.sub(r"(\d)([A-Za-z(])", r"\1*\2", s)


def _check_node(node: ast.AST) -> None:
    if isinstance(node, ast.Expression):
        _check_node(node.body)
    elif isinstance(node, ast.BinOp) and isinstance(node.op, (ast.Add, ast.Sub, ast.Mult)):
        _check_node(node.left)
        _check_node(node.right)
    elif isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        _check_node(node.operand)
    elif isinstance(node, ast.Constant) and type(node.value) is int:
        pass
    elif isinstance(node, ast.Name) and node.id in ("xi", "k"):
        pass
    else:
        raise ParseError(f"unsupported token {ast.dump(node)}")


def parse_affine(text: str) -> Expr:
    """Compile an integer expression in ``\\xi`` and ``k`` such as ``2k+3-\\xi``."""
    src = _latex_to_python(text)
    if not src:
        raise ParseError("empty expression")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}") from exc
    _check_node(tree)
    code = compile(tree, "<claim>", "eval")
    return lambda xi, k: eval(code, {"__builtins__": {}}, {"xi": xi, "k": k})  # noqa: S307


def parse_tuple(text: str) -> tuple[Expr, ...]:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError(f"not a parenthesised tuple: {text!r}")
    parts = s[1:-1].split(",")
    if len(parts) != 4:
        raise ParseError(f"expected 4 components, found {len(parts)}")
    return tuple(parse_affine(p) for p in parts)


_RANGE_BETWEEN = re.compile(r"^(.+?)\\leq\s*\\xi\s*\\leq(.+)$")
_RANGE_EQUAL = re.compile(r"^\\xi\s*=\s*(.+)$")


def parse_range(text: str) -> tuple[Expr, Expr]:
    s = text.strip()
    m = _RANGE_BETWEEN.match(s)
    if m:
        return parse_affine(m.group(1)), parse_affine(m.group(2))
    m = _RANGE_EQUAL.match(s)
    if m:
        e = parse_affine(m.group(1))
        return e, e
    raise ParseError(f"unrecognised range {text!r}")


_TARGET = re.compile(r"^([abc])_\{2\\xi(\+1)?\}$")


# -- claim data --------------------------------------------------------------


@dataclass(frozen=True)
class ClaimEntry:
    entry_id: str
    case_id: str
    block: str
    target: str
    tuple_text: str
    range_text: str | None
    heading: str | None
    well_formed: bool
    parse_error: str | None
    layer: str
    offset: int | None
    index: int | None
    exprs: tuple[Expr, ...] | None = field(repr=False, compare=False)
    bounds: tuple[Expr, Expr] | None = field(repr=False, compare=False)

    def claimed(self, xi: int | None, k: int) -> tuple[int, ...] | None:
        if self.exprs is None:
            return None
        return tuple(e(xi, k) for e in self.exprs)


@dataclass(frozen=True)
class ClaimBlock:
    key: str
    kind: str
    n: int | None
    min_n: int | None
    landmark: str | None
    entries: tuple[ClaimEntry, ...]


@dataclass(frozen=True)
class ClaimCase:
    case_id: str
    residue: int
    stated_landmark: str
    landmark_index: Expr = field(repr=False, compare=False)
    blocks: tuple[ClaimBlock, ...] = ()

    def block_for(self, n: int) -> ClaimBlock | None:
        if n < 5 or n % 4 != self.residue:
            return None
        for b in self.blocks:
            if b.kind == "explicit" and b.n == n:
                return b
        explicit = {b.n for b in self.blocks if b.kind == "explicit"}
        for b in self.blocks:
            if b.kind == "formula" and b.min_n is not None and n >= b.min_n and n not in explicit:
                return b
        return None

    def applies(self, n: int) -> bool:
        return self.block_for(n) is not None

    @property
    def entries(self) -> tuple[ClaimEntry, ...]:
        return tuple(e for b in self.blocks for e in b.entries)


def _make_entry(case_id: str, key: str, idx: int, row: dict[str, Any]) -> ClaimEntry:
    tuple_text = row["tuple"]
    declared = row.get("well_formed", True)
    exprs: tuple[Expr, ...] | None
    try:
        exprs = parse_tuple(tuple_text)
        error = None
    except ParseError as exc:
        exprs, error = None, str(exc)
    if declared != (exprs is not None):
        raise ValueError(
            f"{case_id}/{key}/{idx}: well_formed={declared} but parser says "
            f"{'ok' if exprs is not None else error}"
        )
    if "vertex" in row:
        label = row["vertex"]
        layer, index, offset = label[0], int(label[1:]), None
        target, rng, bounds = label, None, None
    else:
        target = row["target"]
        m = _TARGET.match(target)
        if not m:
            raise ValueError(f"bad target pattern {target!r}")
        layer, index, offset = m.group(1), None, 1 if m.group(2) else 0
        rng = row["range"]
        bounds = parse_range(rng)
    return ClaimEntry(
        entry_id=f"{case_id}/{key}/{idx:02d}",
        case_id=case_id,
        block=key,
        target=target,
        tuple_text=tuple_text,
        range_text=rng,
        heading=row.get("heading"),
        well_formed=exprs is not None,
        parse_error=error,
        layer=layer,
        offset=offset,
        index=index,
        exprs=exprs,
        bounds=bounds,
    )


@lru_cache(maxsize=None)
def load_claims() -> tuple[ClaimCase, ...]:
    """Parse the claim data file and check it against its row manifest."""
    text = resources.files("prismdim").joinpath("data/theorem2.yaml").read_text()
    raw = yaml.safe_load(text)
    manifest = raw["manifest"]
    cases = []
    for c in raw["cases"]:
        cid = c["id"]
        blocks = []
        for b in c["blocks"]:
            key = f"n{b['n']}" if b["kind"] == "explicit" else "formula"
            entries = tuple(_make_entry(cid, key, i, row) for i, row in enumerate(b["rows"]))
            expected = manifest[cid][key]
            if len(entries) != expected:
                raise ValueError(f"{cid}/{key}: {len(entries)} rows, manifest says {expected}")
            blocks.append(
                ClaimBlock(key, b["kind"], b.get("n"), b.get("min_n"), b.get("landmark"), entries)
            )
        if set(manifest[cid]) != {b.key for b in blocks}:
            raise ValueError(f"{cid}: manifest blocks {sorted(manifest[cid])} do not match data")
        m = re.match(r"^b_\{(.+)\}$", c["stated_landmark"])
        if not m:
            raise ValueError(f"bad landmark formula {c['stated_landmark']!r}")
        cases.append(
            ClaimCase(cid, int(c["residue"]), c["stated_landmark"], parse_affine(m.group(1)), tuple(blocks))
        )
    return tuple(cases)


def case_for(n: int) -> ClaimCase:
    if n < 5:
        raise TooSmall("claims", n, 5)
    for case in load_claims():
        if case.applies(n):
            return case
    raise NotApplicable("any", n)  # pragma: no cover - cases partition n >= 5


def get_case(case_id: str) -> ClaimCase:
    for case in load_claims():
        if case.case_id == case_id:
            return case
    raise KeyError(case_id)


# -- landmarks and claimed tuples --------------------------------------------


def claimed_landmarks(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(stated, hypothesized)`` landmark ids for ``prism_petersen(n)``."""
    case = case_for(n)
    m = case.landmark_index(None, n // 4)
    b = prism_vertex("b", m, n)
    a1, a2, a3 = (prism_vertex("a", i, n) for i in (1, 2, 3))
    return (a1, a2, b), (a1, a2, a3, b)


def entry_vertices(entry: ClaimEntry, n: int) -> list[tuple[int | None, int, bool]]:
    """``(xi, raw index, in range)`` for each vertex the entry speaks about at ``n``."""
    if entry.index is not None:
        return [(None, entry.index, 1 <= entry.index <= n)]
    assert entry.bounds is not None and entry.offset is not None
    k = n // 4
    lo, hi = entry.bounds[0](0, k), entry.bounds[1](0, k)
    out = []
    for xi in range(lo, hi + 1):
        idx = 2 * xi + entry.offset
        out.append((xi, idx, 1 <= idx <= n))
    return out


class Claim(NamedTuple):
    values: tuple[int, ...] | None
    well_formed: bool
    entry: ClaimEntry | None
    xi: int | None


def covering_claims(case: ClaimCase, n: int, label: str) -> list[Claim]:
    block = case.block_for(n)
    if block is None:
        raise NotApplicable(case.case_id, n)
    v = parse_prism_label(label, n)
    k = n // 4
    out = []
    for entry in block.entries:
        if entry.layer != label[0]:
            continue
        for xi, idx, ok in entry_vertices(entry, n):
            if ok and prism_vertex(entry.layer, idx, n) == v:
                out.append(Claim(entry.claimed(xi, k), entry.well_formed, entry, xi))
    return out


def claimed_tuple(case: ClaimCase, n: int, label: str) -> Claim | None:
    """The first claim covering ``label`` at ``n``, or None for a coverage gap."""
    found = covering_claims(case, n, label)
    return found[0] if found else None


# -- audit -------------------------------------------------------------------


@dataclass
class EntryVerdict:
    vertex: str
    entry_id: str
    xi: int | None
    claimed: list[int] | None
    computed: list[int]
    verdict: str
    source: str
    range: str | None
    heading: str | None


@dataclass
class DiscrepancyReport:
    n: int
    edge_variant: str
    case_id: str
    block: str
    stated_landmarks: list[str]
    hypothesized_landmarks: list[str]
    set_verdicts: dict[str, Any]
    entry_verdicts: list[EntryVerdict]
    coverage: dict[str, Any]
    summary: dict[str, Any]
    notes: list[str]

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def count(self, verdict: str) -> int:
        return self.summary["counts"][verdict]


def _set_verdicts(
    dm: DistanceMatrix, n: int, stated: tuple[int, ...], hyp: tuple[int, ...],
    min_dimension: bool, budget: Budget | None, threads: int,
) -> dict[str, Any]:
    label = lambda v: prism_label(v, n)  # noqa: E731
    out: dict[str, Any] = {
        "stated_is_resolving": is_resolving(dm, stated),
        "hypothesized_is_resolving": is_resolving(dm, hyp),
        "stated_unresolved_pairs": [[label(u), label(v)] for u, v in unresolved_pairs(dm, stated)],
        "fault_tolerant_verdicts": {
            "stated": is_fault_tolerant(dm, stated),
            "hypothesized": is_fault_tolerant(dm, hyp),
        },
        "claimed_dimension_statement": CLAIMED_DIMENSION_STATEMENT,
        "claimed_dimension_conclusion": CLAIMED_DIMENSION_CONCLUSION,
        "computed_min_dimension": None,
        "min_dimension_status": "SKIPPED",
    }
    if min_dimension:
        try:
            res = min_resolving_set(dm, budget or DEFAULT_BUDGET, threads)
        except BudgetExceeded:
            out["min_dimension_status"] = BudgetExceeded.status
        else:
            out["computed_min_dimension"] = res.dimension
            out["min_dimension_witness"] = [label(v) for v in res.witness]
            out["min_dimension_status"] = "OK"
            out["computed_matches_statement"] = res.dimension == CLAIMED_DIMENSION_STATEMENT
            out["computed_matches_conclusion"] = res.dimension == CLAIMED_DIMENSION_CONCLUSION
    return out


def verify_claims(
    n: int,
    edge_variant: EdgeVariant | str = EdgeVariant.REPAIRED,
    compare_stated_arity: bool = False,
    min_dimension: bool = True,
    budget: Budget | None = None,
    threads: int = 1,
) -> DiscrepancyReport:
    """Compare every applicable claim at ``n`` with BFS distances."""
    case = case_for(n)
    block = case.block_for(n)
    assert block is not None
    variant = EdgeVariant(edge_variant)
    g = prism_petersen(n, variant)
    dm = all_pairs_distances(g)
    stated, hyp = claimed_landmarks(n)
    reference = stated if compare_stated_arity else hyp
    k = n // 4
    label = lambda v: prism_label(v, n)  # noqa: E731

    rows: list[tuple[tuple[int, int], EntryVerdict]] = []
    covered: Counter[int] = Counter()
    for order, entry in enumerate(block.entries):
        for xi, idx, in_range in entry_vertices(entry, n):
            v = prism_vertex(entry.layer, idx, n)
            computed = list(representation(dm, v, reference))
            claimed = entry.claimed(xi, k)
            if not entry.well_formed:
                verdict = ILL_FORMED
            elif not in_range:
                verdict = OUT_OF_RANGE
            elif claimed is not None and len(claimed) != len(computed):
                verdict = ARITY_MISMATCH
            else:
                verdict = MATCH if list(claimed or ()) == computed else MISMATCH
            if in_range:
                covered[v] += 1
            rows.append(
                (
                    (v, order),
                    EntryVerdict(
                        vertex=label(v) if in_range else f"{entry.layer}{idx}",
                        entry_id=entry.entry_id,
                        xi=xi,
                        claimed=list(claimed) if claimed is not None else None,
                        computed=computed,
                        verdict=verdict,
                        source=entry.tuple_text,
                        range=entry.range_text,
                        heading=entry.heading,
                    ),
                )
            )
    rows.sort(key=lambda r: r[0])
    verdicts = [ev for _, ev in rows]

    counts = Counter(ev.verdict for ev in verdicts)
    compared = sum(counts[v] for v in (MATCH, MISMATCH, ARITY_MISMATCH, OUT_OF_RANGE))
    summary = {
        "counts": {v: counts.get(v, 0) for v in VERDICTS},
        "entries": len(verdicts),
        "compared": compared,
        "match_fraction": counts[MATCH] / compared if compared else None,
    }
    uncovered = [v for v in range(3 * n) if v not in covered and v not in hyp]
    coverage = {
        "covered": len(covered),
        "landmarks": [label(v) for v in hyp],
        "uncovered": [label(v) for v in uncovered],
        "multiply_covered": [label(v) for v in sorted(covered) if covered[v] > 1],
    }
    return DiscrepancyReport(
        n=n,
        edge_variant=variant.value,
        case_id=case.case_id,
        block=block.key,
        stated_landmarks=[label(v) for v in stated],
        hypothesized_landmarks=[label(v) for v in hyp],
        set_verdicts=_set_verdicts(dm, n, stated, hyp, min_dimension, budget, threads),
        entry_verdicts=verdicts,
        coverage=coverage,
        summary=summary,
        notes=list(NOTES),
    )


@dataclass
class SweepFailure:
    n: int
    error: str

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "error": self.error}


def verify_all_claims(
    n_max: int,
    edge_variant: EdgeVariant | str = EdgeVariant.REPAIRED,
    min_dimension: bool = True,
    budget: Budget | None = None,
    threads: int = 1,
) -> list[DiscrepancyReport | SweepFailure]:
    if n_max < 5:
        raise TooSmall("claims sweep", n_max, 5)
    out: list[DiscrepancyReport | SweepFailure] = []
    for n in range(5, n_max + 1):
        try:
            out.append(
                verify_claims(n, edge_variant, min_dimension=min_dimension, budget=budget, threads=threads)
            )
        except GraphError as exc:
            out.append(SweepFailure(n, str(exc)))
    return out


def summary_table(reports: list[DiscrepancyReport | SweepFailure]) -> list[dict[str, Any]]:
    """Per-case totals over a sweep."""
    rows: dict[str, dict[str, Any]] = {}
    for case in load_claims():
        rows[case.case_id] = {"case": case.case_id, "reports": 0, "failures": 0, "uncovered": 0}
        rows[case.case_id].update({v: 0 for v in VERDICTS})
    for rep in reports:
        if isinstance(rep, SweepFailure):
            try:
                rows[case_for(rep.n).case_id]["failures"] += 1
            except GraphError:
                pass
            continue
        row = rows[rep.case_id]
        row["reports"] += 1
        row["uncovered"] += len(rep.coverage["uncovered"])
        for v in VERDICTS:
            row[v] += rep.summary["counts"][v]
    return list(rows.values())


def format_summary_table(rows: list[dict[str, Any]]) -> str:
    cols = ["case", "reports", *VERDICTS, "uncovered", "failures"]
    widths = [max(len(c), *(len(str(r[c])) for r in rows)) for c in cols]
    line = lambda vals: "  ".join(str(v).rjust(w) for v, w in zip(vals, widths))  # noqa: E731
    out = [line(cols), line("-" * w for w in widths)]
    out.extend(line(r[c] for c in cols) for r in rows)
    return "\n".join(out) + "\n"


def format_report_text(rep: DiscrepancyReport) -> str:
    sv = rep.set_verdicts
    lines = [
        f"n={rep.n} variant={rep.edge_variant} case={rep.case_id} block={rep.block}",
        f"  stated {rep.stated_landmarks}: resolving={sv['stated_is_resolving']}",
        f"  hypothesized {rep.hypothesized_landmarks}: resolving={sv['hypothesized_is_resolving']}",
        f"  computed dimension: {sv['computed_min_dimension']} ({sv['min_dimension_status']}); "
        f"claimed {sv['claimed_dimension_statement']} and {sv['claimed_dimension_conclusion']}",
        "  " + "  ".join(f"{v}={c}" for v, c in rep.summary["counts"].items()),
    ]
    for ev in rep.entry_verdicts:
        if ev.verdict != MATCH:
            lines.append(
                f"    {ev.verdict:<14} {ev.vertex:<5} xi={ev.xi} claimed={ev.claimed} "
                f"computed={ev.computed} {ev.source}"
            )
    if rep.coverage["uncovered"]:
        lines.append(f"  uncovered: {', '.join(rep.coverage['uncovered'])}")
    return "\n".join(lines) + "\n"
