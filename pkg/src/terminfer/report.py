"""Product surface: run the whole pipeline and render its results.

The report lists, for every user-defined predicate, the inferred boolean
termination condition over its argument positions, rendered in the shared
formula syntax (`*` and, `+` or, `<->` iff, `1`, `0`, variables x1..xN).
Any query whose constraint store makes the indicated arguments ground (rigid
under the term-size measure) left-terminates.  A condition of 0 means no
terminating mode was inferred.  The quality figure is the share of user
predicates with a non-zero condition.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .boolanalysis import (BoolClause, abstract_boolean, boolean_level_mapping,
                           compute_boolean_model,
                           compute_termination_conditions)
from .boolfun import BoolFun
from .budget import AnalysisParams, Diagnostic, FuelExhausted
from .builtins import BuiltinTable, default_table, load_builtin_table
from .callgraph import CallGraph, SccOrder, build_call_graph, render_sccs, scc_order
from .levelmap import (CoefficientSpace, LevelMapping, Obligation,
                       coefficient_constraints, concretize,
                       decrease_obligations)
from .nummodel import compute_numeric_model, render_numeric_model
from .parser import FrontendError, parse_program
from .sizeabs import abstract_program, render_num_clause
from .terms import PredId, Program


# ---------------------------------------------------------------------------
# Formula rendering

_ARG_INDEX = re.compile(r"^x([0-9]+)$")


def _var_key(name: str):
    m = _ARG_INDEX.match(name)
    return (0, int(m.group(1))) if m else (1, name)


def render_boolfun(f: BoolFun) -> str:
    """Shared formula syntax rendering.

    Monotone functions print as their minimal positive DNF.  Anything else
    falls back to a minimal DNF whose negative literals are written
    `(v<->0)`, which stays inside the shared grammar.
    """
    if f.is_false():
        return "0"
    if f.is_true():
        return "1"
    if f.is_monotone():
        groups = sorted((sorted(m, key=_var_key) for m in f.minimal_models()),
                        key=lambda g: (len(g), g))
        return " + ".join("*".join(g) for g in groups)
    cubes = _minimal_dnf(f)
    parts = []
    for values, care in cubes:
        lits = []
        for j, v in enumerate(f.vars):
            if not care & (1 << j):
                continue
            lits.append(v if values & (1 << j) else "(%s<->0)" % v)
        lits.sort(key=lambda s: _var_key(s.strip("()").split("<")[0]))
        parts.append("*".join(lits))
    parts.sort(key=lambda s: (s.count("*"), s))
    return " + ".join(parts)


def _minimal_dnf(f: BoolFun) -> list[tuple[int, int]]:
    """Prime-implicant cover via Quine-McCluskey (small arities only).

    Cubes are (values, care) bit pairs over f.vars positions.
    """
    n = len(f.vars)
    minterms = [i for i in range(1 << n) if (f.table >> i) & 1]
    full_care = (1 << n) - 1
    level = {(m, full_care) for m in minterms}
    primes: set[tuple[int, int]] = set()
    while level:
        merged = set()
        used = set()
        for (v1, c1) in level:
            for (v2, c2) in level:
                if c1 != c2 or v1 >= v2:
                    continue
                diff = v1 ^ v2
                if diff & (diff - 1) == 0:  # single differing cared bit
                    merged.add((v1 & ~diff, c1 & ~diff))
                    used.add((v1, c1))
                    used.add((v2, c2))
        primes |= level - used
        level = merged
    # greedy cover, deterministic
    def covers(cube, m):
        v, c = cube
        return (m & c) == (v & c)

    remaining = set(minterms)
    cover: list[tuple[int, int]] = []
    candidates = sorted(primes)
    while remaining:
        best = max(candidates,
                   key=lambda cu: (sum(1 for m in remaining if covers(cu, m)),
                                   [-cu[1], -cu[0]]))
        cover.append(best)
        remaining -= {m for m in remaining if covers(best, m)}
        candidates.remove(best)
    return cover


def lift_condition(pred: PredId, f: BoolFun) -> str:
    """Human-readable groundness sentence for an inferred condition.

    Semantics: any query `?- c, p(X1..Xn)` left-terminates if the
    instantiation in c makes the indicated argument positions ground.
    """
    if f.is_true():
        return "all calls terminate"
    if f.is_false():
        return "no terminating mode inferred"
    implicants = f.positive_implicants()
    if not implicants:
        return "no groundness-only condition (see formula)"
    phrases = []
    for s in sorted(implicants, key=lambda s: (len(s), sorted(_arg_no(v) for v in s))):
        idxs = sorted(_arg_no(v) for v in s)
        names = " and ".join("arg%d" % i for i in idxs)
        verb = "is" if len(idxs) == 1 else "are"
        phrases.append("%s %s ground" % (names, verb))
    return "terminates if " + " or ".join(phrases)


def _arg_no(var: str) -> int:
    m = _ARG_INDEX.match(var)
    return int(m.group(1)) if m else 0


# ---------------------------------------------------------------------------
# Report


@dataclass
class ReportEntry:
    pred: PredId
    condition: BoolFun
    formula: str
    sentence: str


@dataclass
class Report:
    entries: list[ReportEntry]
    quality: Fraction
    diagnostics: list[Diagnostic]

    def quality_percent(self) -> int:
        n, d = self.quality.numerator, self.quality.denominator
        return (200 * n + d) // (2 * d)  # rounded half up

    def render(self, sentences: bool = False) -> str:
        lines = []
        for e in self.entries:
            line = "%s: %s" % (e.pred, e.formula)
            if sentences:
                line += "    %% %s" % e.sentence
            lines.append(line)
        lines.append("quality: %d%%" % self.quality_percent())
        return "\n".join(lines) + "\n"


@dataclass
class SccArtifacts:
    obligations: list[Obligation]
    space: CoefficientSpace | None
    mapping: LevelMapping


@dataclass
class PipelineResult:
    program: Program
    numprog: object
    graph: CallGraph
    order: SccOrder
    numeric_model: dict
    level_mapping: LevelMapping
    scc_artifacts: dict[frozenset, SccArtifacts]
    bool_clauses: dict[PredId, list[BoolClause]]
    bool_model: dict
    bool_level: dict
    conditions: dict
    diagnostics: list[Diagnostic]
    report: Report
    elapsed: float


def synthesize_level_mappings(numprog, order: SccOrder, model,
                              params: AnalysisParams):
    """Steps 3a/3b for every SCC; failures and starvation degrade per SCC."""
    total = LevelMapping({}, set())
    artifacts: dict[frozenset, SccArtifacts] = {}
    diagnostics: list[Diagnostic] = []
    for scc in order.sccs:
        fuel_a = params.fuel_for("3a")
        try:
            obligations = decrease_obligations(scc, numprog, model, fuel_a)
            space = coefficient_constraints(obligations, scc, fuel_a)
        except FuelExhausted:
            lm = LevelMapping({}, set(scc))
            diagnostics.append(Diagnostic(
                scc, "3a", "budget exhausted; no level mapping for this component"))
            artifacts[scc] = SccArtifacts([], None, lm)
            total = total.merge(lm)
            continue
        if space.space.is_empty() and obligations:
            diagnostics.append(Diagnostic(
                scc, "3a", "no linear level mapping exists under the numeric model"))
        fuel_b = params.fuel_for("3b")
        try:
            lm = concretize(space, obligations, scc, fuel_b)
        except FuelExhausted:
            lm = LevelMapping({}, set(scc))
            diagnostics.append(Diagnostic(
                scc, "3b", "budget exhausted; no level mapping for this component"))
        artifacts[scc] = SccArtifacts(obligations, space, lm)
        total = total.merge(lm)
    return total, artifacts, diagnostics


def run_pipeline(path: str | None = None, text: str | None = None,
                 params: AnalysisParams | None = None,
                 table: BuiltinTable | None = None,
                 table_path: str | None = None) -> PipelineResult:
    """Execute the six analysis stages and assemble the report."""
    t0 = time.monotonic()
    params = params or AnalysisParams()
    if text is None:
        if path is None:
            raise ValueError("need a source path or source text")
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    base = table if table is not None else default_table()
    if table_path is not None:
        base = load_builtin_table(table_path, base)

    program = parse_program(text, base)
    numprog = abstract_program(program)
    graph = build_call_graph(program)
    order = scc_order(graph)

    numeric_model, diags = compute_numeric_model(numprog, order, params)
    level_mapping, artifacts, lm_diags = synthesize_level_mappings(
        numprog, order, numeric_model, params)
    diags += lm_diags

    bool_clauses = abstract_boolean(numprog)
    bool_model, bm_diags = compute_boolean_model(bool_clauses, order,
                                                 program.builtins, params)
    diags += bm_diags
    blm = boolean_level_mapping(level_mapping, list(program.clauses))
    conditions, tc_diags = compute_termination_conditions(
        bool_clauses, bool_model, blm, order, program.builtins, params)
    diags += tc_diags

    user_preds = sorted(program.user_predicates())
    entries = []
    nonzero = 0
    for p in user_preds:
        f = conditions[p]
        if not f.is_false():
            nonzero += 1
        entries.append(ReportEntry(p, f, render_boolfun(f), lift_condition(p, f)))
    quality = Fraction(nonzero, len(user_preds)) if user_preds else Fraction(1)
    report = Report(entries=entries, quality=quality, diagnostics=diags)

    return PipelineResult(
        program=program, numprog=numprog, graph=graph, order=order,
        numeric_model=numeric_model, level_mapping=level_mapping,
        scc_artifacts=artifacts, bool_clauses=bool_clauses,
        bool_model=bool_model, bool_level=blm, conditions=conditions,
        diagnostics=diags, report=report, elapsed=time.monotonic() - t0)


# ---------------------------------------------------------------------------
# Dump helpers (debug output for the CLI's --dump-* flags)


def dump_sections(result: PipelineResult, flags) -> str:
    out = []
    if flags.dump_sccs:
        out.append("# sccs\n" + render_sccs(result.order))
    if flags.dump_clp_n:
        lines = []
        for clauses in result.numprog.clauses.values():
            lines += [render_num_clause(c) for c in clauses]
        out.append("# size abstraction\n" + "\n".join(lines) + "\n")
    if flags.dump_num_model:
        out.append("# numeric model\n" + render_numeric_model(result.numeric_model))
    if flags.dump_level_mappings:
        from .levelmap import render_level_mapping
        out.append("# level mappings\n" + render_level_mapping(
            result.level_mapping, list(result.program.clauses)))
    if flags.dump_bool_model:
        lines = ["%s: %s" % (p, render_boolfun(result.bool_model[p]))
                 for p in sorted(result.bool_model)]
        out.append("# boolean model\n" + "\n".join(lines) + "\n")
    if flags.dump_pre:
        lines = ["%s: %s" % (p, render_boolfun(result.conditions[p]))
                 for p in sorted(result.conditions)]
        out.append("# termination conditions\n" + "\n".join(lines) + "\n")
    return "".join(out)
