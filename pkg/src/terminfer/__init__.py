"""Termination inference for pure logic programs.

Given a program in a Prolog-style syntax, infer for every predicate a
boolean groundness condition on its arguments that suffices for universal
left-termination.  The pipeline: size abstraction, polyhedral answer models,
linear level mappings (Farkas-based coefficient spaces, min-combined),
boolean groundness models, and a greatest-fixpoint solve of the per-clause
termination conditions.
"""

from .boolanalysis import (abstract_boolean, boolean_level_mapping,
                           compute_boolean_model,
                           compute_termination_conditions, condition_operator)
from .boolfun import BoolFun
from .budget import AnalysisParams, Diagnostic, Fuel, FuelExhausted
from .builtins import (BuiltinEntry, BuiltinTable, default_table,
                       load_builtin_table, parse_builtin_table)
from .callgraph import CallGraph, SccOrder, build_call_graph, scc_order
from .interp import InterpResult, bounded_interpreter
from .levelmap import (LevelMapping, audit_level_mapping,
                       coefficient_constraints, concretize,
                       decrease_obligations)
from .nummodel import clause_consequence, compute_numeric_model
from .parser import FrontendError, ParseError, parse_program, parse_term
from .polyhedra import LinConstraint, LinExpr, Polyhedron
from .report import (PipelineResult, Report, lift_condition, render_boolfun,
                     run_pipeline)
from .sizeabs import NumClause, NumProgram, abstract_clause, abstract_program, term_size
from .terms import Atom, Clause, Const, PredId, Program, Struct, Term, Var

__version__ = "0.1.0"
