"""
Symbol documents

A document is a JSON file with three keys:

    {
      "schema_version": "1",
      "objects": {"phi": {"kind": "ratmat", "rows": [["1/z", "1/z"]]}, ...},
      "tasks": [{"id": "k1", "op": "kernel", "symbol": "$phi"}, ...]
    }

Scalars are exact: integers, strings such as "1/2-1/3i", or expressions
in z such as "(z-1/2)/(1-z/2)". A string "$name" refers to another
object or to the result of another task.
"""
import json
from dataclasses import dataclass, field
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import sympy
from sympy.parsing.sympy_parser import parse_expr, standard_transformations

from ..core.circle_analysis import BlaschkeProduct
from ..core.coefficients import GaussianRational, Polynomial, RationalFunction
from ..core.errors import DocumentError, DomainRejection
from ..core.innerfact import InnerFactorizer, MatrixInner
from ..core.nmod import Atom, NSpanEntry, NSpanMatrix
from ..core.polymat import RatMat
from ..core.roots import SYMBOL_Z, from_sympy

SCHEMA_VERSION = "1"

OBJECT_KINDS = ("polynomial", "rational", "blaschke", "ratmat", "atom", "nspan", "inner", "adjoint")

TASK_OPS = ("kernel", "independency", "gcd", "lcm", "inner-outer", "sstar", "cyclic",
            "audit", "preservation", "iz-check")

_LOCALS = {"z": SYMBOL_Z, "i": sympy.I, "I": sympy.I}


@dataclass
class TaskSpec:
    """One operation invocation; params keep the raw JSON fields"""

    id: str
    op: str
    params: Dict[str, Any] = field(default_factory=dict)
    depends: Tuple[str, ...] = ()


@dataclass
class SymbolDocument:
    schema_version: str
    objects: Dict[str, Any] = field(default_factory=dict)
    tasks: List[TaskSpec] = field(default_factory=list)
    source: Optional[Path] = None

    def resolve(self, name: str):
        """Declared object by name (a leading $ is accepted)"""
        key = name[1:] if isinstance(name, str) and name.startswith("$") else name
        if key not in self.objects:
            raise DocumentError(f"'{name}' is not a declared object")
        return self.objects[key]

    def tasks_for(self, ops) -> List[TaskSpec]:
        """Tasks with the given operations plus every task they depend on"""
        by_id = {t.id: t for t in self.tasks}
        wanted = {t.id for t in self.tasks if t.op in ops}
        pending = list(wanted)
        while pending:
            for dep in by_id[pending.pop()].depends:
                if dep not in wanted:
                    wanted.add(dep)
                    pending.append(dep)
        return [t for t in self.tasks if t.id in wanted]


def _references(value) -> List[str]:
    """Every $name mentioned anywhere inside a JSON value"""
    if isinstance(value, str):
        return [value[1:]] if value.startswith("$") else []
    if isinstance(value, list):
        return [name for item in value for name in _references(item)]
    if isinstance(value, dict):
        keys = [key[1:] for key in value if key.startswith("$")]
        return keys + [name for item in value.values() for name in _references(item)]
    return []


class DocumentLoader:
    """Parses and validates symbol documents"""

    def __init__(self, strict: bool = False, logger=None):
        """
        Initialize the loader

        Args:
            strict: Reject bare JSON floats instead of converting them exactly
            logger: Optional logging callable (message, level)
        """
        self.strict = strict
        self.logger = logger or self._default_logger
        self.factorizer = InnerFactorizer(logger=self._quiet)

    @staticmethod
    def _default_logger(message, level='INFO'):
        print(f"[{level}] {message}")

    @staticmethod
    def _quiet(message, level='INFO'):
        pass

    # -- entry points -------------------------------------------------------

    def load(self, path) -> SymbolDocument:
        """
        Load a document from a JSON file

        Raises:
            DocumentError: If the file is missing, not JSON or violates the schema
        """
        path = Path(path)
        if not path.exists():
            raise DocumentError(f"document {path} does not exist")
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise DocumentError(f"{path} is not valid JSON: {e}")
        document = self.parse(data)
        document.source = path
        self.logger(f"Loaded {path.name}: {len(document.objects)} objects, "
                    f"{len(document.tasks)} tasks")
        return document

    def parse(self, data) -> SymbolDocument:
        if not isinstance(data, dict):
            raise DocumentError("document root must be an object")
        unknown = set(data) - {"schema_version", "objects", "tasks", "description"}
        if unknown:
            raise DocumentError(f"unknown top-level keys: {sorted(unknown)}")
        version = str(data.get("schema_version", ""))
        if version != SCHEMA_VERSION:
            raise DocumentError(f"unsupported schema_version {version!r}, expected {SCHEMA_VERSION!r}")
        raw_objects = data.get("objects", {})
        raw_tasks = data.get("tasks", [])
        if not isinstance(raw_objects, dict):
            raise DocumentError("'objects' must map names to declarations")
        if not isinstance(raw_tasks, list):
            raise DocumentError("'tasks' must be a list")

        document = SymbolDocument(version)
        for name in self._object_order(raw_objects):
            document.objects[name] = self._build_object(name, raw_objects[name], document)
        document.tasks = self._task_order(raw_tasks, raw_objects)
        return document

    # -- ordering -----------------------------------------------------------

    @staticmethod
    def _sorted(graph: Dict[str, List[str]], what: str) -> List[str]:
        sorter = TopologicalSorter()
        for node, deps in graph.items():
            sorter.add(node, *deps)
        try:
            return list(sorter.static_order())
        except CycleError as e:
            raise DocumentError(f"cyclic {what} references: {' -> '.join(e.args[1])}")

    def _object_order(self, raw_objects) -> List[str]:
        graph = {}
        for name, spec in raw_objects.items():
            if not isinstance(spec, dict):
                raise DocumentError(f"object '{name}' must be a JSON object")
            deps = _references(spec)
            missing = [d for d in deps if d not in raw_objects]
            if missing:
                raise DocumentError(f"object '{name}' references undeclared {missing}")
            graph[name] = deps
        return self._sorted(graph, "object")

    def _task_order(self, raw_tasks, raw_objects) -> List[TaskSpec]:
        specs: Dict[str, TaskSpec] = {}
        for index, raw in enumerate(raw_tasks):
            if not isinstance(raw, dict):
                raise DocumentError(f"task #{index} must be a JSON object")
            task_id = str(raw.get("id", f"task{index + 1}"))
            op = raw.get("op")
            if op not in TASK_OPS:
                raise DocumentError(f"task '{task_id}' has unknown op {op!r}")
            if task_id in specs:
                raise DocumentError(f"duplicate task id '{task_id}'")
            if task_id in raw_objects:
                raise DocumentError(f"task id '{task_id}' shadows an object")
            params = {k: v for k, v in raw.items() if k not in ("id", "op")}
            specs[task_id] = TaskSpec(task_id, op, params)
        for spec in specs.values():
            deps = []
            for name in _references(spec.params):
                if name in specs:
                    deps.append(name)
                elif name not in raw_objects:
                    raise DocumentError(f"task '{spec.id}' references undeclared '{name}'")
            if spec.op == "audit":
                target = spec.params.get("task")
                if target not in specs:
                    raise DocumentError(f"audit task '{spec.id}' needs an existing 'task'")
                deps.append(target)
            spec.depends = tuple(dict.fromkeys(deps))
        order = self._sorted({s.id: list(s.depends) for s in specs.values()}, "task")
        position = {task_id: i for i, task_id in enumerate(specs)}
        # document order among tasks whose dependencies are met
        ordered, done = [], set()
        remaining = sorted(order, key=position.get)
        while remaining:
            for task_id in remaining:
                if all(d in done for d in specs[task_id].depends):
                    ordered.append(specs[task_id])
                    done.add(task_id)
                    remaining.remove(task_id)
                    break
        return ordered

    # -- scalars ------------------------------------------------------------

    def number(self, value, where: str) -> GaussianRational:
        if isinstance(value, bool):
            raise DocumentError(f"{where}: booleans are not numbers")
        if isinstance(value, float):
            if self.strict:
                raise DocumentError(f"{where}: bare float {value!r} rejected in strict mode")
            self.logger(f"{where}: float {value!r} read as its exact decimal value", 'WARNING')
            return GaussianRational.of(Fraction(str(value)))
        try:
            return GaussianRational.of(value)
        except (TypeError, ValueError) as e:
            raise DocumentError(f"{where}: {e}")

    def expression(self, text: str, where: str) -> RationalFunction:
        """Rational function from a sympy expression in z"""
        try:
            expr = parse_expr(text, local_dict=dict(_LOCALS), transformations=standard_transformations)
        except Exception as e:
            raise DocumentError(f"{where}: cannot parse {text!r}: {e}")
        if expr.atoms(sympy.Float):
            raise DocumentError(f"{where}: {text!r} contains inexact numbers")
        if expr.free_symbols - {SYMBOL_Z}:
            raise DocumentError(f"{where}: {text!r} uses symbols other than z")
        num, den = sympy.fraction(sympy.together(expr))
        try:
            return RationalFunction(from_sympy(num), from_sympy(den))
        except (ValueError, sympy.PolynomialError) as e:
            raise DocumentError(f"{where}: {text!r} is not rational over Q(i): {e}")
        except ZeroDivisionError:
            raise DocumentError(f"{where}: {text!r} has a zero denominator")

    def coefficients(self, values, where: str) -> Polynomial:
        if not isinstance(values, list):
            raise DocumentError(f"{where}: coefficient list expected")
        return Polynomial(tuple(self.number(v, f"{where}[{k}]") for k, v in enumerate(values)))

    def rational(self, value, where: str, document: SymbolDocument) -> RationalFunction:
        """Cell value: number, expression, $reference or {num, den}"""
        if isinstance(value, str) and value.startswith("$"):
            target = document.resolve(value)
            if isinstance(target, RationalFunction):
                return target
            if isinstance(target, Polynomial):
                return RationalFunction(target)
            if isinstance(target, BlaschkeProduct):
                return target.as_rational()
            if isinstance(target, RatMat) and target.shape == (1, 1):
                return target[0, 0]
            raise DocumentError(f"{where}: '{value}' is not a scalar function")
        if isinstance(value, str):
            try:
                return RationalFunction.constant(GaussianRational.parse(value))
            except ValueError:
                return self.expression(value, where)
        if isinstance(value, dict):
            if "expr" in value:
                return self.expression(str(value["expr"]), where)
            if "num" not in value:
                raise DocumentError(f"{where}: rational needs 'expr' or 'num'")
            num = self.coefficients(value["num"], f"{where}.num")
            den = self.coefficients(value.get("den", [1]), f"{where}.den")
            if den.is_zero:
                raise DocumentError(f"{where}: zero denominator")
            return RationalFunction(num, den)
        return RationalFunction.constant(self.number(value, where))

    def _rows(self, rows, where: str) -> List[list]:
        if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
            raise DocumentError(f"{where}: 'rows' must be a non-empty list of lists")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DocumentError(f"{where}: rows have different lengths")
        return rows

    def ratmat(self, value, where: str, document: SymbolDocument) -> RatMat:
        if isinstance(value, str) and value.startswith("$"):
            target = document.resolve(value)
            if isinstance(target, RatMat):
                return target
            if isinstance(target, MatrixInner):
                return target.mat
            return RatMat.from_rows([[self.rational(value, where, document)]])
        rows = self._rows(value, where)
        return RatMat.from_rows([[self.rational(cell, f"{where}[{i}][{j}]", document)
                                  for j, cell in enumerate(row)] for i, row in enumerate(rows)])

    def nspan_entry(self, value, where: str, document: SymbolDocument) -> NSpanEntry:
        if isinstance(value, str) and value.startswith("$"):
            target = document.resolve(value)
            if isinstance(target, Atom):
                return NSpanEntry.of(target)
        if isinstance(value, dict) and ("rational" in value or "atoms" in value or "atom_terms" in value):
            rational = self.rational(value.get("rational", 0), f"{where}.rational", document)
            terms = []
            for atom_name, coefficient in (value.get("atoms") or value.get("atom_terms") or {}).items():
                atom = document.resolve(atom_name) if atom_name.startswith("$") else Atom(atom_name)
                if not isinstance(atom, Atom):
                    raise DocumentError(f"{where}: '{atom_name}' is not an atom")
                terms.append((atom, self.rational(coefficient, f"{where}.atoms.{atom_name}", document)))
            return NSpanEntry(rational, tuple(terms))
        return NSpanEntry.of(self.rational(value, where, document))

    # -- objects ------------------------------------------------------------

    def _build_object(self, name: str, spec: dict, document: SymbolDocument):
        kind = spec.get("kind")
        where = f"objects.{name}"
        if kind not in OBJECT_KINDS:
            raise DocumentError(f"{where}: unknown kind {kind!r}")
        if kind == "polynomial":
            if "expr" in spec:
                value = self.expression(str(spec["expr"]), where)
                if not value.is_polynomial:
                    raise DocumentError(f"{where}: expression is not a polynomial")
                return value.num
            return self.coefficients(spec.get("coeffs"), f"{where}.coeffs")
        if kind == "rational":
            return self.rational({k: v for k, v in spec.items() if k != "kind"}, where, document)
        if kind == "blaschke":
            constant = self.number(spec.get("constant", 1), f"{where}.constant")
            if "zero_poly" in spec:
                return BlaschkeProduct.from_polynomial(
                    self.coefficients(spec["zero_poly"], f"{where}.zero_poly"), constant)
            zeros = []
            for k, item in enumerate(spec.get("zeros", [])):
                if isinstance(item, list):
                    if len(item) != 2 or not isinstance(item[1], int):
                        raise DocumentError(f"{where}.zeros[{k}]: expected [point, multiplicity]")
                    zeros.append((self.number(item[0], f"{where}.zeros[{k}]"), item[1]))
                else:
                    zeros.append(self.number(item, f"{where}.zeros[{k}]"))
            return BlaschkeProduct.from_zeros(zeros, constant)
        if kind == "ratmat":
            return self.ratmat(spec.get("rows"), f"{where}.rows", document)
        if kind == "atom":
            return Atom(str(spec.get("id", name)))
        if kind == "nspan":
            rows = self._rows(spec.get("rows"), f"{where}.rows")
            return NSpanMatrix.from_rows([[self.nspan_entry(cell, f"{where}.rows[{i}][{j}]", document)
                                           for j, cell in enumerate(row)] for i, row in enumerate(rows)])
        if kind == "inner":
            return self._inner(spec, where, document)
        return self._adjoint(spec, where, document)

    def _inner(self, spec: dict, where: str, document: SymbolDocument) -> MatrixInner:
        mat = self.ratmat(spec.get("matrix"), f"{where}.matrix", document)
        tags = [self.number(t, f"{where}.tags[{k}]") for k, t in enumerate(spec.get("tags", []))]
        if tags and len(tags) != mat.cols:
            raise DocumentError(f"{where}: {len(tags)} tags for {mat.cols} columns")
        theta = MatrixInner.tagged(mat, tags) if tags else MatrixInner(mat)
        certificate = self.factorizer.certify(theta)
        if not certificate:
            raise DomainRejection(f"{where} is not inner: {certificate.witness}")
        return theta

    def _adjoint(self, spec: dict, where: str, document: SymbolDocument):
        """Circle adjoint Theta* (or F*) of a declared object"""
        if not str(spec.get("of", "")).startswith("$"):
            raise DocumentError(f"{where}: adjoint needs 'of' as a $reference")
        target = document.resolve(spec["of"])
        if isinstance(target, MatrixInner):
            return target.scaled_adjoint()
        if isinstance(target, RatMat):
            return target.adjoint()
        if isinstance(target, (RationalFunction, Polynomial, BlaschkeProduct)):
            return RatMat.from_rows([[self.rational(spec["of"], where, document).adjoint()]])
        raise DocumentError(f"{where}: cannot take the adjoint of {type(target).__name__}")
