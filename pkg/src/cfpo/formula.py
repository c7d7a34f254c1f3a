"""Formula syntax for the group language: AST, JSON form, and a static simplifier.

Variables come in three sorts: ``elem`` (a group element), ``tuple`` (a
tuple of group elements) and ``subgroup``.  ``Conj(t, phi)`` is the
conjugate of a term by an element variable.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

ELEM = "elem"
TUPLE = "tuple"
SUBGROUP = "subgroup"
SORTS = (ELEM, TUPLE, SUBGROUP)


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Conj:
    term: object
    by: Var


@dataclass(frozen=True)
class Truth:
    value: bool


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple = ()


@dataclass(frozen=True)
class Eq:
    left: object
    right: object


@dataclass(frozen=True)
class Not:
    body: object


@dataclass(frozen=True)
class And:
    parts: tuple


@dataclass(frozen=True)
class Or:
    parts: tuple


@dataclass(frozen=True)
class Implies:
    left: object
    right: object


@dataclass(frozen=True)
class Quant:
    kind: str  # "forall" | "exists"
    vars: tuple  # ((name, sort), ...)
    body: object


TRUE = Truth(True)
FALSE = Truth(False)


# --- small constructors ---------------------------------------------------------

def v(name):
    return Var(name)


def conj(term, by):
    term = Var(term) if isinstance(term, str) else term
    return Conj(term, Var(by) if isinstance(by, str) else by)


def atom(name, *args):
    return Atom(name, tuple(Var(a) if isinstance(a, str) else a for a in args))


def eq(a, b):
    return Eq(Var(a) if isinstance(a, str) else a, Var(b) if isinstance(b, str) else b)


def conj_all(*parts):
    return And(tuple(parts))


def disj_all(*parts):
    return Or(tuple(parts))


def _binder(spec, sort):
    if isinstance(spec, str):
        return tuple((n, sort) for n in spec.split())
    return tuple(spec)


def forall(spec, body, sort=TUPLE):
    return Quant("forall", _binder(spec, sort), body)


def exists(spec, body, sort=TUPLE):
    return Quant("exists", _binder(spec, sort), body)


# --- variables and substitution -----------------------------------------------

@functools.lru_cache(maxsize=None)
def term_vars(t) -> frozenset:
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, Conj):
        return term_vars(t.term) | {t.by.name}
    raise TypeError(f"not a term: {t!r}")


@functools.lru_cache(maxsize=None)
def free_vars(F) -> frozenset:
    if isinstance(F, Truth):
        return frozenset()
    if isinstance(F, Atom):
        return frozenset().union(*(term_vars(a) for a in F.args))
    if isinstance(F, Eq):
        return term_vars(F.left) | term_vars(F.right)
    if isinstance(F, Not):
        return free_vars(F.body)
    if isinstance(F, (And, Or)):
        return frozenset().union(*(free_vars(p) for p in F.parts))
    if isinstance(F, Implies):
        return free_vars(F.left) | free_vars(F.right)
    if isinstance(F, Quant):
        return free_vars(F.body) - {n for n, _ in F.vars}
    raise TypeError(f"not a formula: {F!r}")


@functools.lru_cache(maxsize=None)
def bound_vars(F) -> frozenset:
    if isinstance(F, Not):
        return bound_vars(F.body)
    if isinstance(F, (And, Or)):
        return frozenset().union(*(bound_vars(p) for p in F.parts))
    if isinstance(F, Implies):
        return bound_vars(F.left) | bound_vars(F.right)
    if isinstance(F, Quant):
        return bound_vars(F.body) | {n for n, _ in F.vars}
    return frozenset()


@functools.lru_cache(maxsize=None)
def in_equation(F, name) -> bool:
    """Does the free variable ``name`` occur inside an equation in ``F``?"""
    if isinstance(F, Eq):
        return name in term_vars(F.left) or name in term_vars(F.right)
    if isinstance(F, Not):
        return in_equation(F.body, name)
    if isinstance(F, (And, Or)):
        return any(in_equation(p, name) for p in F.parts)
    if isinstance(F, Implies):
        return in_equation(F.left, name) or in_equation(F.right, name)
    if isinstance(F, Quant):
        return name not in {n for n, _ in F.vars} and in_equation(F.body, name)
    return False


def _sub_term(t, name, new):
    if isinstance(t, Var):
        return new if t.name == name else t
    by = t.by
    if by.name == name:
        if not isinstance(new, Var):
            raise ValueError("cannot conjugate by a compound term")
        by = new
    return Conj(_sub_term(t.term, name, new), by)


def substitute(F, name, new):
    """Replace free occurrences of variable ``name`` by the term ``new``."""
    if isinstance(F, Truth):
        return F
    if isinstance(F, Atom):
        return Atom(F.name, tuple(_sub_term(a, name, new) for a in F.args))
    if isinstance(F, Eq):
        return Eq(_sub_term(F.left, name, new), _sub_term(F.right, name, new))
    if isinstance(F, Not):
        return Not(substitute(F.body, name, new))
    if isinstance(F, And):
        return And(tuple(substitute(p, name, new) for p in F.parts))
    if isinstance(F, Or):
        return Or(tuple(substitute(p, name, new) for p in F.parts))
    if isinstance(F, Implies):
        return Implies(substitute(F.left, name, new), substitute(F.right, name, new))
    if isinstance(F, Quant):
        if name in {n for n, _ in F.vars}:
            return F
        return Quant(F.kind, F.vars, substitute(F.body, name, new))
    raise TypeError(f"not a formula: {F!r}")


# --- simplification -------------------------------------------------------------

_DNF_CAP = 64


def _dnf(F):
    """Disjunctive normal form as a list of literal lists, or None if too large."""
    if isinstance(F, And):
        out = [[]]
        for p in F.parts:
            d = _dnf(p)
            if d is None:
                return None
            out = [a + b for a in out for b in d]
            if len(out) > _DNF_CAP:
                return None
        return out
    if isinstance(F, Or):
        out = []
        for p in F.parts:
            d = _dnf(p)
            if d is None:
                return None
            out.extend(d)
        return out if len(out) <= _DNF_CAP else None
    return [[F]]


def _mentions_eq_on(F, names) -> bool:
    return any(in_equation(F, n) for n in names)


def _eliminate(lits, rest, binders):
    """Apply the one-point rule to ``lits`` (a conjunction) for block variables."""
    binders = list(binders)
    lits = list(lits)
    changed = True
    while changed:
        changed = False
        sorts = dict(binders)
        for i, lit in enumerate(lits):
            if not isinstance(lit, Eq):
                continue
            for var_side, other in ((lit.left, lit.right), (lit.right, lit.left)):
                if not isinstance(var_side, Var) or var_side.name not in sorts:
                    continue
                x = var_side.name
                if sorts[x] == SUBGROUP or x in term_vars(other):
                    continue
                if sorts[x] == ELEM and not isinstance(other, Var):
                    continue
                others = lits[:i] + lits[i + 1:]
                captured = term_vars(other) & (bound_vars(rest) | frozenset().union(*(bound_vars(o) for o in others)))
                if captured:
                    continue
                lits = [substitute(o, x, other) for o in others]
                rest = substitute(rest, x, other)
                binders = [(n, s) for n, s in binders if n != x]
                changed = True
                break
            if changed:
                break
    return lits, rest, tuple(binders)


def _conjoin(parts):
    parts = tuple(parts)
    if not parts:
        return TRUE
    return parts[0] if len(parts) == 1 else And(parts)


def _one_point(F: Quant):
    names = [n for n, _ in F.vars]
    if F.kind == "forall" and isinstance(F.body, Implies):
        if not _mentions_eq_on(F.body.left, names):
            return F
        d = _dnf(F.body.left)
        if d is None:
            return F
        out = []
        for lits in d:
            lits2, cons, binders = _eliminate(lits, F.body.right, F.vars)
            body = Implies(_conjoin(lits2), cons)
            out.append(simplify(Quant("forall", binders, body)) if binders else simplify(body))
        return simplify(And(tuple(out)))
    if F.kind == "exists":
        if not _mentions_eq_on(F.body, names):
            return F
        d = _dnf(F.body)
        if d is None:
            return F
        out = []
        for lits in d:
            lits2, _, binders = _eliminate(lits, TRUE, F.vars)
            body = _conjoin(lits2)
            out.append(simplify(Quant("exists", binders, body)) if binders else simplify(body))
        return simplify(Or(tuple(out)))
    return F


@functools.lru_cache(maxsize=None)
def simplify(F):
    """Exact rewrites: constant folding, ``t = t``, the one-point rule, unused binders."""
    if isinstance(F, (Truth, Atom)):
        return F
    if isinstance(F, Eq):
        return TRUE if F.left == F.right else F
    if isinstance(F, Not):
        b = simplify(F.body)
        if isinstance(b, Truth):
            return Truth(not b.value)
        if isinstance(b, Not):
            return b.body
        return Not(b)
    if isinstance(F, (And, Or)):
        unit, zero = (TRUE, FALSE) if isinstance(F, And) else (FALSE, TRUE)
        parts = []
        for p in F.parts:
            p = simplify(p)
            if p == zero:
                return zero
            if p == unit:
                continue
            if type(p) is type(F):
                parts.extend(p.parts)
            elif p not in parts:
                parts.append(p)
        if not parts:
            return unit
        return parts[0] if len(parts) == 1 else type(F)(tuple(parts))
    if isinstance(F, Implies):
        a, b = simplify(F.left), simplify(F.right)
        if a == TRUE:
            return b
        if a == FALSE or b == TRUE:
            return TRUE
        if b == FALSE:
            return simplify(Not(a))
        return Implies(a, b)
    if isinstance(F, Quant):
        body = simplify(F.body)
        fv = free_vars(body)
        # element and tuple domains are never empty, so unused binders can go
        binders = tuple((n, s) for n, s in F.vars if n in fv or s == SUBGROUP)
        if not binders:
            return body
        if isinstance(body, Truth) and all(s != SUBGROUP for _, s in binders):
            return body
        return _one_point(Quant(F.kind, binders, body))
    raise TypeError(f"not a formula: {F!r}")


# --- JSON --------------------------------------------------------------------------

def term_to_json(t):
    if isinstance(t, Var):
        return t.name
    return {"conj": [term_to_json(t.term), t.by.name]}


def term_from_json(d):
    if isinstance(d, str):
        return Var(d)
    if isinstance(d, dict) and "conj" in d:
        t, by = d["conj"]
        return Conj(term_from_json(t), Var(by))
    raise ValueError(f"bad term: {d!r}")


def to_json(F):
    if isinstance(F, Truth):
        return F.value
    if isinstance(F, Atom):
        return {"atom": F.name, "args": [term_to_json(a) for a in F.args]}
    if isinstance(F, Eq):
        return {"eq": [term_to_json(F.left), term_to_json(F.right)]}
    if isinstance(F, Not):
        return {"not": to_json(F.body)}
    if isinstance(F, And):
        return {"and": [to_json(p) for p in F.parts]}
    if isinstance(F, Or):
        return {"or": [to_json(p) for p in F.parts]}
    if isinstance(F, Implies):
        return {"implies": [to_json(F.left), to_json(F.right)]}
    if isinstance(F, Quant):
        return {F.kind: [[n, s] for n, s in F.vars], "body": to_json(F.body)}
    raise TypeError(f"not a formula: {F!r}")


def from_json(d):
    if isinstance(d, bool):
        return Truth(d)
    if not isinstance(d, dict):
        raise ValueError(f"bad formula: {d!r}")
    if "atom" in d:
        return Atom(d["atom"], tuple(term_from_json(a) for a in d.get("args", [])))
    if "eq" in d:
        a, b = d["eq"]
        return Eq(term_from_json(a), term_from_json(b))
    if "not" in d:
        return Not(from_json(d["not"]))
    if "and" in d:
        return And(tuple(from_json(p) for p in d["and"]))
    if "or" in d:
        return Or(tuple(from_json(p) for p in d["or"]))
    if "implies" in d:
        a, b = d["implies"]
        return Implies(from_json(a), from_json(b))
    for kind in ("forall", "exists"):
        if kind in d:
            binders = []
            for item in d[kind]:
                name, sort = (item, TUPLE) if isinstance(item, str) else item
                if sort not in SORTS:
                    raise ValueError(f"unknown sort {sort!r}")
                binders.append((name, sort))
            return Quant(kind, tuple(binders), from_json(d["body"]))
    raise ValueError(f"bad formula: {d!r}")


def pretty(F) -> str:
    def t(x):
        return x.name if isinstance(x, Var) else f"{t(x.term)}^{x.by.name}"

    if isinstance(F, Truth):
        return "T" if F.value else "F"
    if isinstance(F, Atom):
        return f"{F.name}({', '.join(t(a) for a in F.args)})"
    if isinstance(F, Eq):
        return f"{t(F.left)} = {t(F.right)}"
    if isinstance(F, Not):
        return f"~{pretty(F.body)}"
    if isinstance(F, And):
        return "(" + " & ".join(pretty(p) for p in F.parts) + ")"
    if isinstance(F, Or):
        return "(" + " | ".join(pretty(p) for p in F.parts) + ")"
    if isinstance(F, Implies):
        return f"({pretty(F.left)} -> {pretty(F.right)})"
    if isinstance(F, Quant):
        q = "A" if F.kind == "forall" else "E"
        names = " ".join(f"{n}:{s}" for n, s in F.vars)
        return f"{q} {names}. {pretty(F.body)}"
    raise TypeError(f"not a formula: {F!r}")


# --- the named formulas ----------------------------------------------------------

def _N(x):
    return Not(x)


def _library():
    lib = {}
    A = atom

    lib["MeetsX"] = ((("f", TUPLE),), conj_all(
        A("Indec", "f"),
        exists("g", conj_all(
            _N(A("Disj", "f", "g")),
            _N(A("SamePD", "f", "g")),
            _N(A("Sqsubset", "f", "g")),
            _N(A("Sqsubset", "g", "f")),
        )),
    ))

    lib["RepPointDec"] = ((("f0", TUPLE), ("f1", TUPLE)), conj_all(
        A("Disj", "f0", "f1"),
        A("MeetsX", "f0"),
        A("MeetsX", "f1"),
        forall("g", exists("h", Implies(
            conj_all(A("MeetsX", "g"), A("MeetsX", "h")),
            _N(conj_all(A("Disj", "g", "h"), disj_all(A("SamePD", "f0", "h"), A("SamePD", "f1", "h")))),
        ))),
    ))

    lib["FunctionPart"] = ((("phi", ELEM),), forall("f0 f1 g0 g1", Implies(
        conj_all(
            A("RepPointDec", "f0", "f1"),
            A("RepPointDec", "g0", "g1"),
            disj_all(
                conj_all(eq(conj("f0", "phi"), "g0"), eq(conj("f1", "phi"), "g1")),
                conj_all(eq(conj("f1", "phi"), "g0"), eq(conj("f0", "phi"), "g1")),
            ),
        ),
        A("EquivRepPointDec", "f0", "f1", "g0", "g1"),
    )))

    lib["AboveWitness"] = ((("phi", ELEM), ("f0", TUPLE), ("f1", TUPLE)), forall("g0 g1", Implies(
        A("EquivRepPointDec", "g0", "g1", conj("g0", "phi"), conj("g1", "phi")),
        A("EquivRepPointDec", "f0", "f1", "g0", "g1"),
    )))

    lib["BetweenWitness"] = (
        (("phi", ELEM), ("f0", TUPLE), ("f1", TUPLE), ("g0", TUPLE), ("g1", TUPLE)),
        conj_all(
            A("RelatedDec", "f0", "f1", "g0", "g1"),
            forall("h0 h1", _N(A("PathBetweenDec", "h0", "h1", "f0", "f1", "g0", "g1"))),
            forall("h0 h1", Implies(
                A("EquivRepPointDec", "h0", "h1", conj("h0", "phi"), conj("h1", "phi")),
                disj_all(
                    A("EquivRepPointDec", "f0", "f1", "h0", "h1"),
                    A("EquivRepPointDec", "g0", "g1", "h0", "h1"),
                ),
            )),
        ),
    )

    # second order; B and C in the product clause are taken distinct from A,
    # otherwise A = A.A refutes every candidate
    for mode, pts, witness in (
        ("Above", ("f0", "f1"), "AboveWitness"),
        ("Between", ("f0", "f1", "g0", "g1"), "BetweenWitness"),
    ):
        params = (("A", SUBGROUP),) + tuple((p, TUPLE) for p in pts)
        lib[f"{mode}Temp1"] = (params, conj_all(
            A("ProperFP", "A"),
            forall([("phi", ELEM)], Implies(A(witness, "phi", *pts), A("Normalizes", "phi", "A"))),
        ))
        lib[f"{mode}Temp2"] = (params, conj_all(
            A(f"{mode}Temp1", "A", *pts),
            forall([("B", SUBGROUP), ("C", SUBGROUP)], Implies(
                conj_all(
                    _N(A("SubEq", "B", "A")), _N(A("SubEq", "C", "A")),
                    A(f"{mode}Temp1", "B", *pts), A(f"{mode}Temp1", "C", *pts),
                ),
                _N(A("Prod", "B", "C", "A")),
            )),
        ))
        final = "AboveTemp3" if mode == "Above" else "Between"
        lib[final] = (params, conj_all(
            A(f"{mode}Temp2", "A", *pts),
            forall([("B", SUBGROUP)], Implies(
                conj_all(_N(A("SubEq", "B", "A")), A(f"{mode}Temp2", "B", *pts)),
                _N(exists([("phi", ELEM)], A("ConjLeq", "phi", "B", "A"))),
            )),
        ))

    lib["Above"] = ((("A", SUBGROUP), ("f0", TUPLE), ("f1", TUPLE)), conj_all(
        A("AboveTemp3", "A", "f0", "f1"),
        forall([("B", SUBGROUP), ("g0", TUPLE), ("g1", TUPLE)], Implies(
            A("Between", "B", "f0", "f1", "g0", "g1"),
            _N(A("SubLt", "A", "B")),
        )),
    ))
    return lib


LIBRARY = _library()
NAMED = ("MeetsX", "RepPointDec", "FunctionPart", "AboveWitness", "BetweenWitness", "Above", "Between")


def named(name: str):
    """``(params, body)`` of a built-in formula."""
    if name not in LIBRARY:
        raise KeyError(f"unknown named formula {name!r}")
    return LIBRARY[name]


def instantiate(name: str, *args):
    """The built-in formula applied to the given terms (an atom)."""
    params, _ = named(name)
    if len(args) != len(params):
        raise ValueError(f"{name} takes {len(params)} arguments")
    return atom(name, *args)


def _all_atoms(F, out):
    if isinstance(F, Atom):
        out.add(F.name)
    elif isinstance(F, Not):
        _all_atoms(F.body, out)
    elif isinstance(F, (And, Or)):
        for p in F.parts:
            _all_atoms(p, out)
    elif isinstance(F, Implies):
        _all_atoms(F.left, out)
        _all_atoms(F.right, out)
    elif isinstance(F, Quant):
        _all_atoms(F.body, out)
    return out


def atoms_of(F) -> set:
    return _all_atoms(F, set())
