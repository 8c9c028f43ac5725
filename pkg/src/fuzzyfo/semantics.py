"""Exact Tarski-style evaluation over finite-domain structures.

Domains are 0..domain_size-1; predicate values are chain ranks (finite
chains) or exact rationals (standard chain).  Quantifiers are min/max over
the domain, so all infima/suprema are attained.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Union

from .chains import FiniteChain, StandardChain
from .syntax import (
    Atom, TruthConst, Neg, StrongConj, Meet, Join, Impl, Biimpl, Forall, Exists,
    Formula, Term, Var, Const, App, Vocabulary, format_term, free_vars,
)

TruthValue = Union[int, Fraction]
Chain = Union[FiniteChain, StandardChain]


class EvalError(ValueError):
    """Uninterpreted symbol or unbound variable during evaluation."""


class BudgetExceededError(RuntimeError):
    def __init__(self, space: int, budget: int):
        super().__init__(f"search space of {space} structures exceeds budget {budget}")
        self.space = space
        self.budget = budget


DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Structure:
    """A finite-domain interpretation with total tables."""

    domain_size: int
    constants: dict[str, int] = field(default_factory=dict)
    functions: dict[str, dict[tuple[int, ...], int]] = field(default_factory=dict)
    predicates: dict[str, dict[tuple[int, ...], TruthValue]] = field(default_factory=dict)

    def describe(self) -> str:
        lines = [f"domain {self.domain_size}"]
        for c in sorted(self.constants):
            lines.append(f"const {c} = {self.constants[c]}")
        for f in sorted(self.functions):
            table = self.functions[f]
            vals = " ".join(str(table[k]) for k in sorted(table))
            lines.append(f"fun {f} : {vals}")
        for p in sorted(self.predicates):
            table = self.predicates[p]
            vals = " ".join(_format_value(table[k]) for k in sorted(table))
            lines.append(f"pred {p} : {vals}")
        return "\n".join(lines)


def _format_value(v: TruthValue) -> str:
    if isinstance(v, int):
        return f"#{v}"
    return f"{v.numerator}/{v.denominator}"


def eval_term(structure: Structure, t: Term, assignment: dict[str, int]) -> int:
    if isinstance(t, Var):
        if t.name not in assignment:
            raise EvalError(f"unbound variable {t.name}")
        return assignment[t.name]
    if isinstance(t, Const):
        if t.name not in structure.constants:
            raise EvalError(f"uninterpreted constant {t.name}")
        return structure.constants[t.name]
    if t.func not in structure.functions:
        raise EvalError(f"uninterpreted function {t.func}")
    args = tuple(eval_term(structure, a, assignment) for a in t.args)
    return structure.functions[t.func][args]


def eval(chain: Chain, structure: Structure, phi: Formula,
         assignment: Optional[dict[str, int]] = None) -> TruthValue:
    """Truth value of phi in the structure under the assignment.

    Derived connectives are expanded: ~phi = phi -> 0 and <-> is the meet of
    the two residua.
    """
    a = assignment or {}
    if isinstance(phi, Atom):
        if phi.pred not in structure.predicates:
            raise EvalError(f"uninterpreted predicate {phi.pred}")
        args = tuple(eval_term(structure, t, a) for t in phi.args)
        return structure.predicates[phi.pred][args]
    if isinstance(phi, TruthConst):
        return chain.top if phi.top else chain.bot
    if isinstance(phi, Neg):
        return chain.residuum(eval(chain, structure, phi.body, a), chain.bot)
    if isinstance(phi, StrongConj):
        return chain.tnorm(eval(chain, structure, phi.left, a), eval(chain, structure, phi.right, a))
    if isinstance(phi, Impl):
        return chain.residuum(eval(chain, structure, phi.left, a), eval(chain, structure, phi.right, a))
    if isinstance(phi, Meet):
        return chain.meet(eval(chain, structure, phi.left, a), eval(chain, structure, phi.right, a))
    if isinstance(phi, Join):
        return chain.join(eval(chain, structure, phi.left, a), eval(chain, structure, phi.right, a))
    if isinstance(phi, Biimpl):
        x = eval(chain, structure, phi.left, a)
        y = eval(chain, structure, phi.right, a)
        return chain.meet(chain.residuum(x, y), chain.residuum(y, x))
    if isinstance(phi, (Forall, Exists)):
        pick = min if isinstance(phi, Forall) else max
        values = []
        for d in range(structure.domain_size):
            inner = dict(a)
            inner[phi.var] = d
            values.append(eval(chain, structure, phi.body, inner))
        return pick(values)
    raise TypeError(f"not a formula: {phi!r}")


def eval_propositional(chain: Chain, valuation: dict[Atom, TruthValue], phi: Formula) -> TruthValue:
    """Connective-only evaluation of a quantifier-free closed formula."""
    if isinstance(phi, Atom):
        if phi not in valuation:
            raise EvalError(f"no valuation for atom {phi.pred}{phi.args}")
        return valuation[phi]
    if isinstance(phi, TruthConst):
        return chain.top if phi.top else chain.bot
    if isinstance(phi, Neg):
        return chain.residuum(eval_propositional(chain, valuation, phi.body), chain.bot)
    if isinstance(phi, StrongConj):
        return chain.tnorm(eval_propositional(chain, valuation, phi.left),
                           eval_propositional(chain, valuation, phi.right))
    if isinstance(phi, Impl):
        return chain.residuum(eval_propositional(chain, valuation, phi.left),
                              eval_propositional(chain, valuation, phi.right))
    if isinstance(phi, Meet):
        return chain.meet(eval_propositional(chain, valuation, phi.left),
                          eval_propositional(chain, valuation, phi.right))
    if isinstance(phi, Join):
        return chain.join(eval_propositional(chain, valuation, phi.left),
                          eval_propositional(chain, valuation, phi.right))
    if isinstance(phi, Biimpl):
        x = eval_propositional(chain, valuation, phi.left)
        y = eval_propositional(chain, valuation, phi.right)
        return chain.meet(chain.residuum(x, y), chain.residuum(y, x))
    raise TypeError(f"quantifier-free formula expected, got {phi!r}")


def structure_space_size(vocab: Vocabulary, chain: FiniteChain, domain_size: int) -> int:
    n = domain_size
    space = n ** len(vocab.constants)
    for f, arity in vocab.functions.items():
        space *= n ** (n ** arity)
    for p, arity in vocab.predicates.items():
        space *= chain.size ** (n ** arity)
    return space


def enumerate_structures(vocab: Vocabulary, chain: FiniteChain, domain_size: int,
                         budget: int = DEFAULT_BUDGET) -> Iterator[Structure]:
    """Every structure for the vocabulary, exactly once, deterministically.

    Order: constants (sorted by name) outermost, then function tables, then
    predicate tables, each table in row-major rank order.
    """
    space = structure_space_size(vocab, chain, domain_size)
    if space > budget:
        raise BudgetExceededError(space, budget)
    n = domain_size
    const_names = sorted(vocab.constants)
    func_names = sorted(vocab.functions)
    pred_names = sorted(vocab.predicates)

    func_keys = {f: list(itertools.product(range(n), repeat=vocab.functions[f]))
                 for f in func_names}
    pred_keys = {p: list(itertools.product(range(n), repeat=vocab.predicates[p]))
                 for p in pred_names}

    for const_vals in itertools.product(range(n), repeat=len(const_names)):
        constants = dict(zip(const_names, const_vals))
        func_tables_iter = itertools.product(
            *(itertools.product(range(n), repeat=len(func_keys[f])) for f in func_names)
        )
        for func_vals in func_tables_iter:
            functions = {
                f: dict(zip(func_keys[f], vals))
                for f, vals in zip(func_names, func_vals)
            }
            pred_tables_iter = itertools.product(
                *(itertools.product(range(chain.size), repeat=len(pred_keys[p]))
                  for p in pred_names)
            )
            for pred_vals in pred_tables_iter:
                predicates = {
                    p: dict(zip(pred_keys[p], vals))
                    for p, vals in zip(pred_names, pred_vals)
                }
                yield Structure(n, constants, functions, predicates)


# -- structure file format -----------------------------------------------

def parse_structure_file(text: str, vocab: Optional[Vocabulary] = None) -> Structure:
    """Parse `domain <n>` / `const c = <i>` / `fun f : ...` / `pred P : ...` lines.

    Function and predicate tables are row-major over the argument tuples in
    lexicographic order; predicate values are ranks `#k` or rationals `p/q`.
    """
    domain_size = None
    constants: dict[str, int] = {}
    fun_rows: dict[str, list[int]] = {}
    pred_rows: dict[str, list[TruthValue]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip() if not raw.strip().startswith("pred") else raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("domain "):
            domain_size = int(line.split()[1])
        elif line.startswith("const "):
            body = line[len("const "):]
            name, _, val = body.partition("=")
            constants[name.strip()] = int(val.strip())
        elif line.startswith("fun "):
            body = line[len("fun "):]
            name, _, vals = body.partition(":")
            fun_rows[name.strip()] = [int(v) for v in vals.split()]
        elif line.startswith("pred "):
            body = line[len("pred "):]
            name, _, vals = body.partition(":")
            pred_rows[name.strip()] = [_parse_value(v) for v in vals.split()]
        else:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}")
    if domain_size is None:
        raise ValueError("structure file must declare 'domain <n>'")
    n = domain_size

    functions = {}
    for f, vals in fun_rows.items():
        arity = _infer_arity(len(vals), n, f)
        keys = list(itertools.product(range(n), repeat=arity))
        functions[f] = dict(zip(keys, vals))
    predicates = {}
    for p, vals in pred_rows.items():
        if vocab is not None and p in vocab.predicates:
            arity = vocab.predicates[p]
            if len(vals) != n ** arity:
                raise ValueError(f"pred {p}: expected {n ** arity} values, got {len(vals)}")
        else:
            arity = _infer_arity(len(vals), n, p)
        keys = list(itertools.product(range(n), repeat=arity))
        predicates[p] = dict(zip(keys, vals))
    return Structure(n, constants, functions, predicates)


def _infer_arity(count: int, n: int, name: str) -> int:
    if n == 1:
        # every arity gives a 1-entry table over a singleton domain
        if count != 1:
            raise ValueError(f"table for {name} has {count} entries over domain size 1")
        return 1
    arity = 0
    size = 1
    while size < count:
        size *= n
        arity += 1
    if size != count:
        raise ValueError(f"table for {name} has {count} entries, not a power of domain size {n}")
    return arity


def _parse_value(tok: str) -> TruthValue:
    if tok.startswith("#"):
        return int(tok[1:])
    if "/" in tok:
        num, den = tok.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(tok))


def format_structure_file(structure: Structure) -> str:
    return structure.describe() + "\n"
