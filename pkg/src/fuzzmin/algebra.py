"""Algebras of fuzzy truth values.

An algebra bundles a linearly ordered set of degrees with the operators
tnorm (strong conjunction), snorm (disjunction), residuum (implication),
neg (negation) and the crisping projection `baaz`.  Three unit-interval
families are built in (Godel, product, Lukasiewicz), plus finite linear
lattices defined by explicit operation tables.

Degrees are exact: `fractions.Fraction` values in [0, 1] for the
unit-interval families, plain `int` chain indices (0 = bottom) for finite
lattices.  Floats are rejected everywhere; decimal text such as "0.8" is
parsed to the exact rational 4/5.  Exactness matters because downstream
partition refinement groups vertices by degree equality.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import UsageError

Degree = Union[Fraction, int]

ZERO = Fraction(0)
ONE = Fraction(1)


def _reject_float(value) -> None:
    if isinstance(value, float):
        raise UsageError(
            f"float degree {value!r} rejected: degrees must be exact "
            "(use a string like \"0.8\" or \"4/5\", or an int)"
        )


class Algebra:
    """Base class; concrete backends implement the binary operators.

    Instances are immutable and safe to share.  All operations are pure.
    """

    name = "abstract"

    @property
    def bottom(self) -> Degree:
        raise NotImplementedError

    @property
    def top(self) -> Degree:
        raise NotImplementedError

    def check(self, a: Degree) -> Degree:
        """Validate and normalize a degree, raising UsageError if foreign."""
        raise NotImplementedError

    def tnorm(self, a: Degree, b: Degree) -> Degree:
        raise NotImplementedError

    def snorm(self, a: Degree, b: Degree) -> Degree:
        raise NotImplementedError

    def residuum(self, a: Degree, b: Degree) -> Degree:
        raise NotImplementedError

    def neg(self, a: Degree) -> Degree:
        raise NotImplementedError

    def baaz(self, a: Degree) -> Degree:
        """Crisping projection: top if a is top, bottom otherwise.

        Never table-driven, even for lattice backends.
        """
        return self.top if self.check(a) == self.top else self.bottom

    def big_tnorm(self, values: Iterable[Degree]) -> Degree:
        """Fold tnorm over a finite multiset; the empty fold is top."""
        acc = self.top
        for v in values:
            acc = self.tnorm(acc, v)
        return acc

    def parse_degree(self, text) -> Degree:
        """Parse a degree from JSON-level data (string, int, or Fraction)."""
        raise NotImplementedError

    def format_degree(self, a: Degree) -> str:
        return str(self.check(a))

    def degree_from_fraction(self, frac: Fraction) -> Degree:
        """Interpret an expression-level rational constant as a degree."""
        raise NotImplementedError


class UnitIntervalAlgebra(Algebra):
    """Shared plumbing for the three families over exact rationals in [0,1]."""

    @property
    def bottom(self) -> Degree:
        return ZERO

    @property
    def top(self) -> Degree:
        return ONE

    def check(self, a: Degree) -> Degree:
        _reject_float(a)
        if isinstance(a, int):
            a = Fraction(a)
        if not isinstance(a, Fraction):
            raise UsageError(f"degree {a!r} is not a rational; wrong algebra backend?")
        if not (ZERO <= a <= ONE):
            raise UsageError(f"degree {a} outside [0, 1]")
        return a

    def parse_degree(self, text) -> Degree:
        _reject_float(text)
        if isinstance(text, (int, Fraction)):
            return self.check(text)
        try:
            value = Fraction(str(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"cannot parse degree {text!r}: {exc}") from None
        return self.check(value)

    def degree_from_fraction(self, frac: Fraction) -> Degree:
        return self.check(frac)


class GodelAlgebra(UnitIntervalAlgebra):
    name = "godel"

    def tnorm(self, a, b):
        return min(self.check(a), self.check(b))

    def snorm(self, a, b):
        return max(self.check(a), self.check(b))

    def residuum(self, a, b):
        a, b = self.check(a), self.check(b)
        return ONE if a <= b else b

    def neg(self, a):
        # residual negation: a -> 0
        return ONE if self.check(a) == ZERO else ZERO


class ProductAlgebra(UnitIntervalAlgebra):
    name = "product"

    def tnorm(self, a, b):
        return self.check(a) * self.check(b)

    def snorm(self, a, b):
        a, b = self.check(a), self.check(b)
        return a + b - a * b

    def residuum(self, a, b):
        a, b = self.check(a), self.check(b)
        return ONE if a <= b else b / a

    def neg(self, a):
        return ONE if self.check(a) == ZERO else ZERO


class LukasiewiczAlgebra(UnitIntervalAlgebra):
    name = "lukasiewicz"

    def tnorm(self, a, b):
        return max(ZERO, self.check(a) + self.check(b) - ONE)

    def snorm(self, a, b):
        return min(ONE, self.check(a) + self.check(b))

    def residuum(self, a, b):
        return min(ONE, ONE - self.check(a) + self.check(b))

    def neg(self, a):
        return ONE - self.check(a)


class FiniteLatticeAlgebra(Algebra):
    """A finite chain 0 < 1 < ... < size-1 with table-driven operators.

    The constructor validates table shape and value range only; use
    `check_axioms` to test whether the tables actually satisfy the
    algebra laws (load_lattice does this for you).
    """

    name = "lattice"

    def __init__(
        self,
        size: int,
        tnorm_table: Sequence[Sequence[int]],
        snorm_table: Sequence[Sequence[int]],
        residuum_table: Sequence[Sequence[int]],
        neg_table: Sequence[int],
        name: str = "lattice",
    ):
        if size < 2:
            raise UsageError("finite lattice needs at least two elements (0 and top)")
        self.size = size
        self.name = name
        self._tnorm = self._table2(tnorm_table, "tnorm")
        self._snorm = self._table2(snorm_table, "snorm")
        self._residuum = self._table2(residuum_table, "residuum")
        self._neg = self._table1(neg_table, "neg")

    def _entry(self, value, where: str) -> int:
        _reject_float(value)
        if not isinstance(value, int) or not 0 <= value < self.size:
            raise UsageError(f"{where} table entry {value!r} not an index in 0..{self.size - 1}")
        return value

    def _table2(self, table, label: str) -> tuple[tuple[int, ...], ...]:
        if len(table) != self.size or any(len(row) != self.size for row in table):
            raise UsageError(f"{label} table must be {self.size}x{self.size}")
        return tuple(tuple(self._entry(v, label) for v in row) for row in table)

    def _table1(self, table, label: str) -> tuple[int, ...]:
        if len(table) != self.size:
            raise UsageError(f"{label} table must have {self.size} entries")
        return tuple(self._entry(v, label) for v in table)

    @property
    def bottom(self) -> Degree:
        return 0

    @property
    def top(self) -> Degree:
        return self.size - 1

    def check(self, a: Degree) -> Degree:
        _reject_float(a)
        if isinstance(a, Fraction):
            if a.denominator != 1:
                raise UsageError(f"degree {a} is not a chain index; wrong algebra backend?")
            a = int(a)
        if not isinstance(a, int) or not 0 <= a < self.size:
            raise UsageError(f"degree {a!r} not a chain index in 0..{self.size - 1}")
        return a

    def tnorm(self, a, b):
        return self._tnorm[self.check(a)][self.check(b)]

    def snorm(self, a, b):
        return self._snorm[self.check(a)][self.check(b)]

    def residuum(self, a, b):
        return self._residuum[self.check(a)][self.check(b)]

    def neg(self, a):
        return self._neg[self.check(a)]

    def parse_degree(self, text) -> Degree:
        _reject_float(text)
        if isinstance(text, str):
            try:
                text = int(text)
            except ValueError:
                raise UsageError(
                    f"cannot parse degree {text!r}: lattice degrees are chain indices"
                ) from None
        return self.check(text)

    def degrees(self) -> range:
        return range(self.size)

    def degree_from_fraction(self, frac: Fraction) -> Degree:
        if frac.denominator != 1:
            raise UsageError(
                f"constant {frac} is not a chain index; lattice algebras take integer constants"
            )
        return self.check(int(frac))


def check_axioms(algebra: Algebra, triples: Iterable[tuple[Degree, Degree, Degree]] | None = None) -> list[str]:
    """Verify the algebra laws; returns human-readable violations (empty = valid).

    Checked laws: tnorm commutativity, associativity, identity with top,
    monotonicity of tnorm in each argument, antitonicity/monotonicity of
    the residuum, and residuum(a, b) = top exactly when a <= b.

    With no `triples`, finite lattices are checked exhaustively and the
    three analytic families pass vacuously.  Pass explicit triples to
    spot-check a family on sampled degrees.
    """
    if triples is None:
        if not isinstance(algebra, FiniteLatticeAlgebra):
            return []
        chain = list(algebra.degrees())
        triples = ((x, y, z) for x in chain for y in chain for z in chain)

    violations: list[str] = []
    seen: set[str] = set()

    def report(law: str, detail: str) -> None:
        if law not in seen:
            seen.add(law)
            violations.append(f"{law}: {detail}")

    top = algebra.top
    for x, y, z in triples:
        x, y, z = algebra.check(x), algebra.check(y), algebra.check(z)
        if algebra.tnorm(x, y) != algebra.tnorm(y, x):
            report("commutativity", f"tnorm({x},{y}) != tnorm({y},{x})")
        if algebra.tnorm(x, algebra.tnorm(y, z)) != algebra.tnorm(algebra.tnorm(x, y), z):
            report("associativity", f"grouping of tnorm({x},{y},{z}) matters")
        if algebra.tnorm(x, top) != x:
            report("identity", f"tnorm({x},top) = {algebra.tnorm(x, top)} != {x}")
        lo, hi = min(x, z), max(x, z)
        if algebra.tnorm(lo, y) > algebra.tnorm(hi, y):
            report("tnorm-monotone", f"tnorm({lo},{y}) > tnorm({hi},{y})")
        if algebra.residuum(hi, y) > algebra.residuum(lo, y):
            report("residuum-antitone-left", f"residuum({hi},{y}) > residuum({lo},{y})")
        lo, hi = min(y, z), max(y, z)
        if algebra.residuum(x, lo) > algebra.residuum(x, hi):
            report("residuum-monotone-right", f"residuum({x},{lo}) > residuum({x},{hi})")
        if (algebra.residuum(x, y) == top) != (x <= y):
            report("residuum-top", f"residuum({x},{y}) = top must hold exactly when {x} <= {y}")
    return violations


def supports_tbox_minimality(algebra: Algebra) -> bool:
    """True when residuum(top, x) = x for all x and snorm hits bottom only at (bottom, bottom).

    These two properties are what quotient minimality with respect to
    shared terminological axioms relies on.  Analytic for the built-in
    families, exhaustive for finite lattices.
    """
    if not isinstance(algebra, FiniteLatticeAlgebra):
        return True
    chain = list(algebra.degrees())
    top, bottom = algebra.top, algebra.bottom
    for x in chain:
        if algebra.residuum(top, x) != x:
            return False
    for y in chain:
        for z in chain:
            if (algebra.snorm(y, z) == bottom) != (y == bottom and z == bottom):
                return False
    return True


def load_lattice(path: str) -> FiniteLatticeAlgebra:
    """Load a finite lattice from its JSON document and verify its laws.

    Schema: {"chain": N, "tnorm": [[..]], "snorm": [[..]], "residuum": [[..]],
    "neg": [..]} with indices 0..N-1, 0 = bottom, N-1 = top.
    """
    with open(path, "r", encoding="utf-8") as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise UsageError(f"{path}: lattice document must be a JSON object")
    missing = {"chain", "tnorm", "snorm", "residuum", "neg"} - doc.keys()
    if missing:
        raise UsageError(f"{path}: lattice document missing keys {sorted(missing)}")
    algebra = FiniteLatticeAlgebra(
        doc["chain"], doc["tnorm"], doc["snorm"], doc["residuum"], doc["neg"],
        name=f"lattice:{path}",
    )
    violations = check_axioms(algebra)
    if violations:
        raise UsageError(f"{path}: lattice violates algebra laws: " + "; ".join(violations))
    return algebra


def bundled_lattice_path(name: str) -> str:
    """Filesystem path of a lattice shipped with the package (e.g. "boolean")."""
    from importlib.resources import files

    resource = files(__package__) / "data" / "lattices" / f"{name}.json"
    return str(resource)


def make_algebra(selector: str) -> Algebra:
    """Build an algebra from a CLI-style selector.

    Accepted: "godel", "product", "lukasiewicz", "lattice:PATH".
    """
    if selector == "godel":
        return GodelAlgebra()
    if selector == "product":
        return ProductAlgebra()
    if selector == "lukasiewicz":
        return LukasiewiczAlgebra()
    if selector.startswith("lattice:"):
        return load_lattice(selector[len("lattice:"):])
    raise UsageError(
        f"unknown algebra {selector!r}; expected godel|product|lukasiewicz|lattice:PATH"
    )
