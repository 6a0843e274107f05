"""Formal contexts, index sets and the derivation (Birkhoff) operators.

A context stores its incidence twice, as object rows and as attribute
columns, each a Python ``int`` used as a bitset (bit ``i`` is index ``i``).
Intent is then an AND over object rows, extent an AND over attribute columns.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import InvalidName, InvalidSet, NameCollision, UnknownName

__all__ = [
    "ObjectSet",
    "AttributeSet",
    "FormalContext",
    "new_context",
    "intent",
    "extent",
    "negate",
    "iter_bits",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _IndexSet:
    """Immutable subset of ``range(universe)`` backed by a bitmask."""

    __slots__ = ("_mask", "_universe")

    def __init__(self, mask: int = 0, universe: int = 0):
        if universe < 0:
            raise InvalidSet(f"negative universe size {universe}")
        if mask < 0 or mask >> universe:
            raise InvalidSet(f"index out of range for universe of size {universe}")
        object.__setattr__(self, "_mask", mask)
        object.__setattr__(self, "_universe", universe)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __reduce__(self):
        return (type(self), (self._mask, self._universe))

    @classmethod
    def from_indices(cls, indices: Iterable[int], universe: int):
        mask = 0
        for i in indices:
            if not 0 <= i < universe:
                raise InvalidSet(f"index {i} out of range for universe of size {universe}")
            mask |= 1 << i
        return cls(mask, universe)

    @classmethod
    def full(cls, universe: int):
        return cls((1 << universe) - 1, universe)

    @classmethod
    def empty(cls, universe: int):
        return cls(0, universe)

    @property
    def mask(self) -> int:
        return self._mask

    @property
    def universe(self) -> int:
        return self._universe

    def indices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self._mask))

    def complement(self):
        return type(self)(((1 << self._universe) - 1) & ~self._mask, self._universe)

    def isdisjoint(self, other) -> bool:
        return not self._mask & self._coerce(other)

    def __iter__(self):
        return iter_bits(self._mask)

    def __len__(self):
        return bin(self._mask).count("1")

    def __bool__(self):
        return bool(self._mask)

    def __contains__(self, index):
        return isinstance(index, int) and 0 <= index < self._universe and bool(self._mask >> index & 1)

    def _coerce(self, other) -> int:
        if type(other) is not type(self):
            raise InvalidSet(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other._universe != self._universe:
            raise InvalidSet(
                f"universe mismatch: {self._universe} vs {other._universe}"
            )
        return other._mask

    def __or__(self, other):
        return type(self)(self._mask | self._coerce(other), self._universe)

    def __and__(self, other):
        return type(self)(self._mask & self._coerce(other), self._universe)

    def __sub__(self, other):
        return type(self)(self._mask & ~self._coerce(other), self._universe)

    def __xor__(self, other):
        return type(self)(self._mask ^ self._coerce(other), self._universe)

    def __le__(self, other):
        return not self._mask & ~self._coerce(other)

    def __lt__(self, other):
        return self <= other and self._mask != other._mask

    def __ge__(self, other):
        return not self._coerce(other) & ~self._mask

    def __gt__(self, other):
        return self >= other and self._mask != other._mask

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._mask == other._mask and self._universe == other._universe

    def __hash__(self):
        return hash((type(self).__name__, self._mask, self._universe))

    def __repr__(self):
        return f"{type(self).__name__}({set(self)!r}, universe={self._universe})"


class ObjectSet(_IndexSet):
    """A set of object indices of some context."""

    __slots__ = ()


class AttributeSet(_IndexSet):
    """A set of attribute indices of some context."""

    __slots__ = ()


def _check_names(names: Sequence[str], kind: str) -> tuple[str, ...]:
    names = tuple(names)
    seen = set()
    for name in names:
        if not isinstance(name, str) or not name:
            raise InvalidName(f"{kind} names must be non-empty strings, got {name!r}")
        if "\n" in name or "\r" in name:
            raise InvalidName(f"{kind} name {name!r} contains a line break")
        if name in seen:
            raise NameCollision(f"duplicate {kind} name {name!r}")
        seen.add(name)
    return names


def _transpose(rows: Sequence[int], n_cols: int) -> tuple[int, ...]:
    cols = [0] * n_cols
    for g, row in enumerate(rows):
        bit = 1 << g
        for m in iter_bits(row):
            cols[m] |= bit
    return tuple(cols)


class FormalContext:
    """Immutable formal context: named objects, named attributes, incidence.

    ``rows[g]`` is the bitmask of attributes of object ``g`` and ``cols[m]``
    the bitmask of objects having attribute ``m``.
    """

    __slots__ = ("_objects", "_attributes", "_rows", "_cols", "_obj_index", "_attr_index")

    def __init__(self, object_names: Sequence[str], attribute_names: Sequence[str], rows: Sequence[int]):
        objects = _check_names(object_names, "object")
        attributes = _check_names(attribute_names, "attribute")
        rows = tuple(int(r) for r in rows)
        if len(rows) != len(objects):
            raise InvalidSet(f"expected {len(objects)} rows, got {len(rows)}")
        for row in rows:
            if row < 0 or row >> len(attributes):
                raise InvalidSet("row references an attribute index out of range")
        setter = object.__setattr__
        setter(self, "_objects", objects)
        setter(self, "_attributes", attributes)
        setter(self, "_rows", rows)
        setter(self, "_cols", _transpose(rows, len(attributes)))
        setter(self, "_obj_index", {n: i for i, n in enumerate(objects)})
        setter(self, "_attr_index", {n: i for i, n in enumerate(attributes)})

    def __setattr__(self, name, value):
        raise AttributeError("FormalContext is immutable")

    def __reduce__(self):
        return (type(self), (self._objects, self._attributes, self._rows))

    @classmethod
    def from_matrix(cls, object_names, attribute_names, matrix) -> "FormalContext":
        rows = []
        for line in matrix:
            row = 0
            for m, cell in enumerate(line):
                if cell:
                    row |= 1 << m
            rows.append(row)
        return cls(object_names, attribute_names, rows)

    # -- shape --------------------------------------------------------------

    @property
    def object_names(self) -> tuple[str, ...]:
        return self._objects

    @property
    def attribute_names(self) -> tuple[str, ...]:
        return self._attributes

    @property
    def n_objects(self) -> int:
        return len(self._objects)

    @property
    def n_attributes(self) -> int:
        return len(self._attributes)

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def cols(self) -> tuple[int, ...]:
        return self._cols

    @property
    def relation(self) -> tuple[tuple[bool, ...], ...]:
        """Dense boolean matrix of shape ``n_objects x n_attributes``."""
        n = self.n_attributes
        return tuple(tuple(bool(row >> m & 1) for m in range(n)) for row in self._rows)

    @property
    def size(self) -> int:
        """Number of crosses, i.e. ``|R|``."""
        return sum(bin(r).count("1") for r in self._rows)

    def has(self, g: int, m: int) -> bool:
        return bool(self._rows[g] >> m & 1)

    def crosses(self) -> list[tuple[str, str]]:
        return [
            (self._objects[g], self._attributes[m])
            for g, row in enumerate(self._rows)
            for m in iter_bits(row)
        ]

    # -- name <-> index -----------------------------------------------------

    def object_index(self, name: str) -> int:
        try:
            return self._obj_index[name]
        except KeyError:
            raise UnknownName(f"unknown object {name!r}") from None

    def attribute_index(self, name: str) -> int:
        try:
            return self._attr_index[name]
        except KeyError:
            raise UnknownName(f"unknown attribute {name!r}") from None

    def objects(self, *names: str) -> ObjectSet:
        return ObjectSet.from_indices((self.object_index(n) for n in names), self.n_objects)

    def attributes(self, *names: str) -> AttributeSet:
        return AttributeSet.from_indices((self.attribute_index(n) for n in names), self.n_attributes)

    def all_objects(self) -> ObjectSet:
        return ObjectSet.full(self.n_objects)

    def all_attributes(self) -> AttributeSet:
        return AttributeSet.full(self.n_attributes)

    def object_names_of(self, objects: ObjectSet) -> list[str]:
        self.check_objects(objects)
        return [self._objects[g] for g in objects]

    def attribute_names_of(self, attributes: AttributeSet) -> list[str]:
        self.check_attributes(attributes)
        return [self._attributes[m] for m in attributes]

    def check_objects(self, objects) -> None:
        if not isinstance(objects, ObjectSet) or objects.universe != self.n_objects:
            raise InvalidSet(f"{objects!r} is not an object set of this context")

    def check_attributes(self, attributes) -> None:
        if not isinstance(attributes, AttributeSet) or attributes.universe != self.n_attributes:
            raise InvalidSet(f"{attributes!r} is not an attribute set of this context")

    # -- derivation on raw masks (no validation) ----------------------------

    def intent_mask(self, objects: int) -> int:
        result = (1 << self.n_attributes) - 1
        rows = self._rows
        while objects and result:
            low = objects & -objects
            result &= rows[low.bit_length() - 1]
            objects ^= low
        return result

    def extent_mask(self, attributes: int) -> int:
        result = (1 << self.n_objects) - 1
        cols = self._cols
        while attributes and result:
            low = attributes & -attributes
            result &= cols[low.bit_length() - 1]
            attributes ^= low
        return result

    def intent(self, objects: ObjectSet) -> AttributeSet:
        return intent(self, objects)

    def extent(self, attributes: AttributeSet) -> ObjectSet:
        return extent(self, attributes)

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FormalContext):
            return NotImplemented
        return (
            self._objects == other._objects
            and self._attributes == other._attributes
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self._objects, self._attributes, self._rows))

    def __repr__(self):
        return (
            f"FormalContext({self.n_objects} objects, {self.n_attributes} attributes, "
            f"{self.size} crosses)"
        )


def new_context(
    object_names: Sequence[str],
    attribute_names: Sequence[str],
    crosses: Iterable[tuple[str, str]] = (),
) -> FormalContext:
    """Build a context from names and a collection of ``(object, attribute)`` pairs."""
    objects = _check_names(object_names, "object")
    attributes = _check_names(attribute_names, "attribute")
    obj_index = {n: i for i, n in enumerate(objects)}
    attr_index = {n: i for i, n in enumerate(attributes)}
    rows = [0] * len(objects)
    for g, m in crosses:
        if g not in obj_index:
            raise UnknownName(f"unknown object {g!r} in crosses")
        if m not in attr_index:
            raise UnknownName(f"unknown attribute {m!r} in crosses")
        rows[obj_index[g]] |= 1 << attr_index[m]
    return FormalContext(objects, attributes, rows)


def intent(context: FormalContext, objects: ObjectSet) -> AttributeSet:
    """Attributes shared by every object of ``objects``; all attributes for the empty set."""
    context.check_objects(objects)
    return AttributeSet(context.intent_mask(objects.mask), context.n_attributes)


def extent(context: FormalContext, attributes: AttributeSet) -> ObjectSet:
    """Objects having every attribute of ``attributes``; all objects for the empty set."""
    context.check_attributes(attributes)
    return ObjectSet(context.extent_mask(attributes.mask), context.n_objects)


def negate(context: FormalContext) -> FormalContext:
    """Same names, complemented incidence."""
    full = (1 << context.n_attributes) - 1
    return FormalContext(
        context.object_names,
        context.attribute_names,
        [full & ~row for row in context.rows],
    )
