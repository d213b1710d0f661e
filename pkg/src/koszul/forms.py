"""Differential forms and multivector fields on R^m with polynomial coefficients.

A homogeneous k-form is a sparse map from basis k-forms to polynomials, where
a basis k-form is a strictly increasing tuple of 0-based coordinate indices:
``(0, 2)`` stands for dx1^dx3.  Multivector fields use the same normal form
with basis k-vectors (0, 2) standing for e1^e3 (e_i the coordinate fields).

Sign conventions, pinned once and verified by the operator relation suite:

* the interior product ``contract_vector(X, a)`` is the graded derivation with
  iota_X(dx_i) = X^i;
* a decomposable bivector contracts first factor innermost:
  ``iota_{X^Y} = iota_Y . iota_X``, so iota_{e1^e2}(dx1^dx2) = 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .poly import Polynomial

Scalar = Union[int, Fraction, Polynomial]


def merge_indices(a: tuple, b: tuple) -> tuple[int, tuple]:
    """Merge two strictly increasing index tuples.

    Returns (sign, merged) where sign is the parity of the permutation that
    sorts the concatenation, or (0, ()) if an index repeats.
    """
    if not a:
        return 1, b
    if not b:
        return 1, a
    out = []
    sign = 1
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            return 0, ()
        if x < y:
            out.append(x)
            i += 1
        else:
            # moving b[j] past the remaining la - i elements of a
            if (la - i) & 1:
                sign = -sign
            out.append(y)
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return sign, tuple(out)


class _Alternating:
    """Shared guts of DifferentialForm and MultiVectorField."""

    __slots__ = ("dim", "degree", "terms")

    def __init__(self, dim: int, degree: int, terms: Mapping[tuple, Polynomial] | None = None):
        if not 0 <= degree <= dim:
            raise ValueError(f"degree {degree} out of range for dim {dim}")
        self.dim = dim
        self.degree = degree
        clean: dict[tuple, Polynomial] = {}
        if terms:
            for idx, p in terms.items():
                if len(idx) != degree:
                    raise ValueError(f"basis {idx} has wrong degree (expected {degree})")
                ok = all(0 <= u < v for u, v in zip(idx, idx[1:])) if len(idx) > 1 else True
                if not ok or (idx and not 0 <= idx[-1] < dim) or (idx and idx[0] < 0):
                    raise ValueError(f"basis {idx} is not strictly increasing in range(0, {dim})")
                if not p.is_zero():
                    clean[idx] = p
        self.terms = clean

    @classmethod
    def zero(cls, dim: int, degree: int = 0):
        return cls(dim, degree, {})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        if self.dim != other.dim:
            return False
        if not self.terms and not other.terms:
            return True  # zero is zero in every degree
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        if not self.terms:  # zero compares equal across degrees, so hash alike
            return hash((type(self).__name__, self.dim))
        return hash((type(self).__name__, self.dim, self.degree, frozenset(self.terms.items())))

    def _check(self, other):
        if type(other) is not type(self) or self.dim != other.dim:
            raise ValueError("operands live on different spaces")

    def __add__(self, other):
        self._check(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        if self.degree != other.degree:
            raise ValueError(f"cannot add degrees {self.degree} and {other.degree}")
        out = dict(self.terms)
        for idx, p in other.terms.items():
            acc = out.get(idx)
            s = p if acc is None else acc + p
            if s.is_zero():
                if acc is not None:
                    del out[idx]
            else:
                out[idx] = s
        return self._raw(self.dim, self.degree, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._raw(self.dim, self.degree, {i: -p for i, p in self.terms.items()})

    def __mul__(self, c: Scalar):
        """Multiply by a scalar or a polynomial coefficient."""
        if isinstance(c, (int, Fraction)):
            if not c:
                return self._raw(self.dim, self.degree, {})
            return self._raw(self.dim, self.degree, {i: p.scale(c) for i, p in self.terms.items()})
        out = {}
        for idx, p in self.terms.items():
            q = p * c
            if not q.is_zero():
                out[idx] = q
        return self._raw(self.dim, self.degree, out)

    __rmul__ = __mul__

    @classmethod
    def _raw(cls, dim, degree, terms):
        obj = cls.__new__(cls)
        obj.dim, obj.degree, obj.terms = dim, degree, terms
        return obj

    def wedge(self, other):
        self._check(other)
        deg = self.degree + other.degree
        if deg > self.dim:
            return self._raw(self.dim, 0, {})
        out: dict[tuple, Polynomial] = {}
        for i1, p1 in self.terms.items():
            for i2, p2 in other.terms.items():
                sign, idx = merge_indices(i1, i2)
                if sign == 0:
                    continue
                q = p1 * p2
                if sign < 0:
                    q = -q
                acc = out.get(idx)
                s = q if acc is None else acc + q
                if s.is_zero():
                    if acc is not None:
                        del out[idx]
                else:
                    out[idx] = s
        return self._raw(self.dim, deg, out)

    def sorted_terms(self) -> list[tuple[tuple, Polynomial]]:
        return sorted(self.terms.items())


class DifferentialForm(_Alternating):
    """Homogeneous differential form of fixed degree."""

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "DifferentialForm":
        return cls(p.dim, 0, {(): p} if not p.is_zero() else {})

    @classmethod
    def basis(cls, dim: int, indices: Iterable[int], coeff: Scalar = 1) -> "DifferentialForm":
        """The form c * dx_{i1}^...^dx_{ik} for strictly increasing 0-based indices."""
        idx = tuple(indices)
        p = coeff if isinstance(coeff, Polynomial) else Polynomial.constant(dim, coeff)
        return cls(dim, len(idx), {idx: p})

    def as_polynomial(self) -> Polynomial:
        if self.degree != 0 and self.terms:
            raise ValueError(f"form of degree {self.degree} is not a function")
        return self.terms.get((), Polynomial.zero(self.dim))

    def __repr__(self):
        from .grammar import render_form

        return f"DifferentialForm({self.dim}, {render_form(self)!r})"


class MultiVectorField(_Alternating):
    """Homogeneous multivector field of fixed degree."""

    @classmethod
    def basis(cls, dim: int, indices: Iterable[int], coeff: Scalar = 1) -> "MultiVectorField":
        idx = tuple(indices)
        p = coeff if isinstance(coeff, Polynomial) else Polynomial.constant(dim, coeff)
        return cls(dim, len(idx), {idx: p})

    def __repr__(self):
        from .grammar import render_multivector

        return f"MultiVectorField({self.dim}, {render_multivector(self)!r})"


def wedge(a: _Alternating, b: _Alternating):
    """Wedge product; graded-commutative and bilinear over polynomials."""
    return a.wedge(b)


def d(a: DifferentialForm) -> DifferentialForm:
    """Exterior derivative.  Satisfies the graded Leibniz rule and d.d = 0."""
    dim = a.dim
    if a.degree >= dim:
        return DifferentialForm.zero(dim, min(a.degree + 1, dim))
    out: dict[tuple, Polynomial] = {}
    for idx, p in a.terms.items():
        for i in range(dim):
            dp = p.diff(i)
            if dp.is_zero():
                continue
            sign, merged = merge_indices((i,), idx)
            if sign == 0:
                continue
            q = dp if sign > 0 else -dp
            acc = out.get(merged)
            s = q if acc is None else acc + q
            if s.is_zero():
                if acc is not None:
                    del out[merged]
            else:
                out[merged] = s
    return DifferentialForm._raw(dim, a.degree + 1, out)


def d_poly(p: Polynomial) -> DifferentialForm:
    """Differential of a function, as a 1-form."""
    return d(DifferentialForm.from_polynomial(p))


def contract_vector(X: MultiVectorField, a: DifferentialForm) -> DifferentialForm:
    """Interior product iota_X for a vector field X (degree 1).

    A graded derivation of degree -1 of the wedge product.
    """
    if X.degree != 1:
        raise ValueError(f"expected a vector field, got degree {X.degree}")
    if X.dim != a.dim:
        raise ValueError("vector field and form live on different spaces")
    if a.degree == 0:
        return DifferentialForm.zero(a.dim, 0)
    out: dict[tuple, Polynomial] = {}
    comps = {idx[0]: p for idx, p in X.terms.items()}
    for idx, p in a.terms.items():
        for pos, i in enumerate(idx):
            xi = comps.get(i)
            if xi is None:
                continue
            q = xi * p
            if pos & 1:
                q = -q
            if q.is_zero():
                continue
            rest = idx[:pos] + idx[pos + 1 :]
            acc = out.get(rest)
            s = q if acc is None else acc + q
            if s.is_zero():
                if acc is not None:
                    del out[rest]
            else:
                out[rest] = s
    return DifferentialForm._raw(a.dim, a.degree - 1, out)


def contract_bivector(pi: MultiVectorField, a: DifferentialForm) -> DifferentialForm:
    """Interior product with a bivector, in the pinned order.

    For a decomposable X^Y this equals iota_Y(iota_X(a)); in particular
    iota_{e1^e2}(dx1^dx2) = 1.  Linear over polynomial coefficients in both
    arguments.
    """
    if pi.degree != 2:
        raise ValueError(f"expected a bivector, got degree {pi.degree}")
    if pi.dim != a.dim:
        raise ValueError("bivector and form live on different spaces")
    if a.degree < 2:
        return DifferentialForm.zero(a.dim, 0)
    out: dict[tuple, Polynomial] = {}
    for (i, j), w in pi.terms.items():
        for idx, p in a.terms.items():
            if i not in idx or j not in idx:
                continue
            pos_i = idx.index(i)
            rest = idx[:pos_i] + idx[pos_i + 1 :]
            pos_j = rest.index(j)
            sign = -1 if (pos_i + pos_j) & 1 else 1
            q = w * p
            if sign < 0:
                q = -q
            if q.is_zero():
                continue
            final = rest[:pos_j] + rest[pos_j + 1 :]
            acc = out.get(final)
            s = q if acc is None else acc + q
            if s.is_zero():
                if acc is not None:
                    del out[final]
            else:
                out[final] = s
    return DifferentialForm._raw(a.dim, a.degree - 2, out)
