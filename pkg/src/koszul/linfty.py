"""Generic machinery for families of graded multibrackets.

A bracket family packages a complex with differential l_1 and higher
multilinear brackets l_k (degree 2-k) on graded elements.  The n-th homotopy
Jacobi identity is the double sum over splittings i + j = n + 1 and
(i, n-i)-unshuffles:

    sum (-1)^(i(j+1)) sum_sigma sgn(sigma) eps(sigma; x) *
        l_j(l_i(x_sigma(1..i)), x_sigma(i+1..n))  =  0

where eps is the Koszul sign of sigma on the elements' degrees.
``linfty_residual`` evaluates the sum exactly; a family satisfies the n-th
identity on given arguments iff the residual is the zero form.

Families here are grounded: the complex sits in non-positive degrees and the
higher brackets vanish unless every argument lies in degree 0.  The evaluator
exploits that to skip structurally-zero terms, which keeps high arities cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from .forms import DifferentialForm


@dataclass(frozen=True)
class GradedElement:
    """A homogeneous form together with its degree in the complex."""

    form: DifferentialForm
    ldegree: int


@dataclass(frozen=True)
class BracketFamily:
    """An arity-indexed family of multibrackets on a fixed complex.

    ``ldegree_of``/``form_degree_of`` translate between form degree and
    complex degree (each family carries its own grading).  ``unary`` is l_1;
    ``higher(k, args)`` evaluates l_k for k >= 2 and must return the zero
    element whenever some argument is outside the ground degree.
    """

    name: str
    max_arity: int
    grounded: bool
    ground_form_degree: int
    form_degree_bounds: tuple[int, int]
    ldegree_of: Callable[[int], int]
    form_degree_of: Callable[[int], int]
    unary: Callable[[GradedElement], GradedElement]
    higher: Callable[[int, tuple[GradedElement, ...]], GradedElement]

    def element(self, form: DifferentialForm) -> GradedElement:
        lo, hi = self.form_degree_bounds
        if not form.is_zero() and not lo <= form.degree <= hi:
            raise ValueError(
                f"form degree {form.degree} outside the {self.name} complex [{lo}, {hi}]"
            )
        return GradedElement(form, self.ldegree_of(form.degree))

    def zero_element(self, ldegree: int, dim: int) -> GradedElement:
        deg = self.form_degree_of(ldegree)
        if not 0 <= deg <= dim:
            deg = 0
        return GradedElement(DifferentialForm.zero(dim, deg), ldegree)

    def l(self, k: int, args: Sequence[GradedElement]) -> GradedElement:
        if k != len(args):
            raise ValueError(f"arity {k} with {len(args)} arguments")
        if k == 1:
            return self.unary(args[0])
        return self.higher(k, tuple(args))


def unshuffles(i: int, j: int) -> list[tuple[int, ...]]:
    """All (i, j)-unshuffles of range(i + j), as position -> index tuples.

    A permutation sigma qualifies iff it is increasing on the first i and on
    the last j positions; there are binomial(i + j, i) of them.
    """
    if i < 0 or j < 0:
        raise ValueError("block sizes must be non-negative")
    n = i + j
    everything = range(n)
    out = []
    for head in combinations(everything, i):
        head_set = set(head)
        tail = tuple(x for x in everything if x not in head_set)
        out.append(head + tail)
    return out


def permutation_sign(sigma: Sequence[int]) -> int:
    """Parity of a permutation given as a sequence of images."""
    sign = 1
    n = len(sigma)
    for a in range(n):
        for b in range(a + 1, n):
            if sigma[a] > sigma[b]:
                sign = -sign
    return sign


def koszul_sign(sigma: Sequence[int], degrees: Sequence[int]) -> int:
    """Koszul sign of sigma acting on elements with the given degrees.

    Each inversion of sigma contributes (-1)^(d1*d2) for the degrees of the
    two elements it transposes; even-degree elements never produce signs.
    """
    if len(sigma) != len(degrees):
        raise ValueError("permutation and degree list have different lengths")
    sign = 1
    n = len(sigma)
    for a in range(n):
        for b in range(a + 1, n):
            if sigma[a] > sigma[b] and (degrees[sigma[a]] & 1) and (degrees[sigma[b]] & 1):
                sign = -sign
    return sign


def linfty_residual(family: BracketFamily, args: Sequence[GradedElement]) -> GradedElement:
    """Evaluate the n-th homotopy Jacobi identity on the given arguments.

    Returns the exact residual; the identity holds on these arguments iff the
    residual form is zero.  The residual is homogeneous of complex degree
    sum(|x_i|) + 3 - n.
    """
    n = len(args)
    if n < 1:
        raise ValueError("need at least one argument")
    dim = args[0].form.dim
    degrees = [x.ldegree for x in args]
    target_ldeg = sum(degrees) + 3 - n

    total: DifferentialForm | None = None
    ground = family.ground_form_degree
    for i in range(1, n + 1):
        j = n + 1 - i
        prefactor = -1 if (i * (j + 1)) & 1 else 1
        for sigma in unshuffles(i, n - i):
            inner_args = [args[s] for s in sigma[:i]]
            outer_tail = [args[s] for s in sigma[i:]]
            if family.grounded:
                # structurally-zero terms: higher brackets need all-ground inputs
                if i >= 2 and any(x.form.degree != ground for x in inner_args):
                    continue
                if j >= 2 and any(x.form.degree != ground for x in outer_tail):
                    continue
            inner = family.l(i, inner_args)
            if inner.form.is_zero():
                continue
            outer = family.l(j, [inner] + outer_tail)
            if outer.form.is_zero():
                continue
            coeff = prefactor * permutation_sign(sigma) * koszul_sign(sigma, degrees)
            term = outer.form * coeff
            total = term if total is None else total + term
    if total is None:
        return family.zero_element(target_ldeg, dim)
    return GradedElement(total, target_ldeg)


def ce_partial(
    bracket: Callable, phi: Callable[[list], DifferentialForm], args: Sequence
) -> DifferentialForm:
    """Chevalley-Eilenberg-style coboundary of a p-ary map along a binary bracket.

    Evaluates sum over pairs a < b of (-1)^(a+b) phi(bracket(x_a, x_b), rest),
    turning a p-ary antisymmetric map into a (p+1)-ary one.  ``args`` has
    length p + 1.
    """
    items = list(args)
    total = None
    for a in range(len(items)):
        for b in range(a + 1, len(items)):
            rest = items[:a] + items[a + 1 : b] + items[b + 1 :]
            term = phi([bracket(items[a], items[b])] + rest)
            if (a + b) & 1:  # 0-based (a+b) has the parity of 1-based (a+1)+(b+1)
                term = -term
            total = term if total is None else total + term
    if total is None:
        raise ValueError("need at least two arguments")
    return total
