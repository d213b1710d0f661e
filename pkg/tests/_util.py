"""Shared helpers for the test suite: fixed-seed random inputs and oracles."""

from fractions import Fraction

from koszul import DifferentialForm, MultiVectorField, Polynomial
from koszul.randgen import random_form, random_polynomial, trial_rng

SEED = 20240718


def rng(label: str, trial: int = 0):
    return trial_rng(SEED, label, trial)


def rand_poly(label: str, trial: int, dim: int, max_degree: int = 3, terms: int = 2) -> Polynomial:
    return random_polynomial(rng(label, trial), dim, max_degree, terms)


def rand_form(label: str, trial: int, dim: int, degree: int, max_degree: int = 3) -> DifferentialForm:
    return random_form(rng(label, trial), dim, degree, max_degree)


def contraction_oracle(X: MultiVectorField, a: DifferentialForm) -> DifferentialForm:
    """Independent expansion of iota_X: alternating sum over term positions."""
    parts = DifferentialForm.zero(a.dim, max(a.degree - 1, 0))
    comps = {idx[0]: p for idx, p in X.terms.items()}
    for idx, p in a.terms.items():
        for pos in range(len(idx)):
            comp = comps.get(idx[pos])
            if comp is None:
                continue
            coeff = comp * p * (Fraction(-1) ** pos)
            term = DifferentialForm(a.dim, a.degree - 1, {idx[:pos] + idx[pos + 1 :]: coeff})
            parts = parts + term
    return parts


def solve_constant_system(matrix: list[list[Fraction]], rhs: list[Polynomial]) -> list[Polynomial]:
    """Solve A x = b for a constant invertible A over polynomial entries b
    (plain Gaussian elimination with Fraction pivots)."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    b = list(rhs)
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        b[col], b[pivot] = b[pivot], b[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        b[col] = b[col] * inv
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
                b[r] = b[r] - b[col] * factor
    return b
