"""The homotopy bracket tower attached to a symplectic space.

Building blocks:

* ``alt_m(s, fs)`` is the antisymmetrization of (f_1, ..., f_k) |->
  f_1 df_2 ^ ... ^ df_k, a (k-1)-form:

      (1/k) sum_i (-1)^(i+1) f_i df_1 ^ ... (df_i omitted) ... ^ df_k

* the series coefficients a(k, j) = (k-j-1)! / ((k-1)! j!), which satisfy
  (k+1) a(k,j) = k a(k+1,j) + k (j+1)^2 a(k+1,j+1) and
  a(k,j) = k (j+1) a(k+1,j+1);

* ``tilde_l(s, fs)`` = (-1)^k (sum_j a(k,j) L^j Lam^j) alt_m(s, fs), the
  function-level bracket of arity k = len(fs);

* the bracket family on the complex L_{-i} = Omega^(i+1) with l_1 = delta and
  l_k(x_1, ..., x_k) = tilde_l(delta x_1, ..., delta x_k) on 1-forms.

The defining recursion is ce_partial({.,.}, tilde_l_k) = delta . tilde_l_(k+1),
checked exactly by ``verify_chain_identity``; ``tilde_l`` keeps the operator
sum and the coefficient table separate so mutation tests can target single
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .forms import DifferentialForm, d, d_poly
from .linfty import BracketFamily, GradedElement, ce_partial
from .poly import Polynomial
from .symplectic import SymplecticSpace


def series_coefficient(k: int, j: int) -> Fraction:
    """a(k, j) on the extended domain 0 <= j <= k-1 (used by recursion checks)."""
    if k < 2 or j < 0 or j > k - 1:
        raise ValueError(f"series coefficient undefined for k={k}, j={j}")
    return Fraction(factorial(k - j - 1), factorial(k - 1) * factorial(j))


def bracket_coefficient(k: int, j: int) -> Fraction:
    """a(k, j) for the operator sum; domain k >= 2, 0 <= 2j <= k-1."""
    if k < 2 or j < 0 or 2 * j > k - 1:
        raise ValueError(f"bracket coefficient out of domain: k={k}, j={j}")
    return series_coefficient(k, j)


@dataclass(frozen=True)
class CoefficientTable:
    """Coefficient lookup with optional per-entry overrides (for mutation tests)."""

    overrides: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    def a(self, k: int, j: int) -> Fraction:
        if (k, j) in self.overrides:
            return self.overrides[(k, j)]
        return bracket_coefficient(k, j)

    @classmethod
    def perturbed(cls, k: int, j: int, delta: Fraction | int = 1) -> "CoefficientTable":
        return cls({(k, j): bracket_coefficient(k, j) + delta})


_DEFAULT_TABLE = CoefficientTable()


def alt_m(s: SymplecticSpace, fs: Sequence[Polynomial]) -> DifferentialForm:
    """Antisymmetrized (f_1, ..., f_k) |-> f_1 df_2 ^ ... ^ df_k; a (k-1)-form."""
    k = len(fs)
    if k < 1:
        raise ValueError("need at least one function")
    dim = s.dim
    if k == 1:
        return DifferentialForm.from_polynomial(fs[0])
    dfs = [d_poly(f) for f in fs]
    one = DifferentialForm.from_polynomial(Polynomial.constant(dim, 1))
    prefix = [one]
    for w in dfs[:-1]:
        prefix.append(prefix[-1].wedge(w))
    suffix = [one] * k
    for i in range(k - 2, -1, -1):
        suffix[i] = dfs[i + 1].wedge(suffix[i + 1])
    total = None
    for i in range(k):
        term = prefix[i].wedge(suffix[i]) * fs[i]
        if i & 1:
            term = -term
        total = term if total is None else total + term
    return total * Fraction(1, k)


def m_k(s: SymplecticSpace, fs: Sequence[Polynomial]) -> DifferentialForm:
    """The unsymmetrized map f_1 df_2 ^ ... ^ df_k."""
    total = DifferentialForm.from_polynomial(fs[0])
    for f in fs[1:]:
        total = total.wedge(d_poly(f))
    return total


def tilde_l(
    s: SymplecticSpace, fs: Sequence[Polynomial], table: CoefficientTable | None = None
) -> DifferentialForm:
    """Arity-k function bracket: (-1)^k (sum_j a(k,j) L^j Lam^j) alt_m."""
    k = len(fs)
    if k < 2:
        raise ValueError("defined for arity >= 2")
    table = table or _DEFAULT_TABLE
    base = alt_m(s, fs)
    total = base * table.a(k, 0)
    lam = base
    for j in range(1, (k - 1) // 2 + 1):
        lam = s.Lam(lam)
        if lam.is_zero():
            break
        term = lam
        for _ in range(j):
            term = s.L(term)
        total = total + term * table.a(k, j)
    return -total if k & 1 else total


def symplectic_family(
    s: SymplecticSpace, table: CoefficientTable | None = None
) -> BracketFamily:
    """The grounded bracket family on Omega^(2n) -> ... -> Omega^1 with l_1 = delta."""
    dim = s.dim

    def ldegree_of(form_degree: int) -> int:
        return 1 - form_degree

    def form_degree_of(ldegree: int) -> int:
        return 1 - ldegree

    def unary(x: GradedElement) -> GradedElement:
        # the complex is truncated at the 1-form layer: nothing sits above it,
        # so the differential vanishes there (delta itself would leave the complex)
        if x.ldegree >= 0:
            return GradedElement(DifferentialForm.zero(dim, 0), x.ldegree + 1)
        return GradedElement(s.delta(x.form), x.ldegree + 1)

    def higher(k: int, args: tuple[GradedElement, ...]) -> GradedElement:
        ldeg = sum(x.ldegree for x in args) + 2 - k
        if any(x.form.degree != 1 for x in args):
            deg = form_degree_of(ldeg)
            return GradedElement(DifferentialForm.zero(dim, deg if 0 <= deg <= dim else 0), ldeg)
        fs = [s.delta(x.form).as_polynomial() for x in args]
        return GradedElement(tilde_l(s, fs, table), ldeg)

    return BracketFamily(
        name=f"symplectic(n={s.n})",
        max_arity=dim + 1,
        grounded=True,
        ground_form_degree=1,
        form_degree_bounds=(1, dim),
        ldegree_of=ldegree_of,
        form_degree_of=form_degree_of,
        unary=unary,
        higher=higher,
    )


def l_bracket(s: SymplecticSpace, k: int, args: Sequence, table: CoefficientTable | None = None) -> GradedElement:
    """Evaluate the arity-k bracket; accepts forms or graded elements."""
    fam = symplectic_family(s, table)
    elems = [x if isinstance(x, GradedElement) else fam.element(x) for x in args]
    return fam.l(k, elems)


# -- identity residuals -----------------------------------------------------


def verify_chain_identity(
    s: SymplecticSpace, k: int, fs: Sequence[Polynomial], table: CoefficientTable | None = None
) -> DifferentialForm:
    """Residual of ce_partial({.,.}, tilde_l_k) - delta . tilde_l_(k+1) on k+1 functions."""
    if k < 2:
        raise ValueError("chain identity starts at arity 2")
    if len(fs) != k + 1:
        raise ValueError(f"need {k + 1} functions, got {len(fs)}")
    lhs = ce_partial(s.poisson_bracket, lambda xs: tilde_l(s, xs, table), fs)
    rhs = s.delta(tilde_l(s, fs, table))
    return lhs - rhs


def verify_alt_m_identity(s: SymplecticSpace, k: int, fs: Sequence[Polynomial]) -> DifferentialForm:
    """Residual of ce_partial({.,.}, alt_m_k) - (-delta + (1/k) d Lam) alt_m_(k+1)."""
    if k < 1:
        raise ValueError("arity must be >= 1")
    if len(fs) != k + 1:
        raise ValueError(f"need {k + 1} functions, got {len(fs)}")
    lhs = ce_partial(s.poisson_bracket, lambda xs: alt_m(s, xs), fs)
    am = alt_m(s, fs)
    rhs = -s.delta(am) + d(s.Lam(am)) * Fraction(1, k)
    return lhs - rhs


def verify_strict_morphism(s: SymplecticSpace, alpha: DifferentialForm, beta: DifferentialForm) -> Polynomial:
    """Residual of delta(l_2(alpha, beta)) = {delta alpha, delta beta}.

    Zero means delta is a strict morphism from the bracket family onto the
    Poisson algebra of functions.
    """
    f = s.delta(alpha).as_polynomial()
    g = s.delta(beta).as_polynomial()
    l2 = tilde_l(s, [f, g])
    return s.delta(l2).as_polynomial() - s.poisson_bracket(f, g)


def verify_quotient_congruence(
    s: SymplecticSpace, alpha: DifferentialForm, beta: DifferentialForm
) -> DifferentialForm:
    """Exact witness that l_2 represents the quotient bracket [delta a . d delta b].

    Residual of (delta(a) d delta(b) - l_2(a, b)) + delta((1/2) delta(a) delta(b) omega);
    the difference of the two representatives is half d(fg), which the omega
    witness exhibits as a delta-boundary.
    """
    f = s.delta(alpha).as_polynomial()
    g = s.delta(beta).as_polynomial()
    representative = d_poly(g) * f
    l2 = tilde_l(s, [f, g])
    witness = s.omega * (f * g) * Fraction(1, 2)
    return (representative - l2) + s.delta(witness)


@dataclass
class CoefficientCheck:
    """Result of checking the coefficient recursions exactly up to k_max."""

    k_max: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_coefficient_recursions(k_max: int) -> CoefficientCheck:
    """Check both downward recursions and both inductive formulas for k <= k_max."""
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    report = CoefficientCheck(k_max)

    def expect(label: str, lhs: Fraction, rhs: Fraction):
        report.checked += 1
        if lhs != rhs:
            report.failures.append(f"{label}: {lhs} != {rhs}")

    for k in range(2, k_max + 1):
        for j in range(0, (k - 1) // 2 + 1):
            a_kj = series_coefficient(k, j)
            expect(
                f"(k+1)a(k,j)=k a(k+1,j)+k(j+1)^2 a(k+1,j+1) at k={k},j={j}",
                (k + 1) * a_kj,
                k * series_coefficient(k + 1, j) + k * (j + 1) ** 2 * series_coefficient(k + 1, j + 1),
            )
            expect(
                f"a(k,j)=k(j+1)a(k+1,j+1) at k={k},j={j}",
                a_kj,
                k * (j + 1) * series_coefficient(k + 1, j + 1),
            )
            expect(
                f"a(k+1,j)=((k-j)/k)a(k,j) at k={k},j={j}",
                series_coefficient(k + 1, j),
                Fraction(k - j, k) * a_kj,
            )
            if j >= 1:
                expect(
                    f"a(k,j)=a(k,j-1)/(j(k-j)) at k={k},j={j}",
                    a_kj,
                    series_coefficient(k, j - 1) / (j * (k - j)),
                )
    return report
