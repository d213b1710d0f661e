"""The standard symplectic structure on R^{2n} and its operator calculus.

Coordinates pair as (v1, v2), (v3, v4), ...; the symplectic form is
omega = dx1^dx2 + dx3^dx4 + ... and the inverse bivector pi = e1^e2 + e3^e4
+ ... under the contraction order pinned in ``forms``.  With these choices
the whole suite of relations holds on the nose:

    [Lam, L] = H    [H, Lam] = 2 Lam    [H, L] = -2 L
    [L, d]   = 0    [Lam, d] = delta    [H, d] = -d
    [Lam, delta] = 0    [L, delta] = d    [H, delta] = delta

together with delta^2 = 0, delta d = -d delta, and {f, g} = delta(f dg)
= omega(X_f, X_g) = iota_pi(df ^ dg), where iota_{X_f} omega = -df and
{v1, v2} = +1.  ``verify_operator_relations`` re-checks all of this on
seeded random forms and is the executable record of the convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .forms import DifferentialForm, MultiVectorField, contract_bivector, contract_vector, d
from .poly import Polynomial


class SymplecticSpace:
    """R^{2n} with the standard constant symplectic form."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("half-dimension must be >= 1")
        self.n = n
        self.dim = 2 * n
        self.omega = DifferentialForm(
            self.dim, 2, {(2 * i, 2 * i + 1): Polynomial.constant(self.dim, 1) for i in range(n)}
        )
        self.pi = MultiVectorField(
            self.dim, 2, {(2 * i, 2 * i + 1): Polynomial.constant(self.dim, 1) for i in range(n)}
        )

    def __repr__(self):
        return f"SymplecticSpace(n={self.n})"

    def coordinate(self, i: int) -> Polynomial:
        return Polynomial.coordinate(self.dim, i)

    # -- Lefschetz operators -------------------------------------------------

    def L(self, a: DifferentialForm) -> DifferentialForm:
        """Raising operator: wedge with omega."""
        return self.omega.wedge(a)

    def Lam(self, a: DifferentialForm) -> DifferentialForm:
        """Lowering operator: contraction with the inverse bivector."""
        return contract_bivector(self.pi, a)

    def H(self, a: DifferentialForm) -> DifferentialForm:
        """Degree-counting operator a |-> (n - deg a) * a."""
        return a * (self.n - a.degree)

    def delta(self, a: DifferentialForm) -> DifferentialForm:
        """Koszul differential: Lam d - d Lam.  Degree -1, squares to zero."""
        return self.Lam(d(a)) - d(self.Lam(a))

    # -- Hamiltonian mechanics -------------------------------------------------

    def hamiltonian_vector_field(self, f: Polynomial) -> MultiVectorField:
        """The unique X with iota_X omega = -df."""
        terms = {}
        for i in range(self.n):
            q, p = 2 * i, 2 * i + 1
            dq, dp = f.diff(q), f.diff(p)
            if not dp.is_zero():
                terms[(q,)] = -dp
            if not dq.is_zero():
                terms[(p,)] = dq
        return MultiVectorField(self.dim, 1, terms)

    def omega_eval(self, X: MultiVectorField, Y: MultiVectorField) -> Polynomial:
        """omega(X, Y) = iota_Y iota_X omega."""
        return contract_vector(Y, contract_vector(X, self.omega)).as_polynomial()

    def poisson_bracket(self, f: Polynomial, g: Polynomial) -> Polynomial:
        """{f, g} = omega(X_f, X_g); bilinear, antisymmetric, Jacobi."""
        out = Polynomial.zero(self.dim)
        for i in range(self.n):
            q, p = 2 * i, 2 * i + 1
            out = out + f.diff(q) * g.diff(p) - f.diff(p) * g.diff(q)
        return out


@dataclass
class OperatorReport:
    """Outcome of checking one operator relation on random forms."""

    relation: str
    trials: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)  # (input, residual)

    @property
    def ok(self) -> bool:
        return not self.failures


def operator_relations(s: SymplecticSpace) -> list[tuple[str, Callable, Callable]]:
    """The relation table as (name, lhs, rhs) pairs of operators on forms."""

    def comm(A, B):
        return lambda a: A(B(a)) - B(A(a))

    def zero(a):
        return DifferentialForm.zero(s.dim, 0)

    L, Lam, H, dl = s.L, s.Lam, s.H, s.delta
    dd = lambda a: dl(d(a))
    relations = [
        ("[Lam,L]=H", comm(Lam, L), H),
        ("[H,Lam]=2Lam", comm(H, Lam), lambda a: Lam(a) * 2),
        ("[H,L]=-2L", comm(H, L), lambda a: L(a) * (-2)),
        ("[L,d]=0", comm(L, d), zero),
        ("[Lam,d]=delta", comm(Lam, d), dl),
        ("[H,d]=-d", comm(H, d), lambda a: -d(a)),
        ("[Lam,delta]=0", comm(Lam, dl), zero),
        ("[L,delta]=d", comm(L, dl), d),
        ("[H,delta]=delta", comm(H, dl), dl),
        ("delta^2=0", lambda a: dl(dl(a)), zero),
        ("delta d=-d delta", lambda a: dl(d(a)), lambda a: -d(dl(a))),
        ("[delta d,H]=0", comm(dd, H), zero),
        ("[delta d,L]=0", comm(dd, L), zero),
        ("[delta d,Lam]=0", comm(dd, Lam), zero),
    ]
    return relations


def verify_operator_relations(
    s: SymplecticSpace, trials: int, max_degree: int, seed: int, density: float = 0.7
) -> list[OperatorReport]:
    """Check every relation on seeded random forms of every degree 0..2n.

    One report per relation; a report with empty ``failures`` means the
    relation held exactly on all inputs.
    """
    from .grammar import render_form
    from .randgen import random_form, trial_rng

    if trials < 1:
        raise ValueError("trials must be >= 1")
    relations = operator_relations(s)
    reports = [OperatorReport(name) for name, _, _ in relations]
    for degree in range(0, s.dim + 1):
        samples = [
            random_form(trial_rng(seed, f"operators/deg{degree}", t), s.dim, degree, max_degree, density)
            for t in range(trials)
        ]
        for (name, lhs, rhs), report in zip(relations, reports):
            for a in samples:
                residual = lhs(a) - rhs(a)
                report.trials += 1
                if not residual.is_zero():
                    report.failures.append((render_form(a), render_form(residual)))
    return reports
