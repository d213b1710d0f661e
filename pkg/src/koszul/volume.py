"""Bracket family of a volume form: exact divergence-free fields and their tower.

On R^m (m >= 3) with mu = dx1^...^dxm, every (m-2)-form alpha determines the
unique vector field X_alpha with iota_{X_alpha} mu = -d alpha; such fields are
divergence-free since d iota_{X_alpha} mu = -d(d alpha) = 0.  The brackets

    l_k(alpha_1, ..., alpha_k)
        = -(-1)^(k(k+1)/2) iota_{X_(alpha_k)} ... iota_{X_(alpha_1)} mu

(alpha_1 contracted innermost) together with l_1 = d on the truncated complex
Omega^0 -> ... -> Omega^(m-2) form a grounded family for the generic
identity evaluator; the grading here is L_{-i} = Omega^(m-2-i).
"""

from __future__ import annotations

from typing import Sequence

from .forms import DifferentialForm, MultiVectorField, contract_vector, d
from .linfty import BracketFamily, GradedElement
from .poly import Polynomial


class VolumeSpace:
    """R^m with the standard volume form dx1^...^dxm."""

    def __init__(self, m: int):
        if m < 3:
            raise ValueError("dimension must be >= 3")
        self.m = m
        self.dim = m
        self.mu = DifferentialForm(m, m, {tuple(range(m)): Polynomial.constant(m, 1)})

    def __repr__(self):
        return f"VolumeSpace(m={self.m})"


def exact_divfree_vf(v: VolumeSpace, alpha: DifferentialForm) -> MultiVectorField:
    """The unique X with iota_X mu = -d alpha, for a potential (m-2)-form alpha."""
    m = v.m
    if alpha.degree != m - 2:
        raise ValueError(f"potential must have degree {m - 2}, got {alpha.degree}")
    da = d(alpha)
    terms = {}
    full = set(range(m))
    for idx, p in da.terms.items():
        (missing,) = full - set(idx)
        # iota_{e_i} mu = (-1)^i dx_(rest), so the component is -(-1)^i * coeff
        comp = p if missing & 1 else -p
        if not comp.is_zero():
            terms[(missing,)] = comp
    return MultiVectorField(m, 1, terms)


def volume_bracket(v: VolumeSpace, alphas: Sequence[DifferentialForm]) -> DifferentialForm:
    """l_k of (m-2)-form potentials: signed iterated contraction into mu."""
    k = len(alphas)
    if k < 2:
        raise ValueError("higher brackets start at arity 2")
    cur = v.mu
    for a in alphas:  # first argument contracts innermost
        cur = contract_vector(exact_divfree_vf(v, a), cur)
        if cur.is_zero():
            break
    exponent = (k * (k + 1)) // 2
    return -cur if exponent % 2 == 0 else cur


def volume_family(v: VolumeSpace) -> BracketFamily:
    """The grounded family on Omega^0 -> ... -> Omega^(m-2) with l_1 = d."""
    m = v.m
    ground = m - 2

    def ldegree_of(form_degree: int) -> int:
        return form_degree - ground

    def form_degree_of(ldegree: int) -> int:
        return ldegree + ground

    def unary(x: GradedElement) -> GradedElement:
        # truncated at the (m-2)-form layer; d out of it leaves the complex
        if x.ldegree >= 0:
            return GradedElement(DifferentialForm.zero(m, 0), x.ldegree + 1)
        return GradedElement(d(x.form), x.ldegree + 1)

    def higher(k: int, args: tuple[GradedElement, ...]) -> GradedElement:
        ldeg = sum(x.ldegree for x in args) + 2 - k
        if any(x.form.degree != ground for x in args):
            deg = form_degree_of(ldeg)
            return GradedElement(DifferentialForm.zero(m, deg if 0 <= deg <= m else 0), ldeg)
        return GradedElement(volume_bracket(v, [x.form for x in args]), ldeg)

    return BracketFamily(
        name=f"volume(m={m})",
        max_arity=m,
        grounded=True,
        ground_form_degree=ground,
        form_degree_bounds=(0, ground),
        ldegree_of=ldegree_of,
        form_degree_of=form_degree_of,
        unary=unary,
        higher=higher,
    )
