"""Top-degree differential forms in one affine chart and their pullback.

A form lives in a single chart of a projective space: coefficient times
dx_1 ^ ... ^ dx_n over the chart's affine variables in ascending order.
Pulling back along an affine self-map multiplies the substituted
coefficient by the Jacobian determinant; everything is exact, so form
equality is plain equality of reduced rational functions.

The distinguished form here is the one invariant under the whole conic
action: coefficient 1/Fbar^2 in the chart x5 = 1, where Fbar is the
dehomogenized secant cubic.  Its pole order along the secant cubic in
this chart is two.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conics import p5_ring, secant_cubic
from .maps import AffineMap
from .rings import RationalFunction, Ring, affine_ring


@dataclass(frozen=True)
class TopForm:
    """coefficient * dx_1 ^ ... ^ dx_n in a fixed affine chart."""

    chart: int
    coefficient: RationalFunction

    @property
    def ring(self) -> Ring:
        return self.coefficient.ring

    def __eq__(self, other):
        if not isinstance(other, TopForm):
            return NotImplemented
        return self.chart == other.chart and self.coefficient == other.coefficient

    def render(self) -> str:
        names = self.ring.names[: self.ring.npoly]
        wedge = "^".join(f"d{n}" for n in names)
        return f"({self.coefficient.render()}) {wedge}"

    def __str__(self):
        return self.render()


def pullback(f: AffineMap, form: TopForm) -> TopForm:
    """Pullback along an affine self-map of the chart: (w o f) * det(Jf)."""
    if len(f.components) != form.ring.npoly or f.arity != form.ring.npoly:
        raise ValueError("pullback needs a self-map of the chart")
    coeff = form.coefficient.substitute(list(f.components), f.ring)
    return TopForm(form.chart, coeff * f.jacobian_determinant())


def unit_form(ring: Ring, chart: int = 0) -> TopForm:
    return TopForm(chart, RationalFunction.from_poly(ring.one))


def secant_chart_cubic(consts: tuple = ()):
    """The secant cubic with x5 set to 1, in the chart ring (x0..x4)."""
    r5 = p5_ring(consts)
    aring = affine_ring(5, consts=consts, names=("x0", "x1", "x2", "x3", "x4"))
    images = [aring.var(i) for i in range(5)] + [aring.one]
    return secant_cubic(consts).substitute(images, aring)


def omega_form(consts: tuple = ()) -> TopForm:
    """The invariant volume form in the chart x5 = 1: (1/Fbar^2) dx0^...^dx4.

    The homogeneous numerator x5^6 is exactly the factor that disappears
    on dehomogenizing, so the chart computation is self-contained.
    """
    fbar = secant_chart_cubic(consts)
    return TopForm(5, RationalFunction.make(fbar.ring.one, fbar * fbar))
