"""Kaehler differentials of a quotient algebra as an explicit vector space.

For A = Q[X1..Xm]/I with standard-monomial basis b_1..b_d, the module of
differentials is presented on the ambient space spanned by the b_i dX_j
(dimension m*d) modulo the subspace generated by the vectors

    b * sum_j (dg/dX_j) dX_j        (g a Groebner generator, b a basis monomial)

Those generators span I*Omega + dI expressed in coordinates, which is why
the quotient does not depend on the chosen generating set of I; the test
suite checks that dimension agreement empirically.  Reduction against the
RREF of the relation span gives canonical representatives, and a form is
stored by its coordinates on the non-pivot slots.

The same file provides the forms of a truncated polynomial ring
Q[t]/<t^(N+1)>: there d(t^(N+1)) = 0 forces t^N dt = 0 (characteristic
zero), so Omega has basis dt, t dt, ..., t^(N-1) dt and pushforwards along
verified homomorphisms are computed directly on coefficient vectors.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .algebra import (
    AlgebraElement,
    AlgebraMap,
    ArtinAlgebra,
    Subspace,
    is_local_over_q,
    nilradical,
)
from .errors import IncompatibleAlgebrasError, NotLocalOverQError
from .polycore import Polynomial
from .truncated import TruncatedHom, TruncatedPoly

ZERO = Fraction(0)
ONE = Fraction(1)


class DifferentialForm:
    """A form in quotient coordinates of a KahlerModule."""

    __slots__ = ("module", "coords")

    def __init__(self, module: "KahlerModule", coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != module.dim:
            raise IncompatibleAlgebrasError("coordinate vector has wrong length")
        self.module = module
        self.coords = coords

    def _check(self, other: "DifferentialForm"):
        if self.module is not other.module:
            raise IncompatibleAlgebrasError("forms over different modules")

    def __add__(self, other):
        self._check(other)
        return DifferentialForm(self.module, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return DifferentialForm(self.module, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return DifferentialForm(self.module, [-a for a in self.coords])

    def scale(self, value):
        c = Fraction(value)
        return DifferentialForm(self.module, [c * a for a in self.coords])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, DifferentialForm)
            and self.module is other.module
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((id(self.module), self.coords))

    def __repr__(self):
        return f"<DifferentialForm {self.describe()}>"

    def describe(self) -> str:
        km = self.module
        A = km.algebra
        ambient = km.ambient_representative(self)
        dim = A.dim
        pieces = []
        for j, name in enumerate(A.variables):
            block = ambient[j * dim : (j + 1) * dim]
            if any(c != 0 for c in block):
                poly = AlgebraElement(A, block).to_polynomial().to_string(A.order)
                pieces.append(f"({poly})*d{name}")
        return " + ".join(pieces) if pieces else "0"


class TruncatedForm:
    """A form f(t) dt over Q[t]/<t^(N+1)>, with t^N dt = 0."""

    __slots__ = ("truncation", "coords")

    def __init__(self, truncation: int, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != truncation:
            raise IncompatibleAlgebrasError("coefficient vector has wrong length")
        self.truncation = truncation
        self.coords = coords

    def __add__(self, other):
        if self.truncation != other.truncation:
            raise IncompatibleAlgebrasError("forms over different truncations")
        return TruncatedForm(self.truncation, [a + b for a, b in zip(self.coords, other.coords)])

    def scale(self, value):
        c = Fraction(value)
        return TruncatedForm(self.truncation, [c * a for a in self.coords])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedForm)
            and self.truncation == other.truncation
            and self.coords == other.coords
        )

    def __repr__(self):
        return f"<TruncatedForm {list(self.coords)} (t^k dt, k < {self.truncation})>"


class KahlerModule:
    """The differentials of an ArtinAlgebra as a quotient coordinate space."""

    def __init__(self, algebra: ArtinAlgebra):
        self.algebra = algebra
        dim = algebra.dim
        nvars = len(algebra.variables)
        self.ambient_dim = nvars * dim
        relations = []
        for g in algebra.gb.polys:
            partials = [
                algebra.coords_of_polynomial(
                    _nf(algebra, g.partial_derivative(name))
                )
                for name in algebra.variables
            ]
            for i in range(dim):
                basis_coords = [ZERO] * dim
                basis_coords[i] = ONE
                vec = []
                for j in range(nvars):
                    vec.extend(algebra.multiply_coords(basis_coords, partials[j]))
                if any(c != 0 for c in vec):
                    relations.append(vec)
        self.rel_rows, self.rel_pivots = linalg.rref(relations)
        pivot_set = set(self.rel_pivots)
        self.quot_indices = tuple(
            i for i in range(self.ambient_dim) if i not in pivot_set
        )
        self.dim = len(self.quot_indices)

    # -- coordinate passage ---------------------------------------------------

    def reduce_ambient(self, vector):
        return linalg.reduce_vector(vector, self.rel_rows, self.rel_pivots)

    def form_from_ambient(self, vector) -> DifferentialForm:
        reduced = self.reduce_ambient(vector)
        return DifferentialForm(self, [reduced[i] for i in self.quot_indices])

    def ambient_representative(self, form: DifferentialForm):
        vec = [ZERO] * self.ambient_dim
        for c, i in zip(form.coords, self.quot_indices):
            vec[i] = c
        return vec

    def zero_form(self) -> DifferentialForm:
        return DifferentialForm(self, [ZERO] * self.dim)

    # -- the universal derivation ----------------------------------------------

    def d_polynomial(self, p: Polynomial) -> DifferentialForm:
        """d of any polynomial representative; the result only depends on
        the class of p in the algebra."""
        A = self.algebra
        vec = []
        for name in A.variables:
            vec.extend(A.coords_of_polynomial(_nf(A, p.partial_derivative(name))))
        return self.form_from_ambient(vec)

    def d(self, element: AlgebraElement) -> DifferentialForm:
        if element.algebra is not self.algebra:
            raise IncompatibleAlgebrasError("element of a different algebra")
        return self.d_polynomial(element.to_polynomial())

    def act(self, element: AlgebraElement, form: DifferentialForm) -> DifferentialForm:
        """Module action a * omega, computed through the mult table."""
        if element.algebra is not self.algebra:
            raise IncompatibleAlgebrasError("element of a different algebra")
        if form.module is not self:
            raise IncompatibleAlgebrasError("form over a different module")
        A = self.algebra
        dim = A.dim
        ambient = self.ambient_representative(form)
        out = []
        for j in range(len(A.variables)):
            block = ambient[j * dim : (j + 1) * dim]
            out.extend(A.multiply_coords(element.coords, block))
        return self.form_from_ambient(out)

    def __repr__(self):
        return f"<KahlerModule dim {self.dim} over algebra dim {self.algebra.dim}>"


def _nf(algebra: ArtinAlgebra, p: Polynomial):
    from .groebner import normal_form

    return normal_form(p, algebra.gb)


def kahler_module(algebra: ArtinAlgebra) -> KahlerModule:
    """The differentials of the algebra (cached per algebra)."""
    if algebra._kahler is None:
        algebra._kahler = KahlerModule(algebra)
    return algebra._kahler


def d(element: AlgebraElement) -> DifferentialForm:
    return kahler_module(element.algebra).d(element)


def form_is_zero(form) -> bool:
    """Works for forms over algebras and over truncated rings alike."""
    return form.is_zero()


def truncated_differential(value: TruncatedPoly) -> TruncatedForm:
    """d of an element of Q[t]/<t^(N+1)>, in the basis t^k dt (k < N)."""
    n = value.truncation
    deriv = value.derivative_coeffs()
    return TruncatedForm(n, deriv[:n])


def pushforward(hom, form: DifferentialForm):
    """Functorial map on forms along a verified homomorphism.

    `hom` is an AlgebraMap (target an ArtinAlgebra) or a TruncatedHom
    (target a truncated polynomial ring); the result lives over the
    target.  Satisfies pushforward(h, d(a)) = d(h(a)).
    """
    module = form.module
    source = module.algebra
    if isinstance(hom, AlgebraMap):
        if hom.source is not source:
            raise IncompatibleAlgebrasError("form does not live over the map's source")
        target_module = kahler_module(hom.target)
        d_images = [target_module.d(img) for img in hom.var_images]
        ambient = module.ambient_representative(form)
        dim = source.dim
        total = target_module.zero_form()
        for j in range(len(source.variables)):
            for i in range(dim):
                c = ambient[j * dim + i]
                if c != 0:
                    moved = target_module.act(hom.basis_images[i], d_images[j])
                    total = total + moved.scale(c)
        return total
    if isinstance(hom, TruncatedHom):
        if hom.source is not source:
            raise IncompatibleAlgebrasError("form does not live over the map's source")
        n = hom.truncation
        image_derivs = [img.derivative_coeffs() for img in hom.images]
        ambient = module.ambient_representative(form)
        dim = source.dim
        out = [ZERO] * n
        for j in range(len(source.variables)):
            deriv = image_derivs[j]
            for i in range(dim):
                c = ambient[j * dim + i]
                if c == 0:
                    continue
                u = hom.basis_image(i)
                # coefficients of u * h_j' below degree n
                for a, ua in enumerate(u.coeffs):
                    if ua == 0:
                        continue
                    top = n - a
                    for b in range(min(len(deriv), top)):
                        if deriv[b] != 0:
                            out[a + b] += c * ua * deriv[b]
        return TruncatedForm(n, out)
    raise IncompatibleAlgebrasError(f"cannot push forward along {type(hom).__name__}")


def h0_de_rham(algebra: ArtinAlgebra) -> Subspace:
    """Kernel of d : A -> Omega_A."""
    km = kahler_module(algebra)
    columns = [km.d(algebra.basis_element(i)).coords for i in range(algebra.dim)]
    if km.dim == 0:
        return algebra.full_space()
    rows = [[columns[i][r] for i in range(algebra.dim)] for r in range(km.dim)]
    kernel = linalg.kernel_basis(rows, algebra.dim)
    return Subspace.from_vectors(kernel, algebra.dim, owner=algebra)


def embedding_obstruction(algebra: ArtinAlgebra) -> Subspace:
    """Kernel of H0_dR(A) -> A/nilradical.

    A nonzero obstruction certifies that the algebra embeds in no
    principal ideal algebra.
    """
    if not is_local_over_q(algebra):
        raise NotLocalOverQError("embedding obstruction needs a local algebra over Q")
    h0 = h0_de_rham(algebra)
    return h0.intersect(nilradical(algebra))
