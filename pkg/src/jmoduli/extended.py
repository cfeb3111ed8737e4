"""The extended algebras: R with n adjoined classes e_0..e_{n-1}.

For homogeneous nonsingular f the underlying space is R = sum of the
weight-k*nu graded pieces of S/J_f (k = 0..n-1); for a deformation f+g
it is the closure subalgebra R_{f+g}.  The e-classes multiply to zero
against everything except the unit.  Structure constants are stored
sparsely for all ordered pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groebner import normal_form, standard_monomials
from .jacobian import deformed_subalgebra, graded_quotient
from .linalg import Span
from .polys import Polynomial, RingContext, render_polynomial


@dataclass(frozen=True)
class PrimitiveClass:
    """Class of a normal-form polynomial; k is the grade index if graded."""

    poly: Polynomial
    k: int | None

    def __str__(self) -> str:
        return f"[{render_polynomial(self.poly)}]"


@dataclass(frozen=True)
class EClass:
    index: int

    def __str__(self) -> str:
        return f"e_{self.index}"


Label = PrimitiveClass | EClass

ProductTable = list[list[dict[int, Fraction]]]


@dataclass(frozen=True)
class ExtendedAlgebra:
    basis_labels: tuple[Label, ...]
    products: ProductTable  # products[i][j]: sparse expansion of b_i * b_j
    grading: tuple[int, ...] | None
    unit_index: int

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def label_index(self, label: Label | int) -> int:
        if isinstance(label, int):
            if not 0 <= label < self.dim:
                raise ValueError(f"basis index {label} out of range")
            return label
        try:
            return self.basis_labels.index(label)
        except ValueError:
            raise ValueError(f"unknown basis label {label}") from None


def structure_constants(
    algebra: ExtendedAlgebra, i: Label | int, j: Label | int
) -> list[Fraction]:
    """Dense expansion coefficients of basis_i * basis_j."""
    a = algebra.label_index(i)
    b = algebra.label_index(j)
    out = [Fraction(0)] * algebra.dim
    for x, c in algebra.products[a][b].items():
        out[x] = c
    return out


def _with_e_products(
    primitive_products: list[list[dict[int, Fraction]]],
    nprim: int,
    n_e: int,
    unit_index: int,
) -> ProductTable:
    """Extend a primitive-by-primitive table by the e-class rules.

    e_i * e_j = 0 and e_i * [h] = 0 except against the unit:
    1 * e_i = e_i * 1 = e_i.
    """
    dim = nprim + n_e
    table: ProductTable = [[{} for _ in range(dim)] for _ in range(dim)]
    for a in range(nprim):
        for b in range(nprim):
            table[a][b] = primitive_products[a][b]
    for t in range(n_e):
        e = nprim + t
        table[unit_index][e] = {e: Fraction(1)}
        table[e][unit_index] = {e: Fraction(1)}
    return table


def build_extended(
    f: Polynomial, ctx: RingContext, max_pairs: int = 10**6
) -> ExtendedAlgebra:
    """R-tilde for homogeneous nonsingular f, with its even grading.

    Basis: the standard monomials of weight k*nu for k = 0..n-1 (grade
    2k), then e_0..e_{n-1} (grade n-1).  Primitive products are normal
    forms read off against the standard-monomial basis.
    """
    data = graded_quotient(f, ctx, max_pairs=max_pairs)
    n = ctx.nvars - 1
    monos = []
    for k in range(n):
        for mono in data.primitive_basis(k, ctx.nu):
            monos.append((mono, k))
    labels: list[Label] = [
        PrimitiveClass(Polynomial.monomial(mono), k) for mono, k in monos
    ]
    grading = [2 * k for _, k in monos]
    index_of_mono = {mono: i for i, (mono, _) in enumerate(monos)}
    nprim = len(monos)

    prim_products: list[list[dict[int, Fraction]]] = [
        [{} for _ in range(nprim)] for _ in range(nprim)
    ]
    for a, (ma, ka) in enumerate(monos):
        pa = Polynomial.monomial(ma)
        for b, (mb, kb) in enumerate(monos):
            nf = normal_form(pa * Polynomial.monomial(mb), data.gb)
            entry: dict[int, Fraction] = {}
            for mono, coeff in nf.terms.items():
                if mono not in index_of_mono:
                    raise RuntimeError(
                        "normal form left the graded basis; inconsistent quotient"
                    )
                entry[index_of_mono[mono]] = coeff
            prim_products[a][b] = entry

    unit_index = index_of_mono[(0,) * ctx.nvars]
    for t in range(n):
        labels.append(EClass(t))
        grading.append(n - 1)
    table = _with_e_products(prim_products, nprim, n, unit_index)
    return ExtendedAlgebra(tuple(labels), table, tuple(grading), unit_index)


def build_extended_deformed(
    f: Polynomial,
    g: Polynomial,
    ctx: RingContext,
    max_pairs: int = 10**6,
) -> ExtendedAlgebra:
    """R-tilde_{f+g}: ungraded, on the closure basis of R_{f+g} plus e's.

    Primitive products are normal forms re-expanded over the stored
    basis by exact elimination; a product falling outside the span is an
    internal error (closure guarantees membership).
    """
    data = deformed_subalgebra(f, g, ctx, max_pairs=max_pairs)
    std = standard_monomials(data.gb)
    index = {mono: i for i, mono in enumerate(std)}

    def coords(p: Polynomial) -> list[Fraction]:
        vec = [Fraction(0)] * len(std)
        for mono, coeff in p.terms.items():
            vec[index[mono]] = coeff
        return vec

    span = Span(len(std), track_original=True)
    for b in data.basis:
        if not span.add(coords(b)):
            raise RuntimeError("stored closure basis is linearly dependent")

    nprim = len(data.basis)
    prim_products: list[list[dict[int, Fraction]]] = [
        [{} for _ in range(nprim)] for _ in range(nprim)
    ]
    for a, pa in enumerate(data.basis):
        for b, pb in enumerate(data.basis):
            nf = normal_form(pa * pb, data.gb)
            expansion = span.expand(coords(nf))
            if expansion is None:
                raise RuntimeError(
                    "product left the closure span; closure invariant violated"
                )
            prim_products[a][b] = {
                x: c for x, c in enumerate(expansion) if c
            }

    unit = data.basis[0]
    if unit != normal_form(Polynomial.constant(ctx.nvars, 1), data.gb):
        raise RuntimeError("closure basis does not start with the unit class")
    labels: list[Label] = [PrimitiveClass(b, None) for b in data.basis]
    n = ctx.nvars - 1
    for t in range(n):
        labels.append(EClass(t))
    table = _with_e_products(prim_products, nprim, n, unit_index=0)
    return ExtendedAlgebra(tuple(labels), table, None, 0)


def verify_dimension_equality(
    f: Polynomial, g: Polynomial, ctx: RingContext, max_pairs: int = 10**6
) -> dict:
    """Compare dim R-tilde with dim R-tilde_{f+g}, computed independently.

    The graded dimension comes from Hilbert data alone; the deformed one
    from the closure computation.  Returns {"dim_extended",
    "dim_deformed", "equal"}.
    """
    data = graded_quotient(f, ctx, max_pairs=max_pairs)
    n = ctx.nvars - 1
    dim_extended = sum(data.r_dims) + n
    deformed = deformed_subalgebra(f, g, ctx, max_pairs=max_pairs)
    dim_deformed = deformed.dim + n
    return {
        "dim_extended": dim_extended,
        "dim_deformed": dim_deformed,
        "equal": dim_extended == dim_deformed,
    }


def verify_algebra_laws(algebra: ExtendedAlgebra) -> dict:
    """Exhaustive unit/commutativity/associativity/grading checks.

    Associativity runs over all basis triples (i, j, k); by the already
    verified commutativity, the triple (k, j, i) checks the mirror
    identity, so only i <= k is enumerated.  Returns a dict of booleans.
    """
    dim = algebra.dim
    products = algebra.products
    unit = algebra.unit_index

    unital = all(
        products[unit][b] == {b: Fraction(1)} for b in range(dim)
    ) and all(products[b][unit] == {b: Fraction(1)} for b in range(dim))

    commutative = all(
        products[i][j] == products[j][i] for i in range(dim) for j in range(i, dim)
    )

    def mul_row(row: dict[int, Fraction], k: int) -> dict[int, Fraction]:
        acc: dict[int, Fraction] = {}
        for x, c in row.items():
            for y, d in products[x][k].items():
                v = acc.get(y, Fraction(0)) + c * d
                if v:
                    acc[y] = v
                else:
                    del acc[y]
        return acc

    def row_mul(i: int, row: dict[int, Fraction]) -> dict[int, Fraction]:
        acc: dict[int, Fraction] = {}
        for z, c in row.items():
            for y, d in products[i][z].items():
                v = acc.get(y, Fraction(0)) + c * d
                if v:
                    acc[y] = v
                else:
                    del acc[y]
        return acc

    associative = True
    for i in range(dim):
        if not associative:
            break
        for j in range(dim):
            row_ij = products[i][j]
            for k in range(i, dim):
                if not row_ij and not products[j][k]:
                    continue
                if mul_row(row_ij, k) != row_mul(i, products[j][k]):
                    associative = False
                    break
            if not associative:
                break

    graded_ok = True
    if algebra.grading is not None:
        deg = algebra.grading
        for i in range(dim):
            for j in range(dim):
                for x, c in products[i][j].items():
                    if c and deg[x] != deg[i] + deg[j]:
                        graded_ok = False

    return {
        "unital": unital,
        "commutative": commutative,
        "associative": associative,
        "graded_ok": graded_ok,
    }


def to_json_dict(algebra: ExtendedAlgebra) -> dict:
    """Serializable form: labels as strings, sparse product triples.

    Products are emitted for i <= j only (the table is commutative);
    coefficients as "num/den" strings.
    """
    triples = []
    for i in range(algebra.dim):
        for j in range(i, algebra.dim):
            for x in sorted(algebra.products[i][j]):
                c = algebra.products[i][j][x]
                triples.append([i, j, x, f"{c.numerator}/{c.denominator}"])
    return {
        "dim": algebra.dim,
        "basis": [str(label) for label in algebra.basis_labels],
        "grading": list(algebra.grading) if algebra.grading is not None else None,
        "products": triples,
    }
