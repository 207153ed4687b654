//! Frozen reference tables used as regression fixtures:
//!
//! * the residual-vanishing condition polynomial of each constrained
//!   catalog entry,
//! * the induced wedge coproduct of every catalog entry for a generic
//!   skew r-matrix, written in the 2x2-minor coefficients `D`,
//! * the dual bracket tables of the four unconstrained coproduct
//!   families, and
//! * the complete bracket tables of their double algebras.
//!
//! Every entry below was re-derived symbolically from the defining
//! expansions before being frozen; a few fix transcription slips (a
//! sign or a single index) that those expansions force.  The tests
//! replay the derivations, so any drift from the tables is an error.

use threelie::cybe::{d2_coefficient, Coproduct};
use threelie::tensor::wedge_basis;
use threelie::{Algebra, CatalogId, RMatrix, Scalar, Tensor};

fn var(name: &str) -> Scalar {
    Scalar::var(name)
}

/// The entry `a^{ij}` of a generic skew matrix, written on the
/// upper-triangular variables: `a_i_j` for `i < j`, `-a_j_i` for
/// `i > j`, zero on the diagonal.
pub fn skew_entry(i: usize, j: usize) -> Scalar {
    use std::cmp::Ordering;
    match i.cmp(&j) {
        Ordering::Less => var(&threelie::tensor::r_entry_name(i, j)),
        Ordering::Equal => Scalar::int(0),
        Ordering::Greater => -var(&threelie::tensor::r_entry_name(j, i)),
    }
}

/// The condition polynomial of a constrained catalog entry, exactly as
/// tabulated (with lower-triangular entries rewritten through
/// `skew_entry`), or `None` when every skew r-matrix is a solution.
pub fn reference_condition(id: CatalogId) -> Option<Scalar> {
    let e = skew_entry;
    match id {
        // a^{23} (a^{12} a^{34} - a^{13} a^{24} - a^{32} a^{14})
        CatalogId::Dim4N2 => Some(e(2, 3) * (e(1, 2) * e(3, 4) - e(1, 3) * e(2, 4) - e(3, 2) * e(1, 4))),
        // a^{34} (a^{12} a^{34} - a^{32} a^{14} + a^{42} a^{13})
        CatalogId::Dim4N5 => Some(e(3, 4) * (e(1, 2) * e(3, 4) - e(3, 2) * e(1, 4) + e(4, 2) * e(1, 3))),
        // a^{34} (a^{12} a^{43} + a^{32} a^{14} - a^{42} a^{13})
        CatalogId::Dim4N6 => Some(e(3, 4) * (e(1, 2) * e(4, 3) + e(3, 2) * e(1, 4) - e(4, 2) * e(1, 3))),
        _ => None,
    }
}

/// One tabulated wedge-coproduct summand: an integer multiple of a
/// minor `D^{upper}_{lower}` (scaled by `alpha^deg` for the parametric
/// entry) attached to a wedge `e_x ^ e_y ^ e_z`.
struct WedgeTerm {
    sign: i64,
    alpha_deg: u32,
    upper: [usize; 2],
    lower: [usize; 2],
    wedge: [usize; 3],
}

const fn t(sign: i64, upper: [usize; 2], lower: [usize; 2], wedge: [usize; 3]) -> WedgeTerm {
    WedgeTerm {
        sign,
        alpha_deg: 0,
        upper,
        lower,
        wedge,
    }
}

const fn ta(sign: i64, upper: [usize; 2], lower: [usize; 2], wedge: [usize; 3]) -> WedgeTerm {
    WedgeTerm {
        sign,
        alpha_deg: 1,
        upper,
        lower,
        wedge,
    }
}

/// The tabulated wedge coproduct of a catalog entry for the fully
/// symbolic skew r-matrix of its dimension.
pub fn reference_wedge_coproduct(id: CatalogId) -> Coproduct<Scalar> {
    let n = id.dim();
    let r: RMatrix<Scalar> = RMatrix::symbolic_skew(n);
    let alpha = var("alpha");
    let rows: &[(usize, &[WedgeTerm])] = match id {
        CatalogId::Dim3 => &[
            (1, &[t(1, [2, 3], [2, 3], [1, 2, 3])]),
            (2, &[t(-1, [1, 3], [2, 3], [1, 2, 3])]),
            (3, &[t(1, [1, 2], [2, 3], [1, 2, 3])]),
        ],
        CatalogId::Dim4N1 => &[
            (
                1,
                &[
                    t(1, [2, 4], [1, 2], [1, 2, 3]),
                    t(-1, [3, 4], [1, 3], [1, 2, 3]),
                    t(1, [2, 3], [1, 2], [1, 2, 4]),
                    t(-1, [3, 4], [1, 4], [1, 2, 4]),
                    t(1, [2, 3], [1, 3], [1, 3, 4]),
                    t(-1, [2, 4], [1, 4], [1, 3, 4]),
                    t(1, [3, 4], [3, 4], [2, 3, 4]),
                    t(-1, [2, 4], [2, 4], [2, 3, 4]),
                    t(1, [2, 3], [2, 3], [2, 3, 4]),
                ],
            ),
            (
                2,
                &[
                    t(1, [3, 4], [2, 3], [1, 2, 3]),
                    t(-1, [1, 4], [1, 2], [1, 2, 3]),
                    t(1, [3, 4], [2, 4], [1, 2, 4]),
                    t(-1, [1, 3], [1, 2], [1, 2, 4]),
                    t(1, [3, 4], [3, 4], [1, 3, 4]),
                    t(-1, [1, 3], [1, 3], [1, 3, 4]),
                    t(1, [1, 4], [1, 4], [1, 3, 4]),
                    t(1, [1, 4], [2, 4], [2, 3, 4]),
                    t(-1, [1, 3], [2, 3], [2, 3, 4]),
                ],
            ),
            (
                3,
                &[
                    t(1, [1, 4], [1, 3], [1, 2, 3]),
                    t(-1, [2, 4], [2, 3], [1, 2, 3]),
                    t(1, [1, 2], [1, 2], [1, 2, 4]),
                    t(-1, [2, 4], [2, 4], [1, 2, 4]),
                    t(1, [1, 4], [1, 4], [1, 2, 4]),
                    t(1, [1, 2], [1, 3], [1, 3, 4]),
                    t(-1, [2, 4], [3, 4], [1, 3, 4]),
                    t(1, [1, 2], [2, 3], [2, 3, 4]),
                    t(-1, [1, 4], [3, 4], [2, 3, 4]),
                ],
            ),
            (
                4,
                &[
                    t(1, [1, 2], [1, 2], [1, 2, 3]),
                    t(-1, [1, 3], [1, 3], [1, 2, 3]),
                    t(1, [2, 3], [2, 3], [1, 2, 3]),
                    t(1, [2, 3], [2, 4], [1, 2, 4]),
                    t(-1, [1, 3], [1, 4], [1, 2, 4]),
                    t(1, [2, 3], [3, 4], [1, 3, 4]),
                    t(-1, [1, 2], [1, 4], [1, 3, 4]),
                    t(1, [1, 3], [3, 4], [2, 3, 4]),
                    t(-1, [1, 2], [2, 4], [2, 3, 4]),
                ],
            ),
        ],
        CatalogId::Dim4N2 => &[
            (
                1,
                &[
                    t(1, [2, 3], [2, 3], [1, 2, 3]),
                    t(1, [2, 3], [2, 4], [1, 2, 4]),
                    t(1, [2, 3], [3, 4], [1, 3, 4]),
                ],
            ),
            (
                2,
                &[
                    t(-1, [1, 3], [2, 3], [1, 2, 3]),
                    t(-1, [1, 3], [2, 4], [1, 2, 4]),
                    t(-1, [1, 3], [3, 4], [1, 3, 4]),
                ],
            ),
            (
                3,
                &[
                    t(1, [1, 2], [2, 3], [1, 2, 3]),
                    t(1, [1, 2], [2, 4], [1, 2, 4]),
                    t(1, [1, 2], [3, 4], [1, 3, 4]),
                ],
            ),
        ],
        CatalogId::Dim4N3 => &[
            (
                2,
                &[
                    t(1, [3, 4], [2, 3], [1, 2, 3]),
                    t(1, [3, 4], [2, 4], [1, 2, 4]),
                    t(1, [3, 4], [3, 4], [1, 3, 4]),
                ],
            ),
            (
                3,
                &[
                    t(-1, [2, 4], [2, 3], [1, 2, 3]),
                    t(-1, [2, 4], [2, 4], [1, 2, 4]),
                    t(-1, [2, 4], [3, 4], [1, 3, 4]),
                ],
            ),
            (
                4,
                &[
                    t(1, [2, 3], [2, 3], [1, 2, 3]),
                    t(1, [2, 3], [2, 4], [1, 2, 4]),
                    t(1, [2, 3], [3, 4], [1, 3, 4]),
                ],
            ),
        ],
        CatalogId::Dim4N4 => &[
            (
                1,
                &[
                    t(-1, [3, 4], [1, 3], [1, 2, 3]),
                    t(-1, [3, 4], [1, 4], [1, 2, 4]),
                    t(1, [3, 4], [3, 4], [2, 3, 4]),
                ],
            ),
            (
                2,
                &[
                    t(1, [3, 4], [2, 3], [1, 2, 3]),
                    t(1, [3, 4], [2, 4], [1, 2, 4]),
                    t(1, [3, 4], [3, 4], [1, 3, 4]),
                ],
            ),
            (
                3,
                &[
                    t(1, [1, 4], [1, 3], [1, 2, 3]),
                    t(-1, [2, 4], [2, 3], [1, 2, 3]),
                    t(1, [1, 4], [1, 4], [1, 2, 4]),
                    t(-1, [2, 4], [2, 4], [1, 2, 4]),
                    t(-1, [2, 4], [3, 4], [1, 3, 4]),
                    t(-1, [1, 4], [3, 4], [2, 3, 4]),
                ],
            ),
            (
                4,
                &[
                    t(1, [2, 3], [2, 3], [1, 2, 3]),
                    t(-1, [1, 3], [1, 3], [1, 2, 3]),
                    t(1, [2, 3], [2, 4], [1, 2, 4]),
                    t(-1, [1, 3], [1, 4], [1, 2, 4]),
                    t(1, [2, 3], [3, 4], [1, 3, 4]),
                    t(1, [1, 3], [3, 4], [2, 3, 4]),
                ],
            ),
        ],
        CatalogId::Dim4N5 => &[
            (
                1,
                &[
                    t(1, [3, 4], [2, 3], [1, 2, 3]),
                    t(1, [3, 4], [2, 4], [1, 2, 4]),
                    t(1, [3, 4], [3, 4], [1, 3, 4]),
                ],
            ),
            (
                2,
                &[
                    t(-1, [3, 4], [1, 3], [1, 2, 3]),
                    t(-1, [3, 4], [1, 4], [1, 2, 4]),
                    t(1, [3, 4], [3, 4], [2, 3, 4]),
                ],
            ),
            (
                3,
                &[
                    t(1, [2, 4], [1, 3], [1, 2, 3]),
                    t(-1, [1, 4], [2, 3], [1, 2, 3]),
                    t(1, [2, 4], [1, 4], [1, 2, 4]),
                    t(-1, [1, 4], [2, 4], [1, 2, 4]),
                    t(-1, [1, 4], [3, 4], [1, 3, 4]),
                    t(-1, [2, 4], [3, 4], [2, 3, 4]),
                ],
            ),
            (
                4,
                &[
                    t(1, [1, 3], [2, 3], [1, 2, 3]),
                    t(-1, [2, 3], [1, 3], [1, 2, 3]),
                    t(1, [1, 3], [2, 4], [1, 2, 4]),
                    t(-1, [2, 3], [1, 4], [1, 2, 4]),
                    t(1, [1, 3], [3, 4], [1, 3, 4]),
                    t(1, [2, 3], [3, 4], [2, 3, 4]),
                ],
            ),
        ],
        CatalogId::Dim4N6 => &[
            (
                1,
                &[
                    t(-1, [3, 4], [1, 3], [1, 2, 3]),
                    t(-1, [3, 4], [1, 4], [1, 2, 4]),
                    t(1, [3, 4], [3, 4], [2, 3, 4]),
                ],
            ),
            (
                2,
                &[
                    ta(1, [3, 4], [2, 3], [1, 2, 3]),
                    t(-1, [3, 4], [1, 3], [1, 2, 3]),
                    ta(1, [3, 4], [2, 4], [1, 2, 4]),
                    t(-1, [3, 4], [1, 4], [1, 2, 4]),
                    ta(1, [3, 4], [3, 4], [1, 3, 4]),
                    t(1, [3, 4], [3, 4], [2, 3, 4]),
                ],
            ),
            (
                3,
                &[
                    t(1, [2, 4], [1, 3], [1, 2, 3]),
                    t(1, [1, 4], [1, 3], [1, 2, 3]),
                    ta(-1, [2, 4], [2, 3], [1, 2, 3]),
                    t(1, [2, 4], [1, 4], [1, 2, 4]),
                    t(1, [1, 4], [1, 4], [1, 2, 4]),
                    ta(-1, [2, 4], [2, 4], [1, 2, 4]),
                    ta(-1, [2, 4], [3, 4], [1, 3, 4]),
                    t(-1, [2, 4], [3, 4], [2, 3, 4]),
                    t(-1, [1, 4], [3, 4], [2, 3, 4]),
                ],
            ),
            (
                4,
                &[
                    ta(1, [2, 3], [2, 3], [1, 2, 3]),
                    t(-1, [2, 3], [1, 3], [1, 2, 3]),
                    t(-1, [1, 3], [1, 3], [1, 2, 3]),
                    ta(1, [2, 3], [2, 4], [1, 2, 4]),
                    t(-1, [2, 3], [1, 4], [1, 2, 4]),
                    t(-1, [1, 3], [1, 4], [1, 2, 4]),
                    ta(1, [2, 3], [3, 4], [1, 3, 4]),
                    t(1, [2, 3], [3, 4], [2, 3, 4]),
                    t(1, [1, 3], [3, 4], [2, 3, 4]),
                ],
            ),
        ],
        CatalogId::Dim4N7 => &[
            (
                1,
                &[
                    t(1, [2, 4], [1, 2], [1, 2, 3]),
                    t(-1, [3, 4], [1, 3], [1, 2, 3]),
                    t(-1, [3, 4], [1, 4], [1, 2, 4]),
                    t(-1, [2, 4], [1, 4], [1, 3, 4]),
                    t(1, [3, 4], [3, 4], [2, 3, 4]),
                    t(-1, [2, 4], [2, 4], [2, 3, 4]),
                ],
            ),
            (
                2,
                &[
                    t(1, [3, 4], [2, 3], [1, 2, 3]),
                    t(-1, [1, 4], [1, 2], [1, 2, 3]),
                    t(1, [3, 4], [2, 4], [1, 2, 4]),
                    t(1, [3, 4], [3, 4], [1, 3, 4]),
                    t(1, [1, 4], [1, 4], [1, 3, 4]),
                    t(1, [1, 4], [2, 4], [2, 3, 4]),
                ],
            ),
            (
                3,
                &[
                    t(1, [1, 4], [1, 3], [1, 2, 3]),
                    t(-1, [2, 4], [2, 3], [1, 2, 3]),
                    t(1, [1, 4], [1, 4], [1, 2, 4]),
                    t(-1, [2, 4], [2, 4], [1, 2, 4]),
                    t(-1, [2, 4], [3, 4], [1, 3, 4]),
                    t(-1, [1, 4], [3, 4], [2, 3, 4]),
                ],
            ),
            (
                4,
                &[
                    t(1, [1, 2], [1, 2], [1, 2, 3]),
                    t(-1, [1, 3], [1, 3], [1, 2, 3]),
                    t(1, [2, 3], [2, 3], [1, 2, 3]),
                    t(1, [2, 3], [2, 4], [1, 2, 4]),
                    t(-1, [1, 3], [1, 4], [1, 2, 4]),
                    t(1, [2, 3], [3, 4], [1, 3, 4]),
                    t(-1, [1, 2], [1, 4], [1, 3, 4]),
                    t(1, [1, 3], [3, 4], [2, 3, 4]),
                    t(-1, [1, 2], [2, 4], [2, 3, 4]),
                ],
            ),
        ],
    };
    let mut delta = Coproduct::zero(n);
    for (component, terms) in rows {
        let mut tensor: Tensor<Scalar> = Tensor::zero(3, n);
        for term in *terms {
            let minor = d2_coefficient(&r, term.upper, term.lower).expect("indices in range");
            let mut coeff = Scalar::int(term.sign) * minor;
            for _ in 0..term.alpha_deg {
                coeff = coeff * alpha.clone();
            }
            let w: Tensor<Scalar> = wedge_basis(n, &term.wedge).expect("indices in range");
            tensor = tensor.add(&w.scale(&coeff));
        }
        delta
            .set_component(*component, tensor)
            .expect("component in range");
    }
    delta
}

/// One tabulated bracket: canonical triple and its value as basis
/// terms `(index, coefficient)`, coefficients written on the family
/// parameters.
type BracketRow = ([usize; 3], &'static [(usize, i64, &'static str)]);

fn algebra_from_rows(dim: usize, rows: &[BracketRow]) -> Algebra {
    let mut out = Algebra::new(dim);
    for (ijk, entries) in rows {
        let mut value = vec![Scalar::int(0); dim];
        for (index, sign, param) in *entries {
            let coeff = if param.is_empty() {
                Scalar::int(*sign)
            } else {
                Scalar::int(*sign) * var(param)
            };
            value[index - 1] = value[index - 1].clone() + coeff;
        }
        out.set_bracket(ijk[0], ijk[1], ijk[2], value)
            .expect("canonical triples");
    }
    out
}

/// The tabulated dual bracket of an unconstrained coproduct family, on
/// the dual basis, or `None` for the entries whose full families are
/// obstructed.
pub fn reference_dual(id: CatalogId) -> Option<Algebra> {
    let rows: &[BracketRow] = match id {
        CatalogId::Dim4N1 => &[
            ([1, 2, 3], &[(4, 1, "k")]),
            ([1, 2, 4], &[(3, 1, "k")]),
            ([1, 3, 4], &[(2, 1, "k")]),
            ([2, 3, 4], &[(1, 1, "k")]),
        ],
        CatalogId::Dim4N3 => &[
            ([1, 2, 3], &[(2, 1, "k1"), (3, 1, "k3"), (4, 1, "c3")]),
            ([1, 2, 4], &[(2, 1, "k2"), (3, 1, "c2"), (4, -1, "k3")]),
            ([1, 3, 4], &[(2, 1, "c1"), (3, -1, "k2"), (4, 1, "k1")]),
        ],
        CatalogId::Dim4N4 => &[
            ([1, 2, 3], &[(3, 1, "k"), (4, 1, "c2")]),
            ([1, 2, 4], &[(3, 1, "c1"), (4, -1, "k")]),
        ],
        CatalogId::Dim4N7 => &[([1, 2, 3], &[(4, 1, "c")])],
        _ => return None,
    };
    Some(algebra_from_rows(4, rows))
}

/// The tabulated eight-dimensional double algebra of an unconstrained
/// family: indices 1..=4 are the base `e` vectors, 5..=8 the dual `f`
/// vectors.
pub fn reference_double(id: CatalogId) -> Option<Algebra> {
    let rows: &[BracketRow] = match id {
        CatalogId::Dim4N1 => &[
            // base brackets
            ([1, 2, 3], &[(4, 1, "")]),
            ([1, 2, 4], &[(3, 1, "")]),
            ([1, 3, 4], &[(2, 1, "")]),
            ([2, 3, 4], &[(1, 1, "")]),
            // two base vectors against a dual vector
            ([1, 2, 7], &[(8, -1, "")]),
            ([1, 2, 8], &[(7, -1, "")]),
            ([1, 3, 6], &[(8, -1, "")]),
            ([1, 3, 8], &[(6, 1, "")]),
            ([1, 4, 6], &[(7, 1, "")]),
            ([1, 4, 7], &[(6, 1, "")]),
            ([2, 3, 5], &[(8, -1, "")]),
            ([2, 3, 8], &[(5, -1, "")]),
            ([2, 4, 5], &[(7, 1, "")]),
            ([2, 4, 7], &[(5, -1, "")]),
            ([3, 4, 5], &[(6, -1, "")]),
            ([3, 4, 6], &[(5, -1, "")]),
            // one base vector against two dual vectors
            ([1, 6, 7], &[(4, -1, "k")]),
            ([1, 6, 8], &[(3, 1, "k")]),
            ([1, 7, 8], &[(2, -1, "k")]),
            ([2, 5, 7], &[(4, -1, "k")]),
            ([2, 5, 8], &[(3, 1, "k")]),
            ([2, 7, 8], &[(1, -1, "k")]),
            ([3, 5, 6], &[(4, -1, "k")]),
            ([3, 5, 8], &[(2, 1, "k")]),
            ([3, 6, 8], &[(1, -1, "k")]),
            ([4, 5, 6], &[(3, -1, "k")]),
            ([4, 5, 7], &[(2, 1, "k")]),
            ([4, 6, 7], &[(1, -1, "k")]),
            // dual brackets
            ([5, 6, 7], &[(8, 1, "k")]),
            ([5, 6, 8], &[(7, 1, "k")]),
            ([5, 7, 8], &[(6, 1, "k")]),
            ([6, 7, 8], &[(5, 1, "k")]),
        ],
        CatalogId::Dim4N3 => &[
            ([2, 3, 4], &[(1, 1, "")]),
            ([2, 3, 5], &[(8, -1, "")]),
            ([2, 4, 5], &[(7, 1, "")]),
            ([3, 4, 5], &[(6, -1, "")]),
            ([2, 5, 6], &[(3, -1, "k1"), (4, -1, "k2")]),
            ([2, 5, 7], &[(2, 1, "k1"), (4, -1, "c1")]),
            ([2, 5, 8], &[(2, 1, "k2"), (3, 1, "c1")]),
            ([2, 6, 7], &[(1, -1, "k1")]),
            ([2, 6, 8], &[(1, -1, "k2")]),
            ([2, 7, 8], &[(1, -1, "c1")]),
            ([3, 5, 6], &[(3, -1, "k3"), (4, -1, "c2")]),
            ([3, 5, 7], &[(2, 1, "k3"), (4, 1, "k2")]),
            ([3, 5, 8], &[(2, 1, "c2"), (3, -1, "k2")]),
            ([3, 6, 7], &[(1, -1, "k3")]),
            ([3, 6, 8], &[(1, -1, "c2")]),
            ([3, 7, 8], &[(1, 1, "k2")]),
            ([4, 5, 6], &[(3, -1, "c3"), (4, 1, "k3")]),
            ([4, 5, 7], &[(2, 1, "c3"), (4, -1, "k1")]),
            ([4, 5, 8], &[(2, -1, "k3"), (3, 1, "k1")]),
            ([4, 6, 7], &[(1, -1, "c3")]),
            ([4, 6, 8], &[(1, 1, "k3")]),
            ([4, 7, 8], &[(1, -1, "k1")]),
            ([5, 6, 7], &[(6, 1, "k1"), (7, 1, "k3"), (8, 1, "c3")]),
            ([5, 6, 8], &[(6, 1, "k2"), (7, 1, "c2"), (8, -1, "k3")]),
            ([5, 7, 8], &[(6, 1, "c1"), (7, -1, "k2"), (8, 1, "k1")]),
        ],
        CatalogId::Dim4N4 => &[
            ([2, 3, 4], &[(1, 1, "")]),
            ([1, 3, 4], &[(2, 1, "")]),
            ([2, 3, 5], &[(8, -1, "")]),
            ([2, 4, 5], &[(7, 1, "")]),
            ([3, 4, 5], &[(6, -1, "")]),
            ([1, 3, 6], &[(8, -1, "")]),
            ([1, 4, 6], &[(7, 1, "")]),
            ([3, 4, 6], &[(5, -1, "")]),
            ([3, 5, 6], &[(3, -1, "k"), (4, -1, "c1")]),
            ([3, 5, 7], &[(2, 1, "k")]),
            ([3, 5, 8], &[(2, 1, "c1")]),
            ([3, 6, 7], &[(1, -1, "k")]),
            ([3, 6, 8], &[(1, -1, "c1")]),
            ([4, 5, 6], &[(3, -1, "c2"), (4, 1, "k")]),
            ([4, 5, 7], &[(2, 1, "c2")]),
            ([4, 5, 8], &[(2, -1, "k")]),
            ([4, 6, 7], &[(1, -1, "c2")]),
            ([4, 6, 8], &[(1, 1, "k")]),
            ([5, 6, 7], &[(7, 1, "k"), (8, 1, "c2")]),
            ([5, 6, 8], &[(7, 1, "c1"), (8, -1, "k")]),
        ],
        CatalogId::Dim4N7 => &[
            ([1, 2, 4], &[(3, 1, "")]),
            ([1, 3, 4], &[(2, 1, "")]),
            ([2, 3, 4], &[(1, 1, "")]),
            ([1, 2, 7], &[(8, -1, "")]),
            ([1, 3, 6], &[(8, -1, "")]),
            ([1, 4, 6], &[(7, 1, "")]),
            ([1, 4, 7], &[(6, 1, "")]),
            ([2, 3, 5], &[(8, -1, "")]),
            ([2, 4, 5], &[(7, 1, "")]),
            ([2, 4, 7], &[(5, -1, "")]),
            ([3, 4, 5], &[(6, -1, "")]),
            ([3, 4, 6], &[(5, -1, "")]),
            ([4, 5, 6], &[(3, -1, "c")]),
            ([4, 5, 7], &[(2, 1, "c")]),
            ([4, 6, 7], &[(1, -1, "c")]),
            ([5, 6, 7], &[(8, 1, "c")]),
        ],
        _ => return None,
    };
    Some(algebra_from_rows(8, rows))
}

/// The four catalog entries whose full coproduct families satisfy
/// every compatibility condition.
pub const UNCONSTRAINED_FAMILY_IDS: [CatalogId; 4] = [
    CatalogId::Dim4N1,
    CatalogId::Dim4N3,
    CatalogId::Dim4N4,
    CatalogId::Dim4N7,
];
