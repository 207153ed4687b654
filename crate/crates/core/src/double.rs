//! Double-construction machinery: the two compatibility constraints on
//! a coproduct, the classified parametric coproduct families with an
//! exact null-space completeness certificate, the slotwise operator
//! `Φ`, and construction plus verification of the hyperbolic double
//! algebra on `A ⊕ A*`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{FiReport, ThreeLieAlgebra};
use crate::catalog::{self, CatalogId};
use crate::cocycle::CubeRepresentation;
use crate::cybe::Coproduct;
use crate::error::{Error, Result};
use crate::linalg::{determinant, null_space, rank, Matrix};
use crate::ring::{IntegralDomain, Ring};
use crate::scalar::Scalar;
use crate::tensor::{wedge_basis, Tensor};

/// A bilinear form through its Gram matrix in the working basis.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm<S> {
    gram: Matrix<S>,
}

impl<S: Ring> BilinearForm<S> {
    pub fn new(gram: Matrix<S>) -> Result<Self> {
        if gram.rows() != gram.cols() {
            return Err(Error::DimensionMismatch {
                expected: gram.rows(),
                got: gram.cols(),
            });
        }
        Ok(BilinearForm { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix<S> {
        &self.gram
    }

    /// Pairing of the `i`-th and `j`-th basis vectors (1-based).
    pub fn basis_pairing(&self, i: usize, j: usize) -> &S {
        self.gram.at(i - 1, j - 1)
    }

    /// Evaluates the form on coordinate vectors.
    pub fn evaluate(&self, x: &[S], y: &[S]) -> Result<S> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        let mut out = S::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let g = self.gram.at(i, j);
                if yj.is_zero() || g.is_zero() {
                    continue;
                }
                out = out + xi.clone() * g.clone() * yj.clone();
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }
}

impl<S: IntegralDomain> BilinearForm<S> {
    /// Exact nondegeneracy: nonzero Gram determinant.
    pub fn is_nondegenerate(&self) -> bool {
        !determinant(&self.gram).is_zero()
    }
}

/// The hyperbolic pairing on a space split into two halves of dimension
/// `n` each: Gram matrix `[[0, I], [I, 0]]`.
pub fn hyperbolic_form<S: Ring>(n: usize) -> BilinearForm<S> {
    let mut gram = Matrix::zero(2 * n, 2 * n);
    for i in 0..n {
        gram.set(i, n + i, S::one());
        gram.set(n + i, i, S::one());
    }
    BilinearForm { gram }
}

/// The ternary algebra on `A ⊕ A*` together with its hyperbolic form.
/// Basis order: `e_1, …, e_n` (indices `1..=n`) followed by the dual
/// basis `f_1, …, f_n` (indices `n+1..=2n`).
#[derive(Clone, Debug)]
pub struct DoubleAlgebra<S> {
    base_dim: usize,
    algebra: ThreeLieAlgebra<S>,
    form: BilinearForm<S>,
}

impl<S: Ring> DoubleAlgebra<S> {
    /// Reassembles a double from its parts; the algebra and the form
    /// must both live on `2 * base_dim` dimensions.
    pub fn from_parts(
        base_dim: usize,
        algebra: ThreeLieAlgebra<S>,
        form: BilinearForm<S>,
    ) -> Result<Self> {
        for dim in [algebra.dim(), form.dim()] {
            if dim != 2 * base_dim {
                return Err(Error::DimensionMismatch {
                    expected: 2 * base_dim,
                    got: dim,
                });
            }
        }
        Ok(DoubleAlgebra {
            base_dim,
            algebra,
            form,
        })
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn algebra(&self) -> &ThreeLieAlgebra<S> {
        &self.algebra
    }

    pub fn form(&self) -> &BilinearForm<S> {
        &self.form
    }
}

/// Assembles the bracket on `A ⊕ A*` without verifying that the result
/// satisfies the Fundamental Identity.  Pure brackets come from the two
/// inputs; the mixed ones are the coadjoint actions:
///
/// ```text
/// [e_a, e_b, f_r] = −Σ_m T^r_{abm} f_m
/// [e_a, f_p, f_q] = −Σ_m C_a^{pqm} e_m
/// ```
///
/// where `T` and `C` are the structure constants of `a` and `dual`.
pub fn build_double_unchecked<S: Ring>(
    a: &ThreeLieAlgebra<S>,
    dual: &ThreeLieAlgebra<S>,
) -> Result<DoubleAlgebra<S>> {
    let n = a.dim();
    if dual.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: dual.dim(),
        });
    }
    let mut d = ThreeLieAlgebra::new(2 * n);
    for (&[i, j, k], value) in a.canonical_brackets() {
        let mut lifted = vec![S::zero(); 2 * n];
        lifted[..n].clone_from_slice(value);
        d.set_bracket(i, j, k, lifted)?;
    }
    for (&[p, q, r], value) in dual.canonical_brackets() {
        let mut lifted = vec![S::zero(); 2 * n];
        lifted[n..].clone_from_slice(value);
        d.set_bracket(n + p, n + q, n + r, lifted)?;
    }
    for x in 1..=n {
        for y in x + 1..=n {
            for r in 1..=n {
                let mut value = vec![S::zero(); 2 * n];
                for m in 1..=n {
                    value[n + m - 1] = -a.structure_constant(x, y, m, r);
                }
                d.set_bracket(x, y, n + r, value)?;
            }
        }
    }
    for x in 1..=n {
        for p in 1..=n {
            for q in p + 1..=n {
                let mut value = vec![S::zero(); 2 * n];
                for m in 1..=n {
                    value[m - 1] = -dual.structure_constant(p, q, m, x);
                }
                d.set_bracket(x, n + p, n + q, value)?;
            }
        }
    }
    Ok(DoubleAlgebra {
        base_dim: n,
        algebra: d,
        form: hyperbolic_form(n),
    })
}

/// Like [`build_double_unchecked`], but requires `dual` to satisfy the
/// Fundamental Identity first.  The Fundamental Identity of the
/// assembled double bracket is still *not* assumed; use
/// [`check_manin_triple`] to verify it.
pub fn build_double<S: Ring>(
    a: &ThreeLieAlgebra<S>,
    dual: &ThreeLieAlgebra<S>,
) -> Result<DoubleAlgebra<S>> {
    let fi = dual.check_fundamental_identity();
    if let Some(defect) = fi.defects.first() {
        return Err(Error::DualNotThreeLie {
            tuple: defect.tuple,
        });
    }
    build_double_unchecked(a, dual)
}

/// One violated invariance instance:
/// `([x1,x2,x3],x4) + ([x1,x2,x4],x3) ≠ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvarianceDefect<S> {
    pub tuple: [usize; 4],
    pub defect: S,
}

/// A nonzero pairing between two basis vectors of the same half.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingDefect<S> {
    pub pair: [usize; 2],
    pub value: S,
}

/// A basis triple whose bracket leaks into the forbidden half; `leak`
/// holds the offending half's coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct LeakDefect<S> {
    pub triple: [usize; 3],
    pub leak: Vec<S>,
}

/// Outcome of the six Manin-triple checks on a double algebra.
#[derive(Clone, Debug)]
pub struct ManinReport<S> {
    /// (1) Fundamental Identity of the double bracket.
    pub fundamental_identity: FiReport<S>,
    /// (2) The form is symmetric …
    pub form_symmetric: bool,
    /// … and exactly nondegenerate.
    pub form_nondegenerate: bool,
    /// (3) Invariance `([x1,x2,x3],x4) + ([x1,x2,x4],x3) = 0`.
    pub invariance_defects: Vec<InvarianceDefect<S>>,
    /// (4) Both halves are isotropic.
    pub isotropy_defects: Vec<PairingDefect<S>>,
    /// (5) Both halves are closed under the bracket.
    pub closure_defects: Vec<LeakDefect<S>>,
    /// (6) Mixed brackets stay out of the doubly-represented half:
    /// two vectors of one half and one of the other must produce
    /// nothing in the first half's complement… i.e. the projection
    /// conditions `pr₁[x1,y1,x2] = 0`, `pr₂[x2,y2,x1] = 0`.
    pub projection_defects: Vec<LeakDefect<S>>,
}

impl<S> ManinReport<S> {
    pub fn passed(&self) -> bool {
        self.fundamental_identity.passed()
            && self.form_symmetric
            && self.form_nondegenerate
            && self.invariance_defects.is_empty()
            && self.isotropy_defects.is_empty()
            && self.closure_defects.is_empty()
            && self.projection_defects.is_empty()
    }
}

fn pair_with_basis<S: Ring>(form: &BilinearForm<S>, v: &[S], j: usize) -> S {
    let mut out = S::zero();
    for (m, c) in v.iter().enumerate() {
        let g = form.gram().at(m, j - 1);
        if c.is_zero() || g.is_zero() {
            continue;
        }
        out = out + c.clone() * g.clone();
    }
    out
}

/// Runs the six Manin-triple checks on a double algebra: Fundamental
/// Identity, symmetry and exact nondegeneracy of the form, invariance
/// of the form, isotropy of both halves, closure of both halves, and
/// the mixed-bracket projection conditions.
pub fn check_manin_triple<S: IntegralDomain>(d: &DoubleAlgebra<S>) -> ManinReport<S> {
    let n = d.base_dim;
    let total = 2 * n;
    let algebra = &d.algebra;
    let form = &d.form;

    let fundamental_identity = algebra.check_fundamental_identity();
    let form_symmetric = form.is_symmetric();
    let form_nondegenerate = form.is_nondegenerate();

    // Invariance: the defect is antisymmetric in (x1,x2) and symmetric
    // in (x3,x4), so those index reductions are exhaustive.
    let mut invariance_defects = Vec::new();
    for x1 in 1..=total {
        for x2 in x1 + 1..=total {
            for x3 in 1..=total {
                for x4 in x3..=total {
                    let left = algebra.bracket_basis(x1, x2, x3);
                    let right = algebra.bracket_basis(x1, x2, x4);
                    let defect = pair_with_basis(form, &left, x4) + pair_with_basis(form, &right, x3);
                    if !defect.is_zero() {
                        invariance_defects.push(InvarianceDefect {
                            tuple: [x1, x2, x3, x4],
                            defect,
                        });
                    }
                }
            }
        }
    }

    let mut isotropy_defects = Vec::new();
    for (lo, hi) in [(1, n), (n + 1, total)] {
        for i in lo..=hi {
            for j in i..=hi {
                let value = form.basis_pairing(i, j);
                if !value.is_zero() {
                    isotropy_defects.push(PairingDefect {
                        pair: [i, j],
                        value: value.clone(),
                    });
                }
            }
        }
    }

    let mut closure_defects = Vec::new();
    let mut projection_defects = Vec::new();
    for i in 1..=total {
        for j in i + 1..=total {
            for k in j + 1..=total {
                let in_first = [i, j, k].iter().filter(|&&x| x <= n).count();
                let value = algebra.bracket_basis(i, j, k);
                let (leak, bucket) = match in_first {
                    // Three e's: nothing may land on the f half.
                    3 => (value[n..].to_vec(), &mut closure_defects),
                    // Two e's, one f: pr₁ of the bracket must vanish.
                    2 => (value[..n].to_vec(), &mut projection_defects),
                    // One e, two f's: pr₂ of the bracket must vanish.
                    1 => (value[n..].to_vec(), &mut projection_defects),
                    // Three f's: nothing may land on the e half.
                    _ => (value[..n].to_vec(), &mut closure_defects),
                };
                if leak.iter().any(|c| !c.is_zero()) {
                    bucket.push(LeakDefect {
                        triple: [i, j, k],
                        leak,
                    });
                }
            }
        }
    }

    ManinReport {
        fundamental_identity,
        form_symmetric,
        form_nondegenerate,
        invariance_defects,
        isotropy_defects,
        closure_defects,
        projection_defects,
    }
}

/// Applies `Φ_{e_s,e_t} = ad⊗id⊗id + id⊗ad⊗id + id⊗id⊗ad` (the adjoint
/// pair action summed over the three slots) to an arity-3 tensor.
pub fn phi_action<S: Ring>(
    a: &ThreeLieAlgebra<S>,
    s: usize,
    t: usize,
    w: &Tensor<S>,
) -> Result<Tensor<S>> {
    let mut out = Tensor::zero(3, a.dim());
    for slot in 1..=3 {
        out = out.add(&CubeRepresentation::AdjointOnSlot(slot).apply(a, s, t, w)?);
    }
    Ok(out)
}

/// A parametric family of coproducts attached to a catalog entry.  The
/// parameters are free symbolic scalars; substituting rational values
/// yields concrete coproducts.
#[derive(Clone, Debug)]
pub struct DeltaFamily {
    pub catalog_id: CatalogId,
    pub parameters: Vec<Scalar>,
    pub coproduct: Coproduct<Scalar>,
}

impl DeltaFamily {
    /// The parameter names in declaration order.
    pub fn parameter_names(&self) -> Vec<String> {
        self.parameters
            .iter()
            .map(|p| {
                p.parameters()
                    .first()
                    .cloned()
                    .expect("family parameters are single variables")
            })
            .collect()
    }

    /// Instantiates the family at rational parameter values.
    pub fn instantiate(
        &self,
        bindings: &BTreeMap<String, crate::scalar::Rational>,
    ) -> Coproduct<Scalar> {
        self.coproduct.substitute(bindings)
    }
}

fn family_component(n: usize, terms: &[(Scalar, [usize; 3])]) -> Tensor<Scalar> {
    let mut out = Tensor::zero(3, n);
    for (coeff, idx) in terms {
        let w: Tensor<Scalar> = wedge_basis(n, idx).expect("family indices are in range");
        out = out.add(&w.scale(coeff));
    }
    out
}

/// The classified coproduct family of a catalog entry, written on wedge
/// products of basis vectors.  The three-dimensional entry admits only
/// the zero coproduct; each four-dimensional entry carries the
/// parameter count certified by [`solve_delta_families`].
pub fn delta_family(id: CatalogId) -> DeltaFamily {
    let n = id.dim();
    let k = Scalar::var("k");
    let c = Scalar::var("c");
    let k1 = Scalar::var("k1");
    let k2 = Scalar::var("k2");
    let k3 = Scalar::var("k3");
    let c1 = Scalar::var("c1");
    let c2 = Scalar::var("c2");
    let c3 = Scalar::var("c3");
    let mut coproduct = Coproduct::zero(n);
    let parameters: Vec<Scalar> = match id {
        CatalogId::Dim3 => Vec::new(),
        CatalogId::Dim4N1 => {
            coproduct
                .set_component(1, family_component(n, &[(k.clone(), [2, 3, 4])]))
                .unwrap();
            coproduct
                .set_component(2, family_component(n, &[(k.clone(), [1, 3, 4])]))
                .unwrap();
            coproduct
                .set_component(3, family_component(n, &[(k.clone(), [1, 2, 4])]))
                .unwrap();
            coproduct
                .set_component(4, family_component(n, &[(k.clone(), [1, 2, 3])]))
                .unwrap();
            vec![k]
        }
        CatalogId::Dim4N2 => {
            coproduct
                .set_component(
                    2,
                    family_component(n, &[(k.clone(), [1, 2, 4]), (c1.clone(), [1, 3, 4])]),
                )
                .unwrap();
            coproduct
                .set_component(
                    3,
                    family_component(n, &[(-k.clone(), [1, 3, 4]), (c2.clone(), [1, 2, 4])]),
                )
                .unwrap();
            vec![k, c1, c2]
        }
        CatalogId::Dim4N3 => {
            coproduct
                .set_component(
                    2,
                    family_component(
                        n,
                        &[
                            (k1.clone(), [1, 2, 3]),
                            (k2.clone(), [1, 2, 4]),
                            (c1.clone(), [1, 3, 4]),
                        ],
                    ),
                )
                .unwrap();
            coproduct
                .set_component(
                    3,
                    family_component(
                        n,
                        &[
                            (k3.clone(), [1, 2, 3]),
                            (-k2.clone(), [1, 3, 4]),
                            (c2.clone(), [1, 2, 4]),
                        ],
                    ),
                )
                .unwrap();
            coproduct
                .set_component(
                    4,
                    family_component(
                        n,
                        &[
                            (-k3.clone(), [1, 2, 4]),
                            (k1.clone(), [1, 3, 4]),
                            (c3.clone(), [1, 2, 3]),
                        ],
                    ),
                )
                .unwrap();
            vec![k1, k2, k3, c1, c2, c3]
        }
        CatalogId::Dim4N4 | CatalogId::Dim4N5 | CatalogId::Dim4N6 => {
            coproduct
                .set_component(
                    3,
                    family_component(n, &[(k.clone(), [1, 2, 3]), (c1.clone(), [1, 2, 4])]),
                )
                .unwrap();
            coproduct
                .set_component(
                    4,
                    family_component(n, &[(-k.clone(), [1, 2, 4]), (c2.clone(), [1, 2, 3])]),
                )
                .unwrap();
            vec![k, c1, c2]
        }
        CatalogId::Dim4N7 => {
            coproduct
                .set_component(4, family_component(n, &[(c.clone(), [1, 2, 3])]))
                .unwrap();
            vec![c]
        }
    };
    DeltaFamily {
        catalog_id: id,
        parameters,
        coproduct,
    }
}

/// One violated constraint instance, indexed by `[a, b, c, p, q, r]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstraintDefect<S> {
    pub tuple: [usize; 6],
    pub defect: S,
}

/// Outcome of a constraint evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstraintReport<S> {
    pub defects: Vec<ConstraintDefect<S>>,
}

impl<S> ConstraintReport<S> {
    pub fn passed(&self) -> bool {
        self.defects.is_empty()
    }
}

fn require_compatible<S: Ring>(a: &ThreeLieAlgebra<S>, delta: &Coproduct<S>) -> Result<()> {
    if delta.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: delta.dim(),
        });
    }
    for (i, component) in delta.components() {
        if !component.is_fully_antisymmetric() {
            return Err(Error::NotAntisymmetric { component: i });
        }
    }
    Ok(())
}

/// First compatibility constraint between an algebra (structure
/// constants `T`) and a coproduct (coefficients `C`):
///
/// ```text
/// Σ_i T^i_{abc}·C_i^{pqr}
///   = Σ_i (T^r_{bci}·C_a^{pqi} + T^r_{cai}·C_b^{pqi} + T^r_{abi}·C_c^{pqi})
/// ```
///
/// checked for all `p, q, r` and `a < b < c`, which decides the general
/// case.
pub fn constraint_eq26<S: Ring>(
    a: &ThreeLieAlgebra<S>,
    delta: &Coproduct<S>,
) -> Result<ConstraintReport<S>> {
    require_compatible(a, delta)?;
    let n = a.dim();
    let mut defects = Vec::new();
    for x in 1..=n {
        for y in x + 1..=n {
            for z in y + 1..=n {
                for p in 1..=n {
                    for q in 1..=n {
                        for r in 1..=n {
                            let mut defect = S::zero();
                            for i in 1..=n {
                                defect = defect
                                    + a.structure_constant(x, y, z, i)
                                        * delta.coefficient(i, [p, q, r]);
                                defect = defect
                                    - a.structure_constant(y, z, i, r)
                                        * delta.coefficient(x, [p, q, i]);
                                defect = defect
                                    - a.structure_constant(z, x, i, r)
                                        * delta.coefficient(y, [p, q, i]);
                                defect = defect
                                    - a.structure_constant(x, y, i, r)
                                        * delta.coefficient(z, [p, q, i]);
                            }
                            if !defect.is_zero() {
                                defects.push(ConstraintDefect {
                                    tuple: [x, y, z, p, q, r],
                                    defect,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(ConstraintReport { defects })
}

/// Second compatibility constraint:
///
/// ```text
/// Σ_i T^i_{abc}·C_i^{pqr}
///   = Σ_i (T^r_{bci}·C_a^{pqi} + T^q_{bci}·C_a^{pir} + T^p_{bci}·C_a^{iqr})
/// ```
///
/// checked for all `a`, `b < c` and `p < q < r`, which decides the
/// general case.
pub fn constraint_eq27<S: Ring>(
    a: &ThreeLieAlgebra<S>,
    delta: &Coproduct<S>,
) -> Result<ConstraintReport<S>> {
    require_compatible(a, delta)?;
    let n = a.dim();
    let mut defects = Vec::new();
    for x in 1..=n {
        for y in 1..=n {
            for z in y + 1..=n {
                for p in 1..=n {
                    for q in p + 1..=n {
                        for r in q + 1..=n {
                            let mut defect = S::zero();
                            for i in 1..=n {
                                defect = defect
                                    + a.structure_constant(x, y, z, i)
                                        * delta.coefficient(i, [p, q, r]);
                                defect = defect
                                    - a.structure_constant(y, z, i, r)
                                        * delta.coefficient(x, [p, q, i]);
                                defect = defect
                                    - a.structure_constant(y, z, i, q)
                                        * delta.coefficient(x, [p, i, r]);
                                defect = defect
                                    - a.structure_constant(y, z, i, p)
                                        * delta.coefficient(x, [i, q, r]);
                            }
                            if !defect.is_zero() {
                                defects.push(ConstraintDefect {
                                    tuple: [x, y, z, p, q, r],
                                    defect,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(ConstraintReport { defects })
}

/// Coefficient row of a scalar that is homogeneous linear in the named
/// variables; `None` if any listed variable occurs with higher degree,
/// in a product with another listed variable, or if a term survives
/// outside their span.
pub fn linear_coefficient_row(value: &Scalar, vars: &[String]) -> Option<Vec<Scalar>> {
    let mut row = Vec::with_capacity(vars.len());
    let mut remainder = value.clone();
    for name in vars {
        let coeff = value.linear_coefficient(name)?;
        remainder = &remainder - &(&coeff * &Scalar::var(name));
        row.push(coeff);
    }
    if remainder.is_zero() {
        Some(row)
    } else {
        None
    }
}

/// A classified family together with its exact completeness
/// certificate: the null space of the first-constraint linear system in
/// the unknown coproduct coefficients.
#[derive(Clone, Debug)]
pub struct DeltaFamilySolution {
    pub family: DeltaFamily,
    /// Dimension of the exact solution space of the first constraint
    /// over antisymmetric coproducts.
    pub null_space_dim: usize,
    /// Number of parameters of the recorded family.
    pub family_dimension: usize,
    /// Whether the symbolic family satisfies the first constraint.
    pub family_in_null_space: bool,
    /// Whether the family's parameter directions are linearly
    /// independent.
    pub generators_independent: bool,
}

impl DeltaFamilySolution {
    /// True when the family is a basis of the whole solution space.
    pub fn family_spans_null_space(&self) -> bool {
        self.family_in_null_space
            && self.generators_independent
            && self.family_dimension == self.null_space_dim
    }
}

/// Returns the catalog entry's coproduct family and certifies its
/// completeness: a generic antisymmetric coproduct with one unknown per
/// `(i, p<q<r)` is pushed through the first constraint, the resulting
/// exact linear system is solved, and the null-space dimension is
/// compared against the family.
pub fn solve_delta_families(id: CatalogId) -> DeltaFamilySolution {
    let a = catalog::algebra(id);
    let n = a.dim();

    // Generic antisymmetric coproduct: one unknown per component and
    // strictly increasing triple.
    let mut unknowns: Vec<String> = Vec::new();
    let mut generic = Coproduct::zero(n);
    for i in 1..=n {
        let mut component = Tensor::zero(3, n);
        for p in 1..=n {
            for q in p + 1..=n {
                for r in q + 1..=n {
                    let name = format!("y_{i}_{p}_{q}_{r}");
                    let w: Tensor<Scalar> = wedge_basis(n, &[p, q, r]).unwrap();
                    component = component.add(&w.scale(&Scalar::var(&name)));
                    unknowns.push(name);
                }
            }
        }
        generic.set_component(i, component).unwrap();
    }

    let report = constraint_eq26(&a, &generic).expect("generic coproduct is antisymmetric");
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for defect in &report.defects {
        let row = linear_coefficient_row(&defect.defect, &unknowns)
            .expect("constraint defects are linear in the unknowns");
        rows.push(row);
    }
    let null_space_dim = if rows.is_empty() {
        unknowns.len()
    } else {
        null_space(&Matrix::from_rows(rows)).len()
    };

    let family = delta_family(id);
    let family_dimension = family.parameters.len();
    let family_in_null_space = constraint_eq26(&a, &family.coproduct)
        .expect("family components are antisymmetric")
        .passed();

    // Parameter directions as vectors over the same unknown ordering.
    let names = family.parameter_names();
    let mut generator_rows: Vec<Vec<Scalar>> = vec![Vec::new(); names.len()];
    for i in 1..=n {
        for p in 1..=n {
            for q in p + 1..=n {
                for r in q + 1..=n {
                    let coeff = family.coproduct.coefficient(i, [p, q, r]);
                    for (g, name) in names.iter().enumerate() {
                        let entry = coeff
                            .linear_coefficient(name)
                            .expect("family coefficients are linear in the parameters");
                        generator_rows[g].push(entry);
                    }
                }
            }
        }
    }
    let generators_independent = if family_dimension == 0 {
        true
    } else {
        rank(&Matrix::from_rows(generator_rows)) == family_dimension
    };

    DeltaFamilySolution {
        family,
        null_space_dim,
        family_dimension,
        family_in_null_space,
        generators_independent,
    }
}
