//! 1-cocycle verification on the triple tensor power and the local
//! cocycle bialgebra check: each induced coproduct must be a 1-cocycle
//! for its slot action, and the total coproduct must dualize to a
//! ternary algebra satisfying the Fundamental Identity.

use crate::algebra::{FiReport, Representation, ThreeLieAlgebra};
use crate::cybe::Coproduct;
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::tensor::Tensor;

/// A linear map `A → A⊗A⊗A`, stored through its basis images.
pub type LinearMapToTensor3<S> = Coproduct<S>;

/// A representation of basis pairs on the triple tensor power `A⊗A⊗A`,
/// either one of the three canonical slot actions or explicit matrices
/// on the flattened `n³`-dimensional carrier.
#[derive(Clone, Debug)]
pub enum CubeRepresentation<S> {
    /// `ad⊗id⊗id`, `id⊗ad⊗id`, or `id⊗id⊗ad` according to
    /// `slot ∈ {1, 2, 3}`; the adjoint action is taken from the algebra
    /// supplied at application time.
    AdjointOnSlot(usize),
    /// Arbitrary matrices on the flattened tensor cube; the basis tuple
    /// `(i1,i2,i3)` sits at position `(i1−1)·n² + (i2−1)·n + (i3−1)`.
    Explicit(Representation<S>),
}

fn flatten<S: Ring>(w: &Tensor<S>) -> Vec<S> {
    let n = w.dim();
    let mut v = vec![S::zero(); n * n * n];
    for (idx, c) in w.terms() {
        v[(idx[0] - 1) * n * n + (idx[1] - 1) * n + (idx[2] - 1)] = c.clone();
    }
    v
}

fn unflatten<S: Ring>(n: usize, v: &[S]) -> Tensor<S> {
    let mut out = Tensor::zero(3, n);
    for (pos, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let idx = [pos / (n * n) + 1, (pos / n) % n + 1, pos % n + 1];
        out.add_term_unchecked(&idx, c.clone());
    }
    out
}

impl<S: Ring> CubeRepresentation<S> {
    /// Applies the operator for the basis pair `(e_s, e_t)` to an
    /// arity-3 tensor.
    pub fn apply(
        &self,
        a: &ThreeLieAlgebra<S>,
        s: usize,
        t: usize,
        w: &Tensor<S>,
    ) -> Result<Tensor<S>> {
        let n = a.dim();
        for idx in [s, t] {
            if idx < 1 || idx > n {
                return Err(Error::IndexOutOfRange { index: idx, dim: n });
            }
        }
        if w.arity() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                got: w.arity(),
            });
        }
        if w.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: w.dim(),
            });
        }
        match self {
            CubeRepresentation::AdjointOnSlot(slot) => {
                if !(1..=3).contains(slot) {
                    return Err(Error::SlotOutOfRange {
                        slot: *slot,
                        arity: 3,
                    });
                }
                let mut out = Tensor::zero(3, n);
                for (idx, c) in w.terms() {
                    let image = a.bracket_basis(s, t, idx[slot - 1]);
                    for (u0, b) in image.iter().enumerate() {
                        if b.is_zero() {
                            continue;
                        }
                        let mut moved = idx.clone();
                        moved[slot - 1] = u0 + 1;
                        out.add_term_unchecked(&moved, c.clone() * b.clone());
                    }
                }
                Ok(out)
            }
            CubeRepresentation::Explicit(rep) => {
                if rep.algebra_dim() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        got: rep.algebra_dim(),
                    });
                }
                if rep.carrier_dim() != n * n * n {
                    return Err(Error::DimensionMismatch {
                        expected: n * n * n,
                        got: rep.carrier_dim(),
                    });
                }
                Ok(unflatten(n, &rep.at(s, t).apply(&flatten(w))))
            }
        }
    }
}

/// Builds the explicit matrix form of the slot action on the flattened
/// tensor cube.  Mostly useful for cross-checking the direct slot
/// application against generic representation machinery.
pub fn slot_representation<S: Ring>(
    a: &ThreeLieAlgebra<S>,
    slot: usize,
) -> Result<Representation<S>> {
    if !(1..=3).contains(&slot) {
        return Err(Error::SlotOutOfRange { slot, arity: 3 });
    }
    let n = a.dim();
    let action = CubeRepresentation::AdjointOnSlot(slot);
    let mut rep = Representation::new(n, n * n * n);
    for s in 1..=n {
        for t in s + 1..=n {
            let mut m = crate::linalg::Matrix::zero(n * n * n, n * n * n);
            for i1 in 1..=n {
                for i2 in 1..=n {
                    for i3 in 1..=n {
                        let col = (i1 - 1) * n * n + (i2 - 1) * n + (i3 - 1);
                        let basis = Tensor::basis(n, &[i1, i2, i3])?;
                        let image = action.apply(a, s, t, &basis)?;
                        for (row, c) in flatten(&image).into_iter().enumerate() {
                            if !c.is_zero() {
                                m.set(row, col, c);
                            }
                        }
                    }
                }
            }
            rep.set(s, t, m)?;
        }
    }
    Ok(rep)
}

/// One violated cocycle instance: the basis triple and the tensor by
/// which the identity fails.
#[derive(Clone, Debug, PartialEq)]
pub struct CocycleDefect<S> {
    pub tuple: [usize; 3],
    pub defect: Tensor<S>,
}

/// Outcome of a 1-cocycle check over all strictly increasing basis
/// triples.
#[derive(Clone, Debug, PartialEq)]
pub struct CocycleReport<S> {
    pub defects: Vec<CocycleDefect<S>>,
}

impl<S> CocycleReport<S> {
    pub fn passed(&self) -> bool {
        self.defects.is_empty()
    }
}

/// Verifies the 1-cocycle identity
///
/// ```text
/// f([x1,x2,x3]) = ρ(x1,x2)f(x3) + ρ(x2,x3)f(x1) + ρ(x3,x1)f(x2)
/// ```
///
/// on all basis triples `x1 < x2 < x3`; both sides are multilinear and
/// alternating in `(x1,x2,x3)`, so those triples decide the identity.
pub fn check_one_cocycle<S: Ring>(
    a: &ThreeLieAlgebra<S>,
    rho: &CubeRepresentation<S>,
    f: &LinearMapToTensor3<S>,
) -> Result<CocycleReport<S>> {
    let n = a.dim();
    if f.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: f.dim(),
        });
    }
    let mut defects = Vec::new();
    for x1 in 1..=n {
        for x2 in x1 + 1..=n {
            for x3 in x2 + 1..=n {
                let lhs = f.apply(&a.bracket_basis(x1, x2, x3))?;
                let rhs = rho
                    .apply(a, x1, x2, f.component(x3))?
                    .add(&rho.apply(a, x2, x3, f.component(x1))?)
                    .add(&rho.apply(a, x3, x1, f.component(x2))?);
                let defect = lhs.sub(&rhs);
                if !defect.is_zero() {
                    defects.push(CocycleDefect {
                        tuple: [x1, x2, x3],
                        defect,
                    });
                }
            }
        }
    }
    Ok(CocycleReport { defects })
}

/// Builds the ternary algebra on the dual space from an alternating
/// coproduct: the dual structure constants are `T*^i_{pqr} = C_i^{pqr}`
/// read at `p < q < r`.
pub fn dual_algebra<S: Ring>(delta: &Coproduct<S>) -> Result<ThreeLieAlgebra<S>> {
    let n = delta.dim();
    for (i, component) in delta.components() {
        if !component.is_fully_antisymmetric() {
            return Err(Error::NotAntisymmetric { component: i });
        }
    }
    let mut dual = ThreeLieAlgebra::new(n);
    for p in 1..=n {
        for q in p + 1..=n {
            for r in q + 1..=n {
                let value: Vec<S> = (1..=n).map(|i| delta.coefficient(i, [p, q, r])).collect();
                dual.set_bracket(p, q, r, value)?;
            }
        }
    }
    Ok(dual)
}

/// Outcome of the local cocycle bialgebra check.
#[derive(Clone, Debug)]
pub struct LocalCocycleReport<S> {
    /// 1-cocycle reports for the three maps against their slot actions.
    pub cocycle_reports: [CocycleReport<S>; 3],
    /// Basis indices whose total-coproduct component fails to be fully
    /// antisymmetric.
    pub non_alternating_components: Vec<usize>,
    /// Fundamental Identity report for the dual algebra; absent when
    /// antisymmetry already failed and the dual cannot be read off.
    pub dual_fi: Option<FiReport<S>>,
}

impl<S> LocalCocycleReport<S> {
    pub fn passed(&self) -> bool {
        self.cocycle_reports.iter().all(CocycleReport::passed)
            && self.non_alternating_components.is_empty()
            && self.dual_fi.as_ref().is_some_and(FiReport::passed)
    }
}

/// Checks that `(A, Δ1 + Δ2 + Δ3)` is a local cocycle bialgebra: each
/// `Δm` must be a 1-cocycle for the adjoint action on slot `m`, every
/// component of the sum must be fully antisymmetric, and the dual of
/// the sum must satisfy the Fundamental Identity.
pub fn check_local_cocycle_bialgebra<S: Ring>(
    a: &ThreeLieAlgebra<S>,
    d1: &LinearMapToTensor3<S>,
    d2: &LinearMapToTensor3<S>,
    d3: &LinearMapToTensor3<S>,
) -> Result<LocalCocycleReport<S>> {
    let cocycle_reports = [
        check_one_cocycle(a, &CubeRepresentation::AdjointOnSlot(1), d1)?,
        check_one_cocycle(a, &CubeRepresentation::AdjointOnSlot(2), d2)?,
        check_one_cocycle(a, &CubeRepresentation::AdjointOnSlot(3), d3)?,
    ];
    let total = d1.add(d2).add(d3);
    let non_alternating_components: Vec<usize> = total
        .components()
        .filter(|(_, t)| !t.is_fully_antisymmetric())
        .map(|(i, _)| i)
        .collect();
    let dual_fi = if non_alternating_components.is_empty() {
        Some(dual_algebra(&total)?.check_fundamental_identity())
    } else {
        None
    };
    Ok(LocalCocycleReport {
        cocycle_reports,
        non_alternating_components,
        dual_fi,
    })
}
