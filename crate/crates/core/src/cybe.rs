//! The ternary classical Yang-Baxter machinery: alternating
//! `D`-coefficients, the naive and simplified residuals of `[[r,r,r]]`,
//! parametric solvability conditions, and the coproducts induced by a
//! solution tensor `r`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::ThreeLieAlgebra;
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::scalar::Scalar;
use crate::tensor::{signed_permutations, wedge_basis, RMatrix, Tensor};

fn check_range(dim: usize, indices: &[usize]) -> Result<()> {
    for &i in indices {
        if i < 1 || i > dim {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
    }
    Ok(())
}

/// The alternating coefficient
/// `D^{ijk}_{pqr} = Σ_σ sgn(σ)·a^{σ(i)p}·a^{σ(j)q}·a^{σ(k)r}`,
/// where `σ` runs over the six arrangements of the upper indices.
///
/// For skew-symmetric `r` this is antisymmetric in the upper triple, in
/// the lower triple, and under swapping the two triples.
pub fn d_coefficient<S: Ring>(r: &RMatrix<S>, upper: [usize; 3], lower: [usize; 3]) -> Result<S> {
    check_range(r.dim(), &upper)?;
    check_range(r.dim(), &lower)?;
    let mut value = S::zero();
    for (perm, sign) in signed_permutations(3) {
        let mut product = S::one();
        let mut vanished = false;
        for slot in 0..3 {
            let factor = r.entry(upper[perm[slot]], lower[slot]);
            if factor.is_zero() {
                vanished = true;
                break;
            }
            product = product * factor.clone();
        }
        if vanished {
            continue;
        }
        value = if sign < 0 {
            value - product
        } else {
            value + product
        };
    }
    Ok(value)
}

/// The two-index minor `D^{ij}_{pq} = a^{ip}·a^{jq} − a^{jp}·a^{iq}`.
pub fn d2_coefficient<S: Ring>(r: &RMatrix<S>, upper: [usize; 2], lower: [usize; 2]) -> Result<S> {
    check_range(r.dim(), &upper)?;
    check_range(r.dim(), &lower)?;
    let [i, j] = upper;
    let [p, q] = lower;
    Ok(r.entry(i, p).clone() * r.entry(j, q).clone()
        - r.entry(j, p).clone() * r.entry(i, q).clone())
}

/// A `D`-coefficient together with the index triples that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct DCoefficient<S> {
    pub upper: [usize; 3],
    pub lower: [usize; 3],
    pub value: S,
}

impl<S: Ring> DCoefficient<S> {
    /// Evaluates the six-term signed sum for the given index triples.
    pub fn compute(r: &RMatrix<S>, upper: [usize; 3], lower: [usize; 3]) -> Result<Self> {
        Ok(DCoefficient {
            upper,
            lower,
            value: d_coefficient(r, upper, lower)?,
        })
    }
}

fn add_bracket_term<S: Ring>(
    out: &mut Tensor<S>,
    a: &ThreeLieAlgebra<S>,
    coeff: &S,
    bracket: [usize; 3],
    fixed: [usize; 3],
    bracket_slot: usize,
) {
    let value = a.bracket_basis(bracket[0], bracket[1], bracket[2]);
    for (m0, c) in value.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut idx = [0usize; 4];
        idx[bracket_slot] = m0 + 1;
        let mut fill = fixed.iter();
        for (slot, entry) in idx.iter_mut().enumerate() {
            if slot != bracket_slot {
                *entry = *fill.next().expect("three fixed slots");
            }
        }
        out.add_term_unchecked(&idx, coeff.clone() * c.clone());
    }
}

/// Brute-force expansion of the residual `[[r,r,r]]` for an arbitrary
/// (not necessarily skew-symmetric) tensor `r = Σ a^{ij} e_i⊗e_j`.
///
/// Writing each of the three copies of `r` with its own summation pair,
/// the residual is the sum over all `(i1,j1,i2,j2,i3,j3)` of
/// `a^{i1j1}·a^{i2j2}·a^{i3j3}` times the four placements
///
/// ```text
/// [e_{i1},e_{i2},e_{i3}] ⊗ e_{j1} ⊗ e_{j2} ⊗ e_{j3}
/// e_{i1} ⊗ [e_{j1},e_{i2},e_{i3}] ⊗ e_{j2} ⊗ e_{j3}
/// e_{i1} ⊗ e_{i2} ⊗ [e_{j1},e_{j2},e_{i3}] ⊗ e_{j3}
/// e_{i1} ⊗ e_{i2} ⊗ e_{i3} ⊗ [e_{j1},e_{j2},e_{j3}]
/// ```
///
/// This is the slow, definition-level path used as the oracle for
/// [`cybe_residual_skew`].
pub fn cybe_residual_naive<S: Ring>(a: &ThreeLieAlgebra<S>, r: &RMatrix<S>) -> Result<Tensor<S>> {
    let n = a.dim();
    if r.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: r.dim(),
        });
    }
    let mut support: Vec<(usize, usize, &S)> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let entry = r.entry(i, j);
            if !entry.is_zero() {
                support.push((i, j, entry));
            }
        }
    }
    let mut out = Tensor::zero(4, n);
    for &(i1, j1, c1) in &support {
        for &(i2, j2, c2) in &support {
            let c12 = c1.clone() * c2.clone();
            for &(i3, j3, c3) in &support {
                let coeff = c12.clone() * c3.clone();
                add_bracket_term(&mut out, a, &coeff, [i1, i2, i3], [j1, j2, j3], 0);
                add_bracket_term(&mut out, a, &coeff, [j1, i2, i3], [i1, j2, j3], 1);
                add_bracket_term(&mut out, a, &coeff, [j1, j2, i3], [i1, i2, j3], 2);
                add_bracket_term(&mut out, a, &coeff, [j1, j2, j3], [i1, i2, i3], 3);
            }
        }
    }
    Ok(out)
}

/// Simplified residual for skew-symmetric `r`:
///
/// ```text
/// [[r,r,r]] = Σ_{p<q<s} Σ_{i<j<k} Σ_l D^{ijk}_{pqs}·T^l_{ijk} e_l∧e_p∧e_q∧e_s
/// ```
///
/// where `T^l_{ijk}` are the structure constants of the bracket.  The
/// skewness of `r` is a checked precondition; for general `r` use
/// [`cybe_residual_naive`].
pub fn cybe_residual_skew<S: Ring>(a: &ThreeLieAlgebra<S>, r: &RMatrix<S>) -> Result<Tensor<S>> {
    let n = a.dim();
    if r.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: r.dim(),
        });
    }
    r.require_skew_symmetric()?;
    let mut out = Tensor::zero(4, n);
    for p in 1..=n {
        for q in p + 1..=n {
            for s in q + 1..=n {
                for (&[i, j, k], value) in a.canonical_brackets() {
                    let d = d_coefficient(r, [i, j, k], [p, q, s])?;
                    if d.is_zero() {
                        continue;
                    }
                    for (l0, t) in value.iter().enumerate() {
                        if t.is_zero() {
                            continue;
                        }
                        let w: Tensor<S> = wedge_basis(n, &[l0 + 1, p, q, s])?;
                        out = out.add(&w.scale(&(d.clone() * t.clone())));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Polynomial conditions on a symbolic skew-symmetric `r` that are
/// equivalent to `[[r,r,r]] = 0`.
///
/// The residual is computed for the fully symbolic skew matrix with
/// entries `a_i_j` (`i < j`, the lower triangle filled with the
/// negatives), and its coefficients are read off on the strictly
/// increasing index tuples, which determine an alternating tensor
/// completely.  Each generator is normalized by dividing by its leading
/// coefficient; duplicates up to a rational multiple are dropped.  An
/// empty list means every skew-symmetric `r` is a solution.
pub fn cybe_conditions(a: &ThreeLieAlgebra<Scalar>) -> Vec<Scalar> {
    let n = a.dim();
    let r = RMatrix::symbolic_skew(n);
    let residual = cybe_residual_skew(a, &r)
        .expect("the symbolic skew matrix matches the algebra dimension");
    let mut generators: BTreeMap<String, Scalar> = BTreeMap::new();
    for (idx, coeff) in residual.terms() {
        if !idx.windows(2).all(|w| w[0] < w[1]) {
            continue;
        }
        if coeff.is_zero() {
            continue;
        }
        let monic = coeff.monic();
        generators.entry(monic.to_string()).or_insert(monic);
    }
    generators.into_values().collect()
}

/// A linear map `A → A⊗A⊗A` recorded through its values on the basis:
/// component `i` is the arity-3 tensor `Δ(e_i) = Σ C_i^{pqr} e_p⊗e_q⊗e_r`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coproduct<S> {
    dim: usize,
    components: Vec<Tensor<S>>,
}

impl<S: Ring> Coproduct<S> {
    /// The zero map on an `dim`-dimensional space.
    pub fn zero(dim: usize) -> Self {
        Coproduct {
            dim,
            components: vec![Tensor::zero(3, dim); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The image of the `i`-th basis vector (1-based).
    pub fn component(&self, i: usize) -> &Tensor<S> {
        assert!(
            (1..=self.dim).contains(&i),
            "basis index {i} out of range 1..={}",
            self.dim
        );
        &self.components[i - 1]
    }

    /// Replaces the image of the `i`-th basis vector (1-based).
    pub fn set_component(&mut self, i: usize, tensor: Tensor<S>) -> Result<()> {
        if i < 1 || i > self.dim {
            return Err(Error::IndexOutOfRange {
                index: i,
                dim: self.dim,
            });
        }
        if tensor.arity() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                got: tensor.arity(),
            });
        }
        if tensor.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: tensor.dim(),
            });
        }
        self.components[i - 1] = tensor;
        Ok(())
    }

    /// Iterates over `(i, Δ(e_i))` pairs, `i` 1-based and ascending.
    pub fn components(&self) -> impl Iterator<Item = (usize, &Tensor<S>)> {
        self.components.iter().enumerate().map(|(i, t)| (i + 1, t))
    }

    /// The structure coefficient `C_i^{pqr}`.
    pub fn coefficient(&self, i: usize, pqr: [usize; 3]) -> S {
        self.component(i).coeff(&pqr)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Tensor::is_zero)
    }

    /// True when every component is a fully antisymmetric tensor.
    pub fn is_alternating(&self) -> bool {
        self.components.iter().all(Tensor::is_fully_antisymmetric)
    }

    pub fn add(&self, other: &Coproduct<S>) -> Coproduct<S> {
        assert_eq!(self.dim, other.dim, "coproduct dimensions differ");
        Coproduct {
            dim: self.dim,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Coproduct<S>) -> Coproduct<S> {
        assert_eq!(self.dim, other.dim, "coproduct dimensions differ");
        Coproduct {
            dim: self.dim,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, by: &S) -> Coproduct<S> {
        Coproduct {
            dim: self.dim,
            components: self.components.iter().map(|t| t.scale(by)).collect(),
        }
    }

    /// Applies the map to a coordinate vector by linearity.
    pub fn apply(&self, x: &[S]) -> Result<Tensor<S>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut out = Tensor::zero(3, self.dim);
        for (c, t) in x.iter().zip(&self.components) {
            if c.is_zero() {
                continue;
            }
            out = out.add(&t.scale(c));
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient.
    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> Coproduct<T> {
        Coproduct {
            dim: self.dim,
            components: self.components.iter().map(|t| t.map(&f)).collect(),
        }
    }
}

impl Coproduct<Scalar> {
    /// Substitutes rational values for symbolic parameters in every
    /// component.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<String, crate::scalar::Rational>,
    ) -> Coproduct<Scalar> {
        self.map(|c| c.substitute(bindings))
    }
}

/// The three coproducts induced by `r = Σ a^{ij} e_i⊗e_j`:
///
/// ```text
/// Δ1(x) = Σ_{i,j,p,q} a^{ip}·a^{jq} [x,e_i,e_j] ⊗ e_p ⊗ e_q
/// Δ2 = φ13∘φ12∘Δ1        Δ3 = φ12∘φ13∘Δ1
/// ```
///
/// where `φst` swaps tensor slots `s` and `t`.  Each `Δm` is a 1-cocycle
/// for the action of the adjoint map on slot `m` of `A⊗A⊗A`.
pub fn induced_coproduct_components<S: Ring>(
    a: &ThreeLieAlgebra<S>,
    r: &RMatrix<S>,
) -> Result<(Coproduct<S>, Coproduct<S>, Coproduct<S>)> {
    let n = a.dim();
    if r.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: r.dim(),
        });
    }
    let mut delta1 = Coproduct::zero(n);
    for t in 1..=n {
        let mut image = Tensor::zero(3, n);
        for i in 1..=n {
            for j in 1..=n {
                let bracket = a.bracket_basis(t, i, j);
                if bracket.iter().all(Zero::is_zero) {
                    continue;
                }
                for p in 1..=n {
                    let aip = r.entry(i, p);
                    if aip.is_zero() {
                        continue;
                    }
                    for q in 1..=n {
                        let ajq = r.entry(j, q);
                        if ajq.is_zero() {
                            continue;
                        }
                        let coeff = aip.clone() * ajq.clone();
                        for (m0, c) in bracket.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            image.add_term_unchecked(&[m0 + 1, p, q], coeff.clone() * c.clone());
                        }
                    }
                }
            }
        }
        delta1.set_component(t, image)?;
    }
    let mut delta2 = Coproduct::zero(n);
    let mut delta3 = Coproduct::zero(n);
    for (t, image) in delta1.components() {
        delta2.set_component(t, image.permute_factors(1, 2)?.permute_factors(1, 3)?)?;
        delta3.set_component(t, image.permute_factors(1, 3)?.permute_factors(1, 2)?)?;
    }
    Ok((delta1, delta2, delta3))
}

/// The total coproduct `Δ = Δ1 + Δ2 + Δ3` assembled directly from
/// two-index minors, valid for skew-symmetric `r`:
///
/// ```text
/// Δ(e_t) = Σ_{i<j} Σ_{p<q} D^{ij}_{pq} Σ_m T^m_{tij} e_m∧e_p∧e_q
/// ```
pub fn induced_coproduct_wedge<S: Ring>(
    a: &ThreeLieAlgebra<S>,
    r: &RMatrix<S>,
) -> Result<Coproduct<S>> {
    let n = a.dim();
    if r.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: r.dim(),
        });
    }
    r.require_skew_symmetric()?;
    let mut delta = Coproduct::zero(n);
    for t in 1..=n {
        let mut image = Tensor::zero(3, n);
        for i in 1..=n {
            for j in i + 1..=n {
                let bracket = a.bracket_basis(t, i, j);
                if bracket.iter().all(Zero::is_zero) {
                    continue;
                }
                for p in 1..=n {
                    for q in p + 1..=n {
                        let minor = d2_coefficient(r, [i, j], [p, q])?;
                        if minor.is_zero() {
                            continue;
                        }
                        for (m0, c) in bracket.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let w: Tensor<S> = wedge_basis(n, &[m0 + 1, p, q])?;
                            image = image.add(&w.scale(&(minor.clone() * c.clone())));
                        }
                    }
                }
            }
        }
        delta.set_component(t, image)?;
    }
    Ok(delta)
}
