//! Shared helpers for the integration tests: seeded random data and
//! per-catalog samplers of exact Yang–Baxter solutions.
#![allow(dead_code)] // each test binary uses its own subset

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use threelie::catalog;
use threelie::scalar::ratio;
use threelie::{CatalogId, RMatrix, Rational, RationalAlgebra, Scalar};

pub mod tables;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small random rational with denominator at most 4.
pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4))
}

pub fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let q = random_rational(rng);
        if q != ratio(0, 1) {
            return q;
        }
    }
}

/// A random skew-symmetric rational matrix.
pub fn random_skew_rational(dim: usize, rng: &mut ChaCha8Rng) -> RMatrix<Rational> {
    let mut upper = Vec::new();
    for i in 1..=dim {
        for j in (i + 1)..=dim {
            upper.push((i, j, random_rational(rng)));
        }
    }
    RMatrix::skew_from_upper(dim, &upper).expect("upper-triangular entries")
}

pub fn random_skew_scalar(dim: usize, rng: &mut ChaCha8Rng) -> RMatrix<Scalar> {
    random_skew_rational(dim, rng).map(|q| Scalar::constant(q.clone()))
}

/// A random square rational matrix with no symmetry imposed.
pub fn random_full_rational(dim: usize, rng: &mut ChaCha8Rng) -> RMatrix<Rational> {
    let mut r = RMatrix::zero(dim);
    for i in 1..=dim {
        for j in 1..=dim {
            r.set_entry(i, j, random_rational(rng)).expect("in range");
        }
    }
    r
}

pub fn random_full_scalar(dim: usize, rng: &mut ChaCha8Rng) -> RMatrix<Scalar> {
    random_full_rational(dim, rng).map(|q| Scalar::constant(q.clone()))
}

/// A random skew r-matrix with zero Yang–Baxter residual for the given
/// catalog entry, together with the rational algebra it solves (the
/// parametric entry is instantiated at a random nonzero value).
///
/// Entries without residual conditions get an unconstrained skew
/// matrix.  For the three entries whose solutions form a hypersurface,
/// both branches are sampled: the distinguished entry set to zero, or
/// the complementary relation solved for `a_1_4`.
pub fn random_solution(
    id: CatalogId,
    rng: &mut ChaCha8Rng,
) -> (RationalAlgebra, RMatrix<Rational>) {
    let alpha = if id.has_parameter() {
        Some(random_nonzero_rational(rng))
    } else {
        None
    };
    let algebra = catalog::algebra_rational(id, alpha.as_ref()).expect("parameter supplied");
    let dim = id.dim();
    let r = match id {
        CatalogId::Dim4N2 => constrained_skew(rng, [2, 3]),
        CatalogId::Dim4N5 | CatalogId::Dim4N6 => constrained_skew(rng, [3, 4]),
        _ => random_skew_rational(dim, rng),
    };
    (algebra, r)
}

/// A skew matrix on four basis vectors satisfying
/// `a_pivot * (a_1_2 a_3_4 + a_1_4 a_2_3 - a_1_3 a_2_4) = 0`,
/// where `a_pivot` is the entry at `pivot`.
fn constrained_skew(rng: &mut ChaCha8Rng, pivot: [usize; 2]) -> RMatrix<Rational> {
    let a12 = random_rational(rng);
    let a13 = random_rational(rng);
    let a24 = random_rational(rng);
    let a34 = random_rational(rng);
    let mut entries = vec![
        (1, 2, a12.clone()),
        (1, 3, a13.clone()),
        (2, 4, a24.clone()),
        (3, 4, a34.clone()),
    ];
    if rng.gen_bool(0.5) {
        // First branch: kill the distinguished entry, leave the rest free.
        entries.retain(|(i, j, _)| [*i, *j] != pivot);
        entries.push((pivot[0], pivot[1], ratio(0, 1)));
        entries.push((1, 4, random_rational(rng)));
        if pivot != [2, 3] {
            entries.push((2, 3, random_rational(rng)));
        }
    } else {
        // Second branch: solve the quadratic relation for `a_1_4`.
        let a23 = random_nonzero_rational(rng);
        let a14 = (a13.clone() * a24.clone() - a12.clone() * a34.clone()) / a23.clone();
        entries.push((2, 3, a23));
        entries.push((1, 4, a14));
    }
    RMatrix::skew_from_upper(4, &entries).expect("six upper entries")
}
