//! Built-in catalog of 3-Lie algebras with nontrivial brackets in
//! dimensions 3 and 4, keyed by stable string ids.
//!
//! The dim4-6 entry carries a free nonzero parameter `alpha` in its table;
//! it is kept symbolic in the generic constructor and must be supplied when
//! instantiating over the rationals.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::algebra::ThreeLieAlgebra;
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CatalogId {
    Dim3,
    Dim4N1,
    Dim4N2,
    Dim4N3,
    Dim4N4,
    Dim4N5,
    Dim4N6,
    Dim4N7,
}

pub const ALL_IDS: [CatalogId; 8] = [
    CatalogId::Dim3,
    CatalogId::Dim4N1,
    CatalogId::Dim4N2,
    CatalogId::Dim4N3,
    CatalogId::Dim4N4,
    CatalogId::Dim4N5,
    CatalogId::Dim4N6,
    CatalogId::Dim4N7,
];

impl CatalogId {
    pub fn as_str(self) -> &'static str {
        match self {
            CatalogId::Dim3 => "dim3",
            CatalogId::Dim4N1 => "dim4-1",
            CatalogId::Dim4N2 => "dim4-2",
            CatalogId::Dim4N3 => "dim4-3",
            CatalogId::Dim4N4 => "dim4-4",
            CatalogId::Dim4N5 => "dim4-5",
            CatalogId::Dim4N6 => "dim4-6",
            CatalogId::Dim4N7 => "dim4-7",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            CatalogId::Dim3 => 3,
            _ => 4,
        }
    }

    /// Whether the table contains the symbolic parameter `alpha`.
    pub fn has_parameter(self) -> bool {
        self == CatalogId::Dim4N6
    }

    /// Human-readable list of the nonzero canonical brackets.
    pub fn description(self) -> &'static str {
        match self {
            CatalogId::Dim3 => "[e1,e2,e3] = e1",
            CatalogId::Dim4N1 => {
                "[e1,e2,e3] = e4, [e1,e2,e4] = e3, [e1,e3,e4] = e2, [e2,e3,e4] = e1"
            }
            CatalogId::Dim4N2 => "[e1,e2,e3] = e1",
            CatalogId::Dim4N3 => "[e2,e3,e4] = e1",
            CatalogId::Dim4N4 => "[e2,e3,e4] = e1, [e1,e3,e4] = e2",
            CatalogId::Dim4N5 => "[e2,e3,e4] = e2, [e1,e3,e4] = e1",
            CatalogId::Dim4N6 => "[e2,e3,e4] = alpha*e1 + e2, [e1,e3,e4] = e2 (alpha nonzero)",
            CatalogId::Dim4N7 => "[e1,e2,e4] = e3, [e1,e3,e4] = e2, [e2,e3,e4] = e1",
        }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_IDS
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownCatalogId(s.to_string()))
    }
}

fn unit(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i - 1] = Scalar::int(1);
    v
}

/// The catalog algebra over symbolic scalars. Only dim4-6 actually uses a
/// symbol; every other table is constant.
pub fn algebra(id: CatalogId) -> ThreeLieAlgebra<Scalar> {
    let table: Vec<([usize; 3], Vec<Scalar>)> = match id {
        CatalogId::Dim3 => vec![([1, 2, 3], unit(3, 1))],
        CatalogId::Dim4N1 => vec![
            ([1, 2, 3], unit(4, 4)),
            ([1, 2, 4], unit(4, 3)),
            ([1, 3, 4], unit(4, 2)),
            ([2, 3, 4], unit(4, 1)),
        ],
        CatalogId::Dim4N2 => vec![([1, 2, 3], unit(4, 1))],
        CatalogId::Dim4N3 => vec![([2, 3, 4], unit(4, 1))],
        CatalogId::Dim4N4 => vec![([2, 3, 4], unit(4, 1)), ([1, 3, 4], unit(4, 2))],
        CatalogId::Dim4N5 => vec![([2, 3, 4], unit(4, 2)), ([1, 3, 4], unit(4, 1))],
        CatalogId::Dim4N6 => {
            let mut v234 = vec![Scalar::zero(); 4];
            v234[0] = Scalar::var("alpha");
            v234[1] = Scalar::int(1);
            vec![([2, 3, 4], v234), ([1, 3, 4], unit(4, 2))]
        }
        CatalogId::Dim4N7 => vec![
            ([1, 2, 4], unit(4, 3)),
            ([1, 3, 4], unit(4, 2)),
            ([2, 3, 4], unit(4, 1)),
        ],
    };
    ThreeLieAlgebra::with_brackets(id.dim(), table).unwrap()
}

/// Rational instantiation. `alpha` is required (and must be nonzero) for
/// dim4-6 and ignored elsewhere.
pub fn algebra_rational(
    id: CatalogId,
    alpha: Option<&Rational>,
) -> Result<ThreeLieAlgebra<Rational>> {
    let symbolic = algebra(id);
    if !id.has_parameter() {
        return Ok(symbolic.map(|s| {
            s.as_rational()
                .expect("constant catalog tables have rational entries")
        }));
    }
    let Some(alpha) = alpha else {
        return Err(Error::Parse(
            "catalog entry dim4-6 needs a value for alpha".to_string(),
        ));
    };
    if alpha.is_zero() {
        return Err(Error::Parse(
            "catalog entry dim4-6 requires a nonzero alpha".to_string(),
        ));
    }
    let bindings = std::collections::BTreeMap::from([("alpha".to_string(), alpha.clone())]);
    let mut out = ThreeLieAlgebra::new(4);
    for (&[i, j, k], value) in symbolic.canonical_brackets() {
        let v: Option<Vec<Rational>> = value
            .iter()
            .map(|s| s.substitute(&bindings).as_rational())
            .collect();
        let v = v.ok_or_else(|| {
            Error::Parse("alpha substitution left a symbolic entry".to_string())
        })?;
        out.set_bracket(i, j, k, v)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn ids_round_trip_through_strings() {
        for id in ALL_IDS {
            assert_eq!(id.as_str().parse::<CatalogId>().unwrap(), id);
        }
        assert!("dim4-9".parse::<CatalogId>().is_err());
    }

    #[test]
    fn every_entry_satisfies_the_fundamental_identity() {
        for id in ALL_IDS {
            let a = algebra(id);
            assert!(
                a.check_fundamental_identity().passed(),
                "catalog entry {id} fails"
            );
        }
    }

    #[test]
    fn rational_instantiation() {
        let a = algebra_rational(CatalogId::Dim4N4, None).unwrap();
        assert_eq!(a.bracket_basis(2, 3, 4)[0], rat(1));

        assert!(algebra_rational(CatalogId::Dim4N6, None).is_err());
        assert!(algebra_rational(CatalogId::Dim4N6, Some(&rat(0))).is_err());
        let b = algebra_rational(CatalogId::Dim4N6, Some(&rat(7))).unwrap();
        assert_eq!(b.bracket_basis(2, 3, 4), vec![rat(7), rat(1), rat(0), rat(0)]);
        assert!(b.check_fundamental_identity().passed());
    }
}
