//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! [`Scalar`] is the universal coefficient type of the crate: a plain
//! rational is a constant polynomial, and symbolic parameters (r-matrix
//! entries `a_i_j`, the catalog parameter `alpha`, coproduct family
//! parameters `k`, `c1`, ...) are variables. All arithmetic is exact; a
//! quantity vanishes if and only if its normal form has no terms.
//!
//! Term storage is a `BTreeMap` keyed by monomial, so iteration order — and
//! therefore printing and serialization — is canonical: monomials compare
//! lexicographically by parameter name, then by exponent.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::IntegralDomain;

/// Exact rational number (arbitrary precision).
pub type Rational = BigRational;

/// `Rational` from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `Rational` from numerator and denominator.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Power product of named parameters; factors are sorted by name and carry
/// strictly positive exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<(String, u32)>);

impl Monomial {
    /// The empty product (the monomial of a constant term).
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(vec![(name.to_string(), 1)])
    }

    /// Builds from arbitrary (name, exponent) pairs, merging repeats and
    /// dropping zero exponents.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (String, u32)>,
    {
        let mut merged: BTreeMap<String, u32> = BTreeMap::new();
        for (name, exp) in pairs {
            if exp > 0 {
                *merged.entry(name).or_insert(0) += exp;
            }
        }
        Monomial(merged.into_iter().collect())
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(String, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| *e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(
            self.0
                .iter()
                .chain(other.0.iter())
                .map(|(n, e)| (n.clone(), *e)),
        )
    }

    /// Compares in graded lexicographic order: total degree first, then
    /// exponents variable by variable in name order (the side owning the
    /// alphabetically earliest differing variable is the greater).
    ///
    /// Unlike the derived `Ord` (which keys the canonical term storage),
    /// this order is compatible with multiplication — `a < b` implies
    /// `a*c < b*c` — which exact division relies on.
    pub fn graded_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let mut left = self.0.iter();
            let mut right = other.0.iter();
            loop {
                match (left.next(), right.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some((ln, le)), Some((rn, re))) => match ln.cmp(rn) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match le.cmp(re) {
                            Ordering::Equal => continue,
                            unequal => return unequal,
                        },
                    },
                }
            }
        })
    }

    /// Exact quotient; `None` if some exponent of `other` exceeds ours.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut left: BTreeMap<&str, u32> = self.0.iter().map(|(n, e)| (n.as_str(), *e)).collect();
        for (name, exp) in &other.0 {
            match left.get_mut(name.as_str()) {
                Some(have) if *have >= *exp => *have -= *exp,
                _ => return None,
            }
        }
        Some(Monomial::from_pairs(
            left.into_iter().map(|(n, e)| (n.to_string(), e)),
        ))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, exp) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with `Rational` coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Scalar {
    terms: BTreeMap<Monomial, Rational>,
}

impl Scalar {
    pub fn constant(c: Rational) -> Self {
        let mut s = Scalar::default();
        s.add_term(Monomial::unit(), c);
        s
    }

    pub fn int(n: i64) -> Self {
        Scalar::constant(rat(n))
    }

    /// The parameter `name` as a degree-one polynomial.
    pub fn var(name: &str) -> Self {
        let mut s = Scalar::default();
        s.add_term(Monomial::var(name), Rational::one());
        s
    }

    /// Adds `coeff * mono`, dropping the term if the total cancels.
    pub fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_unit)
    }

    /// The value as a plain rational, if no symbolic parameter survives.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            Some(self.terms.values().next().unwrap().clone())
        } else {
            None
        }
    }

    /// Greatest term in the canonical monomial order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Greatest term in the graded monomial order used for division.
    fn leading_graded(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|(m, _), (n, _)| m.graded_cmp(n))
    }

    /// Scales so the leading coefficient becomes one; zero stays zero.
    pub fn monic(&self) -> Scalar {
        match self.leading() {
            None => Scalar::zero(),
            Some((_, lead)) => {
                let inv = lead.recip();
                let mut out = Scalar::default();
                for (m, c) in &self.terms {
                    out.add_term(m.clone(), c * &inv);
                }
                out
            }
        }
    }

    /// If `self == q * other` for a nonzero rational `q`, returns `q`.
    pub fn rational_multiple_of(&self, other: &Scalar) -> Option<Rational> {
        let (_, sc) = self.leading()?;
        let (_, oc) = other.leading()?;
        let q = sc / oc;
        let mut scaled = Scalar::default();
        for (m, c) in &other.terms {
            scaled.add_term(m.clone(), c * &q);
        }
        if scaled == *self {
            Some(q)
        } else {
            None
        }
    }

    /// Replaces bound parameters by rational values; unbound parameters
    /// survive symbolically.
    pub fn substitute(&self, bindings: &BTreeMap<String, Rational>) -> Scalar {
        let mut out = Scalar::default();
        for (mono, coeff) in &self.terms {
            let mut c = coeff.clone();
            let mut free: Vec<(String, u32)> = Vec::new();
            for (name, exp) in mono.factors() {
                match bindings.get(name) {
                    Some(v) => {
                        for _ in 0..*exp {
                            c *= v;
                        }
                    }
                    None => free.push((name.clone(), *exp)),
                }
            }
            out.add_term(Monomial::from_pairs(free), c);
        }
        out
    }

    /// Names of all parameters that occur with nonzero coefficient.
    pub fn parameters(&self) -> Vec<String> {
        let mut names: Vec<String> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(n, _)| n.clone()))
            .collect();
        names.sort();
        names.dedup();
        names
    }

    /// Coefficient of `param` viewed as a polynomial linear in `param`;
    /// `None` if `param` occurs with exponent above one.
    pub fn linear_coefficient(&self, param: &str) -> Option<Scalar> {
        let mut out = Scalar::default();
        for (mono, coeff) in &self.terms {
            let mut exp_here = 0;
            let mut rest: Vec<(String, u32)> = Vec::new();
            for (name, exp) in mono.factors() {
                if name == param {
                    exp_here = *exp;
                } else {
                    rest.push((name.clone(), *exp));
                }
            }
            match exp_here {
                0 => {}
                1 => out.add_term(Monomial::from_pairs(rest), coeff.clone()),
                _ => return None,
            }
        }
        Some(out)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, coeff) in &self.terms {
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_unit() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let mut out = Scalar::default();
        for (m, c) in self.terms {
            out.add_term(m, -c);
        }
        out
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::constant(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.as_rational().map(|r| r.is_one()).unwrap_or(false)
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Self {
        Scalar::constant(c)
    }
}

impl IntegralDomain for Scalar {
    /// Exact multivariate division: peels the leading term of the running
    /// remainder against the leading term of `rhs`, with "leading" taken
    /// in the graded order of [`Monomial::graded_cmp`]. That order is
    /// compatible with multiplication, so the leading monomial of a
    /// product is the product of leading monomials and a failed peel
    /// proves the division is not exact.
    fn exact_div(&self, rhs: &Scalar) -> Option<Scalar> {
        let (dm, dc) = rhs.leading_graded()?;
        let mut rem = self.clone();
        let mut quot = Scalar::default();
        while let Some((rm, rc)) = rem.leading_graded() {
            let qm = rm.div(dm)?;
            let qc = rc / dc;
            let mut piece = Scalar::default();
            piece.add_term(qm, qc);
            rem = &rem - &(&piece * rhs);
            quot += piece;
        }
        Some(quot)
    }
}
