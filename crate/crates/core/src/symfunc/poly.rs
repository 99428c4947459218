use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Partition;
use crate::error::{Error, Result};

/// A finite linear combination of power-sum monomials `p_λ` with exact
/// rational coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PPolynomial {
    terms: BTreeMap<Partition, BigRational>,
}

impl PPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `p_∅ = 1`, the multiplicative unit.
    pub fn one() -> Self {
        Self::monomial(Partition::empty())
    }

    /// The monomial `1·p_λ`.
    pub fn monomial(lambda: Partition) -> Self {
        Self::term(lambda, BigRational::one())
    }

    pub fn term(lambda: Partition, coeff: BigRational) -> Self {
        let mut out = Self::zero();
        out.add_term(lambda, coeff);
        out
    }

    /// Collects `(λ, c)` pairs, summing repeated keys.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, BigRational)>,
    {
        let mut out = Self::zero();
        for (lambda, c) in terms {
            out.add_term(lambda, c);
        }
        out
    }

    /// Collects integer counts, as produced by subset enumeration.
    pub(crate) fn from_integer_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, i64)>,
    {
        Self::from_terms(
            terms
                .into_iter()
                .map(|(l, c)| (l, BigRational::from_integer(BigInt::from(c)))),
        )
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical key order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    /// Coefficient of `p_λ` (zero when absent).
    pub fn coefficient(&self, lambda: &Partition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The common degree of all terms; `None` for the zero polynomial or a
    /// mixed-degree polynomial.
    pub fn degree(&self) -> Option<u64> {
        let mut it = self.terms.keys().map(Partition::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// True when every term has degree `n`. The zero polynomial is vacuously homogeneous.
    pub fn is_homogeneous_of_degree(&self, n: u64) -> bool {
        self.terms.keys().all(|l| l.degree() == n)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(l, v)| (l.clone(), v * c))
                .collect(),
        }
    }

    /// Formal partial derivative with respect to `p_j`.
    pub fn partial_derivative(&self, j: u32) -> Self {
        assert!(j >= 1, "derivative index must be positive");
        let mut out = Self::zero();
        for (lambda, c) in &self.terms {
            let m = lambda.multiplicity(j);
            if m == 0 {
                continue;
            }
            let reduced = lambda.remove_part(j).expect("part present");
            out.add_term(reduced, c * BigRational::from_integer(BigInt::from(m)));
        }
        out
    }

    /// The standard scalar product with `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ`.
    pub fn scalar_product(&self, other: &Self) -> BigRational {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = BigRational::zero();
        for (lambda, a) in &small.terms {
            if let Some(b) = large.terms.get(lambda) {
                acc += a * b * BigRational::from_integer(lambda.z());
            }
        }
        acc
    }

    /// Canonical text form: one `num/den : λ_1,λ_2,…` line per term, in key order.
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::new();
        for (lambda, c) in &self.terms {
            out.push_str(&format!("{}/{} : {}\n", c.numer(), c.denom(), lambda));
        }
        out
    }

    /// Parses the canonical text form. Accepts terms in any order.
    pub fn parse_canonical(text: &str) -> Result<Self> {
        let mut out = Self::zero();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let err = |message: &str| Error::Parse {
                line: line_no,
                message: message.to_string(),
            };
            let (coeff, parts) = line.split_once(':').ok_or_else(|| err("missing ':'"))?;
            let (num, den) = coeff
                .trim()
                .split_once('/')
                .ok_or_else(|| err("coefficient must be num/den"))?;
            let num: BigInt = num.trim().parse().map_err(|_| err("bad numerator"))?;
            let den: BigInt = den.trim().parse().map_err(|_| err("bad denominator"))?;
            if den.is_zero() {
                return Err(err("zero denominator"));
            }
            let parts = parts.trim();
            let parts: Vec<u32> = if parts.is_empty() {
                Vec::new()
            } else {
                parts
                    .split(',')
                    .map(|p| p.trim().parse::<u32>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| err("bad part"))?
            };
            let lambda = Partition::new(parts).map_err(|e| err(&e.to_string()))?;
            out.add_term(lambda, BigRational::new(num, den));
        }
        Ok(out)
    }
}

/// Inline form such as `p[3] - 2 p[2,1] + p[1,1,1]`; `p[]` is the unit.
impl fmt::Display for PPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (lambda, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude} ")?;
            }
            write!(f, "p[{lambda}]")?;
        }
        Ok(())
    }
}

impl Add for &PPolynomial {
    type Output = PPolynomial;

    fn add(self, rhs: &PPolynomial) -> PPolynomial {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Add for PPolynomial {
    type Output = PPolynomial;

    fn add(mut self, rhs: PPolynomial) -> PPolynomial {
        for (l, c) in rhs.terms {
            self.add_term(l, c);
        }
        self
    }
}

impl Neg for &PPolynomial {
    type Output = PPolynomial;

    fn neg(self) -> PPolynomial {
        PPolynomial {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }
}

impl Neg for PPolynomial {
    type Output = PPolynomial;

    fn neg(mut self) -> PPolynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub for &PPolynomial {
    type Output = PPolynomial;

    fn sub(self, rhs: &PPolynomial) -> PPolynomial {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), -c);
        }
        out
    }
}

impl Sub for PPolynomial {
    type Output = PPolynomial;

    fn sub(mut self, rhs: PPolynomial) -> PPolynomial {
        for (l, c) in rhs.terms {
            self.add_term(l, -c);
        }
        self
    }
}

impl Mul for &PPolynomial {
    type Output = PPolynomial;

    fn mul(self, rhs: &PPolynomial) -> PPolynomial {
        let mut out = PPolynomial::zero();
        for (la, ca) in &self.terms {
            for (lb, cb) in &rhs.terms {
                out.add_term(la.union(lb), ca * cb);
            }
        }
        out
    }
}

impl Mul for PPolynomial {
    type Output = PPolynomial;

    fn mul(self, rhs: PPolynomial) -> PPolynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_inline() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let x = PPolynomial::from_terms([(p(&[3]), r(2, 1)), (p(&[2, 1]), r(-3, 1)), (p(&[1, 1, 1]), r(1, 2))]);
        assert_eq!(x.to_string(), "2 p[3] - 3 p[2,1] + 1/2 p[1,1,1]");
        assert_eq!((-PPolynomial::one()).to_string(), "-p[]");
        assert_eq!(PPolynomial::zero().to_string(), "0");
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn int(c: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(c))
    }

    fn poly(terms: &[(&[u32], i64)]) -> PPolynomial {
        PPolynomial::from_terms(terms.iter().map(|(l, c)| (part(l), int(*c))))
    }

    #[test]
    fn monomials() {
        assert_eq!(PPolynomial::monomial(part(&[3, 1])), poly(&[(&[3, 1], 1)]));
        assert_eq!(PPolynomial::one(), poly(&[(&[], 1)]));
        assert_eq!(PPolynomial::monomial(part(&[2, 2])).len(), 1);
    }

    #[test]
    fn add_and_scale() {
        assert!((&poly(&[(&[2], 1)]) + &poly(&[(&[2], -1)])).is_zero());
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(poly(&[(&[1, 1], 4)]).scale(&half), poly(&[(&[1, 1], 2)]));
        assert_eq!(
            &poly(&[(&[3], 1)]) + &poly(&[(&[2, 1], 2)]),
            poly(&[(&[3], 1), (&[2, 1], 2)])
        );
    }

    #[test]
    fn multiply_merges_parts() {
        assert_eq!(&poly(&[(&[2], 1)]) * &poly(&[(&[1], 1)]), poly(&[(&[2, 1], 1)]));
        assert_eq!(
            &poly(&[(&[1], 1), (&[], 1)]) * &poly(&[(&[1], 1)]),
            poly(&[(&[1, 1], 1), (&[1], 1)])
        );
        let k2 = poly(&[(&[1, 1], 1), (&[2], -1)]);
        assert_eq!(
            &k2 * &poly(&[(&[1], 1)]),
            poly(&[(&[1, 1, 1], 1), (&[2, 1], -1)])
        );
    }

    #[test]
    fn derivative() {
        assert_eq!(
            poly(&[(&[1, 1, 1], 1)]).partial_derivative(1),
            poly(&[(&[1, 1], 3)])
        );
        let p3 = poly(&[(&[1, 1, 1], 1), (&[2, 1], -2), (&[3], 1)]);
        assert_eq!(p3.partial_derivative(2), poly(&[(&[1], -2)]));
        assert!(poly(&[(&[3], 1)]).partial_derivative(5).is_zero());
    }

    #[test]
    fn scalar_products() {
        let p21 = PPolynomial::monomial(part(&[2, 1]));
        assert_eq!(p21.scalar_product(&p21), int(2));
        assert_eq!(p21.scalar_product(&PPolynomial::monomial(part(&[3]))), int(0));
        let p111 = PPolynomial::monomial(part(&[1, 1, 1]));
        assert_eq!(p111.scalar_product(&p111), int(6));
    }

    #[test]
    fn canonical_text() {
        let p3 = poly(&[(&[1, 1, 1], 1), (&[2, 1], -2), (&[3], 1)]);
        assert_eq!(p3.to_canonical_string(), "1/1 : 3\n-2/1 : 2,1\n1/1 : 1,1,1\n");
        assert_eq!(PPolynomial::one().to_canonical_string(), "1/1 : \n");
        assert_eq!(PPolynomial::zero().to_canonical_string(), "");
        let half = PPolynomial::term(part(&[2]), BigRational::new(BigInt::from(3), BigInt::from(-6)));
        assert_eq!(half.to_canonical_string(), "-1/2 : 2\n");
        assert!(PPolynomial::parse_canonical("1/0 : 2").is_err());
        assert!(matches!(
            PPolynomial::parse_canonical("1/1 : 2\nnope"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn degree_and_homogeneity() {
        let p3 = poly(&[(&[1, 1, 1], 1), (&[3], 1)]);
        assert_eq!(p3.degree(), Some(3));
        assert!(p3.is_homogeneous_of_degree(3));
        let mixed = poly(&[(&[1], 1), (&[], 1)]);
        assert_eq!(mixed.degree(), None);
        assert!(!mixed.is_homogeneous());
        assert!(PPolynomial::zero().is_homogeneous_of_degree(7));
    }
}
