//! Exact Laurent polynomials in the indeterminate `u` over the integers.
//!
//! Coefficients are arbitrary-precision integers and terms are kept as an
//! exponent-sorted sparse vector with no zero entries, so equality is
//! structural.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `sum c_k u^k` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentInt {
    /// `(exponent, coefficient)` pairs, strictly ascending in exponent,
    /// every coefficient nonzero.
    terms: Vec<(i64, BigInt)>,
}

impl LaurentInt {
    pub fn zero() -> Self {
        LaurentInt { terms: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentInt::term(0, 1)
    }

    /// The monomial `c * u^exp`.
    pub fn term(exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            LaurentInt::zero()
        } else {
            LaurentInt {
                terms: vec![(exp, c)],
            }
        }
    }

    /// The indeterminate `u`.
    pub fn u() -> Self {
        LaurentInt::term(1, 1)
    }

    /// `u^{-1}`.
    pub fn u_inv() -> Self {
        LaurentInt::term(-1, 1)
    }

    /// `xi = u - u^{-1}`.
    pub fn xi() -> Self {
        LaurentInt {
            terms: vec![(-1, BigInt::from(-1)), (1, BigInt::from(1))],
        }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = LaurentInt::zero();
        for (e, c) in pairs {
            p += &LaurentInt { terms: vec![(e, c)] }.normalized();
        }
        p
    }

    fn normalized(mut self) -> Self {
        self.terms.retain(|(_, c)| !c.is_zero());
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Degree in `u`, i.e. the largest exponent with nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    /// The bar involution `u -> u^{-1}`.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<(i64, BigInt)> =
            self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        LaurentInt { terms }
    }

    /// True when the polynomial lies in `Z[u^{-1}]`.
    pub fn in_u_inv_ring(&self) -> bool {
        self.max_exp().map_or(true, |e| e <= 0)
    }

    /// True when the polynomial lies in `u^{-1} Z[u^{-1}]`.
    pub fn in_u_inv_ideal(&self) -> bool {
        self.max_exp().map_or(true, |e| e < 0)
    }

    /// The part with strictly negative exponents.
    pub fn negative_part(&self) -> Self {
        LaurentInt {
            terms: self
                .terms
                .iter()
                .take_while(|(e, _)| *e < 0)
                .cloned()
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentInt::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Rewrites the polynomial in powers of `xi = u - u^{-1}`.
    ///
    /// Returns the coefficient vector `a` with `self = sum a[k] xi^k`, or
    /// `None` when no such expression over the integers exists. Works by
    /// repeatedly cancelling the top `u`-degree with the matching power of
    /// `xi`; the top degree drops strictly at each step, and any leftover
    /// with negative top degree cannot be a polynomial in `xi`.
    pub fn xi_form(&self) -> Option<Vec<BigInt>> {
        let mut rem = self.clone();
        let deg = match rem.max_exp() {
            None => return Some(Vec::new()),
            Some(d) if d < 0 => return None,
            Some(d) => d,
        };
        let mut coeffs = vec![BigInt::zero(); (deg + 1) as usize];
        let xi = LaurentInt::xi();
        while let Some(d) = rem.max_exp() {
            if d < 0 {
                return None;
            }
            let c = rem.coeff(d);
            rem -= &(&xi.pow(d as u32) * &LaurentInt::term(0, c.clone()));
            coeffs[d as usize] = c;
        }
        Some(coeffs)
    }

    /// Degree in `xi` for polynomials in `xi`; equals `max_exp` when
    /// `xi_form` succeeds with non-negative coefficients.
    pub fn xi_degree(&self) -> Option<i64> {
        self.xi_form().map(|c| {
            c.iter()
                .rposition(|a| !a.is_zero())
                .map(|d| d as i64)
                .unwrap_or(0)
        })
    }
}

impl AddAssign<&LaurentInt> for LaurentInt {
    fn add_assign(&mut self, rhs: &LaurentInt) {
        if rhs.is_zero() {
            return;
        }
        let mut merged = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let mut a = std::mem::take(&mut self.terms).into_iter().peekable();
        let mut b = rhs.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ea, _)), Some((eb, _))) => {
                    if ea < eb {
                        merged.push(a.next().unwrap());
                    } else if eb < ea {
                        let (e, c) = b.next().unwrap();
                        merged.push((*e, c.clone()));
                    } else {
                        let (e, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = ca + cb;
                        if !c.is_zero() {
                            merged.push((e, c));
                        }
                    }
                }
                (Some(_), None) => merged.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (e, c) = b.next().unwrap();
                    merged.push((*e, c.clone()));
                }
                (None, None) => break,
            }
        }
        self.terms = merged;
    }
}

impl SubAssign<&LaurentInt> for LaurentInt {
    fn sub_assign(&mut self, rhs: &LaurentInt) {
        *self += &(-rhs);
    }
}

impl Add for &LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        LaurentInt {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: &LaurentInt) -> LaurentInt {
        if self.is_zero() || rhs.is_zero() {
            return LaurentInt::zero();
        }
        let mut out = LaurentInt::zero();
        for (ea, ca) in &self.terms {
            let partial = LaurentInt {
                terms: rhs
                    .terms
                    .iter()
                    .map(|(eb, cb)| (ea + eb, ca * cb))
                    .collect(),
            };
            out += &partial;
        }
        out
    }
}

impl fmt::Display for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if *e == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                if *e == 1 {
                    write!(f, "u")?;
                } else {
                    write!(f, "u^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_normalization() {
        let p = &LaurentInt::u() + &LaurentInt::u_inv();
        let q = &LaurentInt::u() - &LaurentInt::u_inv();
        assert_eq!(&p + &q, LaurentInt::term(1, 2));
        assert_eq!(&p - &p, LaurentInt::zero());
        // (u + u^-1)(u - u^-1) = u^2 - u^-2
        let prod = &p * &q;
        assert_eq!(
            prod,
            LaurentInt::from_terms([(2, BigInt::from(1)), (-2, BigInt::from(-1))])
        );
    }

    #[test]
    fn bar_is_an_involution() {
        let p = LaurentInt::from_terms([
            (-2, BigInt::from(3)),
            (0, BigInt::from(-1)),
            (5, BigInt::from(7)),
        ]);
        assert_eq!(p.bar().bar(), p);
        assert_eq!(p.bar().coeff(2), BigInt::from(3));
        // bar is a ring map
        let q = &LaurentInt::xi() * &p;
        assert_eq!(q.bar(), &p.bar() * &LaurentInt::xi().bar());
    }

    #[test]
    fn lattice_predicates() {
        assert!(LaurentInt::u_inv().in_u_inv_ideal());
        assert!(LaurentInt::one().in_u_inv_ring());
        assert!(!LaurentInt::one().in_u_inv_ideal());
        assert!(!LaurentInt::u().in_u_inv_ring());
        let p = LaurentInt::from_terms([(-3, BigInt::from(2)), (1, BigInt::from(1))]);
        assert_eq!(p.negative_part(), LaurentInt::term(-3, 2));
    }

    #[test]
    fn xi_form_examples() {
        assert_eq!(LaurentInt::xi().xi_form(), Some(vec![0.into(), 1.into()]));
        // xi^2 + 2 = u^2 + u^-2
        let p = LaurentInt::from_terms([(2, BigInt::from(1)), (-2, BigInt::from(1))]);
        assert_eq!(p.xi_form(), Some(vec![2.into(), 0.into(), 1.into()]));
        assert_eq!(p.xi_degree(), Some(2));
        assert_eq!(p.max_exp(), Some(2));
        // u alone is not a polynomial in xi
        assert_eq!(LaurentInt::u().xi_form(), None);
        assert_eq!(LaurentInt::u_inv().xi_form(), None);
        assert_eq!(LaurentInt::zero().xi_form(), Some(vec![]));
    }

    #[test]
    fn display_is_readable() {
        let p = LaurentInt::from_terms([
            (1, BigInt::from(1)),
            (0, BigInt::from(-2)),
            (-1, BigInt::from(1)),
        ]);
        assert_eq!(p.to_string(), "u - 2 + u^-1");
        assert_eq!(LaurentInt::zero().to_string(), "0");
    }
}
