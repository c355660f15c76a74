//! Integer Laurent polynomials in the bracket variable `A`.
//!
//! Exponents index powers of `A`; a Jones polynomial is stored with all
//! exponents divisible by 4 and read in `t` via `t = A^-4`.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Sparse Laurent polynomial over the integers, no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::mono(0, 1)
    }

    /// c * A^e
    pub fn mono(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::default();
        p.add_term(exp, coeff.into());
        p
    }

    /// delta = -A^2 - A^-2, the loop value of the bracket state sum.
    pub fn loop_delta() -> Self {
        let mut p = Self::default();
        p.add_term(2, BigInt::from(-1));
        p.add_term(-2, BigInt::from(-1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| *c == BigInt::from(1))
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Multiply by c * A^e in place.
    pub fn scale(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            self.terms.clear();
            return;
        }
        let old = std::mem::take(&mut self.terms);
        for (e, c) in old {
            self.terms.insert(e + exp, c * coeff);
        }
    }

    /// Substitute A -> A^-1 (mirror image of the underlying diagram).
    pub fn invert_variable(&self) -> Self {
        let mut p = Self::default();
        for (e, c) in &self.terms {
            p.terms.insert(-e, c.clone());
        }
        p
    }

    /// (-A)^k as a polynomial, used by the Jones normalization.
    pub fn neg_a_pow(k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::mono(k, sign)
    }

    /// True when every exponent is divisible by 4, i.e. the polynomial is a
    /// genuine knot Jones polynomial in t = A^-4.
    pub fn is_t_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e % 4 == 0)
    }

    /// Terms re-indexed by the t-exponent (t = A^-4). Call only after
    /// `is_t_polynomial` holds.
    pub fn t_terms(&self) -> Vec<(i64, BigInt)> {
        let mut out: Vec<(i64, BigInt)> = self
            .terms
            .iter()
            .map(|(e, c)| (-(e / 4), c.clone()))
            .collect();
        out.sort_by_key(|(e, _)| *e);
        out
    }

    /// Canonical `exp:coeff` listing in the A variable, ascending exponent.
    pub fn a_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(e, c)| format!("{e}:{c}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Canonical `exp:coeff` listing in the t variable (requires exponents
    /// divisible by 4).
    pub fn t_string(&self) -> Option<String> {
        if !self.is_t_polynomial() {
            return None;
        }
        if self.terms.is_empty() {
            return Some("0".into());
        }
        Some(
            self.t_terms()
                .iter()
                .map(|(e, c)| format!("{e}:{c}"))
                .collect::<Vec<_>>()
                .join(","),
        )
    }

    /// Parse the `t_string` form: comma-separated `exp:coeff` pairs in t.
    pub fn from_t_string(s: &str) -> Option<Self> {
        let mut p = Self::default();
        if s == "0" {
            return Some(p);
        }
        for pair in s.split(',') {
            let (e, c) = pair.split_once(':')?;
            let e: i64 = e.trim().parse().ok()?;
            let c: i64 = c.trim().parse().ok()?;
            p.add_term(-4 * e, BigInt::from(c));
        }
        Some(p)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]", self.a_string())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*A")?,
                _ => write!(f, "{c}*A^{e}")?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
        self
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::zero() - self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        (&self) * (&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-8i64..8, -9i64..9), 0..6).prop_map(|terms| {
            let mut p = LaurentPoly::zero();
            for (e, c) in terms {
                p.add_term(e, BigInt::from(c));
            }
            p
        })
    }

    #[test]
    fn mono_and_delta() {
        let d = LaurentPoly::loop_delta();
        assert_eq!(d.a_string(), "-2:-1,2:-1");
        assert!(LaurentPoly::one().is_one());
        assert_eq!(LaurentPoly::neg_a_pow(-3).a_string(), "-3:-1");
        assert_eq!(LaurentPoly::neg_a_pow(4).a_string(), "4:1");
    }

    #[test]
    fn t_round_trip() {
        // left trefoil Jones: -t^-4 + t^-3 + t^-1
        let p = LaurentPoly::from_t_string("-4:-1,-3:1,-1:1").unwrap();
        assert_eq!(p.a_string(), "4:1,12:1,16:-1");
        assert_eq!(p.t_string().unwrap(), "-4:-1,-3:1,-1:1");
        assert!(p.is_t_polynomial());
    }

    proptest! {
        #[test]
        fn add_commutes(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(a.clone() + b.clone(), b + a);
        }

        #[test]
        fn mul_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &(b.clone() + c.clone()), (&a * &b) + (&a * &c));
        }

        #[test]
        fn invert_involution(a in arb_poly()) {
            prop_assert_eq!(a.invert_variable().invert_variable(), a);
        }
    }
}
