use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::point::{format_rational, Point};

use super::var::VarId;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered by the graded lexicographic monomial
/// order; zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Polynomial {
        Polynomial::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Polynomial {
        Polynomial::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: VarId) -> Polynomial {
        Polynomial::term(BigRational::one(), Monomial::var(v))
    }

    pub fn term(c: BigRational, m: Monomial) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(terms: I) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn variables(&self) -> Vec<VarId> {
        let mut vars: Vec<VarId> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(v, _)| v))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn product<'a, I: IntoIterator<Item = &'a Polynomial>>(factors: I) -> Polynomial {
        factors
            .into_iter()
            .fold(Polynomial::one(), |acc, f| acc.mul(f))
    }

    /// Exact value at a point that assigns every variable of `self`.
    pub fn evaluate(&self, point: &Point) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                let x = point.get(v)?;
                for _ in 0..e {
                    t *= x;
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes the variables assigned in `point`, leaving the rest symbolic.
    pub fn specialize(&self, point: &Point) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.factors() {
                match point.get(v) {
                    Ok(x) => {
                        for _ in 0..e {
                            coeff *= x;
                        }
                    }
                    Err(_) => rest.push((v, e)),
                }
            }
            out.add_term(Monomial::from_pairs(rest), coeff);
        }
        out
    }

    pub fn map_vars<F: Fn(VarId) -> VarId>(&self, f: F) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.map_vars(&f), c.clone());
        }
        out
    }

    /// `s_i^H`: exchanges `x_i <-> x_{i+1}` and `y_i <-> y_{i+1}`.
    pub fn swap_row_vars(&self, i: u32) -> Polynomial {
        self.map_vars(|v| v.swap_row(i))
    }

    /// `s_j^V`: exchanges `a_j <-> a_{j+1}` and `b_j <-> b_{j+1}`.
    pub fn swap_col_vars(&self, j: u32) -> Polynomial {
        self.map_vars(|v| v.swap_col(j))
    }

    /// Multivariate division by `divisor` in the monomial order.
    /// Returns `(quotient, remainder)` with `self = divisor * quotient + remainder`
    /// and no remainder term divisible by the leading monomial of `divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let (lm, lc) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quotient = Polynomial::zero();
        let mut remainder = Polynomial::zero();
        while let Some((m, c)) = rem.leading_term() {
            let (m, c) = (m.clone(), c.clone());
            match m.checked_div(&lm) {
                Some(q) => {
                    let coeff = &c / &lc;
                    let t = Polynomial::term(coeff.clone(), q.clone());
                    rem = rem.sub(&divisor.mul(&t));
                    quotient.add_term(q, coeff);
                }
                None => {
                    rem.terms.remove(&m);
                    remainder.add_term(m, c);
                }
            }
        }
        Ok((quotient, remainder))
    }

    /// `self / divisor`, failing with the remainder as witness when the
    /// division is not exact.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision { remainder: r })
        }
    }

    /// Content as a positive rational: gcd of numerators over lcm of
    /// denominators. Dividing by it leaves integer coefficients with gcd 1.
    pub fn content(&self) -> BigRational {
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in self.terms.values() {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        if g.is_zero() {
            BigRational::one()
        } else {
            BigRational::new(g, l)
        }
    }

    /// Integer-coefficient primitive part with positive leading coefficient,
    /// together with the factor removed (`self = factor * primitive`).
    pub fn primitive(&self) -> (BigRational, Polynomial) {
        if self.is_zero() {
            return (BigRational::one(), Polynomial::zero());
        }
        let mut c = self.content();
        if self.leading_term().map(|(_, k)| k.is_negative()).unwrap_or(false) {
            c = -c;
        }
        let inv = c.recip();
        (c, self.scale(&inv))
    }
}

impl super::ring::Ring for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn from_int(n: i64) -> Self {
        Polynomial::int(n)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl From<VarId> for Polynomial {
    fn from(v: VarId) -> Polynomial {
        Polynomial::var(v)
    }
}

impl From<i64> for Polynomial {
    fn from(n: i64) -> Polynomial {
        Polynomial::int(n)
    }
}

/// Canonical text: terms in increasing monomial order, `a - b` style signs,
/// integer coefficients bare and fractions as `num/den`, e.g.
/// `1 - a1*b1` or `x1 + 3/2*x2^2*y1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn x(i: u32) -> Polynomial {
        Polynomial::var(VarId::x(i))
    }
    fn y(i: u32) -> Polynomial {
        Polynomial::var(VarId::y(i))
    }
    fn a(i: u32) -> Polynomial {
        Polynomial::var(VarId::a(i))
    }
    fn b(i: u32) -> Polynomial {
        Polynomial::var(VarId::b(i))
    }

    #[test]
    fn cancellation() {
        let p = &x(1) + &y(1);
        let q = &x(1) - &y(1);
        assert_eq!(&p + &q, x(1).scale(&rat(2, 1)));
    }

    #[test]
    fn zero_absorbs() {
        let p = &Polynomial::one() - &(&a(1) * &b(1));
        assert!(p.mul(&Polynomial::zero()).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(1) - &a(1)) * &(&x(1) + &a(1));
        assert_eq!(p, &x(1).pow(2) - &a(1).pow(2));
        assert_eq!(p.to_string(), "-a1^2 + x1^2");
    }

    #[test]
    fn evaluate_examples() {
        let pt = Point::new()
            .with(VarId::x(1), rat(1, 2))
            .with(VarId::y(1), rat(1, 3));
        assert_eq!((&x(1) + &y(1)).evaluate(&pt).unwrap(), rat(5, 6));
        assert_eq!(Polynomial::int(7).evaluate(&Point::new()).unwrap(), rat(7, 1));
        let root = Point::new()
            .with(VarId::a(1), rat(2, 1))
            .with(VarId::b(2), rat(1, 2));
        let p = &Polynomial::one() - &(&a(1) * &b(2));
        assert_eq!(p.evaluate(&root).unwrap(), rat(0, 1));
    }

    #[test]
    fn evaluate_reports_missing_variable() {
        match x(1).evaluate(&Point::new()) {
            Err(Error::UnassignedVariable(v)) => assert_eq!(v, VarId::x(1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn swaps() {
        assert_eq!((&x(1) * &y(2)).swap_row_vars(1), &x(2) * &y(1));
        assert_eq!(x(3).swap_row_vars(1), x(3));
        let p = &Polynomial::one() - &(&a(1) * &b(2));
        assert_eq!(p.swap_col_vars(1), &Polynomial::one() - &(&a(2) * &b(1)));
        // column swaps leave row variables alone and vice versa
        assert_eq!(p.swap_row_vars(1), p);
    }

    #[test]
    fn exact_division() {
        let p = &x(1).pow(2) - &a(1).pow(2);
        let d = &x(1) - &a(1);
        assert_eq!(p.divide_exact(&d).unwrap(), &x(1) + &a(1));
        assert!(Polynomial::zero().divide_exact(&d).unwrap().is_zero());
        match (&x(1) + &y(1)).divide_exact(&d) {
            Err(Error::NonExactDivision { remainder }) => assert!(!remainder.is_zero()),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(p.divide_exact(&Polynomial::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn display_format() {
        let p = &Polynomial::one() - &(&a(1) * &b(1));
        assert_eq!(p.to_string(), "1 - a1*b1");
        let q = &x(2).scale(&rat(3, 2)) - &Polynomial::constant(rat(-1, 3));
        assert_eq!(q.to_string(), "1/3 + 3/2*x2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(x(1).neg().to_string(), "-x1");
    }

    #[test]
    fn primitive_part() {
        let p = &x(1).scale(&rat(-2, 3)) + &Polynomial::constant(rat(4, 3));
        let (c, q) = p.primitive();
        assert_eq!(q.to_string(), "-2 + x1");
        assert_eq!(q.scale(&c), p);
    }
}
