use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::point::Point;
use super::polynomial::Polynomial;

use crate::error::{Error, Result};

/// Quotient of two polynomials.
///
/// Canonical form divides out the rational content of the denominator and
/// makes its leading coefficient positive. Common polynomial factors are only
/// removed when the denominator divides the numerator outright; equality is
/// decided by cross-multiplication so it never depends on reduction.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction { num, den }.canonical())
    }

    pub fn from_poly(p: Polynomial) -> RationalFunction {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
        .canonical()
    }

    fn canonical(self) -> RationalFunction {
        if self.num.is_zero() {
            return RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        if let Ok(q) = self.num.divide_exact(&self.den) {
            return RationalFunction {
                num: q,
                den: Polynomial::one(),
            };
        }
        let (c, den) = self.den.primitive();
        let num = self.num.scale(&c.recip());
        RationalFunction { num, den }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_polynomial(&self) -> Option<Polynomial> {
        self.den
            .constant_value()
            .map(|c| self.num.scale(&c.recip()))
    }

    pub fn evaluate(&self, point: &Point) -> Result<BigRational> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.evaluate(point)? / d)
    }

    pub fn add(&self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction {
                num: self.num.add(&o.num),
                den: self.den.clone(),
            }
            .canonical();
        }
        RationalFunction {
            num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
        .canonical()
    }

    pub fn sub(&self, o: &RationalFunction) -> RationalFunction {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
        .canonical()
    }

    pub fn div(&self, o: &RationalFunction) -> Result<RationalFunction> {
        if o.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction {
            num: self.num.mul(&o.den),
            den: self.den.mul(&o.num),
        }
        .canonical())
    }

    pub fn swap_row_vars(&self, i: u32) -> RationalFunction {
        RationalFunction {
            num: self.num.swap_row_vars(i),
            den: self.den.swap_row_vars(i),
        }
        .canonical()
    }

    pub fn swap_col_vars(&self, j: u32) -> RationalFunction {
        RationalFunction {
            num: self.num.swap_col_vars(j),
            den: self.den.swap_col_vars(j),
        }
        .canonical()
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl super::ring::Ring for RationalFunction {
    fn zero() -> Self {
        RationalFunction::from_poly(Polynomial::zero())
    }
    fn one() -> Self {
        RationalFunction::from_poly(Polynomial::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
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
        RationalFunction::from_poly(Polynomial::int(n))
    }
}

impl super::ring::Field for RationalFunction {
    fn over(&self, rhs: &Self) -> Option<Self> {
        self.div(rhs).ok()
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_polynomial() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({}) / ({})", self.num, self.den),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, VarId};

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_sign_and_content() {
        let r = RationalFunction::new(p("x1"), p("-2*x2 + 4")).unwrap();
        assert_eq!(r.denominator(), &p("-2 + x2"));
        assert_eq!(r.numerator(), &p("-1/2*x1"));
        assert_eq!(r.to_string(), "(-1/2*x1) / (-2 + x2)");
    }

    #[test]
    fn exact_quotients_collapse() {
        let r = RationalFunction::new(p("x1^2 - a1^2"), p("x1 - a1")).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.to_string(), "a1 + x1");
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let r1 = RationalFunction::new(p("x1 + y1"), p("x2 - x1")).unwrap();
        let r2 = RationalFunction::new(p("x1*a1 + y1*a1"), p("x2*a1 - x1*a1")).unwrap();
        assert_eq!(r1, r2);
        assert_ne!(r1, RationalFunction::from_poly(p("x1")));
    }

    #[test]
    fn field_operations() {
        let r = RationalFunction::new(p("x1"), p("x2")).unwrap();
        let s = RationalFunction::new(p("y1"), p("x2")).unwrap();
        assert_eq!(r.add(&s), RationalFunction::new(p("x1 + y1"), p("x2")).unwrap());
        let q = r.div(&s).unwrap();
        assert_eq!(q, RationalFunction::new(p("x1"), p("y1")).unwrap());
        assert!(r.div(&RationalFunction::from_poly(Polynomial::zero())).is_err());
        let pt = Point::new()
            .with(VarId::x(1), rat(1, 1))
            .with(VarId::x(2), rat(0, 1));
        assert!(matches!(r.evaluate(&pt), Err(Error::DivisionByZero)));
        assert!(RationalFunction::new(p("1"), Polynomial::zero()).is_err());
    }
}
