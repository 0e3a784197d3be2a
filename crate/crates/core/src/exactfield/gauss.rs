//! Gaussian rationals `p + q i` with `p, q ∈ ℚ`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::BigRational;

use super::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gauss {
    pub re: Rat,
    pub im: Rat,
}

impl Gauss {
    pub fn new(re: impl Into<Rat>, im: impl Into<Rat>) -> Self {
        Gauss { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        Gauss { re: Rat::zero(), im: Rat::zero() }
    }

    pub fn one() -> Self {
        Gauss::from_int(1)
    }

    pub fn i() -> Self {
        Gauss { re: Rat::zero(), im: Rat::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Gauss { re: Rat::int(n), im: Rat::zero() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Gauss { re: Rat::ratio(n, d), im: Rat::zero() }
    }

    pub fn real(re: impl Into<Rat>) -> Self {
        Gauss { re: re.into(), im: Rat::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gauss { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> Rat {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        if self.im.is_zero() {
            return Some(Gauss::real(self.re.recip()?));
        }
        let n = n.recip()?;
        Some(Gauss::new(&self.re * &n, -(&self.im * &n)))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Gauss::new(&self.re * k, &self.im * k)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// Real part as a `BigRational`.
    pub fn re_big(&self) -> BigRational {
        self.re.to_big()
    }

    /// True when the value is `-c` for some `c` that prints without a leading minus.
    pub(crate) fn is_negative_display(&self) -> bool {
        if self.im.is_zero() {
            self.re.is_negative()
        } else if self.re.is_zero() {
            self.im.is_negative()
        } else {
            false
        }
    }
}

impl Add for &Gauss {
    type Output = Gauss;
    fn add(self, o: &Gauss) -> Gauss {
        Gauss::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl AddAssign<&Gauss> for Gauss {
    fn add_assign(&mut self, o: &Gauss) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl Sub for &Gauss {
    type Output = Gauss;
    fn sub(self, o: &Gauss) -> Gauss {
        Gauss::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &Gauss {
    type Output = Gauss;
    fn mul(self, o: &Gauss) -> Gauss {
        if self.im.is_zero() && o.im.is_zero() {
            return Gauss::real(&self.re * &o.re);
        }
        Gauss::new(
            &(&self.re * &o.re) - &(&self.im * &o.im),
            &(&self.re * &o.im) + &(&self.im * &o.re),
        )
    }
}

impl Neg for &Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss { re: -&self.re, im: -&self.im }
    }
}

fn fmt_rat(q: &Rat) -> String {
    q.to_string()
}

impl fmt::Display for Gauss {
    /// Plain form such as `3`, `-1/2`, `2*i`, `1/2 + 3/4*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "i")
                } else if (-&self.im).is_one() {
                    write!(f, "-i")
                } else {
                    write!(f, "{}*i", fmt_rat(&self.im))
                }
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                let mag = self.im.abs();
                if mag.is_one() {
                    write!(f, "{} {} i", fmt_rat(&self.re), sign)
                } else {
                    write!(f, "{} {} {}*i", fmt_rat(&self.re), sign, fmt_rat(&mag))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_one_plus_i() {
        let z = Gauss::new(1, 1);
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, Gauss::one());
        assert_eq!(
            w,
            Gauss::new(Rat::ratio(1, 2), Rat::ratio(-1, 2))
        );
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(Gauss::zero().inv().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Gauss::from_ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(Gauss::i().to_string(), "i");
        assert_eq!(
            (&Gauss::from_int(1) + &(&Gauss::i() * &Gauss::from_int(-3))).to_string(),
            "1 - 3*i"
        );
    }
}
