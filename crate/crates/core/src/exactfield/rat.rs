//! Rationals stored inline while numerator and denominator fit in `i64`,
//! spilling to `BigRational` otherwise. Values are always reduced with a
//! positive denominator, and a value that fits is always stored inline, so
//! derived equality and hashing are exact.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

#[derive(Clone, Debug)]
pub enum Rat {
    Small(i64, i64),
    Big(BigRational),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    pub fn zero() -> Rat {
        Rat::Small(0, 1)
    }

    pub fn one() -> Rat {
        Rat::Small(1, 1)
    }

    pub fn int(n: i64) -> Rat {
        Rat::Small(n, 1)
    }

    /// `n / d`, `d ≠ 0`.
    pub fn ratio(n: i64, d: i64) -> Rat {
        assert!(d != 0, "zero denominator");
        Rat::from_i128(n as i128, d as i128)
    }

    fn from_i128(n: i128, d: i128) -> Rat {
        let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Rat::Small(a, b),
            _ => Rat::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(q: BigRational) -> Rat {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(a), Some(b)) => Rat::Small(a, b),
            _ => Rat::Big(q),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(a, b) => BigRational::new_raw(BigInt::from(*a), BigInt::from(*b)),
            Rat::Big(q) => q.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rat::Small(a, _) => BigInt::from(*a),
            Rat::Big(q) => q.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rat::Small(_, b) => BigInt::from(*b),
            Rat::Big(q) => q.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Small(_, b) => *b == 1,
            Rat::Big(q) => q.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small(a, _) => *a < 0,
            Rat::Big(q) => q.is_negative(),
        }
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// `None` for zero.
    pub fn recip(&self) -> Option<Rat> {
        match self {
            Rat::Small(0, _) => None,
            Rat::Small(a, b) => Some(Rat::from_i128(*b as i128, *a as i128)),
            Rat::Big(q) => Some(Rat::from_big(q.recip())),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Rat::Small(a, b) => *a as f64 / *b as f64,
            Rat::Big(q) => q.to_f64().unwrap_or(f64::NAN),
        }
    }

    fn big_op(&self, o: &Rat, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Rat {
        Rat::from_big(f(&self.to_big(), &o.to_big()))
    }
}

impl From<BigRational> for Rat {
    fn from(q: BigRational) -> Rat {
        Rat::from_big(q)
    }
}

impl From<&BigRational> for Rat {
    fn from(q: &BigRational) -> Rat {
        Rat::from_big(q.clone())
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::int(n)
    }
}

impl PartialEq for Rat {
    fn eq(&self, o: &Rat) -> bool {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => a == c && b == d,
            (Rat::Big(p), Rat::Big(q)) => p == q,
            _ => false,
        }
    }
}

impl Eq for Rat {}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, h: &mut H) {
        match self {
            Rat::Small(a, b) => {
                a.hash(h);
                b.hash(h);
            }
            Rat::Big(q) => q.hash(h),
        }
    }
}

impl Ord for Rat {
    fn cmp(&self, o: &Rat) -> Ordering {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, o: &Rat) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Add for &Rat {
    type Output = Rat;
    fn add(self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                if b == d {
                    return Rat::from_i128(*a as i128 + *c as i128, *b as i128);
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d)) {
                    (Some(x), Some(y), Some(z)) => match x.checked_add(y) {
                        Some(n) => Rat::from_i128(n, z),
                        None => self.big_op(o, |p, q| p + q),
                    },
                    _ => self.big_op(o, |p, q| p + q),
                }
            }
            _ => self.big_op(o, |p, q| p + q),
        }
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match self {
            Rat::Small(a, b) => Rat::from_i128(-(*a as i128), *b as i128),
            Rat::Big(q) => Rat::from_big(-q.clone()),
        }
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
    }
}

impl Sub for &Rat {
    type Output = Rat;
    fn sub(self, o: &Rat) -> Rat {
        self + &(-o)
    }
}

impl Mul for &Rat {
    type Output = Rat;
    fn mul(self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rat::from_i128(a * c, b * d)
            }
            _ => self.big_op(o, |p, q| p * q),
        }
    }
}

impl Div for &Rat {
    type Output = Rat;
    fn div(self, o: &Rat) -> Rat {
        self * &o.recip().expect("division by zero")
    }
}

macro_rules! owned_ops {
    ($($t:ident $m:ident),*) => {$(
        impl $t<Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: Rat) -> Rat { (&self).$m(&o) }
        }
        impl $t<&Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: &Rat) -> Rat { (&self).$m(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, o: &Rat) {
        *self = &*self + o;
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(a, 1) => write!(f, "{a}"),
            Rat::Small(a, b) => write!(f, "{a}/{b}"),
            Rat::Big(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Rat::Big(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}
