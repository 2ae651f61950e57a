//! Exact reduced fractions and their classes modulo the integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::FractionError;
use crate::scalar::Int;

/// A reduced fraction `num/den` with `den >= 1`.
///
/// Zero is always stored as `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenericFraction<T> {
    num: T,
    den: T,
}

impl<T: Int> GenericFraction<T> {
    pub fn new(num: T, den: T) -> Result<Self, FractionError> {
        if den.is_zero() {
            return Err(FractionError::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g.clone(), den / g);
        if den.is_negative() {
            num = num.checked_negate().ok_or(FractionError::Overflow)?;
            den = den.checked_negate().ok_or(FractionError::Overflow)?;
        }
        Ok(Self { num, den })
    }

    pub fn from_integer(n: T) -> Self {
        Self {
            num: n,
            den: T::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(T::zero())
    }

    pub fn numer(&self) -> &T {
        &self.num
    }

    pub fn denom(&self) -> &T {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> T {
        self.num.div_floor(&self.den)
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let lhs = self.num.checked_mul(&other.den)?;
        let rhs = other.num.checked_mul(&self.den)?;
        let den = self.den.checked_mul(&other.den)?;
        Self::new(lhs.checked_add(&rhs)?, den).ok()
    }

    pub fn checked_neg(&self) -> Option<Self> {
        Some(Self {
            num: self.num.checked_negate()?,
            den: self.den.clone(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        // Cross-reduce first so fixed-width scalars overflow as late as possible.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (g1, g2) = (nonzero_or_one(g1), nonzero_or_one(g2));
        let num = (self.num.clone() / g1.clone()).checked_mul(&(other.num.clone() / g2.clone()))?;
        let den = (self.den.clone() / g2).checked_mul(&(other.den.clone() / g1))?;
        Self::new(num, den).ok()
    }

    /// `1/self`; fails with [`FractionError::InfiniteValue`] on zero.
    pub fn recip(&self) -> Result<Self, FractionError> {
        if self.is_zero() {
            return Err(FractionError::InfiniteValue);
        }
        Self::new(self.den.clone(), self.num.clone())
    }
}

fn nonzero_or_one<T: Int>(g: T) -> T {
    if g.is_zero() {
        T::one()
    } else {
        g
    }
}

impl<T: Int> Ord for GenericFraction<T> {
    // Compares by successive floors (a continued-fraction walk), which never
    // needs a cross multiplication and so cannot overflow.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut an, mut ad) = (self.num.clone(), self.den.clone());
        let (mut bn, mut bd) = (other.num.clone(), other.den.clone());
        let mut flipped = false;
        loop {
            let (aq, ar) = an.div_mod_floor(&ad);
            let (bq, br) = bn.div_mod_floor(&bd);
            let ord = match aq.cmp(&bq) {
                Ordering::Equal => match (ar.is_zero(), br.is_zero()) {
                    (true, true) => Ordering::Equal,
                    (true, false) => Ordering::Less,
                    (false, true) => Ordering::Greater,
                    (false, false) => {
                        // ar/ad < br/bd iff ad/ar > bd/br
                        (an, ad, bn, bd) = (ad, ar, bd, br);
                        flipped = !flipped;
                        continue;
                    }
                },
                o => o,
            };
            return if flipped { ord.reverse() } else { ord };
        }
    }
}

impl<T: Int> PartialOrd for GenericFraction<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<T: Int> $trait<&GenericFraction<T>> for &GenericFraction<T> {
            type Output = GenericFraction<T>;
            fn $method(self, rhs: &GenericFraction<T>) -> GenericFraction<T> {
                self.$checked(rhs).expect("fraction arithmetic overflow")
            }
        }
        impl<T: Int> $trait for GenericFraction<T> {
            type Output = GenericFraction<T>;
            fn $method(self, rhs: GenericFraction<T>) -> GenericFraction<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<T: Int> Neg for &GenericFraction<T> {
    type Output = GenericFraction<T>;
    fn neg(self) -> GenericFraction<T> {
        self.checked_neg().expect("fraction arithmetic overflow")
    }
}

impl<T: Int> Neg for GenericFraction<T> {
    type Output = GenericFraction<T>;
    fn neg(self) -> GenericFraction<T> {
        -&self
    }
}

impl<T: Int> fmt::Display for GenericFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl<T: Int> FromStr for GenericFraction<T> {
    type Err = FractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FractionError::Parse(s.to_string());
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num = n.parse::<T>().map_err(|_| bad())?;
        let den = d.parse::<T>().map_err(|_| bad())?;
        Self::new(num, den)
    }
}

impl<T: Int> Serialize for GenericFraction<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, T: Int> Deserialize<'de> for GenericFraction<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Class of a fraction modulo the integers, stored as its unique
/// representative in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModZClass<T> {
    rep: GenericFraction<T>,
}

impl<T: Int> ModZClass<T> {
    pub fn rep(&self) -> &GenericFraction<T> {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// Class of `-r`.
    pub fn negate(&self) -> Self {
        if self.rep.is_zero() {
            return self.clone();
        }
        let num = self.rep.den.clone() - self.rep.num.clone();
        Self {
            rep: GenericFraction {
                num,
                den: self.rep.den.clone(),
            },
        }
    }
}

impl<T: Int> fmt::Display for ModZClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

/// Representative of `r` modulo the integers in `[0, 1)`; the denominator is
/// unchanged.
pub fn modz_normalize<T: Int>(r: &GenericFraction<T>) -> ModZClass<T> {
    let num = r.num.mod_floor(&r.den);
    ModZClass {
        rep: GenericFraction {
            num,
            den: r.den.clone(),
        },
    }
}

/// The integer `n` with `|n| >= 2` whose reciprocal lies in class `c`.
///
/// `n > 0` corresponds to the representative `1/n`, `n < 0` to `(|n|-1)/|n|`.
/// For the class of `1/2` (equal to that of `-1/2`) the positive value is
/// returned.
pub fn is_one_over_n<T: Int>(c: &ModZClass<T>) -> Option<T> {
    let (p, q) = (&c.rep.num, &c.rep.den);
    if p.is_zero() {
        return None;
    }
    if p.is_one() {
        return Some(q.clone());
    }
    if q.clone() - p.clone() == T::one() {
        return q.checked_negate();
    }
    None
}
