//! Scalar abstraction: the exact kernels run over `Rat` (big rationals), the
//! quadrature module over `Complex64`, through the same generic entry points.

use crate::{Rat, C64};
use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Field scalar: enough structure for Laurent-polynomial coefficient work and
/// q-Pochhammer products.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn inv(&self) -> Self;

    /// Integer power, negative exponents via the inverse.
    fn powi(&self, k: i64) -> Self {
        let mut base = if k < 0 { self.inv() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl Scalar for Rat {
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl Scalar for C64 {
    fn inv(&self) -> Self {
        C64::one() / self
    }
}

/// Parse a rational from `"num"` or `"num/den"` form.
pub fn parse_rat(s: &str) -> crate::Result<Rat> {
    Rat::from_str(s.trim()).map_err(|e| crate::Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// Exact rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Exact rational n/d.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Lossy conversion for the quadrature module.
pub fn rat_to_f64(r: &Rat) -> f64 {
    // Split through BigInt -> f64; fine for the moderate magnitudes used here.
    let n = r.numer();
    let d = r.denom();
    num_traits::ToPrimitive::to_f64(n).unwrap_or(f64::NAN)
        / num_traits::ToPrimitive::to_f64(d).unwrap_or(f64::NAN)
}
