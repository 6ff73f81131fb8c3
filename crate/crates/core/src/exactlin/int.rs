//! Integer scalars for fraction-free elimination.
//!
//! Every routine is written once over [`Int`] and run first with checked
//! `i128` arithmetic; on overflow the caller reruns it over `BigInt`.

use alloc::vec::Vec;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) trait Int: Clone + Debug + Ord + Zero + One + Signed + Integer {
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn mul_c(&self, o: &Self) -> Option<Self>;
    fn sub_c(&self, o: &Self) -> Option<Self>;
}

impl Int for i128 {
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn mul_c(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn sub_c(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
}

impl Int for BigInt {
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn mul_c(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub_c(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
}

/// `a*x - b*y`, checked.
#[inline]
pub(crate) fn cross<T: Int>(a: &T, x: &T, b: &T, y: &T) -> Option<T> {
    a.mul_c(x)?.sub_c(&b.mul_c(y)?)
}

/// Divide a vector by the gcd of its entries and make the first nonzero
/// entry positive. The zero vector is left unchanged.
pub(crate) fn make_primitive<T: Int>(v: &mut [T]) {
    let mut g = T::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    let flip = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    if !g.is_one() || flip {
        for x in v.iter_mut() {
            if !x.is_zero() {
                let q = x.div_floor(&g);
                *x = if flip { -q } else { q };
            }
        }
    }
}

/// Divide by the gcd only, keeping signs.
pub(crate) fn divide_content<T: Int>(v: &mut [T]) {
    let mut g = T::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x = x.div_floor(&g);
    }
}

pub(crate) fn convert<T: Int>(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<T>>> {
    rows.iter()
        .map(|r| r.iter().map(T::from_big).collect::<Option<Vec<T>>>())
        .collect()
}

pub(crate) fn to_big_vec<T: Int>(v: &[T]) -> Vec<BigInt> {
    v.iter().map(Int::to_big).collect()
}

/// Run `small` over `i128`; fall back to `big` when it reports overflow or
/// the input does not fit.
macro_rules! with_fallback {
    ($data:expr, |$d:ident : $t:ident| $body:expr) => {{
        let small = $crate::exactlin::int::convert::<i128>($data).and_then(|$d| {
            type $t = i128;
            #[allow(clippy::redundant_closure_call)]
            (move || $body)()
        });
        match small {
            Some(v) => v,
            None => {
                let $d = $crate::exactlin::int::convert::<num_bigint::BigInt>($data)
                    .expect("BigInt conversion is infallible");
                type $t = num_bigint::BigInt;
                #[allow(clippy::redundant_closure_call)]
                (move || $body)().expect("BigInt arithmetic does not overflow")
            }
        }
    }};
}
pub(crate) use with_fallback;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_normalizes_sign_and_content() {
        let mut v = [0i128, -4, 6, 0, 2];
        make_primitive(&mut v);
        assert_eq!(v, [0, 2, -3, 0, -1]);
        let mut z = [0i128; 3];
        make_primitive(&mut z);
        assert_eq!(z, [0, 0, 0]);
    }

    #[test]
    fn checked_cross_overflows() {
        assert_eq!(cross(&i128::MAX, &2, &1, &1), None);
        assert_eq!(cross(&3i128, &4, &2, &5), Some(2));
    }
}
