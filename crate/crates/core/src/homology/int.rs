use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact integer arithmetic. Every operation returns `None` on overflow so a
/// computation can restart with arbitrary precision.
pub trait Int: Clone + PartialEq + Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Truncating division with remainder.
    fn div_rem(&self, d: &Self) -> Option<(Self, Self)>;
    fn abs_lt(&self, o: &Self) -> bool;
    fn to_big(&self) -> BigInt;

    fn zero() -> Self {
        Self::from_i64(0)
    }

    fn abs(&self) -> Option<Self> {
        if self.to_big().is_negative() {
            self.neg()
        } else {
            Some(self.clone())
        }
    }
}

impl Int for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        Some((self.checked_div(*d)?, self.checked_rem(*d)?))
    }
    fn abs_lt(&self, o: &Self) -> bool {
        self.unsigned_abs() < o.unsigned_abs()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn abs(&self) -> Option<Self> {
        self.checked_abs()
    }
}

impl Int for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        Some((self / d, self % d))
    }
    fn abs_lt(&self, o: &Self) -> bool {
        self.magnitude() < o.magnitude()
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Runs `f` with `i64` and falls back to `BigInt` on overflow.
pub fn with_fallback<R>(f64: impl FnOnce() -> Option<R>, big: impl FnOnce() -> Option<R>) -> R {
    f64().or_else(big).expect("arbitrary precision arithmetic cannot overflow")
}

/// `b - c * a` entrywise on sorted sparse vectors.
pub fn axpy<T: Int>(b: &[(usize, T)], c: &T, a: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < b.len() || j < a.len() {
        let take_b = j >= a.len() || (i < b.len() && b[i].0 < a[j].0);
        let take_a = i >= b.len() || (j < a.len() && a[j].0 < b[i].0);
        if take_b {
            out.push(b[i].clone());
            i += 1;
        } else if take_a {
            let v = c.mul(&a[j].1)?.neg()?;
            out.push((a[j].0, v));
            j += 1;
        } else {
            let v = b[i].1.sub(&c.mul(&a[j].1)?)?;
            if !v.is_zero() {
                out.push((a[j].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

pub fn lift<T: Int>(v: &[(usize, i64)]) -> Vec<(usize, T)> {
    v.iter().map(|(i, x)| (*i, T::from_i64(*x))).collect()
}

/// Sorts by index and merges duplicates, dropping zeros.
pub fn normalize(mut v: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
    v.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, i64)> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

pub fn big_to_u64_or_string(b: &BigInt) -> Result<u64, String> {
    b.to_u64().ok_or_else(|| b.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axpy_merges() {
        let a = vec![(0, 1i64), (2, 1)];
        let b = vec![(0, 1i64), (1, 5)];
        assert_eq!(axpy(&b, &1, &a).unwrap(), vec![(1, 5), (2, -1)]);
    }

    #[test]
    fn i64_overflow_is_reported() {
        assert!(i64::MAX.add(&1).is_none());
        assert!(BigInt::from(i64::MAX).add(&BigInt::from(1)).is_some());
    }

    #[test]
    fn normalize_merges_duplicates() {
        assert_eq!(normalize(vec![(2, 1), (0, 1), (2, -1), (0, 2)]), vec![(0, 3)]);
    }
}
