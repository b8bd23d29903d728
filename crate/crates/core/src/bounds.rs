//! Closed-form edge counts and bounds, generic over the scalar type.
//!
//! The slopes have a half-integer part `(k - 1) / 2`, so exact work uses
//! [`crate::Rational`]; `f64` is available for quick numeric use.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num, ToPrimitive};

use crate::error::ParamError;

/// Scalar types the bounds can be evaluated in.
pub trait Scalar: Num + Copy + PartialOrd + Debug + FromPrimitive {}

impl<T> Scalar for T where T: Num + Copy + PartialOrd + Debug + FromPrimitive {}

fn lit<T: Scalar>(x: i64) -> T {
    T::from_i64(x).expect("small integer literal is representable")
}

fn half<T: Scalar>(x: i64) -> T {
    lit::<T>(x) / lit::<T>(2)
}

/// A line `slope * n + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bound<T> {
    pub slope: T,
    pub intercept: T,
}

impl<T: Scalar> Bound<T> {
    pub fn at(&self, n: usize) -> T {
        self.slope * lit::<T>(n as i64) + self.intercept
    }
}

/// `1` if `k` or `n` is odd, `0` if both are even.
pub fn epsilon(k: usize, n: usize) -> usize {
    usize::from(k % 2 == 1 || n % 2 == 1)
}

/// The common slope `2t - 4 + (k - 1)/2` of the lower and upper bounds.
pub fn slope<T: Scalar>(t: usize, k: usize) -> T {
    lit::<T>(2 * t as i64 - 4) + half::<T>(k as i64 - 1)
}

/// Lower bound on `e(G)` for co-critical `G`: `slope * n - ((k-1)^2 + 5)`.
/// Only `t = 3` has an explicit constant.
pub fn lower_bound<T: Scalar>(t: usize, k: usize) -> Result<Bound<T>, ParamError> {
    if k < 3 {
        return Err(ParamError::range("k", k, ">= 3"));
    }
    match t {
        3 => {
            let km1 = k as i64 - 1;
            Ok(Bound {
                slope: slope(3, k),
                intercept: lit::<T>(-(km1 * km1 + 5)),
            })
        }
        t if t >= 4 => Err(ParamError::UnspecifiedConstant { t }),
        _ => Err(ParamError::range("t", t, ">= 3")),
    }
}

pub fn lower_bound_edges<T: Scalar>(t: usize, k: usize, n: usize) -> Result<T, ParamError> {
    lower_bound::<T>(t, k).map(|b| b.at(n))
}

/// Checks the regime of the sparse constructions: `t in {3,4,5}`, `k >= 3`,
/// `n >= (2t-2)k + 1`, and that the regular block of `R` is realizable.
pub fn check_construction_params(t: usize, k: usize, n: usize) -> Result<(), ParamError> {
    if !(3..=5).contains(&t) {
        return Err(ParamError::range("t", t, "3, 4 or 5"));
    }
    if k < 3 {
        return Err(ParamError::range("k", k, ">= 3"));
    }
    let min_n = (2 * t - 2) * k + 1;
    if n < min_n {
        return Err(ParamError::range("n", n, format!(">= {min_n}")));
    }
    let m = n - (2 * t - 3) * k - epsilon(k, n);
    if m < k || !((k - 1) * m).is_multiple_of(2) {
        return Err(ParamError::Invalid(format!(
            "regular block of size {m} and degree {} is not realizable",
            k - 1
        )));
    }
    Ok(())
}

/// The additive constant `C(t, k)` of the construction on `n` vertices
/// (it depends on `n` only through the parity flag).
pub fn upper_constant<T: Scalar>(t: usize, k: usize, n: usize) -> Result<T, ParamError> {
    check_construction_params(t, k, n)?;
    let eps = epsilon(k, n) as i64;
    let (t, k) = (t as i64, k as i64);
    Ok(if t == 3 {
        lit::<T>(k * k - 3 * k - 3) - half::<T>((k - 1) * eps)
    } else {
        half::<T>((k - 1) * ((t * t - t - 2) * k - (t * t + t + eps - 6)))
            - lit::<T>(t - 2) * (lit::<T>(k) + half::<T>(5 * t - 7))
    })
}

/// Closed-form edge count of the construction, evaluated in `T`.
pub fn upper_bound<T: Scalar>(t: usize, k: usize, n: usize) -> Result<T, ParamError> {
    Ok(slope::<T>(t, k) * lit::<T>(n as i64) + upper_constant::<T>(t, k, n)?)
}

/// Exact integer edge count of the construction from the closed form.
pub fn upper_edge_count(t: usize, k: usize, n: usize) -> Result<usize, ParamError> {
    let exact: crate::Rational = upper_bound(t, k, n)?;
    assert!(exact.is_integer(), "closed form is integral: {exact}");
    Ok(exact
        .to_integer()
        .to_usize()
        .expect("edge count is nonnegative"))
}

/// Sharp lower bound `3n - 4` for `(K_3, K_{1,3})`, valid for `n >= 13`.
pub fn three_claw_bound(n: usize) -> usize {
    (3 * n).saturating_sub(4)
}

/// Minimum size `3n - 15` of a `K_3`-saturated graph with minimum degree 3
/// on `n >= 10` vertices.
pub fn degree3_saturated_bound(n: usize) -> usize {
    (3 * n).saturating_sub(15)
}

/// `e(J) = 2(|J| - 2) + |B||C| - |B| - |C|` for the two-hub graph.
pub fn j_edge_count(a: usize, b: usize, c: usize) -> usize {
    2 * (a + b + c) + b * c - b - c
}
