//! Exact rational arithmetic.
//!
//! Every fractional quantity in this crate is a [`Rat`]: arbitrary precision,
//! always in lowest terms, denominator positive. No floating point is used
//! anywhere outside the optional `--decimal` display column.

use crate::Error;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::ToPrimitive;

pub type Rat = BigRational;

/// The exact rational `n / d`. Panics when `d == 0`.
pub fn rat<N, D>(n: N, d: D) -> Rat
where
    BigInt: From<N> + From<D>,
{
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rint<N>(n: N) -> Rat
where
    BigInt: From<N>,
{
    Rat::from_integer(BigInt::from(n))
}

/// Exact ceiling of a non-negative rational, as `u64`.
pub fn ceil_u64(x: &Rat) -> u64 {
    x.ceil()
        .to_integer()
        .to_u64()
        .expect("ceiling of a non-negative desk-scale rational fits in u64")
}

/// Parses `"p/q"` or a bare integer `"p"`, both in lowest terms on return.
pub fn parse_rat(s: &str) -> crate::Result<Rat> {
    let t = s.trim();
    let bad = |msg: String| Error::BadRational {
        token: t.to_string(),
        msg,
    };
    match t.split_once('/') {
        Some((p, q)) => {
            let n: BigInt = p.trim().parse().map_err(|e| bad(format!("{e}")))?;
            let d: BigInt = q.trim().parse().map_err(|e| bad(format!("{e}")))?;
            if d == BigInt::from(0) {
                return Err(bad("zero denominator".to_string()));
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|e| bad(format!("{e}")))?;
            Ok(Rat::from_integer(n))
        }
    }
}

/// Approximate `f64` value, for display only.
pub fn approx(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
