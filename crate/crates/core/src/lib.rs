//! Exact linear data for framed sheaves on `P2` and `P1 x P1`.
//!
//! The crate converts between ADHM data, representations of bound quivers and
//! monads of line bundles, computes sheaf cohomology of line-bundle complexes
//! by a truncated Cech method, and certifies framability and membership in
//! the heart of the exceptional collection. Arithmetic is exact throughout.

pub mod acceptance;
pub mod adhm;
pub mod cohomology;
pub mod heart;
pub mod poly;
pub mod quiver;
pub mod ratla;
pub mod report;
pub mod sample;
pub mod surface;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};

/// Arbitrary-precision rational, always in lowest terms.
pub type Scalar = BigRational;
pub type RationalMatrix = ratla::Matrix<Scalar>;
/// Same algorithms over machine-word rationals; overflow panics.
pub type SmallRationalMatrix = ratla::Matrix<Ratio<i64>>;
pub type Polynomial = poly::Poly<Scalar>;
pub type PolynomialMatrix = poly::PolyMatrix<Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`; rejects a zero denominator.
pub fn parse_scalar(s: &str) -> Result<Scalar, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| format!("invalid numerator in {s:?}"))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| format!("invalid denominator in {s:?}"))?;
    if d == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Scalar::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars_are_reduced() {
        let x = parse_scalar("6/-4").unwrap();
        assert_eq!(x, frac(-3, 2));
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(int(5).to_string(), "5");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
    }

    #[test]
    fn matrix_json_format() {
        let m = RationalMatrix::from_vec(1, 2, vec![frac(1, 2), int(-3)]).unwrap();
        let js = serde_json::to_value(&m).unwrap();
        assert_eq!(
            js,
            serde_json::json!({"rows": 1, "cols": 2, "entries": ["1/2", "-3"]})
        );
        let back: RationalMatrix = serde_json::from_value(js).unwrap();
        assert_eq!(back, m);
        let empty: RationalMatrix =
            serde_json::from_str(r#"{"rows":0,"cols":3,"entries":[]}"#).unwrap();
        assert_eq!(empty.shape(), (0, 3));
    }
}
