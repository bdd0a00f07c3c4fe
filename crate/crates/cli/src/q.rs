//! Parsing `--q` values.
//!
//! `3`, `-2/5` and `0.3` are exact rationals; anything ending in `i`
//! (`3+1i`, `0.3-0.7i`, `2i`) is a complex float.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum QValue {
    Exact(BigRational),
    Complex(Complex64),
}

impl QValue {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            QValue::Exact(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            QValue::Complex(z) => *z,
        }
    }
}

fn parse_decimal(s: &str) -> Result<BigRational, String> {
    let bad = || format!("not a number: {s:?}");
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        return Ok(BigRational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("0{int}{frac}").parse().map_err(|_| bad())?;
    let scale = (0..frac.len()).fold(BigInt::one(), |acc, _| acc * 10);
    let v = BigRational::new(digits, scale);
    Ok(if neg { -v } else { v })
}

fn parse_float(s: &str) -> Result<f64, String> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => s.parse().map_err(|_| format!("not a number: {s:?}")),
    }
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let body = s.strip_suffix('i').expect("caller checked the suffix");
    // split before the last sign that is not leading and not an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (parse_float(&body[..k])?, parse_float(&body[k..])?),
        None => (0.0, parse_float(body)?),
    };
    let z = Complex64::new(re, im);
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(format!("not a finite number: {s:?}"));
    }
    Ok(z)
}

pub fn parse_q(s: &str) -> Result<QValue, String> {
    let s = s.trim();
    if s.ends_with('i') {
        parse_complex(s).map(QValue::Complex)
    } else {
        parse_decimal(s).map(QValue::Exact)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(n: i64, d: i64) -> QValue {
        QValue::Exact(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_q("2"), Ok(exact(2, 1)));
        assert_eq!(parse_q("-2/4"), Ok(exact(-1, 2)));
        assert_eq!(parse_q("0.3"), Ok(exact(3, 10)));
        assert_eq!(parse_q("-.25"), Ok(exact(-1, 4)));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("abc").is_err());
        assert!(parse_q(".").is_err());
    }

    #[test]
    fn complex() {
        assert_eq!(
            parse_q("3+1i"),
            Ok(QValue::Complex(Complex64::new(3.0, 1.0)))
        );
        assert_eq!(
            parse_q("0.3-0.7i"),
            Ok(QValue::Complex(Complex64::new(0.3, -0.7)))
        );
        assert_eq!(parse_q("2i"), Ok(QValue::Complex(Complex64::new(0.0, 2.0))));
        assert_eq!(
            parse_q("1-i"),
            Ok(QValue::Complex(Complex64::new(1.0, -1.0)))
        );
        assert_eq!(
            parse_q("1e-3+2i"),
            Ok(QValue::Complex(Complex64::new(1e-3, 2.0)))
        );
        assert!(parse_q("x+2i").is_err());
    }
}
