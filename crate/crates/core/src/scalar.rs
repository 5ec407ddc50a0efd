//! Exact rational scalars and the handful of combinatorial helpers the rest
//! of the crate needs.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

/// The ground field.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u64) -> Q {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Q::from_integer(acc)
}

/// Generalized binomial `n(n-1)...(n-k+1)/k!`, valid for negative `n`.
pub fn binom(n: i64, k: u64) -> Q {
    let mut num = BigInt::one();
    for i in 0..k as i64 {
        num *= n - i;
    }
    Q::from_integer(num) / factorial(k)
}

/// `(-1)^n` for any integer `n`.
pub fn sign(n: i64) -> Q {
    if n.rem_euclid(2) == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

/// Renders `p/q`, or just `p` for integers.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Q::new(n, d))
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Whether the rendered form needs parentheses when used as a factor.
pub fn is_compound(x: &Q) -> bool {
    !x.is_integer() || x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), q(10));
        assert_eq!(binom(-1, 3), q(-1));
        assert_eq!(binom(-2, 2), q(3));
        assert_eq!(binom(2, 3), q(0));
        assert_eq!(binom(7, 0), q(1));
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_q("3/6"), Some(qr(1, 2)));
        assert_eq!(parse_q("-4"), Some(q(-4)));
        assert_eq!(parse_q("1/0"), None);
        assert_eq!(fmt_q(&qr(-3, 9)), "-1/3");
        assert_eq!(fmt_q(&q(12)), "12");
    }

    #[test]
    fn signs() {
        assert_eq!(sign(-3), q(-1));
        assert_eq!(sign(4), q(1));
    }
}
