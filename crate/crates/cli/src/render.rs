//! Exact rational rendering and parsing. Values stay rational everywhere;
//! decimals only appear behind the explicit `--decimal` flag.

use qchev_core::Rational;

/// `"1"`, `"1/2"`, `"-2/3"`.
pub fn rational_string(r: Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `"1 π"`, `"1/2 π"`.
pub fn pi_string(r: Rational) -> String {
    format!("{} π", rational_string(r))
}

pub fn rational_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Decimal value of a π-multiple.
pub fn pi_multiple_to_f64(r: Rational) -> f64 {
    rational_to_f64(r) * std::f64::consts::PI
}

/// Parses `"3"`, `"1/2"`, `"-2/3"`.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let bad = |t: &str| format!("cannot parse rational {t:?}");
    match text.split_once('/') {
        Some((numer, denom)) => {
            let n: i64 = numer.trim().parse().map_err(|_| bad(text))?;
            let d: i64 = denom.trim().parse().map_err(|_| bad(text))?;
            if d == 0 {
                return Err(bad(text));
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: i64 = text.trim().parse().map_err(|_| bad(text))?;
            Ok(Rational::from_integer(n))
        }
    }
}
