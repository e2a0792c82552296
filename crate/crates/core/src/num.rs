//! Exact rational parsing and outward-rounded decimal printing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Parses `"1e-10"`, `"0.000001"`, `"-2.5E3"`, `"3/7"` or `"42"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::InvalidNumber(text.to_string());
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(p) => (&t[..p], t[p + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits: BigInt = format!("{int_part}{frac_part}0")
        .parse()
        .map_err(|_| bad())?;
    let digits = digits / 10;
    let scale = exp - i32::try_from(frac_part.len()).map_err(|_| bad())?;
    if scale.unsigned_abs() > 10_000 {
        return Err(bad());
    }
    let ten = BigInt::from(10);
    let mut r = if scale >= 0 {
        BigRational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        r = -r;
    }
    Ok(r)
}

/// Parses a strictly positive rational (precision and tolerance arguments).
pub fn parse_positive(text: &str) -> Result<BigRational> {
    let r = parse_rational(text)?;
    if !r.is_positive() {
        return Err(Error::out_of_range(
            "precision",
            format!("{text} is not positive"),
        ));
    }
    Ok(r)
}

fn decimal(r: &BigRational, places: usize, round_up: bool) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = r.numer() * &scale;
    let q = if round_up {
        scaled.div_ceil(r.denom())
    } else {
        scaled.div_floor(r.denom())
    };
    let neg = q.is_negative();
    let digits = q.abs().to_string();
    let digits = if digits.len() <= places {
        format!("{}{digits}", "0".repeat(places + 1 - digits.len()))
    } else {
        digits
    };
    let (ip, fp) = digits.split_at(digits.len() - places);
    let sign = if neg { "-" } else { "" };
    if places == 0 {
        format!("{sign}{ip}")
    } else {
        format!("{sign}{ip}.{fp}")
    }
}

/// Largest decimal with `places` fractional digits that is `<= r`.
pub fn decimal_floor(r: &BigRational, places: usize) -> String {
    decimal(r, places, false)
}

/// Smallest decimal with `places` fractional digits that is `>= r`.
pub fn decimal_ceil(r: &BigRational, places: usize) -> String {
    decimal(r, places, true)
}

/// Nearest `f64` (for display and sanity checks only).
pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn integer(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `10^-k`.
pub fn ten_to_minus(k: u32) -> BigRational {
    BigRational::new(
        BigInt::from(1),
        num_traits::pow(BigInt::from(10), k as usize),
    )
}

/// Serde adapter writing a `BigInt` as a bare JSON number of any size.
pub mod bigint_json {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        let n: serde_json::Number = v.to_string().parse().map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        n.to_string().parse().map_err(serde::de::Error::custom)
    }
}

/// Serde adapters for interval endpoints: decimal strings rounded down / up.
pub mod floor_text {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::decimal_floor(
            v,
            crate::spectra::ENERGY_DECIMAL_PLACES,
        ))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        super::parse_rational(&String::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

pub mod ceil_text {
    use num_rational::BigRational;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::decimal_ceil(
            v,
            crate::spectra::ENERGY_DECIMAL_PLACES,
        ))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        super::floor_text::deserialize(d)
    }
}
