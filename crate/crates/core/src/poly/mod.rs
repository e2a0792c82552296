//! Dense integer polynomials with arbitrary-precision coefficients.

mod oracle;
mod roots;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use oracle::{charpoly_oracle, shifted_determinant};
pub use roots::{isolate_real_roots, squarefree_decomposition, sturm_sequence, RootEnclosure};

/// Integer polynomial, coefficients in ascending degree order.
///
/// Canonical form: no trailing zero coefficient. The zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `x + c`.
    pub fn x_plus(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into(), BigInt::one()])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides by the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * t + BigRational::from_integer(c.clone())
            })
    }

    /// Sign of `p(t)` using only integer arithmetic: for `t = a/b` with `b > 0`
    /// the homogenized value `sum c_k a^k b^(d-k)` has the same sign.
    pub fn sign_at(&self, t: &BigRational) -> Ordering {
        let Some(d) = self.degree() else {
            return Ordering::Equal;
        };
        let a = t.numer();
        let b = t.denom();
        let mut acc = self.coeffs[d].clone();
        let mut bpow = BigInt::one();
        for k in (0..d).rev() {
            bpow *= b;
            acc = acc * a + &self.coeffs[k] * &bpow;
        }
        // BigRational keeps the denominator positive.
        match acc.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    /// Exact quotient over the integers.
    pub fn divide_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem_integral(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Long division that fails as soon as a quotient coefficient is not an integer.
    fn div_rem_integral(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(pd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if pd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); pd - dd + 1];
        for k in (0..=pd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * dc;
            }
            quot[k] = qk;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Removes every factor `f` that divides exactly; returns the cofactor and the count.
    pub fn divide_out(&self, f: &Self) -> Result<(Self, usize)> {
        if f.degree().unwrap_or(0) == 0 {
            return Err(Error::Internal(
                "divide_out needs a nonconstant factor".into(),
            ));
        }
        let mut cur = self.clone();
        let mut k = 0;
        if cur.is_zero() {
            return Ok((cur, 0));
        }
        while let Ok(q) = cur.divide_exact(f) {
            cur = q;
            k += 1;
        }
        Ok((cur, k))
    }

    /// Pseudo-remainder `lc(d)^(deg p - deg d + 1) * p mod d`.
    pub(crate) fn pseudo_rem(&self, d: &Self) -> Result<Self> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let Some(pd) = self.degree() else {
            return Ok(Self::zero());
        };
        if pd < dd {
            return Ok(self.clone());
        }
        let lc = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        for k in (0..=pd - dd).rev() {
            let top = rem[k + dd].clone();
            for c in rem.iter_mut() {
                *c *= lc;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &top * dc;
            }
        }
        Ok(Self::new(rem))
    }

    /// Primitive gcd with positive leading coefficient (the gcd over the rationals, up to units).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).expect("b is nonzero").primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Ascending coefficient list, e.g. `[36, -10, -9, 1]`.
    pub fn to_coefficient_list(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl fmt::Display for IntPolynomial {
    /// Human-readable form, highest degree first: `x^3 - 9x^2 - 10x + 36`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    /// Serializes as a list of exact integers (arbitrary size when the format allows it).
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            let n: serde_json::Number = c.to_string().parse().map_err(serde::ser::Error::custom)?;
            seq.serialize_element(&n)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw: Vec<serde_json::Number> = Vec::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|n| {
                n.to_string()
                    .parse::<BigInt>()
                    .map_err(serde::de::Error::custom)
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self::new(coeffs))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

pub fn poly_add(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    p + q
}

pub fn poly_mul(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    p * q
}

pub fn poly_eval(p: &IntPolynomial, t: &BigRational) -> BigRational {
    p.eval(t)
}

pub fn poly_divide_exact(p: &IntPolynomial, d: &IntPolynomial) -> Result<IntPolynomial> {
    p.divide_exact(d)
}
