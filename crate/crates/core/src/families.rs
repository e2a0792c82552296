//! Two infinite families of noncospectral equienergetic threshold graph pairs.
//!
//! Both families live on `N = 9i + 5` vertices:
//!
//! * four blocks: `G = (0^(2i+1) 1^(3i+3) 0^(2i+1) 1^(2i))`,
//!   `G' = (0^(2i+2) 1^(3i) 0^(2i+1) 1^(2i+2))`, sharing a cubic factor;
//! * six blocks: `G = (0 1^(2i+1) 0^i 1^(2i+2) 0^(2i+1) 1^(2i))`,
//!   `G' = (0 1^(2i) 0^(i+1) 1^(2i) 0^(2i+1) 1^(2i+2))`, sharing a quartic factor.
//!
//! The members differ only in the powers of `x`, `x + 1` and one integer
//! linear factor, and the bookkeeping of those factors makes the energies equal.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::integer;
use crate::poly::{isolate_real_roots, IntPolynomial, RootEnclosure};
use crate::seq::BlockForm;
use crate::spectra::{self, integer_root_energy, EnergyInterval};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyId {
    #[serde(rename = "FOUR_BLOCK")]
    FourBlock,
    #[serde(rename = "SIX_BLOCK")]
    SixBlock,
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyId::FourBlock => "FOUR_BLOCK",
            FamilyId::SixBlock => "SIX_BLOCK",
        })
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "four" | "four_block" | "4" => Ok(FamilyId::FourBlock),
            "six" | "six_block" | "6" => Ok(FamilyId::SixBlock),
            _ => Err(Error::out_of_range(
                "family",
                format!("unknown family {s:?} (expected four or six)"),
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Member {
    G,
    GPrime,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyPair {
    pub family: FamilyId,
    pub i: u64,
    #[serde(with = "block_text")]
    pub g: BlockForm,
    #[serde(with = "block_text")]
    pub g_prime: BlockForm,
    #[serde(rename = "N")]
    pub order: usize,
}

impl FamilyPair {
    pub fn member(&self, m: Member) -> &BlockForm {
        match m {
            Member::G => &self.g,
            Member::GPrime => &self.g_prime,
        }
    }
}

mod block_text {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(b: &BlockForm, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(b)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BlockForm, D::Error> {
        let text = String::deserialize(d)?;
        crate::seq::parse_sequence(&text)
            .map(|s| s.to_blocks())
            .map_err(serde::de::Error::custom)
    }
}

fn check_i(i: u64) -> Result<usize> {
    if i == 0 {
        return Err(Error::out_of_range("i", "family parameter must be >= 1"));
    }
    usize::try_from(i)
        .ok()
        .filter(|&i| i <= 10_000)
        .ok_or_else(|| Error::out_of_range("i", format!("{i} is too large")))
}

pub fn family_pair(f: FamilyId, i: u64) -> Result<FamilyPair> {
    let k = check_i(i)?;
    let (g, gp) = match f {
        FamilyId::FourBlock => (
            vec![2 * k + 1, 3 * k + 3, 2 * k + 1, 2 * k],
            vec![2 * k + 2, 3 * k, 2 * k + 1, 2 * k + 2],
        ),
        FamilyId::SixBlock => (
            vec![1, 2 * k + 1, k, 2 * k + 2, 2 * k + 1, 2 * k],
            vec![1, 2 * k, k + 1, 2 * k, 2 * k + 1, 2 * k + 2],
        ),
    };
    let g = BlockForm::new(g)?;
    let g_prime = BlockForm::new(gp)?;
    let order = 9 * k + 5;
    if g.order() != order || g_prime.order() != order {
        return Err(Error::Internal(format!(
            "family member order differs from 9i+5 = {order}"
        )));
    }
    Ok(FamilyPair {
        family: f,
        i,
        g,
        g_prime,
        order,
    })
}

/// The factor both members share: the cubic for the four-block family, the
/// quartic for the six-block family. Coefficients are expanded sign by sign
/// from the printed closed forms.
pub fn shared_factor(f: FamilyId, i: u64) -> Result<IntPolynomial> {
    check_i(i)?;
    let i = BigInt::from(i);
    let i2 = &i * &i;
    let i3 = &i2 * &i;
    let n = |v: i64| BigInt::from(v);
    Ok(match f {
        // x^3 - (7i+2) x^2 - (7i+3) x + 12i^3 + 18i^2 + 6i
        FamilyId::FourBlock => IntPolynomial::new(vec![
            n(12) * &i3 + n(18) * &i2 + n(6) * &i,
            -(n(7) * &i + n(3)),
            -(n(7) * &i + n(2)),
            n(1),
        ]),
        // x^4 - (8i+2) x^3 - (-8i^2+4i+3) x^2 - (-8i^3-20i^2-8i) x - 8i^4 - 12i^3 - 4i^2
        FamilyId::SixBlock => {
            let i4 = &i3 * &i;
            IntPolynomial::new(vec![
                -(n(8) * &i4) - n(12) * &i3 - n(4) * &i2,
                -(n(-8) * &i3 - n(20) * &i2 - n(8) * &i),
                -(n(-8) * &i2 + n(4) * &i + n(3)),
                -(n(8) * &i + n(2)),
                n(1),
            ])
        }
    })
}

/// Fully expanded closed-form characteristic polynomial of one family member.
pub fn closed_form_char_poly(f: FamilyId, i: u64, member: Member) -> Result<IntPolynomial> {
    let k = check_i(i)?;
    let shared = shared_factor(f, i)?;
    let (zero_pow, minus_one_pow, linear_root) = match (f, member) {
        (FamilyId::FourBlock, Member::G) => (4 * k, 5 * k + 1, 2 * k + 1),
        (FamilyId::FourBlock, Member::GPrime) => (4 * k + 1, 5 * k, 2 * k + 2),
        (FamilyId::SixBlock, Member::G) => (3 * k - 1, 6 * k + 1, 2 * k + 1),
        (FamilyId::SixBlock, Member::GPrime) => (3 * k, 6 * k, 2 * k + 2),
    };
    let head = &IntPolynomial::monomial(zero_pow) * &IntPolynomial::x_plus(1).pow(minus_one_pow);
    let tail = &IntPolynomial::x_plus(BigInt::from(linear_root)) * &shared;
    Ok(&head * &tail)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub check: String,
    pub passed: bool,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub family: FamilyId,
    pub i: u64,
    #[serde(rename = "N")]
    pub order: usize,
    pub closed_form_match: bool,
    pub noncospectral: bool,
    pub distinguishing_roots: bool,
    pub energy_g: EnergyInterval,
    pub energy_g_prime: EnergyInterval,
    pub energy_overlap: bool,
    /// Width of the enclosure of `E(G) - E(G')`.
    #[serde(with = "rational_text")]
    pub energy_gap_bound: BigRational,
    pub structurally_equal: bool,
    pub below_complete: bool,
    pub within_proof_bound: bool,
    pub details: Vec<CheckLine>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.details.iter().all(|c| c.passed)
    }
}

pub(crate) mod rational_text {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BigRational, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Runs every check for one family member pair: closed forms, noncospectrality,
/// equal energy (interval and exact factor bookkeeping) and the bounds against `E(K_N)`.
pub fn verify_family(f: FamilyId, i: u64, tol: &BigRational) -> Result<VerificationReport> {
    if !tol.is_positive() {
        return Err(Error::out_of_range("tolerance", "must be positive"));
    }
    let pair = family_pair(f, i)?;
    let mut details = Vec::new();
    let mut push = |check: &str, passed: bool, message: String| {
        details.push(CheckLine {
            check: check.to_string(),
            passed,
            message,
        });
        passed
    };

    // (a) block-form engine against the closed forms
    let mut polys = Vec::new();
    let mut closed_ok = true;
    for (m, label) in [(Member::G, "G"), (Member::GPrime, "G'")] {
        let computed = spectra::char_poly(pair.member(m))?;
        let closed = closed_form_char_poly(f, i, m)?;
        let ok = computed == closed;
        let msg = if ok {
            format!(
                "{label}: characteristic polynomial equals the closed form (degree {})",
                pair.order
            )
        } else {
            format!(
                "{label}: mismatch; computed {} vs closed form {}",
                computed.to_coefficient_list(),
                closed.to_coefficient_list()
            )
        };
        closed_ok &= push(
            &format!(
                "closed_form_{}",
                if m == Member::G { "g" } else { "g_prime" }
            ),
            ok,
            msg,
        );
        polys.push(computed);
    }
    let (pg, pgp) = (&polys[0], &polys[1]);

    // (b) noncospectral, with the distinguishing integer eigenvalues
    let noncospectral = push(
        "noncospectral",
        pg != pgp,
        "characteristic polynomials differ".to_string(),
    );
    let k = BigInt::from(i);
    let root_g: BigInt = -(BigInt::from(2) * &k + BigInt::from(1));
    let root_gp: BigInt = -(BigInt::from(2) * &k + BigInt::from(2));
    let distinguishing = pg.eval_int(&root_g).is_zero() && pgp.eval_int(&root_gp).is_zero();
    push(
        "distinguishing_roots",
        distinguishing,
        format!("{root_g} is an eigenvalue of G and {root_gp} of G'"),
    );

    // (c) equal energies
    let quarter = tol / BigRational::from_integer(4.into());
    let eg = spectra::energy(&pair.g.to_sequence(), &quarter)?;
    let egp = spectra::energy(&pair.g_prime.to_sequence(), &quarter)?;
    let overlap = eg.overlaps(&egp);
    let gap = eg.minus(&egp);
    let gap_width = gap.width();
    push(
        "energy_overlap",
        overlap && &gap_width <= tol,
        format!(
            "E(G) - E(G') in [{}, {}], enclosure width {:.3e} <= {:.1e}",
            crate::num::decimal_floor(&gap.lo, 15),
            crate::num::decimal_ceil(&gap.hi, 15),
            crate::num::to_f64(&gap_width),
            crate::num::to_f64(tol)
        ),
    );
    let structural = structural_equality(f, i, pg, pgp)?;
    let structurally_equal = structural.as_ref().is_some_and(|(a, b)| a == b);
    push(
        "energy_structural",
        structurally_equal,
        match structural {
            Some((a, b)) => format!(
                "shared factor divides both; remaining eigenvalues contribute {a} and {b} exactly"
            ),
            None => "shared factor does not divide both polynomials".to_string(),
        },
    );

    // (d) below the complete graph
    let kn = integer(BigInt::from(18) * &k + 8);
    let proof_bound = integer(BigInt::from(18) * &k + 6);
    let top = eg.hi.clone().max(egp.hi.clone());
    let below = push(
        "below_complete",
        top < kn,
        format!(
            "max upper energy bound {} < 18i+8 = {kn}",
            crate::num::decimal_ceil(&top, 12)
        ),
    );
    let within = push(
        "within_proof_bound",
        top <= &proof_bound + tol,
        format!("max upper energy bound <= 18i+6 = {proof_bound} (+ tolerance)"),
    );

    Ok(VerificationReport {
        family: f,
        i,
        order: pair.order,
        closed_form_match: closed_ok,
        noncospectral,
        distinguishing_roots: distinguishing,
        energy_g: eg,
        energy_g_prime: egp,
        energy_overlap: overlap,
        energy_gap_bound: gap_width,
        structurally_equal,
        below_complete: below,
        within_proof_bound: within,
        details,
    })
}

/// Divides both characteristic polynomials by the shared cubic/quartic and
/// returns the exact energy contributed by the remaining (integer) eigenvalues.
pub fn structural_equality(
    f: FamilyId,
    i: u64,
    pg: &IntPolynomial,
    pgp: &IntPolynomial,
) -> Result<Option<(BigInt, BigInt)>> {
    let shared = shared_factor(f, i)?;
    let (Ok(rest_g), Ok(rest_gp)) = (pg.divide_exact(&shared), pgp.divide_exact(&shared)) else {
        return Ok(None);
    };
    Ok(integer_root_energy(&rest_g).zip(integer_root_energy(&rest_gp)))
}

/// Sign and root-location checks on the four-block cubic
/// `q(x) = x^3 - (7i+2)x^2 - (7i+3)x + 12i^3 + 18i^2 + 6i`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CubicReport {
    pub i: u64,
    #[serde(with = "crate::num::bigint_json")]
    pub q_at_zero: BigInt,
    /// `12i^3 + 18i^2 + 6i`.
    #[serde(with = "crate::num::bigint_json")]
    pub q_at_zero_formula: BigInt,
    pub q_at_zero_positive: bool,
    /// Exact value of `q(-2i-1)`.
    #[serde(with = "crate::num::bigint_json")]
    pub q_at_minus: BigInt,
    /// Printed closed form `-24i^3 - 16i^2 + 6i` for the same value.
    #[serde(with = "crate::num::bigint_json")]
    pub q_at_minus_printed: BigInt,
    /// Expansion of `q(-2i-1)` by hand: `-24i^3 - 16i^2 - 2i`.
    #[serde(with = "crate::num::bigint_json")]
    pub q_at_minus_expanded: BigInt,
    pub q_at_minus_negative: bool,
    pub roots: Vec<RootEnclosure>,
    pub lambda1_in_range: bool,
    pub lambda2_positive: bool,
    pub lambda3_positive: bool,
    /// `-(x^2 coefficient)` equals `7i + 2`.
    pub trace_coefficient_ok: bool,
    pub root_sum_contains_trace: bool,
    pub details: Vec<CheckLine>,
}

impl CubicReport {
    /// The claims checked: `q(0) > 0`, `q(-2i-1) < 0`, `-2i-1 < l1 < 0 < l2 <= l3`
    /// and `l1 + l2 + l3 = 7i + 2`.
    pub fn claims_hold(&self) -> bool {
        self.q_at_zero == self.q_at_zero_formula
            && self.q_at_zero_positive
            && self.q_at_minus_negative
            && self.lambda1_in_range
            && self.lambda2_positive
            && self.lambda3_positive
            && self.trace_coefficient_ok
            && self.root_sum_contains_trace
    }

    /// Whether the printed closed form of `q(-2i-1)` agrees with the exact value.
    pub fn printed_value_matches(&self) -> bool {
        self.q_at_minus == self.q_at_minus_printed
    }
}

pub fn cubic_checks(i: u64) -> Result<CubicReport> {
    cubic_checks_with_width(i, &crate::spectra::default_precision())
}

pub fn cubic_checks_with_width(i: u64, width: &BigRational) -> Result<CubicReport> {
    let q = shared_factor(FamilyId::FourBlock, i)?;
    let k = BigInt::from(i);
    let k2 = &k * &k;
    let k3 = &k2 * &k;
    let n = |v: i64| BigInt::from(v);
    let q0 = q.eval_int(&BigInt::zero());
    let q0_formula = n(12) * &k3 + n(18) * &k2 + n(6) * &k;
    let left: BigInt = -(n(2) * &k + n(1));
    let qm = q.eval_int(&left);
    let qm_printed = n(-24) * &k3 - n(16) * &k2 + n(6) * &k;
    let qm_expanded = n(-24) * &k3 - n(16) * &k2 - n(2) * &k;
    let roots = isolate_real_roots(&q, width)?;
    let left_r = integer(left.clone());
    let zero = BigRational::zero();
    let simple = roots.len() == 3 && roots.iter().all(|r| r.multiplicity == 1);
    let l1 = simple && left_r < roots[0].lo && roots[0].hi < zero;
    let l2 = simple && roots[1].lo > zero;
    let l3 = simple && roots[2].lo > zero;
    let trace: BigInt = n(7) * &k + 2;
    let trace_ok = -q.coeff(2) == trace;
    let sum_lo: BigRational = roots.iter().map(|r| r.lo.clone()).sum();
    let sum_hi: BigRational = roots.iter().map(|r| r.hi.clone()).sum();
    let trace_r = integer(trace.clone());
    let sum_ok = sum_lo <= trace_r && trace_r <= sum_hi;

    let mut details = Vec::new();
    let mut push = |check: &str, passed: bool, message: String| {
        details.push(CheckLine {
            check: check.into(),
            passed,
            message,
        })
    };
    push(
        "q_at_zero",
        q0 == q0_formula && q0.is_positive(),
        format!("q(0) = {q0} = 12i^3+18i^2+6i > 0"),
    );
    push(
        "q_at_minus_negative",
        qm.is_negative(),
        format!("q({left}) = {qm} < 0"),
    );
    push(
        "q_at_minus_printed_form",
        qm == qm_printed,
        format!(
            "q({left}) = {qm}; -24i^3-16i^2+6i = {qm_printed}; -24i^3-16i^2-2i = {qm_expanded}"
        ),
    );
    push("lambda1_in_range", l1, format!("{left} < lambda1 < 0"));
    push(
        "lambda2_lambda3_positive",
        l2 && l3,
        "lambda2, lambda3 > 0".into(),
    );
    push(
        "root_sum",
        trace_ok && sum_ok,
        format!("lambda1 + lambda2 + lambda3 = 7i+2 = {trace}"),
    );

    Ok(CubicReport {
        i,
        q_at_zero: q0.clone(),
        q_at_zero_formula: q0_formula,
        q_at_zero_positive: q0.is_positive(),
        q_at_minus: qm.clone(),
        q_at_minus_printed: qm_printed,
        q_at_minus_expanded: qm_expanded,
        q_at_minus_negative: qm.is_negative(),
        roots,
        lambda1_in_range: l1,
        lambda2_positive: l2,
        lambda3_positive: l3,
        trace_coefficient_ok: trace_ok,
        root_sum_contains_trace: sum_ok,
        details,
    })
}
