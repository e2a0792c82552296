//! Spectral data of threshold graphs read off the block form.
//!
//! For a connected block form `(0^a1 1^a2 ... 0^a(B-1) 1^aB)`:
//!
//! * the eigenvalue 0 has multiplicity `sum (a_odd - 1)`;
//! * the eigenvalue -1 has multiplicity `sum (a_even - 1)`, plus one when `a1 = 1`;
//! * the remaining eigenvalues are the roots of a degree-`B` polynomial `Q_B`
//!   built from the parity-alternating index sums `gamma_B(l)`.
//!
//! The characteristic polynomial here is always the monic `det(xI - A)`. It
//! is assembled as `x^s0 (x+1)^s1 Q_B(x)` with `s1 = sum (a_even - 1)`; when
//! `a1 = 1` the extra `(x+1)` lives inside `Q_B`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{decimal_ceil, decimal_floor, parse_rational};
use crate::poly::{isolate_real_roots, IntPolynomial, RootEnclosure};
use crate::seq::{BlockForm, CreationSequence};

/// Default energy precision, `10^-10`.
pub fn default_precision() -> BigRational {
    crate::num::ten_to_minus(10)
}

/// Fractional digits used when an energy interval is printed as decimals.
pub const ENERGY_DECIMAL_PLACES: usize = 20;

fn require_connected(b: &BlockForm) -> Result<()> {
    if b.block_count() % 2 == 1 {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Sum of `(count - 1)` over the blocks at positions `first, first + 2, ...` (0-based).
fn excess(b: &BlockForm, first: usize) -> usize {
    b.counts()
        .iter()
        .skip(first)
        .step_by(2)
        .map(|&c| c - 1)
        .sum()
}

/// Multiplicity of the eigenvalue 0.
pub fn multiplicity_zero(b: &BlockForm) -> Result<usize> {
    require_connected(b)?;
    Ok(excess(b, 0))
}

/// Multiplicity of the eigenvalue -1.
pub fn multiplicity_minus_one(b: &BlockForm) -> Result<usize> {
    require_connected(b)?;
    let bonus = usize::from(b.counts()[0] == 1);
    Ok(excess(b, 1) + bonus)
}

/// Strictly increasing index sequence in `[1, B]` with alternating parity and
/// last term of the same parity as `B`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSequence(pub Vec<usize>);

impl IndexSequence {
    pub fn terms(&self) -> &[usize] {
        &self.0
    }
}

/// The set `I_{B,l}` in lexicographic order. `l = 0` gives the single empty sequence.
pub fn index_sequences(block_count: usize, len: usize) -> Result<Vec<IndexSequence>> {
    if len > block_count {
        return Err(Error::out_of_range(
            "l",
            format!("need 0 <= l <= B = {block_count}, got {len}"),
        ));
    }
    // Position j (1-based) of a length-l sequence must have parity B + (l - j).
    fn extend(b: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSequence>) {
        let j = cur.len() + 1;
        if j > len {
            out.push(IndexSequence(cur.clone()));
            return;
        }
        let parity = (b + len - j) % 2;
        let start = cur.last().map_or(1, |&t| t + 1);
        // leave room for the remaining len - j terms
        let stop = b - (len - j);
        for t in (start..=stop).filter(|t| t % 2 == parity) {
            cur.push(t);
            extend(b, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(block_count, len, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `gamma_B(l)` for every `l = 0..=B`, by dynamic programming over the last index.
///
/// `ending[j][k]` is the sum of products over alternating increasing sequences
/// of length `k` ending at block `j`; `gamma(l)` adds those ending at a block
/// with the parity of `B`.
pub fn gamma_table(b: &BlockForm) -> Vec<BigInt> {
    let a = b.counts();
    let nb = a.len();
    let mut ending = vec![vec![BigInt::zero(); nb + 1]; nb];
    for j in 0..nb {
        ending[j][1] = BigInt::from(a[j]);
        for k in 2..=j + 1 {
            let mut s = BigInt::zero();
            for i in (0..j).filter(|i| (j - i) % 2 == 1) {
                s += &ending[i][k - 1];
            }
            ending[j][k] = s * a[j];
        }
    }
    let mut table = vec![BigInt::zero(); nb + 1];
    table[0] = BigInt::one();
    // 0-based j has the parity of B when j + 1 == B (mod 2)
    for j in (0..nb).filter(|j| (j + 1) % 2 == nb % 2) {
        for k in 1..=nb {
            table[k] += &ending[j][k];
        }
    }
    table
}

pub fn gamma(b: &BlockForm, len: usize) -> Result<BigInt> {
    if len > b.block_count() {
        return Err(Error::out_of_range(
            "l",
            format!("need 0 <= l <= B = {}, got {len}", b.block_count()),
        ));
    }
    Ok(gamma_table(b).swap_remove(len))
}

/// The degree-`B` factor `Q_B(x)` carrying the eigenvalues other than 0 and -1.
pub fn q_polynomial(b: &BlockForm) -> Result<IntPolynomial> {
    let nb = b.block_count();
    if nb < 2 {
        return Err(Error::out_of_range(
            "block count",
            format!("need B >= 2, got {nb}"),
        ));
    }
    require_connected(b)?;
    let g = gamma_table(b);
    let r0 = nb % 2;
    let r1 = 1 - r0;
    let m = nb / 2;
    let xy = &IntPolynomial::x() * &IntPolynomial::x_plus(1);
    let mut xy_pow = vec![IntPolynomial::one()];
    for k in 1..=m {
        let next = &xy_pow[k - 1] * &xy;
        xy_pow.push(next);
    }
    let signed = |k: usize, gm: &BigInt| {
        let term = xy_pow[k].scale(gm);
        if (m - k) % 2 == 1 {
            -&term
        } else {
            term
        }
    };
    let mut first = IntPolynomial::zero();
    for k in 0..=m {
        first = &first + &signed(k, &g[nb - 2 * k - r0]);
    }
    let mut second = IntPolynomial::zero();
    for k in 0..=(m - r1) {
        second = &second + &signed(k, &g[nb - 2 * k - r1]);
    }
    Ok(&(&IntPolynomial::monomial(r0) * &first) + &(&IntPolynomial::monomial(r1) * &second))
}

/// Monic characteristic polynomial of a connected threshold graph from its block form.
pub fn char_poly(b: &BlockForm) -> Result<IntPolynomial> {
    require_connected(b)?;
    let q = q_polynomial(b)?;
    let head = &IntPolynomial::monomial(excess(b, 0)) * &IntPolynomial::x_plus(1).pow(excess(b, 1));
    Ok(&head * &q)
}

/// Characteristic polynomial of any threshold graph: trailing isolated vertices
/// contribute factors of `x`, and `K1` is `x`.
pub fn characteristic_polynomial(s: &CreationSequence) -> IntPolynomial {
    let (core, isolated) = s.split_isolated();
    let base = if core.order() == 1 {
        IntPolynomial::x()
    } else {
        char_poly(&core.to_blocks()).expect("prefix ending in 1 is connected")
    };
    &IntPolynomial::monomial(isolated) * &base
}

pub fn is_cospectral(s1: &CreationSequence, s2: &CreationSequence) -> bool {
    s1.order() == s2.order() && characteristic_polynomial(s1) == characteristic_polynomial(s2)
}

/// Closed rational interval guaranteed to contain a graph energy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnergyInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl EnergyInterval {
    pub fn exact(v: BigRational) -> Self {
        Self {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Enclosure of `self - other`.
    pub fn minus(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct EnergyRecord {
    lo: String,
    hi: String,
}

impl Serialize for EnergyInterval {
    /// Decimal endpoints rounded outward.
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        EnergyRecord {
            lo: decimal_floor(&self.lo, ENERGY_DECIMAL_PLACES),
            hi: decimal_ceil(&self.hi, ENERGY_DECIMAL_PLACES),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EnergyInterval {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let rec = EnergyRecord::deserialize(deserializer)?;
        let parse = |s: &str| parse_rational(s).map_err(serde::de::Error::custom);
        Ok(Self {
            lo: parse(&rec.lo)?,
            hi: parse(&rec.hi)?,
        })
    }
}

/// Everything known about the spectrum of one connected threshold graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralSummary {
    pub sequence: CreationSequence,
    #[serde(rename = "N")]
    pub order: usize,
    pub m0: usize,
    pub m_minus1: usize,
    pub char_poly: IntPolynomial,
    pub nontrivial_factor: IntPolynomial,
    pub roots: Vec<RootEnclosure>,
    pub energy: EnergyInterval,
}

impl SpectralSummary {
    pub fn block_form(&self) -> BlockForm {
        self.sequence.to_blocks()
    }
}

/// Energy contribution interval `[min |t|, max |t|]` of one enclosure, times its multiplicity.
fn abs_bounds(e: &RootEnclosure) -> (BigRational, BigRational) {
    let k = BigRational::from_integer(e.multiplicity.into());
    let (lo, hi) = if e.lo.is_negative() && e.hi.is_positive() {
        (BigRational::zero(), e.lo.abs().max(e.hi.abs()))
    } else {
        let (a, b) = (e.lo.abs(), e.hi.abs());
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    };
    (&lo * &k, &hi * &k)
}

/// Sum of `multiplicity * |root|` over the enclosures, as an interval.
pub fn energy_from_roots(roots: &[RootEnclosure]) -> EnergyInterval {
    let mut lo = BigRational::zero();
    let mut hi = BigRational::zero();
    for e in roots {
        let (a, b) = abs_bounds(e);
        lo += a;
        hi += b;
    }
    EnergyInterval { lo, hi }
}

/// Multiplicities, characteristic polynomial, root enclosures and an energy
/// interval of width at most `precision`.
pub fn spectral_summary(s: &CreationSequence, precision: &BigRational) -> Result<SpectralSummary> {
    if !s.is_connected() {
        return Err(Error::Disconnected);
    }
    if !precision.is_positive() {
        return Err(Error::out_of_range("precision", "must be positive"));
    }
    let (m0, m1, cp) = if s.order() == 1 {
        (1, 0, IntPolynomial::x())
    } else {
        let b = s.to_blocks();
        (
            multiplicity_zero(&b)?,
            multiplicity_minus_one(&b)?,
            char_poly(&b)?,
        )
    };
    let trivial = &IntPolynomial::monomial(m0) * &IntPolynomial::x_plus(1).pow(m1);
    let nontrivial = cp.divide_exact(&trivial).map_err(|_| {
        Error::Internal(format!(
            "x^{m0} (x+1)^{m1} does not divide the characteristic polynomial of {s}"
        ))
    })?;
    if nontrivial.coeff(0).is_zero() || nontrivial.eval_int(&BigInt::from(-1)).is_zero() {
        return Err(Error::Internal(format!(
            "multiplicities of 0 / -1 are too small for {s}"
        )));
    }
    let deg = nontrivial.degree().unwrap_or(0);
    let mut roots = if deg == 0 {
        Vec::new()
    } else {
        let width = precision / BigRational::from_integer(deg.into());
        isolate_real_roots(&nontrivial, &width)?
    };
    let energy = energy_from_roots(&roots) + BigRational::from_integer(m1.into());
    if m0 > 0 {
        roots.push(RootEnclosure::exact(BigRational::zero(), m0));
    }
    if m1 > 0 {
        roots.push(RootEnclosure::exact(-BigRational::one(), m1));
    }
    roots.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(SpectralSummary {
        sequence: s.clone(),
        order: s.order(),
        m0,
        m_minus1: m1,
        char_poly: cp,
        nontrivial_factor: nontrivial,
        roots,
        energy,
    })
}

impl std::ops::Add<BigRational> for EnergyInterval {
    type Output = EnergyInterval;

    fn add(self, v: BigRational) -> EnergyInterval {
        EnergyInterval {
            lo: self.lo + &v,
            hi: self.hi + v,
        }
    }
}

/// Energy interval of any threshold graph (isolated vertices contribute nothing).
pub fn energy(s: &CreationSequence, precision: &BigRational) -> Result<EnergyInterval> {
    let (core, _) = s.split_isolated();
    if core.order() == 1 {
        return Ok(EnergyInterval::exact(BigRational::zero()));
    }
    Ok(spectral_summary(&core, precision)?.energy)
}

/// `sum mult * |root|` when every real root of `p` is an integer, else `None`.
/// `p` is assumed to have only real roots.
pub fn integer_root_energy(p: &IntPolynomial) -> Option<BigInt> {
    let deg = p.degree()?;
    if deg == 0 {
        return Some(BigInt::zero());
    }
    let roots = isolate_real_roots(p, &crate::num::rational(1, 4)).ok()?;
    let mut rest = p.clone();
    let mut total = BigInt::zero();
    for e in &roots {
        let k = e.midpoint().round().to_integer();
        if !e.contains(&BigRational::from_integer(k.clone())) {
            return None;
        }
        let (r, mult) = rest.divide_out(&IntPolynomial::x_plus(-&k)).ok()?;
        if mult != e.multiplicity {
            return None;
        }
        rest = r;
        total += k.abs() * BigInt::from(mult);
    }
    (rest.degree() == Some(0)).then_some(total)
}

/// Exact `E(G) - E(G')` from two characteristic polynomials, when it is decidable
/// by factor bookkeeping: after removing the common factor, both cofactors must
/// split into integer linear factors.
pub fn exact_energy_difference(p: &IntPolynomial, q: &IntPolynomial) -> Option<BigInt> {
    let common = p.gcd(q);
    let rp = p.divide_exact(&common).ok()?;
    let rq = q.divide_exact(&common).ok()?;
    Some(integer_root_energy(&rp)? - integer_root_energy(&rq)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{integer, rational};
    use crate::poly::charpoly_oracle;
    use crate::seq::{adjacency_matrix, enumerate_connected, parse_sequence};

    fn blocks(c: &[usize]) -> BlockForm {
        BlockForm::new(c.to_vec()).unwrap()
    }

    fn seq(t: &str) -> CreationSequence {
        parse_sequence(t).unwrap()
    }

    /// Brute force: all C(B, l) subsets filtered by the parity rules.
    fn brute_index_sets(nb: usize, l: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << nb) {
            if mask.count_ones() as usize != l {
                continue;
            }
            let t: Vec<usize> = (0..nb)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i + 1)
                .collect();
            let alternating = t.windows(2).all(|w| (w[0] + w[1]) % 2 == 1);
            let last_ok = t.last().is_none_or(|&x| x % 2 == nb % 2);
            if alternating && last_ok {
                out.push(t);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn worked_index_sets() {
        let as_vecs = |nb, l| {
            index_sequences(nb, l)
                .unwrap()
                .into_iter()
                .map(|s| s.0)
                .collect::<Vec<_>>()
        };
        assert_eq!(
            as_vecs(7, 4),
            vec![
                vec![2, 3, 4, 5],
                vec![2, 3, 4, 7],
                vec![2, 3, 6, 7],
                vec![2, 5, 6, 7],
                vec![4, 5, 6, 7]
            ]
        );
        assert_eq!(
            as_vecs(6, 4),
            vec![
                vec![1, 2, 3, 4],
                vec![1, 2, 3, 6],
                vec![1, 2, 5, 6],
                vec![1, 4, 5, 6],
                vec![3, 4, 5, 6]
            ]
        );
        assert_eq!(as_vecs(4, 0), vec![Vec::<usize>::new()]);
        assert!(index_sequences(4, 5).is_err());
    }

    #[test]
    fn index_sets_match_brute_force() {
        for nb in 1..=10 {
            for l in 0..=nb {
                let got: Vec<Vec<usize>> = index_sequences(nb, l)
                    .unwrap()
                    .into_iter()
                    .map(|s| s.0)
                    .collect();
                assert_eq!(got, brute_index_sets(nb, l), "B={nb} l={l}");
            }
        }
    }

    fn gamma_by_enumeration(b: &BlockForm, l: usize) -> BigInt {
        index_sequences(b.block_count(), l)
            .unwrap()
            .iter()
            .map(|t| {
                t.terms()
                    .iter()
                    .map(|&i| BigInt::from(b.counts()[i - 1]))
                    .product::<BigInt>()
            })
            .sum()
    }

    #[test]
    fn gamma_values() {
        let b = blocks(&[2, 3, 3, 2]);
        assert_eq!(gamma(&b, 3).unwrap(), BigInt::from(18));
        assert_eq!(gamma(&b, 0).unwrap(), BigInt::one());
        // a1a2 + a1a4 + a3a4 with (2,3,3,2)
        assert_eq!(gamma(&b, 2).unwrap(), BigInt::from(6 + 4 + 6));
        assert!(gamma(&b, 5).is_err());
        let odd = blocks(&[1, 2, 3]);
        // I_{3,3} = {(1,2,3)}; I_{3,2} = {(2,3)}
        assert_eq!(gamma(&odd, 3).unwrap(), BigInt::from(6));
        assert_eq!(gamma(&odd, 2).unwrap(), BigInt::from(6));
    }

    #[test]
    fn gamma_dp_matches_enumeration() {
        let mut state = 7u64;
        for _ in 0..60 {
            let nb = 1 + (state % 9) as usize;
            let counts: Vec<usize> = (0..nb)
                .map(|_| {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    1 + (state >> 33) as usize % 7
                })
                .collect();
            let b = blocks(&counts);
            let table = gamma_table(&b);
            for l in 0..=nb {
                assert_eq!(table[l], gamma_by_enumeration(&b, l), "{counts:?} l={l}");
            }
            if nb % 2 == 0 {
                let all: BigInt = counts.iter().map(|&c| BigInt::from(c)).product();
                assert_eq!(table[nb], all);
            }
        }
    }

    #[test]
    fn multiplicities() {
        let g10 = blocks(&[2, 3, 3, 2]);
        assert_eq!(multiplicity_zero(&g10).unwrap(), 3);
        assert_eq!(multiplicity_minus_one(&g10).unwrap(), 3);
        assert_eq!(multiplicity_zero(&blocks(&[1, 6])).unwrap(), 0);
        assert_eq!(multiplicity_minus_one(&blocks(&[1, 6])).unwrap(), 6);
        assert_eq!(multiplicity_zero(&blocks(&[3, 6, 3, 2])).unwrap(), 4);
        assert_eq!(
            multiplicity_minus_one(&blocks(&[1, 3, 1, 4, 3, 2])).unwrap(),
            7
        );
        assert_eq!(
            multiplicity_zero(&blocks(&[2, 3, 1])),
            Err(Error::Disconnected)
        );
        assert_eq!(
            multiplicity_minus_one(&blocks(&[2])),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn q_for_complete_graphs() {
        for n in 2..12i64 {
            let q = q_polynomial(&blocks(&[1, n as usize - 1])).unwrap();
            assert_eq!(
                q,
                &IntPolynomial::x_plus(-(n - 1)) * &IntPolynomial::x_plus(1)
            );
        }
        assert!(q_polynomial(&blocks(&[3])).is_err());
        assert!(q_polynomial(&blocks(&[1, 2, 3])).is_err());
    }

    #[test]
    fn q_has_integer_linear_factor() {
        let q = q_polynomial(&blocks(&[3, 6, 3, 2])).unwrap();
        assert_eq!(q.degree(), Some(4));
        assert!(q.is_monic());
        assert_eq!(
            q.divide_exact(&IntPolynomial::x_plus(3)).unwrap(),
            IntPolynomial::from_i64s(&[36, -10, -9, 1])
        );
    }

    #[test]
    fn char_poly_of_family_graph() {
        let expected = &(&IntPolynomial::monomial(4) * &IntPolynomial::x_plus(1).pow(6))
            * &(&IntPolynomial::x_plus(3) * &IntPolynomial::from_i64s(&[36, -10, -9, 1]));
        assert_eq!(char_poly(&blocks(&[3, 6, 3, 2])).unwrap(), expected);
        for n in 2..10i64 {
            let kn = char_poly(&blocks(&[1, n as usize - 1])).unwrap();
            assert_eq!(
                kn,
                &IntPolynomial::x_plus(-(n - 1)) * &IntPolynomial::x_plus(1).pow(n as usize - 1)
            );
        }
    }

    #[test]
    fn char_poly_matches_oracle_small_corpus() {
        for n in 2..=9 {
            for s in enumerate_connected(n).unwrap() {
                let oracle = charpoly_oracle(&adjacency_matrix(&s)).unwrap();
                assert_eq!(char_poly(&s.to_blocks()).unwrap(), oracle, "{s}");
            }
        }
    }

    #[test]
    fn disconnected_polynomials_and_energy() {
        // P3 plus two isolated vertices
        let s = seq("00100");
        assert_eq!(
            characteristic_polynomial(&s),
            IntPolynomial::from_i64s(&[0, 0, 0, -2, 0, 1])
        );
        assert_eq!(
            characteristic_polynomial(&seq("0^3")),
            IntPolynomial::monomial(3)
        );
        assert_eq!(
            energy(&seq("0^4"), &default_precision()).unwrap(),
            EnergyInterval::exact(BigRational::zero())
        );
        assert!(spectral_summary(&s, &default_precision()).is_err());
        let e = energy(&s, &rational(1, 1_000_000)).unwrap();
        // 2 sqrt 2, checked by squaring the endpoints
        assert!(&e.lo * &e.lo <= integer(8) && integer(8) <= &e.hi * &e.hi);
        assert!(e.width() <= rational(1, 1_000_000));
    }

    #[test]
    fn summary_of_ten_vertex_graph() {
        let s = spectral_summary(&seq("(0^2 1^3 0^3 1^2)"), &default_precision()).unwrap();
        assert_eq!((s.m0, s.m_minus1, s.order), (3, 3, 10));
        assert_eq!(s.nontrivial_factor.degree(), Some(4));
        assert!(s.energy.width() <= default_precision());
        let total: usize = s.roots.iter().map(|r| r.multiplicity).sum();
        assert_eq!(total, 10);
    }

    #[test]
    fn complete_graph_energy_is_exact() {
        for n in 2..20usize {
            let s = BlockForm::new(vec![1, n - 1]).unwrap().to_sequence();
            let e = energy(&s, &default_precision()).unwrap();
            assert!(e.contains(&integer(2 * n as i64 - 2)));
        }
        assert_eq!(
            energy(&seq("01"), &default_precision()).unwrap(),
            EnergyInterval::exact(integer(2))
        );
    }

    #[test]
    fn cospectrality() {
        let g = seq("(0^3 1^6 0^3 1^2)");
        assert!(is_cospectral(&g, &g));
        assert!(!is_cospectral(&g, &seq("(0^4 1^3 0^3 1^4)")));
        assert!(!is_cospectral(&seq("001"), &seq("011")));
        assert!(!is_cospectral(&seq("001"), &seq("0011")));
    }

    #[test]
    fn exact_energy_bookkeeping() {
        let g = char_poly(&blocks(&[3, 6, 3, 2])).unwrap();
        let h = char_poly(&blocks(&[4, 3, 3, 4])).unwrap();
        assert_eq!(exact_energy_difference(&g, &h), Some(BigInt::zero()));
        // K3 vs P3: cofactors x^3 - 3x - 2 and x^3 - 2x; P3 has irrational roots
        let k3 = IntPolynomial::from_i64s(&[-2, -3, 0, 1]);
        let p3 = IntPolynomial::from_i64s(&[0, -2, 0, 1]);
        assert_eq!(exact_energy_difference(&k3, &p3), None);
        assert_eq!(integer_root_energy(&k3), Some(BigInt::from(4)));
    }

    #[test]
    fn energy_intervals_serialize_outward() {
        let e = EnergyInterval {
            lo: rational(1, 3),
            hi: rational(2, 3),
        };
        let text = serde_json::to_string(&e).unwrap();
        assert_eq!(
            text,
            r#"{"lo":"0.33333333333333333333","hi":"0.66666666666666666667"}"#
        );
        let back: EnergyInterval = serde_json::from_str(&text).unwrap();
        assert!(back.lo <= e.lo && e.hi <= back.hi);
    }
}
