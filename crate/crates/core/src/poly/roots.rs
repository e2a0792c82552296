//! Real-root isolation with Sturm sequences over exact rationals.
//!
//! Every root is reported inside a closed rational enclosure together with its
//! multiplicity. Multiplicities come from a square-free decomposition; each
//! square-free factor is isolated by Sturm-steered bisection on a dyadic grid
//! and then refined by plain sign-change bisection.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` holding exactly `multiplicity` roots (with multiplicity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEnclosure {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

impl RootEnclosure {
    pub fn exact(root: BigRational, multiplicity: usize) -> Self {
        Self {
            lo: root.clone(),
            hi: root,
            multiplicity,
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, t: &BigRational) -> bool {
        &self.lo <= t && t <= &self.hi
    }
}

#[derive(Serialize, Deserialize)]
struct EnclosureRecord {
    lo: String,
    hi: String,
    multiplicity: usize,
}

impl Serialize for RootEnclosure {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        EnclosureRecord {
            lo: self.lo.to_string(),
            hi: self.hi.to_string(),
            multiplicity: self.multiplicity,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RootEnclosure {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let rec = EnclosureRecord::deserialize(deserializer)?;
        let parse = |s: &str| s.parse::<BigRational>().map_err(serde::de::Error::custom);
        Ok(Self {
            lo: parse(&rec.lo)?,
            hi: parse(&rec.hi)?,
            multiplicity: rec.multiplicity,
        })
    }
}

/// Yun's square-free decomposition: pairs `(f_k, k)` with each `f_k` primitive,
/// square-free and pairwise coprime, such that `p = c * prod f_k^k`.
/// Constant factors are omitted.
pub fn squarefree_decomposition(p: &IntPolynomial) -> Result<Vec<(IntPolynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.primitive_part();
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.divide_exact(&a0)?;
    let c = df.divide_exact(&a0)?;
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut k = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let next_b = b.divide_exact(&a)?;
        let c = d.divide_exact(&a)?;
        d = &c - &next_b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.primitive_part(), k));
        }
        b = next_b;
        k += 1;
    }
    Ok(out)
}

/// Sturm chain `p, p', -rem(p, p'), ...`, each member scaled by a positive constant.
pub fn sturm_sequence(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![p.clone()];
    let mut cur = p.derivative();
    while !cur.is_zero() {
        let prev = chain.last().expect("nonempty");
        let (pd, cd) = (prev.degree().unwrap_or(0), cur.degree().unwrap_or(0));
        let prem = prev.pseudo_rem(&cur).expect("cur is nonzero");
        // prem = lc^(pd - cd + 1) * rem; flip so the result is a positive multiple of -rem.
        let lc_negative = cur.leading().is_some_and(Signed::is_negative);
        let odd = (pd - cd + 1) % 2 == 1;
        let next = if lc_negative && odd { prem } else { -&prem };
        let next = scale_positive(&next);
        chain.push(cur);
        cur = next;
    }
    chain
}

/// Divides by the (positive) content, keeping signs.
fn scale_positive(p: &IntPolynomial) -> IntPolynomial {
    if p.is_zero() {
        return p.clone();
    }
    let g = p.content();
    IntPolynomial::new(p.coeffs().iter().map(|c| c / &g).collect())
}

fn sign_variations(chain: &[IntPolynomial], t: &BigRational) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for q in chain {
        let s = q.sign_at(t);
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Smallest power of two strictly above the Cauchy root bound.
fn root_bound(p: &IntPolynomial) -> BigRational {
    let lc = p.leading().expect("nonzero").abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    // |root| < 1 + max|c_k| / |lc| <= 1 + ceil(max / lc)
    let bound = BigInt::one() + (&max + &lc - BigInt::one()) / &lc;
    let mut m = BigInt::one();
    while m <= bound {
        m <<= 1;
    }
    BigRational::from_integer(m)
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

enum Isolated {
    /// Open interval with non-root endpoints holding one simple root of the
    /// attached polynomial (the input after any rational deflations).
    Interval(BigRational, BigRational, IntPolynomial),
    Point(BigRational),
}

/// Isolates the distinct roots of a square-free polynomial.
fn isolate_squarefree(f: &IntPolynomial) -> Vec<Isolated> {
    let mut found = Vec::new();
    let mut f = f.clone();
    'restart: loop {
        if f.degree().unwrap_or(0) == 0 {
            return found;
        }
        let chain = sturm_sequence(&f);
        let m = root_bound(&f);
        let lo = -m.clone();
        let mut stack = vec![(
            lo.clone(),
            m.clone(),
            sign_variations(&chain, &lo),
            sign_variations(&chain, &m),
        )];
        let mut intervals = Vec::new();
        while let Some((a, b, va, vb)) = stack.pop() {
            let count = va - vb;
            if count == 0 {
                continue;
            }
            if count == 1 {
                intervals.push(Isolated::Interval(a, b, f.clone()));
                continue;
            }
            let mid = (&a + &b) * half();
            if f.sign_at(&mid) == Ordering::Equal {
                // Rational root on the grid: deflate by (den*x - num) and start over.
                let lin = IntPolynomial::new(vec![-mid.numer().clone(), mid.denom().clone()]);
                f = f
                    .divide_exact(&lin)
                    .expect("rational root of a primitive polynomial");
                found.push(Isolated::Point(mid));
                continue 'restart;
            }
            let vm = sign_variations(&chain, &mid);
            stack.push((mid.clone(), b, vm, vb));
            stack.push((a, mid, va, vm));
        }
        found.extend(intervals);
        return found;
    }
}

/// Bisects `(a, b)` around the single simple root of `f` until the width is at most `width`.
fn refine(
    f: &IntPolynomial,
    a: &mut BigRational,
    b: &mut BigRational,
    width: &BigRational,
) -> Option<BigRational> {
    let sa = f.sign_at(a);
    while &(&*b - &*a) > width {
        let mid = (&*a + &*b) * half();
        let sm = f.sign_at(&mid);
        if sm == Ordering::Equal {
            return Some(mid);
        }
        if sm == sa {
            *a = mid;
        } else {
            *b = mid;
        }
    }
    None
}

struct Candidate {
    /// Polynomial to refine against; `None` for exact points.
    poly: Option<usize>,
    lo: BigRational,
    hi: BigRational,
    multiplicity: usize,
}

/// Isolates every real root of `p` to an enclosure of width at most `width`,
/// sorted ascending and pairwise disjoint.
pub fn isolate_real_roots(p: &IntPolynomial, width: &BigRational) -> Result<Vec<RootEnclosure>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !width.is_positive() {
        return Err(Error::out_of_range("width", "must be positive"));
    }
    let factors = squarefree_decomposition(p)?;
    let mut polys = Vec::new();
    let mut cands = Vec::new();
    for (f, k) in &factors {
        for iso in isolate_squarefree(f) {
            let (lo, hi, poly) = match iso {
                Isolated::Point(r) => (r.clone(), r, None),
                Isolated::Interval(mut a, mut b, g) => {
                    let hit = refine(&g, &mut a, &mut b, width);
                    polys.push(g);
                    match hit {
                        Some(r) => (r.clone(), r, None),
                        None => (a, b, Some(polys.len() - 1)),
                    }
                }
            };
            cands.push(Candidate {
                poly,
                lo,
                hi,
                multiplicity: *k,
            });
        }
    }
    separate(&mut cands, &polys);
    Ok(cands
        .into_iter()
        .map(|c| RootEnclosure {
            lo: c.lo,
            hi: c.hi,
            multiplicity: c.multiplicity,
        })
        .collect())
}

/// Shrinks enclosures until neighbours no longer touch. Roots of coprime
/// factors are distinct, so this terminates.
fn separate(cands: &mut [Candidate], polys: &[IntPolynomial]) {
    loop {
        cands.sort_by(|x, y| x.lo.cmp(&y.lo).then_with(|| x.hi.cmp(&y.hi)));
        let clash = cands.windows(2).position(|w| w[0].hi >= w[1].lo);
        let Some(i) = clash else {
            return;
        };
        let wa = &cands[i].hi - &cands[i].lo;
        let wb = &cands[i + 1].hi - &cands[i + 1].lo;
        let j = if wa >= wb { i } else { i + 1 };
        let c = &mut cands[j];
        let Some(idx) = c.poly else {
            debug_assert!(false, "two exact enclosures of one root");
            return;
        };
        let f = &polys[idx];
        let target = (&c.hi - &c.lo) * half();
        if let Some(r) = refine(f, &mut c.lo, &mut c.hi, &target) {
            c.lo = r.clone();
            c.hi = r;
            c.poly = None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn int(n: i64) -> BigRational {
        rat(n, 1)
    }

    #[test]
    fn sqrt_two_pair() {
        let w = rat(1, 1000);
        let roots = isolate_real_roots(&p(&[-2, 0, 1]), &w).unwrap();
        assert_eq!(roots.len(), 2);
        for (r, target) in roots
            .iter()
            .zip([-std::f64::consts::SQRT_2, std::f64::consts::SQRT_2])
        {
            assert!(r.width() <= w);
            assert_eq!(r.multiplicity, 1);
            let lo = r.lo.to_string().parse::<BigRational>().unwrap();
            let f = |q: &BigRational| {
                let (n, d) = (q.numer().to_string(), q.denom().to_string());
                n.parse::<f64>().unwrap() / d.parse::<f64>().unwrap()
            };
            assert!(f(&lo) <= target && target <= f(&r.hi));
            // endpoints are sign-definite
            assert_ne!(p(&[-2, 0, 1]).sign_at(&r.lo), Ordering::Equal);
        }
    }

    #[test]
    fn exact_rational_triple_root() {
        let roots = isolate_real_roots(&p(&[1, 3, 3, 1]), &rat(1, 1000)).unwrap();
        assert_eq!(roots, vec![RootEnclosure::exact(int(-1), 3)]);
    }

    #[test]
    fn cubic_brackets() {
        let q = p(&[36, -10, -9, 1]);
        // the brackets come from exact sign changes
        for (a, b) in [(-3, -2), (1, 2), (9, 10)] {
            assert_ne!(q.sign_at(&int(a)), q.sign_at(&int(b)));
        }
        let roots = isolate_real_roots(&q, &rat(1, 1 << 20)).unwrap();
        assert_eq!(roots.len(), 3);
        for (r, (a, b)) in roots.iter().zip([(-3, -2), (1, 2), (9, 10)]) {
            assert!(int(a) < r.lo && r.hi < int(b), "{r:?}");
        }
    }

    #[test]
    fn mixed_multiplicities_and_nonreal_roots() {
        // x^3 (x+1)^2 (x-1/2)(x^2+1)(x^2-3)
        let f = &(&(&IntPolynomial::monomial(3) * &p(&[1, 1]).pow(2)) * &p(&[-1, 2]))
            * &(&p(&[1, 0, 1]) * &p(&[-3, 0, 1]));
        let roots = isolate_real_roots(&f, &rat(1, 1 << 16)).unwrap();
        let mults: Vec<usize> = roots.iter().map(|r| r.multiplicity).collect();
        assert_eq!(mults, vec![1, 2, 3, 1, 1]);
        assert_eq!(roots[1], RootEnclosure::exact(int(-1), 2));
        assert_eq!(roots[2], RootEnclosure::exact(int(0), 3));
        assert_eq!(roots[3], RootEnclosure::exact(rat(1, 2), 1));
        assert!(roots.windows(2).all(|w| w[0].hi < w[1].lo));
        let total: usize = mults.iter().sum();
        assert_eq!(total, f.degree().unwrap() - 2);
    }

    #[test]
    fn close_roots_of_different_factors_are_separated() {
        // (x - 1/3)^2 (3x - 1 + 1/1000 scaled) : roots 1/3 and 333/1000
        let f = &p(&[-1, 3]).pow(2) * &p(&[-333, 1000]);
        let roots = isolate_real_roots(&f, &rat(1, 4)).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].hi < roots[1].lo);
        assert_eq!(roots[0].multiplicity, 1);
        assert_eq!(roots[1].multiplicity, 2);
    }

    #[test]
    fn grid_roots_are_deflated_before_refinement() {
        let roots = isolate_real_roots(&p(&[0, 4, 1]), &rat(1, 4)).unwrap();
        assert_eq!(
            roots,
            vec![
                RootEnclosure::exact(int(-4), 1),
                RootEnclosure::exact(int(0), 1)
            ]
        );
        // x (x^2 - 2): 0 is hit on the first split, the irrational pair remains
        let roots = isolate_real_roots(&p(&[0, -2, 0, 1]), &rat(1, 1024)).unwrap();
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[1], RootEnclosure::exact(int(0), 1));
        assert!(roots[0].hi < int(0) && int(0) < roots[2].lo);
        assert!(roots.iter().all(|r| r.width() <= rat(1, 1024)));
    }

    #[test]
    fn errors_and_constants() {
        assert_eq!(
            isolate_real_roots(&IntPolynomial::zero(), &int(1)),
            Err(Error::ZeroPolynomial)
        );
        assert!(isolate_real_roots(&p(&[0, 1]), &int(0)).is_err());
        assert!(isolate_real_roots(&p(&[7]), &int(1)).unwrap().is_empty());
    }

    #[test]
    fn squarefree_parts() {
        let f = &p(&[0, 1]).pow(3) * &(&p(&[1, 1]).pow(2) * &p(&[-2, 0, 1]));
        let d = squarefree_decomposition(&f.scale(&BigInt::from(-6))).unwrap();
        assert_eq!(
            d,
            vec![(p(&[-2, 0, 1]), 1), (p(&[1, 1]), 2), (p(&[0, 1]), 3)]
        );
    }

    #[test]
    fn sturm_counts_roots() {
        let q = p(&[36, -10, -9, 1]);
        let chain = sturm_sequence(&q);
        assert_eq!(
            sign_variations(&chain, &int(-100)) - sign_variations(&chain, &int(100)),
            3
        );
        assert_eq!(
            sign_variations(&chain, &int(0)) - sign_variations(&chain, &int(100)),
            2
        );
    }
}
