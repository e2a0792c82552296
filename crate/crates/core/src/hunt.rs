//! Exhaustive search over all connected threshold graphs of one order for
//! noncospectral equienergetic pairs and borderenergetic graphs.

use std::io::Write;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::seq::{ConnectedSequences, CreationSequence, MAX_ENUMERATION_ORDER};
use crate::spectra::{exact_energy_difference, spectral_summary, EnergyInterval};

/// Largest order searched without `allow_large`.
pub const DEFAULT_MAX_ORDER: usize = 24;

/// Environment variable read by the CLI for the hunt thread count.
pub const THREADS_ENV: &str = "THRESH_THREADS";

const CHUNK: u64 = 256;

pub const LABEL_DISTINCT_SPECTRUM: &str = "certified-distinct-spectrum";
pub const LABEL_WITHIN_PRECISION: &str = "energy-equal-within-precision";
pub const LABEL_EXACT: &str = "exactly-equal";

#[derive(Clone, Copy, Debug)]
pub struct HuntOptions {
    pub allow_large: bool,
    pub parallel: bool,
}

impl Default for HuntOptions {
    fn default() -> Self {
        Self {
            allow_large: false,
            parallel: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassMember {
    pub sequence: CreationSequence,
    pub char_poly: IntPolynomial,
    pub energy: EnergyInterval,
}

/// Sequences whose energy intervals overlap, closed transitively.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnergyClass {
    #[serde(with = "crate::num::floor_text")]
    pub energy_lo: BigRational,
    #[serde(with = "crate::num::ceil_text")]
    pub energy_hi: BigRational,
    pub members: Vec<ClassMember>,
}

impl EnergyClass {
    /// Number of distinct characteristic polynomials among the members.
    pub fn distinct_spectra(&self) -> usize {
        let mut polys: Vec<&IntPolynomial> = self.members.iter().map(|m| &m.char_poly).collect();
        polys.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        polys.dedup();
        polys.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquienergeticPair {
    pub class_id: usize,
    pub a: CreationSequence,
    pub b: CreationSequence,
    pub labels: Vec<String>,
}

impl EquienergeticPair {
    pub fn exactly_equal(&self) -> bool {
        self.labels.iter().any(|l| l == LABEL_EXACT)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BorderCandidate {
    pub sequence: CreationSequence,
    pub energy: EnergyInterval,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntStats {
    pub graphs: u64,
    pub energy_classes: usize,
    pub equienergetic_classes: usize,
    pub pairs: usize,
    pub exactly_equal_pairs: usize,
    pub borderenergetic_candidates: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HuntResult {
    #[serde(rename = "N")]
    pub order: usize,
    pub precision: String,
    pub classes: Vec<EnergyClass>,
    pub pairs: Vec<EquienergeticPair>,
    pub borderenergetic: Vec<BorderCandidate>,
    pub stats: HuntStats,
}

impl HuntResult {
    pub fn contains_pair(&self, a: &CreationSequence, b: &CreationSequence) -> bool {
        self.pairs
            .iter()
            .any(|p| (&p.a == a && &p.b == b) || (&p.a == b && &p.b == a))
    }
}

fn check_order(order: usize, opts: &HuntOptions) -> Result<()> {
    let max = if opts.allow_large {
        MAX_ENUMERATION_ORDER
    } else {
        DEFAULT_MAX_ORDER
    };
    if !(2..=max).contains(&order) {
        let hint = if opts.allow_large {
            ""
        } else {
            " (pass the override flag for larger N)"
        };
        return Err(Error::out_of_range(
            "N",
            format!("hunt needs 2 <= N <= {max}, got {order}{hint}"),
        ));
    }
    Ok(())
}

fn member_of(s: CreationSequence, precision: &BigRational) -> Result<ClassMember> {
    let summary = spectral_summary(&s, precision)?;
    Ok(ClassMember {
        sequence: s,
        char_poly: summary.char_poly,
        energy: summary.energy,
    })
}

fn chunk_members(order: usize, start: u64, precision: &BigRational) -> Result<Vec<ClassMember>> {
    ConnectedSequences::range(order, start, start + CHUNK)?
        .map(|s| member_of(s, precision))
        .collect()
}

/// Energy interval and characteristic polynomial of every connected sequence, in rank order.
pub fn compute_members(
    order: usize,
    precision: &BigRational,
    opts: &HuntOptions,
) -> Result<Vec<ClassMember>> {
    check_order(order, opts)?;
    if !precision.is_positive() {
        return Err(Error::out_of_range("precision", "must be positive"));
    }
    let total = ConnectedSequences::total(order);
    let starts: Vec<u64> = (0..total).step_by(CHUNK as usize).collect();
    let chunks: Vec<Vec<ClassMember>> = if opts.parallel {
        starts
            .par_iter()
            .map(|&s| chunk_members(order, s, precision))
            .collect::<Result<_>>()?
    } else {
        starts
            .iter()
            .map(|&s| chunk_members(order, s, precision))
            .collect::<Result<_>>()?
    };
    Ok(chunks.into_iter().flatten().collect())
}

/// Groups members by transitive overlap of their energy intervals.
pub fn group_by_overlap(mut members: Vec<ClassMember>) -> Vec<EnergyClass> {
    members.sort_by(|a, b| {
        a.energy
            .lo
            .cmp(&b.energy.lo)
            .then_with(|| a.sequence.cmp(&b.sequence))
    });
    let mut classes: Vec<EnergyClass> = Vec::new();
    for m in members {
        match classes.last_mut() {
            Some(c) if m.energy.lo <= c.energy_hi => {
                if m.energy.hi > c.energy_hi {
                    c.energy_hi = m.energy.hi.clone();
                }
                c.members.push(m);
            }
            _ => classes.push(EnergyClass {
                energy_lo: m.energy.lo.clone(),
                energy_hi: m.energy.hi.clone(),
                members: vec![m],
            }),
        }
    }
    for c in &mut classes {
        c.members.sort_by(|a, b| a.sequence.cmp(&b.sequence));
    }
    classes
}

pub fn classify_with(
    order: usize,
    precision: &BigRational,
    opts: &HuntOptions,
) -> Result<Vec<EnergyClass>> {
    Ok(group_by_overlap(compute_members(order, precision, opts)?))
}

/// Partition of all connected sequences of order `N` into energy classes.
pub fn classify_by_energy(order: usize, precision: &BigRational) -> Result<Vec<EnergyClass>> {
    classify_with(order, precision, &HuntOptions::default())
}

fn pairs_in(class_id: usize, class: &EnergyClass) -> Vec<EquienergeticPair> {
    let mut out = Vec::new();
    for (k, a) in class.members.iter().enumerate() {
        for b in &class.members[k + 1..] {
            if a.char_poly == b.char_poly {
                continue;
            }
            let mut labels = vec![
                LABEL_DISTINCT_SPECTRUM.to_string(),
                LABEL_WITHIN_PRECISION.to_string(),
            ];
            if exact_energy_difference(&a.char_poly, &b.char_poly).is_some_and(|d| d.is_zero()) {
                labels.push(LABEL_EXACT.to_string());
            }
            out.push(EquienergeticPair {
                class_id,
                a: a.sequence.clone(),
                b: b.sequence.clone(),
                labels,
            });
        }
    }
    out
}

fn complete_graph(order: usize) -> CreationSequence {
    let mut bits = vec![1u8; order];
    bits[0] = 0;
    CreationSequence::from_bits(bits).expect("complete graph sequence")
}

/// Candidates whose energy interval contains `2N - 2`, excluding `K_N`.
pub fn borderenergetic_in(order: usize, classes: &[EnergyClass]) -> Vec<BorderCandidate> {
    let target = BigRational::from_integer(BigInt::from(2 * order - 2));
    let kn = complete_graph(order);
    let mut out: Vec<BorderCandidate> = classes
        .iter()
        .filter(|c| c.energy_lo <= target && target <= c.energy_hi)
        .flat_map(|c| &c.members)
        .filter(|m| m.sequence != kn && m.energy.contains(&target))
        .map(|m| BorderCandidate {
            sequence: m.sequence.clone(),
            energy: m.energy.clone(),
            status: "candidate".to_string(),
        })
        .collect();
    out.sort_by(|a, b| a.sequence.cmp(&b.sequence));
    out
}

/// Builds the search result from a finished classification.
pub fn summarize(order: usize, precision: &BigRational, classes: Vec<EnergyClass>) -> HuntResult {
    let graphs = classes.iter().map(|c| c.members.len() as u64).sum();
    let energy_classes = classes.len();
    let borderenergetic = borderenergetic_in(order, &classes);
    let kept: Vec<EnergyClass> = classes
        .into_iter()
        .filter(|c| c.distinct_spectra() >= 2)
        .collect();
    let pairs: Vec<EquienergeticPair> = kept
        .iter()
        .enumerate()
        .flat_map(|(k, c)| pairs_in(k, c))
        .collect();
    let stats = HuntStats {
        graphs,
        energy_classes,
        equienergetic_classes: kept.len(),
        pairs: pairs.len(),
        exactly_equal_pairs: pairs.iter().filter(|p| p.exactly_equal()).count(),
        borderenergetic_candidates: borderenergetic.len(),
        elapsed_ms: None,
    };
    HuntResult {
        order,
        precision: precision.to_string(),
        classes: kept,
        pairs,
        borderenergetic,
        stats,
    }
}

pub fn hunt(order: usize, precision: &BigRational, opts: &HuntOptions) -> Result<HuntResult> {
    let started = Instant::now();
    let classes = classify_with(order, precision, opts)?;
    let mut result = summarize(order, precision, classes);
    result.stats.elapsed_ms = Some(started.elapsed().as_millis() as u64);
    Ok(result)
}

/// Classes with at least two noncospectral members, with every such pair labeled.
pub fn find_equienergetic_pairs(order: usize, precision: &BigRational) -> Result<HuntResult> {
    hunt(order, precision, &HuntOptions::default())
}

pub fn find_borderenergetic(
    order: usize,
    precision: &BigRational,
) -> Result<Vec<CreationSequence>> {
    let classes = classify_by_energy(order, precision)?;
    Ok(borderenergetic_in(order, &classes)
        .into_iter()
        .map(|c| c.sequence)
        .collect())
}

/// One row per graph: `sequence, energy_lo, energy_hi, char_poly, class_id`.
pub fn write_csv<W: Write>(classes: &[EnergyClass], out: W) -> Result<()> {
    let places = crate::spectra::ENERGY_DECIMAL_PLACES;
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Internal(format!("csv output: {e}"));
    w.write_record([
        "sequence",
        "energy_lo",
        "energy_hi",
        "char_poly",
        "class_id",
    ])
    .map_err(io)?;
    for (id, c) in classes.iter().enumerate() {
        for m in &c.members {
            w.write_record([
                m.sequence.to_string(),
                crate::num::decimal_floor(&m.energy.lo, places),
                crate::num::decimal_ceil(&m.energy.hi, places),
                m.char_poly.to_coefficient_list(),
                id.to_string(),
            ])
            .map_err(io)?;
        }
    }
    w.flush()
        .map_err(|e| Error::Internal(format!("csv output: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ten_to_minus;
    use crate::poly::{charpoly_oracle, isolate_real_roots};
    use crate::seq::{adjacency_matrix, enumerate_connected, parse_sequence};
    use crate::spectra::energy_from_roots;

    fn seq(t: &str) -> CreationSequence {
        parse_sequence(t).unwrap()
    }

    /// Energy interval straight from the determinant polynomial.
    fn oracle_member(
        s: CreationSequence,
        precision: &BigRational,
    ) -> (CreationSequence, IntPolynomial, EnergyInterval) {
        let p = charpoly_oracle(&adjacency_matrix(&s)).unwrap();
        let width = precision / BigRational::from_integer(BigInt::from(s.order()));
        let e = energy_from_roots(&isolate_real_roots(&p, &width).unwrap());
        (s, p, e)
    }

    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }

    fn brute_partition(order: usize, precision: &BigRational) -> Vec<Vec<CreationSequence>> {
        let all: Vec<_> = enumerate_connected(order)
            .unwrap()
            .map(|s| oracle_member(s, precision))
            .collect();
        let mut parent: Vec<usize> = (0..all.len()).collect();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                if all[i].2.overlaps(&all[j].2) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<CreationSequence>> =
            Default::default();
        for i in 0..all.len() {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(all[i].0.clone());
        }
        let mut out: Vec<_> = groups.into_values().collect();
        out.sort();
        out
    }

    fn partition(classes: &[EnergyClass]) -> Vec<Vec<CreationSequence>> {
        let mut out: Vec<_> = classes
            .iter()
            .map(|c| {
                c.members
                    .iter()
                    .map(|m| m.sequence.clone())
                    .collect::<Vec<_>>()
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn order_three() {
        let classes = classify_by_energy(3, &ten_to_minus(10)).unwrap();
        assert_eq!(classes.len(), 2);
        let p3 = &classes[0];
        assert_eq!(p3.members[0].sequence, seq("001"));
        // 2 sqrt 2
        assert!(p3.energy_lo.pow(2) <= BigRational::from_integer(8.into()));
        assert!(p3.energy_hi.pow(2) >= BigRational::from_integer(8.into()));
        assert_eq!(classes[1].members[0].sequence, seq("011"));
        assert!(classes[1].members[0]
            .energy
            .contains(&BigRational::from_integer(4.into())));
        assert!(find_borderenergetic(3, &ten_to_minus(10))
            .unwrap()
            .is_empty());
        assert!(find_equienergetic_pairs(2, &ten_to_minus(10))
            .unwrap()
            .pairs
            .is_empty());
    }

    #[test]
    fn guards() {
        assert!(classify_by_energy(1, &ten_to_minus(3)).is_err());
        assert!(classify_by_energy(25, &ten_to_minus(3)).is_err());
        assert!(classify_by_energy(4, &BigRational::zero()).is_err());
        let opts = HuntOptions {
            allow_large: true,
            parallel: false,
        };
        assert!(check_order(30, &opts).is_ok());
        assert!(check_order(65, &opts).is_err());
    }

    #[test]
    fn order_five_matches_union_find_over_oracle() {
        for p in [ten_to_minus(6), ten_to_minus(10)] {
            let classes = classify_by_energy(5, &p).unwrap();
            assert_eq!(partition(&classes), brute_partition(5, &p));
        }
    }

    #[test]
    fn order_nine_pairs_match_pairwise_comparison() {
        let p = ten_to_minus(10);
        let result = find_equienergetic_pairs(9, &p).unwrap();
        let all: Vec<_> = enumerate_connected(9)
            .unwrap()
            .map(|s| oracle_member(s, &p))
            .collect();
        let mut expected = Vec::new();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                if all[i].1 != all[j].1 && all[i].2.overlaps(&all[j].2) {
                    expected.push((all[i].0.clone(), all[j].0.clone()));
                }
            }
        }
        let mut got: Vec<_> = result
            .pairs
            .iter()
            .map(|p| (p.a.clone(), p.b.clone()))
            .collect();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
        for pair in &result.pairs {
            assert!(!crate::spectra::is_cospectral(&pair.a, &pair.b));
            assert!(pair.labels.iter().any(|l| l == LABEL_DISTINCT_SPECTRUM));
        }
        // members of a reported class overlap pairwise at this order
        for c in &result.classes {
            for a in &c.members {
                for b in &c.members {
                    assert!(a.energy.overlaps(&b.energy));
                }
            }
        }
    }

    #[test]
    fn order_nine_borderenergetic() {
        let coarse = find_borderenergetic(9, &ten_to_minus(10)).unwrap();
        let fine = find_borderenergetic(9, &ten_to_minus(12)).unwrap();
        assert_eq!(coarse, fine);
        assert_eq!(coarse, vec![seq("010111111"), seq("011110111")]);
        for n in 2..9 {
            let kn = complete_graph(n);
            assert!(!find_borderenergetic(n, &ten_to_minus(8))
                .unwrap()
                .contains(&kn));
        }
    }

    #[test]
    fn partition_covers_everything() {
        for n in 2..=10 {
            let classes = classify_by_energy(n, &ten_to_minus(8)).unwrap();
            let mut seen: Vec<_> = classes
                .iter()
                .flat_map(|c| c.members.iter().map(|m| m.sequence.clone()))
                .collect();
            assert_eq!(seen.len() as u64, ConnectedSequences::total(n));
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len() as u64, ConnectedSequences::total(n));
            for w in classes.windows(2) {
                assert!(w[0].energy_hi < w[1].energy_lo);
            }
            for c in &classes {
                assert!(c.members.windows(2).all(|w| w[0].sequence < w[1].sequence));
            }
        }
    }

    #[test]
    fn tightening_precision_only_splits() {
        for n in 4..=10 {
            let coarse = classify_by_energy(n, &ten_to_minus(6)).unwrap();
            let fine = classify_by_energy(n, &ten_to_minus(12)).unwrap();
            assert!(fine.len() >= coarse.len());
            for c in &fine {
                let home = coarse
                    .iter()
                    .find(|k| {
                        k.members
                            .iter()
                            .any(|m| m.sequence == c.members[0].sequence)
                    })
                    .unwrap();
                for m in &c.members {
                    assert!(home.members.iter().any(|h| h.sequence == m.sequence));
                }
            }
        }
    }

    #[test]
    fn sequential_equals_parallel() {
        let p = ten_to_minus(10);
        let seq_opts = HuntOptions {
            allow_large: false,
            parallel: false,
        };
        let a = classify_with(11, &p, &seq_opts).unwrap();
        let b = classify_with(11, &p, &HuntOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn csv_rows() {
        let classes = classify_by_energy(4, &ten_to_minus(10)).unwrap();
        let mut buf = Vec::new();
        write_csv(&classes, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "sequence,energy_lo,energy_hi,char_poly,class_id");
        assert!(text.contains("\"[-3, -8, -6, 0, 1]\""), "{text}");
    }
}
