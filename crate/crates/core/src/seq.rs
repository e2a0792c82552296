//! Threshold graphs as creation sequences and block forms.
//!
//! A creation sequence `b1 b2 ... bN` (with `b1 = 0`) builds a graph one vertex
//! at a time: `0` adds an isolated vertex, `1` adds a vertex adjacent to every
//! vertex already present. The block form is the run-length encoding
//! `0^a1 1^a2 0^a3 ...` of the same word.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count accepted by the text parser.
pub const MAX_ORDER: usize = 1 << 20;

/// Largest order accepted by [`enumerate_connected`] (the stream is indexed by `u64`).
pub const MAX_ENUMERATION_ORDER: usize = 64;

/// Binary creation sequence of a threshold graph. Always starts with `0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CreationSequence {
    bits: Vec<u8>,
}

impl CreationSequence {
    /// Builds a sequence from explicit digits. Every digit must be 0 or 1 and the first must be 0.
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        match bits.first() {
            None => return Err(Error::InvalidBlocks("empty sequence".into())),
            Some(&1) => return Err(Error::InvalidBlocks("first digit must be 0".into())),
            _ => {}
        }
        if let Some(pos) = bits.iter().position(|&b| b > 1) {
            return Err(Error::InvalidBlocks(format!(
                "digit at position {} is not binary",
                pos + 1
            )));
        }
        Ok(Self { bits })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.bits.len()
    }

    /// Connected iff the last vertex was added as a dominating vertex (or the graph is `K1`).
    pub fn is_connected(&self) -> bool {
        self.bits.len() == 1 || self.bits.last() == Some(&1)
    }

    /// The raw binary word, e.g. `0011100011`.
    pub fn to_word(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b == 1 { '1' } else { '0' })
            .collect()
    }

    pub fn to_blocks(&self) -> BlockForm {
        to_blocks(self)
    }

    /// Splits off trailing isolated vertices: returns the connected prefix and
    /// how many isolated vertices were removed. `000` yields (`0`, 2).
    pub fn split_isolated(&self) -> (CreationSequence, usize) {
        let keep = match self.bits.iter().rposition(|&b| b == 1) {
            Some(p) => p + 1,
            None => 1,
        };
        (
            CreationSequence {
                bits: self.bits[..keep].to_vec(),
            },
            self.bits.len() - keep,
        )
    }
}

impl fmt::Display for CreationSequence {
    /// Canonical compact block expression, e.g. `(0^2 1^3 0^3 1^2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_blocks())
    }
}

impl FromStr for CreationSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sequence(s)
    }
}

impl Serialize for CreationSequence {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CreationSequence {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_sequence(&text).map_err(serde::de::Error::custom)
    }
}

/// Run-length form `0^a1 1^a2 0^a3 ...`. Symbols alternate starting from 0, so
/// only the counts are stored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockForm {
    counts: Vec<usize>,
}

impl BlockForm {
    /// Builds a block form from its counts `(a1, ..., aB)`; block `k` (1-based) has symbol `(k+1) mod 2`.
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidBlocks("no blocks".into()));
        }
        if let Some(k) = counts.iter().position(|&c| c == 0) {
            return Err(Error::InvalidBlocks(format!("block {} has count 0", k + 1)));
        }
        Ok(Self { counts })
    }

    /// Builds a block form from explicit `(symbol, count)` pairs.
    pub fn from_pairs(pairs: &[(u8, usize)]) -> Result<Self> {
        for (k, &(sym, _)) in pairs.iter().enumerate() {
            if sym != (k % 2) as u8 {
                return Err(Error::InvalidBlocks(format!(
                    "block {} has symbol {sym}; symbols must alternate starting with 0",
                    k + 1
                )));
            }
        }
        Self::new(pairs.iter().map(|&(_, c)| c).collect())
    }

    /// The counts `a1, ..., aB`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// `(symbol, count)` pairs.
    pub fn pairs(&self) -> impl Iterator<Item = (u8, usize)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &c)| ((k % 2) as u8, c))
    }

    /// Number of blocks `B`.
    pub fn block_count(&self) -> usize {
        self.counts.len()
    }

    /// Number of vertices `N`.
    pub fn order(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn is_connected(&self) -> bool {
        self.counts.len().is_multiple_of(2) || self.counts == [1]
    }

    pub fn to_sequence(&self) -> CreationSequence {
        from_blocks(self)
    }
}

impl fmt::Display for BlockForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, (sym, count)) in self.pairs().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{sym}^{count}")?;
        }
        f.write_str(")")
    }
}

/// Parses either a raw binary word (`0011100011`) or a block expression
/// (`(0^2 1^3 0^3 1^2)`, `0^2 1^3 0^3 1^2`, `01^3`).
pub fn parse_sequence(text: &str) -> Result<CreationSequence> {
    let err = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: msg.to_string(),
    };
    let bytes = text.as_bytes();
    let mut bits: Vec<u8> = Vec::new();
    let mut depth = 0usize;
    let mut closed = false;
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'(' => {
                if depth > 0 || closed || !bits.is_empty() {
                    return Err(err(i, "parentheses may only wrap the whole expression"));
                }
                depth = 1;
                i += 1;
            }
            b')' => {
                if depth == 0 {
                    return Err(err(i, "unmatched ')'"));
                }
                depth = 0;
                closed = true;
                i += 1;
            }
            b'0' | b'1' => {
                if closed {
                    return Err(err(i, "digits after closing ')'"));
                }
                let sym = c - b'0';
                i += 1;
                let mut count = 1usize;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let start = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        return Err(err(i, "negative exponent"));
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if start == i {
                        return Err(err(start, "'^' must be followed by a positive integer"));
                    }
                    count = text[start..i]
                        .parse::<usize>()
                        .ok()
                        .filter(|&n| n <= MAX_ORDER)
                        .ok_or_else(|| err(start, "exponent too large"))?;
                    if count == 0 {
                        return Err(err(start, "zero exponent"));
                    }
                }
                if bits.is_empty() && sym == 1 {
                    return Err(err(i.saturating_sub(1), "first digit must be 0"));
                }
                if bits.len() + count > MAX_ORDER {
                    return Err(err(i, "sequence too long"));
                }
                bits.extend(std::iter::repeat_n(sym, count));
            }
            b'^' => return Err(err(i, "'^' must follow a digit")),
            _ => {
                return Err(err(
                    i,
                    &format!(
                        "unexpected character {:?}",
                        text[i..].chars().next().unwrap_or('?')
                    ),
                ))
            }
        }
    }
    if depth != 0 {
        return Err(err(bytes.len(), "unclosed '('"));
    }
    if bits.is_empty() {
        return Err(err(0, "empty sequence"));
    }
    Ok(CreationSequence { bits })
}

/// Run-length encodes a creation sequence.
pub fn to_blocks(s: &CreationSequence) -> BlockForm {
    let mut counts: Vec<usize> = Vec::new();
    let mut prev = None;
    for &b in &s.bits {
        if prev == Some(b) {
            *counts.last_mut().expect("nonempty") += 1;
        } else {
            counts.push(1);
            prev = Some(b);
        }
    }
    BlockForm { counts }
}

/// Expands a block form back into its creation sequence.
pub fn from_blocks(b: &BlockForm) -> CreationSequence {
    let bits = b
        .pairs()
        .flat_map(|(sym, count)| std::iter::repeat_n(sym, count))
        .collect();
    CreationSequence { bits }
}

/// Symmetric 0/1 adjacency matrix with zero diagonal, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    order: usize,
    entries: Vec<u8>,
}

impl AdjacencyMatrix {
    /// Validates an arbitrary matrix as a simple-graph adjacency matrix.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NonSquare);
        }
        for i in 0..n {
            if rows[i][i] != 0 {
                return Err(Error::NotAdjacency);
            }
            for j in 0..n {
                if rows[i][j] > 1 || rows[i][j] != rows[j][i] {
                    return Err(Error::NotAdjacency);
                }
            }
        }
        Ok(Self {
            order: n,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order)
            .map(|i| self.row(i).iter().map(|&e| e as usize).sum())
            .collect()
    }
}

/// Entry `(i, j)` with `i < j` is 1 iff vertex `j` was added dominating.
pub fn adjacency_matrix(s: &CreationSequence) -> AdjacencyMatrix {
    let n = s.order();
    let mut entries = vec![0u8; n * n];
    for (j, &b) in s.bits.iter().enumerate() {
        if b == 1 {
            for i in 0..j {
                entries[i * n + j] = 1;
                entries[j * n + i] = 1;
            }
        }
    }
    AdjacencyMatrix { order: n, entries }
}

pub fn edge_count(s: &CreationSequence) -> u64 {
    s.bits
        .iter()
        .enumerate()
        .filter(|(_, &b)| b == 1)
        .map(|(j, _)| j as u64)
        .sum()
}

/// Lexicographically ordered stream of the `2^(N-2)` connected sequences of order `N`.
#[derive(Clone, Debug)]
pub struct ConnectedSequences {
    order: usize,
    next: u64,
    end: u64,
}

impl ConnectedSequences {
    /// Total number of sequences of this order, `2^(N-2)`.
    pub fn total(order: usize) -> u64 {
        1u64 << (order - 2)
    }

    /// The sub-stream of ranks `start..end` (clamped to the total).
    pub fn range(order: usize, start: u64, end: u64) -> Result<Self> {
        check_enumeration_order(order)?;
        let total = Self::total(order);
        let end = end.min(total);
        Ok(Self {
            order,
            next: start.min(end),
            end,
        })
    }

    /// The sequence with lexicographic rank `rank`.
    pub fn nth_sequence(order: usize, rank: u64) -> CreationSequence {
        let free = order - 2;
        let mut bits = Vec::with_capacity(order);
        bits.push(0);
        for k in (0..free).rev() {
            bits.push(((rank >> k) & 1) as u8);
        }
        bits.push(1);
        CreationSequence { bits }
    }
}

impl Iterator for ConnectedSequences {
    type Item = CreationSequence;

    fn next(&mut self) -> Option<CreationSequence> {
        if self.next >= self.end {
            return None;
        }
        let s = Self::nth_sequence(self.order, self.next);
        self.next += 1;
        Some(s)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for ConnectedSequences {}

fn check_enumeration_order(order: usize) -> Result<()> {
    if !(2..=MAX_ENUMERATION_ORDER).contains(&order) {
        return Err(Error::out_of_range(
            "order",
            format!("enumeration needs 2 <= N <= {MAX_ENUMERATION_ORDER}, got {order}"),
        ));
    }
    Ok(())
}

/// All connected threshold graphs of order `N` (`b1 = 0`, `bN = 1`), lexicographic.
pub fn enumerate_connected(order: usize) -> Result<ConnectedSequences> {
    check_enumeration_order(order)?;
    ConnectedSequences::range(order, 0, u64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(text: &str) -> CreationSequence {
        parse_sequence(text).unwrap()
    }

    #[test]
    fn parses_block_expressions() {
        assert_eq!(seq("(0^2 1^3 0^3 1^2)").to_word(), "0011100011");
        assert_eq!(seq("0^2 1^3 0^3 1^2").to_word(), "0011100011");
        assert_eq!(seq("0011100011").to_word(), "0011100011");
        assert_eq!(seq("01^3").to_word(), "0111");
        assert_eq!(seq("01").to_word(), "01");
        assert_eq!(seq(" ( 0 1^2 ) ").to_word(), "011");
    }

    #[test]
    fn rejects_bad_text() {
        for bad in [
            "",
            "   ",
            "()",
            "1^3",
            "10",
            "0^0",
            "0^-2",
            "0^",
            "^2",
            "0 2",
            "0x1",
            "(0 1",
            "0 1)",
            "(0)(1)",
            "0^99999999999999999999",
        ] {
            assert!(parse_sequence(bad).is_err(), "{bad:?} should be rejected");
        }
        assert!(matches!(parse_sequence("1^3"), Err(Error::Parse { .. })));
    }

    #[test]
    fn block_form_of_ten_vertex_graph() {
        let b = seq("0011100011").to_blocks();
        assert_eq!(
            b.pairs().collect::<Vec<_>>(),
            vec![(0, 2), (1, 3), (0, 3), (1, 2)]
        );
        assert_eq!(
            seq("0").to_blocks().pairs().collect::<Vec<_>>(),
            vec![(0, 1)]
        );
        assert_eq!(b.to_string(), "(0^2 1^3 0^3 1^2)");
    }

    #[test]
    fn from_blocks_validates() {
        let b = BlockForm::from_pairs(&[(0, 3), (1, 6), (0, 3), (1, 2)]).unwrap();
        assert_eq!(b.to_sequence().order(), 14);
        assert_eq!(b.to_sequence().to_word(), "00011111100011");
        let k5 = BlockForm::from_pairs(&[(0, 1), (1, 4)]).unwrap();
        assert_eq!(k5.to_sequence().to_word(), "01111");
        assert!(BlockForm::from_pairs(&[(1, 2)]).is_err());
        assert!(BlockForm::from_pairs(&[(0, 2), (0, 1)]).is_err());
        assert!(BlockForm::from_pairs(&[(0, 0), (1, 1)]).is_err());
        assert!(BlockForm::new(vec![]).is_err());
    }

    #[test]
    fn adjacency_of_ten_vertex_graph() {
        let a = adjacency_matrix(&seq("0011100011"));
        let dominating: Vec<usize> = (0..10)
            .filter(|&j| (0..j).all(|i| a.get(i, j) == 1) && j > 0)
            .map(|j| j + 1)
            .collect();
        assert_eq!(dominating, vec![3, 4, 5, 9, 10]);
        let empty = adjacency_matrix(&seq("0^4"));
        assert!((0..4).all(|i| empty.row(i).iter().all(|&e| e == 0)));
        let k4 = adjacency_matrix(&seq("01^3"));
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(k4.get(i, j), u8::from(i != j));
            }
        }
    }

    #[test]
    fn edge_counts() {
        assert_eq!(edge_count(&seq("0011100011")), 26);
        assert_eq!(edge_count(&seq("0^6")), 0);
        assert_eq!(edge_count(&seq("01^6")), 21);
    }

    #[test]
    fn enumeration_small_orders() {
        let words = |n| {
            enumerate_connected(n)
                .unwrap()
                .map(|s| s.to_word())
                .collect::<Vec<_>>()
        };
        assert_eq!(words(2), vec!["01"]);
        assert_eq!(words(3), vec!["001", "011"]);
        assert!(enumerate_connected(1).is_err());
        assert!(enumerate_connected(0).is_err());
        let all14: Vec<_> = enumerate_connected(14).unwrap().collect();
        assert_eq!(all14.len(), 4096);
        assert!(all14.contains(&seq("(0^3 1^6 0^3 1^2)")));
        assert!(all14.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn enumeration_ranges_partition_the_stream() {
        let full: Vec<_> = enumerate_connected(9).unwrap().collect();
        let mut pieces = Vec::new();
        for start in (0..128).step_by(40) {
            pieces.extend(ConnectedSequences::range(9, start, start + 40).unwrap());
        }
        assert_eq!(full, pieces);
    }

    #[test]
    fn split_isolated_vertices() {
        let (p, k) = seq("0110^3").split_isolated();
        assert_eq!((p.to_word().as_str(), k), ("011", 3));
        let (p, k) = seq("0^3").split_isolated();
        assert_eq!((p.to_word().as_str(), k), ("0", 2));
    }

    /// Peels vertices of degree 0 or (order - 1) until the graph is empty.
    fn is_threshold(a: &AdjacencyMatrix) -> bool {
        let mut alive: Vec<usize> = (0..a.order()).collect();
        while !alive.is_empty() {
            let m = alive.len();
            let pick = alive.iter().position(|&v| {
                let d = alive.iter().filter(|&&u| a.get(u, v) == 1).count();
                d == 0 || d == m - 1
            });
            match pick {
                Some(p) => {
                    alive.remove(p);
                }
                None => return false,
            }
        }
        true
    }

    fn arb_sequence() -> impl Strategy<Value = CreationSequence> {
        proptest::collection::vec(0u8..2, 0..24).prop_map(|mut tail| {
            tail.insert(0, 0);
            CreationSequence::from_bits(tail).unwrap()
        })
    }

    proptest! {
        #[test]
        fn block_roundtrip(s in arb_sequence()) {
            let b = to_blocks(&s);
            prop_assert_eq!(from_blocks(&b), s.clone());
            prop_assert_eq!(to_blocks(&from_blocks(&b)), b.clone());
            prop_assert_eq!(parse_sequence(&s.to_string()).unwrap(), s.clone());
            prop_assert_eq!(parse_sequence(&s.to_word()).unwrap(), s);
        }

        #[test]
        fn adjacency_invariants(s in arb_sequence()) {
            let a = adjacency_matrix(&s);
            let mut total = 0u64;
            for i in 0..a.order() {
                prop_assert_eq!(a.get(i, i), 0);
                for j in 0..a.order() {
                    prop_assert_eq!(a.get(i, j), a.get(j, i));
                    total += a.get(i, j) as u64;
                }
            }
            prop_assert_eq!(edge_count(&s) * 2, total);
            prop_assert!(is_threshold(&a));
        }
    }
}
