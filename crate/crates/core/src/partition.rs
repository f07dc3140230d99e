//! Compositions, partitions, and multipartitions, together with the text
//! grammar `(p|p|...|p)` used by the CLI and serialization.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// A finite sequence of nonnegative integers. Trailing zeros are significant:
/// they fix the number of diagram columns and hence the variable window.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A partition: weakly decreasing sequence of positive integers. The empty
/// partition is allowed.
///
/// `Ord` follows the deterministic enumeration order used everywhere for
/// output: `a < b` means `a` prints before `b`, i.e. `a` is *larger* in the
/// zero-padded lexicographic sense ((3) < (2,1) < (1,1,1) as map keys).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Precondition("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// Sort arbitrary nonnegative entries into a partition, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The k-th part (1-based), reading the implicit zero padding past the end.
    pub fn part(&self, k: usize) -> u32 {
        debug_assert!(k >= 1);
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    /// The parts sorted into weakly increasing order, as a composition.
    pub fn rev(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// `0^{n - len} * rev(self)`: the weakly increasing window of width `n`.
    pub fn pad_then_rev(&self, n: usize) -> Result<Composition> {
        if n < self.len() {
            return Err(Error::InvalidWindow(format!(
                "window {n} is smaller than partition length {}",
                self.len()
            )));
        }
        let mut v = vec![0; n - self.len()];
        v.extend(self.0.iter().rev());
        Ok(Composition(v))
    }

    /// Zero-padded lexicographic comparison by value (not display order):
    /// returns `Greater` when `self` has the larger first differing part.
    pub fn lex_cmp(&self, other: &Partition) -> Ordering {
        let n = self.len().max(other.len());
        for k in 1..=n {
            match self.part(k).cmp(&other.part(k)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.lex_cmp(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// An r-tuple of partitions. `r` is fixed per computation context.
///
/// `Ord` is the deterministic enumeration order: blockwise zero-padded
/// lexicographic, largest first, so `BTreeMap` iteration matches CLI output.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> MultiPartition {
        assert!(!components.is_empty(), "multipartition needs r >= 1 blocks");
        MultiPartition(components)
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    /// 1-based block access.
    pub fn block(&self, i: usize) -> &Partition {
        &self.0[i - 1]
    }

    pub fn total_size(&self) -> u32 {
        self.0.iter().map(|p| p.size()).sum()
    }

    pub fn with_block(&self, i: usize, p: Partition) -> MultiPartition {
        let mut v = self.0.clone();
        v[i - 1] = p;
        MultiPartition(v)
    }
}

impl PartialOrd for MultiPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.r(), other.r());
        for (a, b) in self.0.iter().zip(&other.0) {
            match b.lex_cmp(a) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.r().cmp(&other.r())
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", blocks.join("|"))
    }
}

/// All partitions of `n`, in enumeration order ((n) first).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All multipartitions with `r` blocks and the given total size, sorted in
/// enumeration order.
pub fn enumerate_multipartitions(total: u32, r: usize) -> Vec<MultiPartition> {
    assert!(r >= 1);
    fn go(total: u32, blocks_left: usize, prefix: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
        if blocks_left == 1 {
            for p in partitions_of(total) {
                prefix.push(p);
                out.push(MultiPartition::new(prefix.clone()));
                prefix.pop();
            }
            return;
        }
        for s in 0..=total {
            for p in partitions_of(s) {
                prefix.push(p);
                go(total - s, blocks_left - 1, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(total, r, &mut Vec::new(), &mut out);
    out.sort();
    out
}

// ---- Text grammar ----
//
//   multipartition := '(' block ('|' block)* ')'
//   block          := '' | int (',' int)*        (weakly decreasing, positive)
//   composition    := int (',' int)*             (nonnegative)

fn parse_err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

fn parse_int(s: &str, pos: &mut usize) -> Result<u32> {
    let bytes = s.as_bytes();
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if *pos == start {
        return parse_err(start, "expected an integer");
    }
    s[start..*pos]
        .parse::<u32>()
        .map_err(|_| Error::Parse { pos: start, msg: "integer out of range".into() })
}

/// Parse a multipartition literal such as `(2,1|2|3)` or `(|1)`.
pub fn parse_multipartition(s: &str) -> Result<MultiPartition> {
    let bytes = s.as_bytes();
    let mut pos = 0;
    if bytes.first() != Some(&b'(') {
        return parse_err(0, "expected '('");
    }
    pos += 1;
    let mut blocks = Vec::new();
    loop {
        let mut parts: Vec<u32> = Vec::new();
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            let start = pos;
            let v = parse_int(s, &mut pos)?;
            if v == 0 {
                return parse_err(start, "partition parts must be positive");
            }
            if let Some(&prev) = parts.last() {
                if prev < v {
                    return parse_err(start, "partition parts must be weakly decreasing");
                }
            }
            parts.push(v);
            if pos < bytes.len() && bytes[pos] == b',' {
                pos += 1;
                if pos >= bytes.len() || !bytes[pos].is_ascii_digit() {
                    return parse_err(pos, "expected an integer after ','");
                }
            } else {
                break;
            }
        }
        blocks.push(Partition(parts));
        match bytes.get(pos) {
            Some(b'|') => pos += 1,
            Some(b')') => {
                pos += 1;
                break;
            }
            _ => return parse_err(pos, "expected '|' or ')'"),
        }
    }
    if pos != bytes.len() {
        return parse_err(pos, "unexpected trailing input");
    }
    Ok(MultiPartition::new(blocks))
}

/// Parse a composition literal such as `1,0,2`.
pub fn parse_composition(s: &str) -> Result<Composition> {
    if s.is_empty() {
        return parse_err(0, "expected a composition");
    }
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut entries = Vec::new();
    loop {
        entries.push(parse_int(s, &mut pos)?);
        match bytes.get(pos) {
            Some(b',') => pos += 1,
            None => break,
            _ => return parse_err(pos, "expected ',' or end of input"),
        }
    }
    Ok(Composition(entries))
}
