//! Partial orders on multipartitions: the componentwise-reversed
//! lexicographic order and the generalized dominance order generated by
//! three part-moving operations, with replayable move-sequence witnesses.
//!
//! Moves read partitions through their zero-padded view: a part index past
//! the end of a partition denotes an implicit zero part, which Moves 1 and 3
//! may select. Re-sorting after a move drops zeros again.

use crate::error::{Error, Result};
use crate::partition::{MultiPartition, Partition};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// `a <_L b`: lexicographic order on partitions with zero padding.
pub fn lex_less_partitions(a: &Partition, b: &Partition) -> bool {
    a.lex_cmp(b) == std::cmp::Ordering::Less
}

/// The strict order `a ≺ b`: later blocks are compared first; the last
/// differing block must decrease lexicographically.
pub fn prec_less(a: &MultiPartition, b: &MultiPartition) -> Result<bool> {
    if a.r() != b.r() {
        return Err(Error::ShapeMismatch(format!(
            "cannot compare multipartitions with {} and {} blocks",
            a.r(),
            b.r()
        )));
    }
    for k in (1..=a.r()).rev() {
        if a.block(k) != b.block(k) {
            return Ok(lex_less_partitions(a.block(k), b.block(k)));
        }
    }
    Ok(false)
}

/// One dominance move. Block indices are 1-based; part indices are 1-based
/// positions in the zero-padded view of the partition they refer to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Move {
    /// Move 1: swap part `part1` of `block1` with part `part2` of `block2`,
    /// where `block1 < block2` and the first entry is strictly smaller.
    Swap { block1: usize, part1: usize, block2: usize, part2: usize },
    /// Move 2: within `block`, lower one unit from part `from` onto part
    /// `to`, where `from < to` and the entries differ by more than one.
    Lower { block: usize, from: usize, to: usize },
    /// Move 3: transfer one unit from part `part2` of `block2` to part
    /// `part1` of `block1`, where `block1 < block2` and the receiving entry
    /// is smaller by more than one.
    Transfer { block1: usize, part1: usize, block2: usize, part2: usize },
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Swap { block1, part1, block2, part2 } => write!(
                f,
                "Move 1: swap block {block1} part {part1} with block {block2} part {part2}"
            ),
            Move::Lower { block, from, to } => {
                write!(f, "Move 2: in block {block} lower one unit from part {from} to part {to}")
            }
            Move::Transfer { block1, part1, block2, part2 } => write!(
                f,
                "Move 3: transfer one unit from block {block2} part {part2} to block {block1} part {part1}"
            ),
        }
    }
}

/// Apply a move, checking its guard.
pub fn apply_move(m: &MultiPartition, mv: Move) -> Result<MultiPartition> {
    let check_block = |i: usize| -> Result<()> {
        if i < 1 || i > m.r() {
            return Err(Error::InvalidMove(format!("block index {i} out of range")));
        }
        Ok(())
    };
    match mv {
        Move::Swap { block1, part1, block2, part2 } => {
            check_block(block1)?;
            check_block(block2)?;
            if block1 >= block2 {
                return Err(Error::InvalidMove("Move 1 requires block1 < block2".into()));
            }
            let v1 = m.block(block1).part(part1);
            let v2 = m.block(block2).part(part2);
            if v1 >= v2 {
                return Err(Error::InvalidMove(format!(
                    "Move 1 guard failed: {v1} >= {v2}"
                )));
            }
            let b1 = replace_part(m.block(block1), part1, v2);
            let b2 = replace_part(m.block(block2), part2, v1);
            Ok(m.with_block(block1, b1).with_block(block2, b2))
        }
        Move::Lower { block, from, to } => {
            check_block(block)?;
            if from >= to {
                return Err(Error::InvalidMove("Move 2 requires from < to".into()));
            }
            let vj = m.block(block).part(from);
            let vk = m.block(block).part(to);
            if vj <= vk + 1 {
                return Err(Error::InvalidMove(format!(
                    "Move 2 guard failed: {vj} <= {vk} + 1"
                )));
            }
            let mut b = replace_part(m.block(block), from, vj - 1);
            b = replace_part(&b, position_of(&b, vk), vk + 1);
            Ok(m.with_block(block, b))
        }
        Move::Transfer { block1, part1, block2, part2 } => {
            check_block(block1)?;
            check_block(block2)?;
            if block1 >= block2 {
                return Err(Error::InvalidMove("Move 3 requires block1 < block2".into()));
            }
            let v1 = m.block(block1).part(part1);
            let v2 = m.block(block2).part(part2);
            if v1 + 1 >= v2 {
                return Err(Error::InvalidMove(format!(
                    "Move 3 guard failed: {v1} + 1 >= {v2}"
                )));
            }
            let b1 = replace_part(m.block(block1), part1, v1 + 1);
            let b2 = replace_part(m.block(block2), part2, v2 - 1);
            Ok(m.with_block(block1, b1).with_block(block2, b2))
        }
    }
}

/// Replace the k-th padded part with `value` and re-sort.
fn replace_part(p: &Partition, k: usize, value: u32) -> Partition {
    let mut parts: Vec<u32> = p.parts().to_vec();
    if k <= parts.len() {
        parts[k - 1] = value;
    } else {
        parts.push(value);
    }
    Partition::from_unsorted(parts)
}

/// Some padded index holding `value` (used to re-locate a part after an
/// earlier replacement within the same block).
fn position_of(p: &Partition, value: u32) -> usize {
    if value == 0 {
        return p.len() + 1;
    }
    p.parts()
        .iter()
        .position(|&x| x == value)
        .map(|i| i + 1)
        .expect("part value present")
}

/// A certificate that `end ◁ start`: replaying `steps` from `start` yields
/// `end`, every step passing its guard.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderWitness {
    pub start: MultiPartition,
    pub end: MultiPartition,
    pub steps: Vec<Move>,
}

impl OrderWitness {
    /// Re-run the move sequence and confirm it lands on `end`.
    pub fn replay(&self) -> Result<bool> {
        let mut cur = self.start.clone();
        for &mv in &self.steps {
            cur = apply_move(&cur, mv)?;
        }
        Ok(cur == self.end)
    }
}

/// Candidate moves from `m`, with distinct outcomes deduplicated by the
/// caller's visited set. Part indices run one slot past each partition's
/// length so that implicit zero parts are eligible.
fn successor_moves(m: &MultiPartition) -> Vec<(Move, MultiPartition)> {
    let r = m.r();
    let mut out = Vec::new();
    // Move 2 within each block.
    for i in 1..=r {
        let len = m.block(i).len();
        for from in 1..=len {
            for to in (from + 1)..=(len + 1) {
                let mv = Move::Lower { block: i, from, to };
                if let Ok(next) = apply_move(m, mv) {
                    out.push((mv, next));
                }
            }
        }
    }
    // Moves 1 and 3 across block pairs.
    for b1 in 1..=r {
        for b2 in (b1 + 1)..=r {
            let l1 = m.block(b1).len();
            let l2 = m.block(b2).len();
            for p1 in 1..=(l1 + 1) {
                for p2 in 1..=(l2 + 1) {
                    let mv = Move::Swap { block1: b1, part1: p1, block2: b2, part2: p2 };
                    if let Ok(next) = apply_move(m, mv) {
                        out.push((mv, next));
                    }
                    let mv = Move::Transfer { block1: b1, part1: p1, block2: b2, part2: p2 };
                    if let Ok(next) = apply_move(m, mv) {
                        out.push((mv, next));
                    }
                }
            }
        }
    }
    out
}

/// Breadth-first closure of the moves starting from `top`, recording for each
/// reached multipartition the move and predecessor that first discovered it.
fn move_closure(top: &MultiPartition) -> BTreeMap<MultiPartition, Option<(MultiPartition, Move)>> {
    let mut seen: BTreeMap<MultiPartition, Option<(MultiPartition, Move)>> = BTreeMap::new();
    seen.insert(top.clone(), None);
    let mut queue = VecDeque::from([top.clone()]);
    while let Some(cur) = queue.pop_front() {
        for (mv, next) in successor_moves(&cur) {
            debug_assert_eq!(next.total_size(), cur.total_size());
            debug_assert!(prec_less(&next, &cur).unwrap());
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), Some((cur.clone(), mv)));
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Decide `a ◁ b` and produce a move-sequence witness when it holds.
///
/// Returns `Ok(None)` when the relation fails, in particular whenever the
/// total sizes differ or `a == b` (the order is strict). The search runs
/// breadth-first from `b` but visits only multipartitions above `a`: every
/// move strictly decreases the reverse-lexicographic order, so nothing below
/// `a` can reach it.
pub fn dominance_multi_less(a: &MultiPartition, b: &MultiPartition) -> Result<Option<OrderWitness>> {
    if a.r() != b.r() {
        return Err(Error::ShapeMismatch(format!(
            "cannot compare multipartitions with {} and {} blocks",
            a.r(),
            b.r()
        )));
    }
    if a == b || a.total_size() != b.total_size() || !prec_less(a, b)? {
        return Ok(None);
    }
    let mut seen: BTreeMap<MultiPartition, Option<(MultiPartition, Move)>> = BTreeMap::new();
    seen.insert(b.clone(), None);
    let mut queue = VecDeque::from([b.clone()]);
    'bfs: while let Some(cur) = queue.pop_front() {
        for (mv, next) in successor_moves(&cur) {
            if next != *a && !prec_less(a, &next)? {
                continue;
            }
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), Some((cur.clone(), mv)));
                if next == *a {
                    break 'bfs;
                }
                queue.push_back(next);
            }
        }
    }
    if !seen.contains_key(a) {
        return Ok(None);
    }
    // Walk predecessor links back from a to b, then reverse.
    let mut steps = Vec::new();
    let mut cur = a.clone();
    while let Some(Some((parent, mv))) = seen.get(&cur) {
        steps.push(*mv);
        cur = parent.clone();
    }
    steps.reverse();
    let witness = OrderWitness { start: b.clone(), end: a.clone(), steps };
    debug_assert!(witness.replay()?);
    Ok(Some(witness))
}

/// The full down-set `{a : a ⊴ b}`, including `b` itself.
pub fn down_set(b: &MultiPartition) -> BTreeSet<MultiPartition> {
    move_closure(b).into_keys().collect()
}
