//! Backtracking engine for column-diagram fillings.
//!
//! A diagram is a sequence of column heights with one basement entry under
//! each column. Boxes are addressed as (column, row) with rows counted from 1
//! upward; the basement is row 0. A labeling is admissible when
//!
//!   * each column weakly decreases reading upwards, basement included;
//!   * no two attacking boxes carry equal labels, where boxes attack when
//!     they share a row, or sit in consecutive rows with the lower box
//!     strictly to the right of the upper one;
//!   * no triple (u, v, w) with w directly below u and v in the arm of u is
//!     cyclically increasing, i.e. u < v < w, v < w < u, or w < u < v.
//!     Type 1 arms: v one row below u, strictly right, strictly shorter
//!     column. Type 2 arms: v in u's row, strictly left, weakly shorter
//!     column.
//!
//! The engine is generic over the label order so the same search drives both
//! single-alphabet labels and multi-alphabet labels with sentinel basements.

fn cyclic<E: Ord>(u: E, v: E, w: E) -> bool {
    (u < v && v < w) || (v < w && w < u) || (w < u && u < v)
}

/// Incremental admissibility of placing `label` at (col, row), given all
/// columns left of `col` complete and `col` filled below `row`.
fn placement_ok<E: Copy + Ord>(
    heights: &[u32],
    basement: &[E],
    labels: &[Vec<E>],
    col: usize,
    row: u32,
    label: E,
) -> bool {
    let below = if row == 1 { basement[col] } else { labels[col][row as usize - 2] };
    if label > below {
        return false;
    }
    for c in 0..col {
        // Same-row and upper-left diagonal attacks.
        if heights[c] >= row && labels[c][row as usize - 1] == label {
            return false;
        }
        if heights[c] >= row + 1 && labels[c][row as usize] == label {
            return false;
        }
        // Type 2: u here, v left in the same row, column weakly shorter.
        if heights[c] >= row && heights[c] <= heights[col] {
            let v = labels[c][row as usize - 1];
            if cyclic(label, v, below) {
                return false;
            }
        }
        // Type 1 with this box as v: u and w sit in a strictly taller column
        // to the left, at rows (row + 1, row).
        if heights[c] > heights[col] {
            let u = labels[c][row as usize];
            let w = labels[c][row as usize - 1];
            if cyclic(u, label, w) {
                return false;
            }
        }
    }
    // Row-1 boxes attack every basement box to their right, and can form
    // Type 1 triples with a basement v.
    if row == 1 {
        for c in col + 1..heights.len() {
            if basement[c] == label {
                return false;
            }
            if heights[c] < heights[col] && cyclic(label, basement[c], basement[col]) {
                return false;
            }
        }
    }
    true
}

/// Enumerate all admissible fillings, emitting each as per-column label
/// vectors (bottom to top). `supply` lists the allowed labels in the order
/// they should be tried, each with an optional remaining-use budget; budgets
/// are restored on backtrack. Columns are filled left to right, each bottom
/// to top, so output order is deterministic.
pub(crate) fn search<E: Copy + Ord>(
    heights: &[u32],
    basement: &[E],
    supply: &mut [(E, Option<u32>)],
    emit: &mut dyn FnMut(&[Vec<E>]),
) {
    assert_eq!(heights.len(), basement.len());
    let mut labels: Vec<Vec<E>> = heights.iter().map(|&h| Vec::with_capacity(h as usize)).collect();
    fn step<E: Copy + Ord>(
        heights: &[u32],
        basement: &[E],
        supply: &mut [(E, Option<u32>)],
        labels: &mut Vec<Vec<E>>,
        col: usize,
        row: u32,
        emit: &mut dyn FnMut(&[Vec<E>]),
    ) {
        if col == heights.len() {
            emit(labels);
            return;
        }
        if row > heights[col] {
            step(heights, basement, supply, labels, col + 1, 1, emit);
            return;
        }
        for idx in 0..supply.len() {
            let (label, budget) = supply[idx];
            if budget == Some(0) {
                continue;
            }
            if !placement_ok(heights, basement, labels, col, row, label) {
                continue;
            }
            if let Some(b) = budget {
                supply[idx].1 = Some(b - 1);
            }
            labels[col].push(label);
            step(heights, basement, supply, labels, col, row + 1, emit);
            labels[col].pop();
            if let Some(b) = budget {
                supply[idx].1 = Some(b);
            }
        }
    }
    step(heights, basement, supply, &mut labels, 0, 1, emit);
}

/// Full validity check of a complete filling, written directly from the
/// attack and triple definitions. Used to cross-check the incremental search.
pub(crate) fn validate<E: Copy + Ord>(heights: &[u32], basement: &[E], labels: &[Vec<E>]) -> bool {
    let n = heights.len();
    if labels.len() != n || (0..n).any(|c| labels[c].len() != heights[c] as usize) {
        return false;
    }
    // Entry of the augmented filling at (col, row), row 0 = basement.
    let entry = |c: usize, r: u32| -> E {
        if r == 0 {
            basement[c]
        } else {
            labels[c][r as usize - 1]
        }
    };
    // Weakly decreasing upwards.
    for c in 0..n {
        for r in 1..=heights[c] {
            if entry(c, r) > entry(c, r - 1) {
                return false;
            }
        }
    }
    // Attacks: same row, or consecutive rows with the lower box to the right.
    for c1 in 0..n {
        for r1 in 0..=heights[c1] {
            for c2 in 0..n {
                for r2 in 0..=heights[c2] {
                    if (c1, r1) == (c2, r2) {
                        continue;
                    }
                    let attacking =
                        r1 == r2 || (r1 + 1 == r2 && c1 > c2) || (r2 + 1 == r1 && c2 > c1);
                    if attacking && entry(c1, r1) == entry(c2, r2) {
                        return false;
                    }
                }
            }
        }
    }
    // Triples over every box u (row >= 1) with w = d(u).
    for c in 0..n {
        for r in 1..=heights[c] {
            let u = entry(c, r);
            let w = entry(c, r - 1);
            // Type 1: v at (c2, r-1), c2 > c, strictly shorter column.
            for c2 in c + 1..n {
                if heights[c2] < heights[c] && heights[c2] >= r.saturating_sub(1) {
                    let v = entry(c2, r - 1);
                    if cyclic(u, v, w) {
                        return false;
                    }
                }
            }
            // Type 2: v at (c2, r), c2 < c, weakly shorter column, real box.
            for c2 in 0..c {
                if heights[c2] <= heights[c] && heights[c2] >= r {
                    let v = entry(c2, r);
                    if cyclic(u, v, w) {
                        return false;
                    }
                }
            }
        }
    }
    true
}
