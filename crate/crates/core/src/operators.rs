//! Plethystic part-moving operators on multi-symmetric functions.
//!
//! At a finite window, `D_i` adjoins an auxiliary variable to block `i`,
//! sweeps it through block `i+1` with isobaric divided differences, and
//! extracts the constant coefficient. On stable Schur-basis expansions the
//! same operator acts through single-variable branching on block `i` and a
//! Bernstein creation operator on block `i+1`; the two realizations are held
//! equal by the test suites.
//!
//! The closed plethystic substitution formula sometimes quoted for these
//! operators is inconsistent with the divided-difference definition (see
//! `docs/operator-notes.md`); the decomposition implemented here is the one
//! the finite-variable operator forces.

use crate::classical::horizontal_strip_subshapes;
use crate::error::{Error, Result};
use crate::key::key_poly_in;
use crate::multisym::{schur_expansion, Basis, BlockShape, MultiSymExpansion};
use crate::partition::{MultiPartition, Partition};
use crate::poly::{SparsePoly, Var};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// A finite integer combination of single-alphabet Schur functions.
pub type SchurSeries = BTreeMap<Partition, BigInt>;

/// Straighten an integer Schur index by the adjacent-swap rule: an ascent
/// `(g_j, g_{j+1})` with `g_{j+1} = g_j + 1` annihilates; otherwise it
/// rewrites to `(g_{j+1} - 1, g_j + 1)` with a sign flip. The result is `(0,
/// empty)` or a signed partition with trailing zeros dropped. Terminates in
/// at most `len choose 2` swaps.
pub fn straighten(gamma: &[i64]) -> (i64, Partition) {
    let mut g = gamma.to_vec();
    let mut sign = 1i64;
    'outer: loop {
        for j in 0..g.len().saturating_sub(1) {
            if g[j] < g[j + 1] {
                if g[j + 1] == g[j] + 1 {
                    return (0, Partition::empty());
                }
                let (a, b) = (g[j], g[j + 1]);
                g[j] = b - 1;
                g[j + 1] = a + 1;
                sign = -sign;
                continue 'outer;
            }
        }
        break;
    }
    while g.last() == Some(&0) {
        g.pop();
    }
    if g.last().is_some_and(|&v| v < 0) {
        return (0, Partition::empty());
    }
    let parts: Vec<u32> = g.iter().map(|&v| v as u32).collect();
    (sign, Partition::new(parts).expect("straightened index is a partition"))
}

/// The Bernstein creation operator `B_a` on the Schur basis: prepend `a` to
/// the index and straighten. For `a >= mu_1` this is plain creation,
/// `B_a(s_mu) = s_{(a, mu_1, ...)}`.
pub fn bernstein(a: u32, g: &SchurSeries) -> SchurSeries {
    let mut out = SchurSeries::new();
    for (mu, c) in g {
        let mut idx: Vec<i64> = vec![a as i64];
        idx.extend(mu.parts().iter().map(|&p| p as i64));
        let (sign, nu) = straighten(&idx);
        if sign != 0 {
            *out.entry(nu).or_insert_with(BigInt::zero) += c * sign;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Expand `s_mu(X + z)` into powers of the single added variable:
/// all `nu` with `mu/nu` a horizontal strip, paired with `z`-power
/// `|mu| - |nu|`.
pub fn add_single_variable(mu: &Partition) -> Vec<(Partition, u32)> {
    horizontal_strip_subshapes(mu)
        .into_iter()
        .map(|nu| {
            let power = mu.size() - nu.size();
            (nu, power)
        })
        .collect()
}

/// The finite-window operator: apply the divided difference moving the
/// auxiliary variable into block `i+1`, sweep it across that block, and take
/// the constant `z` coefficient. The input must already carry `z` in block
/// `i`'s symmetric orbit (see [`adjoin_aux_to_block`]).
pub fn d_finite(f: &SparsePoly, i: usize, shape: &BlockShape) -> Result<SparsePoly> {
    if i < 1 || i >= shape.r() {
        return Err(Error::ShapeMismatch(format!(
            "operator index {i} must satisfy 1 <= i <= r-1 = {}",
            shape.r() - 1
        )));
    }
    let n_next = shape.size(i + 1);
    let mut g = f.divided_difference(Var::Z, Var::block(i + 1, 1));
    for j in 1..n_next {
        g = g.divided_difference(Var::block(i + 1, j), Var::block(i + 1, j + 1));
    }
    Ok(g.coeff_in_aux(0))
}

/// The multi-symmetric Schur polynomial of `lambda` with the auxiliary
/// variable adjoined as an extra slot at the end of block `i`: this realizes
/// `S(... | X_i + z | ...)` at the window, the input convention of
/// [`d_finite`].
pub fn adjoin_aux_to_block(
    lambda: &MultiPartition,
    i: usize,
    shape: &BlockShape,
) -> Result<SparsePoly> {
    if lambda.r() != shape.r() {
        return Err(Error::ShapeMismatch(format!(
            "index has {} blocks but shape has {}",
            lambda.r(),
            shape.r()
        )));
    }
    if i < 1 || i > lambda.r() {
        return Err(Error::ShapeMismatch(format!("block index {i} out of range")));
    }
    let mut comp = crate::partition::Composition(Vec::new());
    let mut vars: Vec<Var> = Vec::new();
    for b in 1..=lambda.r() {
        let window = if b == i { shape.size(b) + 1 } else { shape.size(b) };
        comp = comp.concat(&lambda.block(b).pad_then_rev(window)?);
        for t in 1..=shape.size(b) {
            vars.push(Var::block(b, t));
        }
        if b == i {
            vars.push(Var::Z);
        }
    }
    Ok(key_poly_in(&comp, &vars))
}

/// The stable operator on Schur-basis expansions: for each term, branch the
/// block-`i` factor into `z`-powers and apply the Bernstein operator of the
/// matching power to the block-`i+1` factor. Degree preserving.
pub fn d_infinite(f: &MultiSymExpansion, i: usize) -> Result<MultiSymExpansion> {
    if f.basis() != Basis::Schur {
        return Err(Error::Precondition(
            "d_infinite expects a Schur-basis expansion".into(),
        ));
    }
    if i < 1 || i >= f.r() {
        return Err(Error::ShapeMismatch(format!(
            "operator index {i} must satisfy 1 <= i <= r-1 = {}",
            f.r() - 1
        )));
    }
    let mut terms: BTreeMap<MultiPartition, BigInt> = BTreeMap::new();
    for (mu, c) in f.terms() {
        for (nu, power) in add_single_variable(mu.block(i)) {
            let mut idx: Vec<i64> = vec![power as i64];
            idx.extend(mu.block(i + 1).parts().iter().map(|&p| p as i64));
            let (sign, rho) = straighten(&idx);
            if sign == 0 {
                continue;
            }
            let image = mu.with_block(i, nu).with_block(i + 1, rho);
            let entry = terms.entry(image).or_insert_with(BigInt::zero);
            *entry += c * sign;
        }
    }
    MultiSymExpansion::new(Basis::Schur, f.r(), f.total(), terms)
}

/// Move the largest part of block `i` into block `i+1`.
pub fn move_largest_part(lambda: &MultiPartition, i: usize) -> Result<MultiPartition> {
    if lambda.block(i).is_empty() {
        return Err(Error::Precondition(format!(
            "block {i} of {lambda} is empty; there is no part to move"
        )));
    }
    let largest = lambda.block(i).part(1);
    let rest = Partition::new(lambda.block(i).parts()[1..].to_vec()).expect("tail of a partition");
    let mut target = lambda.block(i + 1).parts().to_vec();
    target.push(largest);
    Ok(lambda
        .with_block(i, rest)
        .with_block(i + 1, Partition::from_unsorted(target)))
}

/// Cross-validate the recurrence `D_i(S_lambda) = S_lambda'` where `lambda'`
/// moves the largest part of block `i` into block `i+1`: the stable operator
/// must map the Schur expansion of `lambda` onto the Schur expansion of
/// `lambda'`, and the finite-window operator at the stabilization window must
/// reproduce the polynomial of `lambda'` exactly.
pub fn d_recurrence_check(lambda: &MultiPartition, i: usize) -> Result<bool> {
    if i < 1 || i >= lambda.r() {
        return Err(Error::ShapeMismatch(format!(
            "operator index {i} must satisfy 1 <= i <= r-1 = {}",
            lambda.r() - 1
        )));
    }
    let moved = move_largest_part(lambda, i)?;

    let stable = d_infinite(&schur_expansion(lambda)?, i)?;
    if stable != schur_expansion(&moved)? {
        return Ok(false);
    }

    let shape = crate::multisym::stabilization_shape(lambda);
    let with_aux = adjoin_aux_to_block(lambda, i, &shape)?;
    let finite = d_finite(&with_aux, i, &shape)?;
    Ok(finite == crate::multisym::ms_schur_poly(&moved, &shape)?)
}
