//! Single-alphabet symmetric function machinery: semistandard tableau
//! counting, Kostka matrices and their exact integer inverses, alternants,
//! and monomial-to-Schur conversion for symmetric polynomials.

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::{Monomial, SparsePoly, Var};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// All subshapes `nu ⊆ mu` such that `mu/nu` is a horizontal strip,
/// i.e. the interlacing `mu_i >= nu_i >= mu_{i+1}` holds.
pub fn horizontal_strip_subshapes(mu: &Partition) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    // Build row by row; nu_i ranges over [mu_{i+1}, mu_i].
    for i in 1..=mu.len() {
        let lo = mu.part(i + 1);
        let hi = mu.part(i);
        let mut next = Vec::new();
        for nu in &out {
            for v in lo..=hi {
                let mut parts = nu.parts().to_vec();
                if v > 0 {
                    parts.push(v);
                }
                next.push(Partition::from_unsorted(parts));
            }
        }
        out = next;
    }
    out.sort();
    out.dedup();
    out
}

/// Number of semistandard Young tableaux of shape `lambda` whose content is
/// the composition `content` (entry k appears `content[k-1]` times).
///
/// Counted through horizontal-strip chains: a tableau is a flag
/// `∅ = nu^0 ⊆ nu^1 ⊆ ... ⊆ nu^m = lambda` with `|nu^k / nu^{k-1}| =
/// content[k-1]` and each skew a horizontal strip.
pub fn ssyt_count(lambda: &Partition, content: &[u32]) -> u64 {
    fn go(shape: &Partition, content: &[u32]) -> u64 {
        match content.split_last() {
            None => u64::from(shape.is_empty()),
            Some((&last, rest)) => horizontal_strip_subshapes(shape)
                .into_iter()
                .filter(|nu| nu.size() + last == shape.size())
                .map(|nu| go(&nu, rest))
                .sum(),
        }
    }
    if content.iter().sum::<u32>() != lambda.size() {
        return 0;
    }
    go(lambda, content)
}

/// Partitions of `d` in enumeration order paired with the inverse Kostka
/// matrix for that degree: row `j` expresses `m_{parts[j]}` in the Schur
/// basis, `m_mu = sum_nu inv[mu][nu] s_nu`.
pub fn inverse_kostka(degree: u32) -> (Vec<Partition>, Vec<Vec<BigInt>>) {
    static CACHE: OnceLock<Mutex<HashMap<u32, (Vec<Partition>, Vec<Vec<BigInt>>)>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&degree) {
        return hit.clone();
    }

    let parts = partitions_of(degree);
    let n = parts.len();
    // Kostka matrix: k[a][b] = K_{parts[a], parts[b]}. Enumeration order
    // refines dominance, so the matrix is upper unitriangular.
    let mut k = vec![vec![BigInt::zero(); n]; n];
    for a in 0..n {
        for b in a..n {
            k[a][b] = BigInt::from(ssyt_count(&parts[a], parts[b].parts()));
        }
        debug_assert!(k[a][a].is_one());
    }
    // Back-substitution inverse of an upper unitriangular integer matrix.
    let mut inv = vec![vec![BigInt::zero(); n]; n];
    for a in (0..n).rev() {
        inv[a][a] = BigInt::one();
        for b in (a + 1)..n {
            let mut acc = BigInt::zero();
            for m in (a + 1)..=b {
                if !k[a][m].is_zero() {
                    acc += &k[a][m] * &inv[m][b];
                }
            }
            inv[a][b] = -acc;
        }
    }
    let entry = (parts, inv);
    cache.lock().unwrap().insert(degree, entry.clone());
    entry
}

/// `m_mu` in the Schur basis: the nonzero entries of the inverse Kostka row.
pub fn monomial_to_schur(mu: &Partition) -> Vec<(Partition, BigInt)> {
    let (parts, inv) = inverse_kostka(mu.size());
    let row = parts.iter().position(|p| p == mu).expect("partition of its own size");
    parts
        .iter()
        .zip(&inv[row])
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (p.clone(), c.clone()))
        .collect()
}

/// The alternant `sum_sigma sign(sigma) prod_i vars[sigma(i)]^{exps[i]}`.
pub fn alternant(vars: &[Var], exps: &[u32]) -> SparsePoly {
    assert_eq!(vars.len(), exps.len());
    let n = vars.len();
    let mut out = SparsePoly::zero();
    for_each_permutation(n, &mut |perm, sign| {
        let mono = Monomial::from_pairs((0..n).map(|i| (vars[perm[i]], exps[i])));
        out = out.add(&SparsePoly::monomial(mono, sign));
    });
    out
}

// Heap's algorithm; consecutive permutations differ by one transposition, so
// the sign alternates.
fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize], i64)) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1i64;
    f(&perm, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            f(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// The staircase exponents `(n-1, n-2, ..., 0)`.
pub fn staircase(n: usize) -> Vec<u32> {
    (0..n).rev().map(|i| i as u32).collect()
}

/// Bialternant check: `candidate` equals the Schur polynomial `s_lambda` in
/// `vars` iff `candidate * a_delta == a_{lambda+delta}`. Division-free.
pub fn is_schur_polynomial(candidate: &SparsePoly, lambda: &Partition, vars: &[Var]) -> bool {
    let n = vars.len();
    if lambda.len() > n {
        return candidate.is_zero();
    }
    let delta = staircase(n);
    let mut shifted = delta.clone();
    for (i, s) in shifted.iter_mut().enumerate() {
        *s += lambda.part(i + 1);
    }
    candidate.mul(&alternant(vars, &delta)) == alternant(vars, &shifted)
}

/// Schur polynomial in `vars` built from its tableau-generating definition:
/// the sum over SSYT of shape `lambda` with entries bounded by `vars.len()`.
pub fn schur_polynomial(lambda: &Partition, vars: &[Var]) -> SparsePoly {
    let n = vars.len();
    if lambda.len() > n {
        return SparsePoly::zero();
    }
    // Chains of horizontal strips, accumulating one variable per level.
    fn go(shape: &Partition, level: usize, vars: &[Var], mono: Monomial, out: &mut SparsePoly) {
        if level == 0 {
            if shape.is_empty() {
                *out = out.add(&SparsePoly::monomial(mono, 1));
            }
            return;
        }
        for nu in horizontal_strip_subshapes(shape) {
            let step = shape.size() - nu.size();
            let next = mono.mul(&Monomial::var(vars[level - 1], step));
            go(&nu, level - 1, vars, next, out);
        }
    }
    let mut out = SparsePoly::zero();
    go(lambda, n, vars, Monomial::one(), &mut out);
    out
}

/// Expand a polynomial symmetric in `vars` into Schur coefficients, degree by
/// degree, by reading monomial coefficients at partition exponents and
/// applying the inverse Kostka matrices.
///
/// Requires `vars.len()` at least the total degree, so that no partition of
/// any occurring degree is truncated by the variable window.
pub fn schur_expand_symmetric(
    f: &SparsePoly,
    vars: &[Var],
) -> Result<Vec<(Partition, BigInt)>> {
    if (vars.len() as u32) < f.total_degree() {
        return Err(Error::InvalidWindow(format!(
            "need at least {} variables to expand a degree-{} polynomial",
            f.total_degree(),
            f.total_degree()
        )));
    }
    let mut degrees: Vec<u32> = f.terms().map(|(m, _)| m.total_degree()).collect();
    degrees.sort_unstable();
    degrees.dedup();

    let mut out: Vec<(Partition, BigInt)> = Vec::new();
    let mut reconstructed = SparsePoly::zero();
    for d in degrees {
        let (parts, inv) = inverse_kostka(d);
        for (j, mu) in parts.iter().enumerate() {
            let mono = Monomial::from_pairs(
                mu.parts().iter().enumerate().map(|(i, &e)| (vars[i], e)),
            );
            let c = f.coefficient(&mono);
            if c.is_zero() {
                continue;
            }
            for (i, nu) in parts.iter().enumerate() {
                let w = &c * &inv[j][i];
                if !w.is_zero() {
                    match out.iter_mut().find(|(p, _)| p == nu) {
                        Some((_, acc)) => *acc += w,
                        None => out.push((nu.clone(), w)),
                    }
                }
            }
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    // The input must really be symmetric: rebuilding from the Schur
    // coefficients has to reproduce it exactly.
    for (p, c) in &out {
        reconstructed = reconstructed.add(&schur_polynomial(p, vars).scalar_mul(c.clone()));
    }
    if reconstructed != *f {
        return Err(Error::Precondition(
            "polynomial is not symmetric in the given variables".into(),
        ));
    }
    out.sort_by(|(a, _), (b, _)| a.cmp(b));
    Ok(out)
}

/// Classical dominance on partitions of equal size via partial sums.
pub fn dominance_partial_sums(mu: &Partition, lambda: &Partition) -> bool {
    if mu.size() != lambda.size() {
        return false;
    }
    let n = mu.len().max(lambda.len());
    let mut sm = 0u32;
    let mut sl = 0u32;
    for k in 1..=n {
        sm += mu.part(k);
        sl += lambda.part(k);
        if sm > sl {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn ssyt_counts_match_known_kostka_numbers() {
        assert_eq!(ssyt_count(&p(&[2, 1]), &[1, 1, 1]), 2);
        assert_eq!(ssyt_count(&p(&[2, 1]), &[2, 1]), 1);
        assert_eq!(ssyt_count(&p(&[2, 1]), &[1, 2]), 1);
        assert_eq!(ssyt_count(&p(&[3]), &[1, 1, 1]), 1);
        assert_eq!(ssyt_count(&p(&[1, 1, 1]), &[1, 1, 1]), 1);
        assert_eq!(ssyt_count(&p(&[1, 1, 1]), &[2, 1]), 0);
        assert_eq!(ssyt_count(&p(&[2, 2]), &[1, 1, 1, 1]), 2);
    }

    #[test]
    fn inverse_kostka_inverts() {
        for d in 0..=5 {
            let (parts, inv) = inverse_kostka(d);
            let n = parts.len();
            for a in 0..n {
                for b in 0..n {
                    let mut acc = BigInt::zero();
                    for m in 0..n {
                        acc += BigInt::from(ssyt_count(&parts[a], parts[m].parts())) * &inv[m][b];
                    }
                    assert_eq!(acc, BigInt::from(u64::from(a == b)), "degree {d} ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn schur_polynomial_passes_bialternant_check() {
        let vars: Vec<Var> = (1..=3).map(Var::x).collect();
        for lam in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[3, 2, 1])] {
            let s = schur_polynomial(&lam, &vars);
            assert!(is_schur_polynomial(&s, &lam, &vars), "{lam}");
        }
        // And a wrong candidate fails.
        assert!(!is_schur_polynomial(&SparsePoly::one(), &p(&[1]), &vars));
    }

    #[test]
    fn schur_expand_round_trips() {
        let vars: Vec<Var> = (1..=4).map(Var::x).collect();
        let f = schur_polynomial(&p(&[2, 1]), &vars)
            .scalar_mul(3)
            .add(&schur_polynomial(&p(&[1, 1, 1]), &vars).scalar_mul(-2));
        let coeffs = schur_expand_symmetric(&f, &vars).unwrap();
        assert_eq!(
            coeffs,
            vec![(p(&[2, 1]), BigInt::from(3)), (p(&[1, 1, 1]), BigInt::from(-2))]
        );
        // Asymmetric input is rejected.
        let g = SparsePoly::var(Var::x(1));
        assert!(schur_expand_symmetric(&g.mul(&g), &vars).is_err());
    }

    #[test]
    fn alternant_antisymmetry() {
        let vars: Vec<Var> = (1..=3).map(Var::x).collect();
        let a = alternant(&vars, &[4, 2, 0]);
        assert_eq!(a.swap_vars(vars[0], vars[1]), a.neg());
        assert!(alternant(&vars, &[2, 2, 0]).is_zero());
    }
}
