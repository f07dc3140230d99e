//! Key polynomials by two independent routes: the divided-difference
//! recursion and the column-diagram filling formula. Also the triangular
//! expansion of arbitrary polynomials in the key basis, and the
//! zero-insertion stability checks that make stable limits well defined.

use crate::error::{Error, Result};
use crate::fillings;
use crate::partition::Composition;
use crate::poly::{Monomial, SparsePoly, Var};
use num_bigint::BigInt;
use num_traits::Zero;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

fn key_memo() -> &'static Mutex<HashMap<Vec<u32>, SparsePoly>> {
    static MEMO: OnceLock<Mutex<HashMap<Vec<u32>, SparsePoly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Drop all memoized key polynomials (results are unaffected; the cache is
/// semantically transparent).
pub fn clear_key_cache() {
    key_memo().lock().unwrap().clear();
}

fn monomial_of(comp: &[u32]) -> SparsePoly {
    SparsePoly::monomial(
        Monomial::from_pairs(comp.iter().enumerate().map(|(i, &e)| (Var::x(i + 1), e))),
        1,
    )
}

/// The key polynomial of `alpha` in the canonical variables `x_1..x_n`,
/// `n = len(alpha)`. Weakly decreasing indices give plain monomials; other
/// indices are reached by applying one divided difference per inversion,
/// greedily left to right. The result is independent of the chosen order.
/// Memoized globally, keyed on the composition with trailing zeros intact.
pub fn key_poly(alpha: &Composition) -> SparsePoly {
    // Descend along swaps until we hit the memo or a weakly decreasing base,
    // then unwind, applying divided differences and filling the memo.
    let mut pending: Vec<(usize, Vec<u32>)> = Vec::new();
    let mut cur = alpha.0.clone();
    let mut poly = loop {
        if let Some(hit) = key_memo().lock().unwrap().get(&cur) {
            break hit.clone();
        }
        match cur.windows(2).position(|w| w[0] < w[1]) {
            None => {
                let base = monomial_of(&cur);
                key_memo().lock().unwrap().insert(cur.clone(), base.clone());
                break base;
            }
            Some(i) => {
                pending.push((i, cur.clone()));
                cur.swap(i, i + 1);
            }
        }
    };
    while let Some((i, comp)) = pending.pop() {
        poly = poly.divided_difference(Var::x(i + 1), Var::x(i + 2));
        key_memo().lock().unwrap().insert(comp, poly.clone());
    }
    poly
}

/// Key polynomial over an explicit variable sequence (`vars[i]` replaces
/// `x_{i+1}`). This is how block-structured windows and the auxiliary
/// variable are threaded through the recursion.
pub fn key_poly_in(alpha: &Composition, vars: &[Var]) -> SparsePoly {
    assert_eq!(alpha.len(), vars.len());
    key_poly(alpha).rename_vars(|v| match v {
        Var::Block(1, i) => vars[i as usize - 1],
        other => other,
    })
}

/// A filling of the column diagram of a composition by labels `1..=n`,
/// stored per column from bottom to top. The implied basement entry under
/// column `j` is `j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KeyFilling {
    heights: Composition,
    labels: Vec<Vec<u32>>,
}

impl KeyFilling {
    pub fn heights(&self) -> &Composition {
        &self.heights
    }

    pub fn labels(&self) -> &[Vec<u32>] {
        &self.labels
    }

    /// The monomial `x^sigma`: one factor `x_label` per box.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_pairs(
            self.labels.iter().flatten().map(|&v| (Var::x(v as usize), 1)),
        )
    }

    /// Re-check every condition from scratch.
    pub fn is_valid(&self) -> bool {
        let basement: Vec<u32> = (1..=self.heights.len() as u32).collect();
        fillings::validate(&self.heights.0, &basement, &self.labels)
    }

    /// Compact one-line rendering: columns separated by `|`, labels bottom
    /// to top, e.g. `[1||2,1]` for a (1,0,2)-shaped filling.
    pub fn compact(&self) -> String {
        let cols: Vec<String> = self
            .labels
            .iter()
            .map(|col| col.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        format!("[{}]", cols.join("|"))
    }
}

/// All admissible fillings of the diagram of `alpha`, in a fixed search order.
pub fn enumerate_key_fillings(alpha: &Composition) -> Vec<KeyFilling> {
    let n = alpha.len();
    let basement: Vec<u32> = (1..=n as u32).collect();
    let mut supply: Vec<(u32, Option<u32>)> = (1..=n as u32).map(|v| (v, None)).collect();
    let mut out = Vec::new();
    fillings::search(&alpha.0, &basement, &mut supply, &mut |labels| {
        out.push(KeyFilling { heights: alpha.clone(), labels: labels.to_vec() });
    });
    out
}

/// The key polynomial as the generating function of its fillings. Must agree
/// with [`key_poly`]; the two routes share no code.
pub fn key_poly_by_fillings(alpha: &Composition) -> SparsePoly {
    let n = alpha.len();
    let basement: Vec<u32> = (1..=n as u32).collect();
    let mut supply: Vec<(u32, Option<u32>)> = (1..=n as u32).map(|v| (v, None)).collect();
    let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    fillings::search(&alpha.0, &basement, &mut supply, &mut |labels| {
        let mono = Monomial::from_pairs(
            labels.iter().flatten().map(|&v| (Var::x(v as usize), 1)),
        );
        *terms.entry(mono).or_insert_with(BigInt::zero) += 1;
    });
    SparsePoly::from_terms(terms)
}

/// Reverse-lexicographic comparison of exponent vectors: the larger entry at
/// the last differing index wins.
pub fn rl_cmp(a: &[u32], b: &[u32]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn exponent_vector(m: &Monomial, n: usize) -> Result<Vec<u32>> {
    let mut v = vec![0u32; n];
    for (var, e) in m.iter() {
        match var {
            Var::Block(1, i) if (i as usize) <= n => v[i as usize - 1] = e,
            other => {
                return Err(Error::ShapeMismatch(format!(
                    "polynomial contains variable {other} outside x1..x{n}"
                )))
            }
        }
    }
    Ok(v)
}

/// Expand a polynomial in `x_1..x_n` over the key basis by triangular
/// elimination against reverse-lexicographic leading terms. Each step strips
/// the current leading monomial exactly; the leader strictly decreases, which
/// is asserted.
pub fn expand_in_key_basis(
    f: &SparsePoly,
    n: usize,
) -> Result<BTreeMap<Composition, BigInt>> {
    let mut rest = f.clone();
    let mut out: BTreeMap<Composition, BigInt> = BTreeMap::new();
    let mut prev_leader: Option<Vec<u32>> = None;
    while !rest.is_zero() {
        let (mono, coeff) = {
            let mut best: Option<(Vec<u32>, &Monomial, &BigInt)> = None;
            for (m, c) in rest.terms() {
                let v = exponent_vector(m, n)?;
                match &best {
                    Some((bv, _, _)) if rl_cmp(&v, bv) != Ordering::Greater => {}
                    _ => best = Some((v, m, c)),
                }
            }
            let (v, m, c) = best.expect("nonzero polynomial has a leading term");
            (v, (m.clone(), c.clone()))
        };
        let (leader, (_, coeff)) = (mono, coeff);
        if let Some(prev) = &prev_leader {
            assert_eq!(
                rl_cmp(&leader, prev),
                Ordering::Less,
                "key-basis elimination must strictly decrease"
            );
        }
        let alpha = Composition(leader.clone());
        rest = rest.sub(&key_poly(&alpha).scalar_mul(coeff.clone()));
        out.insert(alpha, coeff);
        prev_leader = Some(leader);
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Rebuild a polynomial from key-basis coordinates (test and round-trip aid).
pub fn combine_key_basis(coords: &BTreeMap<Composition, BigInt>) -> SparsePoly {
    let mut acc = SparsePoly::zero();
    for (alpha, c) in coords {
        acc = acc.add(&key_poly(alpha).scalar_mul(c.clone()));
    }
    acc
}

/// Check one zero-slot stability instance: `comp` must have a 0 at `pos`
/// (1-based). Substituting `x_pos := 0` into the key polynomial of `comp`
/// must reproduce the key polynomial of `comp` with that slot deleted, on the
/// remaining variables in order.
pub fn zero_slot_stability(comp: &Composition, pos: usize) -> Result<bool> {
    if pos < 1 || pos > comp.len() || comp.0[pos - 1] != 0 {
        return Err(Error::Precondition(format!(
            "position {pos} is not a zero slot of {comp}"
        )));
    }
    let specialized = key_poly(comp).specialize_zero(Var::x(pos));
    let mut smaller = comp.0.clone();
    smaller.remove(pos - 1);
    // Variables of the smaller window, skipping the deleted slot.
    let vars: Vec<Var> = (1..=comp.len()).filter(|&q| q != pos).map(Var::x).collect();
    Ok(specialized == key_poly_in(&Composition(smaller), &vars))
}

/// Verify stability of the padded family `beta * 0^{k_1} * alphas[0] * ... *
/// 0^{k_r} * alphas[r-1]` by raising the paddings one slot at a time,
/// `n_steps` rounds over the blocks, and checking each single insertion with
/// [`zero_slot_stability`].
pub fn stable_limit_check(beta: &Composition, alphas: &[Composition], n_steps: usize) -> bool {
    assert!(n_steps >= 1);
    let r = alphas.len();
    let build = |k: &[usize]| -> Composition {
        let mut comp = beta.clone();
        for i in 0..r {
            comp = comp.concat(&Composition(vec![0; k[i]])).concat(&alphas[i]);
        }
        comp
    };
    let mut k = vec![0usize; r];
    for _ in 0..n_steps {
        for i in 0..r {
            k[i] += 1;
            let bigger = build(&k);
            let pos = beta.len() + k[..i].iter().sum::<usize>()
                + alphas[..i].iter().map(|a| a.len()).sum::<usize>()
                + 1;
            match zero_slot_stability(&bigger, pos) {
                Ok(true) => {}
                _ => return false,
            }
        }
    }
    true
}
