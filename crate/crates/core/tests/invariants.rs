//! Cross-module invariant checks: algebraic identities of the
//! divided-difference operators, order-theoretic properties of the dominance
//! moves, classical reductions, and operator cross-validations. Randomized
//! properties use proptest; everything with a small finite domain is swept
//! exhaustively.

mod common;

use common::{compositions_up_to, mp, part, poly};
use multisym::classical::{
    dominance_partial_sums, is_schur_polynomial, schur_expand_symmetric, schur_polynomial,
    ssyt_count,
};
use multisym::key::{combine_key_basis, key_poly_in, rl_cmp};
use multisym::operators::adjoin_aux_to_block;
use multisym::{
    bernstein, d_finite, d_infinite, down_set, enumerate_multifillings,
    enumerate_multipartitions, expand_in_key_basis, key_poly, key_poly_by_fillings,
    kostka_coefficient, ms_schur_poly, parse_multipartition, partitions_of, prec_less,
    schur_expansion, xi_restrict, Basis, BlockShape, Composition, Monomial, MultiPartition,
    MultiSymExpansion, Partition, SchurSeries, SparsePoly, Var,
};
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

// ---- strategies ----

fn arb_poly(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, nvars), -5i64..=5),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        let mut acc = SparsePoly::zero();
        for (exps, c) in terms {
            let mono = Monomial::from_pairs(
                exps.iter().enumerate().map(|(i, &e)| (Var::x(i + 1), e)),
            );
            acc = acc.add(&SparsePoly::monomial(mono, c));
        }
        acc
    })
}

fn arb_composition(max_len: usize, max_entry: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(0..=max_entry, 0..=max_len).prop_map(Composition)
}

fn arb_partition(max: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max, 0..=4).prop_map(Partition::from_unsorted)
}

fn arb_multipartition(r: usize, max: u32) -> impl Strategy<Value = MultiPartition> {
    prop::collection::vec(arb_partition(max), r).prop_map(MultiPartition::new)
}

// ---- polynomial operator identities ----

proptest! {
    #[test]
    fn mul_identity(f in arb_poly(3, 3, 6)) {
        prop_assert_eq!(f.mul(&SparsePoly::one()), f);
    }

    #[test]
    fn divided_difference_exactness(f in arb_poly(3, 4, 6)) {
        // (x - y) xi(f) = x f - y swap(f)
        for (a, b) in [(1usize, 2usize), (2, 3), (1, 3)] {
            let (x, y) = (Var::x(a), Var::x(b));
            let xi = f.divided_difference(x, y);
            let lhs = SparsePoly::var(x).sub(&SparsePoly::var(y)).mul(&xi);
            let rhs = SparsePoly::var(x).mul(&f).sub(&SparsePoly::var(y).mul(&f.swap_vars(x, y)));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn divided_difference_idempotent_and_symmetric(f in arb_poly(3, 4, 6)) {
        let (x, y) = (Var::x(1), Var::x(2));
        let once = f.divided_difference(x, y);
        prop_assert_eq!(once.divided_difference(x, y), once.clone());
        prop_assert!(once.is_symmetric_in(&[x, y]));
        // And it fixes anything already symmetric in the pair.
        let sym = f.add(&f.swap_vars(x, y));
        prop_assert_eq!(sym.divided_difference(x, y), sym);
    }

    #[test]
    fn braid_relation(f in arb_poly(3, 4, 6)) {
        let xi = |g: &SparsePoly, i: usize| g.divided_difference(Var::x(i), Var::x(i + 1));
        let lhs = xi(&xi(&xi(&f, 1), 2), 1);
        let rhs = xi(&xi(&xi(&f, 2), 1), 2);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn weyl_idempotent_and_fixes_symmetric(f in arb_poly(3, 3, 5)) {
        let vars: Vec<Var> = (1..=3).map(Var::x).collect();
        let w = f.weyl_symmetrize(&vars);
        prop_assert!(w.is_symmetric_in(&vars));
        prop_assert_eq!(w.weyl_symmetrize(&vars), w);
    }

    #[test]
    fn specialization_slides_past_divided_difference(f in arb_poly(4, 3, 6)) {
        // Setting x_i := 0 after xi_i equals swapping names after x_{i+1} := 0.
        for i in 1..=3usize {
            let (x, y) = (Var::x(i), Var::x(i + 1));
            let lhs = f.divided_difference(x, y).specialize_zero(x);
            let rhs = f.specialize_zero(y).swap_vars(x, y);
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn weyl_of_dominant_monomial_is_schur() {
    for n in 1..=4usize {
        let vars: Vec<Var> = (1..=n).map(Var::x).collect();
        for size in 0..=5u32 {
            for lam in partitions_of(size) {
                if lam.len() > n {
                    continue;
                }
                let mono = Monomial::from_pairs(
                    lam.parts().iter().enumerate().map(|(i, &e)| (vars[i], e)),
                );
                let w = SparsePoly::monomial(mono, 1).weyl_symmetrize(&vars);
                assert!(is_schur_polynomial(&w, &lam, &vars), "n={n} lambda={lam}");
            }
        }
    }
}

// ---- key polynomials ----

/// Reference recursion resolving inversions right-to-left instead of
/// left-to-right; no memo, no shared code with `key_poly`'s descent order.
fn key_poly_rightmost(alpha: &[u32]) -> SparsePoly {
    match alpha.windows(2).rposition(|w| w[0] < w[1]) {
        None => SparsePoly::monomial(
            Monomial::from_pairs(alpha.iter().enumerate().map(|(i, &e)| (Var::x(i + 1), e))),
            1,
        ),
        Some(i) => {
            let mut b = alpha.to_vec();
            b.swap(i, i + 1);
            key_poly_rightmost(&b).divided_difference(Var::x(i + 1), Var::x(i + 2))
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn key_word_independence(alpha in arb_composition(5, 3)) {
        prop_assert_eq!(key_poly(&alpha), key_poly_rightmost(&alpha.0));
    }

    #[test]
    fn key_basis_round_trip(f in arb_poly(3, 3, 5)) {
        let coords = expand_in_key_basis(&f, 3).unwrap();
        prop_assert_eq!(combine_key_basis(&coords), f);
    }
}

#[test]
fn key_oracle_equivalence_on_larger_random_compositions() {
    // 200 fixed pseudo-random compositions beyond the exhaustive sweep.
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..200 {
        let len = 2 + (next() % 4) as usize; // up to 5
        let alpha = Composition((0..len).map(|_| (next() % 4) as u32).collect());
        assert_eq!(key_poly(&alpha), key_poly_by_fillings(&alpha), "alpha = {alpha}");
    }
}

/// Closure of the support moves on compositions: swap an increasing pair, or
/// shift one unit left across a gap of at least two.
fn support_move_closure(alpha: &[u32]) -> BTreeSet<Vec<u32>> {
    let mut seen = BTreeSet::from([alpha.to_vec()]);
    let mut queue = VecDeque::from([alpha.to_vec()]);
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len() {
            for j in (i + 1)..cur.len() {
                if cur[i] < cur[j] {
                    let mut t = cur.clone();
                    t.swap(i, j);
                    if seen.insert(t.clone()) {
                        queue.push_back(t);
                    }
                }
                if cur[i] + 1 < cur[j] {
                    let mut m = cur.clone();
                    m[i] += 1;
                    m[j] -= 1;
                    if seen.insert(m.clone()) {
                        queue.push_back(m);
                    }
                }
            }
        }
    }
    seen
}

#[test]
fn key_support_is_the_move_closure_with_positive_coefficients() {
    for len in 0..=3usize {
        for alpha in compositions_up_to(len, 4) {
            let f = key_poly(&alpha);
            let mut support = BTreeSet::new();
            for (m, c) in f.terms() {
                assert!(c >= &BigInt::one(), "coefficient {c} in K_{alpha}");
                let mut v = vec![0u32; len];
                for (var, e) in m.iter() {
                    match var {
                        Var::Block(1, i) => v[i as usize - 1] = e,
                        _ => unreachable!(),
                    }
                }
                support.insert(v);
            }
            assert_eq!(support, support_move_closure(&alpha.0), "alpha = {alpha}");
        }
    }
}

#[test]
fn rl_order_sorts_leading_terms() {
    use std::cmp::Ordering;
    assert_eq!(rl_cmp(&[1, 0], &[0, 1]), Ordering::Less);
    assert_eq!(rl_cmp(&[5, 1], &[0, 2]), Ordering::Less);
    assert_eq!(rl_cmp(&[2, 2], &[2, 2]), Ordering::Equal);
}

// ---- orders ----

#[test]
fn single_block_dominance_matches_partial_sums() {
    for size in 0..=7u32 {
        let parts = partitions_of(size);
        for b in &parts {
            let ds = down_set(&MultiPartition::new(vec![b.clone()]));
            for a in &parts {
                let reachable = ds.contains(&MultiPartition::new(vec![a.clone()]));
                assert_eq!(
                    reachable,
                    dominance_partial_sums(a, b),
                    "a={a} b={b}"
                );
            }
        }
    }
}

#[test]
fn refinement_and_antisymmetry() {
    for r in 1..=3usize {
        for total in 0..=5u32 {
            if r == 3 && total == 5 {
                continue; // covered at r <= 2; keep the sweep quick
            }
            let all = enumerate_multipartitions(total, r);
            let downs: Vec<BTreeSet<MultiPartition>> = all.iter().map(down_set).collect();
            for (bi, b) in all.iter().enumerate() {
                assert!(downs[bi].contains(b));
                for (ai, a) in all.iter().enumerate() {
                    if a == b {
                        continue;
                    }
                    if downs[bi].contains(a) {
                        assert!(prec_less(a, b).unwrap(), "refinement fails: {a} vs {b}");
                        assert!(!downs[ai].contains(b), "antisymmetry fails: {a} vs {b}");
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn grammar_round_trip(m in arb_multipartition(3, 4)) {
        let rendered = m.to_string();
        prop_assert_eq!(parse_multipartition(&rendered).unwrap(), m);
    }

    #[test]
    fn witness_replay_reaches_endpoint(
        a in arb_multipartition(2, 3),
        b in arb_multipartition(2, 3),
    ) {
        if let Some(w) = multisym::dominance_multi_less(&a, &b).unwrap() {
            prop_assert!(w.replay().unwrap());
            prop_assert_eq!(w.start, b);
            prop_assert_eq!(w.end, a);
            prop_assert!(prec_less(&a, &b).unwrap());
        }
    }
}

// ---- multisym ----

#[test]
fn empty_block_collapse_at_coefficient_level() {
    // S_{(lambda|empty)} carries no second-alphabet content and reduces to
    // the classical expansion; S_{(empty|lambda)} evaluates lambda on the
    // union of both alphabets, so its coefficients are tableau counts with
    // concatenated content.
    for size in 0..=3u32 {
        for lam in partitions_of(size) {
            let left = MultiPartition::new(vec![lam.clone(), Partition::empty()]);
            let right = MultiPartition::new(vec![Partition::empty(), lam.clone()]);
            for mu in enumerate_multipartitions(size, 2) {
                let k_left = kostka_coefficient(&left, &mu).unwrap();
                if mu.block(2).is_empty() {
                    assert_eq!(k_left, ssyt_count(&lam, mu.block(1).parts()));
                } else {
                    assert_eq!(k_left, 0);
                }
                let k_right = kostka_coefficient(&right, &mu).unwrap();
                let mut content = mu.block(1).parts().to_vec();
                content.extend_from_slice(mu.block(2).parts());
                assert_eq!(k_right, ssyt_count(&lam, &content), "lam={lam} mu={mu}");
            }
        }
    }
}

#[test]
fn wildcard_fillings_count_bounded_tableaux() {
    // With labels capped at n, single-alphabet fillings are equinumerous
    // with semistandard tableaux on entries <= n.
    for size in 0..=4u32 {
        for lam in partitions_of(size) {
            for n in 1..=4u32 {
                let fills = enumerate_multifillings(
                    &MultiPartition::new(vec![lam.clone()]),
                    None,
                    Some(n),
                )
                .unwrap();
                let mut tableaux = 0u64;
                for content in compositions_up_to(n as usize, size) {
                    if content.size() == size {
                        tableaux += ssyt_count(&lam, &content.0);
                    }
                }
                assert_eq!(fills.len() as u64, tableaux, "lam={lam} n={n}");
                for f in &fills {
                    assert!(f.is_valid());
                }
            }
        }
    }
}

#[test]
fn expansions_are_homogeneous_with_matching_blocks() {
    for total in 0..=4u32 {
        for lam in enumerate_multipartitions(total, 2) {
            let e = multisym::monomial_expansion(&lam);
            assert_eq!(e.total(), total);
            for (idx, _) in e.terms() {
                assert_eq!(idx.total_size(), total);
                assert_eq!(idx.r(), 2);
            }
        }
    }
}

// ---- operators ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bernstein_creation_property(mu in arb_partition(4), extra in 0u32..=3) {
        let a = mu.part(1) + extra; // a >= mu_1
        let g: SchurSeries = [(mu.clone(), BigInt::one())].into_iter().collect();
        let image = bernstein(a, &g);
        let mut parts = vec![a];
        parts.extend_from_slice(mu.parts());
        let want: SchurSeries =
            [(Partition::new(parts).unwrap(), BigInt::one())].into_iter().collect();
        prop_assert_eq!(image, want);
    }
}

#[test]
fn bernstein_agrees_with_symmetrizer_limit() {
    // <z^0> W_{z,y_1..y_n}(z^a s_mu(y)) at n = |mu| + a + 2 equals
    // B_a(s_mu), computed through straightening. Polynomial route on the
    // left, index combinatorics on the right.
    for size in 0..=3u32 {
        for mu in partitions_of(size) {
            for a in 0..=3u32 {
                let n = (size + a + 2) as usize;
                let yvars: Vec<Var> = (1..=n).map(Var::x).collect();
                let mut wvars = vec![Var::Z];
                wvars.extend(&yvars);
                let f = SparsePoly::monomial(Monomial::var(Var::Z, a), 1)
                    .mul(&schur_polynomial(&mu, &yvars));
                let limit = f.weyl_symmetrize(&wvars).coeff_in_aux(0);
                let got: Vec<(Partition, BigInt)> =
                    schur_expand_symmetric(&limit, &yvars).unwrap();
                let series: SchurSeries = [(mu.clone(), BigInt::one())].into_iter().collect();
                let want: Vec<(Partition, BigInt)> = bernstein(a, &series).into_iter().collect();
                assert_eq!(got, want, "mu={mu} a={a}");
            }
        }
    }
}

#[test]
fn restriction_commutes_with_the_operator() {
    // Xi_j . D_i at window n equals D_i at the shrunk window . Xi_j, on
    // multi-symmetric Schur inputs.
    for total in 0..=3u32 {
        for lam in enumerate_multipartitions(total, 2) {
            let sizes: Vec<usize> = (1..=2).map(|k| lam.block(k).len() + 2).collect();
            let shape = BlockShape::new(sizes).unwrap();
            for j in 1..=2usize {
                let shrunk = shape.with_size(j, shape.size(j) - 1).unwrap();
                let lhs = xi_restrict(
                    &d_finite(&adjoin_aux_to_block(&lam, 1, &shape).unwrap(), 1, &shape).unwrap(),
                    j,
                    &shape,
                );
                let rhs =
                    d_finite(&adjoin_aux_to_block(&lam, 1, &shrunk).unwrap(), 1, &shrunk).unwrap();
                assert_eq!(lhs, rhs, "lam={lam} j={j}");
            }
        }
    }
}

#[test]
fn stable_operator_preserves_degree_and_linearity() {
    let e = schur_expansion(&mp("(2,1|1)")).unwrap();
    let image = d_infinite(&e, 1).unwrap();
    assert_eq!(image.total(), e.total());
    assert_eq!(image.r(), e.r());
    // Linearity: applying to a scaled sum matches the sum of images.
    let f = schur_expansion(&mp("(1,1|2)")).unwrap();
    let combined = {
        let mut terms: BTreeMap<MultiPartition, BigInt> = BTreeMap::new();
        for (idx, c) in e.terms() {
            *terms.entry(idx.clone()).or_default() += c * 2;
        }
        for (idx, c) in f.terms() {
            *terms.entry(idx.clone()).or_default() += c;
        }
        MultiSymExpansion::new(Basis::Schur, 2, 4, terms).unwrap()
    };
    let image_combined = d_infinite(&combined, 1).unwrap();
    let mut expect: BTreeMap<MultiPartition, BigInt> = BTreeMap::new();
    for (idx, c) in d_infinite(&e, 1).unwrap().terms() {
        *expect.entry(idx.clone()).or_default() += c * 2;
    }
    for (idx, c) in d_infinite(&f, 1).unwrap().terms() {
        *expect.entry(idx.clone()).or_default() += c;
    }
    let expect = MultiSymExpansion::new(Basis::Schur, 2, 4, expect).unwrap();
    assert_eq!(image_combined, expect);
}

// ---- stability entry points ----

#[test]
fn stable_limit_families_converge() {
    use multisym::key::stable_limit_check;
    assert!(stable_limit_check(&Composition(vec![]), &[part(&[2, 1]).rev()], 3));
    assert!(stable_limit_check(
        &Composition(vec![1, 1]),
        &[Composition(vec![2, 0])],
        2
    ));
    // Mixed-block family with a nonempty prefix.
    assert!(stable_limit_check(
        &Composition(vec![2]),
        &[part(&[1]).rev(), part(&[2]).rev()],
        2
    ));
}

#[test]
fn window_polynomials_are_block_symmetric() {
    for lam in enumerate_multipartitions(3, 2) {
        let shape = BlockShape::uniform(2, 3);
        let f = ms_schur_poly(&lam, &shape).unwrap();
        for b in 1..=2usize {
            let vars: Vec<Var> = (1..=3).map(|t| Var::block(b, t)).collect();
            assert!(f.is_symmetric_in(&vars), "{lam} block {b}");
        }
    }
}

#[test]
fn key_poly_in_renames_consistently() {
    let alpha = Composition(vec![0, 2, 0, 1]);
    let vars = [Var::block(1, 1), Var::block(1, 2), Var::block(2, 1), Var::block(2, 2)];
    let renamed = key_poly_in(&alpha, &vars);
    let plain = key_poly(&alpha);
    assert_eq!(renamed, plain.rename_vars(|v| match v {
        Var::Block(1, i) => vars[i as usize - 1],
        other => other,
    }));
    let direct = ms_schur_poly(&mp("(2|1)"), &BlockShape::uniform(2, 2)).unwrap();
    assert_eq!(renamed, direct);
}
