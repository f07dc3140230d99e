//! Multi-symmetric Schur polynomials at finite windows and their stable
//! expansions: Kostka coefficients into the monomial multi-symmetric basis
//! and nonnegative coefficients into products of classical Schur functions.
//!
//! Two independent pipelines compute the Kostka coefficients — coefficient
//! extraction from a key polynomial at the stabilization window, and direct
//! enumeration of multi-alphabet diagram fillings — and the test suites hold
//! them equal.

use crate::classical::monomial_to_schur;
use crate::error::{Error, Result};
use crate::fillings;
use crate::key::key_poly_in;
use crate::order::{down_set, prec_less};
use crate::partition::{enumerate_multipartitions, MultiPartition, Partition};
use crate::poly::{Monomial, SparsePoly, Var};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// Variable counts per block, all at least 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockShape(Vec<usize>);

impl BlockShape {
    pub fn new(sizes: Vec<usize>) -> Result<BlockShape> {
        if sizes.is_empty() || sizes.iter().any(|&n| n == 0) {
            return Err(Error::Precondition("block sizes must all be at least 1".into()));
        }
        Ok(BlockShape(sizes))
    }

    pub fn uniform(r: usize, n: usize) -> BlockShape {
        BlockShape::new(vec![n; r]).expect("uniform shape")
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    /// 1-based block size.
    pub fn size(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn with_size(&self, i: usize, n: usize) -> Result<BlockShape> {
        let mut v = self.0.clone();
        v[i - 1] = n;
        BlockShape::new(v)
    }

    /// The block-major variable list `x_{1,1}..x_{1,n_1}, x_{2,1}, ...`.
    pub fn variables(&self) -> Vec<Var> {
        let mut vars = Vec::new();
        for (i, &n) in self.0.iter().enumerate() {
            for t in 1..=n {
                vars.push(Var::block(i + 1, t));
            }
        }
        vars
    }
}

/// The multi-symmetric Schur polynomial of `lambda` at the given window: the
/// key polynomial of the concatenated padded-reversed composition, with
/// variables assigned block-major. Symmetric within every block.
pub fn ms_schur_poly(lambda: &MultiPartition, shape: &BlockShape) -> Result<SparsePoly> {
    if lambda.r() != shape.r() {
        return Err(Error::ShapeMismatch(format!(
            "index has {} blocks but shape has {}",
            lambda.r(),
            shape.r()
        )));
    }
    let mut comp = crate::partition::Composition(Vec::new());
    for i in 1..=lambda.r() {
        comp = comp.concat(&lambda.block(i).pad_then_rev(shape.size(i))?);
    }
    Ok(key_poly_in(&comp, &shape.variables()))
}

/// The restriction map: substitute the last variable of block `i` by zero.
pub fn xi_restrict(f: &SparsePoly, i: usize, shape: &BlockShape) -> SparsePoly {
    assert!(i >= 1 && i <= shape.r(), "block index out of range");
    f.specialize_zero(Var::block(i, shape.size(i)))
}

/// Which basis a [`MultiSymExpansion`] is written in: monomial
/// multi-symmetric functions, or products of classical Schur functions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    Monomial,
    Schur,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Monomial => write!(f, "monomial"),
            Basis::Schur => write!(f, "schur"),
        }
    }
}

/// A finite integer combination of a multipartition-indexed basis. All terms
/// share the block count and the total degree; zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiSymExpansion {
    basis: Basis,
    r: usize,
    total: u32,
    terms: BTreeMap<MultiPartition, BigInt>,
}

impl MultiSymExpansion {
    pub fn new(
        basis: Basis,
        r: usize,
        total: u32,
        terms: BTreeMap<MultiPartition, BigInt>,
    ) -> Result<MultiSymExpansion> {
        let mut clean = terms;
        clean.retain(|_, c| !c.is_zero());
        for idx in clean.keys() {
            if idx.r() != r {
                return Err(Error::ShapeMismatch(format!(
                    "term {idx} has {} blocks, expected {r}",
                    idx.r()
                )));
            }
            if idx.total_size() != total {
                return Err(Error::NonHomogeneous(format!(
                    "term {idx} has size {}, expected {total}",
                    idx.total_size()
                )));
            }
        }
        Ok(MultiSymExpansion { basis, r, total, terms: clean })
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiPartition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, index: &MultiPartition) -> BigInt {
        self.terms.get(index).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn support(&self) -> BTreeSet<MultiPartition> {
        self.terms.keys().cloned().collect()
    }

    /// Canonical JSON form: terms sorted in the deterministic multipartition
    /// order. Coefficients exceeding i64 (never at desk scale) fall back to
    /// decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(idx, c)| {
                let coeff = match i64::try_from(c) {
                    Ok(v) => serde_json::json!(v),
                    Err(_) => serde_json::json!(c.to_string()),
                };
                serde_json::json!({ "index": idx.to_string(), "coeff": coeff })
            })
            .collect();
        serde_json::json!({ "basis": self.basis.to_string(), "terms": terms })
    }
}

impl fmt::Display for MultiSymExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let tag = match self.basis {
            Basis::Monomial => "m",
            Basis::Schur => "s",
        };
        for (i, (idx, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            if abs.is_one() {
                write!(f, "{tag}{idx}")?;
            } else {
                write!(f, "{abs}*{tag}{idx}")?;
            }
        }
        Ok(())
    }
}

/// The monomial whose coefficient carries `m_{mu}`: block-sorted, largest
/// exponents on the earliest variables of each block.
pub fn leading_monomial(mu: &MultiPartition) -> Monomial {
    Monomial::from_pairs(mu.components().iter().enumerate().flat_map(|(i, p)| {
        p.parts()
            .iter()
            .enumerate()
            .map(move |(t, &e)| (Var::block(i + 1, t + 1), e))
    }))
}

/// The stabilization window for expansions: every block gets `max(1, total)`
/// variables, beyond which the monomial expansion no longer changes.
pub fn stabilization_shape(lambda: &MultiPartition) -> BlockShape {
    BlockShape::uniform(lambda.r(), lambda.total_size().max(1) as usize)
}

fn expansion_cache() -> &'static Mutex<HashMap<(MultiPartition, bool), MultiSymExpansion>> {
    static CACHE: OnceLock<Mutex<HashMap<(MultiPartition, bool), MultiSymExpansion>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Drop memoized expansions (semantically transparent).
pub fn clear_expansion_cache() {
    expansion_cache().lock().unwrap().clear();
}

/// The stable monomial expansion of the multi-symmetric Schur function of
/// `lambda`: Kostka coefficients read off the polynomial at the
/// stabilization window, one block-sorted coefficient per candidate index.
/// The leading coefficient at `lambda` itself is always 1.
pub fn monomial_expansion(lambda: &MultiPartition) -> MultiSymExpansion {
    if let Some(hit) = expansion_cache().lock().unwrap().get(&(lambda.clone(), false)) {
        return hit.clone();
    }
    let total = lambda.total_size();
    let r = lambda.r();
    let shape = stabilization_shape(lambda);
    let poly = ms_schur_poly(lambda, &shape).expect("stabilization window is always wide enough");
    let mut terms = BTreeMap::new();
    for mu in enumerate_multipartitions(total, r) {
        if mu != *lambda && !prec_less(&mu, lambda).expect("equal r") {
            continue;
        }
        let c = poly.coefficient(&leading_monomial(&mu));
        if !c.is_zero() {
            terms.insert(mu, c);
        }
    }
    let expansion = MultiSymExpansion::new(Basis::Monomial, r, total, terms)
        .expect("extraction is homogeneous by construction");
    assert!(
        expansion.coefficient(lambda).is_one(),
        "leading coefficient of {lambda} must be 1"
    );
    expansion_cache()
        .lock()
        .unwrap()
        .insert((lambda.clone(), false), expansion.clone());
    expansion
}

/// Rewrite a monomial-basis expansion over products of classical Schur
/// functions, block by block through the inverse Kostka matrices (a tensor
/// product of the single-alphabet changes of basis). Coefficients may be
/// negative in general.
pub fn monomial_to_schur_expansion(f: &MultiSymExpansion) -> Result<MultiSymExpansion> {
    if f.basis() != Basis::Monomial {
        return Err(Error::Precondition(
            "expected an expansion over the monomial basis".into(),
        ));
    }
    let r = f.r();
    let mut terms: BTreeMap<MultiPartition, BigInt> = BTreeMap::new();
    for (mu, c) in f.terms() {
        let rows: Vec<Vec<(Partition, BigInt)>> =
            (1..=r).map(|i| monomial_to_schur(mu.block(i))).collect();
        let mut partial: Vec<(Vec<Partition>, BigInt)> = vec![(Vec::new(), c.clone())];
        for row in &rows {
            let mut next = Vec::with_capacity(partial.len() * row.len());
            for (prefix, w) in &partial {
                for (p, k) in row {
                    let mut blocks = prefix.clone();
                    blocks.push(p.clone());
                    next.push((blocks, w * k));
                }
            }
            partial = next;
        }
        for (blocks, w) in partial {
            let idx = MultiPartition::new(blocks);
            let entry = terms.entry(idx).or_insert_with(BigInt::zero);
            *entry += w;
        }
    }
    MultiSymExpansion::new(Basis::Schur, r, f.total(), terms)
}

/// The expansion of the multi-symmetric Schur function into products of
/// classical Schur functions. Coefficients must come out as nonnegative
/// integers; anything else is reported as an internal error.
pub fn schur_expansion(lambda: &MultiPartition) -> Result<MultiSymExpansion> {
    if let Some(hit) = expansion_cache().lock().unwrap().get(&(lambda.clone(), true)) {
        return Ok(hit.clone());
    }
    let expansion = monomial_to_schur_expansion(&monomial_expansion(lambda))?;
    for (idx, c) in expansion.terms() {
        if c.is_negative() {
            return Err(Error::Internal(format!(
                "negative Schur coefficient {c} at {idx} in expansion of {lambda}"
            )));
        }
    }
    expansion_cache()
        .lock()
        .unwrap()
        .insert((lambda.clone(), true), expansion.clone());
    Ok(expansion)
}

/// Read the monomial multi-symmetric expansion of an arbitrary block-wise
/// symmetric homogeneous polynomial of degree `total` over `r` blocks by
/// plain coefficient extraction, with no support assumptions. The window
/// must be at least `total` per block for the result to be the stable
/// expansion.
pub fn extract_monomial_expansion(
    f: &SparsePoly,
    total: u32,
    r: usize,
) -> Result<MultiSymExpansion> {
    let mut terms = BTreeMap::new();
    for mu in enumerate_multipartitions(total, r) {
        let c = f.coefficient(&leading_monomial(&mu));
        if !c.is_zero() {
            terms.insert(mu, c);
        }
    }
    MultiSymExpansion::new(Basis::Monomial, r, total, terms)
}

// ---- Multi-alphabet fillings ----

/// A label `value_alphabet` from one of the `r` copies of the positive
/// integers; alphabet-major order, so every label of alphabet 1 precedes
/// every label of alphabet 2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Label {
    pub alphabet: u16,
    pub value: u32,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.value, self.alphabet)
    }
}

/// Augmented-filling entry: a letter, or a basement sentinel `omega_i + j`.
/// Sentinels of alphabet i sit strictly between the letters of alphabet i
/// and the letters of alphabet i+1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Entry(u16, u8, u32);

impl Entry {
    fn letter(l: Label) -> Entry {
        Entry(l.alphabet, 0, l.value)
    }

    fn sentinel(alphabet: u16, offset: u32) -> Entry {
        Entry(alphabet, 1, offset)
    }
}

/// Column heights and basement sentinels of the stable-limit diagram of
/// `lambda`: the concatenation of the reversed blocks, block i's columns
/// seated on `omega_i, omega_i + 1, ...`.
fn stable_diagram(lambda: &MultiPartition) -> (Vec<u32>, Vec<Entry>) {
    let mut heights = Vec::new();
    let mut basement = Vec::new();
    for i in 1..=lambda.r() {
        let block = lambda.block(i);
        for (j, &h) in block.rev().0.iter().enumerate() {
            heights.push(h);
            basement.push(Entry::sentinel(i as u16, j as u32));
        }
    }
    (heights, basement)
}

/// A labeling of the stable-limit diagram of a multipartition, stored per
/// column bottom to top.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiFilling {
    shape: MultiPartition,
    labels: Vec<Vec<Label>>,
}

impl MultiFilling {
    pub fn new(shape: MultiPartition, labels: Vec<Vec<Label>>) -> MultiFilling {
        MultiFilling { shape, labels }
    }

    pub fn shape(&self) -> &MultiPartition {
        &self.shape
    }

    pub fn labels(&self) -> &[Vec<Label>] {
        &self.labels
    }

    /// Occurrence counts per alphabet: entry `v-1` of list `j-1` counts the
    /// label `v_j`. Not necessarily a partition.
    pub fn content(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.shape.r()];
        for l in self.labels.iter().flatten() {
            let row = &mut out[l.alphabet as usize - 1];
            if row.len() < l.value as usize {
                row.resize(l.value as usize, 0);
            }
            row[l.value as usize - 1] += 1;
        }
        out
    }

    /// The weight `x^sigma`: one factor `x_{alphabet,value}` per box.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_pairs(
            self.labels
                .iter()
                .flatten()
                .map(|l| (Var::block(l.alphabet as usize, l.value as usize), 1)),
        )
    }

    /// Re-check every condition from scratch.
    pub fn is_valid(&self) -> bool {
        let (heights, basement) = stable_diagram(&self.shape);
        if self.labels.len() != heights.len() {
            return false;
        }
        let entries: Vec<Vec<Entry>> = self
            .labels
            .iter()
            .map(|col| col.iter().map(|&l| Entry::letter(l)).collect())
            .collect();
        fillings::validate(&heights, &basement, &entries)
    }

    /// Compact one-line rendering, e.g. `[2_1,1_1|3_1]`.
    pub fn compact(&self) -> String {
        let cols: Vec<String> = self
            .labels
            .iter()
            .map(|col| col.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        format!("[{}]", cols.join("|"))
    }
}

fn run_filling_search(
    lambda: &MultiPartition,
    content: Option<&MultiPartition>,
    label_cap: Option<u32>,
    emit: &mut dyn FnMut(&[Vec<Entry>]),
) -> Result<()> {
    let r = lambda.r();
    let mut supply: Vec<(Entry, Option<u32>)> = Vec::new();
    match content {
        Some(mu) => {
            if mu.r() != r {
                return Err(Error::ShapeMismatch(format!(
                    "content has {} blocks but shape has {r}",
                    mu.r()
                )));
            }
            if mu.total_size() != lambda.total_size() {
                return Ok(()); // no fillings: box count differs from content
            }
            for j in 1..=r {
                for (v, &count) in mu.block(j).parts().iter().enumerate() {
                    supply.push((Entry::letter(Label { alphabet: j as u16, value: v as u32 + 1 }), Some(count)));
                }
            }
        }
        None => {
            let cap = label_cap.unwrap_or(lambda.total_size()).max(1);
            for j in 1..=r {
                for v in 1..=cap {
                    supply.push((Entry::letter(Label { alphabet: j as u16, value: v }), None));
                }
            }
        }
    }
    supply.sort_by_key(|&(e, _)| e);
    let (heights, basement) = stable_diagram(lambda);
    fillings::search(&heights, &basement, &mut supply, emit);
    Ok(())
}

/// Enumerate stable-limit fillings of shape `lambda`. With `content` given,
/// exactly the fillings of that content; otherwise all fillings whose label
/// values are bounded by `label_cap` per alphabet (default: the total size,
/// which is the largest value any content of this degree can use).
pub fn enumerate_multifillings(
    lambda: &MultiPartition,
    content: Option<&MultiPartition>,
    label_cap: Option<u32>,
) -> Result<Vec<MultiFilling>> {
    let mut out = Vec::new();
    run_filling_search(lambda, content, label_cap, &mut |entries| {
        let labels: Vec<Vec<Label>> = entries
            .iter()
            .map(|col| {
                col.iter()
                    .map(|e| Label { alphabet: e.0, value: e.2 })
                    .collect()
            })
            .collect();
        out.push(MultiFilling::new(lambda.clone(), labels));
    })?;
    Ok(out)
}

/// The multi-symmetric Kostka coefficient as a filling count: the number of
/// stable-limit fillings of shape `lambda` and content `mu`.
pub fn kostka_coefficient(lambda: &MultiPartition, mu: &MultiPartition) -> Result<u64> {
    let mut count = 0u64;
    run_filling_search(lambda, Some(mu), None, &mut |_| count += 1)?;
    Ok(count)
}

/// True iff the monomial support of the stable expansion equals the full
/// move-closure down-set — the two sides are computed by unrelated pipelines.
pub fn support_equals_downset(lambda: &MultiPartition) -> bool {
    monomial_expansion(lambda).support() == down_set(lambda)
}

/// Express a homogeneous monomial-basis element in coordinates over the
/// multi-symmetric Schur basis, by triangular elimination against the
/// (total) order comparing later blocks first. Reconstruction is exact and
/// the leading index strictly decreases at every step.
pub fn expand_in_ms_schur_basis(
    f: &MultiSymExpansion,
) -> Result<BTreeMap<MultiPartition, BigInt>> {
    if f.basis() != Basis::Monomial {
        return Err(Error::Precondition(
            "expected an expansion over the monomial basis".into(),
        ));
    }
    let mut work: BTreeMap<MultiPartition, BigInt> = f.terms.clone();
    let mut out: BTreeMap<MultiPartition, BigInt> = BTreeMap::new();
    let mut prev: Option<MultiPartition> = None;
    while !work.is_empty() {
        let leader = work
            .keys()
            .cloned()
            .reduce(|a, b| if prec_less(&a, &b).expect("equal r") { b } else { a })
            .expect("nonempty");
        if let Some(p) = &prev {
            assert!(
                prec_less(&leader, p).expect("equal r"),
                "elimination leader must strictly decrease"
            );
        }
        let c = work.get(&leader).cloned().expect("leader present");
        for (idx, k) in monomial_expansion(&leader).terms() {
            let entry = work.entry(idx.clone()).or_insert_with(BigInt::zero);
            *entry -= &c * k;
            if entry.is_zero() {
                work.remove(idx);
            }
        }
        debug_assert!(!work.contains_key(&leader));
        out.insert(leader.clone(), c);
        prev = Some(leader);
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}
