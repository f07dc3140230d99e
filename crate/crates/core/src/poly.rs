//! Exact sparse multivariate polynomial arithmetic over the integers.
//!
//! Variables are block-structured (`x_{i,j}` grouped into alphabets) plus one
//! distinguished auxiliary variable `z` used for series coefficient
//! extraction. Coefficients are arbitrary-precision integers. Every value is
//! canonical: no zero coefficients and no zero exponents are ever stored, so
//! structural equality is polynomial equality.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A variable: either `x_{block,index}` with both coordinates 1-based, or the
/// auxiliary variable `z`.
///
/// The derived order is block-major with `z` sorting after every block
/// variable; operations that need `z` adjacent to a particular block take the
/// variable sequence explicitly.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    Block(u16, u16),
    Z,
}

impl Var {
    pub fn block(block: usize, index: usize) -> Var {
        debug_assert!(block >= 1 && index >= 1);
        Var::Block(block as u16, index as u16)
    }

    /// Shorthand for the single-alphabet variable `x_i`.
    pub fn x(index: usize) -> Var {
        Var::block(1, index)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Block(b, i) => write!(f, "x{b}_{i}"),
            Var::Z => write!(f, "z"),
        }
    }
}

/// A monomial: sorted association from variables to positive exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, exp: u32) -> Monomial {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, exp)])
        }
    }

    /// Build from arbitrary (variable, exponent) pairs; merges duplicates and
    /// drops zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Monomial {
        let mut m: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *m.entry(v).or_insert(0) += e;
            }
        }
        Monomial(m.into_iter().collect())
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va < vb {
                        out.push((va, ea));
                        a.next();
                    } else if vb < va {
                        out.push((vb, eb));
                        b.next();
                    } else {
                        out.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                }
                (Some(_), None) => {
                    out.extend(a.by_ref().copied());
                    break;
                }
                (None, Some(_)) => {
                    out.extend(b.by_ref().copied());
                    break;
                }
                (None, None) => break,
            }
        }
        Monomial(out)
    }

    /// Replace the exponent of `v` (0 removes it).
    pub fn with_exponent(&self, v: Var, exp: u32) -> Monomial {
        let mut out: Vec<(Var, u32)> = self.0.iter().copied().filter(|&(w, _)| w != v).collect();
        if exp > 0 {
            let pos = out.partition_point(|&(w, _)| w < v);
            out.insert(pos, (v, exp));
        }
        Monomial(out)
    }
}

/// Exact sparse polynomial with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

fn insert_add(terms: &mut BTreeMap<Monomial, BigInt>, mono: Monomial, coeff: BigInt) {
    if coeff.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(mono) {
        Entry::Vacant(e) => {
            e.insert(coeff);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl SparsePoly {
    pub fn zero() -> SparsePoly {
        SparsePoly::default()
    }

    pub fn one() -> SparsePoly {
        SparsePoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> SparsePoly {
        let c = c.into();
        let mut terms = BTreeMap::new();
        insert_add(&mut terms, Monomial::one(), c);
        SparsePoly { terms }
    }

    pub fn var(v: Var) -> SparsePoly {
        SparsePoly::monomial(Monomial::var(v, 1), BigInt::one())
    }

    pub fn monomial(mono: Monomial, coeff: impl Into<BigInt>) -> SparsePoly {
        let mut terms = BTreeMap::new();
        insert_add(&mut terms, mono, coeff.into());
        SparsePoly { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, BigInt)>) -> SparsePoly {
        let mut terms = BTreeMap::new();
        for (m, c) in iter {
            insert_add(&mut terms, m, c);
        }
        SparsePoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// True when every term has the same total degree (zero counts as
    /// homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|m| m.total_degree());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            insert_add(&mut terms, m.clone(), c.clone());
        }
        SparsePoly { terms }
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            insert_add(&mut terms, m.clone(), -c);
        }
        SparsePoly { terms }
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                insert_add(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        SparsePoly { terms }
    }

    pub fn scalar_mul(&self, c: impl Into<BigInt>) -> SparsePoly {
        let c = c.into();
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * &c)).collect(),
        }
    }

    /// Apply a variable substitution `v -> f(v)`. The map need not be
    /// order-preserving; exponents of colliding images are merged.
    pub fn rename_vars(&self, f: impl Fn(Var) -> Var) -> SparsePoly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mono = Monomial::from_pairs(m.iter().map(|(v, e)| (f(v), e)));
            insert_add(&mut terms, mono, c.clone());
        }
        SparsePoly { terms }
    }

    pub fn swap_vars(&self, x: Var, y: Var) -> SparsePoly {
        self.rename_vars(|v| {
            if v == x {
                y
            } else if v == y {
                x
            } else {
                v
            }
        })
    }

    /// Substitute `v := 0`, dropping every term with a positive exponent in `v`.
    pub fn specialize_zero(&self, v: Var) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Isobaric divided difference `(x f - y swap(f)) / (x - y)`.
    ///
    /// Evaluated per monomial: for `x^a y^b m` with `m` free of `x, y` the
    /// quotient is `sum_{k=b}^{a} x^k y^{a+b-k} m` when `a >= b` and
    /// `-sum_{k=a+1}^{b-1} x^k y^{a+b-k} m` when `a < b` (empty when
    /// `b = a+1`), so no polynomial division is ever performed.
    pub fn divided_difference(&self, x: Var, y: Var) -> SparsePoly {
        assert_ne!(x, y, "divided difference needs two distinct variables");
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let a = m.exponent(x);
            let b = m.exponent(y);
            let rest = m.with_exponent(x, 0).with_exponent(y, 0);
            if a >= b {
                for k in b..=a {
                    let mono = rest.with_exponent(x, k).with_exponent(y, a + b - k);
                    insert_add(&mut terms, mono, c.clone());
                }
            } else {
                for k in (a + 1)..b {
                    let mono = rest.with_exponent(x, k).with_exponent(y, a + b - k);
                    insert_add(&mut terms, mono, -c);
                }
            }
        }
        SparsePoly { terms }
    }

    /// Full symmetrization over `vars`, computed as the longest-word product
    /// of isobaric divided differences. Stays in integer arithmetic.
    pub fn weyl_symmetrize(&self, vars: &[Var]) -> SparsePoly {
        let n = vars.len();
        assert!(n >= 1, "weyl_symmetrize needs at least one variable");
        for i in 0..n {
            for j in i + 1..n {
                assert_ne!(vars[i], vars[j], "weyl_symmetrize variables must be distinct");
            }
        }
        let mut f = self.clone();
        for k in (1..n).rev() {
            for j in k..n {
                f = f.divided_difference(vars[j - 1], vars[j]);
            }
        }
        f
    }

    /// Coefficient of `z^a`, as a polynomial free of `z`.
    pub fn coeff_in_aux(&self, a: u32) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(Var::Z) == a)
                .map(|(m, c)| (m.with_exponent(Var::Z, 0), c.clone()))
                .collect(),
        }
    }

    /// True iff the polynomial is invariant under every transposition of
    /// `vars` (checked on adjacent transpositions, which generate).
    pub fn is_symmetric_in(&self, vars: &[Var]) -> bool {
        let mut vs: Vec<Var> = vars.to_vec();
        vs.sort();
        vs.dedup();
        vs.windows(2).all(|w| self.swap_vars(w[0], w[1]) == *self)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mut body = String::new();
            for (v, e) in m.iter() {
                if !body.is_empty() {
                    body.push('*');
                }
                body.push_str(&v.to_string());
                if e > 1 {
                    body.push_str(&format!("^{e}"));
                }
            }
            if i > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            if body.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{abs}*{body}")?;
            }
        }
        Ok(())
    }
}
