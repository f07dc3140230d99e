//! Shared helpers for the integration suites.
#![allow(dead_code)]

use multisym::{Composition, Monomial, MultiPartition, Partition, SparsePoly, Var};

pub fn mp(s: &str) -> MultiPartition {
    multisym::parse_multipartition(s).unwrap()
}

pub fn comp(s: &str) -> Composition {
    multisym::parse_composition(s).unwrap()
}

pub fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Parse a monomial-list expression in the canonical variables `x1, x2, ...`,
/// e.g. `x1^2*x2 + 2*x1*x2*x3 - x3^2`.
pub fn poly(src: &str) -> SparsePoly {
    let src = src.replace(' ', "").replace('-', "+-");
    let mut acc = SparsePoly::zero();
    for term in src.split('+').filter(|t| !t.is_empty()) {
        let mut coeff: i64 = 1;
        let mut mono = Monomial::one();
        for factor in term.split('*') {
            if let Some(rest) = factor.strip_prefix('x') {
                let (idx, exp) = match rest.split_once('^') {
                    Some((i, e)) => (i.parse::<usize>().unwrap(), e.parse::<u32>().unwrap()),
                    None => (rest.parse::<usize>().unwrap(), 1),
                };
                mono = mono.mul(&Monomial::var(Var::x(idx), exp));
            } else if factor == "-1" {
                coeff = -coeff;
            } else {
                coeff *= factor.parse::<i64>().unwrap();
            }
        }
        acc = acc.add(&SparsePoly::monomial(mono, coeff));
    }
    acc
}

/// All compositions with the given length and entry sum at most `max_size`.
pub fn compositions_up_to(len: usize, max_size: u32) -> Vec<Composition> {
    fn go(len: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if prefix.len() == len {
            out.push(Composition(prefix.clone()));
            return;
        }
        for e in 0..=budget {
            prefix.push(e);
            go(len, budget - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max_size, &mut Vec::new(), &mut out);
    out
}
