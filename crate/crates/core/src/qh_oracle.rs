//! Small quantum cohomology of `G(r, n)` by the Pieri rule and rim-hook
//! reduction. Serves as an independent genus-zero check on the engine.
//!
//! Conventions: partitions have at most `r` rows, and `sigma_lambda` is the
//! Schur polynomial `s_lambda` in the Chern roots of `S^vee`. So
//! `c_i(S^vee) = e_i = sigma_{1^i}` (add a vertical strip) and the Segre class
//! insertion `h_i = sigma_i` adds a horizontal strip. A shape that leaves the
//! `r x (n - r)` box is reduced by stripping `n`-rim hooks: on beta numbers
//! `beta_j = lambda_j + r - 1 - j` that means lowering a beta number by `n`,
//! which contributes `(-1)^(r-1) q` together with the sign `(-1)^(height-1)`
//! of moving it back into order. Colliding beta numbers kill the term.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::symfunc::{InsertionKind, Monomial};

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Option<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Some(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The full `r x (n - r)` rectangle, the point class.
    pub fn full_box(r: usize, n: usize) -> Self {
        Partition::new(vec![n - r; r]).expect("rectangle")
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn fits(&self, r: usize, n: usize) -> bool {
        self.0.len() <= r && self.0.first().is_none_or(|&p| p <= n - r)
    }

    fn padded(&self, r: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(r, 0);
        v
    }
}

/// A class `sum c * q^k * sigma_lambda` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QClass {
    terms: BTreeMap<(Partition, u32), BigInt>,
}

impl QClass {
    pub fn unit() -> Self {
        let mut c = QClass::default();
        c.terms.insert((Partition::empty(), 0), BigInt::one());
        c
    }

    pub fn coefficient(&self, lambda: &Partition, q_power: u32) -> BigInt {
        self.terms
            .get(&(lambda.clone(), q_power))
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u32, &BigInt)> {
        self.terms.iter().map(|((p, k), c)| (p, *k, c))
    }

    fn add(&mut self, lambda: Partition, q_power: u32, c: BigInt) {
        let key = (lambda, q_power);
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Drops every term with a positive power of `q`.
    pub fn classical_part(&self) -> QClass {
        QClass {
            terms: self
                .terms
                .iter()
                .filter(|((_, k), _)| *k == 0)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

/// Shapes obtained from `lambda` by adding a vertical strip of `size` boxes,
/// keeping at most `r` rows.
fn vertical_strips(lambda: &[usize], size: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << r) {
        if mask.count_ones() as usize != size {
            continue;
        }
        let nu: Vec<usize> = (0..r)
            .map(|j| lambda[j] + (mask >> j & 1) as usize)
            .collect();
        if nu.windows(2).all(|w| w[0] >= w[1]) {
            out.push(nu);
        }
    }
    out
}

/// Shapes obtained from `lambda` by adding a horizontal strip of `size` boxes.
fn horizontal_strips(lambda: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn go(
        lambda: &[usize],
        row: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if row == lambda.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = if row == 0 {
            left
        } else {
            (lambda[row - 1] - lambda[row]).min(left)
        };
        for add in 0..=cap {
            cur.push(lambda[row] + add);
            go(lambda, row + 1, left - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(
        lambda,
        0,
        size,
        &mut Vec::with_capacity(lambda.len()),
        &mut out,
    );
    out
}

/// Brings a shape with at most `r` rows into the `r x (n - r)` box.
/// Returns `(sign, shape, q-power)`, or `None` if the term vanishes.
pub fn rim_hook_reduce(nu: &[usize], r: usize, n: usize) -> Option<(i64, Partition, u32)> {
    let mut beta: Vec<usize> = (0..r)
        .map(|j| nu.get(j).copied().unwrap_or(0) + r - 1 - j)
        .collect();
    let mut q_power = 0u32;
    for b in beta.iter_mut() {
        while *b >= n {
            *b -= n;
            q_power += 1;
        }
    }
    // sort decreasing, tracking the permutation sign
    let mut sign = 1i64;
    for i in 0..r {
        for j in 0..r - 1 - i {
            if beta[j] < beta[j + 1] {
                beta.swap(j, j + 1);
                sign = -sign;
            } else if beta[j] == beta[j + 1] {
                return None;
            }
        }
    }
    if beta.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    if r.is_multiple_of(2) && q_power % 2 == 1 {
        sign = -sign;
    }
    let parts = (0..r).map(|j| beta[j] - (r - 1 - j)).collect();
    Some((
        sign,
        Partition::new(parts).expect("sorted beta numbers"),
        q_power,
    ))
}

/// Multiplies by the special class of one insertion.
pub fn pieri_multiply(class: &QClass, kind: InsertionKind, r: usize, n: usize) -> Result<QClass> {
    kind.check(r)?;
    let mut out = QClass::default();
    for ((lambda, k), c) in &class.terms {
        let base = lambda.padded(r);
        let shapes = match kind {
            InsertionKind::Chern(i) => vertical_strips(&base, i as usize, r),
            InsertionKind::Segre(i) => horizontal_strips(&base, i as usize),
        };
        for nu in shapes {
            if let Some((sign, mu, extra)) = rim_hook_reduce(&nu, r, n) {
                out.add(mu, k + extra, c * sign);
            }
        }
    }
    Ok(out)
}

/// Genus-zero count: the coefficient of `q^d sigma_box` in the quantum
/// product of all insertions.
pub fn fixed_domain_count_g0(r: usize, n: usize, d: u32, insertions: &Monomial) -> Result<BigInt> {
    if r == 0 || r > n {
        return Err(Error::InvalidSpec(format!(
            "need 1 <= r <= n, got r = {r}, n = {n}"
        )));
    }
    insertions.check(r)?;
    let expected = (d as usize * n + r * (n - r)) as i64;
    let found = insertions.weight();
    if found != expected {
        return Err(Error::DimensionMismatch { expected, found });
    }
    let mut class = QClass::unit();
    for (kind, exp) in insertions.factors() {
        for _ in 0..exp {
            class = pieri_multiply(&class, kind, r, n)?;
        }
    }
    Ok(class.coefficient(&Partition::full_box(r, n), d))
}
