//! Elementary and complete homogeneous symmetric polynomials evaluated at
//! tuples of cyclotomic values, plus the insertion classes that select them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A special class inserted at a point of the curve.
///
/// `Chern(i)` is `c_i` of the dual universal subsheaf restricted to the point
/// and evaluates as `e_i`; `Segre(i)` is the Segre class of the universal
/// subsheaf itself and evaluates as `h_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InsertionKind {
    Chern(u32),
    Segre(u32),
}

impl InsertionKind {
    pub fn index(self) -> u32 {
        match self {
            InsertionKind::Chern(i) | InsertionKind::Segre(i) => i,
        }
    }

    /// Validates the class for a rank `r` subsheaf.
    pub fn check(self, rank: usize) -> Result<()> {
        match self {
            InsertionKind::Chern(i) if i == 0 || i as usize > rank => Err(Error::InvalidInsertion(
                format!("a{i} needs 1 <= {i} <= r = {rank}"),
            )),
            InsertionKind::Segre(0) => Err(Error::InvalidInsertion("s0 is not a class".into())),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for InsertionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InsertionKind::Chern(i) => write!(f, "a{i}"),
            InsertionKind::Segre(i) => write!(f, "s{i}"),
        }
    }
}

impl FromStr for InsertionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (tag, idx) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let i: u32 = idx
            .parse()
            .map_err(|_| Error::Parse(format!("bad insertion index in {s:?}")))?;
        match tag {
            "a" => Ok(InsertionKind::Chern(i)),
            "s" => Ok(InsertionKind::Segre(i)),
            _ => Err(Error::Parse(format!(
                "insertion {s:?} must start with 'a' or 's'"
            ))),
        }
    }
}

/// A multiset of insertions, stored as exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: BTreeMap<InsertionKind, u32>,
}

impl Monomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn chern_power(i: u32, exp: u32) -> Self {
        let mut m = Self::new();
        m.push(InsertionKind::Chern(i), exp);
        m
    }

    pub fn push(&mut self, kind: InsertionKind, exp: u32) {
        if exp > 0 {
            *self.factors.entry(kind).or_insert(0) += exp;
        }
    }

    pub fn with(mut self, kind: InsertionKind, exp: u32) -> Self {
        self.push(kind, exp);
        self
    }

    pub fn factors(&self) -> impl Iterator<Item = (InsertionKind, u32)> + '_ {
        self.factors.iter().map(|(&k, &e)| (k, e))
    }

    pub fn exponent(&self, kind: InsertionKind) -> u32 {
        self.factors.get(&kind).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total cohomological degree `sum i_k`.
    pub fn weight(&self) -> i64 {
        self.factors
            .iter()
            .map(|(k, &e)| k.index() as i64 * e as i64)
            .sum()
    }

    pub fn check(&self, rank: usize) -> Result<()> {
        self.factors.keys().try_for_each(|k| k.check(rank))
    }

    pub fn max_index(&self, chern: bool) -> usize {
        self.factors
            .keys()
            .filter(|k| matches!(k, InsertionKind::Chern(_)) == chern)
            .map(|k| k.index() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Parses `a1:4,a2:1,s3:2`. An empty string is the empty monomial.
    pub fn parse(s: &str) -> Result<Self> {
        let mut m = Self::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (kind, exp) = match item.split_once(':') {
                Some((k, e)) => (
                    k,
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {item:?}")))?,
                ),
                None => (item, 1),
            };
            m.push(kind.parse()?, exp);
        }
        Ok(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors().map(|(k, e)| format!("{k}:{e}")).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromIterator<InsertionKind> for Monomial {
    fn from_iter<I: IntoIterator<Item = InsertionKind>>(iter: I) -> Self {
        let mut m = Monomial::new();
        for k in iter {
            m.push(k, 1);
        }
        m
    }
}

/// `e_i` of the tuple; zero when `i` exceeds its length.
pub fn elementary<T: Scalar>(i: usize, tuple: &[Cyc<T>], order: usize) -> Result<Cyc<T>> {
    Ok(elementary_series(i, tuple, order)?.swap_remove(i))
}

/// `e_0, ..., e_max` of the tuple, by expanding `prod (1 + t z_j)` mod `t^(max+1)`.
pub fn elementary_series<T: Scalar>(
    max: usize,
    tuple: &[Cyc<T>],
    order: usize,
) -> Result<Vec<Cyc<T>>> {
    let mut series = vec![Cyc::zero(order)?; max + 1];
    series[0] = Cyc::one(order)?;
    for (j, z) in tuple.iter().enumerate() {
        for k in (1..=max.min(j + 1)).rev() {
            let term = series[k - 1].checked_mul(z)?;
            series[k].add_assign_ref(&term);
        }
    }
    Ok(series)
}

pub fn complete_homogeneous<T: Scalar>(i: usize, tuple: &[Cyc<T>], order: usize) -> Result<Cyc<T>> {
    Ok(complete_series(i, tuple, order)?.swap_remove(i))
}

/// `h_0, ..., h_max` of the tuple, by expanding `prod 1/(1 - t z_j)` mod `t^(max+1)`.
pub fn complete_series<T: Scalar>(
    max: usize,
    tuple: &[Cyc<T>],
    order: usize,
) -> Result<Vec<Cyc<T>>> {
    let mut series = vec![Cyc::zero(order)?; max + 1];
    series[0] = Cyc::one(order)?;
    for z in tuple {
        // multiply by 1/(1 - t z): h'_k = h_k + z h'_{k-1}
        for k in 1..=max {
            let term = series[k - 1].checked_mul(z)?;
            series[k].add_assign_ref(&term);
        }
    }
    Ok(series)
}

/// [`elementary_series`] for the tuple `(w^a)_{a in exponents}`, using cyclic
/// shifts in place of general products.
pub fn elementary_series_at_roots<T: Scalar>(
    max: usize,
    exponents: &[usize],
    order: usize,
) -> Vec<Cyc<T>> {
    let mut series = vec![Cyc::zero(order).expect("order is positive"); max + 1];
    series[0] = Cyc::one(order).expect("order is positive");
    for (j, &a) in exponents.iter().enumerate() {
        for k in (1..=max.min(j + 1)).rev() {
            let term = series[k - 1].mul_root(a as i64);
            series[k].add_assign_ref(&term);
        }
    }
    series
}

/// [`complete_series`] for the tuple `(w^a)_{a in exponents}`.
pub fn complete_series_at_roots<T: Scalar>(
    max: usize,
    exponents: &[usize],
    order: usize,
) -> Vec<Cyc<T>> {
    let mut series = vec![Cyc::zero(order).expect("order is positive"); max + 1];
    series[0] = Cyc::one(order).expect("order is positive");
    for &a in exponents {
        for k in 1..=max {
            let term = series[k - 1].mul_root(a as i64);
            series[k].add_assign_ref(&term);
        }
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{CycQ, Rational};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn roots(order: usize, exps: &[usize]) -> Vec<CycQ> {
        exps.iter()
            .map(|&a| CycQ::root_of_unity(order, a as i64).unwrap())
            .collect()
    }

    fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == r)
            .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
            .collect()
    }

    /// `e_i` by summing products over all `i`-subsets of positions.
    fn elementary_brute(i: usize, tuple: &[CycQ], order: usize) -> CycQ {
        let mut acc = CycQ::zero(order).unwrap();
        for s in subsets(tuple.len(), i) {
            let mut p = CycQ::one(order).unwrap();
            for j in s {
                p = &p * &tuple[j];
            }
            acc = &acc + &p;
        }
        acc
    }

    #[test]
    fn elementary_basics() {
        let t = roots(4, &[1, 3]);
        assert_eq!(elementary(0, &t, 4).unwrap(), CycQ::one(4).unwrap());
        assert_eq!(elementary(2, &t, 4).unwrap(), CycQ::one(4).unwrap());
        assert!(elementary(3, &t, 4).unwrap().is_zero());
        assert_eq!(
            complete_homogeneous(0, &t, 4).unwrap(),
            CycQ::one(4).unwrap()
        );
        assert_eq!(
            complete_homogeneous(1, &t, 4).unwrap(),
            elementary(1, &t, 4).unwrap()
        );
    }

    #[test]
    fn elementary_matches_brute_force() {
        for n in 1..=7 {
            for r in 0..=n {
                for s in subsets(n, r) {
                    let t = roots(n, &s);
                    let fast = elementary_series_at_roots::<Rational>(r + 1, &s, n);
                    for i in 0..=r + 1 {
                        let brute = elementary_brute(i, &t, n);
                        assert_eq!(elementary(i, &t, n).unwrap(), brute);
                        assert_eq!(fast[i], brute);
                    }
                }
            }
        }
    }

    #[test]
    fn complete_series_at_roots_matches_general() {
        for n in 2..=6 {
            for s in subsets(n, 3.min(n)) {
                let t = roots(n, &s);
                assert_eq!(
                    complete_series_at_roots::<Rational>(7, &s, n),
                    complete_series(7, &t, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn h2_of_pair_by_hand() {
        // h_2(x, y) = x^2 + xy + y^2 at (w, w^2) in order 5.
        let t = roots(5, &[1, 2]);
        let mut expect = vec![Rational::from_i64(0); 5];
        expect[2] = Rational::from_i64(1);
        expect[3] = Rational::from_i64(1);
        expect[4] = Rational::from_i64(1);
        assert_eq!(
            complete_homogeneous(2, &t, 5).unwrap().coeffs(),
            &expect[..]
        );
    }

    /// `e_i(z_I) = h_i(-z_{I^c})` for `I` ranging over `r`-subsets of all
    /// `n`-th roots of unity, `r < n`. (At `r = n` the complement is empty and
    /// `e_n = (-1)^(n-1)` has no counterpart.)
    #[test]
    fn complement_duality_identity() {
        for n in 1..=8usize {
            for r in 0..n {
                for s in subsets(n, r) {
                    let comp: Vec<usize> = (0..n).filter(|a| !s.contains(a)).collect();
                    let neg: Vec<CycQ> = roots(n, &comp).iter().map(|z| -z).collect();
                    let e = elementary_series_at_roots::<Rational>(r, &s, n);
                    let h = complete_series(r, &neg, n).unwrap();
                    for i in 0..=r {
                        assert!(e[i].eq_mod_phi(&h[i]), "n={n} I={s:?} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn duality_on_sixth_roots_pairs() {
        for s in subsets(6, 2) {
            let comp: Vec<usize> = (0..6).filter(|a| !s.contains(a)).collect();
            let neg: Vec<CycQ> = roots(6, &comp).iter().map(|z| -z).collect();
            for i in 0..=2 {
                let e = elementary(i, &roots(6, &s), 6).unwrap();
                let h = complete_homogeneous(i, &neg, 6).unwrap();
                assert!(e.eq_mod_phi(&h));
            }
        }
    }

    #[test]
    fn insertion_parsing() {
        let m = Monomial::parse("a1:4, a2:1,s3").unwrap();
        assert_eq!(m.exponent(InsertionKind::Chern(1)), 4);
        assert_eq!(m.exponent(InsertionKind::Segre(3)), 1);
        assert_eq!(m.weight(), 4 + 2 + 3);
        assert_eq!(m.to_string(), "a1:4,a2:1,s3:1");
        assert!(Monomial::parse("").unwrap().is_empty());
        assert!(Monomial::parse("b1:2").is_err());
        assert!(Monomial::parse("a1:x").is_err());
    }

    #[test]
    fn insertion_bounds() {
        assert!(InsertionKind::Chern(2).check(2).is_ok());
        assert!(InsertionKind::Chern(3).check(2).is_err());
        assert!(InsertionKind::Chern(0).check(2).is_err());
        assert!(InsertionKind::Segre(7).check(2).is_ok());
        assert!(InsertionKind::Segre(0).check(2).is_err());
    }

    proptest! {
        #[test]
        fn symmetric_under_permutation(n in 2usize..=9, len in 0usize..=6, seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let exps: Vec<usize> = (0..len).map(|k| (k * 7 + seed as usize) % n).collect();
            let mut shuffled = exps.clone();
            shuffled.shuffle(&mut rng);
            prop_assert_eq!(
                elementary_series_at_roots::<Rational>(len, &exps, n),
                elementary_series_at_roots::<Rational>(len, &shuffled, n)
            );
            prop_assert_eq!(
                complete_series_at_roots::<Rational>(len + 2, &exps, n),
                complete_series_at_roots::<Rational>(len + 2, &shuffled, n)
            );
        }

        #[test]
        fn generating_functions_are_inverse(n in 1usize..=9, exps in proptest::collection::vec(0usize..9, 0..6)) {
            // sum_i e_i t^i * sum_j h_j (-t)^j = 1 up to the truncation order.
            let exps: Vec<usize> = exps.into_iter().map(|a| a % n).collect();
            let max = exps.len() + 2;
            let e = elementary_series_at_roots::<Rational>(max, &exps, n);
            let h = complete_series_at_roots::<Rational>(max, &exps, n);
            for k in 0..=max {
                let mut acc = CycQ::zero(n).unwrap();
                for i in 0..=k {
                    let term = &e[i] * &h[k - i];
                    acc = if (k - i) % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                let expect = if k == 0 { CycQ::one(n).unwrap() } else { CycQ::zero(n).unwrap() };
                prop_assert_eq!(acc, expect);
            }
        }
    }
}
