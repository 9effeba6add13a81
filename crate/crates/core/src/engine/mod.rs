//! The finite sum over `r`-subsets of `n`-th roots of unity that evaluates top
//! intersections of `a`-classes on the Quot scheme of a genus `g` curve.
//!
//! For a subset `I` the summand is
//!
//! ```text
//!   prod_k f_k(z_I) * J(z_I)^(g-1),    J(z_I) = prod_{i in I, k not in I} (z_i - z_k)
//! ```
//!
//! with `f_k = e_{i_k}` for Chern insertions and `h_{i_k}` for Segre ones, and
//! the total carries the sign `(-1)^(d(r-1))`. Writing `J` as a product over
//! the complement avoids every division for `g >= 1`. At genus zero each of
//! the `r(n - r)` differences has inverse `1/n` times an element of `Z[w]`,
//! so the summands are scaled by `n^(r(n-r))` and the division happens once,
//! after the sum. Exact sums therefore run over [`BigInt`].

mod subset;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Pow;
use rayon::prelude::*;

use crate::count::{Advisory, Enumerativity, VirtualCount};
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::symfunc::{
    complete_series_at_roots, elementary_series_at_roots, InsertionKind, Monomial,
};
use crate::Rational;

pub use subset::{binomial, colex_block, SubsetIndex};

/// Quot scheme data: rank `r` subsheaves of `O^n` of degree `-d` on a genus
/// `g` curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrassmannSpec {
    pub r: usize,
    pub n: usize,
    pub g: u32,
    pub d: u32,
}

impl GrassmannSpec {
    pub fn new(r: usize, n: usize, g: u32, d: u32) -> Result<Self> {
        if n == 0 || r == 0 || r > n {
            return Err(Error::InvalidSpec(format!(
                "need 1 <= r <= n, got r = {r}, n = {n}"
            )));
        }
        Ok(GrassmannSpec { r, n, g, d })
    }

    /// `e = d n + r (n - r) (1 - g)`; negative values are possible.
    pub fn virtual_dim(&self) -> i64 {
        let (r, n) = (self.r as i64, self.n as i64);
        self.d as i64 * n + r * (n - r) * (1 - self.g as i64)
    }

    pub fn subset_count(&self) -> u128 {
        binomial(self.n as u64, self.r as u64)
    }

    /// The same problem on `G(n - r, n)`.
    pub fn dual(&self) -> Result<Self> {
        GrassmannSpec::new(self.n - self.r, self.n, self.g, self.d)
    }

    /// Rejects insertions of the wrong total degree or out of range.
    pub fn check_monomial(&self, monomial: &Monomial) -> Result<()> {
        monomial.check(self.r)?;
        let expected = self.virtual_dim();
        let found = monomial.weight();
        if expected < 0 || found != expected {
            return Err(Error::DimensionMismatch { expected, found });
        }
        Ok(())
    }

    fn sign(&self) -> i64 {
        if (self.d as usize * (self.r - 1)).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// `J(z_I)` computed as `prod_{i in I, k not in I} (z_i - z_k)`.
pub fn j_factor<T: Scalar>(spec: &GrassmannSpec, subset: &SubsetIndex) -> Cyc<T> {
    let n = spec.n;
    let comp = subset.complement(n);
    let mut acc = Cyc::one(n).expect("order is positive");
    for &a in subset.as_slice() {
        for &b in comp.as_slice() {
            acc = acc.mul_root_difference(a as i64, b as i64);
        }
    }
    acc
}

/// `J(z_I)` from its defining expression
/// `prod_i n z_i^(n-1) * prod_{i != j in I} (z_i - z_j)^(-1)`, with the
/// inverses taken modulo `Phi_n`. Only useful for checking [`j_factor`].
pub fn j_factor_from_definition<T: Scalar>(
    spec: &GrassmannSpec,
    subset: &SubsetIndex,
) -> Result<Cyc<T>> {
    let n = spec.n;
    let idx = subset.as_slice();
    let mut acc = Cyc::from_scalar(n, T::from_i64((n as i64).pow(idx.len() as u32)))?;
    for &a in idx {
        acc = acc.mul_root((a * (n - 1)) as i64);
    }
    for &a in idx {
        for &b in idx.iter().filter(|&&b| b != a) {
            acc = acc.checked_mul(&difference_inverse(n, a, b)?)?;
        }
    }
    Ok(acc)
}

/// `(w^a - w^b)^(-1) = -w^(-b) (1 - w^(a-b))^(-1)`.
fn difference_inverse<T: Scalar>(n: usize, a: usize, b: usize) -> Result<Cyc<T>> {
    let inv = Cyc::inv_one_minus_root(n, a as i64 - b as i64)?;
    Ok(-&inv.mul_root(-(b as i64)))
}

/// `J(z_I)^(-1)` as the product of the inverses of its `r (n - r)` factors.
pub fn j_inverse<T: Scalar>(spec: &GrassmannSpec, subset: &SubsetIndex) -> Result<Cyc<T>> {
    let n = spec.n;
    let comp = subset.complement(n);
    let mut acc = Cyc::one(n)?;
    for &a in subset.as_slice() {
        for &b in comp.as_slice() {
            acc = acc.checked_mul(&difference_inverse(n, a, b)?)?;
        }
    }
    Ok(acc)
}

/// How the subset sum is traversed. Every choice yields the same value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Serial,
    /// Contiguous colex blocks, one per worker, reduced on a dedicated pool.
    Parallel {
        workers: usize,
    },
    /// One representative per rotation orbit, weighted by orbit size.
    OrbitReduced,
}

/// A prepared summand evaluator for one `(spec, monomial)` pair.
pub struct Summand<T> {
    spec: GrassmannSpec,
    chern: Vec<(usize, u64)>,
    segre: Vec<(usize, u64)>,
    chern_max: usize,
    segre_max: usize,
    /// `inverse_powers[m][c] = (n (1 - w^m)^(-1))^c`, only at genus zero.
    inverse_powers: Vec<Vec<Cyc<T>>>,
}

impl<T: Scalar> Summand<T> {
    pub fn new(spec: &GrassmannSpec, monomial: &Monomial) -> Result<Self> {
        spec.check_monomial(monomial)?;
        let mut chern = Vec::new();
        let mut segre = Vec::new();
        for (kind, exp) in monomial.factors() {
            match kind {
                InsertionKind::Chern(i) => chern.push((i as usize, exp as u64)),
                InsertionKind::Segre(i) => segre.push((i as usize, exp as u64)),
            }
        }
        let n = spec.n;
        let mut inverse_powers = Vec::new();
        if spec.g == 0 {
            // a fixed difference class m occurs at most min(r, n - r) times
            let max_mult = spec.r.min(n - spec.r);
            inverse_powers.push(Vec::new());
            for m in 1..n {
                let inv = Cyc::scaled_inv_one_minus_root(n, m as i64)?;
                let mut row = vec![Cyc::one(n)?];
                for c in 0..max_mult {
                    let next = &row[c] * &inv;
                    row.push(next);
                }
                inverse_powers.push(row);
            }
        }
        Ok(Summand {
            spec: *spec,
            chern_max: monomial.max_index(true),
            segre_max: monomial.max_index(false),
            chern,
            segre,
            inverse_powers,
        })
    }

    /// The factor [`Summand::eval`] and [`Summand::total`] carry:
    /// `n^(r(n-r))` at genus zero, 1 otherwise.
    pub fn scale(&self) -> BigInt {
        if self.spec.g == 0 {
            Pow::pow(
                BigInt::from(self.spec.n),
                (self.spec.r * (self.spec.n - self.spec.r)) as u64,
            )
        } else {
            BigInt::from(1)
        }
    }

    /// The summand for `subset` times [`Summand::scale`], without the global sign.
    pub fn eval(&self, subset: &SubsetIndex) -> Cyc<T> {
        let n = self.spec.n;
        let idx = subset.as_slice();
        let mut acc = match self.spec.g {
            0 => self.j_inverse_scaled(subset),
            1 => Cyc::one(n).expect("order is positive"),
            g => j_factor::<T>(&self.spec, subset).pow(g as u64 - 1),
        };
        if self.chern_max > 0 {
            let e = elementary_series_at_roots::<T>(self.chern_max, idx, n);
            for &(i, exp) in &self.chern {
                acc = &acc * &e[i].pow(exp);
            }
        }
        if self.segre_max > 0 {
            let h = complete_series_at_roots::<T>(self.segre_max, idx, n);
            for &(i, exp) in &self.segre {
                acc = &acc * &h[i].pow(exp);
            }
        }
        acc
    }

    /// `n^N J^(-1)`, `N = r(n - r)`, with the factor inverses grouped by
    /// difference class:
    /// `prod (z_i - z_k)^(-1) = (-1)^N w^(-r sum_{k not in I} k) prod_m (1 - w^m)^(-c_m)`.
    fn j_inverse_scaled(&self, subset: &SubsetIndex) -> Cyc<T> {
        let n = self.spec.n;
        let comp = subset.complement(n);
        let mut counts = vec![0usize; n];
        for &a in subset.as_slice() {
            for &b in comp.as_slice() {
                counts[(a + n - b) % n] += 1;
            }
        }
        let shift: usize = comp.as_slice().iter().sum::<usize>() * subset.len();
        let mut acc = Cyc::one(n)
            .expect("order is positive")
            .mul_root(-(shift as i64));
        for (m, &c) in counts.iter().enumerate().skip(1) {
            if c > 0 {
                acc = &acc * &self.inverse_powers[m][c];
            }
        }
        if (subset.len() * comp.len()) % 2 == 1 {
            acc = -&acc;
        }
        acc
    }

    fn sum_block(&self, start: u128, count: u128) -> Cyc<T> {
        let mut total = Cyc::zero(self.spec.n).expect("order is positive");
        for s in colex_block(start, count, self.spec.r, self.spec.n) {
            total.add_assign_ref(&self.eval(&s));
        }
        total
    }

    fn sum_orbits(&self) -> Cyc<T> {
        let n = self.spec.n;
        let mut total = Cyc::zero(n).expect("order is positive");
        for s in colex_block(0, self.spec.subset_count(), self.spec.r, n) {
            if let Some(w) = s.orbit_weight(n) {
                total.add_assign_ref(&self.eval(&s).scalar_mul(&T::from_i64(w as i64)));
            }
        }
        total
    }

    /// The full signed sum times [`Summand::scale`], still as a cyclotomic element.
    pub fn total(&self, strategy: Strategy) -> Result<Cyc<T>> {
        let count = self.spec.subset_count();
        let raw = match strategy {
            Strategy::Serial => self.sum_block(0, count),
            Strategy::OrbitReduced => self.sum_orbits(),
            Strategy::Parallel { workers } => {
                let workers = workers.max(1);
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(workers)
                    .build()
                    .map_err(|e| {
                        Error::InvalidSpec(format!("cannot start {workers} workers: {e}"))
                    })?;
                let blocks: Vec<(u128, u128)> = (0..workers as u128)
                    .map(|k| {
                        let lo = count * k / workers as u128;
                        let hi = count * (k + 1) / workers as u128;
                        (lo, hi - lo)
                    })
                    .filter(|&(_, len)| len > 0)
                    .collect();
                let n = self.spec.n;
                pool.install(|| {
                    blocks
                        .par_iter()
                        .map(|&(lo, len)| self.sum_block(lo, len))
                        .reduce(
                            || Cyc::zero(n).expect("order is positive"),
                            |mut a, b| {
                                a.add_assign_ref(&b);
                                a
                            },
                        )
                })
            }
        };
        Ok(raw.scalar_mul(&T::from_i64(self.spec.sign())))
    }
}

/// Evaluates the sum over any scalar type and reads it back as a scalar.
/// Genus zero divides by [`Summand::scale`], which needs a field.
pub fn vi_sum<T: Scalar>(
    spec: &GrassmannSpec,
    monomial: &Monomial,
    strategy: Strategy,
) -> Result<T> {
    let summand = Summand::<T>::new(spec, monomial)?;
    let raw = summand.total(strategy)?.extract_rational()?.into_inner();
    if spec.g != 0 {
        return Ok(raw);
    }
    if !T::FIELD {
        return Err(Error::NotInvertible { n: spec.n, m: 0 });
    }
    Ok(raw / T::from_bigint(&summand.scale()))
}

fn grassmannian_advisory() -> Advisory {
    Advisory::new(
        Enumerativity::EnumerativeIfWeaklyConvex,
        "Grassmannian target: the count is enumerative for sufficiently large d",
    )
}

fn exact(spec: &GrassmannSpec, monomial: &Monomial, strategy: Strategy) -> Result<VirtualCount> {
    let summand = Summand::<BigInt>::new(spec, monomial)?;
    let raw = summand.total(strategy)?.extract_rational()?.into_inner();
    let value = Rational::new(raw, summand.scale());
    VirtualCount::certified(value, grassmannian_advisory())
}

/// `int_{[Quot]^vir} P` for the monomial `P`, summed serially.
pub fn vi_integral(spec: &GrassmannSpec, monomial: &Monomial) -> Result<VirtualCount> {
    exact(spec, monomial, Strategy::Serial)
}

pub fn vi_integral_parallel(
    spec: &GrassmannSpec,
    monomial: &Monomial,
    workers: usize,
) -> Result<VirtualCount> {
    exact(spec, monomial, Strategy::Parallel { workers })
}

pub fn vi_integral_orbit_reduced(
    spec: &GrassmannSpec,
    monomial: &Monomial,
) -> Result<VirtualCount> {
    exact(spec, monomial, Strategy::OrbitReduced)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DualityReport {
    pub chern_side: VirtualCount,
    pub segre_side: VirtualCount,
    pub equal: bool,
}

/// Evaluates a Chern monomial on `G(r, n)` and the same indices as Segre
/// classes on `G(n - r, n)`.
pub fn duality_check(spec: &GrassmannSpec, chern: &Monomial) -> Result<DualityReport> {
    if chern.max_index(false) > 0 {
        return Err(Error::InvalidInsertion(
            "duality check takes Chern insertions only".into(),
        ));
    }
    if spec.r == spec.n {
        return Err(Error::InvalidSpec(
            "the dual of G(n, n) has rank zero".into(),
        ));
    }
    let segre: Monomial = {
        let mut m = Monomial::new();
        for (kind, exp) in chern.factors() {
            m.push(InsertionKind::Segre(kind.index()), exp);
        }
        m
    };
    let chern_side = vi_integral(spec, chern)?;
    let segre_side = vi_integral(&spec.dual()?, &segre)?;
    Ok(DualityReport {
        equal: chern_side.value == segre_side.value,
        chern_side,
        segre_side,
    })
}

/// Cache of Grassmannian integrals keyed by the monomial; the twist and
/// b-class layers hit the same integral repeatedly.
#[derive(Default)]
pub struct IntegralCache {
    values: HashMap<(GrassmannSpec, Monomial), Rational>,
    pub workers: Option<usize>,
}

impl IntegralCache {
    pub fn with_workers(workers: usize) -> Self {
        IntegralCache {
            values: HashMap::new(),
            workers: Some(workers),
        }
    }

    pub fn get(&mut self, spec: &GrassmannSpec, monomial: &Monomial) -> Result<Rational> {
        let key = (*spec, monomial.clone());
        if let Some(v) = self.values.get(&key) {
            return Ok(v.clone());
        }
        let v = match self.workers {
            Some(w) if w > 1 => vi_integral_parallel(spec, monomial, w)?.value,
            _ => vi_integral(spec, monomial)?.value,
        };
        self.values.insert(key, v.clone());
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::CycQ;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn a1(exp: u32) -> Monomial {
        Monomial::chern_power(1, exp)
    }

    fn all_subsets(r: usize, n: usize) -> impl Iterator<Item = SubsetIndex> {
        colex_block(0, binomial(n as u64, r as u64), r, n)
    }

    #[test]
    fn j_of_full_subset_is_one() {
        let spec = GrassmannSpec::new(3, 3, 1, 0).unwrap();
        assert_eq!(
            j_factor::<Rational>(&spec, &SubsetIndex::first(3)),
            CycQ::one(3).unwrap()
        );
    }

    #[test]
    fn j_smallest_case() {
        let spec = GrassmannSpec::new(1, 2, 1, 0).unwrap();
        let j = j_factor::<Rational>(&spec, &SubsetIndex::first(1));
        assert_eq!(j.extract_rational().unwrap().into_inner(), q(2));
    }

    #[test]
    fn j_matches_its_definition() {
        for n in 2..=8 {
            for r in 1..=n {
                let spec = GrassmannSpec::new(r, n, 1, 0).unwrap();
                for s in all_subsets(r, n) {
                    let fast = j_factor::<Rational>(&spec, &s);
                    let literal = j_factor_from_definition::<Rational>(&spec, &s).unwrap();
                    assert!(fast.eq_mod_phi(&literal), "n={n} I={s:?}");
                }
            }
        }
    }

    #[test]
    fn j_inverse_paths_agree() {
        for n in 2..=8 {
            for r in 1..n {
                let spec = GrassmannSpec::new(r, n, 0, 0).unwrap();
                let summand = Summand::<Rational>::new(
                    &spec,
                    &Monomial::chern_power(1, spec.virtual_dim() as u32),
                )
                .unwrap();
                let scale = Rational::from_integer(summand.scale());
                for s in all_subsets(r, n) {
                    let grouped = summand.j_inverse_scaled(&s);
                    let direct = j_inverse::<Rational>(&spec, &s).unwrap();
                    assert!(grouped.eq_mod_phi(&direct.scalar_mul(&scale)));
                    let prod = &direct * &j_factor(&spec, &s);
                    assert!(prod.eq_mod_phi(&CycQ::one(n).unwrap()));
                }
            }
        }
    }

    #[test]
    fn elliptic_plane_count() {
        let spec = GrassmannSpec::new(2, 3, 1, 1).unwrap();
        assert_eq!(spec.virtual_dim(), 3);
        assert_eq!(vi_integral(&spec, &a1(3)).unwrap().value, q(3));
        assert_eq!(vi_integral_parallel(&spec, &a1(3), 4).unwrap().value, q(3));
        assert_eq!(
            vi_integral_orbit_reduced(&spec, &a1(3)).unwrap().value,
            q(3)
        );
    }

    #[test]
    fn dimension_guard() {
        let spec = GrassmannSpec::new(2, 3, 1, 1).unwrap();
        assert_eq!(
            vi_integral(&spec, &a1(2)),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 2
            })
        );
        let negative = GrassmannSpec::new(2, 4, 3, 0).unwrap();
        assert!(matches!(
            vi_integral(&negative, &Monomial::new()),
            Err(Error::DimensionMismatch { .. })
        ));
        let bad_index = Monomial::chern_power(3, 1);
        assert!(matches!(
            vi_integral(&spec, &bad_index),
            Err(Error::InvalidInsertion(_))
        ));
    }

    #[test]
    fn rejects_bad_spec() {
        assert!(GrassmannSpec::new(0, 3, 0, 0).is_err());
        assert!(GrassmannSpec::new(4, 3, 0, 0).is_err());
        assert!(GrassmannSpec::new(1, 0, 0, 0).is_err());
    }

    #[test]
    fn projective_line_genus_zero() {
        // P^{n-1}: one rational curve of degree d through dn + n - 1 hyperplane conditions.
        for n in 2..=6 {
            for d in 0..=3 {
                let spec = GrassmannSpec::new(1, n, 0, d).unwrap();
                let e = spec.virtual_dim() as u32;
                assert_eq!(vi_integral(&spec, &a1(e)).unwrap().value, q(1));
            }
        }
    }

    #[test]
    fn projective_top_power_is_n_to_the_g() {
        // int a_1^e over Quot_d(C, P^{n-1}) = n^g
        for n in 2..=5usize {
            for g in 0..=3u32 {
                for d in 0..=3u32 {
                    let spec = GrassmannSpec::new(n - 1, n, g, d).unwrap();
                    let e = spec.virtual_dim();
                    if e < 0 {
                        continue;
                    }
                    let v = vi_integral(&spec, &a1(e as u32)).unwrap().value;
                    assert_eq!(v, q((n as i64).pow(g)), "n={n} g={g} d={d}");
                }
            }
        }
    }

    #[test]
    fn rotation_invariance_of_summands() {
        for (r, n, g, d) in [(2, 4, 0, 1), (2, 5, 1, 2), (3, 6, 2, 3), (2, 6, 0, 0)] {
            let spec = GrassmannSpec::new(r, n, g, d).unwrap();
            let e = spec.virtual_dim() as u32;
            let mono = Monomial::chern_power(1, e.saturating_sub(2))
                .with(InsertionKind::Chern(2), (e >= 2) as u32);
            let mono = if mono.weight() == e as i64 {
                mono
            } else {
                a1(e)
            };
            let summand = Summand::<Rational>::new(&spec, &mono).unwrap();
            for s in all_subsets(r, n) {
                let base = summand.eval(&s);
                let rotated = summand.eval(&s.rotate(1, n));
                assert!(base.eq_mod_phi(&rotated), "{spec:?} {s:?}");
            }
        }
    }

    #[test]
    fn insertion_order_is_irrelevant() {
        let spec = GrassmannSpec::new(2, 4, 1, 2).unwrap();
        let m1: Monomial = [
            InsertionKind::Chern(2),
            InsertionKind::Chern(1),
            InsertionKind::Chern(2),
            InsertionKind::Chern(1),
            InsertionKind::Chern(2),
        ]
        .into_iter()
        .collect();
        let m2: Monomial = [
            InsertionKind::Chern(1),
            InsertionKind::Chern(1),
            InsertionKind::Chern(2),
            InsertionKind::Chern(2),
            InsertionKind::Chern(2),
        ]
        .into_iter()
        .collect();
        assert_eq!(
            vi_integral(&spec, &m1).unwrap(),
            vi_integral(&spec, &m2).unwrap()
        );
    }

    #[test]
    fn float_path_tracks_exact_path() {
        let spec = GrassmannSpec::new(2, 5, 0, 2).unwrap();
        let mono = Monomial::chern_power(1, 12).with(InsertionKind::Chern(2), 2);
        let exact = vi_sum::<Rational>(&spec, &mono, Strategy::Serial).unwrap();
        let approx = vi_sum::<f64>(&spec, &mono, Strategy::Serial).unwrap();
        use num_traits::ToPrimitive;
        assert!(
            (exact.to_f64().unwrap() - approx).abs()
                < 1e-6 * exact.to_f64().unwrap().abs().max(1.0)
        );
    }

    #[test]
    fn duality_small_cases() {
        let p1 = GrassmannSpec::new(1, 2, 1, 2).unwrap();
        let rep = duality_check(&p1, &a1(4)).unwrap();
        assert!(rep.equal);
        let p2 = GrassmannSpec::new(2, 3, 1, 1).unwrap();
        let rep = duality_check(&p2, &a1(3)).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.segre_side.value, q(3));
        let g24 = GrassmannSpec::new(2, 4, 1, 2).unwrap();
        let rep = duality_check(
            &g24,
            &Monomial::chern_power(2, 3).with(InsertionKind::Chern(1), 2),
        )
        .unwrap();
        assert!(rep.equal);
    }

    #[test]
    fn duality_rejects_segre_input() {
        let spec = GrassmannSpec::new(1, 2, 1, 1).unwrap();
        assert!(duality_check(&spec, &Monomial::new().with(InsertionKind::Segre(2), 1)).is_err());
    }

    #[test]
    fn worker_counts_agree() {
        let spec = GrassmannSpec::new(3, 7, 2, 4).unwrap();
        let mono = Monomial::chern_power(1, spec.virtual_dim() as u32 - 3)
            .with(InsertionKind::Chern(3), 1);
        let serial = vi_integral(&spec, &mono).unwrap();
        for w in [1, 2, 3, 8, 50] {
            assert_eq!(vi_integral_parallel(&spec, &mono, w).unwrap(), serial);
        }
    }
}
