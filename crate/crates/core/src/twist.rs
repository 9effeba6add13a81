//! Counts on hypersurfaces and complete intersections `X` of multidegree
//! `(l_1, .., l_u)` in `G(r, n)`, reduced to Grassmannian integrals.
//!
//! Cutting by `X` multiplies the integrand by the top Chern class of the
//! bundle of sections of `det(E^vee)^l_i`, which has rank `N_i = d l_i - g + 1`
//! whenever `d l_i > 2g - 2`. Its top Chern class is
//! `prod_i (l_i a_1)^N_i exp(-l_i phi / a_1)`, with `phi` the sum of the `g`
//! products `b^j b^(j+g)` of odd Kunneth components. Integrating `phi^s`
//! against `a`-classes replaces it by `g!/(g-s)! a_1^s / n^s` for `s <= d`,
//! which gives
//!
//! ```text
//!   int_X P = (n - sum l_i)^g prod l_i^N_i / n^g * int_G a_1^(sum N_i) P
//! ```
//!
//! when `d >= g`. The phi-expansion route keeps the truncated sum over `s`
//! instead, so it also covers `d < g`, where the two need not agree.

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::count::{Advisory, Enumerativity, VirtualCount};
use crate::engine::{GrassmannSpec, IntegralCache};
use crate::error::{Error, Result};
use crate::symfunc::{InsertionKind, Monomial};
use crate::Rational;

/// A target `X` in `G(r, n)` of the given multidegree together with the
/// insertions to integrate over its Quot scheme. An empty multidegree is the
/// Grassmannian itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemSpec {
    pub base: GrassmannSpec,
    pub multidegree: Vec<u32>,
    pub insertions: Monomial,
}

impl ProblemSpec {
    pub fn new(base: GrassmannSpec, multidegree: Vec<u32>, insertions: Monomial) -> Result<Self> {
        if multidegree.contains(&0) {
            return Err(Error::InvalidSpec(
                "hypersurface degrees must be positive".into(),
            ));
        }
        Ok(ProblemSpec {
            base,
            multidegree,
            insertions,
        })
    }

    pub fn hypersurface(base: GrassmannSpec, degree: u32, insertions: Monomial) -> Result<Self> {
        Self::new(base, vec![degree], insertions)
    }

    /// `d l - g + 1` for each degree.
    pub fn twist_ranks(&self) -> Vec<i64> {
        let (d, g) = (self.base.d as i64, self.base.g as i64);
        self.multidegree
            .iter()
            .map(|&l| d * l as i64 - g + 1)
            .collect()
    }

    /// `e - sum (d l_i - g + 1)`.
    pub fn twisted_dim(&self) -> i64 {
        self.base.virtual_dim() - self.twist_ranks().iter().sum::<i64>()
    }

    pub fn degree_sum(&self) -> i64 {
        self.multidegree.iter().map(|&l| l as i64).sum()
    }

    pub fn in_regime(&self) -> bool {
        let (d, g) = (self.base.d as i64, self.base.g as i64);
        self.multidegree.iter().all(|&l| d * l as i64 > 2 * g - 2)
    }

    pub fn check_regime(&self) -> Result<()> {
        if self.in_regime() {
            return Ok(());
        }
        Err(Error::RegimeViolation(format!(
            "need d*l > 2g - 2 for every degree l, got d = {}, g = {}, degrees {:?}",
            self.base.d, self.base.g, self.multidegree
        )))
    }

    pub fn check(&self) -> Result<()> {
        self.check_regime()?;
        self.insertions.check(self.base.r)?;
        let expected = self.twisted_dim();
        let found = self.insertions.weight();
        if expected < 0 || found != expected {
            return Err(Error::DimensionMismatch { expected, found });
        }
        Ok(())
    }

    /// The insertions times `a_1^(sum N_i)`, the Grassmannian integrand.
    pub fn boosted_monomial(&self) -> Monomial {
        let extra: i64 = self.twist_ranks().iter().sum();
        self.insertions
            .clone()
            .with(InsertionKind::Chern(1), extra as u32)
    }

    /// `prod l_i^N_i`.
    fn degree_power(&self) -> Rational {
        self.multidegree
            .iter()
            .zip(self.twist_ranks())
            .map(|(&l, rank)| rational_pow(l as i64, rank))
            .fold(Rational::one(), |a, b| a * b)
    }
}

fn rational_pow(base: i64, exp: i64) -> Rational {
    let b = Rational::from_integer(BigInt::from(base));
    if exp >= 0 {
        Pow::pow(b, exp as u64)
    } else {
        Pow::pow(b.recip(), exp.unsigned_abs())
    }
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `(n - sum l)^g prod l_i^N_i / n^g`.
pub fn prefactor(spec: &ProblemSpec) -> Rational {
    let n = spec.base.n as i64;
    let g = spec.base.g as u64;
    let ratio = int(n - spec.degree_sum()) / int(n);
    Pow::pow(ratio, g) * spec.degree_power()
}

/// Enumerativity conditions for the insertions of `spec`.
pub fn enumerativity_advisor(spec: &ProblemSpec) -> Advisory {
    if !spec.in_regime() {
        return Advisory::new(
            Enumerativity::OutOfRegime,
            "d*l <= 2g - 2 for some degree l: the twisting sheaf is not a bundle",
        );
    }
    let n = spec.base.n as i64;
    let chern: Vec<i64> = spec
        .insertions
        .factors()
        .filter_map(|(k, _)| match k {
            InsertionKind::Chern(i) => Some(i as i64),
            InsertionKind::Segre(_) => None,
        })
        .collect();
    let has_segre = spec.insertions.max_index(false) > 0;
    match spec.multidegree.len() {
        0 => Advisory::new(
            Enumerativity::EnumerativeIfWeaklyConvex,
            "Grassmannian target: the count is enumerative for sufficiently large d",
        ),
        _ if has_segre => Advisory::new(
            Enumerativity::VirtualOnly,
            "Segre insertions carry no enumerativity statement",
        ),
        1 => {
            let bound = n - spec.degree_sum();
            if chern.iter().all(|&i| i < bound) {
                Advisory::new(
                    Enumerativity::EnumerativeIfWeaklyConvex,
                    format!(
                        "every index i satisfies i < n - l = {bound}; enumerative for large d \
                         provided maps to X have the expected dimension"
                    ),
                )
            } else {
                Advisory::new(
                    Enumerativity::VirtualOnly,
                    format!("some index i has i >= n - l = {bound}"),
                )
            }
        }
        _ => {
            let bound = n - spec.degree_sum();
            if chern.iter().all(|&i| i <= bound) {
                Advisory::new(
                    Enumerativity::EnumerativeIfWeaklyConvex,
                    format!(
                        "every index i satisfies i <= n - sum l = {bound}; enumerative for large d \
                         provided maps to X have the expected dimension"
                    ),
                )
            } else {
                Advisory::new(
                    Enumerativity::VirtualOnly,
                    format!("some index i has i > n - sum l = {bound}"),
                )
            }
        }
    }
}

pub fn complete_intersection_integral(spec: &ProblemSpec) -> Result<VirtualCount> {
    complete_intersection_integral_with(spec, &mut IntegralCache::default())
}

pub fn complete_intersection_integral_with(
    spec: &ProblemSpec,
    cache: &mut IntegralCache,
) -> Result<VirtualCount> {
    spec.check()?;
    let integral = cache.get(&spec.base, &spec.boosted_monomial())?;
    VirtualCount::certified(prefactor(spec) * integral, enumerativity_advisor(spec))
}

pub fn hypersurface_integral(spec: &ProblemSpec) -> Result<VirtualCount> {
    hypersurface_integral_with(spec, &mut IntegralCache::default())
}

pub fn hypersurface_integral_with(
    spec: &ProblemSpec,
    cache: &mut IntegralCache,
) -> Result<VirtualCount> {
    if spec.multidegree.len() != 1 {
        return Err(Error::InvalidSpec(format!(
            "a hypersurface has one degree, got {:?}",
            spec.multidegree
        )));
    }
    complete_intersection_integral_with(spec, cache)
}

/// A product `b^j1 b^(j1+g) ... b^js b^(js+g)` of odd classes times a monomial
/// in the `a`-classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BClassWord {
    /// The `j` of each pair `(j, j + g)`, `1 <= j <= g`.
    pub pairs: Vec<u32>,
    pub trailing: Monomial,
}

impl BClassWord {
    pub fn new(pairs: Vec<u32>, trailing: Monomial) -> Self {
        BClassWord { pairs, trailing }
    }

    /// Builds a word from explicit superscript pairs, which must be `(j, j + g)`.
    pub fn from_superscripts(
        superscripts: &[(u32, u32)],
        g: u32,
        trailing: Monomial,
    ) -> Result<Self> {
        let mut pairs = Vec::with_capacity(superscripts.len());
        for &(a, b) in superscripts {
            if b != a + g {
                return Err(Error::InvalidSpec(format!(
                    "superscripts ({a}, {b}) are not of the form (j, j + {g})"
                )));
            }
            pairs.push(a);
        }
        Ok(BClassWord { pairs, trailing })
    }

    pub fn superscripts(&self, g: u32) -> Vec<(u32, u32)> {
        self.pairs.iter().map(|&j| (j, j + g)).collect()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    fn has_repeats(&self) -> bool {
        let mut seen = self.pairs.clone();
        seen.sort_unstable();
        seen.windows(2).any(|w| w[0] == w[1])
    }
}

pub fn reduce_b_classes(word: &BClassWord, base: &GrassmannSpec) -> Result<VirtualCount> {
    reduce_b_classes_with(word, base, &mut IntegralCache::default())
}

/// `int (b-word) P = n^(-s) int a_1^s P`, or zero when `s > d` or a
/// superscript repeats.
pub fn reduce_b_classes_with(
    word: &BClassWord,
    base: &GrassmannSpec,
    cache: &mut IntegralCache,
) -> Result<VirtualCount> {
    if let Some(&j) = word.pairs.iter().find(|&&j| j == 0 || j > base.g) {
        return Err(Error::InvalidSpec(format!(
            "b-class index {j} outside 1..={}",
            base.g
        )));
    }
    word.trailing.check(base.r)?;
    let s = word.len() as i64;
    let expected = base.virtual_dim() - s;
    let found = word.trailing.weight();
    if expected < 0 || found != expected {
        return Err(Error::DimensionMismatch { expected, found });
    }
    let advisory = Advisory::new(Enumerativity::VirtualOnly, "b-class intersection number");
    if word.has_repeats() || s > base.d as i64 {
        return VirtualCount::certified(Rational::zero(), advisory);
    }
    let boosted = word
        .trailing
        .clone()
        .with(InsertionKind::Chern(1), s as u32);
    let integral = cache.get(base, &boosted)?;
    VirtualCount::certified(integral / Pow::pow(int(base.n as i64), s as u64), advisory)
}

/// Strictly increasing `s`-tuples from `1..=g`.
fn increasing_words(g: u32, s: usize) -> Vec<Vec<u32>> {
    fn go(next: u32, g: u32, s: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for j in next..=g {
            cur.push(j);
            go(j + 1, g, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, g, s, &mut Vec::new(), &mut out);
    out
}

pub fn hypersurface_integral_via_phi_expansion(spec: &ProblemSpec) -> Result<VirtualCount> {
    phi_expansion_integral_with(spec, &mut IntegralCache::default())
}

/// Expands `exp(-L phi / a_1)`, `L = sum l_i`, and integrates each `phi^s`
/// word by [`reduce_b_classes_with`]:
///
/// `int_X P = prod l_i^N_i * sum_s (-L)^s * sum_{j_1 < .. < j_s} int b-word * a_1^(N - s) P`.
///
/// The result is reported rather than certified: for `d < g` the truncated
/// sum need not be an integer.
pub fn phi_expansion_integral_with(
    spec: &ProblemSpec,
    cache: &mut IntegralCache,
) -> Result<VirtualCount> {
    spec.check()?;
    if spec.multidegree.is_empty() {
        return Err(Error::InvalidSpec(
            "phi expansion needs at least one hypersurface".into(),
        ));
    }
    let g = spec.base.g;
    let total_rank: i64 = spec.twist_ranks().iter().sum();
    let big_l = int(spec.degree_sum());
    let mut sum = Rational::zero();
    for s in 0..=g as usize {
        let mut words_total = Rational::zero();
        let trailing = spec
            .insertions
            .clone()
            .with(InsertionKind::Chern(1), (total_rank - s as i64) as u32);
        for pairs in increasing_words(g, s) {
            let word = BClassWord::new(pairs, trailing.clone());
            words_total += reduce_b_classes_with(&word, &spec.base, cache)?.value;
        }
        let sign = if s % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        sum += sign * Pow::pow(big_l.clone(), s as u64) * words_total;
    }
    Ok(VirtualCount::reported(
        spec.degree_power() * sum,
        enumerativity_advisor(spec),
    ))
}

/// Both evaluation routes side by side.
#[derive(Clone, Debug, PartialEq)]
pub struct PathComparison {
    pub closed: VirtualCount,
    pub phi: VirtualCount,
    pub agree: bool,
    /// `d >= g`, where agreement is guaranteed.
    pub agreement_expected: bool,
}

pub fn compare_paths_with(spec: &ProblemSpec, cache: &mut IntegralCache) -> Result<PathComparison> {
    let phi = phi_expansion_integral_with(spec, cache)?;
    let closed = complete_intersection_integral_with(spec, cache)?;
    Ok(PathComparison {
        agree: closed.value == phi.value,
        agreement_expected: spec.base.d >= spec.base.g,
        closed,
        phi,
    })
}

/// `prod l_i^(d l_i - g + 1) (r + 1 - sum l_i)^g` on `P^r`, no engine call.
pub fn closed_form_projective(g: u32, d: u32, r: usize, degrees: &[u32]) -> VirtualCount {
    let (g, d) = (g as i64, d as i64);
    let mut value = rational_pow(
        r as i64 + 1 - degrees.iter().map(|&l| l as i64).sum::<i64>(),
        g,
    );
    for &l in degrees {
        value *= rational_pow(l as i64, d * l as i64 - g + 1);
    }
    VirtualCount::reported(
        value,
        Advisory::new(
            Enumerativity::VirtualOnly,
            "closed form on projective space",
        ),
    )
}

/// `2^(2d - m_2 - g + 1) 3^g` on the Lagrangian Grassmannian `LG(2, 4)`.
pub fn closed_form_lg24(g: u32, d: u32, m1: u32, m2: u32) -> Result<VirtualCount> {
    let (gi, di) = (g as i64, d as i64);
    if m1 as i64 + 2 * m2 as i64 != 3 * (di - gi + 1) {
        return Err(Error::InvalidSpec(format!(
            "need m1 + 2 m2 = 3(d - g + 1) = {}, got {}",
            3 * (di - gi + 1),
            m1 + 2 * m2
        )));
    }
    if di <= 2 * gi - 2 {
        return Err(Error::RegimeViolation(format!(
            "need d > 2g - 2, got d = {d}, g = {g}"
        )));
    }
    let value = rational_pow(2, 2 * di - m2 as i64 - gi + 1) * rational_pow(3, gi);
    VirtualCount::certified(
        value,
        Advisory::new(Enumerativity::VirtualOnly, "closed form on LG(2,4)"),
    )
}

#[derive(Clone, Debug, PartialEq)]
pub struct TevelevReport {
    /// `int (a_{r-1} / l)^t` over the Quot scheme of the hypersurface.
    pub q: VirtualCount,
    /// `(l! / l^l)^t Q`.
    pub implied_tev: Rational,
    pub implied_is_integer: bool,
    /// `3 <= l <= r/2 + 1` and `g + t >= 2`, where the comparison is made.
    pub comparison_regime: bool,
}

fn tevelev_setup(g: u32, d: u32, r: usize, l: u32, t: u32) -> Result<ProblemSpec> {
    if r < 2 {
        return Err(Error::InvalidSpec("point counts need r >= 2".into()));
    }
    let base = GrassmannSpec::new(r, r + 1, g, d)?;
    let spec = ProblemSpec::hypersurface(base, l, Monomial::chern_power(r as u32 - 1, t))?;
    spec.check_regime()?;
    let e_l = spec.twisted_dim();
    if t == 0 || e_l != t as i64 * (r as i64 - 1) {
        return Err(Error::InvalidSpec(format!(
            "t = {t} but e_l / (r - 1) = {e_l}/{} is not that positive integer",
            r - 1
        )));
    }
    Ok(spec)
}

/// Compares the naive point count on `X_l` in `P^r` with the Tevelev degree it implies.
pub fn tevelev_compare(g: u32, d: u32, r: usize, l: u32, t: u32) -> Result<TevelevReport> {
    tevelev_setup(g, d, r, l, t)?;
    let (gi, li, ti) = (g as i64, l as i64, t as i64);
    let q_value =
        rational_pow(li, d as i64 * li - gi + 1 - ti) * rational_pow(r as i64 + 1 - li, gi);
    let factorial: BigInt = (1..=li).map(BigInt::from).product();
    let ratio = Rational::new(factorial, BigInt::from(li).pow(l));
    let implied = Pow::pow(ratio, t as u64) * &q_value;
    Ok(TevelevReport {
        q: VirtualCount::reported(
            q_value,
            Advisory::new(
                Enumerativity::VirtualOnly,
                "point conditions exceed the codimension bound",
            ),
        ),
        implied_is_integer: implied.is_integer(),
        implied_tev: implied,
        comparison_regime: (3..=r as u32 / 2 + 1).contains(&l) && g + t >= 2,
    })
}

/// `Q` through the engine: the hypersurface integral of `a_{r-1}^t` over `l^t`.
pub fn tevelev_q_via_engine(g: u32, d: u32, r: usize, l: u32, t: u32) -> Result<Rational> {
    let spec = tevelev_setup(g, d, r, l, t)?;
    let v = hypersurface_integral(&spec)?.value;
    Ok(v / Pow::pow(int(l as i64), t as u64))
}

/// `true` when `value` is a nonnegative integer; handy in reports.
pub fn is_nonnegative_integer(value: &Rational) -> bool {
    value.is_integer() && !value.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::vi_integral;

    fn q(v: i64) -> Rational {
        int(v)
    }

    fn hyp(r: usize, n: usize, g: u32, d: u32, l: u32, mono: Monomial) -> ProblemSpec {
        ProblemSpec::hypersurface(GrassmannSpec::new(r, n, g, d).unwrap(), l, mono).unwrap()
    }

    fn lg24_monomial(m1: u32, m2: u32) -> Monomial {
        Monomial::chern_power(1, m1).with(InsertionKind::Chern(2), m2)
    }

    #[test]
    fn lg24_hypersurface_value() {
        let spec = hyp(2, 4, 1, 2, 1, lg24_monomial(4, 1));
        assert_eq!(spec.twisted_dim(), 6);
        assert_eq!(hypersurface_integral(&spec).unwrap().value, q(24));
        assert_eq!(
            hypersurface_integral_via_phi_expansion(&spec)
                .unwrap()
                .value,
            q(24)
        );
        assert_eq!(closed_form_lg24(1, 2, 4, 1).unwrap().value, q(24));
    }

    #[test]
    fn lg24_closed_form_instances() {
        assert_eq!(closed_form_lg24(0, 1, 6, 0).unwrap().value, q(8));
        assert_eq!(closed_form_lg24(0, 1, 0, 3).unwrap().value, q(1));
        assert!(closed_form_lg24(0, 1, 1, 1).is_err());
        assert!(matches!(
            closed_form_lg24(2, 2, 1, 1),
            Err(Error::RegimeViolation(_))
        ));
    }

    #[test]
    fn quadric_threefold_in_p3() {
        let spec = hyp(3, 4, 0, 2, 2, Monomial::chern_power(1, 6));
        assert_eq!(spec.twisted_dim(), 6);
        assert_eq!(hypersurface_integral(&spec).unwrap().value, q(32));
        assert_eq!(closed_form_projective(0, 2, 3, &[2]).value, q(32));
    }

    #[test]
    fn two_quadrics_in_p4() {
        let base = GrassmannSpec::new(4, 5, 0, 1).unwrap();
        let spec = ProblemSpec::new(base, vec![2, 2], Monomial::chern_power(1, 3)).unwrap();
        assert_eq!(spec.twisted_dim(), 3);
        assert_eq!(complete_intersection_integral(&spec).unwrap().value, q(64));
        assert_eq!(closed_form_projective(0, 1, 4, &[2, 2]).value, q(64));
    }

    #[test]
    fn degree_n_hypersurface_at_genus_one_vanishes() {
        // l = n makes the prefactor zero
        let spec = hyp(2, 3, 1, 1, 3, Monomial::new());
        assert_eq!(spec.twisted_dim(), 0);
        assert!(hypersurface_integral(&spec).unwrap().value.is_zero());
        let base = GrassmannSpec::new(2, 4, 1, 2).unwrap();
        let ci = ProblemSpec::new(base, vec![1, 3], Monomial::new()).unwrap();
        assert_eq!(ci.twisted_dim(), 0);
        assert!(complete_intersection_integral(&ci).unwrap().value.is_zero());
    }

    #[test]
    fn linear_section_closed_form() {
        for r in 1..=4usize {
            for g in 0..=2u32 {
                assert_eq!(
                    closed_form_projective(g, 3, r, &[1]).value,
                    q((r as i64).pow(g))
                );
            }
        }
    }

    #[test]
    fn regime_and_dimension_guards() {
        let spec = hyp(2, 4, 2, 1, 2, Monomial::new());
        assert!(matches!(
            hypersurface_integral(&spec),
            Err(Error::RegimeViolation(_))
        ));
        let spec = hyp(2, 4, 1, 2, 1, lg24_monomial(1, 1));
        assert_eq!(
            hypersurface_integral(&spec),
            Err(Error::DimensionMismatch {
                expected: 6,
                found: 3
            })
        );
        let base = GrassmannSpec::new(2, 4, 1, 2).unwrap();
        let two = ProblemSpec::new(base, vec![1, 1], Monomial::new()).unwrap();
        assert!(matches!(
            hypersurface_integral(&two),
            Err(Error::InvalidSpec(_))
        ));
        assert!(ProblemSpec::new(base, vec![0], Monomial::new()).is_err());
    }

    #[test]
    fn single_degree_intersection_is_the_hypersurface() {
        let spec = hyp(
            2,
            5,
            1,
            3,
            2,
            Monomial::chern_power(1, 3).with(InsertionKind::Chern(2), 3),
        );
        assert_eq!(
            complete_intersection_integral(&spec).unwrap(),
            hypersurface_integral(&spec).unwrap()
        );
    }

    #[test]
    fn b_class_reduction() {
        let base = GrassmannSpec::new(2, 3, 1, 1).unwrap();
        let word = BClassWord::new(vec![1], Monomial::chern_power(1, 2));
        assert_eq!(reduce_b_classes(&word, &base).unwrap().value, q(1));
        let sup = BClassWord::from_superscripts(&[(1, 2)], 1, Monomial::chern_power(1, 2)).unwrap();
        assert_eq!(sup, word);
        assert!(BClassWord::from_superscripts(&[(1, 3)], 1, Monomial::new()).is_err());

        // repeated superscripts vanish
        let base2 = GrassmannSpec::new(2, 3, 2, 3).unwrap();
        let e = base2.virtual_dim();
        let rep = BClassWord::new(vec![1, 1], Monomial::chern_power(1, (e - 2) as u32));
        assert!(reduce_b_classes(&rep, &base2).unwrap().value.is_zero());
        let distinct = BClassWord::new(vec![1, 2], Monomial::chern_power(1, (e - 2) as u32));
        assert!(!reduce_b_classes(&distinct, &base2).unwrap().value.is_zero());

        // s > d vanishes
        let base3 = GrassmannSpec::new(2, 2, 2, 1).unwrap();
        assert_eq!(base3.virtual_dim(), 2);
        let long = BClassWord::new(vec![1, 2], Monomial::new());
        assert!(reduce_b_classes(&long, &base3).unwrap().value.is_zero());

        let wrong = BClassWord::new(vec![1], Monomial::chern_power(1, 3));
        assert!(matches!(
            reduce_b_classes(&wrong, &base),
            Err(Error::DimensionMismatch { .. })
        ));
        let out_of_range = BClassWord::new(vec![2], Monomial::chern_power(1, 2));
        assert!(reduce_b_classes(&out_of_range, &base).is_err());
    }

    #[test]
    fn phi_path_matches_for_d_at_least_g() {
        for (r, n) in [(1, 3), (2, 4), (2, 5), (3, 5)] {
            for g in 0..=3u32 {
                for d in g..=4u32 {
                    for l in 1..=3u32 {
                        let spec = hyp(r, n, g, d, l, Monomial::new());
                        let e_l = spec.twisted_dim();
                        if e_l < 0 || !spec.in_regime() {
                            continue;
                        }
                        let spec = hyp(r, n, g, d, l, Monomial::chern_power(1, e_l as u32));
                        let cmp = compare_paths_with(&spec, &mut IntegralCache::default()).unwrap();
                        assert!(cmp.agree, "{spec:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn d_below_g_never_disagrees() {
        // d l > 2g - 2 and e_l >= 0 force d >= g once r < n, since r(n - r) >= n - 1
        for n in 1..=9usize {
            for r in 1..n {
                for g in 1..=6u32 {
                    for d in 0..g {
                        for l in 1..=9u32 {
                            let spec = hyp(r, n, g, d, l, Monomial::new());
                            assert!(!(spec.in_regime() && spec.twisted_dim() >= 0), "{spec:?}");
                        }
                    }
                }
            }
        }
        // G(n, n) admits such specs, but a_1 = 0 there, so both paths vanish
        let spec = hyp(2, 2, 2, 1, 3, Monomial::new());
        assert!(spec.in_regime());
        assert_eq!(spec.twisted_dim(), 0);
        let cmp = compare_paths_with(&spec, &mut IntegralCache::default()).unwrap();
        assert!(!cmp.agreement_expected);
        assert!(cmp.agree);
        assert!(cmp.phi.value.is_zero());
    }

    #[test]
    fn tevelev_cases() {
        // l = 1: no correction
        let rep = tevelev_compare(1, 2, 3, 1, 3).unwrap();
        assert_eq!(rep.implied_tev, rep.q.value);
        // l = 2: implied = 2^(2d - g + 1 - 2t) (r - 1)^g
        for (g, d, r, t) in [(0u32, 2u32, 3usize, 4u32), (1, 3, 3, 4), (0, 1, 5, 2)] {
            let spec = tevelev_setup(g, d, r, 2, t);
            let Ok(_) = spec else { continue };
            let rep = tevelev_compare(g, d, r, 2, t).unwrap();
            let expect = rational_pow(2, 2 * d as i64 - g as i64 + 1 - 2 * t as i64)
                * rational_pow(r as i64 - 1, g as i64);
            assert_eq!(rep.implied_tev, expect);
            assert_eq!(rep.q.value, tevelev_q_via_engine(g, d, r, 2, t).unwrap());
        }
        assert!(tevelev_compare(0, 2, 3, 2, 5).is_err());
        assert!(tevelev_compare(0, 2, 1, 1, 1).is_err());
    }

    #[test]
    fn tevelev_engine_route() {
        for r in 2..=4usize {
            for g in 0..=1u32 {
                for d in 1..=3u32 {
                    for l in 1..=r as u32 {
                        let probe = ProblemSpec::hypersurface(
                            GrassmannSpec::new(r, r + 1, g, d).unwrap(),
                            l,
                            Monomial::new(),
                        )
                        .unwrap();
                        let e_l = probe.twisted_dim();
                        if !probe.in_regime() || e_l <= 0 || e_l % (r as i64 - 1) != 0 {
                            continue;
                        }
                        let t = (e_l / (r as i64 - 1)) as u32;
                        let rep = tevelev_compare(g, d, r, l, t).unwrap();
                        assert_eq!(rep.q.value, tevelev_q_via_engine(g, d, r, l, t).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn advisor_labels() {
        let h = hyp(
            2,
            5,
            1,
            3,
            2,
            Monomial::chern_power(1, 3).with(InsertionKind::Chern(2), 3),
        );
        assert_eq!(
            enumerativity_advisor(&h).kind,
            Enumerativity::EnumerativeIfWeaklyConvex
        );
        // i = n - l is excluded for hypersurfaces
        let h = hyp(3, 5, 1, 3, 2, Monomial::chern_power(3, 1));
        assert_eq!(enumerativity_advisor(&h).kind, Enumerativity::VirtualOnly);
        // and allowed for complete intersections
        let base = GrassmannSpec::new(3, 6, 0, 3).unwrap();
        let ci = ProblemSpec::new(base, vec![1, 2], Monomial::chern_power(3, 1)).unwrap();
        assert_eq!(
            enumerativity_advisor(&ci).kind,
            Enumerativity::EnumerativeIfWeaklyConvex
        );
        let plain = ProblemSpec::new(base, vec![], Monomial::new()).unwrap();
        assert_eq!(
            enumerativity_advisor(&plain).kind,
            Enumerativity::EnumerativeIfWeaklyConvex
        );
        let bad = hyp(2, 4, 2, 1, 2, Monomial::new());
        assert_eq!(enumerativity_advisor(&bad).kind, Enumerativity::OutOfRegime);
    }

    #[test]
    fn linear_section_of_projective_space() {
        // X_1 in P^r = G(r, r+1) is P^{r-1} = G(r-1, r): both counts are r^g.
        for r in 2..=5usize {
            for g in 0..=2u32 {
                for d in g.max(1)..=3u32 {
                    let spec = hyp(r, r + 1, g, d, 1, Monomial::new());
                    let e_l = spec.twisted_dim();
                    if e_l < 0 || !spec.in_regime() {
                        continue;
                    }
                    let spec = hyp(r, r + 1, g, d, 1, Monomial::chern_power(1, e_l as u32));
                    let twisted = hypersurface_integral(&spec).unwrap().value;
                    let smaller = GrassmannSpec::new(r - 1, r, g, d).unwrap();
                    let e = smaller.virtual_dim();
                    let plain = vi_integral(&smaller, &Monomial::chern_power(1, e as u32))
                        .unwrap()
                        .value;
                    assert_eq!(twisted, plain);
                    assert_eq!(twisted, q((r as i64).pow(g)));
                }
            }
        }
    }
}
