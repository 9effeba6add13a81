//! Arithmetic in `K[w]/(w^n - 1)` for a fixed order `n`.
//!
//! Elements are dense coefficient vectors of length `n`, `coeffs[k]` being the
//! coefficient of `w^k`. All intermediate arithmetic stays in this ring; the
//! reduction modulo the cyclotomic polynomial `Phi_n` happens only when a value
//! is pulled back out as a scalar ([`Cyc::extract_rational`]) or when an
//! inverse is checked ([`Cyc::reduce_mod_phi`]).
//!
//! The ring `K[w]/(w^n - 1)` has zero divisors. The one inverse the rest of the
//! crate needs, that of `1 - w^m`, is therefore only an inverse after
//! reduction modulo `Phi_n`, which is where every value is finally read.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq)]
pub struct Cyc<T> {
    order: usize,
    coeffs: Vec<T>,
}

/// A scalar read out of a [`Cyc`] that was certified to lie in the base field.
#[derive(Clone, Debug, PartialEq)]
pub struct CycRational<T> {
    value: T,
}

impl<T> CycRational<T> {
    pub fn value(&self) -> &T {
        &self.value
    }

    pub fn into_inner(self) -> T {
        self.value
    }
}

impl<T: Scalar> Cyc<T> {
    pub fn zero(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Cyc {
            order,
            coeffs: vec![T::zero(); order],
        })
    }

    pub fn one(order: usize) -> Result<Self> {
        Self::from_scalar(order, T::one())
    }

    /// Embeds a scalar as `c * w^0`.
    pub fn from_scalar(order: usize, c: T) -> Result<Self> {
        let mut z = Self::zero(order)?;
        z.coeffs[0] = c;
        Ok(z)
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroOrder);
        }
        Ok(Cyc {
            order: coeffs.len(),
            coeffs,
        })
    }

    /// `w^(a mod n)`.
    pub fn root_of_unity(order: usize, a: i64) -> Result<Self> {
        let mut z = Self::zero(order)?;
        z.coeffs[wrap(a, order)] = T::one();
        Ok(z)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            a.sub_assign_ref(b);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order;
        let mut out = vec![T::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = if i + j >= n { i + j - n } else { i + j };
                out[k].add_assign_ref(&a.mul_ref(b));
            }
        }
        Ok(Cyc {
            order: n,
            coeffs: out,
        })
    }

    /// In-place `self += other`. Orders must agree.
    pub fn add_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.order, other.order, "cyclotomic order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                a.add_assign_ref(b);
            }
        }
    }

    pub fn scalar_mul(&self, c: &T) -> Self {
        Cyc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// `self * w^a`, a cyclic shift of the coefficients.
    pub fn mul_root(&self, a: i64) -> Self {
        let n = self.order;
        let shift = wrap(a, n);
        let mut coeffs = vec![T::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            let idx = if k + shift >= n {
                k + shift - n
            } else {
                k + shift
            };
            coeffs[idx] = c.clone();
        }
        Cyc { order: n, coeffs }
    }

    /// `self * (w^a - w^b)` in `O(n)` operations.
    pub fn mul_root_difference(&self, a: i64, b: i64) -> Self {
        let n = self.order;
        let (sa, sb) = (wrap(a, n), wrap(b, n));
        let mut coeffs = vec![T::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ia = (k + sa) % n;
            let ib = (k + sb) % n;
            coeffs[ia].add_assign_ref(c);
            coeffs[ib].sub_assign_ref(c);
        }
        Cyc { order: n, coeffs }
    }

    /// Binary exponentiation.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut result = Cyc::one(self.order).expect("order is positive");
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Inverse of `1 - w^m`, valid modulo `Phi_n`.
    ///
    /// Uses `prod_{k=1}^{n-1} (1 - w^k) = n` in `Q(w)`, so the inverse is
    /// `(1/n) * prod_{k != m} (1 - w^k)`. Fails over non-field scalars.
    pub fn inv_one_minus_root(order: usize, m: i64) -> Result<Self> {
        if !T::FIELD {
            return Err(Error::NotInvertible { n: order, m });
        }
        let scaled = Self::scaled_inv_one_minus_root(order, m)?;
        Ok(scaled.scalar_mul(&(T::one() / T::from_i64(order as i64))))
    }

    /// `n (1 - w^m)^(-1) = prod_{k != 0, m} (1 - w^k)`, which needs no division.
    pub fn scaled_inv_one_minus_root(order: usize, m: i64) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let target = wrap(m, order);
        if target == 0 {
            return Err(Error::NotInvertible { n: order, m });
        }
        let mut acc = Self::one(order)?;
        for k in 1..order {
            if k != target {
                // (1 - w^k) = (w^0 - w^k)
                acc = acc.mul_root_difference(0, k as i64);
            }
        }
        Ok(acc)
    }

    /// Remainder of the representative polynomial modulo `Phi_n`, as a
    /// coefficient vector of length `deg Phi_n`.
    pub fn reduce_mod_phi(&self) -> Vec<T> {
        let phi: Vec<T> = cyclotomic_polynomial(self.order)
            .iter()
            .map(T::from_bigint)
            .collect();
        let deg = phi.len() - 1;
        let mut rem = self.coeffs.clone();
        for top in (deg..rem.len()).rev() {
            let lead = rem[top].clone();
            if lead.is_zero() {
                continue;
            }
            let base = top - deg;
            for (j, p) in phi.iter().enumerate() {
                if !p.is_zero() {
                    rem[base + j].sub_assign_ref(&lead.mul_ref(p));
                }
            }
        }
        rem.truncate(deg);
        rem
    }

    /// Reads the element as a scalar, failing if its residue modulo `Phi_n`
    /// is not constant.
    pub fn extract_rational(&self) -> Result<CycRational<T>> {
        let rem = self.reduce_mod_phi();
        let scale = self
            .coeffs
            .iter()
            .map(Scalar::magnitude)
            .fold(0.0, f64::max);
        if let Some(degree) = (1..rem.len()).rev().find(|&k| !rem[k].is_negligible(scale)) {
            return Err(Error::NotRational { degree });
        }
        Ok(CycRational {
            value: rem.into_iter().next().unwrap_or_else(T::zero),
        })
    }

    /// Equality after reduction modulo `Phi_n`, i.e. equality as elements of
    /// the cyclotomic field.
    pub fn eq_mod_phi(&self, other: &Self) -> bool {
        if self.order != other.order {
            return false;
        }
        let scale = self
            .coeffs
            .iter()
            .chain(&other.coeffs)
            .map(Scalar::magnitude)
            .fold(0.0, f64::max);
        let diff = self.checked_sub(other).expect("orders checked");
        diff.reduce_mod_phi().iter().all(|c| c.is_negligible(scale))
    }
}

fn wrap(a: i64, n: usize) -> usize {
    a.rem_euclid(n as i64) as usize
}

/// `Phi_n`, low-order coefficient first. Computed as `x^n - 1` divided by
/// `Phi_d` for every proper divisor `d` of `n`.
///
/// # Panics
/// If `n == 0`.
pub fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    let mut num = vec![BigInt::zero(); n + 1];
    num[0] = -BigInt::one();
    num[n] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = div_exact_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for top in (dd..num.len()).rev() {
        let c = rem[top].clone();
        if c.is_zero() {
            continue;
        }
        quot[top - dd] = c.clone();
        for (j, p) in den.iter().enumerate() {
            rem[top - dd + j] -= &c * p;
        }
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

impl<T: Scalar> fmt::Debug for Cyc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                _ => write!(f, "({c})w^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " [mod w^{} - 1]", self.order)
    }
}

impl<T: Scalar> Add for &Cyc<T> {
    type Output = Cyc<T>;

    /// # Panics
    /// On mismatched orders; use [`Cyc::checked_add`] to get an error instead.
    fn add(self, rhs: Self) -> Cyc<T> {
        self.checked_add(rhs).expect("cyclotomic order mismatch")
    }
}

impl<T: Scalar> Sub for &Cyc<T> {
    type Output = Cyc<T>;

    fn sub(self, rhs: Self) -> Cyc<T> {
        self.checked_sub(rhs).expect("cyclotomic order mismatch")
    }
}

impl<T: Scalar> Mul for &Cyc<T> {
    type Output = Cyc<T>;

    fn mul(self, rhs: Self) -> Cyc<T> {
        self.checked_mul(rhs).expect("cyclotomic order mismatch")
    }
}

impl<T: Scalar> Neg for &Cyc<T> {
    type Output = Cyc<T>;

    fn neg(self) -> Cyc<T> {
        Cyc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}
