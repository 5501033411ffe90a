//! Exact performance guarantees of the mechanisms and upper bounds on what
//! any impartial mechanism can achieve.
//!
//! `Delta` below is the maximum indegree of the graph; all values are exact
//! rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{rat, Rational};
use crate::graph::GraphClass;
use crate::{Error, Limits, Result};

fn check_delta(delta: usize) -> Result<()> {
    if delta == 0 {
        return Err(Error::Domain { name: "delta", value: 0 });
    }
    Ok(())
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidBlockCount(k));
    }
    Ok(())
}

fn ratio(num: BigUint, den: BigUint) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Guarantee of the 2-partition mechanism on graphs of maximum indegree
/// `delta`, as the binomial average of `min(delta/2, j)`.
pub fn alpha2_sum(delta: usize) -> Result<Rational> {
    check_delta(delta)?;
    // Doubled terms keep everything integral: min(delta, 2j).
    let mut binom = BigUint::one();
    let mut sum = BigUint::zero();
    for j in 0..=delta {
        if j > 0 {
            binom = binom * (delta - j + 1) / j;
        }
        sum += &binom * delta.min(2 * j);
    }
    let den = BigUint::from(2 * delta) << delta;
    Ok(ratio(sum, den))
}

/// Closed form of [`alpha2_sum`]: `1/4` at `delta = 1`,
/// `1/2 - C(delta, delta/2) / 2^(delta+2)` for even `delta`, and the value at
/// `delta - 1` for odd `delta >= 3`.
pub fn alpha2_closed(delta: usize) -> Result<Rational> {
    check_delta(delta)?;
    if delta == 1 {
        return Ok(rat(1, 4));
    }
    let even = delta - delta % 2;
    let central = central_binomial(even / 2);
    Ok(rat(1, 2) - ratio(central, BigUint::one() << (even + 2)))
}

/// `C(2m, m)`.
fn central_binomial(m: usize) -> BigUint {
    let mut c = BigUint::one();
    for i in 1..=m {
        c = c * (m + i) / i;
    }
    c
}

/// A composition of `delta` into `k` nonnegative parts together with its
/// multinomial coefficient `delta! / (v_1! ... v_k!)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    pub parts: Vec<usize>,
    pub multinomial: BigUint,
}

impl Composition {
    pub fn delta(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `z_j`: the sum of the parts before position `j` (1-based).
    pub fn prefix_sum(&self, j: usize) -> usize {
        self.parts[..j - 1].iter().sum()
    }
}

/// All compositions of `delta` into `k` parts in colexicographic order,
/// starting at `(delta, 0, ..., 0)` and ending at `(0, ..., 0, delta)`.
///
/// Each step changes at most three parts, and the multinomial coefficient
/// is updated by a single multiply and divide.
#[derive(Debug, Clone)]
pub struct Compositions {
    next: Option<Composition>,
}

impl Compositions {
    pub fn new(k: usize, delta: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidBlockCount(k));
        }
        let mut parts = vec![0; k];
        parts[0] = delta;
        Ok(Compositions { next: Some(Composition { parts, multinomial: BigUint::one() }) })
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        let v = &current.parts;
        let k = v.len();
        if let Some(i) = v.iter().position(|&x| x > 0).filter(|&i| i + 1 < k) {
            let t = v[i];
            let a = v[i + 1];
            let mut parts = v.clone();
            parts[i] = 0;
            parts[i + 1] = a + 1;
            parts[0] = t - 1;
            let multinomial = &current.multinomial * t / (a + 1);
            self.next = Some(Composition { parts, multinomial });
        }
        Some(current)
    }
}

/// Number of compositions of `delta` into `k` parts, `C(delta + k - 1, k - 1)`.
pub fn composition_count(k: usize, delta: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 1..k as u128 {
        c = match c.checked_mul(delta as u128 + i) {
            Some(x) => x / i,
            None => return u128::MAX,
        };
    }
    c
}

/// Guarantee of the k-partition mechanism on graphs of maximum indegree
/// `delta`: the multinomial average over compositions `v` of
/// `min_j ((k - j)/k * delta + j/k * z_j)`.
pub fn alpha_k(k: usize, delta: usize) -> Result<Rational> {
    alpha_k_with(k, delta, &Limits::DEFAULT)
}

pub fn alpha_k_with(k: usize, delta: usize, limits: &Limits) -> Result<Rational> {
    check_k(k)?;
    check_delta(delta)?;
    let count = composition_count(k, delta);
    if count > limits.compositions as u128 {
        return Err(Error::SizeGuard { what: "composition sum", required: count, limit: limits.compositions as u128 });
    }
    let mut sum = BigUint::zero();
    for c in Compositions::new(k, delta)? {
        // k times the inner term, minimized over j.
        let mut z = 0;
        let mut best = usize::MAX;
        for j in 1..=k {
            best = best.min((k - j) * delta + j * z);
            z += c.parts[j - 1];
        }
        sum += c.multinomial * best;
    }
    let den = BigUint::from(delta) * BigUint::from(k).pow(delta as u32) * BigUint::from(k);
    Ok(ratio(sum, den))
}

/// `alpha_k(2)` through its pair form:
/// `1 - k^-3 * sum over x1, x2 in 1..=k of max(max(x1, x2)/2, min(x1, x2))`.
pub fn alphak2_pairs(k: usize) -> Result<Rational> {
    check_k(k)?;
    let mut s: u128 = 0;
    for x1 in 1..=k as u128 {
        for x2 in 1..=k as u128 {
            s += x1.max(x2).max(2 * x1.min(x2));
        }
    }
    let den = 2 * (k as u128).pow(3);
    let g = s.gcd(&den);
    Ok(rat(1, 1) - Rational::new(BigInt::from(s / g), BigInt::from(den / g)))
}

/// The worst-case guarantee `(k - 1) / (2k)` of the k-partition mechanism.
pub fn kpartition_guarantee(k: usize) -> Result<Rational> {
    check_k(k)?;
    Ok(rat(k as u64 - 1, 2 * k as u64))
}

/// Best ratio any impartial mechanism can guarantee on class `class` with
/// `n` vertices, as far as known results go.
///
/// `n = 2` is refused for the restricted classes: there the only graph is
/// the 2-cycle and every mechanism is optimal, which no stated bound covers.
pub fn upper_bound(n: usize, class: GraphClass) -> Result<Rational> {
    let unsupported = Err(Error::UnsupportedBound { n, class });
    let n64 = n as u64;
    match class {
        GraphClass::All if n >= 2 => Ok(rat(1, 2)),
        GraphClass::NoAbstention if n == 3 => Ok(rat(3, 4)),
        GraphClass::NoAbstention if n >= 4 => Ok(rat(3 * n64 - 1, 4 * n64)),
        GraphClass::OutdegreeExactlyOne if n == 3 => Ok(rat(5, 6)),
        GraphClass::OutdegreeExactlyOne if n >= 6 && n % 2 == 0 => Ok(rat(6 * n64 - 1, 8 * n64)),
        GraphClass::OutdegreeExactlyOne if n >= 4 => Ok(rat(3, 4)),
        _ => unsupported,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneKind {
    Alpha2,
    AlphaK(usize),
}

/// Result of sweeping a guarantee over `delta = 1..=delta_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneReport {
    pub kind: MonotoneKind,
    pub values: Vec<Rational>,
    /// First `delta` at which the stated inequality fails.
    pub first_violation: Option<usize>,
}

impl MonotoneReport {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Checks `f(delta + 1) >= f(delta)`, and for `alpha2` also
/// `f(delta + 2) > f(delta)`.
pub fn check_monotone(kind: MonotoneKind, delta_max: usize) -> Result<MonotoneReport> {
    let values = (1..=delta_max)
        .map(|d| match kind {
            MonotoneKind::Alpha2 => alpha2_sum(d),
            MonotoneKind::AlphaK(k) => alpha_k(k, d),
        })
        .collect::<Result<Vec<_>>>()?;
    let mut first_violation = None;
    for i in 0..values.len() {
        let weak = values.get(i + 1).map_or(true, |next| *next >= values[i]);
        let strict = kind != MonotoneKind::Alpha2 || values.get(i + 2).map_or(true, |next| *next > values[i]);
        if !(weak && strict) {
            first_violation = Some(i + 1);
            break;
        }
    }
    Ok(MonotoneReport { kind, values, first_violation })
}

/// One row of an exported bound table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub bound_id: &'static str,
    pub k: Option<usize>,
    /// `delta` for guarantees, `n` for upper bounds.
    pub param: usize,
    pub class: Option<GraphClass>,
    pub value: Rational,
}

pub fn alpha2_table(deltas: impl IntoIterator<Item = usize>) -> Result<Vec<BoundRow>> {
    deltas
        .into_iter()
        .map(|d| Ok(BoundRow { bound_id: "alpha2", k: Some(2), param: d, class: None, value: alpha2_sum(d)? }))
        .collect()
}

pub fn alphak_table(k: usize, deltas: impl IntoIterator<Item = usize>) -> Result<Vec<BoundRow>> {
    deltas
        .into_iter()
        .map(|d| Ok(BoundRow { bound_id: "alphak", k: Some(k), param: d, class: None, value: alpha_k(k, d)? }))
        .collect()
}

pub fn upper_table(class: GraphClass, ns: impl IntoIterator<Item = usize>) -> Result<Vec<BoundRow>> {
    ns.into_iter()
        .map(|n| {
            Ok(BoundRow { bound_id: "upper", k: None, param: n, class: Some(class), value: upper_bound(n, class)? })
        })
        .collect()
}
