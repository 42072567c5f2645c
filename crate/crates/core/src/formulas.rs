//! Exact closed forms: counts of critical and maximal digraphs, and the
//! extremal arc bounds.
//!
//! Counts are unbounded integers. Bounds are at most quadratic in `n` and
//! fit comfortably in `u128`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{formula}: {reason}")]
pub struct DomainError {
    pub formula: &'static str,
    pub reason: String,
}

fn domain(formula: &'static str, ok: bool, reason: impl FnOnce() -> String) -> Result<(), DomainError> {
    if ok {
        Ok(())
    } else {
        Err(DomainError {
            formula,
            reason: reason(),
        })
    }
}

/// Binomial coefficient extended to negative arguments: `C(-1, -1) = 1`,
/// every other negative argument gives 0, and `C(0, j) = [j = 0]`.
pub fn binomial_ext(m: i64, j: i64) -> BigUint {
    if m == -1 && j == -1 {
        return BigUint::one();
    }
    if m < 0 || j < 0 || j > m {
        return BigUint::zero();
    }
    let j = j.min(m - j) as u64;
    let m = m as u64;
    let mut acc = BigUint::one();
    for i in 0..j {
        acc = acc * (m - i) / (i + 1);
    }
    acc
}

/// Stirling number of the second kind: partitions of a `u`-set into `v`
/// nonempty blocks.
pub fn stirling2(u: u64, v: u64) -> BigUint {
    if v > u {
        return BigUint::zero();
    }
    // Row-by-row recurrence S(i, j) = j S(i-1, j) + S(i-1, j-1).
    let v = v as usize;
    let mut row = vec![BigUint::zero(); v + 1];
    row[0] = BigUint::one();
    for _ in 0..u {
        for j in (1..=v).rev() {
            let carried = std::mem::take(&mut row[j]) * j + &row[j - 1];
            row[j] = carried;
        }
        row[0] = BigUint::zero();
    }
    std::mem::take(&mut row[v])
}

fn factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, i| acc * i)
}

fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// Closed-form counts of critical and maximal digraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountFormula {
    /// Isomorphism classes of `d`-critical digraphs with `d` infinite and
    /// `k` bicomponents.
    Beta,
    /// Labeled version of `Beta`.
    LabeledDCritical,
    /// Isomorphism classes of `d_m`-critical digraphs with `d_m` infinite.
    Q,
    /// Labeled version of `Q`.
    QStar,
    /// Isomorphism classes of `r`-critical digraphs with `r` infinite.
    NuR,
    /// Labeled version of `NuR`.
    NuRStar,
    /// Isomorphism classes of `r_m`-critical digraphs with `r_m` infinite.
    PiRm,
    /// Labeled version of `PiRm`.
    XiRm,
    /// Isomorphism classes of maximal digraphs of radius `k`.
    MaxRadiusIso,
    /// Labeled maximal digraphs of radius `k`.
    Chi,
    /// Isomorphism classes of maximal digraphs of quasi-diameter `k`.
    NuDm,
    /// Labeled maximal digraphs of quasi-diameter `k`.
    MuDm,
}

impl CountFormula {
    pub const ALL: [CountFormula; 12] = [
        CountFormula::Beta,
        CountFormula::LabeledDCritical,
        CountFormula::Q,
        CountFormula::QStar,
        CountFormula::NuR,
        CountFormula::NuRStar,
        CountFormula::PiRm,
        CountFormula::XiRm,
        CountFormula::MaxRadiusIso,
        CountFormula::Chi,
        CountFormula::NuDm,
        CountFormula::MuDm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CountFormula::Beta => "beta",
            CountFormula::LabeledDCritical => "labeled_d_critical",
            CountFormula::Q => "q",
            CountFormula::QStar => "q_star",
            CountFormula::NuR => "nu_r",
            CountFormula::NuRStar => "nu_r_star",
            CountFormula::PiRm => "pi_rm",
            CountFormula::XiRm => "xi_rm",
            CountFormula::MaxRadiusIso => "max_radius_iso",
            CountFormula::Chi => "chi",
            CountFormula::NuDm => "nu_dm",
            CountFormula::MuDm => "mu_dm",
        }
    }
}

impl fmt::Display for CountFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CountFormula {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.replace('-', "_").to_ascii_lowercase();
        CountFormula::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| format!("unknown count formula {s:?}"))
    }
}

/// Extremal arc counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundFormula {
    /// Infinite diameter with `k` bicomponents: `n(n-k) + (k^2-k)/2`.
    InfD,
    /// Infinite quasi-diameter with `k >= 3` bicomponents:
    /// `n(n-k) + (k^2-k)/2 - 1`.
    InfDm,
    /// Infinite quasi-diameter, any number of bicomponents: `n^2 - 3n + 2`.
    InfDmAny,
    /// Infinite radius with `k` bicomponents.
    Lambda,
    /// Infinite radius, any number of bicomponents: `(n-1)(n-2)`.
    InfRAny,
    /// Infinite quasi-radius with `k` bicomponents:
    /// `n(n-k-1) + floor(k^2/2)`.
    InfRm,
    /// Radius `k`.
    G,
    /// Quasi-diameter `k`.
    F,
    /// Quasi-diameter `k` on exactly `k + 1` vertices: `(k^2+k)/2`.
    PathQd,
}

impl BoundFormula {
    pub const ALL: [BoundFormula; 9] = [
        BoundFormula::InfD,
        BoundFormula::InfDm,
        BoundFormula::InfDmAny,
        BoundFormula::Lambda,
        BoundFormula::InfRAny,
        BoundFormula::InfRm,
        BoundFormula::G,
        BoundFormula::F,
        BoundFormula::PathQd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundFormula::InfD => "inf_d",
            BoundFormula::InfDm => "inf_dm",
            BoundFormula::InfDmAny => "inf_dm_any",
            BoundFormula::Lambda => "lambda",
            BoundFormula::InfRAny => "inf_r_any",
            BoundFormula::InfRm => "inf_rm",
            BoundFormula::G => "g",
            BoundFormula::F => "f",
            BoundFormula::PathQd => "path_qd",
        }
    }
}

impl fmt::Display for BoundFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundFormula {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.replace('-', "_").to_ascii_lowercase();
        BoundFormula::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| format!("unknown bound formula {s:?}"))
    }
}

fn bicomponent_range(formula: &'static str, n: u64, k: u64, min_k: u64) -> Result<(), DomainError> {
    domain(formula, min_k <= k && k <= n, || {
        format!("needs {min_k} <= k <= n, got n = {n}, k = {k}")
    })
}

fn finite_value_range(formula: &'static str, n: u64, k: u64, min_k: u64) -> Result<(), DomainError> {
    domain(formula, min_k <= k && k < n, || {
        format!("needs {min_k} <= k < n, got n = {n}, k = {k}")
    })
}

pub fn count_closed_form(name: CountFormula, n: u64, k: u64) -> Result<BigUint, DomainError> {
    let f = name.name();
    match name {
        CountFormula::Beta => {
            bicomponent_range(f, n, k, 2)?;
            Ok(binomial_ext(n as i64 - 1, k as i64 - 1))
        }
        CountFormula::LabeledDCritical => {
            bicomponent_range(f, n, k, 2)?;
            Ok(factorial(k) * stirling2(n, k))
        }
        CountFormula::Q | CountFormula::NuR => {
            bicomponent_range(f, n, k, 2)?;
            if k == 2 {
                return Ok(big(n / 2));
            }
            let sum = two_source_classes(n, k);
            Ok(if name == CountFormula::Q { sum * (k - 1) } else { sum })
        }
        CountFormula::QStar | CountFormula::NuRStar => {
            bicomponent_range(f, n, k, 2)?;
            if k == 2 {
                return Ok(pow2(n - 1) - 1u32);
            }
            let sum = two_source_labeled(n, k);
            Ok(if name == CountFormula::QStar { sum * (k - 1) } else { sum })
        }
        CountFormula::PiRm => {
            bicomponent_range(f, n, k, 2)?;
            Ok(block_sum(n, k, false))
        }
        CountFormula::XiRm => {
            bicomponent_range(f, n, k, 2)?;
            Ok(block_sum(n, k, true))
        }
        CountFormula::MaxRadiusIso => {
            finite_value_range(f, n, k, 3)?;
            Ok(big((n - k - 1) * (k - 2) + 1))
        }
        CountFormula::Chi => {
            finite_value_range(f, n, k, 1)?;
            match k {
                1 => Ok(BigUint::one()),
                2 => Ok(big(n - 1).pow(n as u32)),
                _ => labeled_max_radius(n, k),
            }
        }
        CountFormula::NuDm => {
            finite_value_range(f, n, k, 1)?;
            match k {
                1 | 2 => Ok(BigUint::one()),
                3 => {
                    // (n-3)(n+4)/2 + sum_{t=1}^{n-4} floor(t/2)(n-t-1) + floor((n-3)/2)
                    let mut acc = big((n - 3) * (n + 4) / 2);
                    for t in 1..=n.saturating_sub(4) {
                        acc += big((t / 2) * (n - t - 1));
                    }
                    Ok(acc + big((n - 3) / 2))
                }
                _ => Ok(big(2 * (n - k - 1) * (k - 2) + 2)),
            }
        }
        CountFormula::MuDm => {
            finite_value_range(f, n, k, 1)?;
            match k {
                1 => Ok(BigUint::one()),
                2 => Ok(big(n * (n - 1) / 2)),
                3 => Ok(big(n * (n - 1)) * (pow2(2 * n - 5) - 2u32)),
                _ => Ok(labeled_max_radius(n, k)? * 2u32),
            }
        }
    }
}

/// `sum_{t=2}^{n-k+2} floor(t/2) C(n-t-1, k-3)`: two incomparable
/// bicomponents share `t` vertices, the other `k - 2` take the rest.
fn two_source_classes(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::zero();
    for t in 2..=(n + 2 - k) {
        acc += binomial_ext(n as i64 - t as i64 - 1, k as i64 - 3) * (t / 2);
    }
    acc
}

/// `sum_{t=2}^{n-k+2} C(n, t) (2^{t-1} - 1) (k-2)! S(n-t, k-2)`.
fn two_source_labeled(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::zero();
    for t in 2..=(n + 2 - k) {
        acc += binomial_ext(n as i64, t as i64)
            * (pow2(t - 1) - 1u32)
            * factorial(k - 2)
            * stirling2(n - t, k - 2);
    }
    acc
}

/// `(k-1) k! C(n,k) + (k-2)(k-1)! C(n,k-1) (2^{n-k+1} - 2n + 2k - 4)`.
/// The last factor is negative at `n = k + 1`, so this runs signed.
fn labeled_max_radius(n: u64, k: u64) -> Result<BigUint, DomainError> {
    let first = BigInt::from(factorial(k) * (k - 1) * binomial_ext(n as i64, k as i64));
    let tail = BigInt::from(pow2(n - k + 1)) - BigInt::from(2 * n) + BigInt::from(2 * k) - 4;
    let second = BigInt::from(factorial(k - 1) * (k - 2) * binomial_ext(n as i64, k as i64 - 1)) * tail;
    let total: BigInt = first + second;
    total.to_biguint().ok_or(DomainError {
        formula: "chi",
        reason: format!("evaluates to a negative number at n = {n}, k = {k}"),
    })
}

/// Sum over ordered compositions of `t` into `s` parts, each at least 2, of
/// a product of per-part weights. For the labeled count the multinomial
/// `t! / (p_1! ... p_s!)` is folded in by choosing each part's vertices
/// from those still unassigned.
fn composition_sum(t: u64, s: u64, labeled: bool) -> BigUint {
    // table[j][u]: sum over compositions of u into j parts.
    let t = t as usize;
    let mut prev = vec![BigUint::zero(); t + 1];
    prev[0] = BigUint::one();
    for _ in 0..s {
        let mut next = vec![BigUint::zero(); t + 1];
        for u in 0..=t {
            if prev[u].is_zero() {
                continue;
            }
            for p in 2..=(t - u) {
                let w = if labeled {
                    // Choose the p vertices of this part out of the t - u
                    // not yet used, then split them into two unordered
                    // nonempty bicomponents.
                    binomial_ext((t - u) as i64, p as i64) * (pow2(p as u64 - 1) - 1u32)
                } else {
                    big(p as u64 / 2)
                };
                next[u + p] += &prev[u] * w;
            }
        }
        prev = next;
    }
    std::mem::take(&mut prev[t])
}

/// The quasi-radius count: blocks of the Hertz graph, `l` of them, exactly
/// `s` with two vertices, `t` digraph vertices inside the two-vertex blocks.
fn block_sum(n: u64, k: u64, labeled: bool) -> BigUint {
    let (n, k) = (n as i64, k as i64);
    let mut acc = BigUint::zero();
    for l in 1..=k / 2 {
        for s in (3 * l - k).max(0)..=l {
            let shapes = binomial_ext(l, s) * binomial_ext(k - 2 * l - 1, l - s - 1);
            if shapes.is_zero() {
                continue;
            }
            for t in 2 * s..=(n - k + 2 * s) {
                let rest = if labeled {
                    binomial_ext(n, n - t)
                        * factorial((k - 2 * s) as u64)
                        * stirling2((n - t) as u64, (k - 2 * s) as u64)
                } else {
                    binomial_ext(n - t - 1, k - 2 * s - 1)
                };
                if rest.is_zero() {
                    continue;
                }
                acc += &shapes * rest * composition_sum(t as u64, s as u64, labeled);
            }
        }
    }
    acc
}

/// The four-term sum for labeled maximal digraphs of quasi-diameter 3,
/// evaluated independently of the single closed form.
pub fn mu_dm3_term_sum(n: u64) -> Result<BigUint, DomainError> {
    domain("mu_dm", n >= 4, || format!("the term sum needs n >= 4, got n = {n}"))?;
    let nn = BigInt::from(n * (n - 1));
    let p2 = |e: i64| -> BigInt { BigInt::from(pow2(e as u64)) };
    let n = n as i64;
    let mut acc: BigInt = &nn * (p2(n - 1) - 4) + &nn * 2 * (p2(n - 3) - 1);
    for t in 2..=n - 3 {
        acc += &nn * 2 * BigInt::from(binomial_ext(n - 2, t)) * (p2(t) - 2);
    }
    for t in 2..=n - 4 {
        acc += &nn * BigInt::from(binomial_ext(n - 2, t)) * (p2(t - 1) - 1) * (p2(n - t - 2) - 2);
    }
    acc.to_biguint().ok_or(DomainError {
        formula: "mu_dm",
        reason: "term sum is negative".into(),
    })
}

pub fn bound_closed_form(name: BoundFormula, n: u64, k: u64) -> Result<u128, DomainError> {
    let f = name.name();
    let (ni, ki) = (n as i128, k as i128);
    let value: i128 = match name {
        BoundFormula::InfD => {
            bicomponent_range(f, n, k, 2)?;
            ni * (ni - ki) + (ki * ki - ki) / 2
        }
        BoundFormula::InfDm => {
            bicomponent_range(f, n, k, 3)?;
            ni * (ni - ki) + (ki * ki - ki) / 2 - 1
        }
        BoundFormula::InfDmAny => {
            domain(f, n >= 2, || format!("needs n >= 2, got n = {n}"))?;
            ni * ni - 3 * ni + 2
        }
        BoundFormula::Lambda => {
            bicomponent_range(f, n, k, 2)?;
            if k == 2 {
                (ni - 1) * (ni - 2)
            } else {
                ni * (ni - ki) + (ki * ki - ki - 2) / 2
            }
        }
        BoundFormula::InfRAny => {
            domain(f, n >= 2, || format!("needs n >= 2, got n = {n}"))?;
            (ni - 1) * (ni - 2)
        }
        BoundFormula::InfRm => {
            bicomponent_range(f, n, k, 2)?;
            ni * (ni - ki - 1) + ki * ki / 2
        }
        BoundFormula::G | BoundFormula::F => {
            finite_value_range(f, n, k, 1)?;
            match k {
                1 => ni * (ni - 1),
                2 if name == BoundFormula::G => ni * (ni - 2),
                2 => ni * (ni - 1) - 2,
                _ => ni * (ni - ki) + (ki * ki - ki - 2) / 2,
            }
        }
        BoundFormula::PathQd => {
            domain(f, k >= 3 && n == k + 1, || {
                format!("needs k >= 3 and n = k + 1, got n = {n}, k = {k}")
            })?;
            (ki * ki + ki) / 2
        }
    };
    Ok(u128::try_from(value).expect("bounds are nonnegative on their domains"))
}

/// Upper bound on the arcs of a radius-`k` digraph whose center path has
/// its first `t` vertices in the center's bicomponent, `s` further
/// vertices sharing that bicomponent.
pub fn center_path_bound(n: u64, k: u64, s: u64, t: u64) -> Result<i128, DomainError> {
    domain("center_path_bound", k >= 3, || format!("needs k >= 3, got k = {k}"))?;
    domain("center_path_bound", (1..=k).contains(&t), || {
        format!("needs 1 <= t <= k, got t = {t}, k = {k}")
    })?;
    domain("center_path_bound", n > k && s < n - k, || {
        format!("needs 0 <= s <= n - k - 1, got s = {s}, n = {n}, k = {k}")
    })?;
    let (n, k, s, t) = (n as i128, k as i128, s as i128, t as i128);
    let base = n * (n - k) + (k * k - k - 2) / 2;
    let bracket = -n * (s + t + 2) + s * s + t * s + t * t + 3 * k + 2
        + (n - k - s - 1) * t.max(3)
        + s * k.max(t + 2);
    Ok(base + bracket)
}
