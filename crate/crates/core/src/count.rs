//! Exact evaluation of the counting recurrences, with memoization and
//! redundant evaluation routes asserted against each other.
//!
//! Six uniform families are tracked: `t_lin`/`s_lin`/`ps_lin` count
//! tau-tilting, support tau-tilting and proper support tau-tilting modules
//! over the linear uniform algebras, and `t_cyc`/`s_cyc`/`ps_cyc` do the
//! same over the cyclic uniform algebras. Conventions: `t(0) = s(0) = 1`,
//! every linear family vanishes for `n < 0`, and the cyclic families are
//! defined only for `n >= 1`.
//!
//! Wherever a second exact route exists it is evaluated and compared at
//! computation time:
//! * `t_cyc`: weighted convolution against `t_lin` versus the order-r linear
//!   recurrence in `t_cyc` itself (the latter applies once `n > r`, where it
//!   references no undefined seed).
//! * `s_lin`: the order-r recurrence versus the full convolution with
//!   `t_lin`.
//! * `s_cyc`: `ps_cyc + t_cyc` versus the order-r recurrence (again for
//!   `n > r`).
//! * general Kupisch series: the two vertex-split convolutions for the
//!   proper support count must agree.

use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::RwLock;

/// Identifier of a uniform counting family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    TLin,
    SLin,
    PsLin,
    TCyc,
    SCyc,
    PsCyc,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::TLin,
        Family::SLin,
        Family::PsLin,
        Family::TCyc,
        Family::SCyc,
        Family::PsCyc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::TLin => "t_lin",
            Family::SLin => "s_lin",
            Family::PsLin => "ps_lin",
            Family::TCyc => "t_cyc",
            Family::SCyc => "s_cyc",
            Family::PsCyc => "ps_cyc",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Cyclic families reject `n <= 0`; linear families extend by zero.
    pub fn is_cyclic(self) -> bool {
        matches!(self, Family::TCyc | Family::SCyc | Family::PsCyc)
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Memoizing arbitrary-precision counting engine.
///
/// All methods take `&self`; the memo tables sit behind locks and inserts
/// are idempotent (a key is only ever associated with one value), so the
/// engine can be shared across threads freely.
pub struct CountEngine {
    catalan: RwLock<Vec<BigUint>>,
    uniform: RwLock<HashMap<(Family, u32, i64), BigUint>>,
    tau_kup: RwLock<HashMap<Vec<u32>, BigUint>>,
    s_kup: RwLock<HashMap<Vec<u32>, BigUint>>,
}

impl Default for CountEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl CountEngine {
    pub fn new() -> Self {
        CountEngine {
            catalan: RwLock::new(vec![BigUint::one()]),
            uniform: RwLock::new(HashMap::new()),
            tau_kup: RwLock::new(HashMap::new()),
            s_kup: RwLock::new(HashMap::new()),
        }
    }

    /// The `i`-th Catalan number, computed from the binomial formula and
    /// cross-checked against the convolution recurrence.
    pub fn catalan(&self, i: usize) -> BigUint {
        self.ensure_catalan(i);
        self.catalan.read().unwrap()[i].clone()
    }

    fn ensure_catalan(&self, upto: usize) {
        if self.catalan.read().unwrap().len() > upto {
            return;
        }
        let mut table = self.catalan.write().unwrap();
        for k in table.len()..=upto {
            let via_binomial = binomial(2 * k as u64, k as u64) / BigUint::from(k as u64 + 1);
            let via_convolution: BigUint =
                (1..=k).map(|i| &table[i - 1] * &table[k - i]).sum();
            assert_eq!(
                via_binomial, via_convolution,
                "Catalan routes disagree at index {k}"
            );
            table.push(via_binomial);
        }
    }

    fn get(&self, family: Family, r: u32, n: i64) -> Option<BigUint> {
        self.uniform.read().unwrap().get(&(family, r, n)).cloned()
    }

    fn put(&self, family: Family, r: u32, n: i64, value: BigUint) {
        self.uniform.write().unwrap().entry((family, r, n)).or_insert(value);
    }

    /// Pre-populate a memo entry, e.g. from a persisted cache. Computed
    /// values already present win.
    pub fn preload(&self, family: Family, r: u32, n: i64, value: BigUint) {
        self.put(family, r, n, value);
    }

    /// All memoized uniform-family values, sorted by key.
    pub fn snapshot(&self) -> Vec<(Family, u32, i64, BigUint)> {
        let mut out: Vec<_> = self
            .uniform
            .read()
            .unwrap()
            .iter()
            .map(|(&(f, r, n), v)| (f, r, n, v.clone()))
            .collect();
        out.sort_by_key(|&(f, r, n, _)| (f, r, n));
        out
    }

    /// Uniform dispatch used by the CLI. Rejects `r < 1` and, for the
    /// cyclic families, `n < 1`.
    pub fn count(&self, family: Family, r: i64, n: i64) -> Result<BigUint> {
        if r < 1 {
            return Err(Error::InvalidInput(format!("{family} requires r >= 1, got {r}")));
        }
        let r = r as u32;
        if family.is_cyclic() && n < 1 {
            return Err(Error::InvalidInput(format!(
                "{family} is undefined for n = {n}; cyclic counts need n >= 1"
            )));
        }
        match family {
            Family::TLin => Ok(self.t_lin(r, n)),
            Family::SLin => self.s_lin(r, n),
            Family::PsLin => self.ps_lin(r, n),
            Family::TCyc => self.t_cyc(r, n),
            Family::SCyc => self.s_cyc(r, n),
            Family::PsCyc => self.ps_cyc(r, n),
        }
    }

    /// Number of tau-tilting modules over the linear uniform algebra:
    /// `t(n) = sum_{i=1..r} C_{i-1} t(n-i)` with `t(0) = 1`.
    pub fn t_lin(&self, r: u32, n: i64) -> BigUint {
        assert!(r >= 1);
        if n < 0 {
            return BigUint::zero();
        }
        if let Some(v) = self.get(Family::TLin, r, n) {
            return v;
        }
        self.ensure_catalan(r as usize - 1);
        for m in 0..=n {
            if self.get(Family::TLin, r, m).is_some() {
                continue;
            }
            let value = if m == 0 {
                BigUint::one()
            } else {
                let mut acc = BigUint::zero();
                for i in 1..=(r as i64).min(m) {
                    acc += self.catalan(i as usize - 1)
                        * self.get(Family::TLin, r, m - i).unwrap();
                }
                acc
            };
            self.put(Family::TLin, r, m, value);
        }
        self.get(Family::TLin, r, n).unwrap()
    }

    /// Number of tau-tilting modules over the cyclic uniform algebra, via
    /// the weighted convolution `sum_i i C_{i-1} t(n-i)`; for `n > r` the
    /// order-r recurrence in the cyclic counts themselves is evaluated as a
    /// second route and compared.
    pub fn t_cyc(&self, r: u32, n: i64) -> Result<BigUint> {
        assert!(r >= 1);
        if n < 1 {
            return Err(Error::InvalidInput(format!(
                "t_cyc is undefined for n = {n}; cyclic counts need n >= 1"
            )));
        }
        if let Some(v) = self.get(Family::TCyc, r, n) {
            return Ok(v);
        }
        self.ensure_catalan(r as usize - 1);
        for m in 1..=n {
            if self.get(Family::TCyc, r, m).is_some() {
                continue;
            }
            let mut value = BigUint::zero();
            for i in 1..=(r as i64).min(m) {
                value += BigUint::from(i as u64)
                    * self.catalan(i as usize - 1)
                    * self.t_lin(r, m - i);
            }
            if m > r as i64 {
                let mut alt = BigUint::zero();
                for i in 1..=r as i64 {
                    alt += self.catalan(i as usize - 1)
                        * self.get(Family::TCyc, r, m - i).unwrap();
                }
                if alt != value {
                    return Err(Error::Inconsistent(format!(
                        "t_cyc routes disagree at r={r}, n={m}: {value} vs {alt}"
                    )));
                }
            }
            self.put(Family::TCyc, r, m, value);
        }
        Ok(self.get(Family::TCyc, r, n).unwrap())
    }

    /// Number of support tau-tilting modules over the linear uniform
    /// algebra: `s(n) = 2 s(n-1) + sum_{i=2..r} C_{i-1} s(n-i)`, checked
    /// against the convolution `sum_{i=1..n} t(i-1) s(n-i) + t(n)`.
    pub fn s_lin(&self, r: u32, n: i64) -> Result<BigUint> {
        assert!(r >= 1);
        if n < 0 {
            return Ok(BigUint::zero());
        }
        if let Some(v) = self.get(Family::SLin, r, n) {
            return Ok(v);
        }
        self.ensure_catalan(r as usize - 1);
        for m in 0..=n {
            if self.get(Family::SLin, r, m).is_some() {
                continue;
            }
            let value = if m == 0 {
                BigUint::one()
            } else {
                let mut acc = BigUint::from(2u32) * self.get(Family::SLin, r, m - 1).unwrap();
                for i in 2..=(r as i64).min(m) {
                    acc += self.catalan(i as usize - 1)
                        * self.get(Family::SLin, r, m - i).unwrap();
                }
                acc
            };
            let mut convolution = self.t_lin(r, m);
            for i in 1..=m {
                convolution += self.t_lin(r, i - 1) * self.get(Family::SLin, r, m - i).unwrap();
            }
            if convolution != value {
                return Err(Error::Inconsistent(format!(
                    "s_lin routes disagree at r={r}, n={m}: {value} vs {convolution}"
                )));
            }
            self.put(Family::SLin, r, m, value);
        }
        Ok(self.get(Family::SLin, r, n).unwrap())
    }

    /// Proper support tau-tilting count over the linear uniform algebra.
    pub fn ps_lin(&self, r: u32, n: i64) -> Result<BigUint> {
        if n < 0 {
            return Ok(BigUint::zero());
        }
        if let Some(v) = self.get(Family::PsLin, r, n) {
            return Ok(v);
        }
        let s = self.s_lin(r, n)?;
        let t = self.t_lin(r, n);
        let value = checked_sub(&s, &t, "ps_lin", r, n)?;
        self.put(Family::PsLin, r, n, value.clone());
        Ok(value)
    }

    /// Proper support tau-tilting count over the cyclic uniform algebra:
    /// `sum_{i=1..n-1} i t(i-1) s(n-i-1) + n t(n-1)` in the linear counts.
    pub fn ps_cyc(&self, r: u32, n: i64) -> Result<BigUint> {
        assert!(r >= 1);
        if n < 1 {
            return Err(Error::InvalidInput(format!(
                "ps_cyc is undefined for n = {n}; cyclic counts need n >= 1"
            )));
        }
        if let Some(v) = self.get(Family::PsCyc, r, n) {
            return Ok(v);
        }
        let mut value = BigUint::from(n as u64) * self.t_lin(r, n - 1);
        for i in 1..=n - 1 {
            value += BigUint::from(i as u64) * self.t_lin(r, i - 1) * self.s_lin(r, n - i - 1)?;
        }
        self.put(Family::PsCyc, r, n, value.clone());
        Ok(value)
    }

    /// Support tau-tilting count over the cyclic uniform algebra, as
    /// `ps_cyc + t_cyc`; for `n > r` the order-r recurrence is evaluated as
    /// a second route and compared.
    pub fn s_cyc(&self, r: u32, n: i64) -> Result<BigUint> {
        assert!(r >= 1);
        if n < 1 {
            return Err(Error::InvalidInput(format!(
                "s_cyc is undefined for n = {n}; cyclic counts need n >= 1"
            )));
        }
        if let Some(v) = self.get(Family::SCyc, r, n) {
            return Ok(v);
        }
        self.ensure_catalan(r as usize - 1);
        for m in 1..=n {
            if self.get(Family::SCyc, r, m).is_some() {
                continue;
            }
            let value = self.ps_cyc(r, m)? + self.t_cyc(r, m)?;
            if m > r as i64 {
                let mut alt = BigUint::from(2u32) * self.get(Family::SCyc, r, m - 1).unwrap();
                for i in 2..=r as i64 {
                    alt += self.catalan(i as usize - 1)
                        * self.get(Family::SCyc, r, m - i).unwrap();
                }
                if alt != value {
                    return Err(Error::Inconsistent(format!(
                        "s_cyc routes disagree at r={r}, n={m}: {value} vs {alt}"
                    )));
                }
            }
            self.put(Family::SCyc, r, m, value);
        }
        Ok(self.get(Family::SCyc, r, n).unwrap())
    }

    /// Tau-tilting count over an arbitrary linear algebra, by recursion over
    /// the suffix quotients: `sum_{i=1..c_1} C_{i-1} |tau-tilt(suffix i)|`.
    pub fn tau_count_general(&self, a: &AlgebraSpec) -> Result<BigUint> {
        Ok(self.tau_kupisch(require_linear(a)?))
    }

    /// Support tau-tilting count over an arbitrary linear algebra.
    pub fn stau_count_general(&self, a: &AlgebraSpec) -> Result<BigUint> {
        self.s_kupisch(require_linear(a)?)
    }

    /// Proper support tau-tilting count over an arbitrary linear algebra.
    pub fn ps_count_general(&self, a: &AlgebraSpec) -> Result<BigUint> {
        let c = require_linear(a)?;
        let s = self.s_kupisch(c)?;
        let t = self.tau_kupisch(c);
        checked_sub(&s, &t, "ps_general", 0, c.len() as i64)
    }

    /// Count of support tau-tilting modules whose composition factors
    /// include the simples at vertices `1..=ell`.
    pub fn v_count(&self, a: &AlgebraSpec, ell: usize) -> Result<BigUint> {
        let c = require_linear(a)?;
        let n = c.len();
        if ell < 1 || ell > n {
            return Err(Error::InvalidInput(format!(
                "v_count needs 1 <= ell <= {n}, got {ell}"
            )));
        }
        let mut value = self.tau_kupisch(c);
        for i in ell + 1..=n {
            value += self.tau_kupisch(&prefix_lt(c, i)) * self.s_kupisch(&c[i..])?;
        }
        Ok(value)
    }

    /// `|X_n| = t_r(n+1)`: support tau-tilting modules over the linear
    /// uniform algebra avoiding the projectives at vertices `<= n-r+1`.
    pub fn x_count(&self, r: u32, n: usize) -> BigUint {
        self.t_lin(r, n as i64 + 1)
    }

    /// Modules of `X_n` whose composition factors include `1..=ell`; zero
    /// once `ell >= r`.
    pub fn y_count(&self, r: u32, n: usize, ell: usize) -> BigUint {
        if ell as u32 >= r {
            return BigUint::zero();
        }
        self.ensure_catalan(r as usize - 1);
        let mut value = BigUint::zero();
        for i in ell as i64 + 1..=r as i64 {
            value += self.catalan(i as usize - 1) * self.t_lin(r, n as i64 - i + 1);
        }
        value
    }

    /// Cardinality of the cyclic support classes fixed by their top-end
    /// composition factors:
    /// `sum_{i=ell+1..n-1} t(i-1) s(n-i-1) + t(n-1)` in the linear counts.
    pub fn k_count(&self, r: u32, n: usize, ell: usize) -> Result<BigUint> {
        if n < 1 || ell + 1 > n {
            return Err(Error::InvalidInput(format!(
                "k_count needs n >= 1 and 0 <= ell <= n-1, got n={n}, ell={ell}"
            )));
        }
        let n = n as i64;
        let mut value = self.t_lin(r, n - 1);
        for i in ell as i64 + 1..=n - 1 {
            value += self.t_lin(r, i - 1) * self.s_lin(r, n - i - 1)?;
        }
        Ok(value)
    }

    /// Lucas numbers `L(1) = 1, L(2) = 3, L(n) = L(n-1) + L(n-2)`; equals
    /// `t_cyc(2, n)`.
    pub fn lucas(&self, n: usize) -> BigUint {
        assert!(n >= 1);
        let (mut a, mut b) = (BigUint::one(), BigUint::from(3u32));
        if n == 1 {
            return a;
        }
        for _ in 2..n {
            let next = &a + &b;
            a = b;
            b = next;
        }
        b
    }

    fn tau_kupisch(&self, c: &[u32]) -> BigUint {
        if c.is_empty() {
            return BigUint::one();
        }
        if let Some(v) = self.tau_kup.read().unwrap().get(c) {
            return v.clone();
        }
        let reach = c[0] as usize;
        debug_assert!(reach <= c.len());
        self.ensure_catalan(reach - 1);
        let mut acc = BigUint::zero();
        for i in 1..=reach {
            acc += self.catalan(i - 1) * self.tau_kupisch(&c[i..]);
        }
        self.tau_kup.write().unwrap().entry(c.to_vec()).or_insert_with(|| acc.clone());
        acc
    }

    fn s_kupisch(&self, c: &[u32]) -> Result<BigUint> {
        if c.is_empty() {
            return Ok(BigUint::one());
        }
        if let Some(v) = self.s_kup.read().unwrap().get(c) {
            return Ok(v.clone());
        }
        let n = c.len();
        // Split at the smallest missing composition factor, in both the
        // tau-then-support and support-then-tau orders; they must agree.
        let mut ps_left = BigUint::zero();
        let mut ps_right = BigUint::zero();
        for i in 1..=n {
            let prefix = prefix_lt(c, i);
            ps_left += self.tau_kupisch(&prefix) * self.s_kupisch(&c[i..])?;
            ps_right += self.s_kupisch(&prefix)? * self.tau_kupisch(&c[i..]);
        }
        if ps_left != ps_right {
            return Err(Error::Inconsistent(format!(
                "proper-support split routes disagree on kupisch {c:?}: {ps_left} vs {ps_right}"
            )));
        }
        let value = ps_left + self.tau_kupisch(c);
        self.s_kup.write().unwrap().entry(c.to_vec()).or_insert_with(|| value.clone());
        Ok(value)
    }
}

/// Sub-series for the vertices strictly left of `i`: the first `i-1`
/// entries, clipped to the distance to the new right end.
fn prefix_lt(c: &[u32], i: usize) -> Vec<u32> {
    (0..i - 1).map(|j| c[j].min((i - 1 - j) as u32)).collect()
}

fn require_linear(a: &AlgebraSpec) -> Result<&[u32]> {
    match a.shape() {
        crate::algebra::Shape::Linear => Ok(a.kupisch()),
        crate::algebra::Shape::Cyclic => Err(Error::InvalidInput(
            "general-series counting applies to linear algebras only".into(),
        )),
    }
}

fn checked_sub(s: &BigUint, t: &BigUint, what: &str, r: u32, n: i64) -> Result<BigUint> {
    if s < t {
        return Err(Error::Inconsistent(format!(
            "{what} would be negative at r={r}, n={n} ({s} < {t})"
        )));
    }
    Ok(s - t)
}

/// Exact binomial coefficient via the stepwise-exact product form.
fn binomial(n: u64, k: u64) -> BigUint {
    let mut b = BigUint::one();
    for j in 1..=k {
        b = b * BigUint::from(n - k + j) / BigUint::from(j);
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Shape;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn catalan_values() {
        let e = CountEngine::new();
        assert_eq!(e.catalan(0), big(1));
        assert_eq!(e.catalan(5), big(42));
        assert_eq!(e.catalan(14), big(2674440));
        // convolution identity, re-stated explicitly
        for n in 1..=20usize {
            let conv: BigUint = (1..=n).map(|i| e.catalan(i - 1) * e.catalan(n - i)).sum();
            assert_eq!(conv, e.catalan(n));
        }
    }

    #[test]
    fn linear_tau_counts() {
        let e = CountEngine::new();
        assert_eq!(e.t_lin(2, 5), big(8));
        assert_eq!(e.t_lin(6, 12), big(35862));
        assert_eq!(e.t_lin(3, 0), big(1));
        assert_eq!(e.t_lin(4, -2), big(0));
    }

    #[test]
    fn cyclic_tau_counts() {
        let e = CountEngine::new();
        assert_eq!(e.t_cyc(2, 6).unwrap(), big(18));
        assert_eq!(e.t_cyc(4, 4).unwrap(), big(35));
        assert_eq!(e.t_cyc(2, 2).unwrap(), big(3));
        assert!(e.t_cyc(2, 0).is_err());
    }

    #[test]
    fn linear_support_counts() {
        let e = CountEngine::new();
        assert_eq!(e.s_lin(2, 4).unwrap(), big(29));
        for n in 1..=12 {
            assert_eq!(e.s_lin(1, n).unwrap(), big(1u64 << n));
        }
        assert_eq!(e.s_lin(5, 5).unwrap(), big(132));
        assert_eq!(e.s_lin(5, 5).unwrap(), e.catalan(6));
    }

    #[test]
    fn cyclic_support_counts() {
        let e = CountEngine::new();
        assert_eq!(e.ps_cyc(2, 2).unwrap(), big(3));
        assert_eq!(e.ps_cyc(2, 3).unwrap(), big(10));
        assert_eq!(e.ps_cyc(3, 1).unwrap(), big(1));
        assert_eq!(e.s_cyc(3, 4).unwrap(), big(50));
        assert_eq!(e.s_cyc(6, 12).unwrap(), big(638356));
        for n in 1..=12 {
            assert_eq!(e.s_cyc(1, n).unwrap(), big(1u64 << n));
        }
    }

    #[test]
    fn general_kupisch_counts() {
        let e = CountEngine::new();
        let a = AlgebraSpec::linear(vec![2, 3, 2, 1]).unwrap();
        assert_eq!(e.tau_count_general(&a).unwrap(), big(7));
        assert_eq!(e.ps_count_general(&a).unwrap(), big(26));
        assert_eq!(e.stau_count_general(&a).unwrap(), big(33));
        let single = AlgebraSpec::linear(vec![1]).unwrap();
        assert_eq!(e.tau_count_general(&single).unwrap(), big(1));

        // uniform series must reproduce the uniform families
        for r in 1..=6 {
            for n in 0..=12usize {
                let u = AlgebraSpec::uniform(Shape::Linear, n, r).unwrap();
                assert_eq!(e.tau_count_general(&u).unwrap(), e.t_lin(r, n as i64));
                assert_eq!(e.stau_count_general(&u).unwrap(), e.s_lin(r, n as i64).unwrap());
            }
        }
    }

    #[test]
    fn filter_count_formulas() {
        let e = CountEngine::new();
        assert_eq!(e.x_count(2, 4), big(8));
        assert_eq!(e.y_count(3, 5, 3), big(0));
        assert_eq!(e.y_count(3, 5, 4), big(0));
        // ell = 0 recovers the full restricted count
        for r in 1..=4u32 {
            for n in 0..=7usize {
                assert_eq!(e.y_count(r, n, 0), e.x_count(r, n));
            }
        }
        assert_eq!(e.k_count(2, 4, 0).unwrap(), big(12));
        assert_eq!(e.k_count(2, 4, 0).unwrap(), e.s_lin(2, 3).unwrap());
        assert!(e.k_count(2, 3, 3).is_err());
    }

    #[test]
    fn lucas_sequence() {
        let e = CountEngine::new();
        assert_eq!(e.lucas(1), big(1));
        assert_eq!(e.lucas(2), big(3));
        assert_eq!(e.lucas(7), big(29));
        for n in 1..=30 {
            assert_eq!(e.lucas(n), e.t_cyc(2, n as i64).unwrap());
        }
    }

    #[test]
    fn positivity_and_family_order() {
        let e = CountEngine::new();
        for r in 1..=6u32 {
            for n in 1..=12i64 {
                let t = e.t_lin(r, n);
                let s = e.s_lin(r, n).unwrap();
                assert!(t >= BigUint::one() && s >= BigUint::one());
                assert!(t <= s, "t > s at r={r}, n={n}");
                let tc = e.t_cyc(r, n).unwrap();
                let sc = e.s_cyc(r, n).unwrap();
                assert!(tc >= BigUint::one() && sc >= BigUint::one());
                assert!(tc <= sc, "cyclic t > s at r={r}, n={n}");
            }
        }
    }

    #[test]
    fn count_dispatch_and_domain() {
        let e = CountEngine::new();
        assert_eq!(e.count(Family::TLin, 2, 5).unwrap(), big(8));
        assert_eq!(e.count(Family::TLin, 3, -1).unwrap(), big(0));
        assert_eq!(e.count(Family::PsLin, 2, 2).unwrap(), big(3));
        assert!(e.count(Family::TCyc, 2, 0).is_err());
        assert!(e.count(Family::SLin, 0, 3).is_err());
        assert_eq!(e.count(Family::SCyc, 6, 12).unwrap(), big(638356));
    }

    #[test]
    fn concurrent_fills_agree() {
        let reference = CountEngine::new();
        let t = reference.t_lin(5, 200);
        let s = reference.s_cyc(4, 60).unwrap();
        let a = AlgebraSpec::linear(vec![3, 3, 2, 2, 1]).unwrap();
        let general = reference.stau_count_general(&a).unwrap();

        let engine = CountEngine::new();
        std::thread::scope(|scope| {
            for _ in 0..4 {
                scope.spawn(|| {
                    assert_eq!(engine.t_lin(5, 200), t);
                    assert_eq!(engine.s_cyc(4, 60).unwrap(), s);
                    assert_eq!(engine.stau_count_general(&a).unwrap(), general);
                });
            }
        });
    }

    #[test]
    fn preload_and_snapshot_roundtrip() {
        let e = CountEngine::new();
        e.t_lin(2, 5);
        let snap = e.snapshot();
        assert!(snap.iter().any(|(f, r, n, v)| {
            *f == Family::TLin && *r == 2 && *n == 5 && *v == big(8)
        }));
        let fresh = CountEngine::new();
        for (f, r, n, v) in snap {
            fresh.preload(f, r, n, v);
        }
        assert_eq!(fresh.t_lin(2, 5), big(8));
    }
}
