//! Closed-form arithmetic of the Hodge-bundle eigenspace decomposition.
//!
//! For a cover `M_N(a1..a4)` and `k = 1..N-1`, the deck action splits
//! cohomology into eigenspaces `V(k)` controlled entirely by the
//! fractional parts `t_i(k) = {a_i k / N}` and their integer sum
//! `t(k) = t_1(k)+..+t_4(k) in {1,2,3}`:
//!
//! * `dim V^{1,0}(k) = t(N-k) - 1`, `dim V^{0,1}(k) = t(k) - 1`;
//! * when `t(N-k) = 2` the line bundle `V^{1,0}(k)` has orbifold degree
//!   `d(k) = min(t_1(k), 1-t_1(k), ..., t_4(k), 1-t_4(k))`;
//! * the nonnegative Lyapunov spectrum collects, over `k`, a pair of
//!   zeroes when `t(k) = 3` and the single exponent `2 d(k)` when
//!   `t(k) = 2`.
//!
//! Everything reduces to integer arithmetic on the residues
//! `r_i = a_i k mod N` (numerators of `t_i(k)` over the common
//! denominator `N`); rationals are only materialized at the API surface.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::params::{gcd, CoverParams};
use crate::rational::{rat_u, Rational};

/// Errors of the closed-form spectrum operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    /// `k` outside `1..=N-1` (or outside `1..=N/2` for W-blocks).
    #[error("k = {0} out of range for N = {1}")]
    KOutOfRange(u64, u64),
    /// `V^{1,0}(k)` is not a line bundle: `t(N-k) != 2`.
    #[error("V^(1,0)({0}) is not a line bundle: t(N-{0}) = {1}, need 2")]
    NotLineBundle(u64, u32),
    /// Cusp orders are derived under `t(k) = 2`.
    #[error("cusp orders need t(k) = 2, got t({0}) = {1}")]
    WrongTSum(u64, u32),
    /// No holomorphic eigenform exists when `t(k) = 1`.
    #[error("no holomorphic form for k = {0}: t(k) = 1")]
    NoHolomorphicForm(u64),
    /// The odd-N-only operations reject even `N`.
    #[error("N = {0} is even; the double cover is not cyclic")]
    NotOddN(u64),
    /// The base spectrum was not contained in the double-cover spectrum.
    /// Signals an implementation bug: inclusion is guaranteed by theory.
    #[error("base spectrum entry {0} (x{1}) missing from the double-cover spectrum")]
    InclusionViolation(Rational, u64),
}

fn check_k(p: &CoverParams, k: u64) -> Result<(), SpectraError> {
    if k == 0 || k >= p.n() {
        Err(SpectraError::KOutOfRange(k, p.n()))
    } else {
        Ok(())
    }
}

/// Exact numerators of `t_i(k)` over the denominator `N`:
/// `residues(p, k)[i] = a_i * k mod N`.
///
/// This is the integer kernel behind every fractional quantity in the
/// module; bulk scans use it directly to avoid big-rational churn.
pub fn residues(p: &CoverParams, k: u64) -> [u64; 4] {
    let n = p.n() as u128;
    p.a().map(|a| (a as u128 * k as u128 % n) as u64)
}

/// `t(k)` as an integer, computed from the residues: `(sum r_i) / N`.
fn t_of(p: &CoverParams, k: u64) -> u32 {
    let s: u64 = residues(p, k).iter().sum();
    debug_assert_eq!(s % p.n(), 0);
    (s / p.n()) as u32
}

/// Numerator of `d(k)`'s min-formula over denominator `N`:
/// `min_i min(r_i, N - r_i)`.
fn degree_numer(p: &CoverParams, k: u64) -> u64 {
    let n = p.n();
    residues(p, k).iter().map(|&r| r.min(n - r)).min().unwrap()
}

/// The fractional-part profile `(t_1(k), .., t_4(k))`, exact.
pub fn frac_profile(p: &CoverParams, k: u64) -> Result<[Rational; 4], SpectraError> {
    check_k(p, k)?;
    Ok(residues(p, k).map(|r| rat_u(r, p.n())))
}

/// `t(k) = t_1(k)+..+t_4(k)`, an integer in `{1,2,3}`.
pub fn t_sum(p: &CoverParams, k: u64) -> Result<u32, SpectraError> {
    check_k(p, k)?;
    Ok(t_of(p, k))
}

/// Dimensions `(dim V^{1,0}(k), dim V^{0,1}(k), dim V(k))`.
pub fn eigen_dims(p: &CoverParams, k: u64) -> Result<(u32, u32, u32), SpectraError> {
    check_k(p, k)?;
    let v10 = t_of(p, k_conj(p, k)) - 1;
    let v01 = t_of(p, k) - 1;
    Ok((v10, v01, v10 + v01))
}

fn k_conj(p: &CoverParams, k: u64) -> u64 {
    p.n() - k
}

/// Orbifold degree `d(k)` of the line bundle `V^{1,0}(k)`.
///
/// Defined when `t(N-k) = 2`; then `d(k) > 0` iff `t(k) = 2` and
/// `d(k) = 0` iff `t(k) = 1`.
pub fn degree_d(p: &CoverParams, k: u64) -> Result<Rational, SpectraError> {
    check_k(p, k)?;
    let t_conj = t_of(p, k_conj(p, k));
    if t_conj != 2 {
        return Err(SpectraError::NotLineBundle(k, t_conj));
    }
    Ok(rat_u(degree_numer(p, k), p.n()))
}

/// Orders of the canonical eigenform section at the three cusps
/// `z_3 -> 0, 1, infinity` of the Teichmuller curve, for `k` with
/// `t(k) = 2`. Their sum equals the min-formula for `d(k)`.
pub fn cusp_orders(p: &CoverParams, k: u64) -> Result<[Rational; 3], SpectraError> {
    check_k(p, k)?;
    let t = t_of(p, k);
    if t != 2 {
        return Err(SpectraError::WrongTSum(k, t));
    }
    let [o0, o1, oi] = cusp_order_numerators(p, k);
    let n = p.n() as i64;
    Ok([
        Rational::new(o0.into(), n.into()),
        Rational::new(o1.into(), n.into()),
        Rational::new(oi.into(), n.into()),
    ])
}

/// Numerators over `N` of the three cusp orders:
/// `min(0, 1-(t1+t3))`, `min(0, 1-(t2+t3))`, `t3 + min(0, 1-(t3+t4))`.
fn cusp_order_numerators(p: &CoverParams, k: u64) -> [i64; 3] {
    let [r1, r2, r3, r4] = residues(p, k).map(|r| r as i64);
    let n = p.n() as i64;
    [
        0.min(n - r1 - r3),
        0.min(n - r2 - r3),
        r3 + 0.min(n - r3 - r4),
    ]
}

/// Exponents `b_i = floor(a_i k / N)` of the holomorphic eigenform
/// `(z-z_1)^{b_1}..(z-z_4)^{b_4} dz / w^k` spanning (a line of)
/// `V^{1,0}(N-k)`. Requires `t(k) >= 2`.
pub fn form_exponents(p: &CoverParams, k: u64) -> Result<[u64; 4], SpectraError> {
    check_k(p, k)?;
    if t_of(p, k) == 1 {
        return Err(SpectraError::NoHolomorphicForm(k));
    }
    let n = p.n() as u128;
    Ok(p.a().map(|a| ((a as u128 * k as u128) / n) as u64))
}

/// Per-`k` record of the eigenspace data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenBlock {
    /// Index `k` in `1..N-1`.
    pub k: u64,
    /// The profile `(t_1(k), .., t_4(k))`.
    pub t_parts: [Rational; 4],
    /// `t(k)`, an integer in `{1,2,3}`.
    pub t_sum: u32,
    /// `dim V^{1,0}(k) = t(N-k) - 1`.
    pub dim_v10: u32,
    /// `dim V^{0,1}(k) = t(k) - 1`.
    pub dim_v01: u32,
    /// `dim V(k) = dim V^{1,0}(k) + dim V^{0,1}(k)`.
    pub dim_v: u32,
    /// `d(k)`, present iff `V^{1,0}(k)` is a line bundle (`t(N-k) = 2`).
    pub degree: Option<Rational>,
    /// `b_i = floor(a_i k / N)`, present iff `t(k) >= 2`.
    pub form_exponents: Option<[u64; 4]>,
    /// Cusp orders at `z_3 -> 0, 1, infinity`, present iff `t(k) = 2`.
    pub cusp_orders: Option<[Rational; 3]>,
}

/// Assembles the full per-`k` record.
pub fn eigen_block(p: &CoverParams, k: u64) -> Result<EigenBlock, SpectraError> {
    check_k(p, k)?;
    let t_parts = frac_profile(p, k)?;
    let t = t_of(p, k);
    let (dim_v10, dim_v01, dim_v) = eigen_dims(p, k)?;
    Ok(EigenBlock {
        k,
        t_parts,
        t_sum: t,
        dim_v10,
        dim_v01,
        dim_v,
        degree: degree_d(p, k).ok(),
        form_exponents: form_exponents(p, k).ok(),
        cusp_orders: cusp_orders(p, k).ok(),
    })
}

/// The real block `W(k)` of the Hodge bundle, `1 <= k <= N/2`, with its
/// full signed Lyapunov spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WBlock {
    /// Index `k` in `1..=floor(N/2)`.
    pub k: u64,
    /// Signature `(r, s) = (t(N-k)-1, t(k)-1)` of the variation `V(k)`.
    pub signature: (u32, u32),
    /// Real dimension of `W(k)`, in `{0, 2, 4}`.
    pub dim_w: u32,
    /// Full signed spectrum, length `dim_w`, sorted descending.
    pub spectrum: Vec<Rational>,
}

/// Lyapunov spectrum of the subbundle `W(k)` per the six-case
/// classification; for `k = N/2` (even `N`) the spectrum is `{1,-1}`
/// when all `a_i` are odd and empty when some `a_i` is even.
pub fn block_classification(p: &CoverParams, k: u64) -> Result<WBlock, SpectraError> {
    let n = p.n();
    if k == 0 || k > n / 2 {
        return Err(SpectraError::KOutOfRange(k, n));
    }
    let t = t_of(p, k);
    let t_conj = t_of(p, k_conj(p, k));
    let signature = (t_conj - 1, t - 1);
    let mut spectrum = if 2 * k == n {
        // W(N/2) complexifies to V(N/2) alone.
        match t {
            2 => vec![rat_u(1, 1), -rat_u(1, 1)],
            _ => vec![],
        }
    } else {
        match signature {
            (0, 0) => vec![],
            (1, 0) | (0, 1) => vec![rat_u(0, 1); 2],
            (2, 0) | (0, 2) => vec![rat_u(0, 1); 4],
            (1, 1) => {
                let lambda = rat_u(2 * degree_numer(p, k), n);
                vec![lambda.clone(), lambda.clone(), -lambda.clone(), -lambda]
            }
            _ => unreachable!("t(k), t(N-k) lie in {{1,2,3}}"),
        }
    };
    spectrum.sort();
    spectrum.reverse();
    let dim_w = spectrum.len() as u32;
    Ok(WBlock {
        k,
        signature,
        dim_w,
        spectrum,
    })
}

/// A multiset of exact rationals in `[0, 1]` with positive multiplicities;
/// the nonnegative part of a Lyapunov spectrum.
///
/// The wire encoding is `value:mult` pairs joined by `;`, sorted by
/// descending value, e.g. `1:1;2/5:4;0:10`; the empty multiset encodes as
/// the empty string.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpectrumMultiset {
    entries: BTreeMap<Rational, u64>,
}

impl SpectrumMultiset {
    /// The empty multiset.
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from `(value, multiplicity)` pairs, merging duplicates.
    pub fn from_entries<I: IntoIterator<Item = (Rational, u64)>>(entries: I) -> Self {
        let mut s = Self::new();
        for (v, m) in entries {
            s.add(v, m);
        }
        s
    }

    /// Adds `mult` copies of `value`.
    pub fn add(&mut self, value: Rational, mult: u64) {
        if mult > 0 {
            *self.entries.entry(value).or_insert(0) += mult;
        }
    }

    /// Total multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Multiplicity of `value` (0 if absent).
    pub fn multiplicity(&self, value: &Rational) -> u64 {
        self.entries.get(value).copied().unwrap_or(0)
    }

    /// Entries sorted by descending value.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Rational, u64)> {
        self.entries.iter().rev().map(|(v, &m)| (v, m))
    }

    /// Sum of `value * multiplicity` over all entries.
    pub fn sum(&self) -> Rational {
        self.iter_desc()
            .map(|(v, m)| v * rat_u(m, 1))
            .fold(rat_u(0, 1), |acc, x| acc + x)
    }

    /// Multiset difference `self - other`; errors if `other` is not
    /// contained in `self`.
    pub fn difference(&self, other: &SpectrumMultiset) -> Result<SpectrumMultiset, SpectraError> {
        let mut out = self.clone();
        for (v, m) in other.entries.iter() {
            let have = out.entries.get_mut(v).ok_or_else(|| {
                SpectraError::InclusionViolation(v.clone(), *m)
            })?;
            if *have < *m {
                return Err(SpectraError::InclusionViolation(v.clone(), *m));
            }
            *have -= *m;
            if *have == 0 {
                out.entries.remove(v);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SpectrumMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, m) in self.iter_desc() {
            if !first {
                write!(f, ";")?;
            }
            write!(f, "{v}:{m}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for SpectrumMultiset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = SpectrumMultiset::new();
        if s.is_empty() {
            return Ok(out);
        }
        for part in s.split(';') {
            let (v, m) = part
                .split_once(':')
                .ok_or_else(|| format!("bad spectrum entry {part:?}"))?;
            let value = Rational::from_str(v).map_err(|e| format!("bad value {v:?}: {e}"))?;
            let mult: u64 = m.parse().map_err(|e| format!("bad multiplicity {m:?}: {e}"))?;
            out.add(value, mult);
        }
        Ok(out)
    }
}

/// Nonnegative part of the Lyapunov spectrum of the Hodge bundle over the
/// Teichmuller curve of `M_N(a1..a4)`.
///
/// For every `k = 1..N-1`: `t(k) = 3` contributes a pair of zeroes,
/// `t(k) = 2` contributes the single exponent `2 d(k)`, `t(k) = 1`
/// contributes nothing. The total multiplicity is the genus.
pub fn lyapunov_spectrum(p: &CoverParams) -> SpectrumMultiset {
    let n = p.n();
    let mut spec = SpectrumMultiset::new();
    for k in 1..n {
        match t_of(p, k) {
            3 => spec.add(rat_u(0, 1), 2),
            2 => spec.add(rat_u(2 * degree_numer(p, k), n), 1),
            1 => {}
            t => unreachable!("t(k) = {t}"),
        }
    }
    debug_assert_eq!(spec.total(), p.genus());
    spec
}

/// Lyapunov spectrum of the anti-invariant part `H^1_-` of the orientation
/// double cover (odd `N` only), via the complement
/// `Spec(M_{2N}(a')) - Spec(M_N(a))`, together with the effective genus.
pub fn minus_spectrum(p: &CoverParams) -> Result<(SpectrumMultiset, u64), SpectraError> {
    let double = p.double_cover()?;
    let plus = lyapunov_spectrum(p);
    let full = lyapunov_spectrum(&double);
    let minus = full.difference(&plus)?;
    let g_eff = double.genus() - p.genus();
    debug_assert_eq!(minus.total(), g_eff);
    Ok((minus, g_eff))
}

/// One side-by-side evaluation of the closed form
/// `sum_{k=1}^{N-1} {a k / N} = (N - gcd(a, N)) / 2` for a single `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FracSumCheck {
    /// The exponent `a`.
    pub a: u64,
    /// Left side, by direct summation of the fractional parts.
    pub lhs: Rational,
    /// Right side, the closed form.
    pub rhs: Rational,
}

impl FracSumCheck {
    /// Whether the identity holds for this `a`.
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Direct-summation side of the fractional-part identity for arbitrary
/// `1 <= a <= n`: `sum_{k=1}^{n-1} {a k / n}`, exact.
pub fn frac_sum_direct(a: u64, n: u64) -> Rational {
    let mut numer: u128 = 0;
    for k in 1..n {
        numer += (a as u128 * k as u128) % n as u128;
    }
    Rational::new(num::BigInt::from(numer), num::BigInt::from(n))
}

/// Closed-form side of the fractional-part identity: `(n - gcd(a, n)) / 2`.
pub fn frac_sum_closed(a: u64, n: u64) -> Rational {
    rat_u(n - gcd(a, n), 2)
}

/// Exact evaluation of the two identities behind the genus count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    /// The genus from the gcd formula.
    pub genus: u64,
    /// `sum_{k=1}^{N-1} (t(k) - 1)`, which must equal the genus.
    pub t_sum_total: u64,
    /// Per-`a_i` checks of the fractional-part sum identity.
    pub frac_sums: [FracSumCheck; 4],
}

impl IdentityReport {
    /// True iff every identity holds exactly.
    pub fn all_hold(&self) -> bool {
        self.t_sum_total == self.genus && self.frac_sums.iter().all(FracSumCheck::holds)
    }
}

/// Evaluates `sum_k (t(k)-1) = g` and the per-`a_i` fractional-part sums.
pub fn check_identities(p: &CoverParams) -> IdentityReport {
    let n = p.n();
    let mut total: u64 = 0;
    for k in 1..n {
        total += (t_of(p, k) - 1) as u64;
    }
    let frac_sums = p.a().map(|a| FracSumCheck {
        a,
        lhs: frac_sum_direct(a, n),
        rhs: frac_sum_closed(a, n),
    });
    IdentityReport {
        genus: p.genus(),
        t_sum_total: total,
        frac_sums,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn m30() -> CoverParams {
        CoverParams::new(30, [3, 5, 9, 13]).unwrap()
    }

    fn m2() -> CoverParams {
        CoverParams::new(2, [1, 1, 1, 1]).unwrap()
    }

    #[test]
    fn frac_profile_m30_rows() {
        let p = m30();
        assert_eq!(
            frac_profile(&p, 1).unwrap(),
            [rat(1, 10), rat(1, 6), rat(3, 10), rat(13, 30)]
        );
        assert_eq!(
            frac_profile(&p, 15).unwrap(),
            [rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)]
        );
        assert_eq!(
            frac_profile(&m2(), 1).unwrap(),
            [rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)]
        );
        assert!(matches!(
            frac_profile(&p, 30),
            Err(SpectraError::KOutOfRange(30, 30))
        ));
        assert!(matches!(
            frac_profile(&p, 0),
            Err(SpectraError::KOutOfRange(0, 30))
        ));
    }

    #[test]
    fn t_sum_m30_rows() {
        let p = m30();
        assert_eq!(t_sum(&p, 1).unwrap(), 1);
        assert_eq!(t_sum(&p, 9).unwrap(), 3);
        assert_eq!(t_sum(&p, 2).unwrap(), 2);
    }

    #[test]
    fn eigen_dims_table_convention() {
        let p = m30();
        // The reference table's row k reports V(N-k); the operation reports V(k).
        assert_eq!(eigen_dims(&p, 28).unwrap(), (1, 1, 2));
        assert_eq!(eigen_dims(&p, 20).unwrap(), (0, 0, 0));
        assert_eq!(eigen_dims(&p, 21).unwrap(), (2, 0, 2));
    }

    #[test]
    fn eigen_dims_match_zero_count_classification() {
        let p = m30();
        for k in 1..30 {
            let zeros = residues(&p, k).iter().filter(|&&r| r == 0).count();
            let (_, _, dim_v) = eigen_dims(&p, k).unwrap();
            let expected = match zeros {
                0 => 2,
                1 => 1,
                _ => 0,
            };
            assert_eq!(dim_v, expected, "k = {k}");
        }
    }

    #[test]
    fn degree_examples() {
        let p = m30();
        assert_eq!(degree_d(&p, 2).unwrap(), rat(2, 15));
        assert_eq!(degree_d(&p, 15).unwrap(), rat(1, 2));
        assert_eq!(degree_d(&m2(), 1).unwrap(), rat(1, 2));
        // t(N-k) = 1 for k = 24 (t(6) = 2, t(24) = 1): not a line bundle.
        assert!(matches!(
            degree_d(&p, 6),
            Err(SpectraError::NotLineBundle(6, 1))
        ));
    }

    #[test]
    fn degree_positivity_alternative() {
        let p = m30();
        for k in 1..30u64 {
            let t = t_sum(&p, k).unwrap();
            let t_conj = t_sum(&p, 30 - k).unwrap();
            if t_conj != 2 {
                continue;
            }
            let d = degree_d(&p, k).unwrap();
            match t {
                2 => assert!(d > rat(0, 1), "k = {k}"),
                1 => assert_eq!(d, rat(0, 1), "k = {k}"),
                _ => unreachable!("dim V(k) <= 2 forces t(k) in {{1,2}}"),
            }
        }
    }

    #[test]
    fn cusp_order_examples() {
        let p = m30();
        assert_eq!(
            cusp_orders(&p, 15).unwrap(),
            [rat(0, 1), rat(0, 1), rat(1, 2)]
        );
        assert_eq!(
            cusp_orders(&m2(), 1).unwrap(),
            [rat(0, 1), rat(0, 1), rat(1, 2)]
        );
        assert!(matches!(
            cusp_orders(&p, 1),
            Err(SpectraError::WrongTSum(1, 1))
        ));
        // sum of orders = d(N-k) for every k with t(k) = 2
        for k in 1..30 {
            if t_sum(&p, k).unwrap() != 2 {
                continue;
            }
            let sum: Rational = cusp_orders(&p, k).unwrap().into_iter().sum();
            assert_eq!(sum, degree_d(&p, 30 - k).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn form_exponent_examples() {
        let p = m30();
        assert_eq!(form_exponents(&p, 2).unwrap(), [0, 0, 0, 0]);
        assert_eq!(form_exponents(&p, 15).unwrap(), [1, 2, 4, 6]);
        assert_eq!(form_exponents(&m2(), 1).unwrap(), [0, 0, 0, 0]);
        assert!(matches!(
            form_exponents(&p, 1),
            Err(SpectraError::NoHolomorphicForm(1))
        ));
    }

    #[test]
    fn block_classification_examples() {
        let p = m30();
        let b = block_classification(&p, 15).unwrap();
        assert_eq!(b.dim_w, 2);
        assert_eq!(b.spectrum, vec![rat(1, 1), rat(-1, 1)]);

        let b = block_classification(&p, 1).unwrap();
        assert_eq!(b.signature, (2, 0));
        assert_eq!(b.dim_w, 4);
        assert_eq!(b.spectrum, vec![rat(0, 1); 4]);

        let b = block_classification(&p, 2).unwrap();
        assert_eq!(b.dim_w, 4);
        assert_eq!(
            b.spectrum,
            vec![rat(4, 15), rat(4, 15), rat(-4, 15), rat(-4, 15)]
        );

        assert!(block_classification(&p, 16).is_err());
        assert!(block_classification(&p, 0).is_err());
    }

    #[test]
    fn block_vanishes_at_half_when_some_a_even() {
        // M_4(1,1,2,4): N even, not all a_i odd
        let p = CoverParams::new(4, [1, 1, 2, 4]).unwrap();
        let b = block_classification(&p, 2).unwrap();
        assert_eq!(b.dim_w, 0);
        assert!(b.spectrum.is_empty());
    }

    #[test]
    fn spectrum_of_m30() {
        let spec = lyapunov_spectrum(&m30());
        let expected = SpectrumMultiset::from_entries([
            (rat(1, 1), 1),
            (rat(2, 5), 4),
            (rat(1, 3), 2),
            (rat(4, 15), 2),
            (rat(1, 5), 6),
            (rat(0, 1), 10),
        ]);
        assert_eq!(spec, expected);
        assert_eq!(spec.total(), 25);
    }

    #[test]
    fn spectrum_family_examples() {
        let spec = lyapunov_spectrum(&CoverParams::new(6, [5, 1, 3, 3]).unwrap());
        assert_eq!(
            spec,
            SpectrumMultiset::from_entries([(rat(1, 1), 1), (rat(1, 3), 2)])
        );
        let spec = lyapunov_spectrum(&CoverParams::new(4, [3, 1, 3, 1]).unwrap());
        assert_eq!(
            spec,
            SpectrumMultiset::from_entries([(rat(1, 1), 1), (rat(1, 2), 2)])
        );
        let spec = lyapunov_spectrum(&CoverParams::new(1, [1, 1, 1, 1]).unwrap());
        assert_eq!(spec.total(), 0);
    }

    #[test]
    fn spectrum_wire_round_trip() {
        let spec = lyapunov_spectrum(&m30());
        let s = spec.to_string();
        assert_eq!(s, "1:1;2/5:4;1/3:2;4/15:2;1/5:6;0:10");
        assert_eq!(s.parse::<SpectrumMultiset>().unwrap(), spec);
        assert_eq!("".parse::<SpectrumMultiset>().unwrap(), SpectrumMultiset::new());
    }

    #[test]
    fn minus_spectrum_example() {
        let p = CoverParams::new(3, [1, 1, 2, 2]).unwrap();
        let (minus, g_eff) = minus_spectrum(&p).unwrap();
        assert_eq!(
            minus,
            SpectrumMultiset::from_entries([(rat(1, 1), 1), (rat(1, 3), 2)])
        );
        assert_eq!(g_eff, 3);

        let even = CoverParams::new(4, [3, 1, 3, 1]).unwrap();
        assert!(matches!(minus_spectrum(&even), Err(SpectraError::NotOddN(4))));
    }

    #[test]
    fn identities_hold() {
        let r = check_identities(&m30());
        assert!(r.all_hold());
        assert_eq!(r.t_sum_total, 25);

        assert_eq!(frac_sum_direct(15, 30), rat(15, 2));
        assert_eq!(frac_sum_closed(15, 30), rat(15, 2));
        assert_eq!(frac_sum_direct(30, 30), rat(0, 1));
        assert_eq!(frac_sum_closed(30, 30), rat(0, 1));
    }

    #[test]
    fn multiset_difference_and_errors() {
        let a = SpectrumMultiset::from_entries([(rat(1, 2), 3), (rat(0, 1), 1)]);
        let b = SpectrumMultiset::from_entries([(rat(1, 2), 2)]);
        let d = a.difference(&b).unwrap();
        assert_eq!(
            d,
            SpectrumMultiset::from_entries([(rat(1, 2), 1), (rat(0, 1), 1)])
        );
        assert!(a.difference(&SpectrumMultiset::from_entries([(rat(1, 3), 1)])).is_err());
        assert!(b.difference(&a).is_err());
    }
}
