//! Validated parameters of a cyclic cover `M_N(a1,a2,a3,a4)`.
//!
//! A tuple defines the Riemann surface `w^N = (z-z1)^a1 ... (z-z4)^a4`
//! branched over four points of the sphere. The admissible tuples satisfy
//! `0 < a_i <= N`, `gcd(N, a1,..,a4) = 1` and `a1+a2+a3+a4 = 0 (mod N)`.

use std::fmt;

use thiserror::Error;

/// Violations of the admissibility conditions on `(N, a1..a4)`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    /// `N < 1`, or some `a_i` is outside `1..=N`.
    #[error("parameter out of range: {0}")]
    RangeViolation(String),
    /// `gcd(N, a1, a2, a3, a4) != 1`.
    #[error("gcd(N, a1..a4) = {0}, must be 1")]
    GcdViolation(u64),
    /// `a1 + a2 + a3 + a4` is not divisible by `N`.
    #[error("a1+a2+a3+a4 = {0} is not divisible by N = {1}")]
    SumViolation(u64, u64),
}

/// A validated tuple `(N, a1..a4)` defining the cyclic cover `M_N(a1..a4)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverParams {
    n: u64,
    a: [u64; 4],
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl CoverParams {
    /// Validates `(N, a)` and builds the parameter tuple.
    pub fn new(n: i64, a: [i64; 4]) -> Result<Self, ParamError> {
        if n < 1 {
            return Err(ParamError::RangeViolation(format!("N = {n}, must be >= 1")));
        }
        let n = n as u64;
        for (i, &ai) in a.iter().enumerate() {
            if ai < 1 || ai as u64 > n {
                return Err(ParamError::RangeViolation(format!(
                    "a{} = {}, must satisfy 0 < a{} <= N = {}",
                    i + 1,
                    ai,
                    i + 1,
                    n
                )));
            }
        }
        let a = a.map(|x| x as u64);
        let g = a.iter().fold(n, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(ParamError::GcdViolation(g));
        }
        let s: u64 = a.iter().sum();
        if !s.is_multiple_of(n) {
            return Err(ParamError::SumViolation(s, n));
        }
        Ok(CoverParams { n, a })
    }

    /// Degree `N` of the cover.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The exponents `(a1, a2, a3, a4)`.
    pub fn a(&self) -> [u64; 4] {
        self.a
    }

    /// Genus of `M_N(a1..a4)`: `g = N + 1 - (1/2) * sum_i gcd(a_i, N)`.
    pub fn genus(&self) -> u64 {
        let s: u64 = self.a.iter().map(|&x| gcd(x, self.n)).sum();
        debug_assert!(s.is_multiple_of(2) && s / 2 <= self.n + 1);
        self.n + 1 - s / 2
    }

    /// True iff the pulled-back quadratic differential is a global square
    /// of a holomorphic 1-form: `N` even and all `a_i` odd.
    pub fn is_abelian_square(&self) -> bool {
        self.n.is_multiple_of(2) && self.a.iter().all(|&x| x % 2 == 1)
    }

    /// Parameters of the canonical orientation double cover
    /// `M_{2N}(a'_1..a'_4)` for odd `N`: `a'_i = a_i` when `a_i` is odd and
    /// `a'_i = a_i + N` when `a_i` is even.
    ///
    /// For even `N` the double cover is not cyclic (it is Abelian), which
    /// is out of scope here.
    pub fn double_cover(&self) -> Result<CoverParams, crate::spectra::SpectraError> {
        if self.n.is_multiple_of(2) {
            return Err(crate::spectra::SpectraError::NotOddN(self.n));
        }
        let a = self.a.map(|x| if x % 2 == 1 { x } else { x + self.n });
        let doubled = CoverParams::new(
            2 * self.n as i64,
            [a[0] as i64, a[1] as i64, a[2] as i64, a[3] as i64],
        )
        .expect("double cover parameters of a valid odd-N tuple are valid");
        debug_assert!(doubled.is_abelian_square());
        Ok(doubled)
    }
}

impl fmt::Display for CoverParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "M_{}({},{},{},{})",
            self.n, self.a[0], self.a[1], self.a[2], self.a[3]
        )
    }
}
