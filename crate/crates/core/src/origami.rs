//! Square-tiled surfaces as permutation pairs.
//!
//! An origami on `M` squares is a pair of permutations `(pi_h, pi_v)` of
//! `{1..M}`: `pi_h(s)` is the square to the right of `s`, `pi_v(s)` the
//! square above. The pair must act transitively (the surface is
//! connected); `M = 1` is the once-marked torus.
//!
//! Squares are 1-indexed in the wire format (JSON image arrays) and
//! 0-indexed internally. Vertices of the tiling are the cycles of the
//! bottom-left corner tracing permutation `pi_v^-1 pi_h^-1 pi_v pi_h`;
//! a cycle of length `l > 1` is a zero of degree `l - 1`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::params::CoverParams;

/// Errors of origami construction and quotients.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrigamiError {
    /// An image array is not a permutation of `1..=M`.
    #[error("not a permutation of 1..={0}: {1}")]
    NotPermutation(usize, String),
    /// The two image arrays have different lengths.
    #[error("h has {0} entries but v has {1}")]
    LengthMismatch(usize, usize),
    /// The pair does not act transitively on the squares.
    #[error("the squares are not connected under (h, v)")]
    Disconnected,
    /// Cyclic-cover constructors need `N` even and all `a_i` odd.
    #[error("{0} is not in the abelian case (need N even, all a_i odd)")]
    NotAbelianCase(String),
    /// `quotient` was passed a permutation outside the translation group.
    #[error("sigma is not a nontrivial translation automorphism")]
    NotAutomorphism,
}

/// A permutation of `{0..n-1}` stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    img: Vec<usize>,
}

impl Permutation {
    /// Identity on `n` points.
    pub fn identity(n: usize) -> Self {
        Permutation {
            img: (0..n).collect(),
        }
    }

    /// From a 0-indexed image array; validates bijectivity.
    pub fn from_images(img: Vec<usize>) -> Result<Self, OrigamiError> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            if x >= n || seen[x] {
                return Err(OrigamiError::NotPermutation(n, format!("{:?}", img)));
            }
            seen[x] = true;
        }
        Ok(Permutation { img })
    }

    /// From a 1-indexed image array (the wire convention).
    pub fn from_one_indexed(img: &[usize]) -> Result<Self, OrigamiError> {
        let n = img.len();
        for &x in img {
            if x < 1 || x > n {
                return Err(OrigamiError::NotPermutation(n, format!("{:?}", img)));
            }
        }
        Self::from_images(img.iter().map(|&x| x - 1).collect())
    }

    /// 1-indexed image array.
    pub fn to_one_indexed(&self) -> Vec<usize> {
        self.img.iter().map(|&x| x + 1).collect()
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.img.len()
    }

    /// True iff the permutation acts on zero points.
    pub fn is_empty(&self) -> bool {
        self.img.is_empty()
    }

    /// Image of `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i]
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            img: other.img.iter().map(|&x| self.img[x]).collect(),
        }
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut img = vec![0; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x] = i;
        }
        Permutation { img }
    }

    /// True iff this is the identity.
    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycles, each starting at its least element, sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.img.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut c = vec![i];
            seen[i] = true;
            let mut j = self.img[i];
            while j != i {
                seen[j] = true;
                c.push(j);
                j = self.img[j];
            }
            out.push(c);
        }
        out
    }

    /// True iff `self . other == other . self`.
    pub fn commutes_with(&self, other: &Permutation) -> bool {
        (0..self.img.len()).all(|i| self.img[other.img[i]] == other.img[self.img[i]])
    }
}

/// Multiset of zero degrees of the translation structure (the stratum
/// `H(d_1,..,d_n)`); empty for the torus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    /// Zero degrees, sorted descending.
    pub zero_degrees: Vec<u64>,
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(")?;
        for (i, d) in self.zero_degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Wire form of an origami: 1-indexed image arrays.
#[derive(Serialize, Deserialize)]
struct OrigamiWire {
    squares: usize,
    h: Vec<usize>,
    v: Vec<usize>,
}

/// A connected square-tiled surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Origami {
    h: Permutation,
    v: Permutation,
}

/// Validated constructor from 1-indexed image arrays.
pub fn make_origami(h: &[usize], v: &[usize]) -> Result<Origami, OrigamiError> {
    if h.len() != v.len() {
        return Err(OrigamiError::LengthMismatch(h.len(), v.len()));
    }
    Origami::new(Permutation::from_one_indexed(h)?, Permutation::from_one_indexed(v)?)
}

/// The stairs surface `S(N)`: one cylinder of width `N` and height 1,
/// `pi_h` the cycle `k -> k+1` and `pi_v(k) = N+1-k`.
pub fn stairs(n: usize) -> Origami {
    assert!(n >= 1, "stairs needs N >= 1");
    let h = Permutation::from_images((0..n).map(|k| (k + 1) % n).collect()).unwrap();
    let v = Permutation::from_images((0..n).map(|k| (n - 1 - k) % n).collect()).unwrap();
    Origami::new(h, v).expect("stairs is connected")
}

impl Origami {
    /// From validated permutations of equal length; checks connectivity.
    pub fn new(h: Permutation, v: Permutation) -> Result<Self, OrigamiError> {
        if h.len() != v.len() {
            return Err(OrigamiError::LengthMismatch(h.len(), v.len()));
        }
        let o = Origami { h, v };
        if !o.is_connected() {
            return Err(OrigamiError::Disconnected);
        }
        Ok(o)
    }

    /// Number of squares `M`.
    pub fn squares(&self) -> usize {
        self.h.len()
    }

    /// Right-neighbor permutation.
    pub fn h(&self) -> &Permutation {
        &self.h
    }

    /// Upper-neighbor permutation.
    pub fn v(&self) -> &Permutation {
        &self.v
    }

    fn is_connected(&self) -> bool {
        let n = self.squares();
        if n == 0 {
            return false;
        }
        let hi = self.h.inverse();
        let vi = self.v.inverse();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in [
                self.h.apply(x),
                self.v.apply(x),
                hi.apply(x),
                vi.apply(x),
            ] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    /// Bottom-left corner tracing permutation `pi_v^-1 pi_h^-1 pi_v pi_h`;
    /// its cycles are the vertices of the tiling.
    pub fn vertex_permutation(&self) -> Permutation {
        self.v
            .inverse()
            .compose(&self.h.inverse())
            .compose(&self.v)
            .compose(&self.h)
    }

    /// Zero degrees from the vertex cycles: a cycle of length `l > 1`
    /// contributes a zero of degree `l - 1`; fixed points are regular.
    pub fn stratum(&self) -> Stratum {
        let mut degrees: Vec<u64> = self
            .vertex_permutation()
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| (c.len() - 1) as u64)
            .collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Stratum {
            zero_degrees: degrees,
        }
    }

    /// Genus from the Euler characteristic of the square complex:
    /// `g = (2 - V + M) / 2` with `V` the number of vertex cycles.
    pub fn genus(&self) -> u64 {
        let v = self.vertex_permutation().cycles().len() as i64;
        let m = self.squares() as i64;
        let chi = v - 2 * m + m;
        ((2 - chi) / 2) as u64
    }

    /// Canonical relabeling key: BFS from each base square over
    /// `(h, v, h^-1, v^-1)` in that order, then the lexicographically
    /// least `(h, v)` image-array pair. Two origamis are isomorphic iff
    /// their canonical forms are equal.
    pub fn canonical_form(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.squares();
        let hi = self.h.inverse();
        let vi = self.v.inverse();
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        for base in 0..n {
            label.iter_mut().for_each(|x| *x = usize::MAX);
            order.clear();
            label[base] = 0;
            order.push(base);
            let mut next = 1;
            let mut qi = 0;
            while qi < order.len() {
                let x = order[qi];
                qi += 1;
                for y in [
                    self.h.apply(x),
                    self.v.apply(x),
                    hi.apply(x),
                    vi.apply(x),
                ] {
                    if label[y] == usize::MAX {
                        label[y] = next;
                        next += 1;
                        order.push(y);
                    }
                }
            }
            let mut hh = vec![0; n];
            let mut vv = vec![0; n];
            for x in 0..n {
                hh[label[x]] = label[self.h.apply(x)];
                vv[label[x]] = label[self.v.apply(x)];
            }
            let cand = (hh, vv);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        best.expect("origami has at least one square")
    }

    /// The canonically relabeled origami.
    pub fn canonical(&self) -> Origami {
        let (h, v) = self.canonical_form();
        Origami {
            h: Permutation { img: h },
            v: Permutation { img: v },
        }
    }

    /// True iff some relabeling carries `(h, v)` to `(other.h, other.v)`.
    pub fn is_isomorphic_to(&self, other: &Origami) -> bool {
        self.squares() == other.squares() && self.canonical_form() == other.canonical_form()
    }

    /// The translation automorphism group: all permutations commuting
    /// with both `pi_h` and `pi_v` (includes the identity). Determined by
    /// the image of square 0 by transitivity, so there are at most `M`.
    pub fn automorphisms(&self) -> Vec<Permutation> {
        let n = self.squares();
        let hi = self.h.inverse();
        let vi = self.v.inverse();
        let mut out = Vec::new();
        'candidates: for img0 in 0..n {
            let mut img = vec![usize::MAX; n];
            img[0] = img0;
            let mut stack = vec![0usize];
            while let Some(x) = stack.pop() {
                for step in [&self.h, &self.v, &hi, &vi] {
                    let y = step.apply(x);
                    let target = step.apply(img[x]);
                    if img[y] == usize::MAX {
                        img[y] = target;
                        stack.push(y);
                    } else if img[y] != target {
                        continue 'candidates;
                    }
                }
            }
            if let Ok(p) = Permutation::from_images(img) {
                out.push(p);
            }
        }
        out
    }

    /// Quotient by the group generated by a nontrivial translation
    /// automorphism `sigma`; always connected (squares of the quotient
    /// are the `sigma`-orbits).
    pub fn quotient(&self, sigma: &Permutation) -> Result<Origami, OrigamiError> {
        let n = self.squares();
        if sigma.len() != n
            || sigma.is_identity()
            || !sigma.commutes_with(&self.h)
            || !sigma.commutes_with(&self.v)
        {
            return Err(OrigamiError::NotAutomorphism);
        }
        let mut orbit_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for i in 0..n {
            if orbit_of[i] != usize::MAX {
                continue;
            }
            let r = reps.len();
            reps.push(i);
            let mut j = i;
            while orbit_of[j] == usize::MAX {
                orbit_of[j] = r;
                j = sigma.apply(j);
            }
        }
        let h = reps.iter().map(|&i| orbit_of[self.h.apply(i)]).collect();
        let v = reps.iter().map(|&i| orbit_of[self.v.apply(i)]).collect();
        let o = Origami {
            h: Permutation { img: h },
            v: Permutation { img: v },
        };
        debug_assert!(o.is_connected());
        Ok(o)
    }

}

impl Serialize for Origami {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        OrigamiWire {
            squares: self.squares(),
            h: self.h.to_one_indexed(),
            v: self.v.to_one_indexed(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Origami {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = OrigamiWire::deserialize(deserializer)?;
        if wire.h.len() != wire.squares || wire.v.len() != wire.squares {
            return Err(serde::de::Error::custom(format!(
                "squares = {} but h has {} and v has {} entries",
                wire.squares,
                wire.h.len(),
                wire.v.len()
            )));
        }
        make_origami(&wire.h, &wire.v).map_err(serde::de::Error::custom)
    }
}

/// A cyclic-cover origami with its deck bookkeeping.
///
/// Squares are `W_j = j` and `B_j = N + j` for `j = 0..N-1` (1-indexed
/// externally), the two pillow faces lifted to the `N` sheets. The deck
/// generator maps `(color, j) -> (color, j+1)`; it conjugates both
/// permutations to their inverses (it is a half-turn, not a translation),
/// while its square is a translation automorphism.
#[derive(Debug, Clone)]
pub struct CyclicCover {
    /// The square-tiled surface.
    pub origami: Origami,
    /// The deck generator as a square permutation.
    pub deck: Permutation,
    /// The deck-derived involution of the quotient construction, when the
    /// tuple has the symmetry making it a translation automorphism
    /// (e.g. all of `M_N(N-1,1,N-1,1)`); quotienting by it yields `S(N)`.
    pub symmetry: Option<Permutation>,
}

/// Builds the square-tiled cyclic cover of an abelian-case tuple
/// (`N` even, all `a_i` odd) as a `2N`-square origami.
///
/// The pillow is two unit squares with corners `z_1..z_4` at top-left,
/// bottom-left, top-right, bottom-right; crossing the pillow edges
/// changes sheet by `g_left = 0`, `g_top = a_1`, `g_bottom = -a_2`,
/// `g_right = a_1 + a_3` (mod `N`), and odd sheets are drawn half-turned.
pub fn cyclic_cover(p: &CoverParams) -> Result<CyclicCover, OrigamiError> {
    if !p.is_abelian_square() {
        return Err(OrigamiError::NotAbelianCase(p.to_string()));
    }
    let n = p.n() as usize;
    let a = p.a().map(|x| x as usize);
    let g_top = a[0] % n;
    let g_bot = (n - a[1] % n) % n;
    let g_right = (a[0] + a[2]) % n;
    let w = |j: usize| j % n;
    let b = |j: usize| n + j % n;
    let mut h = vec![0; 2 * n];
    let mut v = vec![0; 2 * n];
    for j in 0..n {
        if j % 2 == 0 {
            h[w(j)] = b(j + g_right);
            h[b(j)] = w(j);
            v[w(j)] = b(j + g_top);
            v[b(j)] = w(j + n - g_top);
        } else {
            h[w(j)] = b(j);
            h[b(j)] = w(j + n - g_right);
            v[w(j)] = b(j + g_bot);
            v[b(j)] = w(j + n - g_bot);
        }
    }
    let origami = Origami::new(
        Permutation::from_images(h).expect("cover rows are bijections"),
        Permutation::from_images(v).expect("cover rows are bijections"),
    )
    .expect("gcd(N, a_i) = 1 makes the cover connected");

    let deck = Permutation::from_images(
        (0..2 * n)
            .map(|s| if s < n { (s + 1) % n } else { n + (s + 1 - n) % n })
            .collect(),
    )
    .unwrap();
    debug_assert!(deck
        .compose(&origami.h)
        .compose(&deck.inverse())
        .eq(&origami.h.inverse()));

    // Deck-derived reflections W_j -> W_{c-j}, B_j -> B_{c-2-j} (c odd);
    // the first one in the translation group is the quotient involution.
    let mut symmetry = None;
    for c in (1..n).step_by(2) {
        let img: Vec<usize> = (0..2 * n)
            .map(|s| {
                if s < n {
                    (c + n - s % n) % n
                } else {
                    n + (c + 2 * n - 2 - (s - n)) % n
                }
            })
            .collect();
        let tau = Permutation::from_images(img).unwrap();
        if tau.commutes_with(&origami.h) && tau.commutes_with(&origami.v) {
            symmetry = Some(tau);
            break;
        }
    }

    Ok(CyclicCover {
        origami,
        deck,
        symmetry,
    })
}

/// The cover origami alone; see [`cyclic_cover`].
pub fn cyclic_cover_origami(p: &CoverParams) -> Result<Origami, OrigamiError> {
    Ok(cyclic_cover(p)?.origami)
}

/// Stratum of the cover predicted from the parameters alone: each `i`
/// contributes `gcd(a_i, N)` zeros of degree `N / (2 gcd(a_i, N)) - 1`,
/// dropping degree-0 entries.
pub fn stratum_from_params(p: &CoverParams) -> Result<Stratum, OrigamiError> {
    if !p.is_abelian_square() {
        return Err(OrigamiError::NotAbelianCase(p.to_string()));
    }
    let n = p.n();
    let mut degrees = Vec::new();
    for a in p.a() {
        let g = crate::params::gcd(a, n);
        let d = n / (2 * g) - 1;
        if d > 0 {
            degrees.extend(std::iter::repeat_n(d, g as usize));
        }
    }
    degrees.sort_unstable_by(|x, y| y.cmp(x));
    Ok(Stratum {
        zero_degrees: degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: i64, a: [i64; 4]) -> CoverParams {
        CoverParams::new(n, a).unwrap()
    }

    #[test]
    fn make_origami_validates() {
        assert!(make_origami(&[2, 3, 1], &[3, 2, 1]).is_ok());
        assert!(make_origami(&[1], &[1]).is_ok());
        assert!(matches!(
            make_origami(&[2, 1, 3], &[2, 1, 3]),
            Err(OrigamiError::Disconnected)
        ));
        assert!(matches!(
            make_origami(&[1, 1], &[2, 1]),
            Err(OrigamiError::NotPermutation(..))
        ));
        assert!(matches!(
            make_origami(&[2, 1], &[1]),
            Err(OrigamiError::LengthMismatch(2, 1))
        ));
        assert!(matches!(
            make_origami(&[0, 1], &[2, 1]),
            Err(OrigamiError::NotPermutation(..))
        ));
    }

    #[test]
    fn stairs_permutations() {
        let s = stairs(3);
        assert_eq!(s.h().to_one_indexed(), vec![2, 3, 1]);
        assert_eq!(s.v().to_one_indexed(), vec![3, 2, 1]);
        let s = stairs(4);
        assert_eq!(s.h().to_one_indexed(), vec![2, 3, 4, 1]);
        assert_eq!(s.v().to_one_indexed(), vec![4, 3, 2, 1]);
        assert_eq!(stairs(1).squares(), 1);
    }

    #[test]
    fn stratum_and_genus_of_stairs() {
        assert_eq!(stairs(3).stratum().zero_degrees, vec![2]);
        assert_eq!(stairs(3).genus(), 2);
        assert_eq!(stairs(4).stratum().zero_degrees, vec![1, 1]);
        assert_eq!(stairs(4).genus(), 2);
        assert_eq!(stairs(5).genus(), 3);
        let torus = make_origami(&[1], &[1]).unwrap();
        assert!(torus.stratum().zero_degrees.is_empty());
        assert_eq!(torus.genus(), 1);
    }

    #[test]
    fn isomorphism_by_relabeling() {
        let s = stairs(3);
        let rho = Permutation::from_one_indexed(&[2, 3, 1]).unwrap();
        let h2 = rho.compose(s.h()).compose(&rho.inverse());
        let v2 = rho.compose(s.v()).compose(&rho.inverse());
        let conj = Origami::new(h2, v2).unwrap();
        assert!(s.is_isomorphic_to(&conj));
        assert!(!s.is_isomorphic_to(&stairs(4)));
    }

    #[test]
    fn automorphism_groups() {
        let auts = stairs(4).automorphisms();
        let imgs: Vec<Vec<usize>> = auts.iter().map(|p| p.to_one_indexed()).collect();
        assert_eq!(auts.len(), 2);
        assert!(imgs.contains(&vec![1, 2, 3, 4]));
        assert!(imgs.contains(&vec![3, 4, 1, 2]));

        assert_eq!(stairs(3).automorphisms().len(), 1);
        let torus = make_origami(&[1], &[1]).unwrap();
        assert_eq!(torus.automorphisms().len(), 1);
    }

    #[test]
    fn quotient_of_stairs() {
        let s4 = stairs(4);
        let sigma = Permutation::from_one_indexed(&[3, 4, 1, 2]).unwrap();
        let q = s4.quotient(&sigma).unwrap();
        assert!(q.is_isomorphic_to(&stairs(2)));

        let s8 = stairs(8);
        let sigma = Permutation::from_one_indexed(&[5, 6, 7, 8, 1, 2, 3, 4]).unwrap();
        assert!(s8.quotient(&sigma).unwrap().is_isomorphic_to(&stairs(4)));

        // not an automorphism
        let bad = Permutation::from_one_indexed(&[2, 1, 3, 4]).unwrap();
        assert!(matches!(
            s4.quotient(&bad),
            Err(OrigamiError::NotAutomorphism)
        ));
        // identity is rejected
        let id = Permutation::identity(4);
        assert!(matches!(
            s4.quotient(&id),
            Err(OrigamiError::NotAutomorphism)
        ));
    }

    #[test]
    fn cover_of_m4_3131() {
        let cc = cyclic_cover(&params(4, [3, 1, 3, 1])).unwrap();
        assert_eq!(cc.origami.squares(), 8);
        assert_eq!(cc.origami.genus(), 3);
        assert_eq!(cc.origami.stratum().zero_degrees, vec![1, 1, 1, 1]);
        let tau = cc.symmetry.expect("symmetric tuple has the involution");
        let q = cc.origami.quotient(&tau).unwrap();
        assert!(q.is_isomorphic_to(&stairs(4)));
    }

    #[test]
    fn cover_examples() {
        let o = cyclic_cover_origami(&params(6, [5, 1, 3, 3])).unwrap();
        assert_eq!(o.squares(), 12);
        assert_eq!(o.genus(), 3);
        assert_eq!(o.stratum().zero_degrees, vec![2, 2]);

        let o = cyclic_cover_origami(&params(2, [1, 1, 1, 1])).unwrap();
        assert_eq!(o.squares(), 4);
        assert_eq!(o.genus(), 1);
        assert!(o.stratum().zero_degrees.is_empty());

        assert!(matches!(
            cyclic_cover(&params(3, [1, 1, 2, 2])),
            Err(OrigamiError::NotAbelianCase(_))
        ));
    }

    #[test]
    fn deck_structure() {
        let cc = cyclic_cover(&params(6, [5, 1, 3, 3])).unwrap();
        let o = &cc.origami;
        let d = &cc.deck;
        // deck conjugates both permutations to their inverses
        assert_eq!(
            d.compose(o.h()).compose(&d.inverse()),
            o.h().inverse()
        );
        assert_eq!(
            d.compose(o.v()).compose(&d.inverse()),
            o.v().inverse()
        );
        // and its square is a translation automorphism
        let d2 = d.compose(d);
        assert!(d2.commutes_with(o.h()) && d2.commutes_with(o.v()));
    }

    #[test]
    fn stratum_from_params_examples() {
        let s = stratum_from_params(&params(6, [5, 1, 3, 3])).unwrap();
        assert_eq!(s.zero_degrees, vec![2, 2]);
        let s = stratum_from_params(&params(4, [1, 1, 1, 1])).unwrap();
        assert_eq!(s.zero_degrees, vec![1, 1, 1, 1]);
        let s = stratum_from_params(&params(2, [1, 1, 1, 1])).unwrap();
        assert!(s.zero_degrees.is_empty());
        assert!(stratum_from_params(&params(3, [1, 1, 2, 2])).is_err());
    }

    #[test]
    fn wire_json_round_trip() {
        let s = stairs(3);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"squares":3,"h":[2,3,1],"v":[3,2,1]}"#);
        let back: Origami = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);

        let bad: Result<Origami, _> =
            serde_json::from_str(r#"{"squares":3,"h":[2,1,3],"v":[2,1,3]}"#);
        assert!(bad.is_err());
        let bad: Result<Origami, _> =
            serde_json::from_str(r#"{"squares":2,"h":[2,3,1],"v":[3,2,1]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn stratum_display() {
        assert_eq!(stairs(4).stratum().to_string(), "H(1,1)");
    }
}
