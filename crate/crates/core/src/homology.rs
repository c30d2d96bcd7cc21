//! Cylinder decompositions and first homology of an origami.
//!
//! The square complex of an origami on `M` squares has `M` faces, `2M`
//! edges (each square contributes its bottom edge `h_s` and left edge
//! `v_s`; tops and rights are identified through `pi_v` and `pi_h`) and
//! one 0-cell per vertex cycle. Boundaries:
//!
//! ```text
//! d2(s) = h_s + v_{pi_h(s)} - h_{pi_v(s)} - v_s
//! d1(h_s) = vx(pi_h(s)) - vx(s),   d1(v_s) = vx(pi_v(s)) - vx(s)
//! ```
//!
//! Maximal horizontal cylinders are stacks of `pi_h`-cycles glued rigidly
//! (`pi_v pi_h = pi_h pi_v` along every non-top row); each cylinder's
//! waist class is the sum of the bottom-edge basis vectors of one row.
//! The homological dimension `d(S)` is the rank of the waist span inside
//! `H_1 = ker d1 / im d2`, computed by exact rational row reduction.

use crate::origami::Origami;
use crate::rational::{rat_int, Rational};

/// A maximal horizontal cylinder: `height` rows of `width` squares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cylinder {
    /// Rows bottom to top; each row is a `pi_h`-cycle.
    pub rows: Vec<Vec<usize>>,
    /// Common length of the rows.
    pub width: usize,
    /// Number of rows.
    pub height: usize,
}

/// An integer 1-chain over the `2M` edge basis: entries `0..M` are the
/// coefficients of the bottom edges `h_s`, entries `M..2M` of the left
/// edges `v_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyClass {
    /// Edge coefficients, length `2M`.
    pub coordinates: Vec<i64>,
}

/// Decomposes the squares into maximal horizontal cylinders.
///
/// Rows `R` and `pi_v(R)` merge exactly when `pi_v` restricted to `R`
/// commutes with `pi_h` (the gluing carries the cyclic order over, so no
/// singularity lies on the interface).
pub fn cylinders(o: &Origami) -> Vec<Cylinder> {
    let rows = o.h().cycles();
    let mut row_of = vec![0usize; o.squares()];
    for (i, r) in rows.iter().enumerate() {
        for &x in r {
            row_of[x] = i;
        }
    }
    // rigid(i): the gluing above row i has no singularity
    let rigid: Vec<bool> = rows
        .iter()
        .map(|r| {
            r.iter()
                .all(|&x| o.v().apply(o.h().apply(x)) == o.h().apply(o.v().apply(x)))
        })
        .collect();
    let v_inv = o.v().inverse();
    let mut visited = vec![false; rows.len()];
    let mut out = Vec::new();
    for start in 0..rows.len() {
        if visited[start] {
            continue;
        }
        let mut chain = vec![start];
        visited[start] = true;
        // walk down across rigid gluings
        let mut cur = start;
        let mut wrapped = false;
        loop {
            let below = row_of[v_inv.apply(rows[cur][0])];
            if !rigid[below] {
                break;
            }
            if below == start {
                wrapped = true;
                break;
            }
            if visited[below] {
                break;
            }
            chain.push(below);
            visited[below] = true;
            cur = below;
        }
        chain.reverse();
        // then up, unless the stack already wrapped around the torus
        if !wrapped {
            let mut cur = start;
            while rigid[cur] {
                let above = row_of[o.v().apply(rows[cur][0])];
                if visited[above] {
                    break;
                }
                chain.push(above);
                visited[above] = true;
                cur = above;
            }
        }
        out.push(Cylinder {
            width: rows[chain[0]].len(),
            height: chain.len(),
            rows: chain.iter().map(|&i| rows[i].clone()).collect(),
        });
    }
    out
}

/// One waist class per cylinder: the sum of the bottom edges along the
/// cylinder's bottom row. Each is a 1-cycle (the sum telescopes).
pub fn waist_classes(o: &Origami) -> Vec<HomologyClass> {
    let m = o.squares();
    cylinders(o)
        .iter()
        .map(|c| {
            let mut coords = vec![0i64; 2 * m];
            for &s in &c.rows[0] {
                coords[s] += 1;
            }
            HomologyClass { coordinates: coords }
        })
        .collect()
}

/// Rows of the boundary map `d2` in the edge basis.
fn d2_rows(o: &Origami) -> Vec<Vec<i64>> {
    let m = o.squares();
    (0..m)
        .map(|s| {
            let mut row = vec![0i64; 2 * m];
            row[s] += 1;
            row[m + o.h().apply(s)] += 1;
            row[o.v().apply(s)] -= 1;
            row[m + s] -= 1;
            row
        })
        .collect()
}

/// Rows of the boundary map `d1` (edges to vertex cycles).
fn d1_rows(o: &Origami) -> Vec<Vec<i64>> {
    let m = o.squares();
    let cycles = o.vertex_permutation().cycles();
    let mut vx = vec![0usize; m];
    for (i, c) in cycles.iter().enumerate() {
        for &x in c {
            vx[x] = i;
        }
    }
    let mut rows = Vec::with_capacity(2 * m);
    for s in 0..m {
        let mut row = vec![0i64; cycles.len()];
        row[vx[o.h().apply(s)]] += 1;
        row[vx[s]] -= 1;
        rows.push(row);
    }
    for s in 0..m {
        let mut row = vec![0i64; cycles.len()];
        row[vx[o.v().apply(s)]] += 1;
        row[vx[s]] -= 1;
        rows.push(row);
    }
    rows
}

/// Exact rank of an integer matrix over the rationals.
fn rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    let zero = rat_int(0);
    let mut mat: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| rat_int(x)).collect())
        .collect();
    let cols = mat[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..mat.len()).find(|&i| mat[i][c] != zero) else {
            continue;
        };
        mat.swap(r, piv);
        let inv = rat_int(1) / mat[r][c].clone();
        for x in mat[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = mat[r].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i != r && row[c] != zero {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        r += 1;
        if r == mat.len() {
            break;
        }
    }
    r
}

/// Rank of `H_1` from the chain complex: `2M - rank d1 - rank d2`.
/// Equals `2 g` for every connected origami.
pub fn h1_rank(o: &Origami) -> usize {
    2 * o.squares() - rank(&d1_rows(o)) - rank(&d2_rows(o))
}

/// Rank over the rationals of the waist-class span inside
/// `H_1 = ker d1 / im d2`.
pub fn homological_dim_surface(o: &Origami) -> usize {
    let d2 = d2_rows(o);
    let mut with_waists = d2.clone();
    with_waists.extend(
        waist_classes(o)
            .into_iter()
            .map(|c| c.coordinates),
    );
    rank(&with_waists) - rank(&d2)
}

/// Algebraic intersection number of two 1-cycles in the edge basis,
/// via the diagonal-shift crossing form: a vertical edge `v_t` crosses
/// the bottom edge of `pi_v(t)`, a horizontal edge `h_u` crosses the left
/// edge of `pi_h(u)`.
pub fn intersection(o: &Origami, a: &HomologyClass, b: &HomologyClass) -> i64 {
    let m = o.squares();
    let mut total = 0i64;
    for t in 0..m {
        // <h_{pi_v(t)}, v_t> = +1
        total += a.coordinates[o.v().apply(t)] * b.coordinates[m + t];
        // <v_{pi_h(u)}, h_u> = -1
        total -= a.coordinates[m + o.h().apply(t)] * b.coordinates[t];
    }
    total
}

/// Result of the isotropy check on the waist span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionReport {
    /// `d(S)`: rank of the waist span in `H_1`.
    pub dim_span: usize,
    /// Genus of the surface.
    pub genus: u64,
    /// Whether all pairwise intersection numbers of waist classes vanish.
    pub isotropic: bool,
}

/// Verifies that the waist span is isotropic for the intersection
/// pairing, which bounds `d(S) <= g`.
pub fn intersection_rank_check(o: &Origami) -> IntersectionReport {
    let waists = waist_classes(o);
    let isotropic = waists
        .iter()
        .enumerate()
        .all(|(i, a)| waists[i..].iter().all(|b| intersection(o, a, b) == 0));
    IntersectionReport {
        dim_span: homological_dim_surface(o),
        genus: o.genus(),
        isotropic,
    }
}
