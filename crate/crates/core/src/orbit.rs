//! The SL(2,Z) action on origamis and orbit enumeration.
//!
//! The shear `T` and quarter-turn `S` act on a permutation pair by
//! `T . (h, v) = (h, v h^-1)` and `S . (h, v) = (v, h^-1)`; then
//! `S^2 . (h, v) = (h^-1, v^-1)` is the half-turn. Orbits are enumerated
//! modulo isomorphism (simultaneous conjugation) by breadth-first closure
//! with canonical-form deduplication, then sorted so identical orbits
//! serialize identically regardless of the seed.

use serde::Serialize;
use thiserror::Error;

use crate::homology::homological_dim_surface;
use crate::origami::Origami;

/// Default node cap for orbit enumeration.
pub const DEFAULT_ORBIT_CAP: usize = 100_000;

/// Orbit enumeration errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    /// The BFS exceeded the configured node cap.
    #[error("orbit exceeds the cap of {0} nodes")]
    OrbitTooLarge(usize),
    /// Unrecognized export format.
    #[error("unknown export format {0:?} (expected \"dot\" or \"json\")")]
    UnknownFormat(String),
}

/// One SL(2,Z) generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Generator {
    /// The horizontal shear.
    T,
    /// The quarter turn.
    S,
}

/// Action of `T`: `(h, v) -> (h, v h^-1)`.
pub fn act_t(o: &Origami) -> Origami {
    let h = o.h().clone();
    let v = o.v().compose(&o.h().inverse());
    Origami::new(h, v).expect("affine images stay connected")
}

/// Action of `S`: `(h, v) -> (v, h^-1)`.
pub fn act_s(o: &Origami) -> Origami {
    let h = o.v().clone();
    let v = o.h().inverse();
    Origami::new(h, v).expect("affine images stay connected")
}

/// An SL(2,Z)-orbit modulo isomorphism.
///
/// Nodes are canonical representatives in lexicographic order of their
/// canonical forms; every node carries one outgoing `T` and one outgoing
/// `S` edge (possibly a self-loop).
#[derive(Debug, Clone)]
pub struct OrbitGraph {
    /// Canonically labeled, lexicographically sorted orbit members.
    pub nodes: Vec<Origami>,
    /// Edges `(from, to, generator)`, two per node.
    pub edges: Vec<(usize, usize, Generator)>,
}

/// Breadth-first closure of `o` under `T` and `S`, deduplicated by
/// canonical form, capped at `cap` nodes.
pub fn orbit(o: &Origami, cap: usize) -> Result<OrbitGraph, OrbitError> {
    type Key = (Vec<usize>, Vec<usize>);
    let mut seen: std::collections::BTreeSet<Key> = std::collections::BTreeSet::new();
    let mut queue: Vec<Origami> = Vec::new();
    let start = o.canonical();
    seen.insert(start.canonical_form());
    queue.push(start);
    let mut qi = 0;
    while qi < queue.len() {
        let cur = queue[qi].clone();
        qi += 1;
        for img in [act_t(&cur), act_s(&cur)] {
            let canon = img.canonical();
            if seen.insert(canon.canonical_form()) {
                if queue.len() >= cap {
                    return Err(OrbitError::OrbitTooLarge(cap));
                }
                queue.push(canon);
            }
        }
    }
    // canonical node order: lexicographic in the canonical form
    let mut keyed: Vec<(Key, Origami)> = queue
        .into_iter()
        .map(|n| (n.canonical_form(), n))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let index_of = |keyed: &[(Key, Origami)], key: &Key| {
        keyed
            .binary_search_by(|(k, _)| k.cmp(key))
            .expect("closure contains all images")
    };
    let mut edges = Vec::with_capacity(2 * keyed.len());
    for i in 0..keyed.len() {
        let node = &keyed[i].1;
        let t_key = act_t(node).canonical_form();
        let s_key = act_s(node).canonical_form();
        edges.push((i, index_of(&keyed, &t_key), Generator::T));
        edges.push((i, index_of(&keyed, &s_key), Generator::S));
    }
    let nodes = keyed.into_iter().map(|(_, n)| n).collect();
    Ok(OrbitGraph { nodes, edges })
}

/// Homological dimension of the Teichmuller curve: the maximum of
/// `d(S)` over the orbit of `o`.
pub fn homological_dim_curve(o: &Origami, cap: usize) -> Result<usize, OrbitError> {
    let graph = orbit(o, cap)?;
    Ok(graph
        .nodes
        .iter()
        .map(homological_dim_surface)
        .max()
        .expect("orbit is nonempty"))
}

#[derive(Serialize)]
struct OrbitWire<'a> {
    nodes: &'a [Origami],
    edges: Vec<(usize, usize, Generator)>,
}

/// Serializes an orbit graph as DOT (`"dot"`) or JSON (`"json"`).
pub fn export_orbit(g: &OrbitGraph, format: &str) -> Result<String, OrbitError> {
    match format {
        "dot" => {
            let mut out = String::from("digraph orbit {\n");
            for (from, to, gen) in &g.edges {
                out.push_str(&format!("  n{from} -> n{to} [label=\"{gen:?}\"];\n"));
            }
            out.push_str("}\n");
            Ok(out)
        }
        "json" => {
            let wire = OrbitWire {
                nodes: &g.nodes,
                edges: g.edges.clone(),
            };
            Ok(serde_json::to_string(&wire).expect("orbit graphs serialize"))
        }
        other => Err(OrbitError::UnknownFormat(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::origami::{cyclic_cover_origami, make_origami, stairs};
    use crate::params::CoverParams;

    fn torus() -> Origami {
        make_origami(&[1], &[1]).unwrap()
    }

    #[test]
    fn torus_is_a_fixed_point() {
        let t = torus();
        assert_eq!(act_t(&t), t);
        assert_eq!(act_s(&t), t);
        let g = orbit(&t, 10).unwrap();
        assert_eq!(g.nodes.len(), 1);
        assert_eq!(g.edges, vec![(0, 0, Generator::T), (0, 0, Generator::S)]);
    }

    #[test]
    fn t_power_width_fixes_one_cylinder_surfaces() {
        for n in 2..7 {
            let s = stairs(n);
            let mut o = s.clone();
            for _ in 0..n {
                o = act_t(&o);
            }
            assert_eq!(o, s, "T^{n} is the identity on stairs({n})");
        }
    }

    #[test]
    fn s_fourth_power_is_identity_up_to_iso() {
        for o in [stairs(3), stairs(5), make_origami(&[2, 1, 3], &[3, 1, 2]).unwrap()] {
            let o4 = act_s(&act_s(&act_s(&act_s(&o))));
            assert!(o4.is_isomorphic_to(&o));
        }
    }

    #[test]
    fn s_squared_inverts_both_permutations() {
        let o = stairs(5);
        let o2 = act_s(&act_s(&o));
        assert_eq!(o2.h(), &o.h().inverse());
        assert_eq!(o2.v(), &o.v().inverse());
    }

    #[test]
    fn generators_preserve_strata() {
        for o in [stairs(4), make_origami(&[2, 3, 1, 4], &[4, 3, 2, 1]).unwrap()] {
            assert_eq!(act_t(&o).stratum(), o.stratum());
            assert_eq!(act_s(&o).stratum(), o.stratum());
        }
    }

    #[test]
    fn orbit_sizes_of_the_reference_surfaces() {
        assert_eq!(orbit(&stairs(4), 1000).unwrap().nodes.len(), 6);
        assert_eq!(orbit(&stairs(3), 1000).unwrap().nodes.len(), 3);
        let cover = cyclic_cover_origami(&CoverParams::new(4, [3, 1, 3, 1]).unwrap()).unwrap();
        assert_eq!(orbit(&cover, 1000).unwrap().nodes.len(), 3);
    }

    #[test]
    fn orbit_respects_the_cap() {
        assert_eq!(
            orbit(&stairs(4), 3).unwrap_err(),
            OrbitError::OrbitTooLarge(3)
        );
    }

    #[test]
    fn homological_dim_curve_of_covers() {
        let cover = cyclic_cover_origami(&CoverParams::new(4, [3, 1, 3, 1]).unwrap()).unwrap();
        assert_eq!(homological_dim_curve(&cover, 1000).unwrap(), 3);
        assert_eq!(homological_dim_curve(&torus(), 10).unwrap(), 1);
    }

    #[test]
    fn export_formats() {
        let g = orbit(&torus(), 10).unwrap();
        let dot = export_orbit(&g, "dot").unwrap();
        assert!(dot.starts_with("digraph orbit {"));
        assert!(dot.contains("n0 -> n0 [label=\"T\"]"));
        assert!(dot.contains("n0 -> n0 [label=\"S\"]"));
        let json = export_orbit(&g, "json").unwrap();
        assert!(json.contains("\"nodes\""));
        assert!(matches!(
            export_orbit(&g, "xml"),
            Err(OrbitError::UnknownFormat(_))
        ));
    }
}
