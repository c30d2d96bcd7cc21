//! Exact arithmetic for the Lyapunov spectrum of the Hodge bundle over
//! arithmetic Teichmuller curves of square-tiled cyclic covers
//! `M_N(a1,a2,a3,a4)`, together with a combinatorial square-tiled-surface
//! engine (origamis as permutation pairs) that cross-validates the
//! closed-form results.
//!
//! Everything is exact: spectra, orbifold degrees and cusp orders are
//! reduced rationals, homology ranks are computed by exact row reduction,
//! and no floating point appears anywhere.
//!
//! The crate is organized around the objects it computes with:
//!
//! * [`params`] -- validated cover parameters `(N, a1..a4)`, genus,
//!   the abelian-square test and the odd-N double cover.
//! * [`spectra`] -- fractional-part profiles `t_i(k)`, eigenspace
//!   dimensions, orbifold degrees `d(k)`, cusp orders, per-`k` blocks and
//!   the full nonnegative Lyapunov spectrum as an exact multiset.
//! * [`origami`] -- square-tiled surfaces as pairs of permutations:
//!   constructors (stairs, cyclic covers), strata, isomorphism,
//!   translation automorphisms and quotients.
//! * [`homology`] -- horizontal cylinder decompositions, waist-curve
//!   classes in the square chain complex and the homological dimension.
//! * [`orbit`] -- the SL(2,Z) action on origamis and orbit enumeration
//!   modulo isomorphism.
//!
//! All values are immutable after construction and safe to share across
//! threads; batch evaluation over parameter tuples is embarrassingly
//! parallel.

pub mod homology;
pub mod orbit;
pub mod origami;
pub mod params;
pub mod rational;
pub mod spectra;

pub use origami::{Origami, OrigamiError, Permutation, Stratum};
pub use params::{CoverParams, ParamError};
pub use rational::Rational;
pub use spectra::{SpectraError, SpectrumMultiset};
