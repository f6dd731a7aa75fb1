//! Exact computation of bubbling trees for degenerating families of
//! polarized K3 surfaces and local ADE degenerations.
//!
//! The input to the pipeline is a *period curve*: a polynomial map
//! `ζ: Δ → 𝔥 ⊗ ℂ` into the complexified Cartan space of an ADE root
//! system, written in the simple-root basis with Gaussian-rational
//! coefficients. From it the library computes
//!
//! * the **period bubbling tree**: the rooted tree of leading-term
//!   projective classes of `ζ`, refined through perpendicular
//!   sub-root systems ([`pbt`]),
//! * the ALE instanton label of every node (ambient ADE type,
//!   residual singularities, scale exponent),
//! * for `A_k` families, the **branch collision tree** built from
//!   orders of vanishing of branch differences, together with an
//!   exact equivalence check between the two constructions ([`ak`]),
//! * the **rescaled family** whose central fiber is the minimal
//!   bubble ([`pbt::odaka_rescale`]),
//! * the global lattice side: the K3 lattice `E₈(−1)² ⊕ U³`, polarized
//!   sublattices, and localization of a 22-dimensional period curve to
//!   an embedded Cartan sublattice ([`k3`]).
//!
//! Everything is exact: scalars are Gaussian rationals, polynomials are
//! univariate over them, lattices are integral, and every derived
//! quantity (orders of vanishing, scale exponents, tree shapes) is
//! computed without floating point.
//!
//! ```
//! use bubbletree::exact::Poly;
//! use bubbletree::rootsys::{AdeType, RootSystem};
//! use bubbletree::pbt::{FamilyInput, build_pbt, validate_family};
//!
//! let system = RootSystem::new(AdeType::a(3)).unwrap();
//! let zeta = ["t^2+1/2*t", "t^2+t", "t^2+1/2*t"]
//!     .iter()
//!     .map(|s| s.parse::<Poly>().unwrap())
//!     .collect();
//! let family = validate_family(FamilyInput::new(system, zeta).unwrap()).unwrap();
//! let tree = build_pbt(&family);
//!
//! assert_eq!(tree.root().order(), 1);
//! assert_eq!(tree.root().children().len(), 2);
//! ```

pub mod ak;
pub mod exact;
pub mod guide;
pub mod k3;
mod matrix;
pub mod pbt;
pub mod render;
pub mod rootsys;
pub mod suite;

pub use exact::{GaussianRational, Poly, Rational};
pub use rootsys::{AdeType, Family, RootSet, RootSystem, SubRootSystem};
