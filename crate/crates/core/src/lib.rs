//! Exact-arithmetic toolkit for the finite mathematics behind torus-symmetry
//! obstructions on fundamental groups of positively curved manifolds.
//!
//! The crate is organised by subsystem:
//!
//!  - [`groups`]: the metacyclic groups `Γ(a,b,c)`, their `C_d` families and
//!    the periodicity arithmetic of their integral cohomology.
//!  - [`linear_actions`]: exact monomial rotation matrices over rational
//!    angles, the free representations of `Γ(a,b,c) ∈ C_p` on spheres and the
//!    commuting torus actions.
//!  - [`steenrod`]: the mod-p Steenrod algebra (odd p) with Adem-relation
//!    normalisation and its action on the polynomial model `F_p[x]`.
//!  - [`coding_bounds`]: Griesmer-bound inequalities and the threshold checks
//!    built from them, all decided without floating point.
//!  - [`obstruction_engine`]: theorem statements encoded as exact predicates
//!    and assembled into a constraint report on `π₁`.
//!
//! Every decision path uses integer or rational arithmetic. Floating point only
//! appears in test oracles.

pub mod arith;
pub mod coding_bounds;
pub mod groups;
pub mod linear_actions;
pub mod obstruction_engine;
pub mod steenrod;

/// Default cap on group orders for exhaustive element enumeration.
pub const DEFAULT_MAX_GROUP_ORDER: u64 = 1_000_000;

/// Environment variable overriding [`DEFAULT_MAX_GROUP_ORDER`].
pub const MAX_GROUP_ORDER_ENV: &str = "OBSTRUCT_MAX_GROUP_ORDER";

/// Enumeration cap, read from `OBSTRUCT_MAX_GROUP_ORDER` when set.
pub fn max_group_order_from_env() -> u64 {
    std::env::var(MAX_GROUP_ORDER_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_GROUP_ORDER)
}
