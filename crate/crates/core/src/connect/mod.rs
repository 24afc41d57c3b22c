//! Cup products and the connecting map of `0 → M → Λ → Λ/M → 0`.

mod connecting;
mod cup;
mod les;
mod triangular;
mod trivial;

pub use connecting::{
    bidegree_blocks, boundary_pairings, column_boundaries, connecting_via_cup, connecting_via_snake,
    identity_cocycle, include, lift, project, push_coefficients, BidegreeBlocks, Block,
};
pub use cup::{cup, Pairing};
pub use les::{assemble_les, require_exact, LesReport, LesRow};
pub use triangular::{
    embed_factor, four_corner_ext, triangular_delta_cup, triangular_les, vanishing_lemmas, DeltaCupRow, TriangularReport,
    VanishingReport,
};
pub use trivial::{
    base_cochain, check_nullhomotopy, cyclic_delta_p0, delta10_bilinear, epsilon, nullhomotopy_delta0q,
    spot_part, Delta10Report,
};
