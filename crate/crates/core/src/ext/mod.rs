//! Ext and Tor from free resolutions, and the bar-type complexes whose
//! homology computes Tor.

mod bar;
mod module;
mod resolution;

pub use bar::{prop_tor2_complex, prop_tor_complex, BarShape};
pub use module::{enveloping, enveloping_algebra, to_bimodule, LeftModule};
pub use resolution::{
    ext_bimodule_dims, ext_dims, is_one_sided_projective, is_projective, tor_dims, FreeResolution, OneSided,
    ResolutionStep,
};
