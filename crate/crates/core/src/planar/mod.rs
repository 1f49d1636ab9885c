//! Temperley-Lieb diagrams, Jones-Wenzl projectors and planar networks.

pub mod fused;
pub mod matching;
pub mod morphism;
pub mod network;
pub mod program;
pub mod projector;

pub use fused::{drum, good_matching, push_column, to_sweep_frame, GoodBasis, GoodVector};
pub use matching::Matching;
pub use morphism::TLMorphism;
pub use network::{
    apply_cable_crossing, cabled_crossing, clasp, clasp_expansion, curl, fused_twist, fusion_element, power,
    rung_element, theta_program, vertex_morphism, TrivalentVertex, VertexOrientation,
};
pub use program::{evaluate, CrossingSign, Slice, SliceProgram};
pub use projector::{jones_wenzl, jones_wenzl_classic, set_cache_dir};
