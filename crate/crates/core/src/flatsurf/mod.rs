//! The staircase prototype surface and exact flat-geometry computations:
//! cylinder decompositions, involution checks, intersection matrices and the
//! linear identities tying horizontal and vertical cylinder data together.

mod geometry;
mod involution;
mod prototype;
mod surface;
mod trace;

pub use geometry::{
    enumerate_twists, moduli_commensurability, regularity_check, solve_geometry,
    verify_period_identities, GeometryRejection, IntersectionMatrix, MatrixError, SolvedGeometry,
};
pub use involution::{find_involution, InvolutionReport};
pub use prototype::{
    build_prototype, decagon_surface, extract_prototype, PrototypeError, PrototypeParams,
};
pub use surface::{Direction, EdgeRef, Point, Polygon, Surface, SurfaceError};
pub use trace::{
    cylinder_decomposition, intersection_matrix, ChordSeg, CircleArc, Connection, CylinderData,
    CylinderDecomposition, TraceError,
};

use alloc::vec::Vec;

/// Default step budget for separatrix tracing.
pub const DEFAULT_TRACE_BUDGET: usize = 1_000_000;

/// Everything validate checks about a surface, in one report.
#[derive(Clone, Debug)]
pub struct SurfaceReport {
    pub genus: u64,
    pub zero_orders: Vec<u64>,
    pub horizontal_cylinders: Option<usize>,
    pub involution: Option<InvolutionReport>,
    pub area_matches_decomposition: Option<bool>,
}

impl SurfaceReport {
    /// The checks a valid two-zero staircase surface of genus `g` must pass.
    pub fn passes_for_genus(&self, g: u64) -> bool {
        self.genus == g
            && self.zero_orders == alloc::vec![g - 1, g - 1]
            && self.horizontal_cylinders == Some(g as usize)
            && self
                .involution
                .as_ref()
                .map(|i| i.exists && i.fixed_points == 2 * g + 2 && i.zeros_swapped)
                .unwrap_or(false)
            && self.area_matches_decomposition == Some(true)
    }
}

/// Computes genus, zero orders, the horizontal cylinder count, and the
/// hyperelliptic involution data. Failures to decompose are reported as
/// absent fields rather than errors.
pub fn validate_surface(s: &Surface, budget: usize) -> SurfaceReport {
    let genus = s.genus();
    let zero_orders = s.zero_orders();
    match cylinder_decomposition(s, Direction::Horizontal, budget) {
        Err(_) => SurfaceReport {
            genus,
            zero_orders,
            horizontal_cylinders: None,
            involution: None,
            area_matches_decomposition: None,
        },
        Ok(dec) => {
            let area_ok = dec.total_area() == s.area();
            let inv = find_involution(s, &dec);
            SurfaceReport {
                genus,
                zero_orders,
                horizontal_cylinders: Some(dec.cylinders.len()),
                involution: Some(inv),
                area_matches_decomposition: Some(area_ok),
            }
        }
    }
}
