use super::metric::lipschitz_distance;
use super::point::TracePoint;
use crate::error::Result;
use crate::horo::AsymmetricSpace;

/// Teichmüller space with the Lipschitz distance at a fixed search depth.
#[derive(Clone, Debug)]
pub struct TorusSpace {
    base: TracePoint,
    depth: u32,
}

impl TorusSpace {
    pub fn new(base: TracePoint, depth: u32) -> Result<Self> {
        super::grid::check_depth(depth)?;
        Ok(Self { base, depth })
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }
}

impl AsymmetricSpace for TorusSpace {
    type Point = TracePoint;

    fn distance(&self, x: &TracePoint, y: &TracePoint) -> Result<f64> {
        Ok(lipschitz_distance(x, y, self.depth)?.value)
    }

    fn base(&self) -> &TracePoint {
        &self.base
    }

    fn tolerance(&self) -> f64 {
        1e-8
    }
}
