//! Frozen values from the dense-grid oracle in `golden_oracle.rs`.

/// `L((3,3,3), (4,4,8−√32))`, attained at −1/1.
pub const DIST_MODULAR_TO_44MINUS: f64 = 0.392030751902368;
/// `L((4,4,8−√32), (3,3,3))`, attained at 1/1.
pub const DIST_44MINUS_TO_MODULAR: f64 = 0.510367603462038;
/// `Ψ` of the curve 0/1 at `(4,4,8−√32)` with base `(3,3,3)`.
pub const HORO_HORIZONTAL_AT_44MINUS: f64 = 0.422394449881169;
