//! Thurston's Lipschitz metric on the Teichmüller space of the once-punctured
//! torus, horofunctions of measured laminations, and detour costs.
//!
//! - [`horo`]: horofunction machinery for any asymmetric metric space, with a
//!   weighted-digraph test space.
//! - [`torus`]: trace coordinates, curve lengths, the Lipschitz distance and
//!   the mapping class group.
//! - [`lamination`]: exact closed forms for detour costs on formal sums of
//!   ergodic laminations.
//! - [`cli`]: the command implementations behind the `lipschitz-horo` binary.

pub mod cli;
pub mod error;
pub mod horo;
pub mod lamination;
pub mod torus;

pub use error::{Error, Result};
