//! Command implementations behind the `lipschitz-horo` binary. Each returns a
//! serializable report; rendering and exit codes live in the binary.

mod commands;
mod config;

pub use commands::{
    cmd_converge, cmd_detour, cmd_detour_along, cmd_dist, cmd_graph_demo, cmd_horo, cmd_maxset,
    cmd_mcg, cmd_mcg_suite, random_mapping_class, random_point, small_slopes, torus_closed_detour,
    ConvergeReport, DetourAlongReport, DetourClosedReport, DistReport, GraphDemoReport, HoroReport,
    MaxsetReport, McgCase, McgReport, Report, SequenceSpec, DEMO_GRAPH,
};
pub use config::{parse_point, read_json_arg, Format, RunConfig};
