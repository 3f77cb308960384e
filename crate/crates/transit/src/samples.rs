//! Small hand-checked instances reused across tests, docs, and examples.
//!
//! Every value these constructors bake in has been verified by exhaustive
//! search, so they double as fixtures for the exact solvers.

use crate::model::{Graph, NtpInstance, PtpInstance};
use crate::rational::{rat, rat_int, Rat};
use crate::reductions::{SetCoverInstance, VertexCoverInstance};
use num::Zero;

/// Seven candidate stops at the integers `0..=6`, four agents
/// `(0,6), (1/2,9/2), (1,9/2), (1,5)`, discount `1/2`, budget `2`.
///
/// Walking costs are `(6, 4, 7/2, 4)`. Opening `{1,5}` gives agent costs
/// `(4, 3, 5/2, 2)`; opening `{0,5}` gives `7/2` for every agent, which
/// is the unique egalitarian optimum within the budget.
pub fn four_agent_line() -> PtpInstance {
    let stops = (0..=6).map(rat_int).collect();
    let agents = vec![
        (rat_int(0), rat_int(6)),
        (rat(1, 2), rat(9, 2)),
        (rat_int(1), rat(9, 2)),
        (rat_int(1), rat_int(5)),
    ];
    PtpInstance::new(stops, agents, rat(1, 2), 2).expect("valid sample")
}

/// Two agents `(0,1)` and `(0,2)` on stops `{0, 1, 3/2, 2}` with a free
/// ride (`alpha = 0`) and budget `2`.
///
/// The egalitarian optimum is `1/2`, achieved only by `{0, 3/2}`; with
/// the half stop removed the best any pair achieves is `1`.
pub fn two_interval_line() -> PtpInstance {
    let stops = vec![rat_int(0), rat_int(1), rat(3, 2), rat_int(2)];
    let agents = vec![(rat_int(0), rat_int(1)), (rat_int(0), rat_int(2))];
    PtpInstance::new(stops, agents, Rat::zero(), 2).expect("valid sample")
}

/// Six vertices `s, v1, v2, v3, v4, t`, one agent from `s` to `t`,
/// discount `1/2`, budget `2`.
///
/// ```text
///        1        3
///   s ------ v1 ------ v3
///    \        |
///   5 \      2|
///      \      |     2          7
///       `--- v2 ------ v4   v2 ------ t
/// ```
///
/// The undiscounted `s`-`t` distance is `10`; discounting `(v1,v2)` and
/// `(v2,t)` brings it down to `11/2`.
pub fn six_vertex_network() -> NtpInstance {
    let names = ["s", "v1", "v2", "v3", "v4", "t"].map(String::from).to_vec();
    let edges = vec![
        (0, 1, rat_int(1)),
        (0, 2, rat_int(5)),
        (1, 2, rat_int(2)),
        (1, 3, rat_int(3)),
        (2, 4, rat_int(2)),
        (2, 5, rat_int(7)),
    ];
    let graph = Graph::new(names, edges).expect("valid sample");
    NtpInstance::new(graph, vec![(0, 5)], rat(1, 2), 2).expect("valid sample")
}

/// A path `s - a - b - t` of three unit edges, one agent from `s` to `t`,
/// free ride (`alpha = 0`), budget `1`. Discounting any one edge gives
/// cost `2`.
pub fn unit_path4_alpha0() -> NtpInstance {
    let names = ["s", "a", "b", "t"].map(String::from).to_vec();
    let edges = vec![(0, 1, rat_int(1)), (1, 2, rat_int(1)), (2, 3, rat_int(1))];
    let graph = Graph::new(names, edges).expect("valid sample");
    NtpInstance::new(graph, vec![(0, 3)], Rat::zero(), 1).expect("valid sample")
}

/// Four items `a, b, c, d` covered by the chain `{a,b}, {b,c}, {c,d}`,
/// with slack `rho = 2`. The minimum cover has two sets (`{a,b}` and
/// `{c,d}`), so the cover decision at size `2` is a yes-instance.
pub fn chain_cover() -> SetCoverInstance {
    SetCoverInstance::new(
        ["a", "b", "c", "d"].map(String::from).to_vec(),
        vec![
            vec!["a".into(), "b".into()],
            vec!["b".into(), "c".into()],
            vec!["c".into(), "d".into()],
        ],
        2,
    )
    .expect("valid sample")
}

/// The triangle graph with slack `rho = 2`. Any two vertices cover all
/// three edges; no single vertex does.
pub fn triangle_vertex_cover() -> VertexCoverInstance {
    VertexCoverInstance::new(
        ["a", "b", "c"].map(String::from).to_vec(),
        vec![("a".into(), "b".into()), ("a".into(), "c".into()), ("b".into(), "c".into())],
        2,
    )
    .expect("valid sample")
}
