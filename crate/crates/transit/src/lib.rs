//! Exact optimization of budget-constrained public-transport investment.
//!
//! Two models are supported, sharing a discount factor `alpha` in `[0, 1)`,
//! an integer budget `beta`, a multiset of agents, and two welfare
//! objectives (egalitarian = worst agent, utilitarian = sum over agents):
//!
//! * **Line model** ([`PtpInstance`]): candidate bus-stop positions on the
//!   rational line. Opening a set `S` of at most `beta` stops lets an agent
//!   `(s, t)` either walk (cost `t - s`) or walk to a boarding stop, ride at
//!   rate `alpha` per unit distance, and walk from an alighting stop.
//! * **Network model** ([`NtpInstance`]): a connected, undirected, weighted
//!   graph. Discounting a set `S` of at most `beta` edges rescales each
//!   selected weight by `alpha`; an agent pays the shortest-path distance
//!   under the rescaled weights.
//!
//! All arithmetic is exact (`num::BigRational`); evaluating the same
//! selection twice yields identical rationals, and hardness-gadget
//! thresholds like 1/10 vs 1/5 are compared without rounding error.
//!
//! The crate provides, per model:
//!
//! * exact cost evaluation and decision checks ([`model`]),
//! * a single-source shortest-path algorithm over (vertex, budget) routing
//!   pairs that answers all budgets in one run ([`budget_dijkstra`]),
//! * exact one- and two-agent network solvers built on budget mappings and
//!   min-plus merges ([`multi_agent`]),
//! * greedy heuristics together with an adversarial instance family on
//!   which they provably fail ([`greedy`]),
//! * exact line-model solvers: a utilitarian dynamic program and an
//!   egalitarian branch-and-bound ([`ptp`]),
//! * exhaustive oracles that ground-truth every other solver ([`oracles`]),
//! * hardness reductions as executable instance generators and the
//!   railway-discount model conversion ([`reductions`]),
//! * JSON/CSV instance and result I/O ([`io`]) and a CLI front end
//!   ([`cli`]).
//!
//! # Example
//!
//! ```
//! use transit::{samples, Objective};
//!
//! let line = samples::four_agent_line();
//! // Walking costs: (6, 4, 7/2, 4).
//! let nothing = line.evaluate(&[]);
//! assert_eq!(nothing.max, transit::rational::rat(6, 1));
//!
//! let best_eg = transit::ptp::ptp_egalitarian_exact(&line);
//! assert_eq!(*best_eg.cost(Objective::Egalitarian), transit::rational::rat(7, 2));
//! ```

pub mod budget_dijkstra;
pub mod cli;
pub mod error;
pub mod greedy;
pub mod io;
pub mod model;
pub mod multi_agent;
pub mod oracles;
pub mod ptp;
pub mod rational;
pub mod reductions;
pub mod samples;

pub use error::{Error, Result};
pub use model::{Graph, NtpInstance, Objective, PtpInstance, Selection, Solution};
pub use rational::{Cost, Rat};
