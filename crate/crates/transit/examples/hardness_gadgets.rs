//! Why these investment problems are hard: covering problems in disguise.
//!
//! A set cover question becomes a network investment instance whose
//! egalitarian optimum hits a known threshold exactly when a small cover
//! exists, and a vertex cover question becomes a stop placement instance
//! with the same flavor. The gaps between yes and no answers are what
//! rule out efficient exact algorithms in general.
//!
//! Run with: cargo run --example hardness_gadgets

use transit::model::Objective;
use transit::oracles::{oracle_ntp, oracle_ptp};
use transit::rational::{fmt_rat, one_half};
use transit::reductions::{setcover_to_ntp, vertexcover_to_ptp, SetCoverInstance};
use transit::samples;

fn main() {
    let cover = samples::chain_cover();
    println!(
        "set cover: universe of {} items, {} subsets, is a cover of size {} possible? {}",
        cover.universe().len(),
        cover.subsets().len(),
        cover.rho(),
        if cover.has_cover() { "yes" } else { "no" },
    );

    let reduction = setcover_to_ntp(&cover, &one_half()).expect("valid reduction");
    let report = oracle_ntp(&reduction.ntp, Objective::Egalitarian).expect("small enough to enumerate");
    println!(
        "  gadget network: egalitarian optimum {}, threshold {} -> cover found",
        fmt_rat(&report.optimum),
        fmt_rat(&reduction.kappa_eg),
    );

    // Tighten the allowance to one subset and the optimum jumps past the
    // threshold.
    let impossible = SetCoverInstance::new(
        cover.universe().to_vec(),
        cover.subsets().to_vec(),
        1,
    )
    .expect("valid instance");
    let reduction = setcover_to_ntp(&impossible, &one_half()).expect("valid reduction");
    let report = oracle_ntp(&reduction.ntp, Objective::Egalitarian).expect("small enough to enumerate");
    println!(
        "  with rho = 1 (no single subset covers the chain): optimum {} > threshold {}",
        fmt_rat(&report.optimum),
        fmt_rat(&reduction.kappa_eg),
    );

    println!();
    let triangle = samples::triangle_vertex_cover();
    println!(
        "vertex cover: the triangle, is a cover of size {} possible? {}",
        triangle.rho(),
        if triangle.has_cover() { "yes" } else { "no" },
    );
    let reduction = vertexcover_to_ptp(&triangle).expect("valid reduction");
    let report = oracle_ptp(&reduction.ptp, Objective::Egalitarian).expect("small enough to enumerate");
    println!(
        "  gadget line: {} candidate stops, budget {}, egalitarian optimum {} <= threshold {}",
        reduction.ptp.stops().len(),
        reduction.ptp.beta(),
        fmt_rat(&report.optimum),
        fmt_rat(&reduction.kappa),
    );
    println!(
        "  a no-instance would have been forced past {} instead",
        fmt_rat(&(transit::rational::rat_int(2) * &reduction.kappa)),
    );
}
