//! A family of networks on which both greedy heuristics overpay.
//!
//! Each of beta + 1 commuters has a direct route whose first edge is
//! slightly more expensive than 1, plus a detour through a shared
//! motorway. Greedy investment, whether it adds edges one by one or
//! deletes them from a full build-out, keeps shaving the slightly
//! expensive direct edges and never assembles the motorway. The optimal
//! plan ignores the commuters' own streets entirely.
//!
//! Run with: cargo run --example greedy_trap

use transit::greedy::{greedy_down, greedy_up_traced, make_adversarial, AdversarialParams};
use transit::model::{Objective, Selection};
use transit::rational::{fmt_rat, one_half, rat, rat_int};

fn edges_of(selection: &Selection) -> &[usize] {
    match selection {
        Selection::Edges(edges) => edges,
        Selection::Stops(_) => unreachable!("network solvers select edges"),
    }
}

fn main() {
    let params = AdversarialParams::new(one_half(), 2, vec![rat(1, 10), rat(2, 10), rat(3, 10)])
        .expect("valid perturbations");
    let family = make_adversarial(&params).expect("the family is well formed");
    let net = &family.instance;

    println!(
        "{} vertices, {} edges, {} agents, discount {}, budget {}",
        net.graph().vertex_count(),
        net.graph().edge_count(),
        net.agents().len(),
        fmt_rat(net.alpha()),
        net.beta(),
    );

    let (up, trajectory) = greedy_up_traced(net, Objective::Egalitarian);
    println!();
    println!("greedy addition chases the direct routes:");
    let steps: Vec<String> = trajectory.iter().map(fmt_rat).collect();
    println!("  worst-agent cost after each step: {}", steps.join(" -> "));
    println!(
        "  final selection: edges {:?}, worst agent pays {}",
        edges_of(&up.selection),
        fmt_rat(&up.max),
    );

    let down = greedy_down(net, Objective::Egalitarian);
    println!(
        "greedy deletion lands in the same trap: edges {:?}, worst agent pays {}",
        edges_of(&down.selection),
        fmt_rat(&down.max),
    );

    let motorway = net.evaluate(&family.motorway);
    println!();
    println!(
        "discounting the motorway instead (edges {:?}) costs every agent at most {}",
        family.motorway,
        fmt_rat(&motorway.max),
    );

    println!();
    println!("at budget 2 the trap is still mild; the comparison flips as the budget grows");
    println!("(canonical perturbations, alpha = 1/2):");
    println!("  beta  greedy  motorway");
    for beta in 2..=5usize {
        let params = AdversarialParams::canonical(one_half(), beta).expect("canonical parameters");
        let family = make_adversarial(&params).expect("well formed");
        let (greedy, _) = greedy_up_traced(&family.instance, Objective::Egalitarian);
        let motorway = family.instance.evaluate(&family.motorway);
        println!("  {beta:<5} {:<7} {}", fmt_rat(&greedy.max), fmt_rat(&motorway.max));
    }
    println!("greedy scales like beta + 1 while the motorway stays below 3 + alpha * beta;");
    println!(
        "at beta = 5 that bound is {}.",
        fmt_rat(&(rat_int(3) + one_half() * rat_int(5))),
    );
}
