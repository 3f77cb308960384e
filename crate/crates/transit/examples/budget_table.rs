//! Shortest paths when you may discount a few edges along the way.
//!
//! The budget-aware Dijkstra settles (vertex, remaining budget) pairs in
//! cost order and answers, for every vertex, the cheapest route that
//! discounts at most b of its edges. This example prints the resulting
//! table for a six-vertex network, replays the first iterations of the
//! search, and reconstructs the optimal route.
//!
//! Run with: cargo run --example budget_table

use transit::budget_dijkstra::{budget_dijkstra_traced, reconstruct};
use transit::rational::{fmt_rat, Cost};
use transit::samples;

fn main() {
    let net = samples::six_vertex_network();
    let graph = net.graph();
    let source = graph.vertex("s").expect("the sample has a vertex s");
    let target = graph.vertex("t").expect("the sample has a vertex t");

    println!("network edges (id: endpoints, weight):");
    for (id, edge) in graph.edges().iter().enumerate() {
        println!("  {id}: {} - {}, weight {}", graph.name(edge.u), graph.name(edge.v), fmt_rat(&edge.w));
    }
    println!("discount factor {}, budget {} edges", fmt_rat(net.alpha()), net.beta());

    let (table, trace) = budget_dijkstra_traced(&net, source).expect("the instance is well formed");

    println!();
    println!("first three settled (vertex, budget) pairs:");
    for record in trace.iterations.iter().take(3) {
        println!(
            "  settle {}:{} at distance {} ({} relaxations)",
            graph.name(record.pivot.vertex),
            record.pivot.budget,
            fmt_rat(&record.pivot_dist),
            record.updates.len(),
        );
    }
    println!("  ... {} iterations in total", trace.iterations.len());

    println!();
    println!("distance from s, by discounts spent (columns b = 0..={}):", net.beta());
    for v in 0..graph.vertex_count() {
        let row: Vec<String> = (0..=net.beta())
            .map(|b| match table.dist(v, b) {
                Cost::Finite(d) => fmt_rat(&d),
                Cost::Infinite => "inf".into(),
            })
            .collect();
        println!("  {:>2}: {}", graph.name(v), row.join(", "));
    }

    let (path, discounted) = reconstruct(&table, target, net.beta()).expect("t is reachable");
    println!();
    println!("optimal route to t with both discounts spent:");
    let mut here = source;
    for eid in &path {
        let edge = &graph.edges()[*eid];
        let next = edge.other(here);
        let note = if discounted.contains(eid) { " (discounted)" } else { "" };
        println!("  {} -> {} at weight {}{}", graph.name(here), graph.name(next), fmt_rat(&edge.w), note);
        here = next;
    }
    let mapping = table.budget_mapping(target);
    println!(
        "walking costs {}, one discount {}, two discounts {}",
        fmt_rat(mapping.get(0)),
        fmt_rat(mapping.get(1)),
        fmt_rat(mapping.get(2)),
    );
}
