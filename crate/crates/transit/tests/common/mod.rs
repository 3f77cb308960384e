//! Seeded random instance generators shared by the integration suites.

#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use transit::model::{Graph, NtpInstance, PtpInstance};
use transit::rational::{rat, rat_int, Rat};
use transit::reductions::{SetCoverInstance, VertexCoverInstance};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected graph with 2..=max_v vertices, at most max_e edges, and
/// integer weights in 1..=10 (weight 1 exactly when `unit`).
pub fn random_connected_graph(rng: &mut ChaCha8Rng, max_v: usize, max_e: usize, unit: bool) -> Graph {
    let n = rng.gen_range(2..=max_v);
    let names: Vec<String> = (0..n).map(|i| format!("n{i}")).collect();
    let weight = |rng: &mut ChaCha8Rng| if unit { rat_int(1) } else { rat_int(rng.gen_range(1..=10)) };
    let mut present = std::collections::HashSet::new();
    let mut edges: Vec<(usize, usize, Rat)> = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        present.insert((u, v));
        let w = weight(rng);
        edges.push((u, v, w));
    }
    for _ in 0..rng.gen_range(0..=max_e.saturating_sub(n - 1)) {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || !present.insert((u.min(v), u.max(v))) {
            continue;
        }
        let w = weight(rng);
        edges.push((u, v, w));
    }
    Graph::new(names, edges).unwrap()
}

/// Network instance over a fresh random graph with `agents` random
/// origin/destination pairs (sources and targets may coincide).
pub fn random_ntp(
    rng: &mut ChaCha8Rng,
    max_v: usize,
    max_e: usize,
    agents: usize,
    alpha: Rat,
    beta: usize,
) -> NtpInstance {
    let graph = random_connected_graph(rng, max_v, max_e, false);
    let n = graph.vertex_count();
    let agent_list = (0..agents).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    NtpInstance::new(graph, agent_list, alpha, beta).unwrap()
}

/// Unit-weight network instance whose agents are distinct unordered
/// vertex pairs, so induced demand multiplicities are all 0 or 1.
pub fn random_unit_ntp_distinct_agents(
    rng: &mut ChaCha8Rng,
    max_v: usize,
    max_e: usize,
    max_agents: usize,
    alpha: Rat,
    beta: usize,
) -> NtpInstance {
    let graph = random_connected_graph(rng, max_v, max_e, true);
    let n = graph.vertex_count();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.gen_range(0..=i));
    }
    pairs.truncate(rng.gen_range(1..=max_agents.min(pairs.len())));
    NtpInstance::new(graph, pairs, alpha, beta).unwrap()
}

/// Line instance with at most `max_stops` half-integer stops and
/// `max_agents` agents whose terminals are half-integers in the same
/// range (terminals need not be stops).
pub fn random_ptp(
    rng: &mut ChaCha8Rng,
    max_stops: usize,
    max_agents: usize,
    alpha: Rat,
    beta: usize,
) -> PtpInstance {
    let half = |rng: &mut ChaCha8Rng| rat(rng.gen_range(0..=24), 2);
    let mut stops: Vec<Rat> = (0..rng.gen_range(1..=max_stops)).map(|_| half(rng)).collect();
    stops.sort();
    stops.dedup();
    let agents = (0..rng.gen_range(1..=max_agents))
        .map(|_| {
            let a = half(rng);
            let b = half(rng);
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    PtpInstance::new(stops, agents, alpha, beta).unwrap()
}

/// Set cover instance where every item is covered by at least one
/// subset, sized for exhaustive verification.
pub fn random_setcover(rng: &mut ChaCha8Rng, max_items: usize, max_subsets: usize, max_rho: usize) -> SetCoverInstance {
    let items: Vec<String> = (0..rng.gen_range(1..=max_items)).map(|i| format!("u{i}")).collect();
    let count = rng.gen_range(1..=max_subsets);
    let mut subsets: Vec<Vec<String>> = (0..count)
        .map(|_| items.iter().filter(|_| rng.gen_bool(0.45)).cloned().collect())
        .collect();
    let order: std::collections::HashMap<&String, usize> =
        items.iter().enumerate().map(|(k, u)| (u, k)).collect();
    for item in &items {
        if !subsets.iter().any(|s| s.contains(item)) {
            let j = rng.gen_range(0..count);
            subsets[j].push(item.clone());
            // Keep each subset's items in universe order.
            subsets[j].sort_by_key(|u| order[u]);
        }
    }
    let rho = rng.gen_range(1..=max_rho.min(count));
    SetCoverInstance::new(items, subsets, rho).unwrap()
}

/// Vertex cover instance on 2..=max_v vertices with a duplicate-free
/// random edge set.
pub fn random_vertexcover(rng: &mut ChaCha8Rng, max_v: usize) -> VertexCoverInstance {
    let n = rng.gen_range(2..=max_v);
    let vertices: Vec<String> = (0..n).map(|i| format!("w{i}")).collect();
    let mut edges: Vec<(String, String)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((vertices[u].clone(), vertices[v].clone()));
            }
        }
    }
    let rho = rng.gen_range(0..=n);
    VertexCoverInstance::new(vertices, edges, rho).unwrap()
}

/// A subset of the instance's edge ids, each included with probability 1/2.
pub fn random_edge_selection(rng: &mut ChaCha8Rng, edge_count: usize) -> Vec<usize> {
    (0..edge_count).filter(|_| rng.gen_bool(0.5)).collect()
}

/// Number of subsets of an `l`-element set with at most `beta` members.
pub fn subset_space(l: usize, beta: usize) -> u128 {
    let mut total: u128 = 0;
    let mut choose: u128 = 1;
    for k in 0..=beta.min(l) {
        if k > 0 {
            choose = choose * (l - k + 1) as u128 / k as u128;
        }
        total += choose;
    }
    total
}
