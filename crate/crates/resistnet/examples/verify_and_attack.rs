//! Certify a design, then sabotage it: deleting one non-protected link from
//! a tight construction always breaks resistance, and the verifier hands
//! back a concrete minimum attack demonstrating the failure.
//!
//! Run with: cargo run --example verify_and_attack

use resistnet::designer::build_s_n2m1;
use resistnet::graph::{LinkKind, TwoLayerNetwork};
use resistnet::verifier::{is_resistant_bruteforce, is_resistant_mincut, worst_attack};

fn main() {
    let (n1, n2, k1, k2) = (20, 5, 5, 9);
    let net = build_s_n2m1(n1, n2, k1).unwrap();
    println!(
        "built p=n2-1 design: {} protected, {} non-protected links",
        net.protected_count(),
        net.non_protected_count()
    );

    let report = is_resistant_mincut(&net, k1, k2).unwrap();
    println!("verifier (min-cut): resistant = {}", report.resistant);

    // Remove one non-protected link; the layer degree drops below k1+1.
    let victim = net.non_protected_edges().next().unwrap();
    let mut damaged = TwoLayerNetwork::new(net.n1(), net.n2()).unwrap();
    for edge in net.edges() {
        if (edge.u, edge.v) != victim {
            damaged.add_edge(edge.u, edge.v, edge.kind).unwrap();
        }
    }
    println!("\ndeleted non-protected link ({}, {})", victim.0, victim.1);
    let report = is_resistant_mincut(&damaged, k1, k2).unwrap();
    println!(
        "verifier (min-cut): resistant = {}, condition (a) = {}, condition (b) = {}",
        report.resistant, report.condition_a_ok, report.condition_b_ok
    );
    let witness = report.witness_attack.unwrap();
    println!("witness attack of size {}: {:?}", witness.len(), pairs(&witness));
    assert!(!damaged.is_connected(&witness, None).unwrap());
    println!("replayed the witness: network splits");

    // The exhaustive attacker refuses oversized instances...
    let err = is_resistant_bruteforce(&damaged, k1, k2, None).unwrap_err();
    println!("brute force on {} links: {err}", damaged.non_protected_count());

    // ...but agrees wherever it can enumerate.
    let small = build_s_n2m1(6, 2, 1).unwrap();
    let mincut = is_resistant_mincut(&small, 1, 3).unwrap();
    let brute = is_resistant_bruteforce(&small, 1, 3, None).unwrap();
    println!(
        "small design ({} links): min-cut says {}, brute force says {}",
        small.non_protected_count(),
        mincut.resistant,
        brute.resistant
    );

    // A triangle of plain links survives any single removal but not two.
    let triangle = TwoLayerNetwork::from_edges(
        2,
        1,
        [
            (1, 2, LinkKind::NonProtected),
            (2, 3, LinkKind::NonProtected),
            (1, 3, LinkKind::NonProtected),
        ],
    )
    .unwrap();
    println!("\ntriangle: worst attack within budget 1: {:?}", worst_attack(&triangle, 1, None).unwrap());
    let attack = worst_attack(&triangle, 2, None).unwrap().unwrap();
    println!("triangle: worst attack within budget 2: {:?}", pairs(&attack));
}

fn pairs(edges: &[(resistnet::NodeId, resistnet::NodeId)]) -> Vec<(u32, u32)> {
    edges.iter().map(|&(u, v)| (u.0, v.0)).collect()
}
