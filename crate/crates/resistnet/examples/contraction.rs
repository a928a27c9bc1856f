//! Contracting protected links into supernodes: connectivity arguments only
//! ever need the quotient graph, whose block counts feed the lower bound.
//!
//! Run with: cargo run --example contraction

use resistnet::graph::{contract, LinkKind, TwoLayerNetwork};

fn main() {
    // Five nodes; protected pairs (1,2) and (3,4) collapse into supernodes.
    let net = TwoLayerNetwork::from_edges(
        3,
        2,
        [
            (1, 2, LinkKind::Protected),
            (3, 4, LinkKind::Protected),
            (5, 1, LinkKind::NonProtected),
            (1, 3, LinkKind::NonProtected),
        ],
    )
    .unwrap();

    let contracted = contract(&net);
    println!("blocks:");
    for (i, block) in contracted.supernodes().iter().enumerate() {
        let members: Vec<u32> = block.iter().map(|id| id.0).collect();
        println!("  block {i}: {members:?}");
    }
    println!("quotient links between blocks: {:?}", contracted.quotient_edges());
    println!(
        "pure type-1 blocks: {}, pure type-2: {}, mixed: {}",
        contracted.nu1(),
        contracted.nu2(),
        contracted.nu0()
    );
    println!(
        "block count {} >= n - p = {}",
        contracted.block_count(),
        net.n() - net.protected_count()
    );

    println!("\nDOT rendering of the original network:\n{}", net.to_dot());
}
