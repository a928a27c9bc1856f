//! Minimum-link graphs of prescribed edge connectivity: for every target
//! degree d the construction spends exactly ceil(d*n/2) links and survives
//! removal of any d-1 of them.
//!
//! Run with: cargo run --example harary_gallery

use resistnet::graph::{LinkKind, MinCut, NodeId, TwoLayerNetwork};
use resistnet::harary::{harary_edges, HararySpec};

fn main() {
    for (n, degree) in [(5u32, 3u32), (7, 4), (4, 2), (9, 4), (10, 5), (12, 3)] {
        let sequence: Vec<NodeId> = (1..=n).map(NodeId).collect();
        let edges = harary_edges(&HararySpec::new(sequence, degree).unwrap());

        let net = TwoLayerNetwork::from_edges(
            n - 1,
            1,
            edges.iter().map(|&(u, v)| (u.0, v.0, LinkKind::NonProtected)),
        )
        .unwrap();
        let mut connectivity = u32::MAX;
        for t in 2..=n {
            if let MinCut::Finite { value, .. } =
                net.min_cut_non_protected(NodeId(1), NodeId(t)).unwrap()
            {
                connectivity = connectivity.min(value);
            }
        }
        println!(
            "n = {n:>2}, degree target {degree}: {:>2} links (bound {:>2}), edge connectivity {connectivity}",
            edges.len(),
            (degree * n).div_ceil(2),
        );
    }

    // The construction is position-relative: the same ring pattern can be
    // laid over any node sequence, here an interleaved one.
    let sequence = vec![1, 6, 2, 7, 3, 8, 4, 5].into_iter().map(NodeId).collect::<Vec<_>>();
    let edges = harary_edges(&HararySpec::new(sequence, 2).unwrap());
    println!("\ndegree-2 ring over an interleaved ordering:");
    for (u, v) in edges {
        print!(" ({u},{v})");
    }
    println!();
}
