//! One instance, three protection budgets: as protected links get cheaper
//! relative to plain ones, the optimal design moves from all-non-protected
//! Harary redundancy, to a protected high-criticality core, to a fully
//! protected spanning tree.
//!
//! Run with: cargo run --example design_three_regimes

use num_rational::Ratio;
use resistnet::designer::{design, thresholds, DesignParams};

fn main() {
    let (n1, n2, k1, k2) = (20, 5, 5, 9);
    let instance = DesignParams::new(n1, n2, k1, k2, Ratio::new(1, 1), Ratio::new(1, 1)).unwrap();
    let th = thresholds(&instance);
    println!("instance: n1={n1} n2={n2} k1={k1} k2={k2}");
    println!(
        "switch points: T1 = {} (~{:.2}), T2 = {} (~{:.2})\n",
        th.t1,
        ratio_to_f64(th.t1),
        th.t2.unwrap(),
        ratio_to_f64(th.t2.unwrap()),
    );

    for ratio in [3i64, 5, 7] {
        let params =
            DesignParams::new(n1, n2, k1, k2, Ratio::new(ratio, 1), Ratio::new(1, 1)).unwrap();
        let result = design(&params).unwrap();
        println!(
            "cP/cNP = {ratio}: strategy {:<6} protected {:>2}, non-protected {:>2}, cost {} x cNP, provably optimal: {}",
            result.strategy.as_str(),
            result.p(),
            result.m(),
            result.cost,
            result.optimal_claimed,
        );
    }
}

fn ratio_to_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
